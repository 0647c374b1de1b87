#include "lamptree/mealy.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "lamptree/modular.hpp"

namespace lamptree {

namespace {

bool valid_name(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == ',') return false;
  return true;
}

}  // namespace

MealyMachine::MealyMachine(std::vector<std::string> alphabet, std::vector<std::string> states,
                           std::vector<std::pair<int, int>> transitions)
    : alphabet_(std::move(alphabet)), states_(std::move(states)) {
  if (alphabet_.empty()) fail(errc::invalid_parameter, "empty alphabet");
  if (states_.empty()) fail(errc::invalid_parameter, "empty state set");
  std::unordered_set<std::string> seen;
  for (const auto& s : alphabet_) {
    if (!valid_name(s)) fail(errc::invalid_parameter, "bad symbol name '" + s + "'");
    if (!seen.insert(s).second) fail(errc::invalid_parameter, "duplicate symbol '" + s + "'");
  }
  seen.clear();
  for (const auto& s : states_) {
    if (!valid_name(s)) fail(errc::invalid_parameter, "bad state name '" + s + "'");
    if (!seen.insert(s).second) fail(errc::invalid_parameter, "duplicate state '" + s + "'");
  }
  const std::size_t want = states_.size() * alphabet_.size();
  if (transitions.size() != want)
    fail(errc::invalid_parameter, "transition table must cover every (state, symbol) pair");
  delta_.resize(want);
  lambda_.resize(want);
  for (std::size_t i = 0; i < want; ++i) {
    auto [q2, b] = transitions[i];
    if (q2 < 0 || q2 >= state_count()) fail(errc::invalid_parameter, "transition to unknown state");
    if (b < 0 || b >= alphabet_size()) fail(errc::invalid_parameter, "transition to unknown symbol");
    delta_[i] = q2;
    lambda_[i] = b;
  }
}

int MealyMachine::symbol_index(std::string_view sym) const {
  for (int a = 0; a < alphabet_size(); ++a)
    if (alphabet_[static_cast<std::size_t>(a)] == sym) return a;
  fail(errc::symbol_not_in_alphabet, "symbol '" + std::string(sym) + "' not in alphabet");
}

int MealyMachine::state_index(std::string_view name) const {
  for (int q = 0; q < state_count(); ++q)
    if (states_[static_cast<std::size_t>(q)] == name) return q;
  fail(errc::invalid_parameter, "unknown state '" + std::string(name) + "'");
}

bool MealyMachine::is_invertible() const {
  std::vector<bool> hit(alphabet_.size());
  for (int q = 0; q < state_count(); ++q) {
    std::fill(hit.begin(), hit.end(), false);
    for (int a = 0; a < alphabet_size(); ++a) {
      int b = output(q, a);
      if (hit[static_cast<std::size_t>(b)]) return false;
      hit[static_cast<std::size_t>(b)] = true;
    }
  }
  return true;
}

MealyMachine MealyMachine::inverted() const {
  if (!is_invertible())
    fail(errc::not_invertible, "machine has a state whose output map is not a permutation");
  std::vector<std::pair<int, int>> trans(delta_.size());
  for (int q = 0; q < state_count(); ++q) {
    for (int a = 0; a < alphabet_size(); ++a) {
      int b = output(q, a);
      // The inverse of state q maps b back to a and continues in the inverse
      // of the state the original machine reaches on input a.
      trans[static_cast<std::size_t>(q) * alphabet_.size() + static_cast<std::size_t>(b)] = {
          next_state(q, a), a};
    }
  }
  return MealyMachine(alphabet_, states_, std::move(trans));
}

std::string MealyMachine::to_text() const {
  std::ostringstream os;
  os << "alphabet";
  for (const auto& a : alphabet_) os << ' ' << a;
  os << "\nstates";
  for (const auto& s : states_) os << ' ' << s;
  os << '\n';
  for (int q = 0; q < state_count(); ++q)
    for (int a = 0; a < alphabet_size(); ++a)
      os << "trans " << states_[static_cast<std::size_t>(q)] << ' '
         << alphabet_[static_cast<std::size_t>(a)] << ' '
         << states_[static_cast<std::size_t>(next_state(q, a))] << ' '
         << alphabet_[static_cast<std::size_t>(output(q, a))] << '\n';
  return os.str();
}

std::string MealyMachine::to_dot(const std::string& graph_name) const {
  // One edge per (source, target) pair; labels "in|out" joined with commas,
  // matching the usual way these diagrams are drawn.
  std::ostringstream os;
  os << "digraph " << graph_name << " {\n  rankdir=LR;\n";
  for (const auto& s : states_) os << "  \"" << s << "\";\n";
  for (int q = 0; q < state_count(); ++q) {
    std::map<int, std::string> labels;  // target state -> joined labels
    for (int a = 0; a < alphabet_size(); ++a) {
      std::string lbl =
          alphabet_[static_cast<std::size_t>(a)] + "|" +
          alphabet_[static_cast<std::size_t>(output(q, a))];
      auto [it, fresh] = labels.try_emplace(next_state(q, a), lbl);
      if (!fresh) it->second += "," + lbl;
    }
    for (const auto& [q2, lbl] : labels)
      os << "  \"" << states_[static_cast<std::size_t>(q)] << "\" -> \""
         << states_[static_cast<std::size_t>(q2)] << "\" [label=\"" << lbl << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

MealyMachine MealyMachine::parse(std::string_view text) {
  std::vector<std::string> alphabet, states;
  struct RawTrans {
    std::string q, a, q2, b;
    int line;
  };
  std::vector<RawTrans> raw;
  bool saw_alphabet = false, saw_states = false;

  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;  // blank or comment-only line
    auto complain = [&](const std::string& msg) {
      fail(errc::parse_error, "line " + std::to_string(lineno) + ": " + msg);
    };
    if (head == "alphabet") {
      if (saw_alphabet) complain("repeated alphabet line");
      saw_alphabet = true;
      std::string tok;
      while (ls >> tok) alphabet.push_back(tok);
      if (alphabet.empty()) complain("alphabet line lists no symbols");
    } else if (head == "states") {
      if (saw_states) complain("repeated states line");
      saw_states = true;
      std::string tok;
      while (ls >> tok) states.push_back(tok);
      if (states.empty()) complain("states line lists no states");
    } else if (head == "trans") {
      RawTrans t;
      t.line = lineno;
      if (!(ls >> t.q >> t.a >> t.q2 >> t.b)) complain("trans needs: state sym state' sym'");
      std::string extra;
      if (ls >> extra) complain("trailing token '" + extra + "' on trans line");
      raw.push_back(std::move(t));
    } else {
      complain("unknown directive '" + head + "'");
    }
  }
  if (!saw_alphabet) fail(errc::parse_error, "missing alphabet line");
  if (!saw_states) fail(errc::parse_error, "missing states line");

  auto index_of = [](const std::vector<std::string>& v, const std::string& name) {
    auto it = std::find(v.begin(), v.end(), name);
    return it == v.end() ? -1 : static_cast<int>(it - v.begin());
  };
  const std::size_t asz = alphabet.size();
  std::vector<std::pair<int, int>> trans(states.size() * asz, {-1, -1});
  for (const auto& t : raw) {
    auto complain = [&](const std::string& msg) {
      fail(errc::parse_error, "line " + std::to_string(t.line) + ": " + msg);
    };
    int q = index_of(states, t.q);
    if (q < 0) complain("unknown state '" + t.q + "'");
    int a = index_of(alphabet, t.a);
    if (a < 0) complain("unknown symbol '" + t.a + "'");
    int q2 = index_of(states, t.q2);
    if (q2 < 0) complain("unknown state '" + t.q2 + "'");
    int b = index_of(alphabet, t.b);
    if (b < 0) complain("unknown symbol '" + t.b + "'");
    auto& slot = trans[static_cast<std::size_t>(q) * asz + static_cast<std::size_t>(a)];
    if (slot.first != -1) complain("duplicate transition for (" + t.q + ", " + t.a + ")");
    slot = {q2, b};
  }
  for (std::size_t q = 0; q < states.size(); ++q)
    for (std::size_t a = 0; a < asz; ++a)
      if (trans[q * asz + a].first == -1)
        fail(errc::parse_error,
             "missing transition for (" + states[q] + ", " + alphabet[a] + ")");
  return MealyMachine(std::move(alphabet), std::move(states), std::move(trans));
}

StateWord parse_state_word(const MealyMachine& m, std::string_view text) {
  StateWord w;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string_view tok =
        text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    if (!tok.empty()) {
      int exp = 1;
      if (tok.size() > 2 && tok.substr(tok.size() - 2) == "-1") {
        exp = -1;
        tok.remove_suffix(2);
      }
      w.push_back({m.state_index(tok), exp});
    }
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return w;
}

std::string format_state_word(const MealyMachine& m, const StateWord& w) {
  std::ostringstream os;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) os << ',';
    os << m.states()[static_cast<std::size_t>(w[i].state)];
    if (w[i].exponent < 0) os << "-1";
  }
  return os.str();
}

std::vector<int> parse_input_word(const MealyMachine& m, std::string_view text) {
  std::vector<int> word;
  if (text.find(',') != std::string_view::npos || text.find(' ') != std::string_view::npos) {
    std::string buf(text);
    for (char& c : buf)
      if (c == ',') c = ' ';
    std::istringstream ss(buf);
    std::string tok;
    while (ss >> tok) word.push_back(m.symbol_index(tok));
    return word;
  }
  // Greedy longest-match against the alphabet (covers single-char alphabets
  // and decimal alphabets like 0..11 unambiguously enough for CLI use).
  std::size_t pos = 0;
  while (pos < text.size()) {
    int best = -1;
    std::size_t best_len = 0;
    for (int a = 0; a < m.alphabet_size(); ++a) {
      const std::string& sym = m.alphabet()[static_cast<std::size_t>(a)];
      if (sym.size() > best_len && text.substr(pos, sym.size()) == sym) {
        best = a;
        best_len = sym.size();
      }
    }
    if (best < 0)
      fail(errc::symbol_not_in_alphabet,
           "cannot read a symbol at '..." + std::string(text.substr(pos)) + "'");
    word.push_back(best);
    pos += best_len;
  }
  return word;
}

std::string format_word(const MealyMachine& m, const std::vector<int>& word) {
  bool single_char = true;
  for (const auto& s : m.alphabet())
    if (s.size() != 1) single_char = false;
  std::ostringstream os;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i && !single_char) os << ' ';
    os << m.alphabet()[static_cast<std::size_t>(word[i])];
  }
  return os.str();
}

namespace {

// Shared engine for simulating a composite of machine states (the letters of
// a state word, inverse letters running on the inverted machine).  Composite
// tuples are interned so identity/level checks can memoize on them.
class CompositeSim {
public:
  CompositeSim(const MealyMachine& m, const StateWord& w, std::size_t budget)
      : fwd_(m), budget_(budget), asz_(m.alphabet_size()) {
    bool needs_inverse = false;
    for (const auto& l : w)
      if (l.exponent < 0) needs_inverse = true;
    if (needs_inverse) inv_.emplace(m.inverted());
    for (const auto& l : w) {
      if (l.state < 0 || l.state >= m.state_count())
        fail(errc::invalid_parameter, "state word letter out of range");
      machines_.push_back(l.exponent < 0 ? &*inv_ : &fwd_);
      init_.push_back(static_cast<int16_t>(l.state));
    }
  }

  int alphabet_size() const { return asz_; }
  int root() { return intern(init_); }
  std::size_t tuple_count() const { return tuples_.size(); }

  // Transitions out of tuple id: child tuple ids and output symbols.
  struct Row {
    std::vector<int> child;
    std::vector<int> out;
  };
  const Row& row(int id) {
    if (rows_.size() <= static_cast<std::size_t>(id)) rows_.resize(static_cast<std::size_t>(id) + 1);
    Row& r = rows_[static_cast<std::size_t>(id)];
    if (!r.child.empty()) return r;
    r.child.resize(static_cast<std::size_t>(asz_));
    r.out.resize(static_cast<std::size_t>(asz_));
    std::vector<int16_t> next(tuples_[static_cast<std::size_t>(id)].size());
    for (int a = 0; a < asz_; ++a) {
      const auto& cur = tuples_[static_cast<std::size_t>(id)];
      int sym = a;
      for (std::size_t i = 0; i < cur.size(); ++i) {
        const MealyMachine* mm = machines_[i];
        int q = cur[i];
        next[i] = static_cast<int16_t>(mm->next_state(q, sym));
        sym = mm->output(q, sym);
      }
      r.child[static_cast<std::size_t>(a)] = intern(next);
      r.out[static_cast<std::size_t>(a)] = sym;
    }
    return r;
  }

private:
  int intern(const std::vector<int16_t>& t) {
    auto it = ids_.find(t);
    if (it != ids_.end()) return it->second;
    if (tuples_.size() >= budget_)
      fail(errc::state_budget_exceeded,
           "composite state budget of " + std::to_string(budget_) + " tuples exceeded");
    int id = static_cast<int>(tuples_.size());
    tuples_.push_back(t);
    ids_.emplace(t, id);
    return id;
  }

  struct VecHash {
    std::size_t operator()(const std::vector<int16_t>& v) const {
      std::size_t h = 1469598103934665603ull;
      for (int16_t x : v) {
        h ^= static_cast<std::size_t>(static_cast<uint16_t>(x)) + 0x9e3779b97f4a7c15ull;
        h *= 1099511628211ull;
      }
      return h;
    }
  };

  const MealyMachine& fwd_;
  std::optional<MealyMachine> inv_;
  std::vector<const MealyMachine*> machines_;
  std::vector<int16_t> init_;
  std::size_t budget_;
  int asz_;
  std::vector<std::vector<int16_t>> tuples_;
  std::unordered_map<std::vector<int16_t>, int, VecHash> ids_;
  std::vector<Row> rows_;
};

}  // namespace

std::vector<int> act(const MealyMachine& m, const StateWord& w, const std::vector<int>& word) {
  bool needs_inverse = false;
  for (const auto& l : w)
    if (l.exponent < 0) needs_inverse = true;
  std::optional<MealyMachine> inv;
  if (needs_inverse) inv.emplace(m.inverted());

  std::vector<int> states;
  states.reserve(w.size());
  for (const auto& l : w) states.push_back(l.state);

  std::vector<int> out;
  out.reserve(word.size());
  for (int a : word) {
    if (a < 0 || a >= m.alphabet_size()) fail(errc::symbol_out_of_range, "symbol index out of range");
    int sym = a;
    for (std::size_t i = 0; i < w.size(); ++i) {
      const MealyMachine& mm = w[i].exponent < 0 ? *inv : m;
      int q = states[i];
      int b = mm.output(q, sym);
      states[i] = mm.next_state(q, sym);
      sym = b;
    }
    out.push_back(sym);
  }
  return out;
}

std::vector<std::string> act(const MealyMachine& m, const StateWord& w,
                             const std::vector<std::string>& word) {
  std::vector<int> idx;
  idx.reserve(word.size());
  for (const auto& s : word) idx.push_back(m.symbol_index(s));
  std::vector<int> img = act(m, w, idx);
  std::vector<std::string> out;
  out.reserve(img.size());
  for (int a : img) out.push_back(m.alphabet()[static_cast<std::size_t>(a)]);
  return out;
}

bool word_is_identity(const MealyMachine& m, const StateWord& w, std::size_t budget) {
  if (w.empty()) return true;
  CompositeSim sim(m, w, budget);
  std::vector<int> queue{sim.root()};
  std::unordered_set<int> seen{queue[0]};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto& r = sim.row(queue[head]);
    for (int a = 0; a < sim.alphabet_size(); ++a) {
      if (r.out[static_cast<std::size_t>(a)] != a) return false;
      int c = r.child[static_cast<std::size_t>(a)];
      if (seen.insert(c).second) queue.push_back(c);
    }
  }
  return true;
}

bool word_fixes_level(const MealyMachine& m, const StateWord& w, int level, std::size_t budget) {
  if (level < 0) fail(errc::invalid_parameter, "negative level");
  if (w.empty() || level == 0) return true;
  CompositeSim sim(m, w, budget);
  // verified[id] = deepest level to which the subtree below this tuple is
  // known to be fixed.  DFS with an explicit stack.
  std::unordered_map<int, int> verified;
  struct Frame {
    int id;
    int depth;
    int next_child;
  };
  std::vector<Frame> stack{{sim.root(), level, 0}};
  while (!stack.empty()) {
    Frame& f = stack.back();
    auto it = verified.find(f.id);
    if (f.depth <= 0 || (it != verified.end() && it->second >= f.depth)) {
      stack.pop_back();
      continue;
    }
    const auto& r = sim.row(f.id);
    if (f.next_child == 0) {
      for (int a = 0; a < sim.alphabet_size(); ++a)
        if (r.out[static_cast<std::size_t>(a)] != a) return false;
    }
    if (f.next_child < sim.alphabet_size()) {
      int c = r.child[static_cast<std::size_t>(f.next_child)];
      ++f.next_child;
      stack.push_back({c, f.depth - 1, 0});
      continue;
    }
    auto& v = verified[f.id];
    v = std::max(v, f.depth);
    stack.pop_back();
  }
  return true;
}

MealyMachine direct_product(const MealyMachine& a, const MealyMachine& b,
                            ProductRenaming* renaming) {
  ProductRenaming ren;
  auto rename = [](const std::vector<std::string>& taken, const std::string& name) {
    std::string candidate = name;
    auto used = [&](const std::string& s) {
      return std::find(taken.begin(), taken.end(), s) != taken.end();
    };
    while (used(candidate)) candidate += "_2";
    return candidate;
  };

  std::vector<std::string> alphabet = a.alphabet();
  std::vector<int> b_sym(static_cast<std::size_t>(b.alphabet_size()));
  for (int i = 0; i < b.alphabet_size(); ++i) {
    const std::string& orig = b.alphabet()[static_cast<std::size_t>(i)];
    std::string name = rename(alphabet, orig);
    if (name != orig) ren.symbols.emplace_back(orig, name);
    b_sym[static_cast<std::size_t>(i)] = static_cast<int>(alphabet.size());
    alphabet.push_back(name);
  }

  std::vector<std::string> states = a.states();
  std::vector<int> b_state(static_cast<std::size_t>(b.state_count()));
  for (int i = 0; i < b.state_count(); ++i) {
    const std::string& orig = b.states()[static_cast<std::size_t>(i)];
    std::string name = rename(states, orig);
    if (name != orig) ren.states.emplace_back(orig, name);
    b_state[static_cast<std::size_t>(i)] = static_cast<int>(states.size());
    states.push_back(name);
  }

  const std::size_t asz = alphabet.size();
  std::vector<std::pair<int, int>> trans(states.size() * asz);
  // States of the first factor act as before on its letters, and are inert
  // (identity output, no state change) on the second factor's letters;
  // symmetrically for the second factor.
  for (int q = 0; q < a.state_count(); ++q) {
    for (std::size_t s = 0; s < asz; ++s) trans[static_cast<std::size_t>(q) * asz + s] = {q, static_cast<int>(s)};
    for (int x = 0; x < a.alphabet_size(); ++x)
      trans[static_cast<std::size_t>(q) * asz + static_cast<std::size_t>(x)] = {a.next_state(q, x),
                                                                                a.output(q, x)};
  }
  for (int q = 0; q < b.state_count(); ++q) {
    std::size_t row = static_cast<std::size_t>(b_state[static_cast<std::size_t>(q)]) * asz;
    for (std::size_t s = 0; s < asz; ++s)
      trans[row + s] = {b_state[static_cast<std::size_t>(q)], static_cast<int>(s)};
    for (int x = 0; x < b.alphabet_size(); ++x)
      trans[row + static_cast<std::size_t>(b_sym[static_cast<std::size_t>(x)])] = {
          b_state[static_cast<std::size_t>(b.next_state(q, x))],
          b_sym[static_cast<std::size_t>(b.output(q, x))]};
  }
  if (renaming) *renaming = std::move(ren);
  return MealyMachine(std::move(alphabet), std::move(states), std::move(trans));
}

namespace {

MealyMachine build(std::vector<std::string> alphabet, std::vector<std::string> states,
                   std::vector<std::tuple<const char*, const char*, const char*, const char*>> t) {
  MealyMachine tmp(alphabet, states,
                   std::vector<std::pair<int, int>>(alphabet.size() * states.size(), {0, 0}));
  // Build via the string table for readability of the builders below.
  std::vector<std::pair<int, int>> trans(alphabet.size() * states.size(), {-1, -1});
  for (auto& [q, a, q2, b] : t) {
    std::size_t i = static_cast<std::size_t>(tmp.state_index(q)) * alphabet.size() +
                    static_cast<std::size_t>(tmp.symbol_index(a));
    trans[i] = {tmp.state_index(q2), tmp.symbol_index(b)};
  }
  return MealyMachine(std::move(alphabet), std::move(states), std::move(trans));
}

}  // namespace

MealyMachine adding_machine() {
  return build({"0", "1"}, {"p", "q"},
               {
                   {"p", "1", "p", "0"},  // carry: 1 -> 0, keep adding
                   {"p", "0", "q", "1"},  // absorb the carry: 0 -> 1, done
                   {"q", "0", "q", "0"},
                   {"q", "1", "q", "1"},
               });
}

MealyMachine cayley_machine(long long k) {
  check_modulus(k);
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(k));
  for (long long h = 0; h < k; ++h) names.push_back(std::to_string(h));
  std::vector<std::pair<int, int>> trans(static_cast<std::size_t>(k * k));
  for (long long h = 0; h < k; ++h)
    for (long long x = 0; x < k; ++x) {
      int s = static_cast<int>((h + x) % k);
      trans[static_cast<std::size_t>(h * k + x)] = {s, s};
    }
  return MealyMachine(names, names, std::move(trans));
}

MealyMachine aleshin_machine() {
  return build({"0", "1"}, {"p", "q", "r"},
               {
                   {"p", "1", "q", "0"},
                   {"p", "0", "r", "1"},
                   {"q", "1", "r", "0"},
                   {"q", "0", "q", "1"},
                   {"r", "0", "p", "0"},
                   {"r", "1", "p", "1"},
               });
}

MealyMachine decrement_machine() {
  return build({"0", "1"}, {"p", "q"},
               {
                   {"p", "0", "p", "1"},  // borrow: 0 -> 1, keep subtracting
                   {"p", "1", "q", "0"},  // absorb the borrow: 1 -> 0, done
                   {"q", "0", "q", "0"},
                   {"q", "1", "q", "1"},
               });
}

MealyMachine three_cycle_machine() {
  return build({"2", "3", "4"}, {"r", "s"},
               {
                   {"r", "2", "r", "3"},
                   {"r", "3", "r", "4"},
                   {"r", "4", "s", "2"},
                   {"s", "2", "s", "2"},
                   {"s", "3", "s", "3"},
                   {"s", "4", "s", "4"},
               });
}

}  // namespace lamptree
