#include "lamptree/explorer.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace lamptree {

namespace {

std::size_t words_at_level(int asz, int level) {
  std::size_t n = 1;
  for (int i = 0; i < level; ++i) {
    n *= static_cast<std::size_t>(asz);
    if (n > (1u << 26)) fail(errc::level_too_deep, "level table would be too large");
  }
  return n;
}

std::string word_of_index(const MealyMachine& m, std::size_t idx, int level) {
  bool single_char = true;
  for (const auto& s : m.alphabet())
    if (s.size() != 1) single_char = false;
  std::vector<std::size_t> digits(static_cast<std::size_t>(level));
  for (int i = level - 1; i >= 0; --i) {
    digits[static_cast<std::size_t>(i)] = idx % static_cast<std::size_t>(m.alphabet_size());
    idx /= static_cast<std::size_t>(m.alphabet_size());
  }
  std::string out;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (i && !single_char) out += ',';
    out += m.alphabet()[digits[i]];
  }
  return out;
}

struct TableHash {
  std::size_t operator()(const std::vector<uint32_t>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (uint32_t x : v) {
      h ^= x + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

std::vector<uint32_t> inverse_table(const std::vector<uint32_t>& t) {
  std::vector<uint32_t> inv(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) inv[t[i]] = static_cast<uint32_t>(i);
  return inv;
}

}  // namespace

std::vector<uint32_t> level_table(const MealyMachine& m, const StateWord& w, int level) {
  if (level < 0) fail(errc::invalid_parameter, "negative level");
  const int asz = m.alphabet_size();
  const std::size_t n = words_at_level(asz, level);
  std::vector<uint32_t> table(n);
  if (level == 0) {
    table[0] = 0;
    return table;
  }
  bool needs_inverse = false;
  for (const auto& l : w)
    if (l.exponent < 0) needs_inverse = true;
  std::optional<MealyMachine> inv;
  if (needs_inverse) inv.emplace(m.inverted());
  std::vector<const MealyMachine*> machines;
  for (const auto& l : w) machines.push_back(l.exponent < 0 ? &*inv : &m);

  // Depth-first walk over A^level carrying the composite tuple and the
  // index of the image prefix.
  struct Frame {
    std::vector<int16_t> tuple;
    std::size_t orig, img;
    int next_letter;
  };
  std::vector<Frame> stack;
  Frame root;
  for (const auto& l : w) root.tuple.push_back(static_cast<int16_t>(l.state));
  root.orig = root.img = 0;
  root.next_letter = 0;
  stack.push_back(std::move(root));
  while (!stack.empty()) {
    Frame& f = stack.back();
    if (static_cast<int>(stack.size()) == level + 1) {
      table[f.orig] = static_cast<uint32_t>(f.img);
      stack.pop_back();
      continue;
    }
    if (f.next_letter == asz) {
      stack.pop_back();
      continue;
    }
    int a = f.next_letter++;
    Frame child;
    child.tuple.resize(f.tuple.size());
    int sym = a;
    for (std::size_t i = 0; i < f.tuple.size(); ++i) {
      const MealyMachine* mm = machines[i];
      int q = f.tuple[i];
      child.tuple[i] = static_cast<int16_t>(mm->next_state(q, sym));
      sym = mm->output(q, sym);
    }
    child.orig = f.orig * static_cast<std::size_t>(asz) + static_cast<std::size_t>(a);
    child.img = f.img * static_cast<std::size_t>(asz) + static_cast<std::size_t>(sym);
    child.next_letter = 0;
    stack.push_back(std::move(child));
  }
  return table;
}

std::string cycle_notation(const MealyMachine& m, const std::vector<uint32_t>& table, int level) {
  std::vector<bool> done(table.size(), false);
  std::ostringstream os;
  bool any = false;
  for (std::size_t start = 0; start < table.size(); ++start) {
    if (done[start] || table[start] == start) {
      done[start] = true;
      continue;
    }
    any = true;
    os << '(';
    std::size_t cur = start;
    bool first = true;
    do {
      if (!first) os << ' ';
      first = false;
      os << word_of_index(m, cur, level);
      done[cur] = true;
      cur = table[cur];
    } while (cur != start);
    os << ')';
  }
  return any ? os.str() : "id";
}

LevelQuotient level_quotient(const MealyMachine& m, const std::vector<StateWord>& gens, int level,
                             std::size_t budget) {
  if (gens.empty()) fail(errc::invalid_parameter, "need at least one generator");
  LevelQuotient out;
  out.level = level;
  std::vector<std::vector<uint32_t>> gen_tables;
  gen_tables.reserve(gens.size());
  for (const auto& g : gens) gen_tables.push_back(level_table(m, g, level));

  const std::size_t n = gen_tables[0].size();
  std::vector<uint32_t> identity(n);
  for (std::size_t i = 0; i < n; ++i) identity[i] = static_cast<uint32_t>(i);

  std::unordered_map<std::vector<uint32_t>, std::size_t, TableHash> ids;
  auto intern = [&](std::vector<uint32_t> t) -> std::pair<std::size_t, bool> {
    auto it = ids.find(t);
    if (it != ids.end()) return {it->second, false};
    if (out.elements.size() >= budget)
      fail(errc::budget_exceeded,
           "level quotient exceeded the budget of " + std::to_string(budget) + " elements");
    std::size_t id = out.elements.size();
    ids.emplace(t, id);
    out.elements.push_back(std::move(t));
    return {id, true};
  };
  intern(identity);
  for (std::size_t head = 0; head < out.elements.size(); ++head) {
    for (const auto& g : gen_tables) {
      std::vector<uint32_t> prod(n);
      const auto& e = out.elements[head];
      for (std::size_t i = 0; i < n; ++i) prod[i] = g[e[i]];
      intern(std::move(prod));
    }
  }
  for (const auto& g : gen_tables) out.generator_images.push_back(ids.at(g));
  return out;
}

FalsifyResult uc_falsify(const MealyMachine& m, const std::vector<StateWord>& gens,
                         const std::vector<std::string>& gen_names,
                         const std::vector<StateWord>& images, int n, int mtarget, int radius,
                         std::size_t budget) {
  if (gens.size() != images.size() || gens.size() != gen_names.size() || gens.empty())
    fail(errc::invalid_parameter, "generators, names and images must align");

  std::vector<std::vector<uint32_t>> src_tables, img_tables;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    src_tables.push_back(level_table(m, gens[i], n));
    img_tables.push_back(level_table(m, images[i], mtarget));
    names.push_back(gen_names[i]);
  }
  if (m.is_invertible()) {
    const std::size_t count = gens.size();
    for (std::size_t i = 0; i < count; ++i) {
      src_tables.push_back(inverse_table(src_tables[i]));
      img_tables.push_back(inverse_table(img_tables[i]));
      names.push_back(gen_names[i] + "-1");
    }
  }

  const std::size_t ns = src_tables[0].size(), nm = img_tables[0].size();
  std::vector<uint32_t> id_src(ns), id_img(nm);
  for (std::size_t i = 0; i < ns; ++i) id_src[i] = static_cast<uint32_t>(i);
  for (std::size_t i = 0; i < nm; ++i) id_img[i] = static_cast<uint32_t>(i);

  struct PairHash {
    std::size_t operator()(const std::vector<uint32_t>& v) const { return TableHash{}(v); }
  };
  // State = concatenated pair of tables; BFS remembers how each state was
  // first reached so the witness word can be reconstructed.
  struct Node {
    std::vector<uint32_t> key;
    long long parent;
    int letter;
    int depth;
  };
  auto make_key = [&](const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    std::vector<uint32_t> key;
    key.reserve(a.size() + b.size());
    key.insert(key.end(), a.begin(), a.end());
    key.insert(key.end(), b.begin(), b.end());
    return key;
  };

  std::vector<Node> nodes;
  std::unordered_set<std::vector<uint32_t>, PairHash> seen;
  nodes.push_back({make_key(id_src, id_img), -1, -1, 0});
  seen.insert(nodes[0].key);

  FalsifyResult result;
  for (std::size_t head = 0; head < nodes.size(); ++head) {
    if (nodes[head].depth >= radius) continue;
    // Copy out the current tables (the nodes vector may reallocate below).
    std::vector<uint32_t> cur_src(nodes[head].key.begin(), nodes[head].key.begin() + static_cast<std::ptrdiff_t>(ns));
    std::vector<uint32_t> cur_img(nodes[head].key.begin() + static_cast<std::ptrdiff_t>(ns), nodes[head].key.end());
    for (std::size_t g = 0; g < src_tables.size(); ++g) {
      std::vector<uint32_t> next_src(ns), next_img(nm);
      for (std::size_t i = 0; i < ns; ++i) next_src[i] = src_tables[g][cur_src[i]];
      for (std::size_t i = 0; i < nm; ++i) next_img[i] = img_tables[g][cur_img[i]];
      std::vector<uint32_t> key = make_key(next_src, next_img);
      if (!seen.insert(key).second) continue;
      if (seen.size() > budget)
        fail(errc::budget_exceeded, "falsifier exceeded its table-pair budget");
      bool fixes_n = next_src == id_src;
      bool image_fixes = next_img == id_img;
      nodes.push_back({std::move(key), static_cast<long long>(head), static_cast<int>(g),
                       nodes[head].depth + 1});
      if (fixes_n && !image_fixes) {
        // Reconstruct the word.
        std::vector<int> letters;
        long long at = static_cast<long long>(nodes.size()) - 1;
        while (at > 0) {
          letters.push_back(nodes[static_cast<std::size_t>(at)].letter);
          at = nodes[static_cast<std::size_t>(at)].parent;
        }
        std::reverse(letters.begin(), letters.end());
        result.found = true;
        result.witness = letters;
        std::ostringstream os;
        for (std::size_t i = 0; i < letters.size();) {
          std::size_t run = i;
          while (run < letters.size() && letters[run] == letters[i]) ++run;
          if (i) os << ' ';
          os << names[static_cast<std::size_t>(letters[i])];
          if (run - i > 1) os << '^' << (run - i);
          i = run;
        }
        result.witness_text = os.str();
        result.explored = seen.size();
        return result;
      }
    }
  }
  result.explored = seen.size();
  return result;
}

std::string AleshinLevel2Report::to_string() const {
  std::ostringstream os;
  os << "level-2 action of p: " << p_cycles << '\n';
  os << "level-2 action of q: " << q_cycles << '\n';
  os << "level-2 action of r: " << r_cycles << '\n';
  os << "pq fixes level 2: " << (pq_fixes_level2 ? "yes" : "no") << '\n';
  os << "rpq fixes level 2: " << (rpq_fixes_level2 ? "yes" : "no") << '\n';
  os << "note: " << group_caveat << '\n';
  return os.str();
}

AleshinLevel2Report aleshin_level2_report() {
  MealyMachine m = aleshin_machine();
  AleshinLevel2Report rep;
  StateWord p{{m.state_index("p"), 1}}, q{{m.state_index("q"), 1}}, r{{m.state_index("r"), 1}};
  rep.p_cycles = cycle_notation(m, level_table(m, p, 2), 2);
  rep.q_cycles = cycle_notation(m, level_table(m, q, 2), 2);
  rep.r_cycles = cycle_notation(m, level_table(m, r, 2), 2);
  rep.pq_fixes_level2 = word_fixes_level(m, {p[0], q[0]}, 2);
  rep.rpq_fixes_level2 = word_fixes_level(m, {r[0], p[0], q[0]}, 2);
  rep.group_caveat =
      "finite-level facts such as these do not decide whether the generators satisfy "
      "relations on the full tree; no freeness claim is checked here";
  return rep;
}

std::string ProductSwapReport::to_string() const {
  std::ostringstream os;
  for (int i = 0; i < nmax; ++i)
    os << "p^(2^" << (i + 1) << ") fixes level " << (i + 1) << ": "
       << (p_tower[static_cast<std::size_t>(i)] ? "yes" : "no") << '\n';
  for (int i = 0; i < nmax; ++i)
    os << "r^(2^" << (i + 1) << ") fixes level 1: "
       << (r_tower[static_cast<std::size_t>(i)] ? "yes" : "no") << '\n';
  os << "factors commute on short words: " << (factors_commute ? "yes" : "no") << '\n';
  return os.str();
}

ProductSwapReport product_swap_report(int nmax) {
  if (nmax < 1) fail(errc::invalid_parameter, "nmax must be >= 1");
  MealyMachine c = direct_product(decrement_machine(), three_cycle_machine());
  ProductSwapReport rep;
  rep.nmax = nmax;
  const int p = c.state_index("p"), r = c.state_index("r");
  for (int n = 1; n <= nmax; ++n) {
    StateWord pw(static_cast<std::size_t>(1) << n, StateLetter{p, 1});
    StateWord rw(static_cast<std::size_t>(1) << n, StateLetter{r, 1});
    rep.p_tower.push_back(word_fixes_level(c, pw, n));
    rep.r_tower.push_back(word_fixes_level(c, rw, 1));
  }
  rep.factors_commute =
      level_table(c, {{p, 1}, {r, 1}}, 5) == level_table(c, {{r, 1}, {p, 1}}, 5);
  return rep;
}

}  // namespace lamptree
