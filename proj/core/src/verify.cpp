#include "lamptree/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "lamptree/explorer.hpp"
#include "lamptree/lamp.hpp"
#include "lamptree/lamp_aut.hpp"
#include "lamptree/mealy.hpp"
#include "lamptree/modular.hpp"
#include "lamptree/portrait.hpp"
#include "lamptree/sampling.hpp"
#include "lamptree/series.hpp"

namespace lamptree {

bool BlockResult::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

uint64_t fnv1a(std::string_view s) {
  uint64_t h = 14695981039346656037ull;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  return h;
}

// Collects check results; every check body runs under a wall clock and an
// exception trap so that one failing claim never hides the others.
class Checker {
public:
  template <class F>
  void run(const std::string& name, const std::string& anchor, F&& f) {
    CheckResult r;
    r.name = name;
    r.anchor = anchor;
    auto t0 = Clock::now();
    try {
      std::string d;
      r.pass = f(d);
      r.detail = std::move(d);
    } catch (const std::exception& ex) {
      r.pass = false;
      r.detail = std::string("exception: ") + ex.what();
    }
    r.elapsed_ms = ms_since(t0);
    results.push_back(std::move(r));
  }

  std::vector<CheckResult> results;
};

StateWord word_pow(int state, long long n) {
  StateWord w;
  int exp = n < 0 ? -1 : 1;
  for (long long i = 0; i < std::llabs(n); ++i) w.push_back({state, exp});
  return w;
}

StateWord word_inverse(const StateWord& w) {
  StateWord out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back({it->state, -it->exponent});
  return out;
}

std::string plain(long long v) { return std::to_string(v); }

// ---------------------------------------------------------------------------
// machine-actions: spot actions of the built-in machines and basic inverses.

void block_machine_actions(Checker& c, uint64_t seed) {
  c.run("adding-acts", "odometer-increment", [](std::string& d) {
    auto m = adding_machine();
    auto p = parse_state_word(m, "p");
    bool ok = format_word(m, act(m, p, parse_input_word(m, "11"))) == "00" &&
              format_word(m, act(m, p, parse_input_word(m, "000"))) == "100" &&
              format_word(m, act(m, p, parse_input_word(m, "0110"))) == "1110";
    d = "p carries through low-order ones";
    return ok;
  });
  c.run("decrement-acts", "odometer-decrement", [](std::string& d) {
    auto m = decrement_machine();
    auto p = parse_state_word(m, "p");
    bool ok = format_word(m, act(m, p, parse_input_word(m, "11"))) == "01" &&
              format_word(m, act(m, p, parse_input_word(m, "00"))) == "11" &&
              format_word(m, act(m, p, parse_input_word(m, "100"))) == "000";
    d = "p borrows through low-order zeros";
    return ok;
  });
  c.run("decrement-inverts-adding", "odometer-decrement", [](std::string& d) {
    auto inc = adding_machine();
    auto dec = decrement_machine();
    auto inv = inc.inverted();
    for (int a = 0; a < 2; ++a) {
      if (dec.output(0, a) != inv.output(0, a) || dec.next_state(0, a) != inv.next_state(0, a))
        return false;
      if (dec.output(1, a) != inv.output(1, a) || dec.next_state(1, a) != inv.next_state(1, a))
        return false;
    }
    d = "transition tables match state by state";
    return true;
  });
  c.run("three-cycle-acts", "letter-cycle-machine", [](std::string& d) {
    auto m = three_cycle_machine();
    auto r = parse_state_word(m, "r");
    bool ok = format_word(m, act(m, r, parse_input_word(m, "44"))) == "24" &&
              format_word(m, act(m, r, parse_input_word(m, "244"))) == "324" &&
              format_word(m, act(m, r, parse_input_word(m, "34"))) == "42";
    d = "r advances the first letter and one follower";
    return ok;
  });
  c.run("cayley-acts", "carry-machine", [](std::string& d) {
    auto m = cayley_machine(2);
    auto s0 = parse_state_word(m, "0");
    auto s1 = parse_state_word(m, "1");
    bool ok = format_word(m, act(m, s1, parse_input_word(m, "110"))) == "011" &&
              format_word(m, act(m, s0, parse_input_word(m, "110"))) == "100" &&
              format_word(m, act(m, s1, parse_input_word(m, "000"))) == "111";
    d = "state h adds h with carries";
    return ok;
  });
  c.run("builders-invertible", "invertibility", [](std::string& d) {
    bool ok = adding_machine().is_invertible() && cayley_machine(6).is_invertible() &&
              aleshin_machine().is_invertible() && decrement_machine().is_invertible() &&
              three_cycle_machine().is_invertible();
    MealyMachine squash({"0", "1"}, {"z"}, {{0, 0}, {0, 0}});
    ok = ok && !squash.is_invertible();
    d = "all builders invertible; constant machine is not";
    return ok;
  });
  c.run("inverse-words-cancel", "invertibility", [&](std::string& d) {
    auto m = aleshin_machine();
    Rng rng(seed ^ 0x11);
    for (int t = 0; t < 50; ++t) {
      StateWord w;
      long long len = rand_range(rng, 1, 4);
      for (long long i = 0; i < len; ++i)
        w.push_back({static_cast<int>(rand_range(rng, 0, 2)),
                     rand_range(rng, 0, 1) ? 1 : -1});
      StateWord round = w;
      for (auto& l : word_inverse(w)) round.push_back(l);
      std::vector<int> word;
      for (int i = 0; i < 6; ++i) word.push_back(static_cast<int>(rand_range(rng, 0, 1)));
      if (act(m, round, word) != word) return false;
      if (!word_is_identity(m, round)) return false;
    }
    d = "w * w^-1 fixes 50 random words and is the identity";
    return true;
  });
  c.run("identity-word-checks", "identity-decision", [](std::string& d) {
    auto m = adding_machine();
    auto a = aleshin_machine();
    bool ok = word_is_identity(m, {}) &&
              word_is_identity(m, {{0, 1}, {0, -1}}) &&
              !word_is_identity(m, {{0, 1}}) &&
              !word_is_identity(a, {{0, 1}, {1, -1}});
    d = "empty and p p^-1 are identities; p and pq^-1 are not";
    return ok;
  });
}

// ---------------------------------------------------------------------------
// adding-quotients: the odometer's level quotients are cyclic 2-groups and
// powers of p fix exactly the predicted number of levels.

void block_adding_quotients(Checker& c, uint64_t) {
  c.run("orders-double", "odometer-quotient-order", [](std::string& d) {
    auto m = adding_machine();
    std::vector<StateWord> gens = {parse_state_word(m, "p")};
    std::ostringstream os;
    for (int n = 1; n <= 10; ++n) {
      auto q = level_quotient(m, gens, n);
      if (q.order() != (1ull << n)) {
        d = "level " + plain(n) + " gave order " + plain(static_cast<long long>(q.order()));
        return false;
      }
      os << (n > 1 ? " " : "") << q.order();
    }
    d = os.str();
    return true;
  });
  c.run("power-tower-sharp", "odometer-stabilizer-tower", [](std::string& d) {
    auto m = adding_machine();
    for (int n = 1; n <= 8; ++n) {
      if (!word_fixes_level(m, word_pow(0, 1ll << n), n)) return false;
      if (word_fixes_level(m, word_pow(0, 1ll << (n - 1)), n)) return false;
    }
    d = "p^(2^n) fixes level n, p^(2^(n-1)) does not, n = 1..8";
    return true;
  });
}

// ---------------------------------------------------------------------------
// cayley-quotients: the carry machine's level quotient orders match the
// closed-form count k^n * ord((1-t) mod (k, t^n)).

void block_cayley_quotients(Checker& c, uint64_t) {
  auto run_case = [](long long k, int nmax, std::string& d) {
    auto m = cayley_machine(k);
    std::vector<StateWord> gens;
    for (int h = 0; h < k; ++h) gens.push_back({{h, 1}});
    std::ostringstream os;
    for (int n = 1; n <= nmax; ++n) {
      auto q = level_quotient(m, gens, n);
      unsigned long long want = level_action_count(k, n);
      if (q.order() != want) {
        d = "k=" + plain(k) + " level " + plain(n) + ": " +
            plain(static_cast<long long>(q.order())) + " != " + plain(static_cast<long long>(want));
        return false;
      }
      os << (n > 1 ? " " : "") << q.order();
    }
    d = "orders " + os.str();
    return true;
  };
  c.run("k2-levels", "carry-quotient-order", [&](std::string& d) { return run_case(2, 5, d); });
  c.run("k3-levels", "carry-quotient-order", [&](std::string& d) { return run_case(3, 3, d); });
  c.run("k4-levels", "carry-quotient-order", [&](std::string& d) { return run_case(4, 3, d); });
  c.run("k5-levels", "carry-quotient-order", [&](std::string& d) { return run_case(5, 2, d); });
  c.run("k6-levels", "carry-quotient-order", [&](std::string& d) { return run_case(6, 2, d); });
}

// ---------------------------------------------------------------------------
// aleshin-level2: frozen level-2 facts about the three-state machine.

void block_aleshin_level2(Checker& c, uint64_t) {
  c.run("cycle-structure", "aleshin-level2-cycles", [](std::string& d) {
    auto rep = aleshin_level2_report();
    d = "p " + rep.p_cycles + "  q " + rep.q_cycles + "  r " + rep.r_cycles;
    return rep.p_cycles == "(00 10 01 11)" && rep.q_cycles == "(00 11 01 10)" &&
           rep.r_cycles == "(00 01)(10 11)";
  });
  c.run("short-products", "aleshin-level2-stabilizer", [](std::string& d) {
    auto rep = aleshin_level2_report();
    d = "pq fixes level 2: yes; rpq: no";
    return rep.pq_fixes_level2 && !rep.rpq_fixes_level2;
  });
  c.run("caveat-recorded", "finite-level-caveat", [](std::string& d) {
    auto rep = aleshin_level2_report();
    d = rep.group_caveat;
    return !rep.group_caveat.empty();
  });
}

// ---------------------------------------------------------------------------
// product-swap: the decrement x three-cycle product machine.

void block_product_swap(Checker& c, uint64_t seed) {
  c.run("tower-report", "product-power-towers", [](std::string& d) {
    auto rep = product_swap_report(10);
    for (bool b : rep.p_tower)
      if (!b) return false;
    for (bool b : rep.r_tower)
      if (b) return false;
    if (!rep.factors_commute) return false;
    d = "p^(2^n) fixes level n for n <= 10; r^(2^n) never fixes level 1; factors commute";
    return true;
  });
  c.run("tower-sharp", "product-power-towers", [](std::string& d) {
    auto m = direct_product(decrement_machine(), three_cycle_machine());
    int p = m.state_index("p");
    for (int n = 1; n <= 8; ++n)
      if (word_fixes_level(m, word_pow(p, 1ll << (n - 1)), n)) return false;
    d = "p^(2^(n-1)) moves some word of length n, n = 1..8";
    return true;
  });
  c.run("factor-restriction", "product-restriction", [&](std::string& d) {
    auto prod = direct_product(decrement_machine(), three_cycle_machine());
    auto dec = decrement_machine();
    StateWord wp_prod = {{prod.state_index("p"), 1}};
    StateWord wp_dec = {{dec.state_index("p"), 1}};
    Rng rng(seed ^ 0x21);
    for (int t = 0; t < 100; ++t) {
      long long len = rand_range(rng, 1, 6);
      std::vector<std::string> word;
      for (long long i = 0; i < len; ++i) word.push_back(rand_range(rng, 0, 1) ? "1" : "0");
      if (act(prod, wp_prod, word) != act(dec, wp_dec, word)) return false;
    }
    d = "p acts identically on binary words in the product and alone";
    return true;
  });
}

// ---------------------------------------------------------------------------
// mirror: conjugation by the letterwise bit swap on binary portraits.

Portrait random_binary_portrait(Rng& rng, int depth) {
  Portrait p({"0", "1"}, depth);
  for (int level = 0; level < depth; ++level) {
    std::size_t nodes = 1ull << level;
    for (std::size_t u = 0; u < nodes; ++u)
      if (rand_range(rng, 0, 1)) p.set_local(level, u, {1, 0});
  }
  return p;
}

void block_mirror(Checker& c, uint64_t seed) {
  c.run("odometer-inverse", "mirror-conjugation", [](std::string& d) {
    auto m = adding_machine();
    for (int depth = 1; depth <= 8; ++depth) {
      auto plus = portrait_of(m, {{0, 1}}, depth);
      auto minus = portrait_of(m, {{0, -1}}, depth);
      if (!(plus.mirror() == minus)) return false;
    }
    d = "mirror of the increment portrait is the decrement portrait, depth 1..8";
    return true;
  });
  c.run("involution", "mirror-conjugation", [&](std::string& d) {
    Rng rng(seed ^ 0x31);
    for (int t = 0; t < 50; ++t) {
      auto p = random_binary_portrait(rng, 5);
      if (!(p.mirror().mirror() == p)) return false;
    }
    d = "mirror twice restores 50 random portraits";
    return true;
  });
  c.run("compose-compatible", "mirror-conjugation", [&](std::string& d) {
    Rng rng(seed ^ 0x32);
    for (int t = 0; t < 100; ++t) {
      auto p = random_binary_portrait(rng, 5);
      auto q = random_binary_portrait(rng, 5);
      if (!(p.compose(q).mirror() == p.mirror().compose(q.mirror()))) return false;
      if (!(p.inverse().mirror() == p.mirror().inverse())) return false;
    }
    d = "mirror respects composition and inversion on 100 random pairs";
    return true;
  });
  c.run("distance-scale", "portrait-distance", [](std::string& d) {
    auto m = adding_machine();
    auto id = Portrait::identity({"0", "1"}, 6);
    auto one = portrait_of(m, {{0, 1}}, 6);                // differs at the root
    auto two = portrait_of(m, word_pow(0, 2), 6);          // fixes level 1, not 2
    auto dist_one = depth_distance(one, id);
    auto dist_two = depth_distance(two, id);
    d = dist_one.to_string() + " and " + dist_two.to_string();
    return dist_one.determinate && dist_one.to_string() == "2^-1" && dist_two.determinate &&
           dist_two.to_string() == "2^-2" && !depth_distance(id, id).determinate;
  });
}

// ---------------------------------------------------------------------------
// inner-continuity: witness search for discontinuous substitutions, and the
// guaranteed absence of witnesses for inner/identity substitutions.

void block_inner_continuity(Checker& c, uint64_t) {
  c.run("swap-witness", "swap-substitution-witness", [](std::string& d) {
    auto m = direct_product(decrement_machine(), three_cycle_machine());
    StateWord p = {{m.state_index("p"), 1}};
    StateWord r = {{m.state_index("r"), 1}};
    auto res = uc_falsify(m, {p, r}, {"p", "r"}, {r, p}, 1, 1, 4);
    d = res.found ? "witness " + res.witness_text : "no witness";
    return res.found && res.witness_text == "p^2";
  });
  c.run("swap-witness-level0", "swap-substitution-witness", [](std::string& d) {
    auto m = direct_product(decrement_machine(), three_cycle_machine());
    StateWord p = {{m.state_index("p"), 1}};
    StateWord r = {{m.state_index("r"), 1}};
    auto res = uc_falsify(m, {p, r}, {"p", "r"}, {r, p}, 0, 1, 4);
    d = res.found ? "witness " + res.witness_text : "no witness";
    return res.found && res.witness_text == "p";
  });
  c.run("inner-no-witness", "inner-substitution-continuity", [](std::string& d) {
    auto a = aleshin_machine();
    std::vector<StateWord> gens, images;
    std::vector<std::string> names;
    int pi = a.state_index("p");
    for (const char* s : {"p", "q", "r"}) {
      int g = a.state_index(s);
      gens.push_back({{g, 1}});
      names.push_back(s);
      images.push_back({{pi, 1}, {g, 1}, {pi, -1}});
    }
    auto res = uc_falsify(a, gens, names, images, 2, 2, 4);
    if (res.found) {
      d = "unexpected witness " + res.witness_text;
      return false;
    }
    auto m = adding_machine();
    StateWord p = {{0, 1}};
    auto res2 = uc_falsify(m, {p}, {"p"}, {{{0, 1}, {0, 1}, {0, -1}}}, 1, 1, 6);
    d = "conjugation substitutions yield no witness (radius 4 and 6)";
    return !res2.found;
  });
  c.run("identity-no-witness", "identity-substitution-continuity", [](std::string& d) {
    auto a = aleshin_machine();
    std::vector<StateWord> gens;
    std::vector<std::string> names;
    for (const char* s : {"p", "q", "r"}) {
      gens.push_back({{a.state_index(s), 1}});
      names.push_back(s);
    }
    auto res = uc_falsify(a, gens, names, gens, 2, 1, 4);
    d = "level-2 stabilizer maps into the level-1 stabilizer";
    return !res.found;
  });
}

// ---------------------------------------------------------------------------
// series-oracle: the series action of lamplighter elements agrees with the
// carry machine simulation on every word of length <= 7.

// Image table of g on all words of length L, indexed like level_table
// (first letter is the most significant base-k digit).
std::vector<uint32_t> lamp_level_table(const LampElement& g, int L) {
  const long long k = g.modulus();
  std::size_t n = 1;
  for (int i = 0; i < L; ++i) n *= static_cast<std::size_t>(k);
  TruncSeries f = one_minus_t_combination(g.beta(), static_cast<std::size_t>(L));
  TruncSeries h = pow_one_minus_t(k, -g.shift(), static_cast<std::size_t>(L));
  TruncSeries fh = f * h;
  std::vector<long long> F(fh.coeffs());
  std::vector<long long> H(h.coeffs());
  std::vector<uint32_t> table(n);
  std::vector<long long> contrib(static_cast<std::size_t>(L), 0);
  std::function<void(int, std::size_t, std::size_t)> rec = [&](int depth, std::size_t orig,
                                                               std::size_t img) {
    if (depth == L) {
      table[orig] = static_cast<uint32_t>(img);
      return;
    }
    auto du = static_cast<std::size_t>(depth);
    for (long long a = 0; a < k; ++a) {
      long long y = mod_reduce(F[du] + contrib[du] + a * H[0], k);
      for (std::size_t j = du + 1; j < static_cast<std::size_t>(L); ++j)
        contrib[j] += a * H[j - du];
      rec(depth + 1, orig * static_cast<std::size_t>(k) + static_cast<std::size_t>(a),
          img * static_cast<std::size_t>(k) + static_cast<std::size_t>(y));
      for (std::size_t j = du + 1; j < static_cast<std::size_t>(L); ++j)
        contrib[j] -= a * H[j - du];
    }
  };
  rec(0, 0, 0);
  return table;
}

void block_series_oracle(Checker& c, uint64_t seed) {
  for (long long k = 2; k <= 6; ++k) {
    c.run("k" + plain(k) + "-full-agreement", "series-action-vs-machine", [&, k](std::string& d) {
      auto m = cayley_machine(k);
      Rng rng(seed ^ (0x41 + static_cast<uint64_t>(k)));
      const int L = 7;
      for (int t = 0; t < 200; ++t) {
        long long len = rand_range(rng, 1, 10);
        StateWord w;
        LampElement g = lamp_identity(k);
        for (long long i = 0; i < len; ++i) {
          long long h = rand_range(rng, 0, k - 1);
          int e = rand_range(rng, 0, 1) ? 1 : -1;
          w.push_back({static_cast<int>(h), e});
          ZkLaurent beta(k);
          beta.set(0, h);
          g = g * LampElement(beta, 1).pow(e);
        }
        if (level_table(m, w, L) != lamp_level_table(g, L)) {
          d = "mismatch for word " + format_state_word(m, w);
          return false;
        }
      }
      d = "200 words of length <= 10 agree on all inputs of length <= 7";
      return true;
    });
  }
  c.run("act-word-spot", "series-action-vs-machine", [](std::string& d) {
    // state 1 of the binary carry machine is the lamp generator a*x.
    LampElement g = lamp_alpha(2) * lamp_xi(2);
    std::vector<long long> in = {1, 1, 0};
    auto out = act_word(g, in);
    d = "a*x maps 110 to " + plain(out[0]) + plain(out[1]) + plain(out[2]);
    return out == std::vector<long long>({0, 1, 1});
  });
}

// ---------------------------------------------------------------------------
// identity-suite: exact relations between elements, generators and the
// structure maps.

void block_identity_suite(Checker& c, uint64_t seed) {
  c.run("stab-commutes", "stabilizer-abelian", [&](std::string& d) {
    for (long long k : {2, 3, 4, 5, 6, 8, 9}) {
      Rng rng(seed ^ (0x51 + static_cast<uint64_t>(k)));
      for (int t = 0; t < 200; ++t) {
        auto e1 = random_stab_automorphism(k, rng, 3);
        auto e2 = random_stab_automorphism(k, rng, 3);
        if (!(endo_compose(e1, e2) == endo_compose(e2, e1))) {
          d = "k=" + plain(k) + ": " + e1.to_string() + " vs " + e2.to_string();
          return false;
        }
      }
    }
    d = "200 pairs commute for each of 7 moduli";
    return true;
  });
  c.run("delta-torsion", "delta-order", [](std::string& d) {
    for (long long k : {4, 8, 9}) {
      long long p = factorize(k)[0].p;
      for (long long m = -3; m <= 3; ++m) {
        if (m == 0) continue;
        for (long long cc = 0; cc < k; cc += p)
          if (!(endo_pow(gen_delta(k, m, cc), k) == LampEndo::identity(k))) {
            d = "delta(" + plain(m) + "," + plain(cc) + ") order defect at k=" + plain(k);
            return false;
          }
      }
    }
    d = "delta(m,c)^k is the identity for k in {4,8,9}";
    return true;
  });
  c.run("rho-product", "rho-lambda-relation", [](std::string& d) {
    for (long long k : {6, 10, 15}) {
      auto factors = factorize(k);
      long long m = 1;
      for (const auto& f : factors) m *= f.p - 1;
      LampEndo acc = LampEndo::identity(k);
      for (int ell = 1; ell <= static_cast<int>(factors.size()); ++ell)
        acc = endo_compose(acc, endo_pow(gen_rho(k, ell), m));
      if (!(acc == endo_pow(gen_lambda(k), m))) {
        d = "k=" + plain(k) + " m=" + plain(m);
        return false;
      }
    }
    d = "rho_1^m...rho_s^m = lambda^m with m = prod(p-1) for k in {6,10,15}";
    return true;
  });
  c.run("lambda-splits-k6", "rho-lambda-relation", [](std::string& d) {
    bool pre = (3 * 3 - 1) % 2 == 0 && (2 * 2 - 1) % 3 == 0;
    bool eq = endo_compose(gen_rho(6, 1), gen_rho(6, 2)) == gen_lambda(6);
    bool neq10 = !(endo_compose(gen_rho(10, 1), gen_rho(10, 2)) == gen_lambda(10));
    d = "lambda = rho_1 rho_2 over Z_6 (each prime divides the cofactor^2 - 1); fails over Z_10";
    return pre && eq && neq10;
  });
  c.run("gamma-split", "gamma-factorization", [](std::string& d) {
    for (long long k = 2; k <= 12; ++k)
      for (long long m = -4; m <= 4; ++m)
        for (long long j = 1; j < k; ++j) {
          if (!coprime(j, k)) continue;
          if (!(gen_gamma(k, m, j) ==
                endo_compose(endo_pow(gen_lambda(k), m), gen_eta(k, j)))) {
            d = "gamma(" + plain(m) + "," + plain(j) + ") defect at k=" + plain(k);
            return false;
          }
        }
    d = "gamma(m,j) = lambda^m eta(j) for k = 2..12, |m| <= 4, all units j";
    return true;
  });
  c.run("eta-multiplicative", "eta-structure", [](std::string& d) {
    for (long long k : {4, 6, 9, 12})
      for (long long j1 = 1; j1 < k; ++j1)
        for (long long j2 = 1; j2 < k; ++j2) {
          if (!coprime(j1, k) || !coprime(j2, k)) continue;
          if (!(endo_compose(gen_eta(k, j1), gen_eta(k, j2)) == gen_eta(k, mod_mul(j1, j2, k))))
            return false;
        }
    d = "eta(j) eta(j') = eta(jj') over four moduli";
    return true;
  });
  c.run("zeta-involution", "zeta-structure", [](std::string& d) {
    for (long long k : {2, 3, 4, 6}) {
      auto z = gen_zeta(k);
      if (!(endo_compose(z, z) == LampEndo::identity(k))) return false;
      if (!(endo_apply(z, lamp_alpha(k)) == lamp_alpha(k))) return false;
      if (!(endo_apply(z, lamp_xi(k)) == lamp_xi(k).inverse())) return false;
      for (long long m = -3; m <= 3; ++m)
        if (!(endo_apply(z, lamp_beta(k, m)) == lamp_beta(k, -m))) return false;
    }
    d = "zeta^2 = 1, zeta fixes a, inverts x, and mirrors b(m)";
    return true;
  });
  c.run("iota-on-powers", "iota-structure", [](std::string& d) {
    for (long long k : {2, 3, 4, 6}) {
      auto io = gen_iota(k);
      for (long long n = 1; n <= 6; ++n) {
        ZkLaurent want(k);
        for (long long i = 0; i < n; ++i) want.add_to(i, 1);
        if (!(endo_apply(io, lamp_xi(k).pow(n)) == LampElement(want, n))) return false;
      }
    }
    d = "iota maps x^n to b(0)...b(n-1) x^n";
    return true;
  });
  c.run("psi-homomorphism", "element-to-automorphism-embedding", [&](std::string& d) {
    for (long long k : {2, 3, 4, 6}) {
      Rng rng(seed ^ (0x52 + static_cast<uint64_t>(k)));
      for (int t = 0; t < 200; ++t) {
        auto x = random_element(k, rng, 3, 3);
        auto y = random_element(k, rng, 3, 3);
        if (!(psi_embed(x * y) == endo_compose(psi_embed(x), psi_embed(y)))) {
          d = "k=" + plain(k) + ": " + x.to_string() + " , " + y.to_string();
          return false;
        }
        if (!(x == y) && psi_embed(x) == psi_embed(y)) {
          d = "k=" + plain(k) + ": embedding collision";
          return false;
        }
      }
    }
    d = "psi(xy) = psi(x) psi(y) and psi is injective on 200 pairs per modulus";
    return true;
  });
  c.run("sigma-homomorphism", "stab-projection-structure", [&](std::string& d) {
    for (long long k : {2, 3, 4, 6}) {
      Rng rng(seed ^ (0x53 + static_cast<uint64_t>(k)));
      for (int t = 0; t < 200; ++t) {
        auto e1 = random_positive_automorphism(k, rng, 3);
        auto e2 = random_positive_automorphism(k, rng, 3);
        if (!(stab_projection(endo_compose(e1, e2)) ==
              endo_compose(stab_projection(e1), stab_projection(e2)))) {
          d = "k=" + plain(k);
          return false;
        }
      }
    }
    d = "forgetting the x-image is a homomorphism on 200 pairs per modulus";
    return true;
  });
  c.run("invert-roundtrip", "automorphism-inverse", [&](std::string& d) {
    for (long long k : {2, 4, 6, 9, 12}) {
      Rng rng(seed ^ (0x54 + static_cast<uint64_t>(k)));
      for (int t = 0; t < 100; ++t) {
        auto e = random_positive_automorphism(k, rng, 3);
        if (rand_range(rng, 0, 1)) e = endo_compose(e, gen_zeta(k));
        auto inv = endo_invert(e);
        if (!(endo_compose(e, inv) == LampEndo::identity(k)) ||
            !(endo_compose(inv, e) == LampEndo::identity(k))) {
          d = "k=" + plain(k) + ": " + e.to_string();
          return false;
        }
      }
    }
    d = "e e^-1 = e^-1 e = 1 for 100 automorphisms per modulus, both signs of r";
    return true;
  });
}

// ---------------------------------------------------------------------------
// structure-maps: modulus reduction, coprime embedding and conventions.

void block_structure_maps(Checker& c, uint64_t seed) {
  c.run("embed-homomorphism", "coprime-embedding", [&](std::string& d) {
    const std::pair<long long, long long> cases[] = {{2, 3}, {3, 4}, {2, 5}};
    for (auto [u, v] : cases) {
      Rng rng(seed ^ (0x61 + static_cast<uint64_t>(u * 8 + v)));
      for (int t = 0; t < 100; ++t) {
        auto x = random_element(u, rng, 3, 3);
        auto y = random_element(u, rng, 3, 3);
        if (!(embed_element(x, v) * embed_element(y, v) == embed_element(x * y, v))) return false;
        if (!(x == y) && embed_element(x, v) == embed_element(y, v)) return false;
        if (x.is_torsion() && lamp_order(embed_element(x, v)) != lamp_order(x)) return false;
      }
    }
    d = "multiplicative, injective, order preserving for (u,v) in {(2,3),(3,4),(2,5)}";
    return true;
  });
  c.run("reduce-homomorphism", "modulus-reduction", [&](std::string& d) {
    const std::pair<long long, long long> cases[] = {{6, 2}, {6, 3}, {12, 3}, {12, 4}};
    for (auto [k, u] : cases) {
      Rng rng(seed ^ (0x62 + static_cast<uint64_t>(k * 16 + u)));
      for (int t = 0; t < 100; ++t) {
        LampEndo e1(random_laurent(k, rng, -3, 3), ZkLaurent(k), 1);
        LampEndo e2(random_laurent(k, rng, -3, 3), ZkLaurent(k), 1);
        if (!(reduce_modulus(endo_compose(e1, e2), u) ==
              endo_compose(reduce_modulus(e1, u), reduce_modulus(e2, u))))
          return false;
      }
    }
    d = "coefficientwise reduction respects composition for k=6,12";
    return true;
  });
  c.run("delta-reduction", "modulus-reduction", [](std::string& d) {
    bool ok = reduce_modulus(gen_delta(12, 1, 6), 4) == gen_delta(4, 1, 2) &&
              reduce_modulus(gen_delta(12, 1, 6), 3) == LampEndo::identity(3);
    d = "delta(1,6) over Z_12 reduces to delta(1,2) mod 4 and to the identity mod 3";
    return ok;
  });
  c.run("psi-xi-convention", "element-to-automorphism-embedding", [](std::string& d) {
    auto e = psi_embed(lamp_xi(2));
    bool ok = e.i_data() == laurent_unit(2, -1) && e.j_data().is_zero() && e.r() == 1 &&
              stab_projection(e) == endo_pow(gen_lambda(2), -1);
    d = "psi(x) has i = {-1:1}: its stab part is lambda^-1";
    return ok;
  });
  c.run("psi-alpha-iota", "element-to-automorphism-embedding", [](std::string& d) {
    for (long long k : {2, 3, 4, 6})
      if (!(psi_embed(lamp_alpha(k)) == gen_iota(k))) return false;
    d = "the lamp generator embeds as iota for k in {2,3,4,6}";
    return true;
  });
}

// ---------------------------------------------------------------------------
// decompositions: generator words for x-fixing automorphisms.

void block_decompositions(Checker& c, uint64_t seed) {
  c.run("prime-roundtrip", "stab-decomposition-prime", [&](std::string& d) {
    for (long long k : {2, 3, 5, 7}) {
      Rng rng(seed ^ (0x71 + static_cast<uint64_t>(k)));
      for (int t = 0; t < 100; ++t) {
        auto e = random_stab_automorphism(k, rng, 6);
        auto dec = decompose_stab_prime(e);
        if (!(gen_gamma(k, dec.m, dec.j) == e)) {
          d = "k=" + plain(k) + ": " + e.to_string();
          return false;
        }
      }
    }
    d = "e = gamma(m,j) recovered for 100 samples per prime";
    return true;
  });
  c.run("prime-power-roundtrip", "stab-decomposition-prime-power", [&](std::string& d) {
    for (long long k : {4, 8, 9, 27}) {
      Rng rng(seed ^ (0x72 + static_cast<uint64_t>(k)));
      for (int t = 0; t < 100; ++t) {
        auto e = random_stab_automorphism(k, rng, 3);
        auto word = decompose_stab_prime_power(e);
        if (!(recompose_stab(k, word) == e)) {
          d = "k=" + plain(k) + ": " + e.to_string();
          return false;
        }
      }
    }
    d = "generator words recompose to e for 100 samples per prime power";
    return true;
  });
  c.run("prime-power-frozen", "stab-decomposition-prime-power", [](std::string& d) {
    auto join = [](const std::vector<StabWordEntry>& w) {
      std::string s;
      for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "*" : "") + w[i].to_string();
      return s;
    };
    LampEndo e4(ZkLaurent(4, {{0, 3}, {1, 2}}), ZkLaurent(4), 1);
    LampEndo e8(ZkLaurent(8, {{0, 1}, {2, 4}}), ZkLaurent(8), 1);
    std::string w4 = join(decompose_stab_prime_power(e4));
    std::string w8 = join(decompose_stab_prime_power(e8));
    d = "i={0:3,1:2} -> " + w4 + "; i={0:1,2:4} -> " + w8;
    return w4 == "eta(3)*delta(1,2)" && w8 == "delta(2,4)";
  });
  c.run("squarefree-roundtrip", "stab-decomposition-squarefree", [&](std::string& d) {
    for (long long k : {6, 10, 15, 30}) {
      Rng rng(seed ^ (0x73 + static_cast<uint64_t>(k)));
      for (int t = 0; t < 100; ++t) {
        auto e = random_stab_automorphism(k, rng, 3);
        auto dec = decompose_stab_squarefree(e);
        LampEndo acc = gen_eta(k, dec.j);
        for (std::size_t l = 0; l < dec.primes.size(); ++l)
          acc = endo_compose(acc, endo_pow(gen_rho(k, static_cast<int>(l) + 1),
                                           dec.rho_exponents[l]));
        if (!(acc == e)) {
          d = "k=" + plain(k) + ": " + e.to_string();
          return false;
        }
      }
    }
    d = "eta(j) prod rho_l^(m_l) = e for 100 samples per squarefree modulus";
    return true;
  });
  c.run("squarefree-frozen", "stab-decomposition-squarefree", [](std::string& d) {
    auto d6 = decompose_stab_squarefree(gen_lambda(6));
    auto e15 = endo_compose(endo_pow(gen_rho(15, 1), 2), gen_eta(15, 2));
    auto d15 = decompose_stab_squarefree(e15);
    d = "lambda over Z_6 -> eta(" + plain(d6.j) + ") rho^(" + plain(d6.rho_exponents[0]) + "," +
        plain(d6.rho_exponents[1]) + "); rho_1^2 eta(2) over Z_15 -> eta(" + plain(d15.j) +
        ") rho^(" + plain(d15.rho_exponents[0]) + "," + plain(d15.rho_exponents[1]) + ")";
    return d6.j == 1 && d6.rho_exponents == std::vector<long long>({1, 1}) && d15.j == 2 &&
           d15.rho_exponents == std::vector<long long>({2, 0});
  });
  c.run("rejects-non-stab", "stab-decomposition-prime-power", [](std::string& d) {
    bool caught = false;
    try {
      decompose_stab_prime_power(gen_iota(4));
    } catch (const error& e) {
      caught = e.code() == errc::not_in_stab;
    }
    bool caught2 = false;
    try {
      decompose_stab_prime_power(LampEndo(ZkLaurent(4, {{0, 2}}), ZkLaurent(4), 1));
    } catch (const error& e) {
      caught2 = e.code() == errc::not_an_automorphism;
    }
    d = "iota and non-unit data are rejected with specific error codes";
    return caught && caught2;
  });
}

// ---------------------------------------------------------------------------
// depth-preservation: images under automorphisms keep (almost) the same
// stabilized depth.

void block_depth_preservation(Checker& c, uint64_t seed) {
  for (long long k : {2, 3, 4, 6}) {
    c.run("k" + plain(k) + "-families", "image-depth-bound", [&, k](std::string& d) {
      Rng rng(seed ^ (0x81 + static_cast<uint64_t>(k)));
      long long total = 0, violations = 0;
      for (int v = 0; v < 4; ++v) {
        auto e = random_stab_automorphism(k, rng, 3);
        auto rep = check_depth_preservation(e, 0, 125, 12, rng());
        total += rep.samples;
        violations += rep.violations;
      }
      auto rep_i = check_depth_preservation(gen_iota(k), 1, 500, 12, rng());
      auto rep_z = check_depth_preservation(gen_zeta(k), 0, 500, 12, rng());
      total += rep_i.samples + rep_z.samples;
      violations += rep_i.violations + rep_z.violations;
      for (int v = 0; v < 3; ++v) {
        LampEndo e = LampEndo::identity(k);
        long long allowance = 0;
        long long nf = rand_range(rng, 2, 4);
        for (long long f = 0; f < nf; ++f) {
          switch (rand_range(rng, 0, 2)) {
            case 0: e = endo_compose(e, random_stab_automorphism(k, rng, 2)); break;
            case 1:
              e = endo_compose(e, gen_iota(k));
              ++allowance;
              break;
            default: e = endo_compose(e, gen_zeta(k)); break;
          }
        }
        auto rep = check_depth_preservation(e, allowance, 170, 12, rng());
        total += rep.samples;
        violations += rep.violations;
      }
      d = plain(total) + " samples, " + plain(violations) + " depth violations";
      return violations == 0;
    });
  }
  c.run("iota-spot", "image-depth-bound", [](std::string& d) {
    auto g = lamp_xi(4).pow(4);
    auto img = endo_apply(gen_iota(4), g);
    auto sg = stab_length(g);
    auto si = stab_length(img);
    d = "x^4 over Z_4 stabilizes depth " + plain(*sg) + ", its iota image depth " + plain(*si);
    return sg && si && *sg == 2 && *si >= *sg - 1;
  });
}

// ---------------------------------------------------------------------------
// automorphism-oracle: the membership criterion against an independent
// linear-algebra inverse search.

void block_automorphism_oracle(Checker& c, uint64_t seed) {
  for (long long k : {2, 3, 4, 6, 8, 9, 12}) {
    c.run("k" + plain(k) + "-agreement", "unit-criterion-vs-search", [&, k](std::string& d) {
      Rng rng(seed ^ (0x91 + static_cast<uint64_t>(k)));
      int aut = 0, non = 0;
      for (int t = 0; t < 200; ++t) {
        auto e = random_endo(k, rng, 3);
        bool criterion = is_automorphism(e).ok;
        auto found = convolution_inverse_search(e.i_data());
        bool search = (e.r() == 1 || e.r() == -1) && found.has_value();
        if (criterion != search) {
          d = "verdicts differ for " + e.to_string();
          return false;
        }
        if (criterion) {
          ++aut;
          if (!(convolution_inverse(e.i_data()) == *found)) {
            d = "inverses differ for " + e.to_string();
            return false;
          }
        } else {
          ++non;
        }
      }
      d = plain(aut) + " automorphisms, " + plain(non) + " rejections, verdicts agree";
      return true;
    });
  }
  c.run("wide-inverse", "unit-criterion-vs-search", [](std::string& d) {
    // Unit whose inverse support is three times wider than its own data.
    ZkLaurent i(4, {{3, 1}, {-3, 2}});
    auto found = convolution_inverse_search(i);
    if (!found) return false;
    bool ok = is_automorphism(LampEndo(i, ZkLaurent(4), 1)).ok &&
              *found == convolution_inverse(i) && found->min_index() == -9 &&
              (i * *found) == laurent_unit(4, 0);
    d = "inverse of {-3:2,3:1} over Z_4 reaches index -9";
    return ok;
  });
  c.run("non-units-rejected", "unit-criterion-vs-search", [](std::string& d) {
    bool a = !convolution_inverse_search(ZkLaurent(2, {{0, 1}, {1, 1}})).has_value();
    bool b = !convolution_inverse_search(ZkLaurent(4, {{0, 2}})).has_value();
    bool sixes = convolution_inverse_search(ZkLaurent(6, {{0, 2}, {1, 3}})).has_value();
    d = "1+t mod 2 and 2 mod 4 have no inverse; 2+3t mod 6 does";
    return a && b && sixes;
  });
}

// ---------------------------------------------------------------------------
// fixed-points: the fixed set of conjugation by the lamp generator.

LampEndo conj_by(const LampElement& g) {
  const long long k = g.modulus();
  LampElement a_img = g.inverse() * lamp_alpha(k) * g;
  LampElement x_img = g.inverse() * lamp_xi(k) * g;
  if (!a_img.is_torsion()) fail(errc::internal_defect, "conjugate of a lost torsion");
  return LampEndo(a_img.beta(), x_img.beta(), x_img.shift());
}

std::vector<LampElement> lamp_ball(long long k, int radius) {
  std::vector<LampElement> gens = {lamp_alpha(k), lamp_alpha(k).inverse(), lamp_xi(k),
                                   lamp_xi(k).inverse()};
  std::set<LampElement> seen;
  std::vector<LampElement> frontier = {lamp_identity(k)};
  seen.insert(lamp_identity(k));
  for (int r = 0; r < radius; ++r) {
    std::vector<LampElement> next;
    for (const auto& g : frontier)
      for (const auto& s : gens) {
        LampElement h = g * s;
        if (seen.insert(h).second) next.push_back(h);
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

void block_fixed_points(Checker& c, uint64_t) {
  c.run("conjugation-fixes-torsion", "centralizer-of-lamp", [](std::string& d) {
    auto e = conj_by(lamp_alpha(2));
    auto ball = lamp_ball(2, 6);
    for (const auto& g : ball)
      if (is_fixed(e, g) != g.is_torsion()) {
        d = "wrong verdict on " + g.to_string();
        return false;
      }
    d = plain(static_cast<long long>(ball.size())) + " ball elements: fixed iff torsion";
    return true;
  });
  c.run("fix-sample-matches", "centralizer-of-lamp", [](std::string& d) {
    auto e = conj_by(lamp_alpha(2));
    auto fixed = fix_sample(e, 6);
    std::set<LampElement> got(fixed.begin(), fixed.end());
    std::set<LampElement> want;
    for (const auto& g : lamp_ball(2, 6))
      if (g.is_torsion()) want.insert(g);
    d = plain(static_cast<long long>(got.size())) + " fixed elements in the radius-6 ball";
    return got == want;
  });
  c.run("shifts-move", "centralizer-of-lamp", [](std::string& d) {
    auto e = conj_by(lamp_alpha(2));
    for (long long n = 1; n <= 6; ++n) {
      if (is_fixed(e, lamp_xi(2).pow(n)) || is_fixed(e, lamp_xi(2).pow(-n))) return false;
      ZkLaurent expect(2);
      expect.add_to(0, 1);
      expect.add_to(n, 1);
      if (!(endo_apply(e, lamp_xi(2).pow(n)) == LampElement(expect, n))) return false;
    }
    d = "x^n maps to b(0) b(n) x^n and is never fixed, 1 <= n <= 6";
    return true;
  });
  c.run("ternary-variant", "centralizer-of-lamp", [](std::string& d) {
    auto e = conj_by(lamp_alpha(3));
    for (const auto& g : lamp_ball(3, 4))
      if (is_fixed(e, g) != g.is_torsion()) return false;
    d = "same fixed set over Z_3, radius 4";
    return true;
  });
}

// ---------------------------------------------------------------------------

struct BlockDef {
  const char* name;
  void (*fn)(Checker&, uint64_t);
};

// Alphabetical by name; reports keep this order regardless of how blocks run.
const BlockDef kBlocks[] = {
    {"adding-quotients", block_adding_quotients},
    {"aleshin-level2", block_aleshin_level2},
    {"automorphism-oracle", block_automorphism_oracle},
    {"cayley-quotients", block_cayley_quotients},
    {"decompositions", block_decompositions},
    {"depth-preservation", block_depth_preservation},
    {"fixed-points", block_fixed_points},
    {"identity-suite", block_identity_suite},
    {"inner-continuity", block_inner_continuity},
    {"machine-actions", block_machine_actions},
    {"mirror", block_mirror},
    {"product-swap", block_product_swap},
    {"series-oracle", block_series_oracle},
    {"structure-maps", block_structure_maps},
};

}  // namespace

std::vector<std::string> verify_block_names() {
  std::vector<std::string> out;
  for (const auto& b : kBlocks) out.emplace_back(b.name);
  return out;
}

BlockResult run_verify_block(const std::string& name, uint64_t seed) {
  for (const auto& b : kBlocks) {
    if (name != b.name) continue;
    BlockResult res;
    res.block = name;
    Checker checker;
    auto t0 = Clock::now();
    b.fn(checker, seed ^ fnv1a(name));
    res.elapsed_ms = ms_since(t0);
    res.checks = std::move(checker.results);
    return res;
  }
  fail(errc::invalid_parameter, "unknown verification block '" + name + "'");
}

std::vector<BlockResult> run_verify(uint64_t seed, const std::string& only) {
  std::vector<BlockResult> out;
  bool matched = false;
  for (const auto& b : kBlocks) {
    if (!only.empty() && only != b.name) continue;
    matched = true;
    out.push_back(run_verify_block(b.name, seed));
  }
  if (!only.empty() && !matched)
    fail(errc::invalid_parameter, "unknown verification block '" + only + "'");
  return out;
}

// ---------------------------------------------------------------------------
// Independent inverse search.

namespace {

// Solves sum_n data[m-n] x[n] = [m == 0] for x supported on [-W, W] over
// Z_{p^c}, by elimination with global minimal-valuation pivoting.  Row
// operations keep the system equivalent, so a returned vector is an exact
// solution and nullopt means no solution exists with this support.
std::optional<std::map<long long, long long>> solve_unit_system(const ZkLaurent& iq, long long p,
                                                                int cexp, long long q,
                                                                long long W) {
  const long long mlo = iq.min_index() - W;
  const long long mhi = iq.max_index() + W;
  const std::size_t rows = static_cast<std::size_t>(mhi - mlo + 1);
  const std::size_t cols = static_cast<std::size_t>(2 * W + 1);  // unknown n = col - W
  std::vector<std::vector<long long>> a(rows, std::vector<long long>(cols + 1, 0));
  for (std::size_t r = 0; r < rows; ++r) {
    const long long m = mlo + static_cast<long long>(r);
    for (std::size_t u = 0; u < cols; ++u) {
      const long long n = static_cast<long long>(u) - W;
      a[r][u] = mod_reduce(iq.coeff(m - n), q);
    }
    a[r][cols] = (m == 0) ? 1 : 0;
  }

  std::vector<long long> ppow(static_cast<std::size_t>(cexp) + 1, 1);
  for (int e = 1; e <= cexp; ++e) ppow[static_cast<std::size_t>(e)] = ppow[static_cast<std::size_t>(e - 1)] * p;

  std::vector<bool> row_used(rows, false), col_used(cols, false);
  struct Pivot {
    std::size_t r, u;
    int v;
    long long unit;
  };
  std::vector<Pivot> pivots;
  for (;;) {
    int best_v = cexp;
    std::size_t br = rows, bu = cols;
    for (std::size_t r = 0; r < rows; ++r) {
      if (row_used[r]) continue;
      for (std::size_t u = 0; u < cols; ++u) {
        if (col_used[u] || a[r][u] == 0) continue;
        int v = p_valuation(a[r][u], p, cexp);
        if (v < best_v) {
          best_v = v;
          br = r;
          bu = u;
        }
      }
    }
    if (br == rows) break;
    const long long unit = a[br][bu] / ppow[static_cast<std::size_t>(best_v)];
    const long long unit_inv = mod_inv(mod_reduce(unit, q), q);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == br || row_used[r] || a[r][bu] == 0) continue;
      const long long factor =
          mod_mul(a[r][bu] / ppow[static_cast<std::size_t>(best_v)], unit_inv, q);
      for (std::size_t u = 0; u <= cols; ++u)
        a[r][u] = mod_sub(a[r][u], mod_mul(factor, a[br][u], q), q);
    }
    row_used[br] = true;
    col_used[bu] = true;
    pivots.push_back({br, bu, best_v, mod_reduce(unit, q)});
  }

  for (std::size_t r = 0; r < rows; ++r)
    if (!row_used[r] && a[r][cols] != 0) return std::nullopt;

  std::vector<long long> x(cols, 0);
  for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
    long long rhs = a[it->r][cols];
    for (std::size_t u = 0; u < cols; ++u)
      if (u != it->u) rhs = mod_sub(rhs, mod_mul(a[it->r][u], x[u], q), q);
    const long long pv = ppow[static_cast<std::size_t>(it->v)];
    if (rhs % pv != 0) return std::nullopt;  // cannot happen; kept as a guard
    x[it->u] = mod_mul(rhs / pv, mod_inv(it->unit, q), q);
  }

  std::map<long long, long long> out;
  for (std::size_t u = 0; u < cols; ++u)
    if (x[u] != 0) out[static_cast<long long>(u) - W] = x[u];
  return out;
}

}  // namespace

std::optional<ZkLaurent> convolution_inverse_search(const ZkLaurent& data) {
  const long long k = data.modulus();
  if (data.is_zero()) return std::nullopt;
  const long long w_in =
      std::max({std::llabs(data.min_index()), std::llabs(data.max_index()), 1ll});
  int c_max = 1;
  const auto factors = factorize(k);
  for (const auto& f : factors) c_max = std::max(c_max, f.exp);
  // A unit's inverse per prime power p^c is a monomial shift of a geometric
  // series sum_{j<c} (-nil)^j, whose support lies within (2c-1) times the
  // data window, so this window makes the search complete.
  const long long W = std::max<long long>(6, w_in * (2 * c_max - 1));

  std::vector<ZkLaurent> parts;
  for (const auto& f : factors) {
    ZkLaurent iq = data.reduced(f.q);
    if (iq.is_zero()) return std::nullopt;
    auto sol = solve_unit_system(iq, f.p, f.exp, f.q, W);
    if (!sol) return std::nullopt;
    parts.emplace_back(f.q, std::move(*sol));
  }

  ZkLaurent inv(k);
  std::set<long long> indices;
  for (const auto& part : parts)
    for (const auto& [n, cv] : part.terms()) indices.insert(n);
  std::vector<long long> moduli;
  for (const auto& f : factors) moduli.push_back(f.q);
  for (long long n : indices) {
    std::vector<long long> residues;
    for (const auto& part : parts) residues.push_back(part.coeff(n));
    inv.set(n, crt_combine(residues, moduli));
  }
  if (!(data * inv == laurent_unit(k, 0)))
    fail(errc::internal_defect, "inverse search produced a non-inverse");
  return inv;
}

}  // namespace lamptree
