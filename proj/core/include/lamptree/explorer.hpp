#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lamptree/mealy.hpp"

namespace lamptree {

// Action of a state word on all words of a fixed length, as a permutation
// table of A^level indexed lexicographically.
std::vector<uint32_t> level_table(const MealyMachine& m, const StateWord& w, int level);

std::string cycle_notation(const MealyMachine& m, const std::vector<uint32_t>& table, int level);

// Image of the generated group in the symmetric group on A^level: closure of
// the generator tables under composition, breadth first (generator order,
// then FIFO), with element tables interned in discovery order.  More than
// `budget` elements raises errc::budget_exceeded.
struct LevelQuotient {
  int level = 0;
  std::vector<std::vector<uint32_t>> elements;  // discovery order; [0] = identity
  std::vector<std::size_t> generator_images;    // index into elements per generator
  std::size_t order() const { return elements.size(); }
};
LevelQuotient level_quotient(const MealyMachine& m, const std::vector<StateWord>& gens, int level,
                             std::size_t budget = 10000000);

// Searches for a word in the generators (and their inverses, when the
// machine is invertible) that acts trivially on words of length n but whose
// image under the substitution gen -> image does not act trivially on words
// of length mtarget.  Breadth-first over words of length <= radius with
// state deduplicated on the pair of partial tables, so the result is the
// shortest witness, earliest in generator order.  This refutes claims of
// the form "the substitution is continuous at this scale"; finding nothing
// within the radius proves nothing.
struct FalsifyResult {
  bool found = false;
  std::vector<int> witness;  // generator indices
  std::string witness_text;  // e.g. "p^2"
  std::size_t explored = 0;  // distinct table pairs visited
};
FalsifyResult uc_falsify(const MealyMachine& m, const std::vector<StateWord>& gens,
                         const std::vector<std::string>& gen_names,
                         const std::vector<StateWord>& images, int n, int mtarget, int radius = 8,
                         std::size_t budget = 10000000);

// Fixed facts about the three-state binary machine with two level-2
// transitive generators: level-2 cycle structure of each state and which
// short products fix level 2.  group_caveat records that equality of these
// finite shadows says nothing about relations in the full group.
struct AleshinLevel2Report {
  std::string p_cycles, q_cycles, r_cycles;
  bool pq_fixes_level2 = false;
  bool rpq_fixes_level2 = false;
  std::string group_caveat;
  std::string to_string() const;
};
AleshinLevel2Report aleshin_level2_report();

// The product of the binary decrement machine and the ternary cycle
// machine: tower of fixed levels for powers of p, failure of the same for
// r, and commutation of the two factors on short words.
struct ProductSwapReport {
  int nmax = 0;
  std::vector<bool> p_tower;  // p^(2^n) fixes level n, n = 1..nmax
  std::vector<bool> r_tower;  // r^(2^n) fixes level 1, n = 1..nmax
  bool factors_commute = true;
  std::string to_string() const;
};
ProductSwapReport product_swap_report(int nmax);

}  // namespace lamptree
