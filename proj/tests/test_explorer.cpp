#include "doctest.h"

#include <cstdint>
#include <vector>

#include "lamptree/explorer.hpp"
#include "test_util.hpp"

using namespace lamptree;
using testutil::code_of;

TEST_SUITE("explorer") {

TEST_CASE("level tables of the odometer") {
  auto m = adding_machine();
  auto p = parse_state_word(m, "p");
  CHECK(level_table(m, p, 1) == std::vector<uint32_t>{1, 0});
  CHECK(level_table(m, p, 3) == std::vector<uint32_t>{4, 5, 6, 7, 2, 3, 1, 0});
  CHECK(level_table(m, parse_state_word(m, "q"), 3) ==
        std::vector<uint32_t>{0, 1, 2, 3, 4, 5, 6, 7});
}

TEST_CASE("cycle notation") {
  auto m = adding_machine();
  auto p = parse_state_word(m, "p");
  CHECK(cycle_notation(m, level_table(m, p, 1), 1) == "(0 1)");
  CHECK(cycle_notation(m, level_table(m, p, 2), 2) == "(00 10 01 11)");
  CHECK(cycle_notation(m, level_table(m, parse_state_word(m, "q"), 2), 2) == "id");
}

TEST_CASE("odometer level quotients are cyclic of order 2^n") {
  auto m = adding_machine();
  auto p = parse_state_word(m, "p");
  for (int n = 1; n <= 8; ++n) {
    auto q = level_quotient(m, {p}, n);
    CHECK(q.order() == (std::size_t{1} << n));
    CHECK(q.elements[0] == level_table(m, parse_state_word(m, "q"), n));
    REQUIRE(q.generator_images.size() == 1);
    CHECK(q.elements[q.generator_images[0]] == level_table(m, p, n));
  }
  CHECK(level_quotient(m, {p}, 0).order() == 1);
}

TEST_CASE("quotient budget is a hard error") {
  auto m = cayley_machine(3);
  std::vector<StateWord> gens;
  for (int q = 0; q < m.state_count(); ++q) gens.push_back({{q, 1}});
  CHECK(code_of([&] { level_quotient(m, gens, 5, 10); }) == errc::budget_exceeded);
}

TEST_CASE("falsifier finds the shortest witness for the factor swap") {
  auto m = direct_product(decrement_machine(), three_cycle_machine());
  auto p = parse_state_word(m, "p");
  auto r = parse_state_word(m, "r");
  auto res = uc_falsify(m, {p, r}, {"p", "r"}, {r, p}, 1, 1, 4);
  REQUIRE(res.found);
  CHECK(res.witness_text == "p^2");
  CHECK(res.witness == std::vector<int>{0, 0});
  CHECK(res.explored > 0);
}

TEST_CASE("the identity substitution has no witness") {
  auto m = direct_product(decrement_machine(), three_cycle_machine());
  auto p = parse_state_word(m, "p");
  auto r = parse_state_word(m, "r");
  auto res = uc_falsify(m, {p, r}, {"p", "r"}, {p, r}, 1, 1, 4);
  CHECK_FALSE(res.found);
  CHECK(res.witness_text.empty());
}

TEST_CASE("three-state machine level-2 report") {
  auto rep = aleshin_level2_report();
  CHECK(rep.p_cycles == "(00 10 01 11)");
  CHECK(rep.q_cycles == "(00 11 01 10)");
  CHECK(rep.r_cycles == "(00 01)(10 11)");
  CHECK(rep.pq_fixes_level2);
  CHECK_FALSE(rep.rpq_fixes_level2);
  CHECK_FALSE(rep.group_caveat.empty());
  CHECK(rep.to_string().find("(00 10 01 11)") != std::string::npos);
}

TEST_CASE("product machine towers") {
  auto rep = product_swap_report(6);
  REQUIRE(rep.p_tower.size() == 6);
  REQUIRE(rep.r_tower.size() == 6);
  for (bool b : rep.p_tower) CHECK(b);
  for (bool b : rep.r_tower) CHECK_FALSE(b);
  CHECK(rep.factors_commute);
  CHECK_FALSE(rep.to_string().empty());
}

}  // TEST_SUITE
