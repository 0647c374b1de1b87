#include "doctest.h"

#include <string>
#include <vector>

#include "lamptree/mealy.hpp"
#include "test_util.hpp"

using namespace lamptree;
using testutil::code_of;
using testutil::slurp;

namespace {

std::string machine_path(const char* name) {
  return std::string(LAMPTREE_MACHINE_DIR) + "/" + name;
}

}  // namespace

TEST_SUITE("mealy") {

TEST_CASE("checked-in machine files are exactly the built-in machines") {
  CHECK(slurp(machine_path("adding.mealy")) == adding_machine().to_text());
  CHECK(slurp(machine_path("decrement.mealy")) == decrement_machine().to_text());
  CHECK(slurp(machine_path("aleshin.mealy")) == aleshin_machine().to_text());
  CHECK(slurp(machine_path("cayley2.mealy")) == cayley_machine(2).to_text());
  CHECK(slurp(machine_path("cayley3.mealy")) == cayley_machine(3).to_text());
  CHECK(slurp(machine_path("three_cycle.mealy")) == three_cycle_machine().to_text());
  CHECK(slurp(machine_path("product_swap.mealy")) ==
        direct_product(decrement_machine(), three_cycle_machine()).to_text());
}

TEST_CASE("text round trip") {
  for (const auto& m :
       {adding_machine(), aleshin_machine(), cayley_machine(3), three_cycle_machine()}) {
    auto r = MealyMachine::parse(m.to_text());
    CHECK(r.to_text() == m.to_text());
  }
}

TEST_CASE("parser accepts comments and rejects incomplete tables") {
  auto m = MealyMachine::parse(
      "# odometer\nalphabet 0 1\nstates p q\n"
      "trans p 0 q 1\ntrans p 1 p 0\ntrans q 0 q 0\ntrans q 1 q 1\n");
  CHECK(m.alphabet_size() == 2);
  CHECK(m.state_count() == 2);
  CHECK(code_of([] { MealyMachine::parse("alphabet 0 1\nstates p\ntrans p 0 p 1\n"); }) ==
        errc::parse_error);
  CHECK(code_of([] { MealyMachine::parse("states p\ntrans p 0 p 0\n"); }) == errc::parse_error);
}

TEST_CASE("odometer actions") {
  auto m = adding_machine();
  auto p = parse_state_word(m, "p");
  CHECK(format_word(m, act(m, p, parse_input_word(m, "11"))) == "00");
  CHECK(format_word(m, act(m, p, parse_input_word(m, "000"))) == "100");
  CHECK(format_word(m, act(m, p, parse_input_word(m, "101"))) == "011");
  auto strs = act(m, p, std::vector<std::string>{"1", "1"});
  CHECK(strs == std::vector<std::string>{"0", "0"});
}

TEST_CASE("inverse letters undo the action") {
  auto m = adding_machine();
  auto p = parse_state_word(m, "p");
  auto pinv = parse_state_word(m, "p-1");
  auto w = parse_input_word(m, "110010");
  CHECK(act(m, pinv, act(m, p, w)) == w);
  CHECK(word_is_identity(m, parse_state_word(m, "p,p-1"), 100));
}

TEST_CASE("inverted machine computes the inverse action") {
  auto m = decrement_machine();
  REQUIRE(m.is_invertible());
  auto inv = m.inverted();
  auto p = parse_state_word(m, "p");
  auto w = parse_input_word(m, "0110");
  CHECK(act(inv, p, act(m, p, w)) == w);
}

TEST_CASE("non-invertible machines are detected") {
  auto m = MealyMachine::parse("alphabet 0 1\nstates p\ntrans p 0 p 0\ntrans p 1 p 0\n");
  CHECK_FALSE(m.is_invertible());
  CHECK(code_of([&] { m.inverted(); }) == errc::not_invertible);
  CHECK(code_of([&] { act(m, {{0, -1}}, std::vector<int>{0}); }) == errc::not_invertible);
}

TEST_CASE("identity decision and its budget") {
  auto m = adding_machine();
  CHECK_FALSE(word_is_identity(m, parse_state_word(m, "p")));
  CHECK(word_is_identity(m, parse_state_word(m, "q")));
  CHECK(code_of([&] { word_is_identity(m, parse_state_word(m, "p,p-1"), 1); }) ==
        errc::state_budget_exceeded);
}

TEST_CASE("level fixing of odometer powers") {
  auto m = adding_machine();
  auto p2 = parse_state_word(m, "p,p");
  CHECK(word_fixes_level(m, p2, 1));
  CHECK_FALSE(word_fixes_level(m, p2, 2));
  StateWord p16(16, {m.state_index("p"), 1});
  CHECK(word_fixes_level(m, p16, 4));
  CHECK_FALSE(word_fixes_level(m, p16, 5));
}

TEST_CASE("state word parsing and formatting") {
  auto m = aleshin_machine();
  auto w = parse_state_word(m, "p,q-1,r");
  REQUIRE(w.size() == 3);
  CHECK(w[1].exponent == -1);
  CHECK(format_state_word(m, w) == "p,q-1,r");
  CHECK(code_of([&] { parse_state_word(m, "p,zz"); }) == errc::invalid_parameter);
}

TEST_CASE("direct product renames the second factor on collision") {
  ProductRenaming ren;
  auto prod = direct_product(adding_machine(), adding_machine(), &ren);
  REQUIRE(ren.symbols.size() == 2);
  CHECK(ren.symbols[0].second == "0_2");
  REQUIRE(ren.states.size() == 2);
  CHECK(ren.states[0].second == "p_2");
  auto w = parse_state_word(prod, "p_2");
  auto img = act(prod, w, std::vector<std::string>{"0", "0_2"});
  CHECK(img == std::vector<std::string>{"0", "1_2"});
}

TEST_CASE("product of disjoint machines keeps names") {
  ProductRenaming ren;
  auto prod = direct_product(decrement_machine(), three_cycle_machine(), &ren);
  CHECK(ren.symbols.empty());
  CHECK(ren.states.empty());
  CHECK(prod.alphabet_size() == 5);
  CHECK(prod.state_count() == 4);
  auto r = parse_state_word(prod, "r");
  CHECK(format_word(prod, act(prod, r, parse_input_word(prod, "44"))) == "24");
}

TEST_CASE("dot export names the graph") {
  auto dot = aleshin_machine().to_dot();
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("p") != std::string::npos);
}

}  // TEST_SUITE
