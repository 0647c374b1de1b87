#include "doctest.h"

#include <random>
#include <vector>

#include "lamptree/portrait.hpp"
#include "test_util.hpp"

using namespace lamptree;
using testutil::code_of;

namespace {

Portrait random_binary(std::mt19937_64& rng, int depth) {
  Portrait p = Portrait::identity({"0", "1"}, depth);
  std::size_t nodes = 1;
  for (int l = 0; l < depth; ++l) {
    for (std::size_t node = 0; node < nodes; ++node)
      if (rng() & 1u) p.set_local(l, node, {1, 0});
    nodes *= 2;
  }
  return p;
}

}  // namespace

TEST_SUITE("portrait") {

TEST_CASE("serialization of the odometer portrait") {
  auto m = adding_machine();
  auto p = parse_state_word(m, "p");
  CHECK(portrait_of(m, p, 2).serialize() == "- 1 0\n0 0 1\n1 1 0\n");
}

TEST_CASE("portraits reproduce the machine action") {
  auto m = aleshin_machine();
  std::mt19937_64 rng(3);
  for (const char* word : {"p", "q", "r", "p,q-1", "r,r,p"}) {
    auto w = parse_state_word(m, word);
    auto P = portrait_of(m, w, 6);
    for (int t = 0; t < 20; ++t) {
      std::vector<int> word;
      int len = static_cast<int>(rng() % 7);
      for (int i = 0; i < len; ++i) word.push_back(static_cast<int>(rng() % 2));
      CHECK(P.apply(word) == act(m, w, word));
    }
  }
}

TEST_CASE("composition matches word concatenation") {
  auto m = adding_machine();
  auto p = parse_state_word(m, "p");
  auto P = portrait_of(m, p, 5);
  CHECK(P.compose(P) == portrait_of(m, parse_state_word(m, "p,p"), 5));
  CHECK(P.compose(P.inverse()).is_level_identity(5));
  CHECK(P.inverse() == portrait_of(m, parse_state_word(m, "p-1"), 5));
}

TEST_CASE("group laws on random portraits") {
  std::mt19937_64 rng(5);
  auto I = Portrait::identity({"0", "1"}, 4);
  for (int t = 0; t < 25; ++t) {
    auto A = random_binary(rng, 4), B = random_binary(rng, 4), C = random_binary(rng, 4);
    CHECK(A.compose(B).compose(C) == A.compose(B.compose(C)));
    CHECK(A.compose(I) == A);
    CHECK(I.compose(A) == A);
    CHECK(A.compose(A.inverse()) == I);
    std::vector<int> word = {static_cast<int>(rng() % 2), static_cast<int>(rng() % 2)};
    CHECK(A.compose(B).apply(word) == B.apply(A.apply(word)));
  }
}

TEST_CASE("cones are the subtree portraits") {
  auto m = adding_machine();
  auto p = parse_state_word(m, "p");
  auto P = portrait_of(m, p, 4);
  CHECK(P.cone({1}) == portrait_of(m, p, 3));
  CHECK(P.cone({0}) == Portrait::identity(m.alphabet(), 3));
  CHECK(P.cone({1, 1}) == portrait_of(m, p, 2));
  CHECK(P.cone({}) == P);
}

TEST_CASE("mirror conjugates by the bitwise swap") {
  auto m = adding_machine();
  auto p = parse_state_word(m, "p");
  CHECK(portrait_of(m, p, 5).mirror() == portrait_of(m, parse_state_word(m, "p-1"), 5));
  auto c = three_cycle_machine();
  CHECK(code_of([&] { portrait_of(c, parse_state_word(c, "r"), 2).mirror(); }) ==
        errc::non_binary_alphabet);
}

TEST_CASE("depth distance") {
  auto m = adding_machine();
  auto P1 = portrait_of(m, parse_state_word(m, "p"), 6);
  auto P2 = portrait_of(m, parse_state_word(m, "p,p"), 6);
  auto I = Portrait::identity(m.alphabet(), 6);
  auto d1 = depth_distance(P1, I);
  CHECK(d1.determinate);
  CHECK(d1.to_string() == "2^-1");
  CHECK(d1.value() == 0.5);
  auto d2 = depth_distance(P2, I);
  CHECK(d2.to_string() == "2^-2");
  CHECK(d2.value() == 0.25);
  auto same = depth_distance(P1, P1);
  CHECK_FALSE(same.determinate);
  CHECK(same.to_string() == "<=2^-6");
}

TEST_CASE("shape and input validation") {
  auto m = adding_machine();
  auto P = portrait_of(m, parse_state_word(m, "p"), 3);
  CHECK(code_of([&] { P.apply({0, 1, 0, 1}); }) == errc::word_too_long);
  CHECK(code_of([&] { P.set_local(0, 0, {1, 1}); }) == errc::invalid_parameter);
  auto Q = portrait_of(m, parse_state_word(m, "p"), 2);
  CHECK(code_of([&] { (void)depth_distance(P, Q); }) == errc::depth_mismatch);
}

}  // TEST_SUITE
