#include "doctest.h"

#include <algorithm>
#include <vector>

#include "lamptree/lamp.hpp"
#include "lamptree/sampling.hpp"
#include "test_util.hpp"

using namespace lamptree;
using testutil::code_of;

TEST_SUITE("lamp") {

TEST_CASE("normal form printing and parsing") {
  CHECK(lamp_identity(3).to_string() == "1");
  CHECK(lamp_beta(2, 1).to_string() == "b(1)");
  CHECK((lamp_alpha(3).pow(2) * lamp_xi(3).pow(2)).to_string() == "b(0)^2 x^2");
  CHECK(lamp_xi(4).to_string() == "x");
  CHECK(parse_lamp(2, "x*a*x-1") == lamp_beta(2, 1));
  CHECK(parse_lamp(2, "a^2").is_identity());
  CHECK(parse_lamp(6, "b(2)^-1") == lamp_beta(6, 2, 5));
  CHECK(parse_lamp(4, "1") == lamp_identity(4));
  CHECK(code_of([] { parse_lamp(2, "y"); }) == errc::parse_error);
  CHECK(code_of([] { parse_lamp(2, "b("); }) == errc::parse_error);
}

TEST_CASE("printing round trips through the parser") {
  Rng rng(17);
  for (long long k : {2LL, 3LL, 6LL})
    for (int t = 0; t < 50; ++t) {
      auto g = random_element(k, rng, 4, 4);
      CHECK(parse_lamp(k, g.to_string()) == g);
    }
}

TEST_CASE("defining relations") {
  for (long long k : {2LL, 3LL, 4LL, 6LL}) {
    CHECK(lamp_alpha(k).pow(k).is_identity());
    CHECK(lamp_xi(k).pow(3) * lamp_alpha(k) * lamp_xi(k).pow(-3) == lamp_beta(k, 3));
    CHECK(lamp_xi(k) * lamp_beta(k, 1) * lamp_xi(k).inverse() == lamp_beta(k, 2));
    CHECK(lamp_beta(k, 0) * lamp_beta(k, 5) == lamp_beta(k, 5) * lamp_beta(k, 0));
  }
}

TEST_CASE("group axioms on random elements") {
  Rng rng(23);
  for (long long k : {2LL, 6LL})
    for (int t = 0; t < 100; ++t) {
      auto g = random_element(k, rng, 4, 3);
      auto h = random_element(k, rng, 4, 3);
      auto f = random_element(k, rng, 4, 3);
      CHECK((g * h) * f == g * (h * f));
      CHECK((g * g.inverse()).is_identity());
      CHECK((g * h).inverse() == h.inverse() * g.inverse());
      CHECK(g.pow(3) == g * g * g);
      CHECK(g.pow(-2) == g.inverse() * g.inverse());
    }
}

TEST_CASE("action on words, small cases") {
  CHECK(act_word(lamp_alpha(2), {1, 1}) == std::vector<long long>{0, 1});
  CHECK(act_word(lamp_beta(2, 1), {0, 0}) == std::vector<long long>{1, 1});
  CHECK(act_word(lamp_xi(3), {1, 0, 0}) == std::vector<long long>{1, 1, 1});
  CHECK(act_word(lamp_xi(2), {1, 1, 0}) == std::vector<long long>{1, 0, 0});
  CHECK(act_word(lamp_identity(5), {4, 2, 0}) == std::vector<long long>{4, 2, 0});
  CHECK(code_of([] { act_word(lamp_alpha(3), {3}); }) == errc::symbol_out_of_range);
}

TEST_CASE("series form of the action") {
  auto img = act_series(lamp_xi(2), TruncSeries(2, {1, 1, 0}));
  CHECK(img == TruncSeries(2, {1, 0, 0}));
}

TEST_CASE("actions compose in word order") {
  Rng rng(31);
  for (long long k : {2LL, 4LL})
    for (int t = 0; t < 60; ++t) {
      auto g = random_element(k, rng, 3, 2);
      auto h = random_element(k, rng, 3, 2);
      std::vector<long long> w;
      for (int i = 0; i < 8; ++i) w.push_back(rand_range(rng, 0, k - 1));
      auto img = act_word(g, w);
      CHECK(img.size() == w.size());
      CHECK(act_word(g * h, w) == act_word(h, img));
      CHECK(act_word(g.inverse(), img) == w);
      // prefixes map to prefixes
      std::vector<long long> pre(w.begin(), w.begin() + 4);
      auto imgpre = act_word(g, pre);
      for (int i = 0; i < 4; ++i) CHECK(img[static_cast<std::size_t>(i)] ==
                                        imgpre[static_cast<std::size_t>(i)]);
    }
}

TEST_CASE("stabilized length, small cases") {
  CHECK_FALSE(stab_length(lamp_identity(2)).has_value());
  CHECK(stab_length(lamp_alpha(2)) == 0);
  CHECK(stab_length(lamp_xi(2)) == 1);
  CHECK(stab_length(lamp_xi(2).pow(2)) == 2);
  CHECK(stab_length(lamp_alpha(2) * lamp_beta(2, 1)) == 1);
  CHECK(stab_length(lamp_beta(3, 4)) == 0);
}

TEST_CASE("stab length certificates") {
  Rng rng(41);
  for (long long k : {2LL, 6LL})
    for (int t = 0; t < 80; ++t) {
      auto g = random_element(k, rng, 4, 3);
      auto L = stab_length(g);
      if (!L) {
        CHECK(g.is_identity());
        continue;
      }
      // every sampled word of the stabilized length is fixed
      for (int s = 0; s < 5; ++s) {
        std::vector<long long> w;
        for (long long i = 0; i < *L; ++i) w.push_back(rand_range(rng, 0, k - 1));
        CHECK(act_word(g, w) == w);
      }
      // some constant word one letter longer moves
      bool moved = false;
      for (long long c = 0; c <= 2 && !moved; ++c) {
        std::vector<long long> w(static_cast<std::size_t>(*L + 1), 0);
        w[0] = c % k;
        moved = act_word(g, w) != w;
      }
      CHECK(moved);
      // conjugation by the shift preserves the stabilized length
      auto conj = lamp_xi(k) * g * lamp_xi(k).inverse();
      if (g.is_torsion()) CHECK(stab_length(conj) == L);
    }
}

TEST_CASE("dyadic distance values") {
  auto d = lamp_distance(lamp_xi(2).pow(2), lamp_identity(2));
  CHECK(d.to_string() == "2^-3");
  CHECK(d.value() == 0.125);
  CHECK(lamp_distance(lamp_alpha(3), lamp_alpha(3)).zero);
  CHECK(lamp_distance(lamp_alpha(3), lamp_alpha(3)).to_string() == "0");
  CHECK(lamp_distance(lamp_alpha(2), lamp_identity(2)).to_string() == "2^-1");
}

TEST_CASE("distance is an invariant ultrametric") {
  Rng rng(43);
  auto d = [](const LampElement& a, const LampElement& b) {
    auto v = lamp_distance(a, b);
    return v.zero ? 0.0 : v.value();
  };
  for (int t = 0; t < 60; ++t) {
    auto g = random_element(2, rng, 3, 2);
    auto h = random_element(2, rng, 3, 2);
    auto f = random_element(2, rng, 3, 2);
    CHECK(d(g, h) == d(h, g));
    CHECK(d(f * g, f * h) == d(g, h));
    CHECK(d(g, f) <= std::max(d(g, h), d(h, f)));
  }
}

TEST_CASE("element orders") {
  CHECK(lamp_order(lamp_identity(4)) == 1);
  CHECK(lamp_order(lamp_alpha(6)) == 6);
  CHECK(lamp_order(lamp_beta(6, 0, 2)) == 3);
  CHECK(lamp_order(lamp_beta(6, 0, 2) * lamp_beta(6, 3, 3)) == 6);
  CHECK_FALSE(lamp_order(lamp_xi(2)).has_value());
  Rng rng(47);
  for (long long k : {4LL, 6LL})
    for (int t = 0; t < 30; ++t) {
      auto g = random_element(k, rng, 3, 0);
      auto o = lamp_order(g);
      REQUIRE(o.has_value());
      CHECK(g.pow(*o).is_identity());
      CHECK(k % *o == 0);
    }
}

TEST_CASE("level action counts") {
  CHECK(level_action_count(2, 0) == 1);
  CHECK(level_action_count(2, 1) == 2);
  CHECK(level_action_count(2, 2) == 8);
  CHECK(level_action_count(2, 3) == 32);
  CHECK(level_action_count(2, 4) == 64);
  CHECK(level_action_count(2, 5) == 256);
  CHECK(level_action_count(3, 2) == 27);
}

}  // TEST_SUITE
