#include "doctest.h"

#include <algorithm>
#include <string>
#include <vector>

#include "lamptree/lamp_aut.hpp"
#include "lamptree/sampling.hpp"
#include "lamptree/verify.hpp"
#include "test_util.hpp"

using namespace lamptree;
using testutil::code_of;

TEST_SUITE("verify") {

TEST_CASE("block registry is sorted and complete") {
  auto names = verify_block_names();
  CHECK(names.size() == 14);
  CHECK(std::is_sorted(names.begin(), names.end()));
  for (const char* n :
       {"adding-quotients", "aleshin-level2", "automorphism-oracle", "cayley-quotients",
        "decompositions", "depth-preservation", "fixed-points", "identity-suite",
        "inner-continuity", "machine-actions", "mirror", "product-swap", "series-oracle",
        "structure-maps"})
    CHECK(std::find(names.begin(), names.end(), std::string(n)) != names.end());
}

TEST_CASE("fast blocks pass under several seeds") {
  for (uint64_t seed : {1ull, 7ull, 123456789ull})
    for (const char* block :
         {"cayley-quotients", "inner-continuity", "machine-actions", "mirror",
          "structure-maps"}) {
      auto res = run_verify_block(block, seed);
      CHECK(res.block == block);
      CHECK(res.all_pass());
      CHECK_FALSE(res.checks.empty());
      for (const auto& chk : res.checks) {
        CHECK_FALSE(chk.name.empty());
        CHECK_FALSE(chk.anchor.empty());
      }
    }
}

TEST_CASE("results are reproducible for a fixed seed") {
  auto a = run_verify_block("identity-suite", 99);
  auto b = run_verify_block("identity-suite", 99);
  REQUIRE(a.checks.size() == b.checks.size());
  for (std::size_t i = 0; i < a.checks.size(); ++i) {
    CHECK(a.checks[i].name == b.checks[i].name);
    CHECK(a.checks[i].pass == b.checks[i].pass);
    CHECK(a.checks[i].detail == b.checks[i].detail);
  }
}

TEST_CASE("unknown block names are rejected") {
  CHECK(code_of([] { run_verify(1, "no-such-block"); }) == errc::invalid_parameter);
  CHECK(code_of([] { run_verify_block("no-such-block", 1); }) == errc::invalid_parameter);
  CHECK(run_verify(3, "mirror").size() == 1);
}

TEST_CASE("inverse search agrees with the closed form on units") {
  Rng rng(103);
  for (long long k : {2LL, 3LL, 4LL, 6LL, 8LL, 9LL, 12LL})
    for (int t = 0; t < 30; ++t) {
      auto e = random_stab_automorphism(k, rng, 3);
      auto found = convolution_inverse_search(e.i_data());
      REQUIRE(found.has_value());
      CHECK(*found == convolution_inverse(e.i_data()));
    }
}

TEST_CASE("inverse search rejects non-units") {
  CHECK_FALSE(convolution_inverse_search(ZkLaurent(4, {{0, 2}})).has_value());
  CHECK_FALSE(convolution_inverse_search(ZkLaurent(2, {{0, 1}, {1, 1}})).has_value());
  CHECK_FALSE(convolution_inverse_search(ZkLaurent(9, {{0, 3}, {1, 3}})).has_value());
  CHECK_FALSE(convolution_inverse_search(ZkLaurent(6)).has_value());
}

TEST_CASE("inverse search handles supports beyond the input window") {
  ZkLaurent wide(4, {{3, 1}, {-3, 2}});
  auto inv = convolution_inverse_search(wide);
  REQUIRE(inv.has_value());
  CHECK(*inv == ZkLaurent(4, {{-3, 1}, {-9, 2}}));
  CHECK(wide * *inv == laurent_unit(4, 0));
}

TEST_CASE("block result aggregation") {
  BlockResult r;
  r.block = "demo";
  r.checks.push_back({"c1", "a", true, "", 0.0});
  CHECK(r.all_pass());
  r.checks.push_back({"c2", "a", false, "", 0.0});
  CHECK_FALSE(r.all_pass());
}

}  // TEST_SUITE
