#include "doctest.h"

#include <random>

#include "lamptree/laurent.hpp"
#include "test_util.hpp"

using namespace lamptree;
using testutil::code_of;

namespace {

ZkLaurent rand_laurent(long long k, std::mt19937_64& rng) {
  ZkLaurent out(k);
  for (long long n = -4; n <= 4; ++n)
    if (rng() & 1u) out.set(n, static_cast<long long>(rng() % static_cast<unsigned long long>(k)));
  return out;
}

}  // namespace

TEST_SUITE("laurent") {

TEST_CASE("construction drops zero coefficients and reduces mod k") {
  ZkLaurent a(4, {{0, 5}, {2, 4}, {3, -1}});
  CHECK(a.coeff(0) == 1);
  CHECK(a.coeff(2) == 0);
  CHECK(a.coeff(3) == 3);
  CHECK(a.support_size() == 2);
  CHECK(a.to_string() == "{0:1,3:3}");
  a.set(3, 0);
  CHECK(a.support_size() == 1);
  a.add_to(0, 3);
  CHECK(a.is_zero());
  CHECK(a.to_string() == "{}");
}

TEST_CASE("index bookkeeping") {
  ZkLaurent a(6, {{-2, 1}, {5, 3}});
  CHECK(a.min_index() == -2);
  CHECK(a.max_index() == 5);
  CHECK(laurent_unit(6, -2) == ZkLaurent(6, {{-2, 1}}));
  CHECK(code_of([] { ZkLaurent(6).min_index(); }) == errc::invalid_parameter);
}

TEST_CASE("convolution of small polynomials") {
  ZkLaurent a(4, {{0, 1}, {1, 1}});  // 1 + t
  ZkLaurent b(4, {{0, 1}, {1, 3}});  // 1 - t
  CHECK(a * b == ZkLaurent(4, {{0, 1}, {2, 3}}));
}

TEST_CASE("shift, mirror, scale, negate") {
  ZkLaurent a(5, {{-1, 2}, {3, 4}});
  CHECK(a.shifted(2) == ZkLaurent(5, {{1, 2}, {5, 4}}));
  CHECK(a.mirrored() == ZkLaurent(5, {{1, 2}, {-3, 4}}));
  CHECK(a.scaled(2) == ZkLaurent(5, {{-1, 4}, {3, 3}}));
  CHECK(a.scaled(0).is_zero());
  CHECK((a + a.negated()).is_zero());
}

TEST_CASE("coefficientwise reduction to a divisor modulus") {
  ZkLaurent a(6, {{0, 4}, {1, 3}});
  CHECK(a.reduced(3) == ZkLaurent(3, {{0, 1}}));
  CHECK(a.reduced(2) == ZkLaurent(2, {{1, 1}}));
  CHECK(code_of([&] { a.reduced(4); }) == errc::bad_divisor);
}

TEST_CASE("ring axioms on random data") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 50; ++t) {
    auto a = rand_laurent(6, rng), b = rand_laurent(6, rng), c = rand_laurent(6, rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + b == b + a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - b == a + b.negated());
  }
}

TEST_CASE("mismatched moduli are rejected") {
  ZkLaurent a(4), b(6);
  CHECK(code_of([&] { (void)(a + b); }) == errc::modulus_mismatch);
}

}  // TEST_SUITE
