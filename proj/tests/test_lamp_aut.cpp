#include "doctest.h"

#include <vector>

#include "lamptree/lamp_aut.hpp"
#include "lamptree/sampling.hpp"
#include "test_util.hpp"

using namespace lamptree;
using testutil::code_of;

TEST_SUITE("lamp-aut") {

TEST_CASE("generator data") {
  CHECK(gen_lambda(4).i_data() == ZkLaurent(4, {{1, 1}}));
  CHECK(gen_lambda(4).alpha_image().to_string() == "b(1)");
  CHECK(gen_eta(5, 2).i_data() == ZkLaurent(5, {{0, 2}}));
  CHECK(gen_gamma(5, 2, 3).i_data() == ZkLaurent(5, {{2, 3}}));
  CHECK(gen_delta(4, 1, 2).i_data() == ZkLaurent(4, {{0, 1}, {1, 2}}));
  CHECK(gen_iota(3) == LampEndo(laurent_unit(3, 0), laurent_unit(3, 0), 1));
  CHECK(gen_zeta(3).r() == -1);
  CHECK(gen_zeta(3).j_data().is_zero());
  CHECK(LampEndo::identity(6).in_stab());
  CHECK(gen_lambda(6).to_string() == "endo k=6 r=1 i={1:1} j={}");
}

TEST_CASE("generator validation") {
  CHECK(code_of([] { gen_eta(4, 2); }) == errc::invalid_unit);
  CHECK(code_of([] { gen_gamma(6, 1, 3); }) == errc::invalid_unit);
  CHECK(code_of([] { gen_delta(4, 1, 1); }) == errc::invalid_parameter);
  CHECK(code_of([] { gen_delta(4, 0, 2); }) == errc::invalid_parameter);
  CHECK(code_of([] { gen_rho(12, 1); }) == errc::not_squarefree);
  CHECK(code_of([] { gen_rho(6, 3); }) == errc::invalid_parameter);
}

TEST_CASE("application to elements") {
  CHECK(endo_apply(gen_lambda(2), parse_lamp(2, "a*x")) == parse_lamp(2, "b(1)*x"));
  CHECK(endo_apply(gen_iota(2), lamp_xi(2)) == parse_lamp(2, "a*x"));
  CHECK(endo_apply(gen_zeta(3), lamp_xi(3)) == lamp_xi(3).inverse());
  CHECK(endo_apply(gen_zeta(3), lamp_alpha(3)) == lamp_alpha(3));
  CHECK(endo_apply(gen_eta(5, 2), lamp_alpha(5)) == lamp_alpha(5).pow(2));
  CHECK(endo_apply(gen_lambda(4), lamp_beta(4, 3)) == lamp_beta(4, 4));
  CHECK(code_of([] { endo_apply(gen_lambda(2), lamp_alpha(3)); }) == errc::modulus_mismatch);
}

TEST_CASE("composition agrees with sequential application") {
  Rng rng(53);
  for (long long k : {2LL, 6LL})
    for (int t = 0; t < 60; ++t) {
      auto e1 = random_endo(k, rng, 3);
      auto e2 = random_endo(k, rng, 3);
      auto g = random_element(k, rng, 3, 2);
      CHECK(endo_apply(endo_compose(e1, e2), g) == endo_apply(e2, endo_apply(e1, g)));
    }
}

TEST_CASE("endomorphisms respect multiplication") {
  Rng rng(59);
  for (long long k : {2LL, 4LL, 9LL})
    for (int t = 0; t < 60; ++t) {
      auto e = random_endo(k, rng, 3);
      auto g = random_element(k, rng, 3, 2);
      auto h = random_element(k, rng, 3, 2);
      CHECK(endo_apply(e, g * h) == endo_apply(e, g) * endo_apply(e, h));
    }
}

TEST_CASE("automorphism detection") {
  CHECK(is_automorphism(gen_lambda(6)).ok);
  CHECK(is_automorphism(gen_iota(4)).ok);
  CHECK(is_automorphism(gen_zeta(9)).ok);
  auto bad_r = is_automorphism(LampEndo(laurent_unit(4, 0), ZkLaurent(4), 2));
  CHECK_FALSE(bad_r.ok);
  CHECK_FALSE(bad_r.reason.empty());
  auto bad_i = is_automorphism(LampEndo(ZkLaurent(2, {{0, 1}, {1, 1}}), ZkLaurent(2), 1));
  CHECK_FALSE(bad_i.ok);
  // a unit monomial plus nilpotent noise stays invertible: 1 + 2t over Z_4
  CHECK(is_automorphism(LampEndo(ZkLaurent(4, {{0, 1}, {1, 2}}), ZkLaurent(4), 1)).ok);
}

TEST_CASE("closed-form convolution inverse") {
  ZkLaurent i(4, {{0, 3}, {1, 2}});
  CHECK(i * i == laurent_unit(4, 0));
  CHECK(convolution_inverse(i) == i);
  CHECK(convolution_inverse(laurent_unit(6, 5)) == laurent_unit(6, -5));
  CHECK(code_of([] { convolution_inverse(ZkLaurent(4, {{0, 2}})); }) == errc::invalid_unit);
  Rng rng(61);
  for (long long k : {2LL, 3LL, 4LL, 6LL, 8LL, 9LL, 12LL})
    for (int t = 0; t < 40; ++t) {
      auto e = random_stab_automorphism(k, rng, 3);
      CHECK(e.i_data() * convolution_inverse(e.i_data()) == laurent_unit(k, 0));
    }
}

TEST_CASE("inversion round trips") {
  Rng rng(67);
  for (long long k : {2LL, 4LL, 6LL, 9LL, 12LL})
    for (int t = 0; t < 40; ++t) {
      auto e = random_positive_automorphism(k, rng, 3);
      auto inv = endo_invert(e);
      CHECK(endo_compose(e, inv) == LampEndo::identity(k));
      CHECK(endo_compose(inv, e) == LampEndo::identity(k));
      CHECK(endo_invert(inv) == e);
    }
  CHECK(endo_invert(gen_zeta(5)) == gen_zeta(5));
  CHECK(endo_invert(gen_iota(3)) == LampEndo(laurent_unit(3, 0), ZkLaurent(3, {{0, 2}}), 1));
  CHECK(code_of([] { endo_invert(LampEndo(laurent_unit(4, 0), ZkLaurent(4), 2)); }) ==
        errc::not_an_automorphism);
}

TEST_CASE("iterated composition") {
  CHECK(endo_pow(gen_lambda(5), 3).i_data() == laurent_unit(5, 3));
  CHECK(endo_pow(gen_lambda(5), 0) == LampEndo::identity(5));
  CHECK(endo_pow(gen_lambda(5), -2) == endo_invert(endo_pow(gen_lambda(5), 2)));
  CHECK(endo_pow(gen_zeta(4), 2) == LampEndo::identity(4));
  CHECK(code_of([] { endo_pow(LampEndo(laurent_unit(4, 0), ZkLaurent(4), 0), -1); }) ==
        errc::not_an_automorphism);
}

TEST_CASE("prime decomposition is a single gamma") {
  for (long long k : {2LL, 3LL, 5LL, 7LL}) {
    Rng rng(71 + static_cast<uint64_t>(k));
    for (int t = 0; t < 40; ++t) {
      auto e = random_stab_automorphism(k, rng, 4);
      auto dec = decompose_stab_prime(e);
      CHECK(gen_gamma(k, dec.m, dec.j) == e);
    }
  }
  CHECK(code_of([] { decompose_stab_prime(gen_lambda(4)); }) == errc::not_prime);
  CHECK(code_of([] { decompose_stab_prime(gen_iota(3)); }) == errc::not_in_stab);
}

TEST_CASE("prime power decomposition recomposes exactly") {
  for (long long k : {4LL, 8LL, 9LL, 27LL}) {
    Rng rng(73 + static_cast<uint64_t>(k));
    for (int t = 0; t < 30; ++t) {
      auto e = random_stab_automorphism(k, rng, 3);
      auto word = decompose_stab_prime_power(e);
      CHECK(recompose_stab(k, word) == e);
    }
  }
  auto e = endo_compose(gen_eta(4, 3), gen_delta(4, 1, 2));
  auto word = decompose_stab_prime_power(e);
  REQUIRE(word.size() == 2);
  CHECK(word[0].to_string() == "eta(3)");
  CHECK(word[1].to_string() == "delta(1,2)");
  CHECK(decompose_stab_prime_power(LampEndo::identity(8)).empty());
  CHECK(code_of([] { decompose_stab_prime_power(gen_lambda(6)); }) == errc::not_prime_power);
}

TEST_CASE("squarefree decomposition recomposes exactly") {
  for (long long k : {6LL, 10LL, 15LL, 30LL}) {
    Rng rng(79 + static_cast<uint64_t>(k));
    for (int t = 0; t < 30; ++t) {
      auto e = random_stab_automorphism(k, rng, 3);
      auto dec = decompose_stab_squarefree(e);
      LampEndo acc = gen_eta(k, dec.j);
      for (std::size_t l = 0; l < dec.primes.size(); ++l)
        acc = endo_compose(acc,
                           endo_pow(gen_rho(k, static_cast<int>(l) + 1), dec.rho_exponents[l]));
      CHECK(acc == e);
    }
  }
  auto dec6 = decompose_stab_squarefree(gen_lambda(6));
  CHECK(dec6.j == 1);
  CHECK(dec6.primes == std::vector<long long>{2, 3});
  CHECK(dec6.rho_exponents == std::vector<long long>{1, 1});
  auto e15 = endo_compose(endo_pow(gen_rho(15, 1), 2), gen_eta(15, 2));
  auto dec15 = decompose_stab_squarefree(e15);
  CHECK(dec15.j == 2);
  CHECK(dec15.rho_exponents == std::vector<long long>{2, 0});
  CHECK(code_of([] { decompose_stab_squarefree(gen_lambda(4)); }) == errc::not_squarefree);
}

TEST_CASE("decomposition word entries print as generator calls") {
  StabWordEntry l{StabWordEntry::Kind::lambda, 2, 0, 0};
  StabWordEntry e{StabWordEntry::Kind::eta, 1, 0, 3};
  StabWordEntry d{StabWordEntry::Kind::delta, 1, 2, 4};
  CHECK(l.to_string() == "lambda^2");
  CHECK(e.to_string() == "eta(3)");
  CHECK(d.to_string() == "delta(2,4)");
}

TEST_CASE("projection onto the x-fixing part") {
  Rng rng(83);
  for (int t = 0; t < 40; ++t) {
    auto e = random_positive_automorphism(6, rng, 3);
    auto s = stab_projection(e);
    CHECK(s.in_stab());
    CHECK(s.i_data() == e.i_data());
  }
  CHECK(code_of([] { stab_projection(gen_zeta(4)); }) == errc::not_positive_automorphism);
}

TEST_CASE("element embedding into the automorphisms") {
  CHECK(psi_embed(lamp_alpha(2)) == gen_iota(2));
  CHECK(psi_embed(lamp_alpha(6)) == gen_iota(6));
  auto e = psi_embed(lamp_xi(3));
  CHECK(e.i_data() == laurent_unit(3, -1));
  CHECK(e.j_data().is_zero());
  CHECK(e.r() == 1);
  Rng rng(89);
  for (long long k : {2LL, 6LL})
    for (int t = 0; t < 50; ++t) {
      auto x = random_element(k, rng, 3, 3);
      auto y = random_element(k, rng, 3, 3);
      CHECK(psi_embed(x * y) == endo_compose(psi_embed(x), psi_embed(y)));
      CHECK(is_automorphism(psi_embed(x)).ok);
    }
}

TEST_CASE("modulus reduction and coprime embedding") {
  CHECK(reduce_modulus(gen_delta(12, 1, 6), 4) == gen_delta(4, 1, 2));
  CHECK(reduce_modulus(gen_delta(12, 1, 6), 3) == LampEndo::identity(3));
  CHECK(code_of([] { reduce_modulus(gen_lambda(6), 4); }) == errc::bad_divisor);
  CHECK(code_of([] { reduce_modulus(gen_lambda(12), 2); }) == errc::bad_divisor);
  CHECK(embed_element(lamp_alpha(2), 3) == lamp_beta(6, 0, 3));
  Rng rng(97);
  for (int t = 0; t < 40; ++t) {
    auto g = random_element(2, rng, 3, 2);
    auto h = random_element(2, rng, 3, 2);
    CHECK(embed_element(g * h, 3) == embed_element(g, 3) * embed_element(h, 3));
    if (!(g == h)) CHECK_FALSE(embed_element(g, 3) == embed_element(h, 3));
  }
  CHECK(code_of([] { embed_element(lamp_alpha(2), 2); }) == errc::not_coprime);
}

TEST_CASE("fixed points of conjugation by the origin lamp") {
  LampEndo theta(laurent_unit(2, 0), ZkLaurent(2, {{0, 1}, {1, 1}}), 1);
  CHECK(is_automorphism(theta).ok);
  CHECK(is_fixed(theta, lamp_alpha(2)));
  CHECK(is_fixed(theta, lamp_beta(2, 4)));
  CHECK_FALSE(is_fixed(theta, lamp_xi(2)));
  CHECK_FALSE(is_fixed(theta, lamp_xi(2).pow(3)));
  auto fixed = fix_sample(theta, 4);
  CHECK_FALSE(fixed.empty());
  bool has_alpha = false;
  for (const auto& g : fixed) {
    CHECK(g.is_torsion());
    has_alpha = has_alpha || g == lamp_alpha(2);
  }
  CHECK(has_alpha);
}

TEST_CASE("depth preservation sampling") {
  auto rep_eta = check_depth_preservation(gen_eta(3, 2), 0, 200, 10, 5);
  CHECK(rep_eta.samples == 200);
  CHECK(rep_eta.violations == 0);
  auto rep_iota = check_depth_preservation(gen_iota(2), 1, 200, 10, 5);
  CHECK(rep_iota.violations == 0);
  auto rep_zeta = check_depth_preservation(gen_zeta(6), 0, 200, 10, 5);
  CHECK(rep_zeta.violations == 0);
}

TEST_CASE("expression parsing") {
  CHECK(parse_endo(6, "lambda") == gen_lambda(6));
  CHECK(parse_endo(6, "lambda^-2") == endo_pow(gen_lambda(6), -2));
  CHECK(parse_endo(4, "eta(3)*delta(1,2)") == endo_compose(gen_eta(4, 3), gen_delta(4, 1, 2)));
  CHECK(parse_endo(15, "rho(2)^3*iota") ==
        endo_compose(endo_pow(gen_rho(15, 2), 3), gen_iota(15)));
  CHECK(parse_endo(2, "endo k=2 r=1 i={0:1} j={}") == LampEndo::identity(2));
  Rng rng(101);
  for (long long k : {2LL, 6LL, 12LL})
    for (int t = 0; t < 40; ++t) {
      auto e = random_endo(k, rng, 3);
      CHECK(parse_endo(k, e.to_string()) == e);
    }
  CHECK(code_of([] { parse_endo(4, "endo k=6 r=1 i={} j={}"); }) == errc::modulus_mismatch);
  CHECK(code_of([] { parse_endo(4, "bogus"); }) == errc::parse_error);
}

}  // TEST_SUITE
