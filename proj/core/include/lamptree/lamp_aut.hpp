#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lamptree/lamp.hpp"

namespace lamptree {

// Endomorphism of Z_k wr Z, stored by what it does to the two generators:
//   a |-> prod_n b(n)^{i[n]},      x |-> (prod_n b(n)^{j[n]}) x^r.
// Applying it to arbitrary elements and composing are exact; automorphisms
// are exactly the endos with r = +-1 whose i data reduces to a single
// monomial mod every prime of k.
class LampEndo {
public:
  LampEndo(ZkLaurent i, ZkLaurent j, long long r);
  static LampEndo identity(long long k);

  long long modulus() const { return i_.modulus(); }
  const ZkLaurent& i_data() const { return i_; }
  const ZkLaurent& j_data() const { return j_; }
  long long r() const { return r_; }

  LampElement alpha_image() const { return LampElement(i_, 0); }
  LampElement xi_image() const { return LampElement(j_, r_); }
  bool in_stab() const { return j_.is_zero() && r_ == 1; }  // fixes x

  bool operator==(const LampEndo& o) const = default;
  std::string to_string() const;  // "endo k=.. r=.. i={..} j={..}"

private:
  ZkLaurent i_, j_;
  long long r_;
};

LampElement endo_apply(const LampEndo& e, const LampElement& g);
// Composition in application order: apply e1 first, then e2.
LampEndo endo_compose(const LampEndo& e1, const LampEndo& e2);
// Iterated composition; negative powers invert (automorphisms only).
LampEndo endo_pow(const LampEndo& e, long long n);

struct AutCheck {
  bool ok = false;
  std::string reason;
};
AutCheck is_automorphism(const LampEndo& e);

// Convolution inverse of Laurent data that is a unit (single monomial mod
// every prime of k): per prime power, peel the monomial and invert the
// remaining 1 + nilpotent by a finite geometric series, then recombine with
// CRT.  errc::invalid_unit when no inverse exists.
ZkLaurent convolution_inverse(const ZkLaurent& i);

LampEndo endo_invert(const LampEndo& e);  // errc::not_an_automorphism

// Automorphism generators (the names match the CLI expression syntax).
LampEndo gen_lambda(long long k);                           // a -> b(1)
LampEndo gen_eta(long long k, long long j);                 // a -> a^j
LampEndo gen_gamma(long long k, long long m, long long j);  // a -> b(m)^j
LampEndo gen_delta(long long k, long long m, long long c);  // a -> a b(m)^c
LampEndo gen_rho(long long k, int ell);  // squarefree k; ell-th prime factor
LampEndo gen_iota(long long k);          // a -> a, x -> a x
LampEndo gen_zeta(long long k);          // a -> a, x -> x^-1

// --- decompositions of automorphisms fixing x (j = 0, r = +1) ---

struct PrimeStabDecomposition {
  long long m = 0;
  long long j = 1;  // e = gamma(m, j)
};
PrimeStabDecomposition decompose_stab_prime(const LampEndo& e);

struct StabWordEntry {
  enum class Kind { lambda, eta, delta } kind = Kind::lambda;
  long long exponent = 1;  // lambda power
  long long m = 0, c = 0;  // eta: c is the unit; delta: index m, coefficient c
  std::string to_string() const;
  bool operator==(const StabWordEntry&) const = default;
};
// Product (left to right) of lambda powers, eta and delta generators equal
// to e.  errc::iteration_budget_exceeded if the reduction fails to settle
// within 64 * s * support budget steps (which would be a defect).
std::vector<StabWordEntry> decompose_stab_prime_power(const LampEndo& e);
LampEndo recompose_stab(long long k, const std::vector<StabWordEntry>& word);

struct SquarefreeStabDecomposition {
  long long j = 1;                       // e = eta(j) * prod_l rho_l^{m_l}
  std::vector<long long> primes;         // ascending prime factors of k
  std::vector<long long> rho_exponents;  // m_l, aligned with primes
};
SquarefreeStabDecomposition decompose_stab_squarefree(const LampEndo& e);

// --- structure maps ---

// Forget what happens to x: (i, j, r=1) -> (i, 0, 1).  Defined for
// automorphisms with r = +1; a homomorphism onto the x-fixing subgroup.
LampEndo stab_projection(const LampEndo& e);

// The automorphism attached to a group element g = (prod b(n)^{c_n}) x^r:
// i = {-r:1}, j[n] = c[n+r], r' = 1.  Realizes g's conjugation-like action;
// an injective homomorphism from the group into its automorphisms.
LampEndo psi_embed(const LampElement& g);

// Coefficientwise reduction of an x-fixing endo into Z_u, for u | k with
// gcd(u, k/u) = 1.
LampEndo reduce_modulus(const LampEndo& e, long long u);

// Injective homomorphism L_u -> L_{u*v} for gcd(u, v) = 1: scales every
// lamp exponent by v and keeps the shift.
LampElement embed_element(const LampElement& g, long long v);

bool is_fixed(const LampEndo& e, const LampElement& g);
// All distinct elements expressible as words of length <= radius over
// {a, a^-1, x, x^-1} that e fixes, in deterministic order.
std::vector<LampElement> fix_sample(const LampEndo& e, int radius);

// Samples random elements g with finite stab_length <= lmax and checks
// stab_length(g e) >= stab_length(g) - allowance.  allowance 0 for x-fixing
// automorphisms and zeta, 1 for iota, and the iota-factor count for mixed
// compositions.
struct DepthPreservationReport {
  long long samples = 0;
  long long violations = 0;
  std::vector<std::string> details;  // first few violations
};
DepthPreservationReport check_depth_preservation(const LampEndo& e, long long allowance,
                                                 int samples, long long lmax, uint64_t seed);

// Expression parser: named generators with optional integer exponents,
// joined by '*' (e.g. "eta(3)*delta(1,2)", "lambda^-2*iota"), or a raw
// "endo k=.. r=.. i={n:c,...} j={n:c,...}" literal.
LampEndo parse_endo(long long k, std::string_view text);

}  // namespace lamptree
