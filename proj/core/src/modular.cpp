#include "lamptree/modular.hpp"

#include <numeric>
#include <string>

namespace lamptree {

void check_modulus(long long k) {
  if (k < 2) fail(errc::invalid_modulus, "modulus must be >= 2, got " + std::to_string(k));
}

long long mod_pow(long long base, long long exp, long long k) {
  check_modulus(k);
  if (exp < 0) fail(errc::invalid_parameter, "mod_pow: negative exponent");
  long long acc = 1 % k;
  long long b = mod_reduce(base, k);
  while (exp > 0) {
    if (exp & 1) acc = mod_mul(acc, b, k);
    b = mod_mul(b, b, k);
    exp >>= 1;
  }
  return acc;
}

long long extended_gcd(long long a, long long b, long long& x, long long& y) {
  if (b == 0) {
    x = a >= 0 ? 1 : -1;
    y = 0;
    return a >= 0 ? a : -a;
  }
  long long x1, y1;
  long long g = extended_gcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

long long mod_inv(long long v, long long k) {
  check_modulus(k);
  long long x, y;
  long long g = extended_gcd(mod_reduce(v, k), k, x, y);
  if (g != 1)
    fail(errc::invalid_unit,
         std::to_string(mod_reduce(v, k)) + " is not a unit mod " + std::to_string(k));
  return mod_reduce(x, k);
}

bool coprime(long long a, long long b) { return std::gcd(a, b) == 1; }

std::vector<PrimePower> factorize(long long k) {
  check_modulus(k);
  std::vector<PrimePower> out;
  long long n = k;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    PrimePower pp{p, 0, 1};
    while (n % p == 0) {
      n /= p;
      pp.exp += 1;
      pp.q *= p;
    }
    out.push_back(pp);
  }
  if (n > 1) out.push_back(PrimePower{n, 1, n});
  return out;
}

bool is_prime(long long k) {
  if (k < 2) return false;
  auto f = factorize(k);
  return f.size() == 1 && f[0].exp == 1;
}

bool is_prime_power(long long k, long long& p, int& s) {
  if (k < 2) return false;
  auto f = factorize(k);
  if (f.size() != 1) return false;
  p = f[0].p;
  s = f[0].exp;
  return true;
}

bool is_squarefree(long long k) {
  if (k < 2) return false;
  for (const auto& pp : factorize(k))
    if (pp.exp > 1) return false;
  return true;
}

int p_valuation(long long v, long long p, int cap) {
  int e = 0;
  while (e < cap && v % p == 0) {
    if (v == 0) return cap;
    v /= p;
    ++e;
  }
  return e;
}

long long crt_combine(const std::vector<long long>& residues,
                      const std::vector<long long>& moduli) {
  if (residues.size() != moduli.size() || residues.empty())
    fail(errc::invalid_parameter, "crt_combine: mismatched inputs");
  long long r = mod_reduce(residues[0], moduli[0]);
  long long m = moduli[0];
  for (std::size_t i = 1; i < residues.size(); ++i) {
    long long mi = moduli[i];
    if (!coprime(m, mi)) fail(errc::not_coprime, "crt_combine: moduli not coprime");
    // r' == r (mod m), r' == residues[i] (mod mi)
    long long diff = mod_reduce(residues[i] - r, mi);
    long long step = mod_mul(diff, mod_inv(m % mi, mi), mi);
    r = r + m * step;
    m = m * mi;
    r = mod_reduce(r, m);
  }
  return r;
}

long long lcm_ll(long long a, long long b) { return std::lcm(a, b); }

}  // namespace lamptree
