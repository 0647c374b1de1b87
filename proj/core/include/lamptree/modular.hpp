#pragma once

#include <cstdint>
#include <vector>

#include "lamptree/errors.hpp"

namespace lamptree {

// Arithmetic over Z_k for small composite moduli (k >= 2, fits in int64).
// All residues are kept normalized to [0, k).

void check_modulus(long long k);

inline long long mod_reduce(long long v, long long k) {
  long long r = v % k;
  return r < 0 ? r + k : r;
}

inline long long mod_add(long long a, long long b, long long k) { return mod_reduce(a + b, k); }
inline long long mod_sub(long long a, long long b, long long k) { return mod_reduce(a - b, k); }
inline long long mod_mul(long long a, long long b, long long k) { return mod_reduce(a * b, k); }

long long mod_pow(long long base, long long exp, long long k);  // exp >= 0

// Extended gcd: returns g = gcd(a, b) and x, y with a*x + b*y = g.
long long extended_gcd(long long a, long long b, long long& x, long long& y);

// Multiplicative inverse mod k; throws errc::invalid_unit when gcd(v, k) != 1.
long long mod_inv(long long v, long long k);

bool coprime(long long a, long long b);

struct PrimePower {
  long long p;  // prime
  int exp;      // >= 1
  long long q;  // p^exp
};

// Trial-division factorization, ascending primes. k >= 2.
std::vector<PrimePower> factorize(long long k);

bool is_prime(long long k);
// True when k = p^s; fills p and s.
bool is_prime_power(long long k, long long& p, int& s);
bool is_squarefree(long long k);

// Largest e with p^e | v, for v != 0 mod cap; returns cap for v == 0.
int p_valuation(long long v, long long p, int cap);

// CRT: residues r[i] mod pairwise-coprime moduli m[i] -> residue mod prod(m).
long long crt_combine(const std::vector<long long>& residues,
                      const std::vector<long long>& moduli);

long long lcm_ll(long long a, long long b);

}  // namespace lamptree
