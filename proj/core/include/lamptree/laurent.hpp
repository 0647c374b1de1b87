#pragma once

#include <map>
#include <string>

#include "lamptree/modular.hpp"

namespace lamptree {

// Finitely supported integer-indexed coefficient data over Z_k.  Used both as
// exponent data for the torsion part of lamplighter elements and as the i/j
// data of endomorphisms, where multiplication is convolution.
// Invariant: stored coefficients lie in [1, k); zeros are never stored.
class ZkLaurent {
public:
  explicit ZkLaurent(long long modulus) : k_(modulus), terms_() { check_modulus(modulus); }
  ZkLaurent(long long modulus, std::map<long long, long long> terms);

  long long modulus() const { return k_; }
  bool is_zero() const { return terms_.empty(); }
  long long coeff(long long n) const;
  void set(long long n, long long c);  // c reduced mod k; c == 0 erases
  void add_to(long long n, long long c);
  const std::map<long long, long long>& terms() const { return terms_; }
  std::size_t support_size() const { return terms_.size(); }
  long long min_index() const;  // requires non-zero
  long long max_index() const;  // requires non-zero

  ZkLaurent operator+(const ZkLaurent& o) const;
  ZkLaurent operator-(const ZkLaurent& o) const;
  ZkLaurent operator*(const ZkLaurent& o) const;  // convolution
  ZkLaurent negated() const;
  ZkLaurent scaled(long long c) const;
  ZkLaurent shifted(long long s) const;  // index n -> n + s
  ZkLaurent mirrored() const;            // index n -> -n
  // Coefficientwise reduction into Z_m; requires m | k.
  ZkLaurent reduced(long long m) const;

  bool operator==(const ZkLaurent& o) const = default;

  // Renders as {n1:c1,n2:c2,...} with ascending indices; {} when zero.
  std::string to_string() const;

private:
  void require_same_modulus(const ZkLaurent& o) const;
  long long k_;
  std::map<long long, long long> terms_;
};

// The one-point data {n:1} over Z_k.
ZkLaurent laurent_unit(long long k, long long n);

}  // namespace lamptree
