#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lamptree/laurent.hpp"
#include "lamptree/modular.hpp"

namespace lamptree {

// Truncated power series over Z_k: c_0 + c_1 t + ... + c_{L-1} t^{L-1} mod t^L.
// All arithmetic is exact modulo (k, t^L); composite k is fine.
class TruncSeries {
public:
  TruncSeries(long long modulus, std::size_t length);
  TruncSeries(long long modulus, std::vector<long long> coeffs);

  long long modulus() const { return k_; }
  std::size_t length() const { return c_.size(); }
  long long coeff(std::size_t j) const { return j < c_.size() ? c_[j] : 0; }
  void set(std::size_t j, long long v);
  const std::vector<long long>& coeffs() const { return c_; }

  bool is_zero() const;
  // Index of the first non-zero coefficient, if any.
  std::optional<std::size_t> first_nonzero() const;

  TruncSeries operator+(const TruncSeries& o) const;
  TruncSeries operator-(const TruncSeries& o) const;
  TruncSeries operator*(const TruncSeries& o) const;
  TruncSeries truncated(std::size_t L) const;  // L <= length

  bool operator==(const TruncSeries& o) const = default;
  std::string to_string() const;  // "c0 + c1 t + ..." with zero terms skipped

  static TruncSeries zero(long long k, std::size_t L);
  static TruncSeries one(long long k, std::size_t L);
  static TruncSeries monomial(long long k, std::size_t L, std::size_t deg, long long c);

private:
  void require_compatible(const TruncSeries& o) const;
  long long k_;
  std::vector<long long> c_;
};

// (1-t)^m mod (k, t^L) for any integer m (negative m uses the geometric
// inverse 1 + t + t^2 + ...; exact for composite k).
TruncSeries pow_one_minus_t(long long k, long long m, std::size_t L);

// sum_m data[m] * (1-t)^m mod (k, t^L) over all stored indices of `data`.
TruncSeries one_minus_t_combination(const ZkLaurent& data, std::size_t L);

}  // namespace lamptree
