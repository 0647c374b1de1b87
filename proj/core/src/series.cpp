#include "lamptree/series.hpp"

#include <algorithm>
#include <sstream>

namespace lamptree {

TruncSeries::TruncSeries(long long modulus, std::size_t length) : k_(modulus), c_(length, 0) {
  check_modulus(modulus);
  if (length == 0) fail(errc::invalid_parameter, "series length must be >= 1");
}

TruncSeries::TruncSeries(long long modulus, std::vector<long long> coeffs)
    : k_(modulus), c_(std::move(coeffs)) {
  check_modulus(modulus);
  if (c_.empty()) fail(errc::invalid_parameter, "series length must be >= 1");
  for (auto& v : c_) v = mod_reduce(v, k_);
}

void TruncSeries::set(std::size_t j, long long v) {
  if (j >= c_.size()) fail(errc::invalid_parameter, "series index past truncation");
  c_[j] = mod_reduce(v, k_);
}

bool TruncSeries::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](long long v) { return v == 0; });
}

std::optional<std::size_t> TruncSeries::first_nonzero() const {
  for (std::size_t j = 0; j < c_.size(); ++j)
    if (c_[j] != 0) return j;
  return std::nullopt;
}

void TruncSeries::require_compatible(const TruncSeries& o) const {
  if (k_ != o.k_) fail(errc::modulus_mismatch, "series moduli differ");
  if (c_.size() != o.c_.size()) fail(errc::invalid_parameter, "series lengths differ");
}

TruncSeries TruncSeries::operator+(const TruncSeries& o) const {
  require_compatible(o);
  TruncSeries out(k_, c_.size());
  for (std::size_t j = 0; j < c_.size(); ++j) out.c_[j] = mod_add(c_[j], o.c_[j], k_);
  return out;
}

TruncSeries TruncSeries::operator-(const TruncSeries& o) const {
  require_compatible(o);
  TruncSeries out(k_, c_.size());
  for (std::size_t j = 0; j < c_.size(); ++j) out.c_[j] = mod_sub(c_[j], o.c_[j], k_);
  return out;
}

TruncSeries TruncSeries::operator*(const TruncSeries& o) const {
  require_compatible(o);
  TruncSeries out(k_, c_.size());
  const std::size_t L = c_.size();
  for (std::size_t i = 0; i < L; ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; i + j < L; ++j) {
      if (o.c_[j] == 0) continue;
      out.c_[i + j] = mod_add(out.c_[i + j], mod_mul(c_[i], o.c_[j], k_), k_);
    }
  }
  return out;
}

TruncSeries TruncSeries::truncated(std::size_t L) const {
  if (L == 0 || L > c_.size()) fail(errc::invalid_parameter, "bad truncation length");
  TruncSeries out(k_, L);
  for (std::size_t j = 0; j < L; ++j) out.c_[j] = c_[j];
  return out;
}

std::string TruncSeries::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = 0; j < c_.size(); ++j) {
    if (c_[j] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (j == 0)
      os << c_[j];
    else if (c_[j] == 1)
      os << "t^" << j;
    else
      os << c_[j] << " t^" << j;
  }
  if (first) os << "0";
  os << " (mod t^" << c_.size() << ")";
  return os.str();
}

TruncSeries TruncSeries::zero(long long k, std::size_t L) { return TruncSeries(k, L); }

TruncSeries TruncSeries::one(long long k, std::size_t L) {
  TruncSeries s(k, L);
  s.set(0, 1);
  return s;
}

TruncSeries TruncSeries::monomial(long long k, std::size_t L, std::size_t deg, long long c) {
  TruncSeries s(k, L);
  if (deg < L) s.set(deg, c);
  return s;
}

TruncSeries pow_one_minus_t(long long k, long long m, std::size_t L) {
  check_modulus(k);
  TruncSeries base(k, L);
  if (m >= 0) {
    base.set(0, 1);
    if (L > 1) base.set(1, -1);
  } else {
    // (1-t)^{-1} = 1 + t + t^2 + ...
    for (std::size_t j = 0; j < L; ++j) base.set(j, 1);
    m = -m;
  }
  TruncSeries acc = TruncSeries::one(k, L);
  unsigned long long e = static_cast<unsigned long long>(m);
  while (e > 0) {
    if (e & 1ull) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

TruncSeries one_minus_t_combination(const ZkLaurent& data, std::size_t L) {
  TruncSeries out(data.modulus(), L);
  for (const auto& [m, c] : data.terms()) {
    TruncSeries term = pow_one_minus_t(data.modulus(), m, L);
    for (std::size_t j = 0; j < L; ++j)
      out.set(j, out.coeff(j) + mod_mul(c, term.coeff(j), data.modulus()));
  }
  return out;
}

}  // namespace lamptree
