#include "lamptree/laurent.hpp"

#include <sstream>

namespace lamptree {

ZkLaurent::ZkLaurent(long long modulus, std::map<long long, long long> terms) : k_(modulus) {
  check_modulus(modulus);
  for (const auto& [n, c] : terms) {
    long long r = mod_reduce(c, k_);
    if (r != 0) terms_[n] = r;
  }
}

long long ZkLaurent::coeff(long long n) const {
  auto it = terms_.find(n);
  return it == terms_.end() ? 0 : it->second;
}

void ZkLaurent::set(long long n, long long c) {
  long long r = mod_reduce(c, k_);
  if (r == 0)
    terms_.erase(n);
  else
    terms_[n] = r;
}

void ZkLaurent::add_to(long long n, long long c) { set(n, coeff(n) + c); }

long long ZkLaurent::min_index() const {
  if (terms_.empty()) fail(errc::invalid_parameter, "min_index of zero data");
  return terms_.begin()->first;
}

long long ZkLaurent::max_index() const {
  if (terms_.empty()) fail(errc::invalid_parameter, "max_index of zero data");
  return terms_.rbegin()->first;
}

void ZkLaurent::require_same_modulus(const ZkLaurent& o) const {
  if (k_ != o.k_)
    fail(errc::modulus_mismatch,
         "moduli differ: " + std::to_string(k_) + " vs " + std::to_string(o.k_));
}

ZkLaurent ZkLaurent::operator+(const ZkLaurent& o) const {
  require_same_modulus(o);
  ZkLaurent out = *this;
  for (const auto& [n, c] : o.terms_) out.add_to(n, c);
  return out;
}

ZkLaurent ZkLaurent::operator-(const ZkLaurent& o) const {
  require_same_modulus(o);
  ZkLaurent out = *this;
  for (const auto& [n, c] : o.terms_) out.add_to(n, -c);
  return out;
}

ZkLaurent ZkLaurent::operator*(const ZkLaurent& o) const {
  require_same_modulus(o);
  ZkLaurent out(k_);
  for (const auto& [n, c] : terms_)
    for (const auto& [m, d] : o.terms_) out.add_to(n + m, mod_mul(c, d, k_));
  return out;
}

ZkLaurent ZkLaurent::negated() const {
  ZkLaurent out(k_);
  for (const auto& [n, c] : terms_) out.set(n, -c);
  return out;
}

ZkLaurent ZkLaurent::scaled(long long c) const {
  ZkLaurent out(k_);
  for (const auto& [n, v] : terms_) out.set(n, mod_mul(v, mod_reduce(c, k_), k_));
  return out;
}

ZkLaurent ZkLaurent::shifted(long long s) const {
  ZkLaurent out(k_);
  for (const auto& [n, c] : terms_) out.set(n + s, c);
  return out;
}

ZkLaurent ZkLaurent::mirrored() const {
  ZkLaurent out(k_);
  for (const auto& [n, c] : terms_) out.set(-n, c);
  return out;
}

ZkLaurent ZkLaurent::reduced(long long m) const {
  check_modulus(m);
  if (k_ % m != 0) fail(errc::bad_divisor, std::to_string(m) + " does not divide modulus");
  ZkLaurent out(m);
  for (const auto& [n, c] : terms_) out.add_to(n, c);
  return out;
}

std::string ZkLaurent::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [n, c] : terms_) {
    if (!first) os << ',';
    first = false;
    os << n << ':' << c;
  }
  os << '}';
  return os.str();
}

ZkLaurent laurent_unit(long long k, long long n) {
  ZkLaurent out(k);
  out.set(n, 1);
  return out;
}

}  // namespace lamptree
