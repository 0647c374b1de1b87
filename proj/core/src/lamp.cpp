#include "lamptree/lamp.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>
#include <sstream>

namespace lamptree {

LampElement LampElement::operator*(const LampElement& o) const {
  if (modulus() != o.modulus()) fail(errc::modulus_mismatch, "elements over different moduli");
  // Push this element's x-power through the other's lamp data:
  // x^r b(n) x^-r = b(n + r).
  ZkLaurent beta = beta_;
  for (const auto& [n, c] : o.beta().terms()) beta.add_to(n + shift_, c);
  return LampElement(std::move(beta), shift_ + o.shift_);
}

LampElement LampElement::inverse() const {
  ZkLaurent beta(modulus());
  for (const auto& [n, c] : beta_.terms()) beta.set(n - shift_, -c);
  return LampElement(std::move(beta), -shift_);
}

LampElement LampElement::pow(long long n) const {
  LampElement base = n < 0 ? inverse() : *this;
  unsigned long long e = n < 0 ? static_cast<unsigned long long>(-(n + 1)) + 1ull
                               : static_cast<unsigned long long>(n);
  LampElement acc(modulus());
  while (e > 0) {
    if (e & 1ull) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

bool LampElement::operator<(const LampElement& o) const {
  if (shift_ != o.shift_) return shift_ < o.shift_;
  auto a = beta_.terms().begin(), ae = beta_.terms().end();
  auto b = o.beta_.terms().begin(), be = o.beta_.terms().end();
  for (; a != ae && b != be; ++a, ++b) {
    if (a->first != b->first) return a->first < b->first;
    if (a->second != b->second) return a->second < b->second;
  }
  return a == ae && b != be;
}

std::string LampElement::to_string() const {
  if (is_identity()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [n, c] : beta_.terms()) {
    if (!first) os << ' ';
    first = false;
    os << "b(" << n << ')';
    if (c != 1) os << '^' << c;
  }
  if (shift_ != 0) {
    if (!first) os << ' ';
    os << 'x';
    if (shift_ != 1) os << '^' << shift_;
  }
  return os.str();
}

LampElement lamp_identity(long long k) { return LampElement(k); }

LampElement lamp_beta(long long k, long long n, long long e) {
  ZkLaurent b(k);
  b.set(n, e);
  return LampElement(std::move(b), 0);
}

LampElement lamp_alpha(long long k) { return lamp_beta(k, 0); }

LampElement lamp_xi(long long k) { return LampElement(ZkLaurent(k), 1); }

namespace {

long long parse_int(std::string_view text, std::size_t& pos, const char* what) {
  std::size_t start = pos;
  bool neg = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    neg = text[pos] == '-';
    ++pos;
  }
  long long v = 0;
  bool any = false;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    v = v * 10 + (text[pos] - '0');
    ++pos;
    any = true;
  }
  if (!any)
    fail(errc::parse_error, std::string("expected ") + what + " at offset " + std::to_string(start));
  return neg ? -v : v;
}

}  // namespace

LampElement parse_lamp(long long k, std::string_view text) {
  check_modulus(k);
  LampElement out(k);
  std::size_t pos = 0;
  bool any_factor = false;
  auto skip = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '*')) ++pos;
  };
  skip();
  while (pos < text.size()) {
    LampElement base(k);
    char c = text[pos];
    if (c == '1') {
      ++pos;  // identity token
    } else if (c == 'a') {
      ++pos;
      base = lamp_alpha(k);
    } else if (c == 'x') {
      ++pos;
      base = lamp_xi(k);
    } else if (c == 'b') {
      ++pos;
      if (pos >= text.size() || text[pos] != '(')
        fail(errc::parse_error, "expected '(' after b at offset " + std::to_string(pos));
      ++pos;
      long long n = parse_int(text, pos, "lamp index");
      if (pos >= text.size() || text[pos] != ')')
        fail(errc::parse_error, "expected ')' at offset " + std::to_string(pos));
      ++pos;
      base = lamp_beta(k, n);
    } else {
      fail(errc::parse_error,
           "unexpected character '" + std::string(1, c) + "' at offset " + std::to_string(pos));
    }
    long long exp = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      exp = parse_int(text, pos, "exponent");
    } else if (pos + 1 < text.size() && text[pos] == '-' && text[pos + 1] == '1') {
      pos += 2;  // legacy inverse suffix: a-1, x-1
      exp = -1;
    }
    out = out * base.pow(exp);
    any_factor = true;
    skip();
  }
  if (!any_factor) fail(errc::parse_error, "empty element expression");
  return out;
}

TruncSeries act_series(const LampElement& g, const TruncSeries& word) {
  if (g.modulus() != word.modulus()) fail(errc::modulus_mismatch, "element and word moduli differ");
  const std::size_t L = word.length();
  TruncSeries f = one_minus_t_combination(g.beta(), L);
  TruncSeries h = pow_one_minus_t(g.modulus(), -g.shift(), L);
  return (word + f) * h;
}

std::vector<long long> act_word(const LampElement& g, const std::vector<long long>& word) {
  if (word.empty()) return {};
  TruncSeries X(g.modulus(), word.size());
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (word[i] < 0 || word[i] >= g.modulus())
      fail(errc::symbol_out_of_range, "digit outside [0, k)");
    X.set(i, word[i]);
  }
  TruncSeries Y = act_series(g, X);
  std::vector<long long> out(word.size());
  for (std::size_t i = 0; i < word.size(); ++i) out[i] = Y.coeff(i);
  return out;
}

std::optional<long long> stab_length(const LampElement& g) {
  if (g.is_identity()) return std::nullopt;
  for (std::size_t L = 16; L <= (1u << 22); L *= 2) {
    TruncSeries h = pow_one_minus_t(g.modulus(), -g.shift(), L);
    TruncSeries d1 = h - TruncSeries::one(g.modulus(), L);
    TruncSeries d2 = one_minus_t_combination(g.beta(), L) * h;
    auto v1 = d1.first_nonzero();
    auto v2 = d2.first_nonzero();
    if (v1 && v2) return static_cast<long long>(std::min(*v1, *v2));
    if (v1) return static_cast<long long>(*v1);
    if (v2) return static_cast<long long>(*v2);
  }
  fail(errc::internal_defect, "non-identity element looked identical at depth 2^22");
}

double Dyadic::value() const { return zero ? 0.0 : std::ldexp(1.0, static_cast<int>(-neg_exp)); }

std::string Dyadic::to_string() const {
  if (zero) return "0";
  return "2^-" + std::to_string(neg_exp);
}

Dyadic lamp_distance(const LampElement& g, const LampElement& h) {
  if (g == h) return Dyadic{true, 0};
  auto L = stab_length(g.inverse() * h);
  if (!L) fail(errc::internal_defect, "distinct elements with identity quotient");
  return Dyadic{false, *L + 1};
}

std::optional<long long> lamp_order(const LampElement& g) {
  if (g.is_identity()) return 1;
  if (!g.is_torsion()) return std::nullopt;
  long long k = g.modulus();
  long long ord = 1;
  for (const auto& [n, c] : g.beta().terms()) ord = lcm_ll(ord, k / std::gcd(c, k));
  return ord;
}

unsigned long long level_action_count(long long k, int n) {
  check_modulus(k);
  if (n < 0) fail(errc::invalid_parameter, "negative level");
  if (n == 0) return 1;
  const std::size_t L = static_cast<std::size_t>(n);
  TruncSeries s = pow_one_minus_t(k, 1, L);
  TruncSeries acc = s;
  unsigned long long T = 1;
  const TruncSeries one = TruncSeries::one(k, L);
  while (!(acc == one)) {
    acc = acc * s;
    ++T;
    if (T > 100000000ull) fail(errc::budget_exceeded, "multiplicative order too large");
  }
  unsigned long long result = T;
  for (int i = 0; i < n; ++i) {
    unsigned long long next = result * static_cast<unsigned long long>(k);
    if (next / static_cast<unsigned long long>(k) != result)
      fail(errc::budget_exceeded, "level action count overflows 64 bits");
    result = next;
  }
  return result;
}

}  // namespace lamptree
