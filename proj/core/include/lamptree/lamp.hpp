#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lamptree/laurent.hpp"
#include "lamptree/series.hpp"

namespace lamptree {

// Element of the wreath product Z_k wr Z in the normal form
//   (prod_n b(n)^{beta[n]}) * x^{shift},
// where x is the generator of the Z factor, a = b(0) generates the lamp at
// the origin, and b(n) = x^n a x^{-n}.  The normal form is unique, so
// equality is coefficient equality.
class LampElement {
public:
  explicit LampElement(long long k) : beta_(k), shift_(0) {}
  LampElement(ZkLaurent beta, long long shift) : beta_(std::move(beta)), shift_(shift) {}

  long long modulus() const { return beta_.modulus(); }
  const ZkLaurent& beta() const { return beta_; }
  long long shift() const { return shift_; }

  bool is_identity() const { return shift_ == 0 && beta_.is_zero(); }
  bool is_torsion() const { return shift_ == 0; }

  LampElement operator*(const LampElement& o) const;
  LampElement inverse() const;
  LampElement pow(long long n) const;
  bool operator==(const LampElement& o) const = default;
  // Orders elements deterministically (shift, then exponent data).
  bool operator<(const LampElement& o) const;

  std::string to_string() const;

private:
  ZkLaurent beta_;  // exponent of b(n) at index n
  long long shift_;
};

LampElement lamp_identity(long long k);
LampElement lamp_beta(long long k, long long n, long long e = 1);  // b(n)^e
LampElement lamp_alpha(long long k);                               // a = b(0)
LampElement lamp_xi(long long k);                                  // x

// Parses a product of tokens over {a, x, b(n)} with optional integer
// exponents: "a", "a-1", "x^3", "b(2)^-1", ... separated by spaces or '*'
// (or juxtaposed).  Also accepts "1" for the identity.
LampElement parse_lamp(long long k, std::string_view text);

// The action of the group on words over Z_k in series form: a word
// w_0 w_1 ... w_{L-1} is the truncated series sum w_i t^i, and the element
// (with lamp data f in the (1-t) basis) maps X to (X + f) * (1-t)^{-shift}.
TruncSeries act_series(const LampElement& g, const TruncSeries& word);

// Same action on a word given as digit values in [0, k).
std::vector<long long> act_word(const LampElement& g, const std::vector<long long>& word);

// Largest L such that g fixes every word of length L (equivalently every
// word of length <= L); nullopt when g is the identity (fixes everything).
std::optional<long long> stab_length(const LampElement& g);

// Exact dyadic distance derived from stab_length: 0 for equal elements,
// otherwise 2^-(stab_length(g^-1 h) + 1).
struct Dyadic {
  bool zero = true;
  long long neg_exp = 0;  // value is 2^-neg_exp when not zero
  double value() const;
  std::string to_string() const;
};
Dyadic lamp_distance(const LampElement& g, const LampElement& h);

// Order of the element: 1 for the identity, lcm of coefficient orders for
// torsion elements, nullopt (infinite) otherwise.
std::optional<long long> lamp_order(const LampElement& g);

// Number of distinct actions on words of length n (the order of the image
// of the whole group in the symmetric group on Z_k^n): k^n times the
// multiplicative order of (1-t) mod (k, t^n).  n = 0 gives 1.
unsigned long long level_action_count(long long k, int n);

}  // namespace lamptree
