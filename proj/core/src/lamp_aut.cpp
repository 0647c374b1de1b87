#include "lamptree/lamp_aut.hpp"

#include <algorithm>
#include <cctype>
#include <random>
#include <set>
#include <sstream>

namespace lamptree {

LampEndo::LampEndo(ZkLaurent i, ZkLaurent j, long long r)
    : i_(std::move(i)), j_(std::move(j)), r_(r) {
  if (i_.modulus() != j_.modulus()) fail(errc::modulus_mismatch, "endo i/j moduli differ");
}

LampEndo LampEndo::identity(long long k) {
  return LampEndo(laurent_unit(k, 0), ZkLaurent(k), 1);
}

std::string LampEndo::to_string() const {
  std::ostringstream os;
  os << "endo k=" << modulus() << " r=" << r_ << " i=" << i_.to_string() << " j="
     << j_.to_string();
  return os.str();
}

LampElement endo_apply(const LampEndo& e, const LampElement& g) {
  if (e.modulus() != g.modulus()) fail(errc::modulus_mismatch, "endo and element moduli differ");
  // Image of b(n) is the a-image conjugated by x^n: the i data shifted by r*n.
  ZkLaurent lamp(e.modulus());
  for (const auto& [n, c] : g.beta().terms()) {
    ZkLaurent part = e.i_data().shifted(e.r() * n).scaled(c);
    for (const auto& [m, v] : part.terms()) lamp.add_to(m, v);
  }
  LampElement torsion(std::move(lamp), 0);
  return torsion * e.xi_image().pow(g.shift());
}

LampEndo endo_compose(const LampEndo& e1, const LampEndo& e2) {
  if (e1.modulus() != e2.modulus()) fail(errc::modulus_mismatch, "endo moduli differ");
  LampElement a_img = endo_apply(e2, e1.alpha_image());
  LampElement x_img = endo_apply(e2, e1.xi_image());
  if (a_img.shift() != 0) fail(errc::internal_defect, "a-image acquired a shift");
  return LampEndo(a_img.beta(), x_img.beta(), x_img.shift());
}

LampEndo endo_pow(const LampEndo& e, long long n) {
  LampEndo base = n < 0 ? endo_invert(e) : e;
  unsigned long long exp = n < 0 ? static_cast<unsigned long long>(-(n + 1)) + 1ull
                                 : static_cast<unsigned long long>(n);
  LampEndo acc = LampEndo::identity(e.modulus());
  while (exp > 0) {
    if (exp & 1ull) acc = endo_compose(acc, base);
    base = endo_compose(base, base);
    exp >>= 1;
  }
  return acc;
}

AutCheck is_automorphism(const LampEndo& e) {
  if (e.r() != 1 && e.r() != -1)
    return {false, "x-image has exponent r=" + std::to_string(e.r()) + ", need +-1"};
  for (const auto& pp : factorize(e.modulus())) {
    int nonzero = 0;
    for (const auto& [n, c] : e.i_data().terms())
      if (c % pp.p != 0) ++nonzero;
    if (nonzero != 1)
      return {false, "a-image reduced mod " + std::to_string(pp.p) + " has " +
                         std::to_string(nonzero) + " nonzero terms, need exactly 1"};
  }
  return {true, ""};
}

ZkLaurent convolution_inverse(const ZkLaurent& i) {
  const long long k = i.modulus();
  std::vector<ZkLaurent> parts;
  std::vector<long long> moduli;
  for (const auto& pp : factorize(k)) {
    ZkLaurent iq = i.reduced(pp.q);
    long long m = 0, u = 0;
    int units = 0;
    for (const auto& [n, c] : iq.terms())
      if (c % pp.p != 0) {
        ++units;
        m = n;
        u = c;
      }
    if (units != 1)
      fail(errc::invalid_unit, "data is not a unit mod " + std::to_string(pp.q));
    long long u_inv = mod_inv(u, pp.q);
    // iq = u t^m (1 + nil) with nil^s = 0; invert the bracket by the
    // truncated geometric series.
    ZkLaurent nil = iq.shifted(-m).scaled(u_inv);
    nil.add_to(0, -1);
    ZkLaurent acc = laurent_unit(pp.q, 0);
    ZkLaurent pw = laurent_unit(pp.q, 0);
    ZkLaurent neg = nil.negated();
    for (int step = 1; step < pp.exp; ++step) {
      pw = pw * neg;
      acc = acc + pw;
    }
    parts.push_back(acc.scaled(u_inv).shifted(-m));
    moduli.push_back(pp.q);
  }
  // Recombine coefficientwise.
  std::set<long long> indices;
  for (const auto& part : parts)
    for (const auto& [n, c] : part.terms()) indices.insert(n);
  ZkLaurent out(k);
  for (long long n : indices) {
    std::vector<long long> residues;
    for (const auto& part : parts) residues.push_back(part.coeff(n));
    out.set(n, crt_combine(residues, moduli));
  }
  if (!(i * out == laurent_unit(k, 0)))
    fail(errc::internal_defect, "convolution inverse failed verification");
  return out;
}

LampEndo endo_invert(const LampEndo& e) {
  AutCheck chk = is_automorphism(e);
  if (!chk.ok) fail(errc::not_an_automorphism, chk.reason);
  const long long k = e.modulus();
  if (e.r() == 1) {
    ZkLaurent i_inv = convolution_inverse(e.i_data());
    // If e sends x to U x with torsion part U, its inverse must send x to
    // V x with V the image of U^-1 under the inverse of the x-fixing part.
    LampEndo stab_inv(i_inv, ZkLaurent(k), 1);
    LampElement u(e.j_data(), 0);
    LampElement v = endo_apply(stab_inv, u.inverse());
    LampEndo out(i_inv, v.beta(), 1);
    if (!(endo_compose(e, out) == LampEndo::identity(k)) ||
        !(endo_compose(out, e) == LampEndo::identity(k)))
      fail(errc::internal_defect, "endo inverse failed verification");
    return out;
  }
  // r = -1: peel off the x-inverting generator and invert the rest.
  LampEndo g = endo_compose(e, gen_zeta(k));  // now has r = +1
  LampEndo g_inv = endo_invert(g);
  return endo_compose(gen_zeta(k), g_inv);
}

LampEndo gen_lambda(long long k) {
  return LampEndo(laurent_unit(k, 1), ZkLaurent(k), 1);
}

LampEndo gen_eta(long long k, long long j) {
  if (!coprime(mod_reduce(j, k), k))
    fail(errc::invalid_unit, "eta needs a unit, got " + std::to_string(j));
  ZkLaurent i(k);
  i.set(0, j);
  return LampEndo(std::move(i), ZkLaurent(k), 1);
}

LampEndo gen_gamma(long long k, long long m, long long j) {
  if (!coprime(mod_reduce(j, k), k))
    fail(errc::invalid_unit, "gamma needs a unit, got " + std::to_string(j));
  ZkLaurent i(k);
  i.set(m, j);
  return LampEndo(std::move(i), ZkLaurent(k), 1);
}

LampEndo gen_delta(long long k, long long m, long long c) {
  if (m == 0) fail(errc::invalid_parameter, "delta needs m != 0");
  ZkLaurent i(k);
  i.set(0, 1);
  i.add_to(m, c);
  LampEndo out(std::move(i), ZkLaurent(k), 1);
  AutCheck chk = is_automorphism(out);
  if (!chk.ok)
    fail(errc::invalid_parameter, "delta(" + std::to_string(m) + "," + std::to_string(c) +
                                      ") is not an automorphism: " + chk.reason);
  return out;
}

LampEndo gen_rho(long long k, int ell) {
  if (!is_squarefree(k)) fail(errc::not_squarefree, std::to_string(k) + " is not squarefree");
  auto factors = factorize(k);
  if (ell < 1 || ell > static_cast<int>(factors.size()))
    fail(errc::invalid_parameter, "rho index out of range");
  long long p = factors[static_cast<std::size_t>(ell - 1)].p;
  ZkLaurent i(k);
  i.set(0, p);
  i.set(1, k / p);
  return LampEndo(std::move(i), ZkLaurent(k), 1);
}

LampEndo gen_iota(long long k) {
  return LampEndo(laurent_unit(k, 0), laurent_unit(k, 0), 1);
}

LampEndo gen_zeta(long long k) {
  return LampEndo(laurent_unit(k, 0), ZkLaurent(k), -1);
}

namespace {

void require_stab(const LampEndo& e) {
  if (!e.in_stab()) fail(errc::not_in_stab, "endo does not fix x (needs j = 0, r = +1)");
}

void require_automorphism(const LampEndo& e) {
  AutCheck chk = is_automorphism(e);
  if (!chk.ok) fail(errc::not_an_automorphism, chk.reason);
}

}  // namespace

PrimeStabDecomposition decompose_stab_prime(const LampEndo& e) {
  const long long k = e.modulus();
  if (!is_prime(k)) fail(errc::not_prime, std::to_string(k) + " is not prime");
  require_stab(e);
  require_automorphism(e);
  // Over a prime the automorphism criterion forces a single monomial.
  if (e.i_data().support_size() != 1)
    fail(errc::internal_defect, "prime-modulus automorphism with non-monomial data");
  PrimeStabDecomposition out{e.i_data().min_index(), e.i_data().coeff(e.i_data().min_index())};
  if (!(gen_gamma(k, out.m, out.j) == e))
    fail(errc::internal_defect, "prime decomposition failed recomposition");
  return out;
}

std::string StabWordEntry::to_string() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::lambda:
      os << "lambda";
      if (exponent != 1) os << '^' << exponent;
      break;
    case Kind::eta:
      os << "eta(" << c << ')';
      break;
    case Kind::delta:
      os << "delta(" << m << ',' << c << ')';
      break;
  }
  return os.str();
}

LampEndo recompose_stab(long long k, const std::vector<StabWordEntry>& word) {
  LampEndo acc = LampEndo::identity(k);
  for (const auto& w : word) {
    switch (w.kind) {
      case StabWordEntry::Kind::lambda:
        acc = endo_compose(acc, endo_pow(gen_lambda(k), w.exponent));
        break;
      case StabWordEntry::Kind::eta:
        acc = endo_compose(acc, gen_eta(k, w.c));
        break;
      case StabWordEntry::Kind::delta:
        acc = endo_compose(acc, gen_delta(k, w.m, w.c));
        break;
    }
  }
  return acc;
}

std::vector<StabWordEntry> decompose_stab_prime_power(const LampEndo& e) {
  const long long k = e.modulus();
  long long p = 0;
  int s = 0;
  if (!is_prime_power(k, p, s))
    fail(errc::not_prime_power, std::to_string(k) + " is not a prime power");
  require_stab(e);
  require_automorphism(e);

  // Reduce the data of e^-1 to the one-point data by generator
  // multiplications; the generators collected along the way multiply to e.
  ZkLaurent data = convolution_inverse(e.i_data());
  std::vector<StabWordEntry> word;

  long long m = 0, u = 0;
  for (const auto& [n, c] : data.terms())
    if (c % p != 0) {
      m = n;
      u = c;
    }
  if (m != 0) {
    data = data.shifted(-m);
    word.push_back({StabWordEntry::Kind::lambda, -m, 0, 0});
  }
  long long u_inv = mod_inv(u, k);
  if (u_inv != 1) {
    data = data.scaled(u_inv);
    word.push_back({StabWordEntry::Kind::eta, 1, 0, u_inv});
  }

  long long budget = 64ll * s * static_cast<long long>(std::max<std::size_t>(1, data.support_size()));
  long long steps = 0;
  const ZkLaurent one = laurent_unit(k, 0);
  while (true) {
    // Pick the off-zero index whose coefficient has minimal p-valuation,
    // leftmost on ties, and clear it with a delta generator.
    long long best_n = 0, best_c = 0;
    int best_val = s + 1;
    for (const auto& [n, c] : data.terms()) {
      if (n == 0) continue;
      int val = p_valuation(c, p, s);
      if (val < best_val) {
        best_val = val;
        best_n = n;
        best_c = c;
      }
    }
    if (best_val > s) break;  // only the constant term remains
    long long c = mod_reduce(-best_c, k);
    data = data * ZkLaurent(k, {{0, 1}, {best_n, c}});
    word.push_back({StabWordEntry::Kind::delta, 1, best_n, c});
    if (++steps > budget)
      fail(errc::iteration_budget_exceeded,
           "reduction did not settle within " + std::to_string(budget) + " steps");
  }
  if (data.coeff(0) != 1) {
    word.push_back({StabWordEntry::Kind::eta, 1, 0, mod_inv(data.coeff(0), k)});
    data = data.scaled(mod_inv(data.coeff(0), k));
  }
  if (!(data == one)) fail(errc::internal_defect, "reduction left non-identity data");
  if (!(recompose_stab(k, word) == e))
    fail(errc::internal_defect, "prime-power decomposition failed recomposition");
  return word;
}

SquarefreeStabDecomposition decompose_stab_squarefree(const LampEndo& e) {
  const long long k = e.modulus();
  if (!is_squarefree(k)) fail(errc::not_squarefree, std::to_string(k) + " is not squarefree");
  require_stab(e);
  require_automorphism(e);
  auto factors = factorize(k);

  SquarefreeStabDecomposition out;
  for (const auto& pp : factors) out.primes.push_back(pp.p);
  // Each prime sees a monomial; its index is that prime's rho exponent.
  for (const auto& pp : factors) {
    LampEndo red = reduce_modulus(e, pp.p);
    out.rho_exponents.push_back(decompose_stab_prime(red).m);
  }
  LampEndo psi = e;
  for (int ell = static_cast<int>(factors.size()); ell >= 1; --ell)
    psi = endo_compose(
        psi, endo_pow(gen_rho(k, ell), -out.rho_exponents[static_cast<std::size_t>(ell - 1)]));
  const ZkLaurent& res = psi.i_data();
  if (res.support_size() != 1 || res.min_index() != 0)
    fail(errc::internal_defect, "rho peeling left non-scaling data");
  out.j = res.coeff(0);

  LampEndo acc = gen_eta(k, out.j);
  for (int ell = 1; ell <= static_cast<int>(factors.size()); ++ell)
    acc = endo_compose(
        acc, endo_pow(gen_rho(k, ell), out.rho_exponents[static_cast<std::size_t>(ell - 1)]));
  if (!(acc == e)) fail(errc::internal_defect, "squarefree decomposition failed recomposition");
  return out;
}

LampEndo stab_projection(const LampEndo& e) {
  require_automorphism(e);
  if (e.r() != 1) fail(errc::not_positive_automorphism, "projection needs r = +1");
  return LampEndo(e.i_data(), ZkLaurent(e.modulus()), 1);
}

LampEndo psi_embed(const LampElement& g) {
  const long long k = g.modulus();
  return LampEndo(laurent_unit(k, -g.shift()), g.beta().shifted(-g.shift()), 1);
}

LampEndo reduce_modulus(const LampEndo& e, long long u) {
  const long long k = e.modulus();
  check_modulus(u);
  if (k % u != 0) fail(errc::bad_divisor, std::to_string(u) + " does not divide the modulus");
  if (!coprime(u, k / u)) fail(errc::bad_divisor, "divisor shares a factor with its cofactor");
  require_stab(e);
  return LampEndo(e.i_data().reduced(u), ZkLaurent(u), 1);
}

LampElement embed_element(const LampElement& g, long long v) {
  check_modulus(v);
  const long long u = g.modulus();
  if (!coprime(u, v)) fail(errc::not_coprime, "embedding needs coprime moduli");
  ZkLaurent beta(u * v);
  for (const auto& [n, c] : g.beta().terms()) beta.set(n, c * v);
  return LampElement(std::move(beta), g.shift());
}

bool is_fixed(const LampEndo& e, const LampElement& g) { return endo_apply(e, g) == g; }

std::vector<LampElement> fix_sample(const LampEndo& e, int radius) {
  if (radius < 0) fail(errc::invalid_parameter, "negative radius");
  const long long k = e.modulus();
  const LampElement gens[4] = {lamp_alpha(k), lamp_alpha(k).inverse(), lamp_xi(k),
                               lamp_xi(k).inverse()};
  std::set<LampElement> seen{lamp_identity(k)};
  std::vector<LampElement> frontier{lamp_identity(k)};
  for (int step = 0; step < radius; ++step) {
    std::vector<LampElement> next;
    for (const auto& g : frontier)
      for (const auto& s : gens) {
        LampElement h = g * s;
        if (seen.insert(h).second) next.push_back(h);
      }
    frontier = std::move(next);
  }
  std::vector<LampElement> fixed;
  for (const auto& g : seen)
    if (is_fixed(e, g)) fixed.push_back(g);
  return fixed;
}

DepthPreservationReport check_depth_preservation(const LampEndo& e, long long allowance,
                                                 int samples, long long lmax, uint64_t seed) {
  const long long k = e.modulus();
  std::mt19937_64 rng(seed);

  DepthPreservationReport report;
  for (int i = 0; i < samples; ++i) {
    LampElement g(k);
    long long ell = 0;
    bool found = false;
    for (int tries = 0; tries < 1000 && !found; ++tries) {
      ZkLaurent beta(k);
      long long support = static_cast<long long>(rng() % 5);
      for (long long t = 0; t < support; ++t)
        beta.set(static_cast<long long>(rng() % 9) - 4, static_cast<long long>(rng() % k));
      g = LampElement(std::move(beta), static_cast<long long>(rng() % 9) - 4);
      if (g.is_identity()) continue;
      auto L = stab_length(g);
      if (L && *L <= lmax) {
        ell = *L;
        found = true;
      }
    }
    if (!found) fail(errc::budget_exceeded, "could not sample an element with small stab length");
    LampElement img = endo_apply(e, g);
    long long img_len;
    if (img.is_identity())
      img_len = lmax + allowance + 1;  // fixes everything, certainly deep enough
    else
      img_len = *stab_length(img);
    ++report.samples;
    if (img_len < ell - allowance) {
      ++report.violations;
      if (report.details.size() < 5)
        report.details.push_back("element " + g.to_string() + " has stab length " +
                                 std::to_string(ell) + " but image " + img.to_string() +
                                 " has stab length " + std::to_string(img_len));
    }
  }
  return report;
}

namespace {

long long parse_ll(std::string_view text, std::size_t& pos, const char* what) {
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

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

ZkLaurent parse_braced_data(long long k, std::string_view text, std::size_t& pos) {
  if (pos >= text.size() || text[pos] != '{')
    fail(errc::parse_error, "expected '{' at offset " + std::to_string(pos));
  ++pos;
  ZkLaurent data(k);
  if (pos < text.size() && text[pos] == '}') {
    ++pos;
    return data;
  }
  while (true) {
    long long n = parse_ll(text, pos, "index");
    if (pos >= text.size() || text[pos] != ':')
      fail(errc::parse_error, "expected ':' at offset " + std::to_string(pos));
    ++pos;
    long long c = parse_ll(text, pos, "coefficient");
    data.add_to(n, c);
    if (pos < text.size() && text[pos] == ',') {
      ++pos;
      continue;
    }
    if (pos < text.size() && text[pos] == '}') {
      ++pos;
      return data;
    }
    fail(errc::parse_error, "expected ',' or '}' at offset " + std::to_string(pos));
  }
}

LampEndo parse_raw_endo(long long k, std::string_view piece) {
  // endo k=<k> r=<r> i={n:c,...} j={n:c,...}
  std::size_t pos = 4;  // past "endo"
  auto skip = [&] {
    while (pos < piece.size() && (piece[pos] == ' ' || piece[pos] == '\t')) ++pos;
  };
  long long kk = 0, r = 1;
  bool saw_k = false, saw_r = false;
  ZkLaurent i(k), j(k);
  bool saw_i = false, saw_j = false;
  skip();
  while (pos < piece.size()) {
    char field = piece[pos];
    if (pos + 1 >= piece.size() || piece[pos + 1] != '=')
      fail(errc::parse_error, "expected <field>= at offset " + std::to_string(pos));
    pos += 2;
    switch (field) {
      case 'k':
        kk = parse_ll(piece, pos, "modulus");
        saw_k = true;
        break;
      case 'r':
        r = parse_ll(piece, pos, "r");
        saw_r = true;
        break;
      case 'i':
        i = parse_braced_data(k, piece, pos);
        saw_i = true;
        break;
      case 'j':
        j = parse_braced_data(k, piece, pos);
        saw_j = true;
        break;
      default:
        fail(errc::parse_error, std::string("unknown endo field '") + field + "'");
    }
    skip();
  }
  if (!saw_k || !saw_r) fail(errc::parse_error, "endo literal needs k= and r=");
  if (kk != k)
    fail(errc::modulus_mismatch, "endo literal has k=" + std::to_string(kk) +
                                     " but the command modulus is " + std::to_string(k));
  (void)saw_i;
  (void)saw_j;
  return LampEndo(std::move(i), std::move(j), r);
}

LampEndo parse_endo_factor(long long k, std::string_view piece) {
  piece = trim(piece);
  if (piece.empty()) fail(errc::parse_error, "empty endo factor");
  if (piece.substr(0, 4) == "endo") return parse_raw_endo(k, piece);

  std::size_t pos = 0;
  while (pos < piece.size() && (std::isalpha(static_cast<unsigned char>(piece[pos])) ||
                                piece[pos] == '_'))
    ++pos;
  std::string name(piece.substr(0, pos));
  std::vector<long long> args;
  if (pos < piece.size() && piece[pos] == '(') {
    ++pos;
    while (true) {
      args.push_back(parse_ll(piece, pos, "argument"));
      if (pos < piece.size() && piece[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos < piece.size() && piece[pos] == ')') {
        ++pos;
        break;
      }
      fail(errc::parse_error, "expected ',' or ')' in generator arguments");
    }
  }
  long long exponent = 1;
  if (pos < piece.size() && piece[pos] == '^') {
    ++pos;
    exponent = parse_ll(piece, pos, "exponent");
  }
  if (pos != piece.size())
    fail(errc::parse_error, "trailing characters in endo factor '" + std::string(piece) + "'");

  auto need = [&](std::size_t n) {
    if (args.size() != n)
      fail(errc::parse_error, name + " takes " + std::to_string(n) + " argument(s)");
  };
  LampEndo base = LampEndo::identity(k);
  if (name == "lambda") {
    need(0);
    base = gen_lambda(k);
  } else if (name == "eta") {
    need(1);
    base = gen_eta(k, args[0]);
  } else if (name == "gamma") {
    need(2);
    base = gen_gamma(k, args[0], args[1]);
  } else if (name == "delta") {
    need(2);
    base = gen_delta(k, args[0], args[1]);
  } else if (name == "rho") {
    need(1);
    base = gen_rho(k, static_cast<int>(args[0]));
  } else if (name == "iota") {
    need(0);
    base = gen_iota(k);
  } else if (name == "zeta") {
    need(0);
    base = gen_zeta(k);
  } else if (name == "id" || name == "identity") {
    need(0);
  } else {
    fail(errc::parse_error, "unknown generator '" + name + "'");
  }
  return endo_pow(base, exponent);
}

}  // namespace

LampEndo parse_endo(long long k, std::string_view text) {
  check_modulus(k);
  LampEndo acc = LampEndo::identity(k);
  std::size_t pos = 0;
  bool any = false;
  while (pos <= text.size()) {
    std::size_t star = text.find('*', pos);
    std::string_view piece =
        text.substr(pos, star == std::string_view::npos ? std::string_view::npos : star - pos);
    if (!trim(piece).empty()) {
      acc = endo_compose(acc, parse_endo_factor(k, piece));
      any = true;
    }
    if (star == std::string_view::npos) break;
    pos = star + 1;
  }
  if (!any) fail(errc::parse_error, "empty endo expression");
  return acc;
}

}  // namespace lamptree
