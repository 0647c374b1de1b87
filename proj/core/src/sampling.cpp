#include "lamptree/sampling.hpp"

#include <set>

namespace lamptree {

long long rand_range(Rng& rng, long long lo, long long hi) {
  if (lo > hi) fail(errc::invalid_parameter, "rand_range: empty range");
  unsigned long long span = static_cast<unsigned long long>(hi - lo) + 1ull;
  return lo + static_cast<long long>(rng() % span);
}

long long random_unit(long long k, Rng& rng) {
  while (true) {
    long long u = rand_range(rng, 1, k - 1);
    if (coprime(u, k)) return u;
  }
}

ZkLaurent random_laurent(long long k, Rng& rng, long long lo, long long hi) {
  ZkLaurent out(k);
  for (long long n = lo; n <= hi; ++n)
    if (rng() & 1ull) out.set(n, rand_range(rng, 0, k - 1));
  return out;
}

LampElement random_element(long long k, Rng& rng, long long window, long long max_shift) {
  return LampElement(random_laurent(k, rng, -window, window),
                     rand_range(rng, -max_shift, max_shift));
}

LampEndo random_stab_automorphism(long long k, Rng& rng, long long window) {
  auto factors = factorize(k);
  std::vector<ZkLaurent> parts;
  std::vector<long long> moduli;
  for (const auto& pp : factors) {
    ZkLaurent iq(pp.q);
    long long m = rand_range(rng, -window, window);
    iq.set(m, random_unit(pp.q, rng));
    if (pp.exp > 1) {
      for (long long n = -window; n <= window; ++n) {
        if (n == m || !(rng() & 1ull)) continue;
        iq.set(n, pp.p * rand_range(rng, 0, pp.q / pp.p - 1));
      }
    }
    parts.push_back(std::move(iq));
    moduli.push_back(pp.q);
  }
  std::set<long long> indices;
  for (const auto& part : parts)
    for (const auto& [n, c] : part.terms()) indices.insert(n);
  ZkLaurent i(k);
  for (long long n : indices) {
    std::vector<long long> residues;
    for (const auto& part : parts) residues.push_back(part.coeff(n));
    i.set(n, crt_combine(residues, moduli));
  }
  return LampEndo(std::move(i), ZkLaurent(k), 1);
}

LampEndo random_endo(long long k, Rng& rng, long long window) {
  ZkLaurent i = random_laurent(k, rng, -window, window);
  ZkLaurent j = random_laurent(k, rng, -window, window);
  return LampEndo(std::move(i), std::move(j), rand_range(rng, -2, 2));
}

LampEndo random_positive_automorphism(long long k, Rng& rng, long long window) {
  LampEndo stab = random_stab_automorphism(k, rng, window);
  return LampEndo(stab.i_data(), random_laurent(k, rng, -window, window), 1);
}

}  // namespace lamptree
