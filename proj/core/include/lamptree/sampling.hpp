#pragma once

#include <cstdint>
#include <random>

#include "lamptree/lamp.hpp"
#include "lamptree/lamp_aut.hpp"

namespace lamptree {

// Deterministic random generation shared by the verification suite, the
// tests and the CLI.  All draws go through rand_range so that a fixed seed
// reproduces the same stream on any platform/standard library.
using Rng = std::mt19937_64;

long long rand_range(Rng& rng, long long lo, long long hi);  // inclusive bounds

long long random_unit(long long k, Rng& rng);

// Coefficient data with indices in [lo, hi], each index populated with
// probability ~1/2 by a uniform residue.
ZkLaurent random_laurent(long long k, Rng& rng, long long lo, long long hi);

LampElement random_element(long long k, Rng& rng, long long window, long long max_shift);

// Uniformly structured x-fixing automorphism: mod every prime power of k a
// single unit monomial (index within the window) plus p-divisible noise.
LampEndo random_stab_automorphism(long long k, Rng& rng, long long window);

// Arbitrary endo data (usually not an automorphism): random i, j in the
// window and r in [-2, 2].
LampEndo random_endo(long long k, Rng& rng, long long window);

// Random automorphism with r = +1: stab part plus arbitrary j data.
LampEndo random_positive_automorphism(long long k, Rng& rng, long long window);

}  // namespace lamptree
