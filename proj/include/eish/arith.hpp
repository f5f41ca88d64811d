// Copyright (c) 2026 the eisheights developers
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#ifndef EISH_ARITH_HPP
#define EISH_ARITH_HPP

#include <cstdint>
#include <utility>
#include <vector>

namespace eish {

struct Factorization {
    long long value = 1;
    std::vector<std::pair<long long, int>> factors; // (prime, exponent), primes ascending
};

// Prime factorization by trial division with a Miller-Rabin / Pollard-rho
// fallback. 1 <= N <= 2^63-1; N = 1 yields an empty factor list.
Factorization factorize(long long N);

bool is_prime(long long n);

// Kronecker symbol (Delta/a). Delta must be 1 or a discriminant
// (Delta == 0,1 mod 4); (1/a) == 1 for all a.
int kronecker(long long Delta, long long a);

// Fundamental discriminant predicate: Delta == 1 mod 4 squarefree, or
// Delta = 4k with k squarefree and k == 2,3 mod 4. Delta = 1 is excluded.
bool is_fundamental_discriminant(long long Delta);

// 4m = n^2 * (-Delta) with Delta a fundamental discriminant, or Delta = 1
// (the split case 4m = -n^2). In the classical notation d = -Delta.
struct Decomposition {
    long long m;
    long long n;
    long long delta;
};

Decomposition decompose(long long m);

// All positive divisors, ascending.
std::vector<long long> divisors(long long n);

int ord_p(long long n, long long p);

bool is_squarefree(long long n);

} // namespace eish

#endif
