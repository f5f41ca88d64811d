// Copyright (c) 2026 the eisheights developers
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include "eish/arith.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace eish {

namespace {

using u64 = unsigned long long;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return (u128)a * b % m; }

u64 powmod(u64 a, u64 e, u64 m) {
    u64 r = 1;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

// Deterministic Miller-Rabin for 64-bit inputs.
bool miller_rabin(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

u64 pollard_rho(u64 n) {
    if ((n & 1) == 0) return 2;
    for (u64 c = 1;; ++c) {
        u64 x = 2, y = 2, d = 1;
        while (d == 1) {
            x = (mulmod(x, x, n) + c) % n;
            y = (mulmod(y, y, n) + c) % n;
            y = (mulmod(y, y, n) + c) % n;
            u64 diff = x > y ? x - y : y - x;
            d = std::gcd(diff, n);
        }
        if (d != n) return d;
    }
}

void factor_rec(u64 n, std::vector<u64>& out) {
    if (n == 1) return;
    if (miller_rabin(n)) { out.push_back(n); return; }
    u64 d = pollard_rho(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

} // namespace

bool is_prime(long long n) { return n >= 2 && miller_rabin((u64)n); }

Factorization factorize(long long N) {
    if (N < 1) throw std::domain_error("factorize: N must be >= 1");
    Factorization f;
    f.value = N;
    u64 n = (u64)N;
    std::vector<u64> primes;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull}) {
        while (n % p == 0) { primes.push_back(p); n /= p; }
    }
    if (n > 1) factor_rec(n, primes);
    std::sort(primes.begin(), primes.end());
    for (size_t i = 0; i < primes.size();) {
        size_t j = i;
        while (j < primes.size() && primes[j] == primes[i]) ++j;
        f.factors.emplace_back((long long)primes[i], (int)(j - i));
        i = j;
    }
    return f;
}

int kronecker(long long Delta, long long a) {
    long long r4 = ((Delta % 4) + 4) % 4;
    if (Delta != 1 && r4 != 0 && r4 != 1)
        throw std::domain_error("kronecker: Delta must be 1 or a discriminant (0,1 mod 4)");
    // Standard Kronecker symbol.
    long long n = Delta;
    long long k = a;
    if (k == 0) return (n == 1 || n == -1) ? 1 : 0;
    int sign = 1;
    if (k < 0) {
        k = -k;
        if (n < 0) sign = -sign;
    }
    int v = 0;
    while ((k & 1) == 0) { k >>= 1; ++v; }
    if (v & 1) {
        long long n8 = ((n % 8) + 8) % 8;
        if (n8 == 3 || n8 == 5) sign = -sign;
        else if (n8 == 0 || n8 == 2 || n8 == 4 || n8 == 6) return 0;
    }
    // Now k odd > 0; Jacobi-style reciprocity loop.
    n %= k;
    if (n < 0) n += k;
    while (n != 0) {
        int w = 0;
        while ((n & 1) == 0) { n >>= 1; ++w; }
        if (w & 1) {
            long long k8 = k % 8;
            if (k8 == 3 || k8 == 5) sign = -sign;
        }
        if ((n % 4 == 3) && (k % 4 == 3)) sign = -sign;
        std::swap(n, k);
        n %= k;
    }
    return k == 1 ? sign : 0;
}

bool is_squarefree(long long n) {
    if (n < 0) n = -n;
    if (n == 0) return false;
    for (auto& [p, e] : factorize(n).factors)
        if (e >= 2) return false;
    return true;
}

bool is_fundamental_discriminant(long long Delta) {
    if (Delta == 1 || Delta == 0) return false;
    long long r4 = ((Delta % 4) + 4) % 4;
    if (r4 == 1) return is_squarefree(Delta);
    if (r4 != 0) return false;
    long long k = Delta / 4;
    long long k4 = ((k % 4) + 4) % 4;
    return (k4 == 2 || k4 == 3) && is_squarefree(k);
}

Decomposition decompose(long long m) {
    if (m == 0) throw std::domain_error("decompose: m must be nonzero");
    long long A = 4 * (m < 0 ? -m : m);
    // A = f^2 * s with s squarefree.
    long long f = 1, s = 1;
    for (auto& [p, e] : factorize(A).factors) {
        for (int i = 0; i < e / 2; ++i) f *= p;
        if (e & 1) s *= p;
    }
    long long n, Delta;
    if (m > 0) {
        // Delta < 0 fundamental.
        if (((s % 4) == 3)) { Delta = -s; n = f; }
        else { Delta = -4 * s; n = f / 2; }
    } else {
        // Delta > 1 fundamental, or Delta = 1 when 4m = -n^2.
        if (((s % 4) == 1)) { Delta = s; n = f; }
        else { Delta = 4 * s; n = f / 2; }
    }
    if (Delta != 1 && !is_fundamental_discriminant(Delta))
        throw std::logic_error("decompose: internal consistency failure");
    return Decomposition{m, n, Delta};
}

std::vector<long long> divisors(long long n) {
    if (n < 1) throw std::domain_error("divisors: n must be >= 1");
    std::vector<long long> d{1};
    for (auto& [p, e] : factorize(n).factors) {
        size_t sz = d.size();
        long long pk = 1;
        for (int i = 1; i <= e; ++i) {
            pk *= p;
            for (size_t j = 0; j < sz; ++j) d.push_back(d[j] * pk);
        }
    }
    std::sort(d.begin(), d.end());
    return d;
}

int ord_p(long long n, long long p) {
    if (n == 0) throw std::domain_error("ord_p: n must be nonzero");
    if (n < 0) n = -n;
    int k = 0;
    while (n % p == 0) { n /= p; ++k; }
    return k;
}

} // namespace eish
