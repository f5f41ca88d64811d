// Copyright (c) 2026 the eisheights developers
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include "eish/classnum.hpp"

#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

#include "eish/arith.hpp"

namespace eish {

namespace {

long long isqrt_ll(long long n) {
    if (n < 0) return -1;
    long long r = (long long)std::sqrt((double)n);
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

} // namespace

std::vector<QuadForm> reduced_forms(long long N) {
    long long r4 = ((N % 4) + 4) % 4;
    if (N <= 0 || (r4 != 0 && r4 != 3))
        throw std::domain_error("reduced_forms: need N > 0, N == 0,3 mod 4");
    std::vector<QuadForm> out;
    for (long long a = 1; 3 * a * a <= N; ++a) {
        for (long long b = -a; b <= a; ++b) {
            long long t = b * b + N;
            if (t % (4 * a) != 0) continue;
            long long c = t / (4 * a);
            if (c < a) continue;
            if ((b < 0) && (-b == a || a == c)) continue; // b >= 0 on the boundary
            out.push_back({a, b, c});
        }
    }
    return out;
}

Rational reduced_form_count(long long N, bool primitive_only, bool weighted) {
    Rational total(0);
    for (const auto& f : reduced_forms(N)) {
        if (primitive_only && std::gcd(std::gcd(f.a, std::llabs(f.b)), f.c) != 1) continue;
        Rational w(1);
        if (weighted) {
            if (f.a == f.c && f.b == 0) w = Rational(1, 2);
            else if (f.a == f.c && f.b == f.a) w = Rational(1, 3);
        }
        total += w;
    }
    return total;
}

ImagQuadInvariants imag_invariants(long long Delta) {
    if (Delta >= 0 || !is_fundamental_discriminant(Delta))
        throw std::domain_error("imag_invariants: Delta must be a negative fundamental discriminant");
    Rational h = reduced_form_count(-Delta, /*primitive=*/true, /*weighted=*/false);
    int w = Delta == -3 ? 6 : (Delta == -4 ? 4 : 2);
    return ImagQuadInvariants{Delta, h.num(), w};
}

Rational hurwitz(long long N) {
    if (N < 0) throw std::domain_error("hurwitz: N must be >= 0");
    if (N == 0) return Rational(-1, 12);
    long long r4 = N % 4;
    if (r4 == 1 || r4 == 2) return Rational(0);
    return reduced_form_count(N, /*primitive=*/false, /*weighted=*/true);
}

// ---------------------------------------------------------------------------
// Real quadratic fields

PellSolution pell_fundamental(long long Delta) {
    if (Delta <= 1 || !is_fundamental_discriminant(Delta))
        throw std::domain_error("pell_fundamental: Delta must be a fundamental discriminant > 1");

    // Classical continued fraction of sqrt(N); period ends at Q = 1.
    auto cf_pell = [](long long N) -> std::pair<__int128, __int128> {
        long long r = isqrt_ll(N);
        long long P = 0, Q = 1, a = r;
        __int128 pkm1 = a, pkm2 = 1, qkm1 = 1, qkm2 = 0;
        const __int128 LIM = (__int128)1 << 100;
        for (;;) {
            P = a * Q - P;
            Q = (N - P * P) / Q;
            // The period closes at the first Q = 1; the previous convergent
            // is the fundamental solution of p^2 - N q^2 = +-1.
            if (Q == 1) return {pkm1, qkm1};
            a = (P + r) / Q;
            __int128 pk = (__int128)a * pkm1 + pkm2;
            __int128 qk = (__int128)a * qkm1 + qkm2;
            if (pk > LIM || qk > LIM) throw std::overflow_error("pell_fundamental: convergents too large");
            pkm2 = pkm1; pkm1 = pk;
            qkm2 = qkm1; qkm1 = qk;
        }
    };

    long long x, y;
    int norm;
    if (Delta % 4 == 0) {
        long long N = Delta / 4;
        auto [p, q] = cf_pell(N);
        __int128 n2 = p * p - (__int128)N * q * q; // +-1
        if (2 * p > INT64_MAX || q > INT64_MAX) throw std::overflow_error("pell_fundamental: solution exceeds 64 bits");
        x = (long long)(2 * p);
        y = (long long)q;
        norm = n2 == 1 ? 1 : -1;
    } else {
        // eps' = p + q sqrt(Delta) is the fundamental unit of Z[sqrt(Delta)];
        // as (x + y sqrt(Delta))/2 this is (2p, 2q).
        auto [p, q] = cf_pell(Delta);
        __int128 n2 = p * p - (__int128)Delta * q * q;
        if (2 * p > INT64_MAX || 2 * q > INT64_MAX)
            throw std::overflow_error("pell_fundamental: solution exceeds 64 bits");
        x = (long long)(2 * p);
        y = (long long)(2 * q);
        norm = n2 == 1 ? 1 : -1;
        // For Delta == 5 mod 8 the fundamental unit of O_Delta may be
        // half-integral, with eps' = eps^3. Extract the exact cube root
        // candidate and verify it in integers.
        if (Delta % 8 == 5) {
            double eps3 = (double)p + (double)q * std::sqrt((double)Delta);
            double t = std::cbrt(eps3);
            long long xc = llround(t + norm / t); // trace of eps = eps + norm/eps
            if (xc > 0 && (xc & 1)) {
                __int128 num = (__int128)xc * xc - 4 * norm;
                if (num > 0 && num % Delta == 0) {
                    long long y2 = (long long)(num / Delta);
                    long long yc = isqrt_ll(y2);
                    if (yc * yc == y2 && (yc & 1)) {
                        x = xc;
                        y = yc;
                    }
                }
            }
        }
    }
    return PellSolution{x, y, norm};
}

namespace {

struct IndefForm {
    long long a, b, c;
    bool operator<(const IndefForm& o) const {
        if (a != o.a) return a < o.a;
        if (b != o.b) return b < o.b;
        return c < o.c;
    }
};

bool indef_reduced(long long a, long long b, long long Delta) {
    if (b <= 0) return false;
    if (b * b >= Delta) return false;
    long long t = 2 * std::llabs(a);
    if ((t + b) * (t + b) <= Delta) return false; // need 2|a| > sqrt(D) - b
    if (t >= b && (t - b) * (t - b) >= Delta) return false; // need 2|a| < sqrt(D) + b
    return true;
}

IndefForm rho_step(const IndefForm& f, long long Delta, long long s) {
    long long c = f.c;
    long long ac = std::llabs(c);
    // b' == -b mod 2|c|, normalized into (s - 2|c|, s] (|c| <= s) or (-|c|, |c|].
    long long mod = 2 * ac;
    long long b = ((-f.b) % mod + mod) % mod;
    long long hi = ac <= s ? s : ac;
    // shift b into (hi - mod, hi]
    b += mod * ((hi - b) / mod);
    while (b > hi) b -= mod;
    while (b <= hi - mod) b += mod;
    long long cp = (b * b - Delta) / (4 * c);
    return IndefForm{c, b, cp};
}

} // namespace

long long indefinite_cycle_count(long long Delta) {
    if (Delta <= 1 || !is_fundamental_discriminant(Delta))
        throw std::domain_error("indefinite_cycle_count: Delta must be a fundamental discriminant > 1");
    long long s = isqrt_ll(Delta);
    std::map<IndefForm, int> idx;
    std::vector<IndefForm> forms;
    for (long long b = 1; b <= s; ++b) {
        if (((Delta - b * b) % 4) != 0) continue;
        long long K = (Delta - b * b) / 4; // a*c = -K
        if (K <= 0) continue;
        for (long long a = 1; a * a <= K; ++a) {
            if (K % a != 0) continue;
            long long c = K / a;
            for (auto [aa, cc] : {std::pair<long long, long long>{a, -c},
                                  {-a, c},
                                  {c, -a},
                                  {-c, a}}) {
                if (!indef_reduced(aa, b, Delta)) continue;
                IndefForm f{aa, b, cc};
                if (!idx.count(f)) {
                    idx[f] = (int)forms.size();
                    forms.push_back(f);
                }
            }
        }
    }
    std::vector<int> cycle_id(forms.size(), -1);
    long long cycles = 0;
    for (size_t i = 0; i < forms.size(); ++i) {
        if (cycle_id[i] >= 0) continue;
        ++cycles;
        IndefForm f = forms[i];
        for (;;) {
            auto it = idx.find(f);
            if (it == idx.end()) throw std::logic_error("indefinite_cycle_count: rho left the reduced set");
            if (cycle_id[it->second] >= 0) break;
            cycle_id[it->second] = (int)cycles;
            f = rho_step(f, Delta, s);
        }
    }
    return cycles;
}

namespace {

// L(1, chi_Delta) = -(1/sqrt(Delta)) sum_{a=1}^{Delta-1} chi(a) log sin(pi a/Delta)
double L1_logsin(long long Delta) {
    double sum = 0.0;
    for (long long a = 1; a < Delta; ++a) {
        int chi = kronecker(Delta, a);
        if (chi) sum += chi * std::log(std::sin(M_PI * (double)a / (double)Delta));
    }
    return -sum / std::sqrt((double)Delta);
}

} // namespace

RealQuadInvariants real_invariants(long long Delta) {
    if (Delta <= 1 || !is_fundamental_discriminant(Delta))
        throw std::domain_error("real_invariants: Delta must be a fundamental discriminant > 1");
    double h_log_eps = std::sqrt((double)Delta) / 2.0 * L1_logsin(Delta);

    PellSolution u = pell_fundamental(Delta);
    double log_eps = std::log(((double)u.x + (double)u.y * std::sqrt((double)Delta)) / 2.0);

    long long h_plus = indefinite_cycle_count(Delta);
    long long h = u.norm == -1 ? h_plus : h_plus / 2;
    if (u.norm == 1 && h_plus % 2 != 0)
        throw std::logic_error("real_invariants: cycle count parity contradicts unit norm");

    if (std::fabs(h * log_eps - h_log_eps) > 1e-10 * std::fabs(h_log_eps))
        throw std::logic_error("real_invariants: Pell/cycle route disagrees with L-value route");
    return RealQuadInvariants{Delta, h, log_eps, h_log_eps, u.norm};
}

// ---------------------------------------------------------------------------
// Counting functions

Rational conductor_sum(long long n, long long Delta, long long D) {
    if (n < 1) throw std::domain_error("conductor_sum: n must be >= 1");
    Rational total(1);
    for (auto& [p, k] : factorize(n).factors) {
        if (D % p == 0) continue;
        int chi = kronecker(Delta, p);
        // 1 + (1 - chi/p) (p + ... + p^k)
        long long geom = 0, pw = 1;
        for (int j = 1; j <= k; ++j) { pw *= p; geom += pw; }
        Rational local = Rational(1) + (Rational(1) - Rational(chi, p)) * Rational(geom);
        total *= local;
    }
    return total;
}

Rational H0_pos(long long m, long long D) {
    if (m <= 0) throw std::domain_error("H0_pos: m must be > 0");
    auto dec = decompose(m);
    auto inv = imag_invariants(dec.delta);
    return Rational(inv.h, inv.w) * conductor_sum(dec.n, dec.delta, D);
}

std::optional<double> H0_neg(long long m, long long D) {
    if (m >= 0) throw std::domain_error("H0_neg: m must be < 0");
    auto dec = decompose(m);
    if (dec.delta == 1) return std::nullopt; // split field Q + Q
    // h(d) log eps(d) / w(d) with w = 2, via h log eps = sqrt(Delta)/2 L(1,chi).
    double h_log_eps = std::sqrt((double)dec.delta) / 2.0 * L1_logsin(dec.delta);
    return (h_log_eps / 2.0) * conductor_sum(dec.n, dec.delta, D).to_double();
}

long long delta_factor(long long Delta, long long D) {
    if (!is_squarefree(D) || D < 1) throw std::domain_error("delta_factor: D must be squarefree >= 1");
    long long prod = 1;
    for (auto& [p, e] : factorize(D).factors) prod *= 1 - kronecker(Delta, p);
    return prod;
}

Rational degree_Z(long long m, long long D) {
    if (m <= 0) throw std::domain_error("degree_Z: m must be > 0");
    auto dec = decompose(m);
    return Rational(2) * Rational(delta_factor(dec.delta, D)) * H0_pos(m, D);
}

Rational zeta_D_minus1(long long D) {
    if (D < 1 || !is_squarefree(D)) throw std::domain_error("zeta_D_minus1: D must be squarefree >= 1");
    Rational r(-1, 12);
    for (auto& [p, e] : factorize(D).factors) r *= Rational(1 - p);
    return r;
}

Rational volume(long long D) {
    auto f = factorize(D);
    if (D < 2 || !is_squarefree(D) || f.factors.size() % 2 != 0)
        throw std::domain_error("volume: D must be a product of an even number >= 2 of distinct primes");
    Rational r(1, 12);
    for (auto& [p, e] : f.factors) r *= Rational(p - 1);
    return r;
}

} // namespace eish
