// Copyright (c) 2026 the eisheights developers
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#ifndef EISH_CLASSNUM_HPP
#define EISH_CLASSNUM_HPP

#include <optional>
#include <vector>

#include "eish/rational.hpp"

namespace eish {

// Positive definite integral binary quadratic form a x^2 + b xy + c y^2.
struct QuadForm {
    long long a, b, c;
};

// All reduced positive definite forms of discriminant -N:
// |b| <= a <= c, b >= 0 when |b| == a or a == c.
std::vector<QuadForm> reduced_forms(long long N);

// Count of reduced forms of discriminant -N (N == 0,3 mod 4), optionally
// restricted to primitive forms, optionally weighted 1/2 for (a,0,a) and
// 1/3 for (a,a,a).
Rational reduced_form_count(long long N, bool primitive_only, bool weighted = false);

struct ImagQuadInvariants {
    long long delta; // fundamental discriminant < 0
    long long h;     // class number
    int w;           // number of roots of unity: 6, 4, or 2
};

ImagQuadInvariants imag_invariants(long long Delta);

// Hurwitz class number H(N): -1/12 at N = 0, zero for N == 1,2 mod 4,
// otherwise the weighted count over all reduced forms of discriminant -N.
Rational hurwitz(long long N);

struct RealQuadInvariants {
    long long delta;   // fundamental discriminant > 1
    long long h;       // class number (wide)
    double log_eps;    // log of the fundamental unit of O_Delta
    double h_log_eps;  // h * log eps, from the L-value route
    int unit_norm;     // norm of the fundamental unit, +1 or -1
};

// h from indefinite reduced-form cycles, log eps from the continued
// fraction of omega (Pell), h*log eps from the finite log-sin L(1) sum;
// the three are cross-checked to 1e-10 relative.
RealQuadInvariants real_invariants(long long Delta);

// Fundamental solution of x^2 - Delta y^2 = +-4 via continued fractions;
// returns (x, y, norm) with eps = (x + y sqrt(Delta))/2.
struct PellSolution {
    long long x, y;
    int norm;
};
PellSolution pell_fundamental(long long Delta);

// Number of cycles of reduced indefinite forms of discriminant Delta
// (the narrow class number).
long long indefinite_cycle_count(long long Delta);

// The divisor sum sum_{c|n,(c,D)=1} c prod_{l|c} (1 - chi_Delta(l)/l), exact.
Rational conductor_sum(long long n, long long Delta, long long D);

// H0(m;D) for m > 0: (h(d)/w(d)) * conductor_sum. Exact rational.
Rational H0_pos(long long m, long long D);

// H0(m;D) for m < 0: (h(d) log eps(d) / 2) * conductor_sum, through the
// log-sin L-value. nullopt marks the split case Delta = 1 (4m = -n^2).
std::optional<double> H0_neg(long long m, long long D);

// prod_{p|D} (1 - chi_Delta(p)), a power of 2 or zero.
long long delta_factor(long long Delta, long long D);

// deg Z(m) = 2 delta(d;D) H0(m;D) for m > 0.
Rational degree_Z(long long m, long long D);

// vol = (1/12) prod_{p|D} (p-1) = -zeta_D(-1), for D a product of an even
// number >= 2 of distinct primes.
Rational volume(long long D);

// zeta_D(-1) = -(-1)^{ord(D)} (1/12) prod_{p|D}(p-1); defined for any
// squarefree D >= 1.
Rational zeta_D_minus1(long long D);

} // namespace eish

#endif
