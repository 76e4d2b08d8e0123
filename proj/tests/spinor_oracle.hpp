#pragma once

#include <cmath>
#include <complex>

#include "spingeom/half_int.hpp"

// sY_jm assembled from the symmetrized product of the two spin-frame spinors
// written in the stereographic chart. Independent of the recursion in swsh.cpp.
namespace oracle {

inline double fact(int n) {
    return std::tgamma(n + 1.0);
}

inline double binom(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    return fact(n) / (fact(k) * fact(n - k));
}

inline std::complex<double> spinor_harmonic(const spingeom::QNum& q, double theta, double phi) {
    using C = std::complex<double>;
    const C I(0.0, 1.0);
    const int js = (q.j + q.s).doubled() / 2, jms = (q.j - q.s).doubled() / 2;
    const int jmm = (q.j - q.m).doubled() / 2, jpm = (q.j + q.m).doubled() / 2;
    const int twoj = q.j.doubled();

    const C z = std::polar(1.0 / std::tan(0.5 * theta), phi);
    const double r = 1.0 / std::sqrt(1.0 + std::norm(z));
    const C a = -I * r, b = I * std::conj(z) * r, c = I * z * r, d = I * r;

    C sum = 0.0;
    for (int k = 0; k <= js; ++k) {
        const int eb = jmm - k, ed = (q.m - q.s).doubled() / 2 + k;
        if (eb < 0 || ed < 0) continue;
        const double w = binom(js, k) * binom(jms, eb) / binom(twoj, jmm);
        sum += w * std::pow(a, k) * std::pow(b, eb) * std::pow(c, js - k) * std::pow(d, ed);
    }
    const double sign = (jpm % 2 == 0) ? 1.0 : -1.0;
    const double norm = sign * std::sqrt((twoj + 1.0) / (4.0 * M_PI)) * fact(twoj) /
                        std::sqrt(fact(jmm) * fact(jpm) * fact(jms) * fact(js));
    return norm * sum;
}

}  // namespace oracle
