#include "spingeom/swsh.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <gsl/gsl_integration.h>

#include "spingeom/radical.hpp"

namespace spingeom {

namespace {

void require_interior(const SpherePoint& pt) {
    if (!(pt.theta > 0.0 && pt.theta < kPi))
        throw std::domain_error("sphere point at or beyond a pole");
}

// Direct sum for d^j_{mp,m}; used only for the recursion seed where it has one term.
double small_d_sum(int j2, int mp2, int m2, double theta) {
    const double c = std::cos(0.5 * theta);
    const double s = std::sin(0.5 * theta);
    const int jpm = (j2 + m2) / 2, jmm = (j2 - m2) / 2;
    const int jpmp = (j2 + mp2) / 2, jmmp = (j2 - mp2) / 2;
    const int shift = (mp2 - m2) / 2;  // k - m + mp = k + shift
    const double log_pref = 0.5 * (std::lgamma(jpm + 1.0) + std::lgamma(jmm + 1.0) +
                                   std::lgamma(jpmp + 1.0) + std::lgamma(jmmp + 1.0));
    double total = 0.0;
    for (int k = std::max(0, -shift); k <= std::min(jpm, jmmp); ++k) {
        const double log_den = std::lgamma(jpm - k + 1.0) + std::lgamma(k + 1.0) +
                               std::lgamma(jmmp - k + 1.0) + std::lgamma(k + shift + 1.0);
        const int cos_pow = jpm + jmmp - 2 * k;  // 2j - 2k + m - mp
        const int sin_pow = 2 * k + shift;       // 2k - m + mp
        const double sign = ((k + shift) % 2 == 0) ? 1.0 : -1.0;
        total += sign * std::exp(log_pref - log_den) * std::pow(c, cos_pow) * std::pow(s, sin_pow);
    }
    return total;
}

}  // namespace

SpherePoint SpherePoint::at(double theta, double phi) {
    SpherePoint pt{theta, std::fmod(phi, 2.0 * kPi)};
    if (pt.phi < 0.0) pt.phi += 2.0 * kPi;
    require_interior(pt);
    return pt;
}

SpherePoint SpherePoint::from_zeta(cplx zeta) {
    const double r = std::abs(zeta);
    if (!(r > 0.0) || !std::isfinite(r)) throw std::domain_error("zeta at a pole");
    return at(2.0 * std::atan(1.0 / r), std::arg(zeta));
}

cplx SpherePoint::zeta() const {
    return std::polar(1.0 / std::tan(0.5 * theta), phi);
}

double wigner_small_d(HalfInt j, HalfInt mp, HalfInt m, double theta) {
    if (mp.abs() > j || m.abs() > j || !(j - m).is_integer() || !(j - mp).is_integer())
        throw std::domain_error("invalid Wigner-d indices");
    const HalfInt jmin = std::max(mp.abs(), m.abs());
    double prev = 0.0;
    double cur = small_d_sum(jmin.doubled(), mp.doubled(), m.doubled(), theta);
    const double x = std::cos(theta);
    const double a = mp.value(), b = m.value();
    for (HalfInt jj = jmin; jj < j; jj += HalfInt(1)) {
        const double l = jj.value();
        double next;
        if (jj.doubled() == 0) {
            next = x * cur;
        } else {
            const double lower = (l + 1.0) * std::sqrt(std::max(0.0, l * l - a * a)) *
                                 std::sqrt(std::max(0.0, l * l - b * b));
            const double upper = l * std::sqrt((l + 1.0) * (l + 1.0) - a * a) *
                                 std::sqrt((l + 1.0) * (l + 1.0) - b * b);
            next = ((2.0 * l + 1.0) * (l * (l + 1.0) * x - a * b) * cur - lower * prev) / upper;
        }
        prev = cur;
        cur = next;
    }
    return cur;
}

cplx eval_harmonic(const QNum& q, const SpherePoint& pt) {
    q.validate();
    require_interior(pt);
    const double d = wigner_small_d(q.j, q.m, q.s, pt.theta);
    // (-i)^(2s)
    static const cplx powers[4] = {{1, 0}, {0, -1}, {-1, 0}, {0, 1}};
    const cplx phase = powers[((q.s.doubled() % 4) + 4) % 4];
    const double norm = std::sqrt((q.j.doubled() + 1.0) / (4.0 * kPi));
    const double gauge = (q.m + q.s).value() * pt.phi;
    return phase * norm * d * std::polar(1.0, gauge);
}

LadderResult edth_ladder(const QNum& q, bool prime, double P) {
    q.validate();
    if (!(P > 0.0)) throw std::domain_error("P must be positive");
    const int J = q.j.doubled(), S = q.s.doubled();
    LadderResult r;
    if (!prime) {
        if (J == S) return r;
        // -sqrt((j+s+1)(j-s)) / (sqrt2 P)
        r.coefficient = -sqrt_ratio({J + S + 2, J - S}, {8}) / P;
        r.target = QNum{q.s + HalfInt(1), q.j, q.m};
    } else {
        if (J == -S) return r;
        r.coefficient = sqrt_ratio({J - S + 2, J + S}, {8}) / P;
        r.target = QNum{q.s - HalfInt(1), q.j, q.m};
    }
    return r;
}

Vec3 momentum_direction(const SpherePoint& pt, double P) {
    require_interior(pt);
    const double st = std::sin(pt.theta);
    return P * Vec3(st * std::cos(pt.phi), st * std::sin(pt.phi), std::cos(pt.theta));
}

CVec3 null_tangent(const SpherePoint& pt) {
    require_interior(pt);
    const cplx z = pt.zeta();
    const cplx z2 = z * z;
    const double n = 1.0 + std::norm(z);
    const double k = 1.0 / (std::sqrt(2.0) * n);
    return CVec3(k * (1.0 - z2), k * cplx(0, 1) * (1.0 + z2), k * 2.0 * z);
}

SphereQuadrature build_quadrature(int order) {
    if (order < 1) throw std::domain_error("quadrature order must be >= 1");
    const int n_theta = order / 2 + 2;
    const int n_phi = order + 2;
    gsl_integration_glfixed_table* table = gsl_integration_glfixed_table_alloc(n_theta);
    if (!table) throw std::runtime_error("Gauss-Legendre table allocation failed");
    SphereQuadrature quad;
    quad.order = order;
    quad.nodes.reserve(static_cast<size_t>(n_theta) * n_phi);
    quad.weights.reserve(quad.nodes.capacity());
    const double dphi = 2.0 * kPi / n_phi;
    for (int i = 0; i < n_theta; ++i) {
        double x = 0.0, w = 0.0;
        gsl_integration_glfixed_point(-1.0, 1.0, static_cast<size_t>(i), &x, &w, table);
        const double theta = std::acos(x);
        for (int k = 0; k < n_phi; ++k) {
            quad.nodes.push_back(SpherePoint{theta, k * dphi});
            quad.weights.push_back(w * dphi);
        }
    }
    gsl_integration_glfixed_table_free(table);
    return quad;
}

std::vector<ProductTerm> product_expand_y1(int mu, const QNum& q) {
    q.validate();
    if (mu < -1 || mu > 1) throw std::domain_error("mu must be -1, 0 or +1");
    const std::int64_t J = q.j.doubled(), S = q.s.doubled(), M = q.m.doubled();
    const double c0 = std::sqrt(3.0 / (4.0 * kPi));
    const double c1 = std::sqrt(3.0 / (8.0 * kPi));
    const HalfInt mu_h(mu);
    std::vector<ProductTerm> out;
    auto push = [&](HalfInt jp, double c) {
        const QNum t{q.s, jp, q.m + mu_h};
        if (c == 0.0 || jp < q.s.abs() || jp < t.m.abs()) return;
        out.push_back({t, c});
    };
    const bool has_same = J > 0;
    const bool has_lower = J - 2 >= (S < 0 ? -S : S);
    double up = 0.0, same = 0.0, low = 0.0;
    if (mu == 1) {
        up = c1 * sqrt_ratio({J - S + 2, J + S + 2, J + M + 2, J + M + 4}, {4, (J + 2) * (J + 2), J + 1, J + 3});
        if (has_same) same = -c1 * static_cast<double>(S) * sqrt_ratio({J + M + 2, J - M}, {J * J, (J + 2) * (J + 2)});
        if (has_lower) low = -c1 * sqrt_ratio({J - S, J + S, J - M - 2, J - M}, {4, J * J, J - 1, J + 1});
    } else if (mu == 0) {
        up = c0 * sqrt_ratio({J + S + 2, J - S + 2, J + M + 2, J - M + 2}, {4, (J + 2) * (J + 2), J + 1, J + 3});
        if (has_same) same = c0 * static_cast<double>(S * M) / static_cast<double>(J * (J + 2));
        if (has_lower) low = c0 * sqrt_ratio({J - S, J + S, J + M, J - M}, {4, J * J, J - 1, J + 1});
    } else {
        up = c1 * sqrt_ratio({J + S + 2, J - S + 2, J - M + 2, J - M + 4}, {4, (J + 2) * (J + 2), J + 1, J + 3});
        if (has_same) same = c1 * static_cast<double>(S) * sqrt_ratio({J + M, J - M + 2}, {J * J, (J + 2) * (J + 2)});
        if (has_lower) low = -c1 * sqrt_ratio({J + S, J - S, J + M, J + M - 2}, {4, J * J, J - 1, J + 1});
    }
    push(q.j + HalfInt(1), up);
    push(q.j, same);
    if (has_lower) push(q.j - HalfInt(1), low);
    return out;
}

double laplacian_eigenvalue(const QNum& q, double P) {
    q.validate();
    if (!(P > 0.0)) throw std::domain_error("P must be positive");
    const double j = q.j.value(), s = q.s.value();
    return -(j * j + j - s * s) / (P * P);
}

}  // namespace spingeom
