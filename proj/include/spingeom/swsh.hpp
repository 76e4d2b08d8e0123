#pragma once

#include <complex>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "spingeom/half_int.hpp"

namespace spingeom {

using cplx = std::complex<double>;
using Vec3 = Eigen::Vector3d;
using CVec3 = Eigen::Vector3cd;
using Mat3 = Eigen::Matrix3d;
using CMat3 = Eigen::Matrix3cd;

inline constexpr double kPi = 3.14159265358979323846;

// Point of the momentum sphere away from the poles.
struct SpherePoint {
    double theta = 0.5 * kPi;
    double phi = 0.0;

    // theta must lie in (0, pi); phi is wrapped into [0, 2pi).
    static SpherePoint at(double theta, double phi);
    static SpherePoint from_zeta(cplx zeta);

    // exp(i phi) cot(theta/2)
    cplx zeta() const;
};

struct SphereQuadrature {
    std::vector<SpherePoint> nodes;
    std::vector<double> weights;  // unit-sphere measure
    int order = 0;
};

struct LadderResult {
    double coefficient = 0.0;
    std::optional<QNum> target;
};

struct ProductTerm {
    QNum q;
    double coefficient;
};

// Wigner small-d d^j_{mp,m}(theta) by three-term recursion in j.
double wigner_small_d(HalfInt j, HalfInt mp, HalfInt m, double theta);

// sY_jm at pt, unit L2 norm on the unit sphere. Condon-Shortley at s = 0.
cplx eval_harmonic(const QNum& q, const SpherePoint& pt);

// edth (prime = false) or edth' (prime = true) acting on sY_jm on the sphere of radius P.
LadderResult edth_ladder(const QNum& q, bool prime, double P);

// p^a = P (sin t cos f, sin t sin f, cos t)
Vec3 momentum_direction(const SpherePoint& pt, double P);

// Complex null tangent m^a with m.conj(m) = 1 and p.m = 0.
CVec3 null_tangent(const SpherePoint& pt);

SphereQuadrature build_quadrature(int order);

// 0Y_{1,mu} * sY_{j,m} expanded over sY_{j', m+mu}, j' in {j-1, j, j+1}.
std::vector<ProductTerm> product_expand_y1(int mu, const QNum& q);

// Eigenvalue of the Laplacian of the sphere of radius P on sY_jm.
double laplacian_eigenvalue(const QNum& q, double P);

}  // namespace spingeom
