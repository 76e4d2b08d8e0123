#pragma once

#include <array>
#include <string>

#include "spingeom/swsh.hpp"

namespace spingeom {

// Classical elementary system: linear momentum and angular momentum
// pseudo-vector J^a = (1/2) eps^{abc} J_bc, with eps_123 = +1.
struct ClassicalSystem {
    Vec3 p = Vec3::Zero();
    Vec3 J = Vec3::Zero();
};

struct Line3 {
    Vec3 point = Vec3::Zero();
    Vec3 dir = Vec3::UnitZ();  // unit tangent

    static Line3 through(const Vec3& point, const Vec3& direction);  // normalizes direction
};

// Element of e(3) in the basis p_1, p_2, p_3, J_23, J_31, J_12.
struct E3Element {
    std::array<double, 6> c{};

    static E3Element translation(int axis);          // axis in 0..2
    static E3Element rotation(int a, int b);         // J_ab, a != b, antisymmetric
    E3Element operator+(const E3Element& o) const;
    E3Element operator*(double k) const;
    bool is_zero(double tol = 1e-14) const;
};

struct Casimirs {
    double P2;
    double W;
};

Casimirs casimirs(const ClassicalSystem& sys);
E3Element e3_bracket(const E3Element& X, const E3Element& Y);

// M^a = J^{ab} p_b = (p x J)^a
Vec3 centre_of_mass_moment(const ClassicalSystem& sys);
Line3 com_line(const ClassicalSystem& sys);
ClassicalSystem system_from_line(const Line3& line, double P, double W);

// Acts by rotation R and then translation xi.
ClassicalSystem transform(const ClassicalSystem& sys, const Mat3& R, const Vec3& xi);

double empirical_distance_classical(const ClassicalSystem& s1, const ClassicalSystem& s2);
Vec3 relative_position(const ClassicalSystem& s1, const ClassicalSystem& s2);
double euclidean_line_distance(const Line3& L1, const Line3& L2);
double empirical_angle_classical(const ClassicalSystem& s1, const ClassicalSystem& s2);
double empirical_volume_classical(const ClassicalSystem& s1, const ClassicalSystem& s2,
                                  const ClassicalSystem& s3);
double varpi_angle(const ClassicalSystem& s1, const ClassicalSystem& s2, const ClassicalSystem& s3);

// Thrown for zero momenta or parallel pairs where a unique answer does not exist.
class DegenerateSystem : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// arccos with the argument clamped to [-1, 1] when it exceeds by at most 1e-12.
double safe_acos(double x);

}  // namespace spingeom
