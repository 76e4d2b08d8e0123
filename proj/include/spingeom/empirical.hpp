#pragma once

#include <array>

#include "spingeom/classical.hpp"
#include "spingeom/operators.hpp"

namespace spingeom {

struct E3Placement {
    Vec3 euler = Vec3::Zero();  // (alpha, beta, gamma), radians
    Vec3 xi = Vec3::Zero();     // translation
};

// The state exp(-i p.xi / hbar) U (sY_jm / P).
struct PlacedState {
    QNum q;
    ElementaryParams params;
    E3Placement placement;

    void validate() const;
};

struct PairGeometry {
    double d12 = 0.0;
    double numerator = 0.0;
    double Dsq = 0.0;
    double beta12 = 0.0;
    double uncertainty = 0.0;    // NaN when the relative uncertainty is undefined
    double classical_ref = 0.0;  // Euclidean distance of the placement lines
    double classical_part = 0.0; // xi-dependent part of d12
    double quantum_part = 0.0;   // hbar-proportional part of d12
};

struct UncertaintyTerms {
    double A_mean = 0.0;
    double A_var = 0.0;
    double B_mean = 0.0;
    double B_var = 0.0;
    double a_term = 0.0;  // Delta A / |<A>|
    double b_term = 0.0;  // (1/2) Delta B / <B>
    double d12 = 0.0;
    double delta_d = 0.0;
};

// Placement-transformed moments of one system over the letters p_x..p_z, J_x..J_z.
struct PlacedMoments {
    Eigen::Matrix<cplx, 6, 1> first;
    Eigen::Matrix<cplx, 6, 6> second;      // <L_u L_v>
    std::array<cplx, 81> fourth_p{};       // <p_a p_b p_c p_d>, index ((a*3+b)*3+c)*3+d

    static PlacedMoments compute(const PlacedState& st);
};

Mat3 euler_to_rotation(const Vec3& euler);

// (R1^-1 R2)_33
double cos_beta12(const E3Placement& e1, const E3Placement& e2);
// cos b1 cos b2 + cos(g1 - g2) sin b1 sin b2
double cos_beta12_angles(const E3Placement& e1, const E3Placement& e2);

// Closed form for nonzero spin weights, moment route otherwise.
double pair_numerator(const PlacedState& s1, const PlacedState& s2);
double pair_numerator_moments(const PlacedState& s1, const PlacedState& s2);

// Closed form in (j, s, m, beta); 2/3 when either j is below 1.
double pair_Dsq(const QNum& q1, const QNum& q2, double beta12);
// Closed form valid for centre-of-mass states j = |s|.
double pair_Dsq_com(const QNum& q1, const QNum& q2, double beta12);
// 1 - <P^4_12> / (P1^2 P2^2) from exact placed second moments.
double pair_Dsq_moments(const PlacedState& s1, const PlacedState& s2);

PairGeometry empirical_distance(const PlacedState& s1, const PlacedState& s2);
double empirical_angle(const PlacedState& s1, const PlacedState& s2);
double empirical_angle_moments(const PlacedState& s1, const PlacedState& s2);
double empirical_volume(const PlacedState& s1, const PlacedState& s2, const PlacedState& s3);

UncertaintyTerms uncertainty_terms(const PlacedState& s1, const PlacedState& s2);
double uncertainty(const PlacedState& s1, const PlacedState& s2);

// alpha = 0, (beta, gamma) from the direction, xi = foot point of the line.
E3Placement placement_from_line(const Line3& line);
Line3 line_from_placement(const E3Placement& e);

PairGeometry classical_limit_distance(const Line3& line1, const Line3& line2, HalfInt j,
                                      double p_scale, double hbar);

class UndefinedUncertainty : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

}  // namespace spingeom
