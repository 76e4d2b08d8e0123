#include "spingeom/empirical.hpp"

#include <cmath>
#include <limits>

namespace spingeom {

namespace {

constexpr Letter kBase[6] = {Letter::Px, Letter::Py, Letter::Pz, Letter::Jx, Letter::Jy, Letter::Jz};

Mat3 cross_matrix(const Vec3& v) {
    Mat3 X;
    X << 0, -v.z(), v.y(), v.z(), 0, -v.x(), -v.y(), v.x(), 0;
    return X;
}

// Placed letter i equals sum_k T(i,k) * base letter k.
Eigen::Matrix<double, 6, 6> placement_map(const E3Placement& e) {
    const Mat3 R = euler_to_rotation(e.euler);
    Eigen::Matrix<double, 6, 6> T = Eigen::Matrix<double, 6, 6>::Zero();
    T.block<3, 3>(0, 0) = R;
    T.block<3, 3>(3, 3) = R;
    T.block<3, 3>(3, 0) = cross_matrix(e.xi) * R;
    return T;
}

double jj1(HalfInt j) {
    const double v = j.value();
    return v * (v + 1.0);
}

// s1 s2 m1 m2 / (j1(j1+1) j2(j2+1))
double alignment_factor(const QNum& a, const QNum& b) {
    if (a.j.doubled() == 0 || b.j.doubled() == 0) return 0.0;
    return a.s.value() * b.s.value() * a.m.value() * b.m.value() / (jj1(a.j) * jj1(b.j));
}

Vec3 axis3(const E3Placement& e) {
    return euler_to_rotation(e.euler).col(2);
}

double spin_shift(const PlacedState& s1, const PlacedState& s2) {
    return s1.params.hbar * (s1.q.s.value() / s1.params.P + s2.q.s.value() / s2.params.P);
}

double p4_12(const PlacedMoments& a, const PlacedMoments& b) {
    cplx acc = 0.0;
    for (int u = 0; u < 3; ++u)
        for (int v = 0; v < 3; ++v) acc += a.second(u, v) * b.second(u, v);
    return acc.real();
}

void check_pair(const PlacedState& s1, const PlacedState& s2) {
    s1.validate();
    s2.validate();
    if (s1.params.hbar != s2.params.hbar) throw std::domain_error("systems must share hbar");
}

}  // namespace

void PlacedState::validate() const {
    q.validate();
    params.validate();
    if (q.s != params.s) throw std::domain_error("spin weight mismatch");
}

PlacedMoments PlacedMoments::compute(const PlacedState& st) {
    st.validate();
    const StateVector psi = StateVector::basis(st.params, st.q);

    Eigen::Matrix<cplx, 6, 1> m1;
    Eigen::Matrix<cplx, 6, 6> m2;
    StateVector images[6] = {psi, psi, psi, psi, psi, psi};
    for (int k = 0; k < 6; ++k) {
        images[k] = apply(kBase[k], psi);
        m1[k] = psi.inner(images[k]);
    }
    // <L_u L_v> = <L_u psi | L_v psi> since every base letter is Hermitian.
    for (int u = 0; u < 6; ++u)
        for (int v = 0; v < 6; ++v) m2(u, v) = images[u].inner(images[v]);

    // v[x][y] = p_x p_y psi
    std::vector<StateVector> pp;
    pp.reserve(9);
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y) pp.push_back(apply(kBase[x], images[y]));
    std::array<cplx, 81> f{};
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c)
                for (int d = 0; d < 3; ++d)
                    f[((a * 3 + b) * 3 + c) * 3 + d] = pp[b * 3 + a].inner(pp[c * 3 + d]);

    const Eigen::Matrix<double, 6, 6> T = placement_map(st.placement);
    const Eigen::Matrix<cplx, 6, 6> Tc = T.cast<cplx>();
    PlacedMoments out;
    out.first = Tc * m1;
    out.second = Tc * m2 * Tc.transpose();

    // Rotate each of the four indices in turn.
    const Mat3 R = euler_to_rotation(st.placement.euler);
    std::array<cplx, 81> cur = f;
    for (int slot = 0; slot < 4; ++slot) {
        std::array<cplx, 81> next{};
        const int stride = slot == 0 ? 27 : slot == 1 ? 9 : slot == 2 ? 3 : 1;
        for (int idx = 0; idx < 81; ++idx) {
            const int digit = (idx / stride) % 3;
            const int base = idx - digit * stride;
            cplx acc = 0.0;
            for (int k = 0; k < 3; ++k) acc += R(digit, k) * cur[base + k * stride];
            next[idx] = acc;
        }
        cur = next;
    }
    out.fourth_p = cur;
    return out;
}

Mat3 euler_to_rotation(const Vec3& euler) {
    const double ca = std::cos(euler[0]), sa = std::sin(euler[0]);
    const double cb = std::cos(euler[1]), sb = std::sin(euler[1]);
    const double cg = std::cos(euler[2]), sg = std::sin(euler[2]);
    Mat3 R;
    R << ca * cg - sa * cb * sg, -sa * cg - ca * cb * sg, sb * sg,
         ca * sg + sa * cb * cg, -sa * sg + ca * cb * cg, -sb * cg,
         sa * sb, ca * sb, cb;
    return R;
}

double cos_beta12(const E3Placement& e1, const E3Placement& e2) {
    return (euler_to_rotation(e1.euler).transpose() * euler_to_rotation(e2.euler))(2, 2);
}

double cos_beta12_angles(const E3Placement& e1, const E3Placement& e2) {
    const double b1 = e1.euler[1], b2 = e2.euler[1];
    return std::cos(b1) * std::cos(b2) + std::cos(e1.euler[2] - e2.euler[2]) * std::sin(b1) * std::sin(b2);
}

double pair_numerator(const PlacedState& s1, const PlacedState& s2) {
    check_pair(s1, s2);
    if (s1.q.s.doubled() == 0 || s2.q.s.doubled() == 0) return pair_numerator_moments(s1, s2);
    const double P1 = s1.params.P, P2 = s2.params.P, hbar = s1.params.hbar;
    const double sv1 = s1.q.s.value(), sv2 = s2.q.s.value();
    const double geo = (s1.placement.xi - s2.placement.xi).dot(axis3(s1.placement).cross(axis3(s2.placement)));
    const double spin = cos_beta12(s1.placement, s2.placement) * hbar *
                        ((jj1(s2.q.j) - sv2 * sv2) / (sv2 * P2) + (jj1(s1.q.j) - sv1 * sv1) / (sv1 * P1));
    return P1 * P2 * (geo + spin) * alignment_factor(s1.q, s2.q);
}

double pair_numerator_moments(const PlacedState& s1, const PlacedState& s2) {
    check_pair(s1, s2);
    const PlacedMoments a = PlacedMoments::compute(s1), b = PlacedMoments::compute(s2);
    cplx w12 = 0.0, p12 = 0.0;
    for (int c = 0; c < 3; ++c) {
        w12 += a.first[c] * b.first[3 + c] + a.first[3 + c] * b.first[c];
        p12 += a.first[c] * b.first[c];
    }
    return (w12 - spin_shift(s1, s2) * p12).real();
}

double pair_Dsq(const QNum& q1, const QNum& q2, double beta12) {
    q1.validate();
    q2.validate();
    if (q1.j.doubled() <= 1 || q2.j.doubled() <= 1) return 2.0 / 3.0;
    const double j1 = q1.j.value(), j2 = q2.j.value();
    const double s1 = q1.s.value(), s2 = q2.s.value();
    const double m1 = q1.m.value(), m2 = q2.m.value();
    const double J1 = j1 * (j1 + 1.0), J2 = j2 * (j2 + 1.0);
    const double den = (2 * j1 - 1) * (2 * j1 + 3) * (2 * j2 - 1) * (2 * j2 + 3);
    const double c2 = std::cos(beta12) * std::cos(beta12);
    const double first = (5 * J1 * J2 + (s1 * s1 - 4) * J2 + (s2 * s2 - 4) * J1 - 3 * s1 * s1 * s2 * s2 + 3) / den;
    const double a1 = J1 - 3 * s1 * s1, a2 = J2 - 3 * s2 * s2;
    const double second = a1 * a2 / den * (m1 * m1 / J1 + m2 * m2 / J2 - 3 * m1 * m1 * m2 * m2 / (J1 * J2));
    const double third = a1 * (J1 - 3 * m1 * m1) * a2 * (J2 - 3 * m2 * m2) / (J1 * J2 * den) * c2;
    return 1.0 - first - second - third;
}

double pair_Dsq_com(const QNum& q1, const QNum& q2, double beta12) {
    q1.validate();
    q2.validate();
    if (q1.j != q1.s.abs() || q2.j != q2.s.abs()) throw std::domain_error("centre-of-mass form needs j = |s|");
    const double j1 = q1.j.value(), j2 = q2.j.value();
    const double m1 = q1.m.value(), m2 = q2.m.value();
    const double c = std::cos(beta12);
    return 2.0 / 3.0 + (3 * m1 * m1 - j1 * (j1 + 1)) * (3 * m2 * m2 - j2 * (j2 + 1)) /
                           (3 * (j1 + 1) * (2 * j1 + 3) * (j2 + 1) * (2 * j2 + 3)) * (1 - 3 * c * c);
}

double pair_Dsq_moments(const PlacedState& s1, const PlacedState& s2) {
    check_pair(s1, s2);
    const PlacedMoments a = PlacedMoments::compute(s1), b = PlacedMoments::compute(s2);
    const double P1 = s1.params.P, P2 = s2.params.P;
    return 1.0 - p4_12(a, b) / (P1 * P1 * P2 * P2);
}

UncertaintyTerms uncertainty_terms(const PlacedState& s1, const PlacedState& s2) {
    check_pair(s1, s2);
    const PlacedMoments a = PlacedMoments::compute(s1), b = PlacedMoments::compute(s2);
    const double P1 = s1.params.P, P2 = s2.params.P;
    const double kappa = spin_shift(s1, s2);

    struct Piece {
        int x, y;
        double w;
    };
    std::vector<Piece> pieces;
    for (int c = 0; c < 3; ++c) {
        pieces.push_back({c, 3 + c, 1.0});
        pieces.push_back({3 + c, c, 1.0});
        pieces.push_back({c, c, -kappa});
    }
    cplx mean = 0.0, square = 0.0;
    double scale = 0.0;
    for (const auto& t : pieces) {
        const cplx term = t.w * a.first[t.x] * b.first[t.y];
        mean += term;
        scale += std::abs(term);
        for (const auto& u : pieces) square += t.w * u.w * a.second(t.x, u.x) * b.second(t.y, u.y);
    }

    UncertaintyTerms out;
    out.A_mean = mean.real();
    if (std::abs(out.A_mean) <= 1e-12 * scale || out.A_mean == 0.0)
        throw UndefinedUncertainty("numerator vanishes; relative uncertainty undefined");
    out.A_var = std::max(0.0, square.real() - out.A_mean * out.A_mean);

    const double p4 = p4_12(a, b);
    cplx p8 = 0.0;
    for (int i = 0; i < 81; ++i) p8 += a.fourth_p[i] * b.fourth_p[i];
    out.B_mean = P1 * P1 * P2 * P2 - p4;
    if (!(out.B_mean > 0.0)) throw std::logic_error("non-positive denominator in empirical distance");
    out.B_var = std::max(0.0, p8.real() - p4 * p4);

    out.a_term = std::sqrt(out.A_var) / std::abs(out.A_mean);
    out.b_term = 0.5 * std::sqrt(out.B_var) / out.B_mean;
    out.d12 = out.A_mean / std::sqrt(out.B_mean);
    out.delta_d = (out.a_term + out.b_term) * std::abs(out.d12);
    return out;
}

double uncertainty(const PlacedState& s1, const PlacedState& s2) {
    return uncertainty_terms(s1, s2).delta_d;
}

PairGeometry empirical_distance(const PlacedState& s1, const PlacedState& s2) {
    check_pair(s1, s2);
    PairGeometry g;
    const double P1 = s1.params.P, P2 = s2.params.P;
    g.numerator = pair_numerator(s1, s2);
    g.Dsq = pair_Dsq_moments(s1, s2);
    if (!(g.Dsq > 0.0)) throw std::logic_error("non-positive D^2 in empirical distance");
    const double cb = cos_beta12(s1.placement, s2.placement);
    g.beta12 = safe_acos(cb);
    const double den = P1 * P2 * std::sqrt(g.Dsq);
    g.d12 = g.numerator / den;

    const double geo = (s1.placement.xi - s2.placement.xi).dot(axis3(s1.placement).cross(axis3(s2.placement)));
    g.classical_part = P1 * P2 * geo * alignment_factor(s1.q, s2.q) / den;
    g.quantum_part = g.d12 - g.classical_part;

    try {
        g.uncertainty = uncertainty(s1, s2);
    } catch (const UndefinedUncertainty&) {
        g.uncertainty = std::numeric_limits<double>::quiet_NaN();
    }
    g.classical_ref = euclidean_line_distance(line_from_placement(s1.placement), line_from_placement(s2.placement));
    return g;
}

double empirical_angle(const PlacedState& s1, const PlacedState& s2) {
    check_pair(s1, s2);
    return safe_acos(alignment_factor(s1.q, s2.q) * cos_beta12(s1.placement, s2.placement));
}

double empirical_angle_moments(const PlacedState& s1, const PlacedState& s2) {
    check_pair(s1, s2);
    const PlacedMoments a = PlacedMoments::compute(s1), b = PlacedMoments::compute(s2);
    cplx dot = 0.0;
    for (int c = 0; c < 3; ++c) dot += a.first[c] * b.first[c];
    return safe_acos(dot.real() / (s1.params.P * s2.params.P));
}

double empirical_volume(const PlacedState& s1, const PlacedState& s2, const PlacedState& s3) {
    s1.validate();
    s2.validate();
    s3.validate();
    Mat3 m;
    m.col(0) = axis3(s1.placement);
    m.col(1) = axis3(s2.placement);
    m.col(2) = axis3(s3.placement);
    double factor = 1.0;
    for (const PlacedState* s : {&s1, &s2, &s3}) {
        if (s->q.j.doubled() == 0) return 0.0;
        factor *= s->q.s.value() * s->q.m.value() / jj1(s->q.j);
    }
    return m.determinant() / 6.0 * factor;
}

E3Placement placement_from_line(const Line3& line) {
    const Vec3 dir = line.dir.normalized();
    E3Placement e;
    const double beta = safe_acos(dir.z());
    const double gamma = std::hypot(dir.x(), dir.y()) > 0.0 ? std::atan2(dir.x(), -dir.y()) : 0.0;
    e.euler = Vec3(0.0, beta, gamma);
    e.xi = line.point - line.point.dot(dir) * dir;
    return e;
}

Line3 line_from_placement(const E3Placement& e) {
    return {e.xi, axis3(e)};
}

PairGeometry classical_limit_distance(const Line3& line1, const Line3& line2, HalfInt j,
                                      double p_scale, double hbar) {
    if (line1.dir.normalized().cross(line2.dir.normalized()).norm() < 1e-9)
        throw DegenerateSystem("classical limit needs non-parallel lines");
    if (!(p_scale > 0.0)) throw std::domain_error("p_scale must be positive");
    const ElementaryParams params{p_scale * j.value(), j, hbar};
    const QNum q{j, j, j};
    const PlacedState a{q, params, placement_from_line(line1)};
    const PlacedState b{q, params, placement_from_line(line2)};
    PairGeometry g = empirical_distance(a, b);
    g.classical_ref = euclidean_line_distance(line1, line2);
    return g;
}

}  // namespace spingeom
