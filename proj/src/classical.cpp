#include "spingeom/classical.hpp"

#include <algorithm>
#include <cmath>

namespace spingeom {

namespace {

constexpr double kParallel = 1e-9;

double momentum_norm(const ClassicalSystem& s) {
    const double P = s.p.norm();
    if (!(P > 0.0)) throw DegenerateSystem("zero linear momentum");
    return P;
}

// Antisymmetric coefficient array Z with X = x_a p^a + (1/2) Z^{ab} J^{ab}.
struct Split {
    Vec3 x;
    Mat3 Z;
};

Split split(const E3Element& e) {
    Split s{Vec3(e.c[0], e.c[1], e.c[2]), Mat3::Zero()};
    s.Z(1, 2) = e.c[3];
    s.Z(2, 0) = e.c[4];
    s.Z(0, 1) = e.c[5];
    s.Z -= Mat3(s.Z.transpose());
    return s;
}

E3Element join(const Vec3& x, const Mat3& Z) {
    E3Element e;
    e.c = {x[0], x[1], x[2], Z(1, 2), Z(2, 0), Z(0, 1)};
    return e;
}

}  // namespace

Line3 Line3::through(const Vec3& point, const Vec3& direction) {
    const double n = direction.norm();
    if (!(n > 0.0)) throw DegenerateSystem("line direction is zero");
    return {point, direction / n};
}

E3Element E3Element::translation(int axis) {
    E3Element e;
    e.c.at(static_cast<size_t>(axis)) = 1.0;
    return e;
}

E3Element E3Element::rotation(int a, int b) {
    if (a == b || a < 0 || b < 0 || a > 2 || b > 2) throw std::domain_error("rotation needs two distinct axes");
    Mat3 Z = Mat3::Zero();
    Z(a, b) = 1.0;
    Z(b, a) = -1.0;
    return join(Vec3::Zero(), Z);
}

E3Element E3Element::operator+(const E3Element& o) const {
    E3Element e;
    for (size_t i = 0; i < 6; ++i) e.c[i] = c[i] + o.c[i];
    return e;
}

E3Element E3Element::operator*(double k) const {
    E3Element e;
    for (size_t i = 0; i < 6; ++i) e.c[i] = k * c[i];
    return e;
}

bool E3Element::is_zero(double tol) const {
    for (double v : c)
        if (std::abs(v) > tol) return false;
    return true;
}

Casimirs casimirs(const ClassicalSystem& sys) {
    return {sys.p.squaredNorm(), sys.J.dot(sys.p)};
}

E3Element e3_bracket(const E3Element& X, const E3Element& Y) {
    const Split a = split(X), b = split(Y);
    Vec3 r = Vec3::Zero();
    Mat3 Z = Mat3::Zero();
    for (int k = 0; k < 3; ++k)
        for (int i = 0; i < 3; ++i) r[k] += a.x[i] * b.Z(i, k) - b.x[i] * a.Z(i, k);

    auto add = [&Z](int e, int f, double k) {
        Z(e, f) += k;
        Z(f, e) -= k;
    };
    for (int p = 0; p < 3; ++p)
        for (int q = 0; q < 3; ++q)
            for (int u = 0; u < 3; ++u)
                for (int v = 0; v < 3; ++v) {
                    const double w = 0.25 * a.Z(p, q) * b.Z(u, v);
                    if (w == 0.0) continue;
                    if (q == u) add(p, v, w);
                    if (q == v) add(p, u, -w);
                    if (p == v) add(q, u, w);
                    if (p == u) add(q, v, -w);
                }
    return join(r, Z);
}

Vec3 centre_of_mass_moment(const ClassicalSystem& sys) {
    return sys.p.cross(sys.J);
}

Line3 com_line(const ClassicalSystem& sys) {
    const double P = momentum_norm(sys);
    return {centre_of_mass_moment(sys) / (P * P), sys.p / P};
}

ClassicalSystem system_from_line(const Line3& line, double P, double W) {
    if (!(P > 0.0)) throw DegenerateSystem("P must be positive");
    const Vec3 dir = line.dir.normalized();
    const Vec3 foot = line.point - line.point.dot(dir) * dir;
    ClassicalSystem sys;
    sys.p = P * dir;
    sys.J = foot.cross(sys.p) + (W / (P * P)) * sys.p;
    return sys;
}

ClassicalSystem transform(const ClassicalSystem& sys, const Mat3& R, const Vec3& xi) {
    ClassicalSystem out;
    out.p = R * sys.p;
    out.J = R * sys.J + xi.cross(out.p);
    return out;
}

double empirical_distance_classical(const ClassicalSystem& s1, const ClassicalSystem& s2) {
    const double P1 = momentum_norm(s1), P2 = momentum_norm(s2);
    const Vec3 cross_unit = (s1.p / P1).cross(s2.p / P2);
    if (cross_unit.norm() < kParallel) {
        const Vec3 v = s1.p / P1;
        const Vec3 delta = centre_of_mass_moment(s1) / (P1 * P1) - centre_of_mass_moment(s2) / (P2 * P2);
        const double len = delta.norm();
        if (len == 0.0) return 0.0;
        const Vec3 w = (delta / len).cross(v);
        return delta.dot(v.cross(w));
    }
    const double W1 = s1.J.dot(s1.p), W2 = s2.J.dot(s2.p);
    const double W12 = s1.J.dot(s2.p) + s2.J.dot(s1.p);
    const double P12 = s1.p.dot(s2.p);
    const double num = W12 - W1 * P12 / (P1 * P1) - W2 * P12 / (P2 * P2);
    return num / s1.p.cross(s2.p).norm();
}

Vec3 relative_position(const ClassicalSystem& s1, const ClassicalSystem& s2) {
    const double P1 = momentum_norm(s1), P2 = momentum_norm(s2);
    const Vec3 n = s1.p.cross(s2.p);
    if (n.norm() < kParallel * P1 * P2) throw DegenerateSystem("parallel momenta have no unique relative position");
    const double W1 = s1.J.dot(s1.p), W2 = s2.J.dot(s2.p);
    const double W12 = s1.J.dot(s2.p) + s2.J.dot(s1.p);
    const double P12 = s1.p.dot(s2.p);
    const double num = W12 - W1 * P12 / (P1 * P1) - W2 * P12 / (P2 * P2);
    return (num / n.squaredNorm()) * n;
}

double euclidean_line_distance(const Line3& L1, const Line3& L2) {
    const Vec3 d1 = L1.dir.normalized(), d2 = L2.dir.normalized();
    const Vec3 gap = L2.point - L1.point;
    const Vec3 n = d1.cross(d2);
    if (n.norm() < 1e-12) return gap.cross(d1).norm();
    return std::abs(gap.dot(n)) / n.norm();
}

double safe_acos(double x) {
    if (std::isnan(x) || std::abs(x) > 1.0 + 1e-12) throw std::domain_error("arccos argument out of range");
    return std::acos(std::clamp(x, -1.0, 1.0));
}

double empirical_angle_classical(const ClassicalSystem& s1, const ClassicalSystem& s2) {
    momentum_norm(s1);
    momentum_norm(s2);
    // atan2 keeps full precision near parallel momenta
    return std::atan2(s1.p.cross(s2.p).norm(), s1.p.dot(s2.p));
}

double empirical_volume_classical(const ClassicalSystem& s1, const ClassicalSystem& s2,
                                  const ClassicalSystem& s3) {
    Mat3 m;
    m.col(0) = s1.p / momentum_norm(s1);
    m.col(1) = s2.p / momentum_norm(s2);
    m.col(2) = s3.p / momentum_norm(s3);
    return m.determinant() / 6.0;
}

double varpi_angle(const ClassicalSystem& s1, const ClassicalSystem& s2, const ClassicalSystem& s3) {
    const double P1 = momentum_norm(s1), P2 = momentum_norm(s2), P3 = momentum_norm(s3);
    auto parallel = [](const Vec3& a, const Vec3& b) { return a.normalized().cross(b.normalized()).norm() < kParallel; };
    if (parallel(s1.p, s2.p) || parallel(s2.p, s3.p) || parallel(s1.p, s3.p))
        throw DegenerateSystem("varpi angle undefined for parallel momenta");
    const double P12 = s1.p.dot(s2.p), P13 = s1.p.dot(s3.p), P23 = s2.p.dot(s3.p);
    const double num = P2 * P2 * P13 - P12 * P23;
    const double den = std::sqrt(P1 * P1 * P2 * P2 - P12 * P12) * std::sqrt(P2 * P2 * P3 * P3 - P23 * P23);
    return safe_acos(num / den);
}

}  // namespace spingeom
