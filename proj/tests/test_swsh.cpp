#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "spingeom/swsh.hpp"
#include "spinor_oracle.hpp"

using namespace spingeom;

namespace {
const double kFourPi = 4.0 * kPi;
}

TEST_CASE("constant and zonal harmonics") {
    const SpherePoint pt = SpherePoint::at(1.1, 2.3);
    CHECK(std::abs(eval_harmonic(QNum::from_values(0, 0, 0), pt) - 1.0 / std::sqrt(kFourPi)) < 1e-15);
    const cplx y10 = eval_harmonic(QNum::from_values(0, 1, 0), SpherePoint::at(kPi / 3, 0.7));
    CHECK(std::abs(y10 - std::sqrt(3.0 / kFourPi) / 2.0) < 1e-15);
}

TEST_CASE("Condon-Shortley phase at s = 0") {
    const double t = 0.8, f = 1.9;
    const cplx y11 = eval_harmonic(QNum::from_values(0, 1, 1), SpherePoint::at(t, f));
    const cplx expect = -std::sqrt(3.0 / (8.0 * kPi)) * std::sin(t) * std::polar(1.0, f);
    CHECK(std::abs(y11 - expect) < 1e-15);
    const cplx y2m1 = eval_harmonic(QNum::from_values(0, 2, -1), SpherePoint::at(t, f));
    const cplx expect2 = std::sqrt(15.0 / (8.0 * kPi)) * std::sin(t) * std::cos(t) * std::polar(1.0, -f);
    CHECK(std::abs(y2m1 - expect2) < 1e-14);
}

TEST_CASE("spin-one value at the equator") {
    // symmetrized spinor product at zeta = 1 gives -(1/2) sqrt(3/4pi)
    const cplx v = eval_harmonic(QNum::from_values(1, 1, 1), SpherePoint::at(kPi / 2, 0.0));
    CHECK(std::abs(v - (-0.5 * std::sqrt(3.0 / kFourPi))) < 1e-15);
    CHECK(std::abs(oracle::spinor_harmonic(QNum::from_values(1, 1, 1), kPi / 2, 0.0) - v) < 1e-15);
}

TEST_CASE("recursion agrees with the spinor product") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> th(0.05, kPi - 0.05), ph(0.0, 2.0 * kPi);
    double worst = 0.0;
    for (int S = -6; S <= 6; ++S)
        for (int J = std::abs(S); J <= 16; J += 2)
            for (int M = -J; M <= J; M += 2) {
                const QNum q = QNum::from_doubled(S, J, M);
                for (int r = 0; r < 4; ++r) {
                    const double t = th(rng), f = ph(rng);
                    const cplx a = eval_harmonic(q, SpherePoint::at(t, f));
                    worst = std::max(worst, std::abs(a - oracle::spinor_harmonic(q, t, f)));
                }
            }
    CHECK(worst < 1e-11);
}

TEST_CASE("invalid inputs") {
    CHECK_THROWS_AS(eval_harmonic(QNum::from_values(1, 0, 0), SpherePoint::at(1.0, 0.0)), std::domain_error);
    CHECK_THROWS(SpherePoint::at(0.0, 0.0));
    CHECK_THROWS(SpherePoint::at(kPi, 0.0));
    CHECK(SpherePoint::at(1.0, -0.5).phi == doctest::Approx(2.0 * kPi - 0.5));
}

TEST_CASE("zeta chart round trip") {
    const SpherePoint pt = SpherePoint::at(2.2, 4.0);
    const SpherePoint back = SpherePoint::from_zeta(pt.zeta());
    CHECK(back.theta == doctest::Approx(pt.theta).epsilon(1e-14));
    CHECK(back.phi == doctest::Approx(pt.phi).epsilon(1e-14));
    CHECK(std::abs(SpherePoint::at(kPi / 2, 0.0).zeta() - cplx(1.0, 0.0)) < 1e-15);
}

TEST_CASE("wigner small d") {
    const double t = 0.9;
    CHECK(wigner_small_d(HalfInt(1), HalfInt(0), HalfInt(0), t) == doctest::Approx(std::cos(t)));
    CHECK(wigner_small_d(HalfInt::from_doubled(1), HalfInt::from_doubled(1), HalfInt::from_doubled(1), t) ==
          doctest::Approx(std::cos(t / 2)));
    CHECK(wigner_small_d(HalfInt(1), HalfInt(1), HalfInt(0), t) == doctest::Approx(-std::sin(t) / std::sqrt(2.0)));
    // rows stay unit length at large j
    const HalfInt j(60);
    for (int mp : {-60, -17, 0, 31, 60}) {
        double sum = 0.0;
        for (int m = -60; m <= 60; ++m) {
            const double d = wigner_small_d(j, HalfInt(mp), HalfInt(m), 1.3);
            sum += d * d;
        }
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-11));
    }
}

TEST_CASE("edth ladder") {
    const double P = 1.7;
    LadderResult r = edth_ladder(QNum::from_values(0, 1, 0), false, P);
    CHECK(r.coefficient == doctest::Approx(-1.0 / P));
    REQUIRE(r.target);
    CHECK(*r.target == QNum::from_values(1, 1, 0));

    r = edth_ladder(QNum::from_values(-1, 1, 0), true, P);
    CHECK(r.coefficient == 0.0);
    CHECK_FALSE(r.target);

    r = edth_ladder(QNum::from_values(1, 2, 1), true, P);
    CHECK(r.coefficient == doctest::Approx(std::sqrt(3.0) / P));
    REQUIRE(r.target);
    CHECK(*r.target == QNum::from_values(0, 2, 1));

    CHECK_FALSE(edth_ladder(QNum::from_values(2, 2, -1), false, P).target);
}

TEST_CASE("laplacian is the sum of both edth compositions") {
    CHECK(laplacian_eigenvalue(QNum::from_values(0, 0, 0), 1.0) == 0.0);
    CHECK(laplacian_eigenvalue(QNum::from_values(0.5, 0.5, 0.5), 1.0) == doctest::Approx(-0.5));
    const double P = 0.8;
    for (int S = -4; S <= 4; ++S)
        for (int J = std::abs(S); J <= 10; J += 2) {
            const QNum q = QNum::from_doubled(S, J, J);
            double total = 0.0;
            for (bool first_prime : {false, true}) {
                const LadderResult a = edth_ladder(q, first_prime, P);
                if (!a.target) continue;
                total += a.coefficient * edth_ladder(*a.target, !first_prime, P).coefficient;
            }
            CHECK(total == doctest::Approx(laplacian_eigenvalue(q, P)).epsilon(1e-14));
        }
}

TEST_CASE("sphere frame") {
    const double P = 2.5;
    const SpherePoint eq = SpherePoint::at(kPi / 2, 0.0);
    const Vec3 p = momentum_direction(eq, P);
    CHECK((p - Vec3(P, 0, 0)).norm() < 1e-14);
    const CVec3 m = null_tangent(eq);
    CHECK((m - CVec3(0, cplx(0, 1), 1) / std::sqrt(2.0)).norm() < 1e-15);

    const Vec3 south = momentum_direction(SpherePoint::at(kPi - 1e-9, 0.3), P);
    CHECK((south - Vec3(0, 0, -P)).norm() < 1e-8);

    const SpherePoint pt = SpherePoint::at(0.4, 5.1);
    const CVec3 mm = null_tangent(pt);
    const Vec3 pp = momentum_direction(pt, P);
    CHECK(std::abs(mm.dot(mm) - 1.0) < 1e-14);  // Eigen dot conjugates the left factor
    CHECK(std::abs(mm.cwiseProduct(mm).sum()) < 1e-14);
    CHECK(std::abs(pp.cast<cplx>().cwiseProduct(mm).sum()) < 1e-14);
    CHECK(pp.norm() == doctest::Approx(P));
}

TEST_CASE("quadrature") {
    CHECK_THROWS_AS(build_quadrature(0), std::domain_error);
    for (int order : {1, 2, 9, 20}) {
        const SphereQuadrature qd = build_quadrature(order);
        double w = 0.0;
        for (double x : qd.weights) {
            CHECK(x > 0.0);
            w += x;
        }
        CHECK(std::abs(w - kFourPi) < 1e-13);
    }
    const SphereQuadrature q2 = build_quadrature(2);
    cplx acc = 0.0;
    for (size_t i = 0; i < q2.nodes.size(); ++i)
        acc += q2.weights[i] * std::norm(eval_harmonic(QNum::from_values(0, 1, 1), q2.nodes[i]));
    CHECK(std::abs(acc - 1.0) < 1e-13);

    for (int S : {-2, 1, 4}) {
        const int J1 = std::abs(S) + 2, J2 = std::abs(S) + 6;
        const SphereQuadrature q = build_quadrature((J1 + J2) / 2 * 2);
        const QNum a = QNum::from_doubled(S, J1, S), b = QNum::from_doubled(S, J2, S);
        cplx ov = 0.0;
        for (size_t i = 0; i < q.nodes.size(); ++i)
            ov += q.weights[i] * std::conj(eval_harmonic(a, q.nodes[i])) * eval_harmonic(b, q.nodes[i]);
        CHECK(std::abs(ov) < 1e-12);
    }
}

TEST_CASE("Y1 product expansion") {
    auto coefficient = [](int mu, const QNum& q, const QNum& target) {
        for (const ProductTerm& t : product_expand_y1(mu, q))
            if (t.q == target) return t.coefficient;
        return 0.0;
    };
    const QNum q111 = QNum::from_values(1, 1, 1);
    CHECK(coefficient(0, q111, q111) == doctest::Approx(std::sqrt(3.0 / kFourPi) / 2.0));

    const auto t0 = product_expand_y1(0, QNum::from_values(0, 0, 0));
    REQUIRE(t0.size() == 1);
    CHECK(t0[0].q == QNum::from_values(0, 1, 0));
    CHECK(t0[0].coefficient == doctest::Approx(1.0 / std::sqrt(kFourPi)));

    // projection onto 0Y22 of 0Y11 * 0Y11
    const SphereQuadrature qd = build_quadrature(6);
    const QNum y11 = QNum::from_values(0, 1, 1), y22 = QNum::from_values(0, 2, 2);
    cplx proj = 0.0;
    for (size_t i = 0; i < qd.nodes.size(); ++i)
        proj += qd.weights[i] * std::conj(eval_harmonic(y22, qd.nodes[i])) * eval_harmonic(y11, qd.nodes[i]) *
                eval_harmonic(y11, qd.nodes[i]);
    CHECK(std::abs(coefficient(1, y11, y22) - proj) < 1e-12);

    // no target below |s| or |m|
    for (int mu : {-1, 0, 1})
        for (const ProductTerm& t : product_expand_y1(mu, QNum::from_values(-2, 2, 2))) {
            CHECK(t.q.valid());
            CHECK(t.q.m == HalfInt(2 + mu));
        }
}
