#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "json.hpp"

#include "spingeom/oracle.hpp"

using namespace spingeom;

namespace {

QNum q(double s, double j, double m) {
    return QNum::from_values(s, j, m);
}

}  // namespace

TEST_CASE("quadrature elements") {
    const double P = 1.3, h = 0.7;
    const ElementaryParams p0{P, HalfInt(0), h};
    const cplx pz = quadrature_matrix_element(QuadKind::momentum, Axis::z, q(0, 1, 0), q(0, 0, 0), p0);
    CHECK(std::abs(pz - P * P * P / std::sqrt(3.0)) < 1e-11);

    const ElementaryParams ph{P, HalfInt::from_doubled(1), h};
    const cplx jz = quadrature_matrix_element(QuadKind::angular, Axis::z, q(0.5, 0.5, 0.5), q(0.5, 0.5, 0.5), ph);
    CHECK(std::abs(jz - h * P * P / 2.0) < 1e-11);

    const ElementaryParams p1{P, HalfInt(1), h};
    for (Axis a : {Axis::x, Axis::y, Axis::z})
        for (HalfInt j = HalfInt(1); j <= HalfInt(3); j += HalfInt(1))
            for (HalfInt m = -j; m <= j; m += HalfInt(1)) {
                const QNum bra{HalfInt(1), j, m};
                const cplx quad = quadrature_matrix_element(QuadKind::centre_of_mass, a, bra, q(1, 2, 1), p1);
                const cplx comp = closed_matrix_element(QuadKind::centre_of_mass, a, bra, q(1, 2, 1), p1);
                CHECK(std::abs(quad - comp) < 1e-10);
            }
}

TEST_CASE("quadrature regime and input checks") {
    const ElementaryParams p{1.0, HalfInt(0), 1.0};
    CHECK_THROWS_AS(quadrature_matrix_element(QuadKind::momentum, Axis::z, q(0, 9, 0), q(0, 8, 0), p), std::out_of_range);
    const ElementaryParams p4{1.0, HalfInt::from_doubled(7), 1.0};
    CHECK_THROWS_AS(quadrature_matrix_element(QuadKind::momentum, Axis::z, q(3.5, 3.5, 0.5), q(3.5, 3.5, 0.5), p4),
                    std::out_of_range);
    CHECK_THROWS_AS(quadrature_matrix_element(QuadKind::momentum, Axis::z, q(1, 1, 0), q(1, 1, 0), p), std::domain_error);
}

TEST_CASE("J elements from p elements") {
    const ElementaryParams p{0.8, HalfInt::from_doubled(-3), 1.2};
    for (Axis a : {Axis::x, Axis::y, Axis::z})
        for (int M = -5; M <= 5; M += 2)
            for (int N = -5; N <= 5; N += 2) {
                const QNum bra = QNum::from_doubled(-3, 5, M), ket = QNum::from_doubled(-3, 5, N);
                CHECK(std::abs(j_element_from_p(a, bra, ket, p) - j_element(a, bra, ket, p)) < 1e-12);
            }
}

TEST_CASE("default suite passes") {
    const VerificationReport rep = run_suite(SuiteLimits{}, 1e-9);
    CHECK(rep.all_pass());
    for (const CheckRecord& r : rep.records) {
        INFO(r.name << " " << r.max_abs_err);
        CHECK(r.pass);
        CHECK(r.pass == (r.max_abs_err <= r.tol));
    }
    REQUIRE(rep.find("commutator_C_C") != nullptr);
    CHECK(rep.find("no_such_check") == nullptr);

    const auto js = nlohmann::json::parse(rep.to_json());
    CHECK(js["all_pass"].get<bool>());
    CHECK(js["checks"].size() == rep.records.size());
    CHECK(js["checks"][0].contains("max_rel_err"));
}

TEST_CASE("tolerance below the float floor") {
    const VerificationReport rep = run_suite(SuiteLimits{}, 1e-16);
    CHECK_FALSE(rep.all_pass());
    for (const CheckRecord& r : rep.records) CHECK(r.pass == (r.max_abs_err <= r.tol));
    CHECK_NOTHROW(nlohmann::json::parse(rep.to_json()));
}

TEST_CASE("empty range") {
    const VerificationReport rep = run_suite(SuiteLimits{HalfInt(2), HalfInt(0)}, 1e-9);
    CHECK(rep.all_pass());
    for (const CheckRecord& r : rep.records) CHECK(r.range.find("j<=0") != std::string::npos);
}

TEST_CASE("suite is deterministic") {
    const SuiteLimits lim{HalfInt(1), HalfInt::from_doubled(5)};
    CHECK(run_suite(lim, 1e-9).to_json() == run_suite(lim, 1e-9).to_json());
}
