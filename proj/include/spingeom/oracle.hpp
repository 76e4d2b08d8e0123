#pragma once

#include <string>
#include <vector>

#include "spingeom/operators.hpp"

namespace spingeom {

struct CheckRecord {
    std::string name;
    std::string range;
    double max_abs_err = 0.0;
    double max_rel_err = 0.0;
    double tol = 0.0;
    bool pass = true;
};

struct VerificationReport {
    std::vector<CheckRecord> records;

    bool all_pass() const;
    const CheckRecord* find(const std::string& name) const;
    std::string to_json() const;
};

enum class QuadKind { momentum, angular, centre_of_mass };

struct SuiteLimits {
    HalfInt s_max = HalfInt(2);
    HalfInt j_max = HalfInt(6);
};

// <sY_bra|O|sY_ket> over S_P with O evaluated pointwise; |s| <= 3, j <= 8.
cplx quadrature_matrix_element(QuadKind kind, Axis a, const QNum& bra, const QNum& ket,
                               const ElementaryParams& params);

// Closed-form matrix element in the same normalization as quadrature_matrix_element.
cplx closed_matrix_element(QuadKind kind, Axis a, const QNum& bra, const QNum& ket,
                           const ElementaryParams& params);

// J element assembled from p elements at spin weights s-1, s, s+1.
cplx j_element_from_p(Axis a, const QNum& bra, const QNum& ket, const ElementaryParams& params);

VerificationReport run_suite(const SuiteLimits& limits, double tol, const ElementaryParams& base = {1.3, HalfInt(0), 0.7});

}  // namespace spingeom
