#pragma once

#include <map>
#include <vector>

#include "spingeom/swsh.hpp"

namespace spingeom {

enum class Axis { x = 0, y = 1, z = 2 };

struct ElementaryParams {
    double P = 1.0;
    HalfInt s;
    double hbar = 1.0;

    void validate() const;
};

// Finite expansion over normalized basis states sY_jm / P at fixed spin weight.
class StateVector {
public:
    explicit StateVector(ElementaryParams params);
    static StateVector basis(const ElementaryParams& params, const QNum& q);

    const ElementaryParams& params() const { return params_; }
    const std::map<QNum, cplx>& coeffs() const { return coeffs_; }

    cplx coeff(const QNum& q) const;
    void add(const QNum& q, cplx c);
    void scale(cplx c);

    double norm() const;
    // <this|other>
    cplx inner(const StateVector& other) const;
    // Drops coefficients below rel * norm.
    void prune(double rel);

private:
    ElementaryParams params_;
    std::map<QNum, cplx> coeffs_;
};

enum class Letter { Px, Py, Pz, Jx, Jy, Jz, Cx, Cy, Cz, W };

// Operator product read left to right; the rightmost letter acts first.
using OperatorWord = std::vector<Letter>;

Letter p_letter(Axis a);
Letter j_letter(Axis a);
Letter c_letter(Axis a);

// S_P integrals of unit-sphere-normalized harmonics (P^3 and hbar P^2 factors).
cplx p_element(Axis a, const QNum& bra, const QNum& ket, const ElementaryParams& params);
cplx j_element(Axis a, const QNum& bra, const QNum& ket, const ElementaryParams& params);

StateVector apply(Letter letter, const StateVector& state);
StateVector apply(const OperatorWord& word, const StateVector& state);

// <state|word|state>; the state must have unit norm.
cplx moment(const StateVector& state, const OperatorWord& word);

// <sY_jm|p^a p^b|sY_jm> for unit-sphere-normalized harmonics; trace P^4.
Mat3 second_moments_closed(const QNum& q, const ElementaryParams& params);

struct PJMoments {
    CMat3 pJ;  // <psi|p^a J^b|psi>
    CMat3 JJ;  // <psi|J^a J^b|psi>
};

// Moments of psi = (+-j)Y_jj / P; params.s must equal sign * j.
PJMoments pj_jj_moments_closed(HalfInt j, int sign, const ElementaryParams& params);

struct Spectra {
    double c2;  // C_a C^a
    double j2;  // J_a J^a
    double l2;  // Laplacian part, hbar^2 (j^2 + j - s^2)
};

Spectra spectra(const ElementaryParams& params, HalfInt j);

// <C_a> on the normalized basis state q.
Vec3 com_expectation(const QNum& q, const ElementaryParams& params);

}  // namespace spingeom
