#include "spingeom/operators.hpp"

#include <cmath>
#include <stdexcept>

#include "spingeom/radical.hpp"

namespace spingeom {

namespace {

struct Term {
    QNum q;
    cplx c;
};

constexpr cplx I{0.0, 1.0};

void push_term(std::vector<Term>& out, const QNum& q, cplx c) {
    if (c != 0.0) out.push_back({q, c});
}

QNum shifted(const QNum& q, int dj, int dm) {
    return {q.s, q.j + HalfInt(dj), q.m + HalfInt(dm)};
}

// <sY_target|p_a|sY_ket> / P^3
std::vector<Term> p_terms_unit(Axis a, const QNum& ket) {
    const std::int64_t J = ket.j.doubled(), S = ket.s.doubled(), M = ket.m.doubled();
    std::vector<Term> out;
    out.reserve(6);

    const std::int64_t den_up = 16 * (J + 2) * (J + 2);
    switch (a) {
        case Axis::x:
            push_term(out, shifted(ket, 1, -1), sqrt_ratio({J + S + 2, J - S + 2, J - M + 2, J - M + 4}, {den_up, J + 1, J + 3}));
            push_term(out, shifted(ket, 1, 1), -sqrt_ratio({J + S + 2, J - S + 2, J + M + 2, J + M + 4}, {den_up, J + 1, J + 3}));
            break;
        case Axis::y:
            push_term(out, shifted(ket, 1, 1), I * sqrt_ratio({J + S + 2, J - S + 2, J + M + 2, J + M + 4}, {den_up, J + 1, J + 3}));
            push_term(out, shifted(ket, 1, -1), I * sqrt_ratio({J + S + 2, J - S + 2, J - M + 2, J - M + 4}, {den_up, J + 1, J + 3}));
            break;
        case Axis::z:
            push_term(out, shifted(ket, 1, 0), sqrt_ratio({J + S + 2, J - S + 2, J + M + 2, J - M + 2}, {4 * (J + 2) * (J + 2), J + 1, J + 3}));
            break;
    }

    if (J > 0 && S != 0) {
        const double sgn = S > 0 ? 1.0 : -1.0;
        const std::int64_t den_same = 4 * J * J * (J + 2) * (J + 2);
        const double lower = sgn * sqrt_ratio({S * S, J + M, J - M + 2}, {den_same});
        const double raise = sgn * sqrt_ratio({S * S, J - M, J + M + 2}, {den_same});
        switch (a) {
            case Axis::x:
                push_term(out, shifted(ket, 0, -1), lower);
                push_term(out, shifted(ket, 0, 1), raise);
                break;
            case Axis::y:
                push_term(out, shifted(ket, 0, -1), I * lower);
                push_term(out, shifted(ket, 0, 1), -I * raise);
                break;
            case Axis::z:
                push_term(out, ket, static_cast<double>(S * M) / static_cast<double>(J * (J + 2)));
                break;
        }
    }

    if (J - 2 >= (S < 0 ? -S : S)) {
        const std::int64_t den_down = 16 * J * J;
        const double raise = sqrt_ratio({J + S, J - S, J - M, J - M - 2}, {den_down, J - 1, J + 1});
        const double lower = sqrt_ratio({J + S, J - S, J + M, J + M - 2}, {den_down, J - 1, J + 1});
        switch (a) {
            case Axis::x:
                push_term(out, shifted(ket, -1, 1), raise);
                push_term(out, shifted(ket, -1, -1), -lower);
                break;
            case Axis::y:
                push_term(out, shifted(ket, -1, -1), -I * lower);
                push_term(out, shifted(ket, -1, 1), -I * raise);
                break;
            case Axis::z:
                push_term(out, shifted(ket, -1, 0), sqrt_ratio({J + S, J - S, J + M, J - M}, {4 * J * J, J - 1, J + 1}));
                break;
        }
    }
    return out;
}

// <sY_target|J_a|sY_ket> / (hbar P^2)
std::vector<Term> j_terms_unit(Axis a, const QNum& ket) {
    const std::int64_t J = ket.j.doubled(), M = ket.m.doubled();
    const double raise = sqrt_ratio({J - M, J + M + 2}, {16});
    const double lower = sqrt_ratio({J + M, J - M + 2}, {16});
    std::vector<Term> out;
    out.reserve(2);
    switch (a) {
        case Axis::x:
            push_term(out, shifted(ket, 0, 1), raise);
            push_term(out, shifted(ket, 0, -1), lower);
            break;
        case Axis::y:
            push_term(out, shifted(ket, 0, -1), I * lower);
            push_term(out, shifted(ket, 0, 1), -I * raise);
            break;
        case Axis::z:
            push_term(out, ket, 0.5 * static_cast<double>(M));
            break;
    }
    return out;
}

void check_element_args(const QNum& bra, const QNum& ket, const ElementaryParams& params) {
    params.validate();
    bra.validate();
    ket.validate();
    if (bra.s != params.s || ket.s != params.s) throw std::domain_error("spin weight mismatch");
}

cplx lookup(const std::vector<Term>& terms, const QNum& bra) {
    for (const auto& t : terms)
        if (t.q == bra) return t.c;
    return 0.0;
}

constexpr double kPrune = 1e-15;

StateVector apply_p(Axis a, const StateVector& st) {
    StateVector out(st.params());
    const double P = st.params().P;
    for (const auto& [q, c] : st.coeffs())
        for (const auto& t : p_terms_unit(a, q)) out.add(t.q, c * t.c * P);
    out.prune(kPrune);
    return out;
}

StateVector apply_j(Axis a, const StateVector& st) {
    StateVector out(st.params());
    const double hbar = st.params().hbar;
    for (const auto& [q, c] : st.coeffs())
        for (const auto& t : j_terms_unit(a, q)) out.add(t.q, c * t.c * hbar);
    out.prune(kPrune);
    return out;
}

double levi_civita(int a, int b, int c) {
    return 0.5 * (a - b) * (b - c) * (c - a);
}

void accumulate(StateVector& acc, const StateVector& part, cplx w) {
    for (const auto& [q, c] : part.coeffs()) acc.add(q, w * c);
}

}  // namespace

void ElementaryParams::validate() const {
    if (!(P > 0.0) || !std::isfinite(P)) throw std::domain_error("P must be positive");
    if (!(hbar > 0.0) || !std::isfinite(hbar)) throw std::domain_error("hbar must be positive");
}

StateVector::StateVector(ElementaryParams params) : params_(params) { params_.validate(); }

StateVector StateVector::basis(const ElementaryParams& params, const QNum& q) {
    q.validate();
    if (q.s != params.s) throw std::domain_error("spin weight mismatch");
    StateVector v(params);
    v.add(q, 1.0);
    return v;
}

cplx StateVector::coeff(const QNum& q) const {
    auto it = coeffs_.find(q);
    return it == coeffs_.end() ? cplx(0.0) : it->second;
}

void StateVector::add(const QNum& q, cplx c) {
    if (q.s != params_.s || !q.valid()) throw std::domain_error("component " + q.str() + " does not fit spin weight " + params_.s.str());
    coeffs_[q] += c;
}

void StateVector::scale(cplx c) {
    for (auto& kv : coeffs_) kv.second *= c;
}

double StateVector::norm() const {
    double n2 = 0.0;
    for (const auto& kv : coeffs_) n2 += std::norm(kv.second);
    return std::sqrt(n2);
}

cplx StateVector::inner(const StateVector& other) const {
    cplx acc = 0.0;
    const auto& small = coeffs_.size() <= other.coeffs_.size() ? coeffs_ : other.coeffs_;
    const bool this_small = &small == &coeffs_;
    for (const auto& [q, c] : small) {
        if (this_small)
            acc += std::conj(c) * other.coeff(q);
        else
            acc += std::conj(coeff(q)) * c;
    }
    return acc;
}

void StateVector::prune(double rel) {
    const double cut = rel * norm();
    for (auto it = coeffs_.begin(); it != coeffs_.end();) {
        if (std::abs(it->second) < cut || it->second == 0.0)
            it = coeffs_.erase(it);
        else
            ++it;
    }
}

Letter p_letter(Axis a) { return static_cast<Letter>(static_cast<int>(Letter::Px) + static_cast<int>(a)); }
Letter j_letter(Axis a) { return static_cast<Letter>(static_cast<int>(Letter::Jx) + static_cast<int>(a)); }
Letter c_letter(Axis a) { return static_cast<Letter>(static_cast<int>(Letter::Cx) + static_cast<int>(a)); }

cplx p_element(Axis a, const QNum& bra, const QNum& ket, const ElementaryParams& params) {
    check_element_args(bra, ket, params);
    const double P = params.P;
    return P * P * P * lookup(p_terms_unit(a, ket), bra);
}

cplx j_element(Axis a, const QNum& bra, const QNum& ket, const ElementaryParams& params) {
    check_element_args(bra, ket, params);
    return params.hbar * params.P * params.P * lookup(j_terms_unit(a, ket), bra);
}

StateVector apply(Letter letter, const StateVector& state) {
    const int code = static_cast<int>(letter);
    if (letter <= Letter::Pz) return apply_p(static_cast<Axis>(code), state);
    if (letter <= Letter::Jz) return apply_j(static_cast<Axis>(code - 3), state);

    StateVector out(state.params());
    if (letter == Letter::W) {
        for (int c = 0; c < 3; ++c)
            accumulate(out, apply_j(static_cast<Axis>(c), apply_p(static_cast<Axis>(c), state)), 1.0);
        out.prune(kPrune);
        return out;
    }

    // C_a = eps_abc J_c p_b + i hbar p_a, with p acting first.
    const int a = code - 6;
    for (int b = 0; b < 3; ++b) {
        for (int c = 0; c < 3; ++c) {
            const double e = levi_civita(a, b, c);
            if (e == 0.0) continue;
            accumulate(out, apply_j(static_cast<Axis>(c), apply_p(static_cast<Axis>(b), state)), e);
        }
    }
    accumulate(out, apply_p(static_cast<Axis>(a), state), I * state.params().hbar);
    out.prune(kPrune);
    return out;
}

StateVector apply(const OperatorWord& word, const StateVector& state) {
    if (word.empty()) throw std::domain_error("empty operator word");
    StateVector cur = state;
    for (auto it = word.rbegin(); it != word.rend(); ++it) cur = apply(*it, cur);
    return cur;
}

cplx moment(const StateVector& state, const OperatorWord& word) {
    if (std::abs(state.norm() - 1.0) > 1e-10) throw std::domain_error("moment requires a normalized state");
    return state.inner(apply(word, state));
}

Mat3 second_moments_closed(const QNum& q, const ElementaryParams& params) {
    q.validate();
    params.validate();
    const double P4 = std::pow(params.P, 4);
    Mat3 out = Mat3::Zero();
    if (q.j.doubled() <= 1) {
        out.diagonal().setConstant(P4 / 3.0);
        return out;
    }
    const double j = q.j.value(), s = q.s.value(), m = q.m.value();
    const double jj = j * (j + 1.0);
    const double den = jj * (2.0 * j - 1.0) * (2.0 * j + 3.0);
    const double xx = P4 / den * (-3.0 * s * s * m * m + jj * (s * s + m * m) + jj * (j * j + j - 1.0));
    const double zz = P4 / den * (6.0 * s * s * m * m - 2.0 * jj * (s * s + m * m) + jj * (2.0 * j * j + 2.0 * j - 1.0));
    out(0, 0) = xx;
    out(1, 1) = xx;
    out(2, 2) = zz;
    return out;
}

PJMoments pj_jj_moments_closed(HalfInt j, int sign, const ElementaryParams& params) {
    params.validate();
    if (j.doubled() < 1) throw std::domain_error("j must be at least 1/2");
    if (sign != 1 && sign != -1) throw std::domain_error("sign must be +1 or -1");
    if (params.s != (sign > 0 ? j : -j)) throw std::domain_error("params.s must equal sign * j");
    const double jv = j.value();
    CMat3 bracket = CMat3::Zero();
    bracket(0, 0) = 1.0;
    bracket(1, 1) = 1.0;
    bracket(2, 2) = 2.0 * jv;
    bracket(0, 1) = I;
    bracket(1, 0) = -I;
    PJMoments out;
    out.pJ = (sign * params.hbar * params.P * jv / (2.0 * (jv + 1.0))) * bracket;
    out.JJ = (0.5 * params.hbar * params.hbar * jv) * bracket;
    return out;
}

Spectra spectra(const ElementaryParams& params, HalfInt j) {
    params.validate();
    if (j < params.s.abs() || !(j - params.s).is_integer())
        throw std::domain_error("j must satisfy j >= |s| with j - s integer");
    const double jv = j.value(), s = params.s.value();
    const double h2 = params.hbar * params.hbar;
    const double l = jv * jv + jv - s * s;
    return {params.P * params.P * h2 * (1.0 + l), h2 * jv * (jv + 1.0), h2 * l};
}

Vec3 com_expectation(const QNum& q, const ElementaryParams& params) {
    const StateVector st = StateVector::basis(params, q);
    Vec3 out;
    for (int a = 0; a < 3; ++a) out[a] = moment(st, {c_letter(static_cast<Axis>(a))}).real();
    return out;
}

}  // namespace spingeom
