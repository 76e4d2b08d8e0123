#include "spingeom/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "spingeom/empirical.hpp"

namespace spingeom {

namespace {

constexpr cplx I{0.0, 1.0};

// Harmonic values and frame vectors on the nodes of one quadrature grid.
class GridCache {
public:
    explicit GridCache(int order) : quad_(build_quadrature(order)) {
        const size_t n = quad_.nodes.size();
        p_.resize(n);
        m_.resize(n);
        for (size_t i = 0; i < n; ++i) {
            p_[i] = momentum_direction(quad_.nodes[i], 1.0);
            m_[i] = null_tangent(quad_.nodes[i]);
        }
    }

    const std::vector<cplx>& values(const QNum& q) {
        auto it = table_.find(q);
        if (it != table_.end()) return it->second;
        std::vector<cplx> v(quad_.nodes.size());
        for (size_t i = 0; i < v.size(); ++i) v[i] = eval_harmonic(q, quad_.nodes[i]);
        return table_.emplace(q, std::move(v)).first->second;
    }

    size_t size() const { return quad_.nodes.size(); }
    double weight(size_t i) const { return quad_.weights[i]; }
    const Vec3& unit_p(size_t i) const { return p_[i]; }
    const CVec3& m(size_t i) const { return m_[i]; }

    // Pointwise image of sY_ket under the chosen operator.
    std::vector<cplx> image(QuadKind kind, Axis a, const QNum& ket, const ElementaryParams& prm) {
        const int ax = static_cast<int>(a);
        const std::vector<cplx>& y = values(ket);
        std::vector<cplx> out(size());
        if (kind == QuadKind::momentum) {
            for (size_t i = 0; i < size(); ++i) out[i] = prm.P * p_[i][ax] * y[i];
            return out;
        }
        const LadderResult up = edth_ladder(ket, false, prm.P);
        const LadderResult down = edth_ladder(ket, true, prm.P);
        const std::vector<cplx>* yu = up.target ? &values(*up.target) : nullptr;
        const std::vector<cplx>* yd = down.target ? &values(*down.target) : nullptr;
        const double s = ket.s.value();
        for (size_t i = 0; i < size(); ++i) {
            const cplx edth = yu ? up.coefficient * (*yu)[i] : 0.0;
            const cplx edth_p = yd ? down.coefficient * (*yd)[i] : 0.0;
            const cplx ma = m_[i][ax];
            const double pa = prm.P * p_[i][ax];
            if (kind == QuadKind::angular) {
                out[i] = prm.P * prm.hbar * (ma * edth_p - std::conj(ma) * edth) + s * prm.hbar * pa / prm.P * y[i];
            } else {
                const double P2 = prm.P * prm.P;
                out[i] = I * prm.hbar * (P2 * ma * edth_p + P2 * std::conj(ma) * edth - pa * y[i]);
            }
        }
        return out;
    }

    // P^2 * sum w conj(bra) f
    cplx project(const QNum& bra, const std::vector<cplx>& f, double P) {
        const std::vector<cplx>& b = values(bra);
        cplx acc = 0.0;
        for (size_t i = 0; i < size(); ++i) acc += quad_.weights[i] * std::conj(b[i]) * f[i];
        return P * P * acc;
    }

private:
    SphereQuadrature quad_;
    std::vector<Vec3> p_;
    std::vector<CVec3> m_;
    std::map<QNum, std::vector<cplx>> table_;
};

class Accum {
public:
    void add(cplx got, cplx ref) {
        const double e = std::abs(got - ref);
        abs_ = std::max(abs_, e);
        if (std::abs(ref) > 1e-12) rel_ = std::max(rel_, e / std::abs(ref));
        else rel_ = std::max(rel_, e);
    }
    void add_error(double e) {
        abs_ = std::max(abs_, e);
        rel_ = std::max(rel_, e);
    }
    CheckRecord record(std::string name, std::string range, double tol) const {
        return {std::move(name), std::move(range), abs_, rel_, tol, abs_ <= tol};
    }

private:
    double abs_ = 0.0;
    double rel_ = 0.0;
};

std::vector<HalfInt> spin_weights(const SuiteLimits& lim) {
    const int smax = std::min(lim.s_max.doubled(), lim.j_max.doubled());
    std::vector<HalfInt> out;
    for (int S = -smax; S <= smax; ++S) out.push_back(HalfInt::from_doubled(S));
    return out;
}

std::vector<QNum> block(HalfInt s, HalfInt j_max) {
    std::vector<QNum> out;
    for (HalfInt j = s.abs(); j <= j_max; j += HalfInt(1))
        for (HalfInt m = -j; m <= j; m += HalfInt(1)) out.push_back({s, j, m});
    return out;
}

std::string range_text(const SuiteLimits& lim, const std::string& extra = "") {
    std::string r = "|s|<=" + HalfInt::from_doubled(std::min(lim.s_max.doubled(), lim.j_max.doubled())).str() +
                    ", j<=" + lim.j_max.str();
    if (!extra.empty()) r += ", " + extra;
    return r;
}

double max_diff(const StateVector& a, const StateVector& b) {
    double e = 0.0;
    for (const auto& [q, c] : a.coeffs()) e = std::max(e, std::abs(c - b.coeff(q)));
    for (const auto& [q, c] : b.coeffs()) e = std::max(e, std::abs(c - a.coeff(q)));
    return e;
}

StateVector combine(const ElementaryParams& prm, std::initializer_list<std::pair<cplx, const StateVector*>> parts) {
    StateVector out(prm);
    for (const auto& [w, v] : parts)
        for (const auto& [q, c] : v->coeffs()) out.add(q, w * c);
    return out;
}

double eps(int a, int b, int c) {
    return 0.5 * (a - b) * (b - c) * (c - a);
}

StateVector apply_tensor_J(int c, int d, const StateVector& v) {
    StateVector out(v.params());
    for (int e = 0; e < 3; ++e) {
        const double w = eps(c, d, e);
        if (w == 0.0) continue;
        const StateVector img = apply(j_letter(static_cast<Axis>(e)), v);
        for (const auto& [q, x] : img.coeffs()) out.add(q, w * x);
    }
    return out;
}

StateVector apply_word(std::initializer_list<Letter> w, const StateVector& v) {
    return spingeom::apply(OperatorWord(w), v);
}

ElementaryParams with_s(const ElementaryParams& base, HalfInt s) {
    ElementaryParams p = base;
    p.s = s;
    return p;
}

void check_quadrature_regime(const QNum& q) {
    if (q.s.abs() > HalfInt(3) || q.j > HalfInt(8)) throw std::out_of_range("quadrature regime is |s|<=3, j<=8");
}

}  // namespace

bool VerificationReport::all_pass() const {
    return std::all_of(records.begin(), records.end(), [](const CheckRecord& r) { return r.pass; });
}

const CheckRecord* VerificationReport::find(const std::string& name) const {
    for (const auto& r : records)
        if (r.name == name) return &r;
    return nullptr;
}

std::string VerificationReport::to_json() const {
    nlohmann::ordered_json j;
    j["all_pass"] = all_pass();
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& r : records) {
        nlohmann::ordered_json c;
        c["name"] = r.name;
        c["range"] = r.range;
        c["max_abs_err"] = r.max_abs_err;
        c["max_rel_err"] = r.max_rel_err;
        c["tol"] = r.tol;
        c["pass"] = r.pass;
        j["checks"].push_back(c);
    }
    return j.dump(2);
}

cplx quadrature_matrix_element(QuadKind kind, Axis a, const QNum& bra, const QNum& ket,
                               const ElementaryParams& params) {
    params.validate();
    bra.validate();
    ket.validate();
    check_quadrature_regime(bra);
    check_quadrature_regime(ket);
    if (bra.s != params.s || ket.s != params.s) throw std::domain_error("spin weight mismatch");
    GridCache grid(bra.j.doubled() + ket.j.doubled() + 4);
    return grid.project(bra, grid.image(kind, a, ket, params), params.P);
}

cplx closed_matrix_element(QuadKind kind, Axis a, const QNum& bra, const QNum& ket,
                           const ElementaryParams& params) {
    switch (kind) {
        case QuadKind::momentum: return p_element(a, bra, ket, params);
        case QuadKind::angular: return j_element(a, bra, ket, params);
        case QuadKind::centre_of_mass: {
            const StateVector img = apply(c_letter(a), StateVector::basis(params, ket));
            return params.P * params.P * img.coeff(bra);
        }
    }
    return 0.0;
}

cplx j_element_from_p(Axis a, const QNum& bra, const QNum& ket, const ElementaryParams& params) {
    params.validate();
    const double k = bra.j.value(), j = ket.j.value(), s = ket.s.value();
    cplx acc = 4.0 * s * p_element(a, bra, ket, params);
    const HalfInt one(1);
    const QNum bra_up{bra.s + one, bra.j, bra.m}, ket_up{ket.s + one, ket.j, ket.m};
    if (bra_up.valid() && ket_up.valid()) {
        ElementaryParams pu = with_s(params, params.s + one);
        acc += std::sqrt((k + s + 1) * (k - s)) * std::sqrt((j + s + 1) * (j - s)) * p_element(a, bra_up, ket_up, pu);
    }
    const QNum bra_dn{bra.s - one, bra.j, bra.m}, ket_dn{ket.s - one, ket.j, ket.m};
    if (bra_dn.valid() && ket_dn.valid()) {
        ElementaryParams pd = with_s(params, params.s - one);
        acc -= std::sqrt((k - s + 1) * (k + s)) * std::sqrt((j - s + 1) * (j + s)) * p_element(a, bra_dn, ket_dn, pd);
    }
    return params.hbar / (2.0 * params.P) * acc;
}

VerificationReport run_suite(const SuiteLimits& limits, double tol, const ElementaryParams& base) {
    base.validate();
    VerificationReport rep;
    const std::vector<HalfInt> spins = spin_weights(limits);
    const int order = 2 * limits.j_max.doubled() + 4;
    const std::string range = range_text(limits);
    const HalfInt j_alg = std::min(limits.j_max, HalfInt(4));
    const std::string range_alg = range_text({limits.s_max, j_alg});
    const double P = base.P, hbar = base.hbar;
    constexpr Axis axes[3] = {Axis::x, Axis::y, Axis::z};

    Accum ortho, ladder_comm, kernel, fd, product, pel, jel, jred, cpoint, wpoint;
    std::mt19937 rng(20240611u);
    std::uniform_real_distribution<double> u01(0.0, 1.0);

    for (HalfInt s : spins) {
        const ElementaryParams prm = with_s(base, s);
        const std::vector<QNum> states = block(s, limits.j_max);
        GridCache grid(order);

        int killed_edth = 0, killed_edth_p = 0;
        for (const QNum& q : states) {
            const LadderResult up = edth_ladder(q, false, P), down = edth_ladder(q, true, P);
            if (!up.target) ++killed_edth;
            if (!down.target) ++killed_edth_p;
            // (edth edth' - edth' edth) = -s / P^2
            double a = 0.0, b = 0.0;
            if (down.target) {
                const LadderResult back = edth_ladder(*down.target, false, P);
                a = down.coefficient * back.coefficient;
            }
            if (up.target) {
                const LadderResult back = edth_ladder(*up.target, true, P);
                b = up.coefficient * back.coefficient;
            }
            ladder_comm.add(a - b, -s.value() / (P * P));
        }
        const int expect = 2 * s.abs().doubled() / 2 + 1;
        kernel.add_error(std::abs(killed_edth - (s.doubled() >= 0 ? expect : 0)));
        kernel.add_error(std::abs(killed_edth_p - (s.doubled() <= 0 ? expect : 0)));

        for (const QNum& b : states)
            for (const QNum& k : states) {
                const std::vector<cplx>& yk = grid.values(k);
                ortho.add(grid.project(b, yk, 1.0), (b == k) ? 1.0 : 0.0);
            }

        for (const QNum& k : states) {
            for (Axis a : axes) {
                const std::vector<cplx> fp = grid.image(QuadKind::momentum, a, k, prm);
                const std::vector<cplx> fj = grid.image(QuadKind::angular, a, k, prm);
                const std::vector<cplx> fc = grid.image(QuadKind::centre_of_mass, a, k, prm);
                const StateVector cimg = apply(c_letter(a), StateVector::basis(prm, k));
                for (const QNum& b : states) {
                    pel.add(p_element(a, b, k, prm), grid.project(b, fp, P));
                    const cplx jq = grid.project(b, fj, P);
                    jel.add(j_element(a, b, k, prm), jq);
                    jred.add(j_element_from_p(a, b, k, prm), j_element(a, b, k, prm));
                    cpoint.add(P * P * cimg.coeff(b), grid.project(b, fc, P));
                }
            }

            // Pointwise W on sY: sum_c J_c (p_c Y), with edth p = m, edth' p = conj(m).
            const std::vector<cplx>& y = grid.values(k);
            const LadderResult up = edth_ladder(k, false, P), down = edth_ladder(k, true, P);
            const std::vector<cplx>* yu = up.target ? &grid.values(*up.target) : nullptr;
            const std::vector<cplx>* yd = down.target ? &grid.values(*down.target) : nullptr;
            for (size_t i = 0; i < grid.size(); ++i) {
                const cplx edth = yu ? up.coefficient * (*yu)[i] : 0.0;
                const cplx edth_p = yd ? down.coefficient * (*yd)[i] : 0.0;
                cplx w = 0.0;
                for (int c = 0; c < 3; ++c) {
                    const cplx mc = grid.m(i)[c];
                    const double pc = P * grid.unit_p(i)[c];
                    w += P * hbar * (mc * (std::conj(mc) * y[i] + pc * edth_p) - std::conj(mc) * (mc * y[i] + pc * edth)) +
                         s.value() * hbar * pc * pc / P * y[i];
                }
                wpoint.add(w, hbar * P * s.value() * y[i]);
            }

            // Product expansion against quadrature projections.
            for (int mu = -1; mu <= 1; ++mu) {
                const std::vector<cplx>& y1 = grid.values(QNum{HalfInt(0), HalfInt(1), HalfInt(mu)});
                std::vector<cplx> prod(grid.size());
                for (size_t i = 0; i < grid.size(); ++i) prod[i] = y1[i] * y[i];
                const auto terms = product_expand_y1(mu, k);
                const HalfInt mt = k.m + HalfInt(mu);
                for (HalfInt jp = std::max(k.j - HalfInt(1), s.abs()); jp <= k.j + HalfInt(1); jp += HalfInt(1)) {
                    const QNum t{s, jp, mt};
                    if (!t.valid()) continue;
                    cplx closed = 0.0;
                    for (const auto& term : terms)
                        if (term.q == t) closed = term.coefficient;
                    product.add(closed, grid.project(t, prod, 1.0));
                }
            }
        }

        // Finite-difference edth on a few random points.
        if (s.abs() <= HalfInt(2)) {
            const double h = 1e-5;
            for (const QNum& q : states) {
                if (q.j > HalfInt(4)) continue;
                for (int r = 0; r < 20; ++r) {
                    const SpherePoint pt = SpherePoint::at(0.3 + (kPi - 0.6) * u01(rng), 2.0 * kPi * u01(rng));
                    const cplx z = pt.zeta();
                    auto f = [&](cplx zz) { return eval_harmonic(q, SpherePoint::from_zeta(zz)); };
                    const cplx dx = (f(z + h) - f(z - h)) / (2.0 * h);
                    const cplx dy = (f(z + I * h) - f(z - I * h)) / (2.0 * h);
                    const cplx d_zbar = 0.5 * (dx + I * dy);
                    const cplx d_z = 0.5 * (dx - I * dy);
                    const double n = 1.0 + std::norm(z);
                    const cplx val = f(z);
                    const cplx edth_num = (n * d_zbar + s.value() * z * val) / (std::sqrt(2.0) * P);
                    const cplx edth_p_num = (n * d_z - s.value() * std::conj(z) * val) / (std::sqrt(2.0) * P);
                    const LadderResult up = edth_ladder(q, false, P), down = edth_ladder(q, true, P);
                    fd.add(edth_num, up.target ? up.coefficient * eval_harmonic(*up.target, pt) : 0.0);
                    fd.add(edth_p_num, down.target ? down.coefficient * eval_harmonic(*down.target, pt) : 0.0);
                }
            }
        }
    }

    rep.records.push_back(ortho.record("harmonic_orthonormality", range, tol));
    rep.records.push_back(ladder_comm.record("edth_commutator", range, tol));
    rep.records.push_back(kernel.record("edth_kernel_dimension", range, tol));
    rep.records.push_back(fd.record("edth_finite_difference", range_text(limits, "j<=4, |s|<=2, h=1e-5"), std::max(tol, 1e-6)));
    rep.records.push_back(product.record("y1_product_expansion", range, tol));
    rep.records.push_back(pel.record("p_elements_vs_quadrature", range, tol));
    rep.records.push_back(jel.record("j_elements_vs_quadrature", range, tol));
    rep.records.push_back(jred.record("j_elements_from_p_elements", range, tol));
    rep.records.push_back(cpoint.record("centre_of_mass_pointwise_vs_composition", range, tol));
    rep.records.push_back(wpoint.record("w_pointwise_casimir", range, tol));

    // Algebra on basis states.
    Accum pp, pj, jj, pc, cc, ident, wcas, comzero, c2, j2, m2, pjjj, dsq;
    for (HalfInt s : spins) {
        const ElementaryParams prm = with_s(base, s);
        for (const QNum& q : block(s, limits.j_max)) {
            const StateVector psi = StateVector::basis(prm, q);
            StateVector pimg[3] = {psi, psi, psi};
            for (int a = 0; a < 3; ++a) pimg[a] = apply(p_letter(axes[a]), psi);

            for (int a = 0; a < 3; ++a)
                for (int b = 0; b < 3; ++b) {
                    const StateVector ab = apply(p_letter(axes[a]), pimg[b]);
                    const StateVector ba = apply(p_letter(axes[b]), pimg[a]);
                    pp.add_error(max_diff(ab, ba));
                }

            for (int a = 0; a < 3; ++a)
                for (int c = 0; c < 3; ++c)
                    for (int d = 0; d < 3; ++d) {
                        const StateVector lhs1 = apply(p_letter(axes[a]), apply_tensor_J(c, d, psi));
                        const StateVector lhs2 = apply_tensor_J(c, d, pimg[a]);
                        StateVector rhs(prm);
                        if (a == c) for (const auto& [k, x] : pimg[d].coeffs()) rhs.add(k, -I * hbar * x);
                        if (a == d) for (const auto& [k, x] : pimg[c].coeffs()) rhs.add(k, I * hbar * x);
                        pj.add_error(max_diff(combine(prm, {{1.0, &lhs1}, {-1.0, &lhs2}}), rhs));
                    }

            for (int a = 0; a < 3; ++a)
                for (int b = 0; b < 3; ++b)
                    for (int c = 0; c < 3; ++c)
                        for (int d = 0; d < 3; ++d) {
                            if (a == b || c == d) continue;
                            const StateVector x1 = apply_tensor_J(a, b, apply_tensor_J(c, d, psi));
                            const StateVector x2 = apply_tensor_J(c, d, apply_tensor_J(a, b, psi));
                            StateVector rhs(prm);
                            auto acc = [&](int e, int f, double w) {
                                if (e == f) return;
                                const StateVector t = apply_tensor_J(e, f, psi);
                                for (const auto& [k, x] : t.coeffs()) rhs.add(k, -I * hbar * w * x);
                            };
                            if (b == c) acc(a, d, 1.0);
                            if (b == d) acc(a, c, -1.0);
                            if (a == d) acc(b, c, 1.0);
                            if (a == c) acc(b, d, -1.0);
                            jj.add_error(max_diff(combine(prm, {{1.0, &x1}, {-1.0, &x2}}), rhs));
                        }

            const StateVector wimg = apply(Letter::W, psi);
            StateVector wexp = psi;
            wexp.scale(hbar * P * s.value());
            wcas.add_error(max_diff(wimg, wexp));

            const Spectra sp = spectra(prm, q.j);
            StateVector ccimg(prm), jjimg(prm);
            for (int a = 0; a < 3; ++a) {
                const StateVector t1 = apply_word({c_letter(axes[a]), c_letter(axes[a])}, psi);
                const StateVector t2 = apply_word({j_letter(axes[a]), j_letter(axes[a])}, psi);
                for (const auto& [k, x] : t1.coeffs()) ccimg.add(k, x);
                for (const auto& [k, x] : t2.coeffs()) jjimg.add(k, x);
            }
            StateVector c2exp = psi, j2exp = psi;
            c2exp.scale(sp.c2);
            j2exp.scale(sp.j2);
            c2.add_error(max_diff(ccimg, c2exp));
            j2.add_error(max_diff(jjimg, j2exp));
            c2.add(sp.c2 - sp.l2 * P * P, hbar * hbar * P * P);
            c2.add(sp.j2 - sp.l2, hbar * hbar * s.value() * s.value());

            const Mat3 closed = second_moments_closed(q, prm) / (P * P);
            for (int a = 0; a < 3; ++a)
                for (int b = 0; b < 3; ++b)
                    m2.add(moment(psi, {p_letter(axes[a]), p_letter(axes[b])}), closed(a, b));

            if (q.j == s.abs() && q.m == q.j && q.j.doubled() >= 1) {
                const int sign = s.doubled() > 0 ? 1 : -1;
                const PJMoments pjm = pj_jj_moments_closed(q.j, sign, prm);
                for (int a = 0; a < 3; ++a)
                    for (int b = 0; b < 3; ++b) {
                        pjjj.add(moment(psi, {p_letter(axes[a]), j_letter(axes[b])}), pjm.pJ(a, b));
                        pjjj.add(moment(psi, {j_letter(axes[a]), j_letter(axes[b])}), pjm.JJ(a, b));
                    }
            }

            for (double beta : {0.0, 0.7, 1.9}) {
                const ElementaryParams prm2 = with_s(base, -s);
                const QNum q2{-s, q.j, -q.m};
                const PlacedState a{q, prm, {}};
                const PlacedState b{q2, prm2, {Vec3(0.4, beta, -0.3), Vec3(0.2, -0.1, 0.5)}};
                dsq.add(pair_Dsq_moments(a, b), pair_Dsq(q, q2, beta));
            }

            if (q.j > j_alg) continue;
            for (int a = 0; a < 3; ++a) {
                const Vec3 com = com_expectation(q, prm);
                comzero.add_error(std::abs(com[a]));
                const StateVector cimg_a = apply(c_letter(axes[a]), psi);
                for (int b = 0; b < 3; ++b) {
                    // [p_a, C_b] = -i hbar (delta_ab P^2 - p_a p_b)
                    const StateVector x1 = apply(p_letter(axes[a]), apply(c_letter(axes[b]), psi));
                    const StateVector x2 = apply(c_letter(axes[b]), pimg[a]);
                    const StateVector papb = apply(p_letter(axes[a]), pimg[b]);
                    StateVector rhs(prm);
                    if (a == b) for (const auto& [k, x] : psi.coeffs()) rhs.add(k, -I * hbar * P * P * x);
                    for (const auto& [k, x] : papb.coeffs()) rhs.add(k, I * hbar * x);
                    pc.add_error(max_diff(combine(prm, {{1.0, &x1}, {-1.0, &x2}}), rhs));

                    // [C_a, C_b] = -i hbar P^2 J_ab
                    const StateVector y1 = apply(c_letter(axes[a]), apply(c_letter(axes[b]), psi));
                    const StateVector y2 = apply(c_letter(axes[b]), cimg_a);
                    const StateVector jab = apply_tensor_J(a, b, psi);
                    StateVector rhs2(prm);
                    for (const auto& [k, x] : jab.coeffs()) rhs2.add(k, -I * hbar * P * P * x);
                    cc.add_error(max_diff(combine(prm, {{1.0, &y1}, {-1.0, &y2}}), rhs2));

                    // P^2 J_ab - C_a p_b + C_b p_a - eps_abc p_c W = 0
                    const StateVector capb = apply(c_letter(axes[a]), pimg[b]);
                    const StateVector cbpa = apply(c_letter(axes[b]), pimg[a]);
                    StateVector total(prm);
                    for (const auto& [k, x] : jab.coeffs()) total.add(k, P * P * x);
                    for (const auto& [k, x] : capb.coeffs()) total.add(k, -x);
                    for (const auto& [k, x] : cbpa.coeffs()) total.add(k, x);
                    for (int c = 0; c < 3; ++c) {
                        const double e = eps(a, b, c);
                        if (e == 0.0) continue;
                        const StateVector pw = apply(p_letter(axes[c]), wimg);
                        for (const auto& [k, x] : pw.coeffs()) total.add(k, -e * x);
                    }
                    ident.add_error(total.norm() / (P * P * P * hbar));
                }
            }
        }
    }

    rep.records.push_back(pp.record("commutator_p_p", range, tol));
    rep.records.push_back(pj.record("commutator_p_J", range, tol));
    rep.records.push_back(jj.record("commutator_J_J", range, tol));
    rep.records.push_back(pc.record("commutator_p_C", range_alg, tol));
    rep.records.push_back(cc.record("commutator_C_C", range_alg, tol));
    rep.records.push_back(ident.record("angular_momentum_decomposition", range_alg, tol));
    rep.records.push_back(wcas.record("w_casimir", range, tol));
    rep.records.push_back(comzero.record("centre_of_mass_expectation_zero", range_alg, tol));
    rep.records.push_back(c2.record("casimir_spectra", range, tol));
    rep.records.push_back(j2.record("angular_momentum_square", range, tol));
    rep.records.push_back(m2.record("second_moments_closed", range, tol));
    rep.records.push_back(pjjj.record("pj_jj_moments_closed", range_text(limits, "j=|s|=m"), tol));
    rep.records.push_back(dsq.record("dsq_moments_vs_closed", range_text(limits, "beta in {0,0.7,1.9}"), tol));
    return rep;
}

}  // namespace spingeom
