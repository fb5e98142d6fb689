#include "ext_internal.hpp"

#include <sstream>

namespace takeuchi {

using detail::Cohomology;
using detail::ExtState;
using detail::HomComplex;

namespace {

std::string bideg(int n, int d) { return "(" + std::to_string(n) + "," + std::to_string(d) + ")"; }

ExtAlgebra build(std::shared_ptr<const Resolution> r, const ModulePtr& target, int L, int dmin, int dmax,
                 bool products) {
    if (!r->terminated && L > r->max_level - 1)
        throw ExtError("Ext up to level " + std::to_string(L) + " needs the resolution to level " +
                       std::to_string(L + 1));
    ExtAlgebra E;
    E.resolution = r;
    E.target = target;
    auto st = std::make_shared<ExtState>(r, target);
    st->d_min = dmin;
    const HomComplex& hc = st->complex;
    const Field k = hc.field();

    BigradedAlgebra& A = E.algebra;
    A.name = "Ext(" + r->module->name() + ", " + target->name() + ")";
    A.field = k;
    A.max_level = L;
    A.d_min = dmin;
    A.d_max = dmax;
    for (int n = 0; n <= L; ++n) {
        std::vector<Cohomology> row;
        std::vector<std::size_t> dims;
        std::vector<std::vector<std::string>> labels;
        std::vector<std::vector<Vec>> reps;
        for (int d = dmin; d <= dmax; ++d) {
            row.emplace_back(hc, n, d);
            dims.push_back(row.back().reps.size());
            std::vector<std::string> lab;
            for (std::size_t i = 0; i < row.back().reps.size(); ++i)
                lab.push_back("e" + std::to_string(n) + "_" + std::to_string(d) + "_" + std::to_string(i));
            labels.push_back(std::move(lab));
            reps.push_back(row.back().reps);
        }
        st->cohomology.push_back(std::move(row));
        A.dims.push_back(std::move(dims));
        A.labels.push_back(std::move(labels));
        E.reps.push_back(std::move(reps));
    }
    E.provenance.push_back("Hom complex of a resolution with bounds (N, D) = (" + std::to_string(r->max_level) + ", " +
                           std::to_string(r->bound) + ")" + (r->minimal ? ", minimal" : ", not minimal"));
    E.provenance.insert(E.provenance.end(), r->provenance.begin(), r->provenance.end());

    if (products) {
        // unit: the augmentation restricted to the generators
        if (A.in_range(0, 0)) {
            const auto& sp = hc.space(0, 0);
            Vec eps = zero_vec(k, sp.dim);
            for (std::size_t g = 0; g < r->levels.at(0).rank(); ++g) {
                const auto& b = r->boundary[0][g];
                for (std::size_t z = 0; z < b.size(); ++z) eps[sp.offset[g] + z] = b[z];
            }
            A.unit = st->at(0, 0).coords(eps);
        }
        for (int n2 = 0; n2 <= L; ++n2)
            for (int d2 = dmin; d2 <= dmax; ++d2) {
                const auto& C2 = st->at(n2, d2);
                for (std::size_t j = 0; j < C2.reps.size(); ++j) {
                    const auto& F = hc.lift(n2, d2, j, C2.reps[j], L);
                    for (int n1 = 0; n1 + n2 <= L; ++n1)
                        for (int d1 = dmin; d1 <= dmax; ++d1) {
                            if (!A.in_range(n1 + n2, d1 + d2)) continue;
                            const auto& C1 = st->at(n1, d1);
                            const std::size_t a = C1.reps.size(), b = C2.reps.size();
                            const std::size_t c = A.dim(n1 + n2, d1 + d2);
                            if (a == 0 || c == 0) continue;
                            auto [it, fresh] = A.products.try_emplace({n1, d1, n2, d2}, k, c, a * b);
                            for (std::size_t i = 0; i < a; ++i) {
                                Vec prod = hc.compose(n1, d1, C1.reps[i], n2, d2, F);
                                Vec x = st->at(n1 + n2, d1 + d2).coords(prod);
                                for (std::size_t z = 0; z < c; ++z) it->second.set(z, i * b + j, x[z]);
                            }
                        }
                }
            }
        E.has_products = true;
        E.validation.merge(validate_bigraded(A));
    }
    E.state = st;
    return E;
}

}  // namespace

Vec ExtAlgebra::classify(int n, int d, const Vec& cocycle) const {
    if (!state || !algebra.in_range(n, d)) throw ExtError("classify outside the computed range");
    return state->at(n, d).coords(cocycle);
}

ExtAlgebra ext_algebra(std::shared_ptr<const Resolution> r, int max_level) {
    const ModulePtr& m = r->module;
    int t = m->top_degree();
    if (t < 0) t = 0;
    return build(r, m, max_level, -t, r->bound - t, true);
}

ExtAlgebra ext_groups(std::shared_ptr<const Resolution> r, const ModulePtr& target, int max_level, int d_min,
                      int d_max) {
    return build(std::move(r), target, max_level, d_min, d_max, false);
}

namespace detail {

// (h_k f)(w) = sum f(w . S^2 h_2) . S h_1 on a cochain of bidegree (n, d).
Vec act_cochain(const ExtState& st, int n, int d, std::size_t kk, const Vec& c, const HModule* target) {
    const HomComplex& hc = st.complex;
    const Resolution& r = hc.resolution();
    const HopfData& h = *r.action->hopf;
    const Field& k = hc.field();
    const auto& sp = hc.space(n, d);
    const auto& W = r.levels.at(n);
    Vec out = zero_vec(k, sp.dim);
    const HModule& tgt = target ? *target : *r.module_action;
    const Vec& dk = h.comult[kk];
    for (std::size_t g = 0; g < W.rank(); ++g) {
        const std::size_t len = hc.target()->dim(sp.vdeg[g]);
        if (len == 0) continue;
        Vec acc = zero_vec(k, len);
        for (std::size_t x = 0; x < h.n; ++x)
            for (std::size_t y = 0; y < h.n; ++y) {
                const Scalar& cf = dk[x * h.n + y];
                if (cf.is_zero()) continue;
                Vec u = h.S(h.S(h.basis(y)));
                // w_g . u as a combination of generators
                Vec wu = zero_vec(k, W.rank());
                for (std::size_t c2 = 0; c2 < h.n; ++c2)
                    if (!u[c2].is_zero()) axpy(wu, u[c2], r.gen_action[n][c2].column(g));
                Vec val = zero_vec(k, len);
                for (std::size_t j = 0; j < W.rank(); ++j) {
                    if (wu[j].is_zero()) continue;
                    if (W.degrees[j] != W.degrees[g]) throw ExtError("H-action mixes generator degrees");
                    axpy(val, wu[j], hc.value(n, d, c, j));
                }
                axpy(acc, cf, tgt.act_h(h.S(h.basis(x)), sp.vdeg[g], val));
            }
        for (std::size_t z = 0; z < len; ++z) out[sp.offset[g] + z] = acc[z];
    }
    return out;
}

// rho(f)(w) = sum f(w_0)_{-1} S^-1(w_{-1}) (x) f(w_0)_0, one cochain per basis element of H.
std::vector<Vec> coact_cochain(const ExtState& st, int n, int d, const Vec& c, const HopfModule* target) {
    const HomComplex& hc = st.complex;
    const Resolution& r = hc.resolution();
    const HopfData& h = *r.coaction->hopf;
    const Field& k = hc.field();
    const auto& sp = hc.space(n, d);
    const auto& W = r.levels.at(n);
    const std::size_t rank = W.rank();
    std::vector<Vec> out(h.n, zero_vec(k, sp.dim));
    const HopfModule& tgt = target ? *target : *r.module_coaction;
    for (std::size_t i = 0; i < rank; ++i) {
        const std::size_t len = hc.target()->dim(sp.vdeg[i]);
        if (len == 0) continue;
        const Vec& co = r.gen_coaction[n][i];
        for (std::size_t kk = 0; kk < h.n; ++kk)
            for (std::size_t j = 0; j < rank; ++j) {
                const Scalar& cf = co[kk * rank + j];
                if (cf.is_zero()) continue;
                if (W.degrees[j] != W.degrees[i]) throw ExtError("H-coaction mixes generator degrees");
                std::span<const Scalar> y = hc.value(n, d, c, j);
                if (is_zero(y)) continue;
                Vec Y = tgt.coact(sp.vdeg[i], y);
                const Vec sk = h.S_inv(h.basis(kk));
                for (std::size_t l = 0; l < h.n; ++l) {
                    std::span<const Scalar> yl(Y.data() + l * len, len);
                    if (is_zero(yl)) continue;
                    Vec prod = h.multiply(h.basis(l), sk);
                    for (std::size_t t = 0; t < h.n; ++t) {
                        if (prod[t].is_zero()) continue;
                        for (std::size_t z = 0; z < len; ++z) out[t][sp.offset[i] + z] += cf * prod[t] * yl[z];
                    }
                }
            }
    }
    return out;
}

}  // namespace detail

using detail::act_cochain;
using detail::coact_cochain;

void h_action_on_ext(ExtAlgebra& E) {
    const Resolution& r = *E.resolution;
    if (!r.action || r.gen_action.empty() || !r.module_action)
        throw ExtError("the resolution carries no H-action");
    if (E.target != r.module) throw ExtError("the H-action is defined on Ext(M, M)");
    const auto& st = *E.state;
    const HopfData& h = *r.action->hopf;
    const Field& k = E.algebra.field;
    const auto& A = E.algebra;
    E.hopf = r.action->hopf;
    Report rep("H-action on " + A.name);
    std::string first;
    E.action.assign(A.max_level + 1, std::vector<std::vector<Matrix>>(A.d_max - A.d_min + 1));
    for (int n = 0; n <= A.max_level; ++n)
        for (int d = A.d_min; d <= A.d_max; ++d) {
            const Cohomology& C = st.at(n, d);
            const std::size_t dim = C.reps.size();
            for (std::size_t kk = 0; kk < h.n; ++kk) {
                std::vector<Vec> cols;
                for (const auto& rep_i : C.reps) {
                    Vec img = act_cochain(st, n, d, kk, rep_i);
                    try {
                        cols.push_back(C.coords(img));
                    } catch (const ExtError&) {
                        if (first.empty()) first = "a cocycle leaves the cocycles at " + bideg(n, d);
                        cols.push_back(zero_vec(k, dim));
                    }
                }
                for (const auto& b : C.boundaries)
                    if (first.empty() && !C.is_coboundary(act_cochain(st, n, d, kk, b)))
                        first = "a coboundary is not preserved at " + bideg(n, d);
                E.action[n][d - A.d_min].push_back(Matrix::from_columns(k, dim, cols));
            }
        }
    rep.expect(first.empty(), "descends to cohomology", first);

    // action law (ab) e = a (b e) and unit
    first.clear();
    for (int n = 0; n <= A.max_level && first.empty(); ++n)
        for (int d = A.d_min; d <= A.d_max && first.empty(); ++d) {
            const auto& T = E.action[n][d - A.d_min];
            const std::size_t dim = A.dim(n, d);
            if (dim == 0) continue;
            auto combo = [&](const Vec& u) {
                Matrix m(k, dim, dim);
                for (std::size_t c = 0; c < h.n; ++c)
                    if (!u[c].is_zero()) m = m + u[c] * T[c];
                return m;
            };
            if (!(combo(h.unit) == Matrix::identity(k, dim))) first = "unit at " + bideg(n, d);
            for (std::size_t a = 0; a < h.n && first.empty(); ++a)
                for (std::size_t b = 0; b < h.n && first.empty(); ++b)
                    if (!(combo(h.multiply(h.basis(a), h.basis(b))) == T[a] * T[b]))
                        first = "action law at " + bideg(n, d);
        }
    rep.expect(first.empty(), "left H-module", first);

    if (E.has_products) {
        first.clear();
        std::size_t pairs = 0;
        for (const auto& [key, m] : A.products) {
            const auto [n1, d1, n2, d2] = key;
            const std::size_t a = A.dim(n1, d1), b = A.dim(n2, d2);
            for (std::size_t kk = 0; kk < h.n && first.empty(); ++kk)
                for (std::size_t i = 0; i < a && first.empty(); ++i)
                    for (std::size_t j = 0; j < b && first.empty(); ++j) {
                        Vec x = unit_vec(k, a, i), y = unit_vec(k, b, j);
                        Vec lhs = E.action[n1 + n2][d1 + d2 - A.d_min][kk].apply(A.multiply(n1, d1, x, n2, d2, y));
                        Vec rhs = zero_vec(k, lhs.size());
                        const Vec& dk = h.comult[kk];
                        for (std::size_t p = 0; p < h.n; ++p)
                            for (std::size_t q = 0; q < h.n; ++q) {
                                const Scalar& cf = dk[p * h.n + q];
                                if (cf.is_zero()) continue;
                                axpy(rhs, cf,
                                     A.multiply(n1, d1, E.action[n1][d1 - A.d_min][p].apply(x), n2, d2,
                                                E.action[n2][d2 - A.d_min][q].apply(y)));
                            }
                        ++pairs;
                        if (lhs != rhs) first = bideg(n1, d1) + " x " + bideg(n2, d2);
                    }
        }
        rep.expect(first.empty(), "module algebra on " + std::to_string(pairs) + " basis pairs", "fails at " + first);
        if (A.in_range(0, 0) && !A.unit.empty()) {
            bool ok = true;
            for (std::size_t kk = 0; kk < h.n; ++kk)
                ok = ok && E.action[0][-A.d_min][kk].apply(A.unit) == scaled(A.unit, h.counit[kk]);
            rep.expect(ok, "h acts on the unit by the counit", "h . 1 != eps(h) 1");
        }
    }
    E.validation.merge(rep, "action: ");
    E.provenance.push_back("H-action (h f)(m) = sum h_1 f(S h_2 m) on cocycle representatives");
}

void h_coaction_on_ext(ExtAlgebra& E) {
    const Resolution& r = *E.resolution;
    if (!r.coaction || r.gen_coaction.empty() || !r.module_coaction)
        throw ExtError("the resolution carries no H-coaction");
    if (E.target != r.module) throw ExtError("the H-coaction is defined on Ext(X, X)");
    const auto& st = *E.state;
    const HopfData& h = *r.coaction->hopf;
    const Field& k = E.algebra.field;
    const auto& A = E.algebra;
    E.hopf = r.coaction->hopf;
    Report rep("H-coaction on " + A.name);
    std::string first;
    E.coaction.assign(A.max_level + 1, std::vector<std::vector<Matrix>>(A.d_max - A.d_min + 1));
    for (int n = 0; n <= A.max_level; ++n)
        for (int d = A.d_min; d <= A.d_max; ++d) {
            const Cohomology& C = st.at(n, d);
            const std::size_t dim = C.reps.size();
            std::vector<std::vector<Vec>> cols(h.n);
            for (const auto& rep_i : C.reps) {
                auto parts = coact_cochain(st, n, d, rep_i);
                for (std::size_t t = 0; t < h.n; ++t) {
                    try {
                        cols[t].push_back(C.coords(parts[t]));
                    } catch (const ExtError&) {
                        if (first.empty()) first = "a cocycle leaves the cocycles at " + bideg(n, d);
                        cols[t].push_back(zero_vec(k, dim));
                    }
                }
            }
            for (const auto& b : C.boundaries) {
                auto parts = coact_cochain(st, n, d, b);
                for (std::size_t t = 0; t < h.n && first.empty(); ++t)
                    if (!C.is_coboundary(parts[t])) first = "a coboundary is not preserved at " + bideg(n, d);
            }
            for (std::size_t t = 0; t < h.n; ++t)
                E.coaction[n][d - A.d_min].push_back(Matrix::from_columns(k, dim, cols[t]));
        }
    rep.expect(first.empty(), "descends to cohomology", first);

    // C_s C_t = sum_u Delta(h_u)_{t,s} C_u and sum_t eps(h_t) C_t = 1
    first.clear();
    for (int n = 0; n <= A.max_level && first.empty(); ++n)
        for (int d = A.d_min; d <= A.d_max && first.empty(); ++d) {
            const auto& C = E.coaction[n][d - A.d_min];
            const std::size_t dim = A.dim(n, d);
            if (dim == 0) continue;
            Matrix counit(k, dim, dim);
            for (std::size_t t = 0; t < h.n; ++t)
                if (!h.counit[t].is_zero()) counit = counit + h.counit[t] * C[t];
            if (!(counit == Matrix::identity(k, dim))) first = "counit at " + bideg(n, d);
            for (std::size_t t = 0; t < h.n && first.empty(); ++t)
                for (std::size_t s = 0; s < h.n && first.empty(); ++s) {
                    Matrix rhs(k, dim, dim);
                    for (std::size_t u = 0; u < h.n; ++u) {
                        const Scalar& cf = h.comult[u][t * h.n + s];
                        if (!cf.is_zero()) rhs = rhs + cf * C[u];
                    }
                    if (!(C[s] * C[t] == rhs)) first = "coassociativity at " + bideg(n, d);
                }
        }
    rep.expect(first.empty(), "left H-comodule", first);

    if (E.has_products) {
        first.clear();
        std::size_t pairs = 0;
        for (const auto& [key, m] : A.products) {
            const auto [n1, d1, n2, d2] = key;
            const std::size_t a = A.dim(n1, d1), b = A.dim(n2, d2);
            const auto& Cl = E.coaction[n1][d1 - A.d_min];
            const auto& Cr = E.coaction[n2][d2 - A.d_min];
            const auto& Cp = E.coaction[n1 + n2][d1 + d2 - A.d_min];
            for (std::size_t i = 0; i < a && first.empty(); ++i)
                for (std::size_t j = 0; j < b && first.empty(); ++j) {
                    Vec x = unit_vec(k, a, i), y = unit_vec(k, b, j);
                    Vec xy = A.multiply(n1, d1, x, n2, d2, y);
                    std::vector<Vec> rhs(h.n, zero_vec(k, xy.size()));
                    for (std::size_t t = 0; t < h.n; ++t)
                        for (std::size_t s = 0; s < h.n; ++s) {
                            Vec hts = h.multiply(h.basis(t), h.basis(s));
                            Vec p = A.multiply(n1, d1, Cl[t].apply(x), n2, d2, Cr[s].apply(y));
                            for (std::size_t u = 0; u < h.n; ++u)
                                if (!hts[u].is_zero()) axpy(rhs[u], hts[u], p);
                        }
                    for (std::size_t u = 0; u < h.n && first.empty(); ++u)
                        if (Cp[u].apply(xy) != rhs[u]) first = bideg(n1, d1) + " x " + bideg(n2, d2);
                    ++pairs;
                }
        }
        rep.expect(first.empty(), "comodule algebra on " + std::to_string(pairs) + " basis pairs",
                   "fails at " + first);
        if (A.in_range(0, 0) && !A.unit.empty()) {
            bool ok = true;
            for (std::size_t t = 0; t < h.n; ++t)
                ok = ok && E.coaction[0][-A.d_min][t].apply(A.unit) == scaled(A.unit, h.unit[t]);
            rep.expect(ok, "rho(1) = 1 (x) 1", "the unit is not coinvariant");
        }
    }
    E.validation.merge(rep, "coaction: ");
    E.provenance.push_back("H-coaction rho(f)(x) = sum f(x_0)_{-1} S^-1(x_{-1}) (x) f(x_0)_0 on cocycle representatives");
}

}  // namespace takeuchi
