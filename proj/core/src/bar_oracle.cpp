#include "takeuchi/bar_oracle.hpp"

#include "ext_internal.hpp"

#include <map>

namespace takeuchi {

namespace detail {

using BarLetter = std::pair<int, std::size_t>;
using BarWord = std::vector<BarLetter>;

struct BarState {
    std::vector<std::vector<std::vector<BarWord>>> words;  // [n][d]
    std::vector<std::vector<std::map<BarWord, std::size_t>>> index;
    std::vector<std::vector<Matrix>> delta;  // [n][d]: C^{n,d} -> C^{n+1,d}
    struct Classes {
        std::vector<Vec> reps;
        std::optional<LinearSolver> solver;
    };
    std::vector<std::vector<Classes>> classes;  // [n][d]
};

}  // namespace detail

namespace {

using detail::BarLetter;
using detail::BarWord;

std::string bideg(int n, int d) { return "(" + std::to_string(n) + "," + std::to_string(d) + ")"; }

void enumerate(const GradedAlgebra& a, int n, int d, BarWord& prefix, std::vector<BarWord>& out) {
    if (n == 0) {
        if (d == 0) out.push_back(prefix);
        return;
    }
    for (int j = 1; j <= d - (n - 1); ++j)
        for (std::size_t i = 0; i < a.dim(j); ++i) {
            prefix.emplace_back(j, i);
            enumerate(a, n - 1, d - j, prefix, out);
            prefix.pop_back();
        }
}

}  // namespace

BarExt bar_ext_oracle(const AlgebraPtr& ap, int max_level, int bound) {
    const GradedAlgebra& A = *ap;
    if (!A.connected()) throw ExtError("bar_ext_oracle: the algebra must be connected");
    if (bound > A.bound()) throw ExtError("bar_ext_oracle: bound exceeds the algebra's bound");
    if (max_level < 0 || bound < 0) throw ExtError("bar_ext_oracle: negative bounds");
    const Field k = A.field();
    auto st = std::make_shared<detail::BarState>();
    const int top = max_level + 1;
    st->words.assign(top + 1, std::vector<std::vector<BarWord>>(bound + 1));
    st->index.assign(top + 1, std::vector<std::map<BarWord, std::size_t>>(bound + 1));
    for (int n = 0; n <= top; ++n)
        for (int d = 0; d <= bound; ++d) {
            BarWord w;
            enumerate(A, n, d, w, st->words[n][d]);
            for (std::size_t i = 0; i < st->words[n][d].size(); ++i) st->index[n][d].emplace(st->words[n][d][i], i);
        }

    st->delta.assign(top, std::vector<Matrix>(bound + 1));
    for (int n = 0; n < top; ++n)
        for (int d = 0; d <= bound; ++d) {
            const auto& rows = st->words[n + 1][d];
            Matrix m(k, rows.size(), st->words[n][d].size());
            for (std::size_t r = 0; r < rows.size(); ++r) {
                const BarWord& w = rows[r];
                for (int i = 1; i <= n; ++i) {  // merge letters i and i+1 (1-based)
                    const auto& [d1, a1] = w[i - 1];
                    const auto& [d2, a2] = w[i];
                    const Vec& prod = A.product(d1, a1, d2, a2);
                    const Scalar sign = i % 2 ? k.make(-1) : k.one();
                    BarWord merged(w.begin(), w.begin() + (i - 1));
                    merged.emplace_back(d1 + d2, 0);
                    merged.insert(merged.end(), w.begin() + i + 1, w.end());
                    for (std::size_t c = 0; c < prod.size(); ++c) {
                        if (prod[c].is_zero()) continue;
                        merged[i - 1].second = c;
                        const std::size_t col = st->index[n][d].at(merged);
                        m.set(r, col, m.at(r, col) + sign * prod[c]);
                    }
                }
            }
            st->delta[n][d] = std::move(m);
        }

    BarExt out;
    out.source = ap;
    BigradedAlgebra& E = out.algebra;
    E.name = "cobar Ext(k,k) over " + A.name();
    E.field = k;
    E.max_level = max_level;
    E.d_min = 0;
    E.d_max = bound;
    st->classes.assign(max_level + 1, std::vector<detail::BarState::Classes>(bound + 1));
    out.reps.assign(max_level + 1, std::vector<std::vector<Vec>>(bound + 1));
    E.dims.assign(max_level + 1, std::vector<std::size_t>(bound + 1, 0));
    E.labels.assign(max_level + 1, std::vector<std::vector<std::string>>(bound + 1));
    for (int n = 0; n <= max_level; ++n)
        for (int d = 0; d <= bound; ++d) {
            const std::size_t dim = st->words[n][d].size();
            if (dim == 0) continue;
            const Matrix& dn = st->delta[n][d];
            std::vector<Vec> z;
            if (dn.rows() == 0)
                for (std::size_t i = 0; i < dim; ++i) z.push_back(unit_vec(k, dim, i));
            else
                z = kernel_basis(dn);
            std::vector<Vec> bnd;
            if (n > 0)
                for (std::size_t c = 0; c < st->delta[n - 1][d].cols(); ++c) {
                    Vec col = st->delta[n - 1][d].column(c);
                    if (!is_zero(col)) bnd.push_back(std::move(col));
                }
            EchelonBasis eb(k, dim);
            for (const auto& b : bnd) eb.add(b);
            auto& cl = st->classes[n][d];
            for (auto& v : z)
                if (eb.add(v)) cl.reps.push_back(std::move(v));
            std::vector<Vec> cols = cl.reps;
            cols.insert(cols.end(), bnd.begin(), bnd.end());
            cl.solver.emplace(Matrix::from_columns(k, dim, cols));
            out.reps[n][d] = cl.reps;
            E.dims[n][d] = cl.reps.size();
            for (std::size_t i = 0; i < cl.reps.size(); ++i)
                E.labels[n][d].push_back("b" + std::to_string(n) + "_" + std::to_string(d) + "_" + std::to_string(i));
        }
    out.state = st;

    // concatenation products
    for (int p = 0; p <= max_level; ++p)
        for (int q = 0; p + q <= max_level; ++q)
            for (int d1 = 0; d1 <= bound; ++d1)
                for (int d2 = 0; d1 + d2 <= bound; ++d2) {
                    const std::size_t a = E.dims[p][d1], b = E.dims[q][d2], c = E.dims[p + q][d1 + d2];
                    if (a == 0 || b == 0 || c == 0) continue;
                    const auto& target = st->words[p + q][d1 + d2];
                    Matrix m(k, c, a * b);
                    for (std::size_t i = 0; i < a; ++i)
                        for (std::size_t j = 0; j < b; ++j) {
                            const Vec& phi = out.reps[p][d1][i];
                            const Vec& psi = out.reps[q][d2][j];
                            Vec prod = zero_vec(k, target.size());
                            for (std::size_t w = 0; w < target.size(); ++w) {
                                const BarWord& word = target[w];
                                int pd = 0;
                                for (int l = 0; l < p; ++l) pd += word[l].first;
                                if (pd != d1) continue;
                                const BarWord pre(word.begin(), word.begin() + p), suf(word.begin() + p, word.end());
                                prod[w] = phi[st->index[p][d1].at(pre)] * psi[st->index[q][d2].at(suf)];
                            }
                            Vec cls = out.classify(p + q, d1 + d2, prod);
                            for (std::size_t z = 0; z < c; ++z)
                                if (!cls[z].is_zero()) m.set(z, i * b + j, cls[z]);
                        }
                    E.products.emplace(std::array<int, 4>{p, d1, q, d2}, std::move(m));
                }
    E.unit = Vec{k.one()};
    out.validation.merge(validate_bigraded(E));
    return out;
}

Vec BarExt::classify(int n, int d, const Vec& cocycle) const {
    if (!algebra.in_range(n, d)) throw ExtError("cobar classify outside the computed range");
    const auto& cl = state->classes[n][d];
    if (cl.reps.empty()) return {};
    if (!is_zero(state->delta[n][d].apply(cocycle))) throw ExtError("not a cobar cocycle at " + bideg(n, d));
    auto x = cl.solver->solve(cocycle);
    if (!x) throw ExtError("cobar cocycle outside classes plus coboundaries");
    x->resize(cl.reps.size());
    return *x;
}

const std::vector<std::vector<std::pair<int, std::size_t>>>& BarExt::words(int n, int d) const {
    return state->words.at(n).at(d);
}

json BarExt::to_json() const {
    json j = algebra.to_json();
    j["method"] = "reduced cobar complex";
    j["validation"] = validation.to_json();
    return j;
}

namespace {

// Element of the normalized bar resolution: word of positive letters followed
// by one letter of A (the free right module factor).
using BarElem = std::map<BarWord, Scalar>;

void add_term(BarElem& e, const BarWord& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = e.emplace(w, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) e.erase(it);
    }
}

BarElem times(const GradedAlgebra& A, const BarElem& x, int j, std::span<const Scalar> coef) {
    BarElem out;
    for (const auto& [w, c] : x) {
        const auto [dc, ic] = w.back();
        for (std::size_t b = 0; b < coef.size(); ++b) {
            if (coef[b].is_zero()) continue;
            const Vec& prod = A.product(dc, ic, j, b);
            BarWord v = w;
            for (std::size_t z = 0; z < prod.size(); ++z) {
                v.back() = {dc + j, z};
                add_term(out, v, c * coef[b] * prod[z]);
            }
        }
    }
    return out;
}

// contracting homotopy on level n: [a_1..a_n] a -> (-1)^{n+1} [a_1..a_n|a] 1 for deg a > 0
BarElem homotopy(const Field& k, const BarElem& x, int n) {
    BarElem out;
    const Scalar sign = (n + 1) % 2 ? k.make(-1) : k.one();
    for (const auto& [w, c] : x) {
        if (w.back().first == 0) continue;
        BarWord v = w;
        v.emplace_back(0, 0);
        add_term(out, v, sign * c);
    }
    return out;
}

BarElem bar_d(const GradedAlgebra& A, const BarElem& x, int n) {
    const Field k = A.field();
    BarElem out;
    for (const auto& [w, c] : x) {
        for (int i = 1; i < n; ++i) {
            const Vec& prod = A.product(w[i - 1].first, w[i - 1].second, w[i].first, w[i].second);
            const Scalar sign = i % 2 ? k.make(-1) : k.one();
            BarWord v(w.begin(), w.begin() + (i - 1));
            v.emplace_back(w[i - 1].first + w[i].first, 0);
            v.insert(v.end(), w.begin() + i + 1, w.end());
            for (std::size_t z = 0; z < prod.size(); ++z) {
                v[i - 1].second = z;
                add_term(out, v, sign * c * prod[z]);
            }
        }
        const Scalar sign = n % 2 ? k.make(-1) : k.one();
        const Vec& prod = A.product(w[n - 1].first, w[n - 1].second, w.back().first, w.back().second);
        BarWord v(w.begin(), w.begin() + (n - 1));
        v.emplace_back(w[n - 1].first + w.back().first, 0);
        for (std::size_t z = 0; z < prod.size(); ++z) {
            v.back().second = z;
            add_term(out, v, sign * c * prod[z]);
        }
    }
    return out;
}

}  // namespace

Report bar_equivalence(const BarExt& bar, const ExtAlgebra& ext) {
    Report rep("cobar oracle equivalence");
    const Resolution& r = *ext.resolution;
    const GradedAlgebra& A = *bar.source;
    const Field k = A.field();
    if (r.algebra.get() != bar.source.get()) throw ExtError("bar_equivalence: different algebras");
    if (r.side != Side::right) throw ExtError("bar_equivalence: needs a resolution of right modules");
    const auto& M = *r.module;
    if (M.dim(0) != 1 || M.top_degree() != 0 || ext.target != r.module)
        throw ExtError("bar_equivalence: needs Ext(k, k)");
    const auto& hc = ext.state->complex;

    const int N = std::min(bar.algebra.max_level, ext.algebra.max_level);
    const int D = std::min({bar.algebra.d_max, ext.algebra.d_max, r.bound});
    rep.data()["bounds"] = {N, D};

    // chain map G from the resolution to the bar resolution, on generators
    std::vector<std::vector<BarElem>> G(N + 1);
    std::string chain_fail;
    for (int n = 0; n <= N && n <= r.length(); ++n) {
        const auto& W = r.levels[n];
        for (std::size_t g = 0; g < W.rank(); ++g) {
            const int dg = W.degrees[g];
            BarElem img;
            if (dg > D) {
                G[n].push_back(img);
                continue;
            }
            if (n == 0) {
                if (dg == 0) add_term(img, BarWord{{0, 0}}, r.boundary[0][g][0]);
                G[n].push_back(img);
                continue;
            }
            const auto& V = r.levels[n - 1];
            const Vec& dw = r.boundary[n][g];
            BarElem lower;
            for (std::size_t h = 0; h < V.rank(); ++h) {
                const int dh = V.degrees[h];
                if (dh > dg) continue;
                std::span<const Scalar> blk(dw.data() + V.offset(dg, h), A.dim(dg - dh));
                if (is_zero(blk)) continue;
                for (const auto& [w, c] : times(A, G[n - 1][h], dg - dh, blk)) add_term(lower, w, c);
            }
            img = homotopy(k, lower, n - 1);
            if (chain_fail.empty()) {
                BarElem back = bar_d(A, img, n);
                if (back != lower) chain_fail = "d G != G d at level " + std::to_string(n);
            }
            G[n].push_back(std::move(img));
        }
    }
    rep.expect(chain_fail.empty(), "comparison G: resolution -> bar resolution is a chain map", chain_fail);

    // pullback of cobar cochains to the resolution
    auto pullback = [&](int n, int d, const Vec& phi) {
        const auto& sp = hc.space(n, d);
        Vec c = zero_vec(k, sp.dim);
        const auto& words = bar.words(n, d);
        std::map<BarWord, std::size_t> idx;
        for (std::size_t i = 0; i < words.size(); ++i) idx.emplace(words[i], i);
        const auto& W = r.levels[n];
        for (std::size_t g = 0; g < W.rank(); ++g) {
            if (sp.vdeg[g] != 0) continue;
            Scalar s = k.zero();
            for (const auto& [w, coef] : G[n][g]) {
                if (w.back().first != 0) continue;
                const BarWord letters(w.begin(), w.end() - 1);
                auto it = idx.find(letters);
                if (it != idx.end()) s += coef * phi[it->second];
            }
            c[sp.offset[g]] = s;
        }
        return c;
    };

    std::vector<std::vector<Matrix>> pi(N + 1, std::vector<Matrix>(D + 1));
    std::string dims_fail, bij_fail, cls_fail;
    for (int n = 0; n <= N; ++n)
        for (int d = 0; d <= D; ++d) {
            const std::size_t src = bar.dim(n, d), dst = ext.dim(n, d);
            if (src != dst && dims_fail.empty())
                dims_fail = bideg(n, d) + ": cobar " + std::to_string(src) + " vs resolution " + std::to_string(dst);
            std::vector<Vec> cols;
            for (const auto& phi : bar.reps[n][d]) {
                try {
                    cols.push_back(ext.classify(n, d, pullback(n, d, phi)));
                } catch (const ExtError& e) {
                    if (cls_fail.empty()) cls_fail = bideg(n, d) + ": " + e.what();
                    cols.push_back(zero_vec(k, dst));
                }
            }
            pi[n][d] = Matrix::from_columns(k, dst, cols);
            if ((src != dst || (src > 0 && rank(pi[n][d]) != src)) && bij_fail.empty())
                bij_fail = "not bijective at " + bideg(n, d);
        }
    rep.expect(dims_fail.empty(), "bigraded dimensions agree", dims_fail);
    rep.expect(cls_fail.empty(), "pulled-back cobar classes are cocycles", cls_fail);
    rep.expect(bij_fail.empty(), "induced map bijective per bidegree", bij_fail);

    std::string mult_fail;
    std::size_t pairs = 0;
    if (ext.has_products) {
        for (const auto& [key, m] : bar.algebra.products) {
            const auto [p, d1, q, d2] = key;
            if (p + q > N || d1 + d2 > D) continue;
            const std::size_t a = bar.dim(p, d1), b = bar.dim(q, d2);
            for (std::size_t i = 0; i < a && mult_fail.empty(); ++i)
                for (std::size_t j = 0; j < b && mult_fail.empty(); ++j) {
                    ++pairs;
                    Vec lhs = pi[p + q][d1 + d2].apply(m.column(i * b + j));
                    Vec rhs = ext.algebra.multiply(q, d2, pi[q][d2].column(j), p, d1, pi[p][d1].column(i));
                    if (lhs != rhs)
                        mult_fail = bideg(p, d1) + "#" + std::to_string(i) + " x " + bideg(q, d2) + "#" +
                                    std::to_string(j);
                }
        }
        rep.expect(mult_fail.empty(),
                   "concatenation matches the reversed Yoneda product on " + std::to_string(pairs) + " pairs",
                   "fails at " + mult_fail);
    }
    json dims = json::array();
    for (int n = 0; n <= N; ++n)
        for (int d = 0; d <= D; ++d)
            if (bar.dim(n, d)) dims.push_back({{"n", n}, {"d", d}, {"dim", bar.dim(n, d)}});
    rep.data()["dims"] = dims;
    return rep;
}

}  // namespace takeuchi
