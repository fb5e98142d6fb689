#include "takeuchi/smash.hpp"

#include <algorithm>

namespace takeuchi {

namespace {

// Nonzero terms h_k (x) e_c of a coaction value of length n * dim.
struct CoTerm {
    std::size_t k;
    std::size_t c;
    Scalar coeff;
};

std::vector<CoTerm> coterms(std::span<const Scalar> rho, std::size_t n, std::size_t dim) {
    std::vector<CoTerm> out;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t c = 0; c < dim; ++c)
            if (!rho[k * dim + c].is_zero()) out.push_back({k, c, rho[k * dim + c]});
    return out;
}

std::vector<std::vector<SmashAlgebra::Index>> smash_basis(const GradedAlgebra& a, const GradedAlgebra& b, int bound) {
    std::vector<std::vector<SmashAlgebra::Index>> basis(bound + 1);
    for (int n = 0; n <= bound; ++n)
        for (int i = 0; i <= n; ++i)
            for (std::size_t x = 0; x < a.dim(i); ++x)
                for (std::size_t y = 0; y < b.dim(n - i); ++y) basis[n].push_back({i, x, y});
    return basis;
}

std::string tensor_label(const std::string& u, const std::string& v, const char* sep) {
    return u + sep + v;
}

}  // namespace

std::size_t SmashAlgebra::index(int n, int i, std::size_t x, std::size_t y) const {
    std::size_t off = 0;
    for (int e = 0; e < i; ++e) off += a->dim(e) * b->dim(n - e);
    return off + x * b->dim(n - i) + y;
}

Vec SmashAlgebra::pure_tensor(int i, std::span<const Scalar> u, int j, std::span<const Scalar> v) const {
    Vec out = zero_vec(a->field(), basis.at(i + j).size());
    const std::size_t off = index(i + j, i, 0, 0), dj = b->dim(j);
    for (std::size_t x = 0; x < u.size(); ++x) {
        if (u[x].is_zero()) continue;
        for (std::size_t y = 0; y < v.size(); ++y)
            if (!v[y].is_zero()) out[off + x * dj + y] += u[x] * v[y];
    }
    return out;
}

SmashAlgebra smash_algebra(const ActionData& action, const CoactionData& coaction, int bound, bool validate) {
    if (action.hopf != coaction.hopf && !(action.hopf && coaction.hopf && action.hopf->n == coaction.hopf->n &&
                                          action.hopf->mult == coaction.hopf->mult &&
                                          action.hopf->comult == coaction.hopf->comult))
        throw SmashError("action and coaction use different Hopf algebras");
    const AlgebraPtr& ap = action.algebra;
    const AlgebraPtr& bp = coaction.algebra;
    if (ap->field() != bp->field()) throw SmashError("factors live over different fields");
    const int top = std::min(ap->bound(), bp->bound());
    if (bound < 0) bound = top;
    if (bound > top) throw SmashError("smash bound exceeds a factor bound");

    SmashAlgebra s{nullptr, ap, bp, action.hopf, action, coaction, smash_basis(*ap, *bp, bound)};
    const auto& A = *ap;
    const auto& B = *bp;
    const std::size_t n = s.hopf->n;
    const Field k = A.field();

    std::vector<std::vector<std::string>> labels(bound + 1);
    for (int d = 0; d <= bound; ++d)
        for (const auto& ix : s.basis[d])
            labels[d].push_back(tensor_label(A.label(ix.i, ix.a), B.label(d - ix.i, ix.b), "#"));
    Vec unit = zero_vec(k, s.basis[0].size());
    for (std::size_t x = 0; x < A.dim(0); ++x)
        for (std::size_t y = 0; y < B.dim(0); ++y) unit[x * B.dim(0) + y] = A.unit()[x] * B.unit()[y];

    const SmashAlgebra* sp = &s;
    auto product = [sp, n, &A, &B, k](int d1, std::size_t s1, int d2, std::size_t s2) -> Vec {
        const auto& l = sp->basis[d1][s1];
        const auto& r = sp->basis[d2][s2];
        const int j = d1 - l.i, jr = d2 - r.i;
        Vec out = zero_vec(k, sp->basis[d1 + d2].size());
        const Vec ea = unit_vec(k, A.dim(r.i), r.a);
        for (const auto& t : coterms(sp->coaction.coef[j][l.b], n, B.dim(j))) {
            Vec ha = sp->action.act(t.k, r.i, ea);
            Vec left = A.multiply(l.i, unit_vec(k, A.dim(l.i), l.a), r.i, ha);
            const Vec& right = B.product(j, t.c, jr, r.b);
            Vec pt = sp->pure_tensor(l.i + r.i, left, j + jr, right);
            axpy(out, t.coeff, pt);
        }
        return out;
    };
    auto alg = std::make_shared<GradedAlgebra>(k, bound, labels, unit, product, A.name() + "#" + B.name());
    s.algebra = alg;
    if (validate) {
        Report rep = validate_algebra(*alg);
        if (!rep.ok()) throw SmashError("smash product fails the algebra axioms: " + rep.summary());
    }
    return s;
}

std::string to_string(SmashModuleKind k) {
    switch (k) {
        case SmashModuleKind::left_hmodule: return "left_hmodule";
        case SmashModuleKind::right_hmodule: return "right_hmodule";
        case SmashModuleKind::right_comodule: return "right_comodule";
        case SmashModuleKind::left_comodule: return "left_comodule";
    }
    return "unknown";
}

std::size_t SmashModule::index(int n, int i, std::size_t m, std::size_t x) const {
    const auto& v = basis.at(n);
    for (std::size_t z = 0; z < v.size(); ++z)
        if (v[z].i == i && v[z].m == m && v[z].x == x) return z;
    throw SmashError("no such smash-module basis element");
}

namespace {

// Shared scaffolding for the four structures. A PieceFn takes (first-factor
// degree, index, second-factor degree, index, A-degree, a, B-degree, b) and
// returns the image of that basis pair as a sum of pure tensors.
struct Piece {
    int i;
    Vec u;
    int j;
    Vec v;
    Scalar c;
};
using PieceFn = std::function<std::vector<Piece>(int, std::size_t, int, std::size_t, int, std::size_t, int, std::size_t)>;

SmashModule build_smash_module(const SmashAlgebra& s, const GradedModule& f, const GradedModule& g, Side side,
                               SmashModuleKind kind, const PieceFn& pieces, bool validate = true) {
    const int bound = std::min(s.algebra->bound(), std::max(0, f.bound() + g.bound()));
    SmashModule out{nullptr, kind, {}, Report{}};
    out.basis.resize(bound + 1);
    std::vector<std::vector<std::string>> labels(bound + 1);
    for (int n = 0; n <= bound; ++n)
        for (int i = 0; i <= n; ++i)
            for (std::size_t m = 0; m < f.dim(i); ++m)
                for (std::size_t x = 0; x < g.dim(n - i); ++x) {
                    out.basis[n].push_back({i, m, x});
                    labels[n].push_back(tensor_label(f.label(i, m), g.label(n - i, x), "#"));
                }
    const Field k = s.algebra->field();
    const auto* basis = &out.basis;
    auto fn = [&, basis](int d, std::size_t e, int j, std::size_t r) -> Vec {
        const auto& mi = (*basis)[d][e];
        const auto& si = s.basis[j][r];
        Vec res = zero_vec(k, (*basis)[d + j].size());
        for (auto& p : pieces(mi.i, mi.m, d - mi.i, mi.x, si.i, si.a, j - si.i, si.b)) {
            if (p.c.is_zero() || p.i > f.bound() || p.j > g.bound()) continue;
            const std::size_t dg = g.dim(p.j);
            // locate the block of first-factor degree p.i inside degree d + j
            std::size_t off = 0;
            for (const auto& ix : (*basis)[d + j]) {
                if (ix.i == p.i) break;
                ++off;
            }
            for (std::size_t a = 0; a < p.u.size(); ++a) {
                if (p.u[a].is_zero()) continue;
                for (std::size_t b = 0; b < p.v.size(); ++b)
                    if (!p.v[b].is_zero()) res[off + a * dg + b] += p.c * p.u[a] * p.v[b];
            }
        }
        return res;
    };
    out.module = std::make_shared<const GradedModule>(s.algebra, side, bound, labels, fn,
                                                      f.name() + "#" + g.name());
    if (validate) out.validation = validate_module(*out.module);
    return out;
}

Vec act_or_zero(const GradedModule& m, int d, std::span<const Scalar> v, int j, std::span<const Scalar> r) {
    if (d + j > m.bound()) return {};
    return m.act(d, v, j, r);
}

}  // namespace

SmashModule smash_module_right(const SmashAlgebra& s, const HModule& hm, const GradedModule& x, bool validate) {
    const auto& m = *hm.module;
    if (m.side() != Side::right || x.side() != Side::right) throw SmashError("right smash module needs right modules");
    const Field k = s.algebra->field();
    const std::size_t n = s.hopf->n;
    auto pieces = [&](int i, std::size_t mi, int e, std::size_t xi, int p, std::size_t a, int q, std::size_t b) {
        std::vector<Piece> out;
        if (i + p > m.bound()) return out;
        Vec ma = m.act(i, unit_vec(k, m.dim(i), mi), p, unit_vec(k, s.a->dim(p), a));
        for (const auto& t : coterms(s.coaction.coef[q][b], n, s.b->dim(q))) {
            Vec xb = act_or_zero(x, e, unit_vec(k, x.dim(e), xi), q, unit_vec(k, s.b->dim(q), t.c));
            if (xb.empty()) continue;
            out.push_back({i + p, hm.act_h(t.k, i + p, ma), e + q, std::move(xb), t.coeff});
        }
        return out;
    };
    return build_smash_module(s, m, x, Side::right, SmashModuleKind::right_hmodule, pieces, validate);
}

SmashModule smash_module_left(const SmashAlgebra& s, const HModule& hm, const GradedModule& x) {
    const auto& m = *hm.module;
    if (m.side() != Side::left || x.side() != Side::left) throw SmashError("left smash module needs left modules");
    const Field k = s.algebra->field();
    const std::size_t n = s.hopf->n;
    auto pieces = [&](int i, std::size_t mi, int e, std::size_t xi, int p, std::size_t a, int q, std::size_t b) {
        std::vector<Piece> out;
        if (i + p > m.bound()) return out;
        for (const auto& t : coterms(s.coaction.coef[q][b], n, s.b->dim(q))) {
            Vec hm_ = hm.act_h(t.k, i, unit_vec(k, m.dim(i), mi));
            Vec am = m.act(i, hm_, p, unit_vec(k, s.a->dim(p), a));
            Vec bx = act_or_zero(x, e, unit_vec(k, x.dim(e), xi), q, unit_vec(k, s.b->dim(q), t.c));
            if (bx.empty()) continue;
            out.push_back({i + p, std::move(am), e + q, std::move(bx), t.coeff});
        }
        return out;
    };
    return build_smash_module(s, m, x, Side::left, SmashModuleKind::left_hmodule, pieces);
}

SmashModule smash_module_right_comodule(const SmashAlgebra& s, const GradedModule& nm, const HopfModule& y) {
    const auto& ym = *y.module;
    if (nm.side() != Side::right || ym.side() != Side::right) throw SmashError("right smash module needs right modules");
    const Field k = s.algebra->field();
    const std::size_t n = s.hopf->n;
    auto pieces = [&](int i, std::size_t ni, int e, std::size_t yi, int p, std::size_t a, int q, std::size_t b) {
        std::vector<Piece> out;
        if (i + p > nm.bound() || e + q > ym.bound()) return out;
        for (const auto& t : coterms(y.coef[e][yi], n, ym.dim(e))) {
            Vec ha = s.action.act(t.k, p, unit_vec(k, s.a->dim(p), a));
            Vec na = nm.act(i, unit_vec(k, nm.dim(i), ni), p, ha);
            Vec yb = ym.act(e, unit_vec(k, ym.dim(e), t.c), q, unit_vec(k, s.b->dim(q), b));
            out.push_back({i + p, std::move(na), e + q, std::move(yb), t.coeff});
        }
        return out;
    };
    return build_smash_module(s, nm, ym, Side::right, SmashModuleKind::right_comodule, pieces);
}

SmashModule smash_module_left_comodule(const SmashAlgebra& s, const GradedModule& nm, const HopfModule& y) {
    const auto& ym = *y.module;
    if (nm.side() != Side::left || ym.side() != Side::left) throw SmashError("left smash module needs left modules");
    const Field k = s.algebra->field();
    const auto& h = *s.hopf;
    const std::size_t n = h.n;
    auto pieces = [&](int i, std::size_t ni, int e, std::size_t yi, int p, std::size_t a, int q, std::size_t b) {
        std::vector<Piece> out;
        if (i + p > nm.bound() || e + q > ym.bound()) return out;
        for (const auto& tb : coterms(s.coaction.coef[q][b], n, s.b->dim(q)))
            for (const auto& ty : coterms(y.coef[e][yi], n, ym.dim(e))) {
                Vec hh = h.S_inv(h.multiply(h.basis(tb.k), h.basis(ty.k)));
                Vec ha = s.action.act(hh, p, unit_vec(k, s.a->dim(p), a));
                Vec an = nm.act(i, unit_vec(k, nm.dim(i), ni), p, ha);
                Vec by = ym.act(e, unit_vec(k, ym.dim(e), ty.c), q, unit_vec(k, s.b->dim(q), tb.c));
                out.push_back({i + p, std::move(an), e + q, std::move(by), tb.coeff * ty.coeff});
            }
        return out;
    };
    return build_smash_module(s, nm, ym, Side::left, SmashModuleKind::left_comodule, pieces);
}

namespace {

// Extends generator images of a degree-shifting map on A along words, using
// the rule for the image of a word w g from the image of w.
std::vector<Matrix> extend_on_words(const GradedAlgebra& a, int shift, int top,
                                    const std::function<Vec(int, const Vec&, std::size_t, const Vec&)>& step,
                                    const Vec& empty_value, const std::string& what) {
    const auto& p = *a.presentation();
    const Field k = a.field();
    std::vector<std::vector<Vec>> val(top + 1);
    for (int d = 0; d <= top; ++d) {
        const auto& words = a.words(d);
        for (const auto& w : words) {
            if (w.empty()) {
                val[d].push_back(empty_value);
                continue;
            }
            Word prefix(w.begin(), w.end() - 1);
            int dp = d - p.generators[w.back()].degree;
            std::size_t pi = std::lower_bound(a.words(dp).begin(), a.words(dp).end(), prefix) - a.words(dp).begin();
            val[d].push_back(step(dp, val[dp][pi], w.back(), a.normal_form(prefix)));
        }
    }
    std::vector<Matrix> mats;
    for (int d = 0; d <= top; ++d) {
        std::vector<Vec> cols;
        for (std::size_t b = 0; b < a.dim(d); ++b) {
            const Word& bw = a.basis_word(d, b);
            std::size_t wi = std::lower_bound(a.words(d).begin(), a.words(d).end(), bw) - a.words(d).begin();
            cols.push_back(val[d][wi]);
        }
        mats.push_back(Matrix::from_columns(k, a.dim(d + shift), cols));
        const auto& words = a.words(d);
        for (std::size_t wi = 0; wi < words.size(); ++wi)
            if (mats[d].apply(a.normal_form(words[wi])) != val[d][wi])
                throw SmashError(what + " does not respect the relations (word " + p.word_name(words[wi]) + ")");
    }
    return mats;
}

}  // namespace

OreExtension ore_extension(const AlgebraPtr& ap, const std::vector<Vec>& sigma_images,
                           const std::vector<Vec>& delta_images, int bound, std::string xname) {
    const auto& a = *ap;
    if (!a.presentation()) throw SmashError("ore_extension needs an algebra realized from a presentation");
    if (!a.connected()) throw SmashError("ore_extension needs a connected base algebra");
    const auto& p = *a.presentation();
    const Field k = a.field();
    if (bound < 0) bound = a.bound();
    if (bound > a.bound()) throw SmashError("Ore bound exceeds the base bound");
    if (sigma_images.size() != p.generators.size() || delta_images.size() != p.generators.size())
        throw SmashError("need sigma and delta images for every generator");
    for (std::size_t g = 0; g < p.generators.size(); ++g) {
        int dg = p.generators[g].degree;
        if (dg <= a.bound() && sigma_images[g].size() != a.dim(dg))
            throw SmashError("sigma image of wrong degree (sigma must preserve degree)");
        if (dg + 1 <= a.bound() && delta_images[g].size() != a.dim(dg + 1))
            throw SmashError("delta image of wrong degree (delta must raise degree by one)");
    }
    OreExtension ore{nullptr, ap, {}, {}};
    ore.sigma = extend_on_words(
        a, 0, bound,
        [&](int dp, const Vec& sw, std::size_t g, const Vec&) {
            return a.multiply(dp, sw, p.generators[g].degree, sigma_images[g]);
        },
        a.unit(), "sigma");
    // delta(w g) = sigma(w) delta(g) + delta(w) g
    const Vec zero1 = a.bound() >= 1 ? zero_vec(k, a.dim(1)) : Vec{};
    if (bound >= 1) {
        ore.delta = extend_on_words(
            a, 1, bound - 1,
            [&](int dp, const Vec& dw, std::size_t g, const Vec& w) {
                int dg = p.generators[g].degree;
                Vec out = a.multiply(dp, ore.sigma[dp].apply(w), dg + 1, delta_images[g]);
                axpy(out, k.one(), a.multiply(dp + 1, dw, dg, a.normal_form(Word{g})));
                return out;
            },
            zero1, "delta");
    }
    for (int d = 0; d <= bound; ++d)
        if (rank(ore.sigma[d]) != a.dim(d)) throw SmashError("sigma is not an automorphism in degree " + std::to_string(d));

    // Elements are stored as per-power A-vectors: part[j] in A_{n-j} multiplies x^j.
    using Parts = std::vector<Vec>;
    auto times_x_left = [&](int n, const Parts& f) {
        // x * sum a_j x^j = sum (sigma(a_j) x^{j+1} + delta(a_j) x^j), n the total degree
        const int parts = static_cast<int>(f.size());
        Parts out(parts + 1);
        for (int j = 0; j <= parts; ++j) out[j] = zero_vec(k, a.dim(n + 1 - j));
        for (int j = 0; j < parts; ++j) {
            if (is_zero(f[j])) continue;
            int da = n - j;
            axpy(out[j + 1], k.one(), ore.sigma[da].apply(f[j]));
            axpy(out[j], k.one(), ore.delta[da].apply(f[j]));
        }
        return out;
    };

    struct Ix {
        int i;
        std::size_t a;
    };
    std::vector<std::vector<Ix>> basis(bound + 1);
    std::vector<std::vector<std::string>> labels(bound + 1);
    for (int n = 0; n <= bound; ++n)
        for (int i = 0; i <= n; ++i)
            for (std::size_t x = 0; x < a.dim(i); ++x) {
                basis[n].push_back({i, x});
                std::string pw = n - i == 0 ? "" : (n - i == 1 ? xname : xname + "^" + std::to_string(n - i));
                std::string al = a.label(i, x);
                labels[n].push_back(pw.empty() ? al : (al == "1" ? pw : al + pw));
            }
    auto offset = [&](int n, int i) {
        std::size_t off = 0;
        for (int e = 0; e < i; ++e) off += a.dim(e);
        (void)n;
        return off;
    };
    auto product = [&](int d1, std::size_t s1, int d2, std::size_t s2) -> Vec {
        const auto& l = basis[d1][s1];
        const auto& r = basis[d2][s2];
        const int pn = d1 - l.i;
        // x^pn * r.a
        Parts f(1, unit_vec(k, a.dim(r.i), r.a));
        for (int t = 0; t < pn; ++t) f = times_x_left(r.i + t, f);
        Vec out = zero_vec(k, basis[d1 + d2].size());
        for (int j = 0; j <= pn; ++j) {
            int da = r.i + pn - j;
            if (is_zero(f[j])) continue;
            Vec coeff = a.multiply(l.i, unit_vec(k, a.dim(l.i), l.a), da, f[j]);
            int ai = l.i + da;  // A-degree of the result; power j + pm
            std::size_t off = offset(d1 + d2, ai);
            for (std::size_t z = 0; z < coeff.size(); ++z) out[off + z] += coeff[z];
        }
        return out;
    };
    auto alg = std::make_shared<GradedAlgebra>(k, bound, labels, Vec{k.one()}, product, a.name() + "[" + xname + "]");
    Report rep = validate_algebra(*alg);
    if (!rep.ok()) throw SmashError("Ore extension fails the algebra axioms: " + rep.summary());
    ore.algebra = alg;
    return ore;
}

Report ore_cross_check(const OreExtension& ore) {
    Report rep("ore_cross_check");
    const auto& a = *ore.base;
    const Field k = a.field();
    const int bound = ore.algebra->bound();
    for (const auto& dm : ore.delta)
        if (!dm.is_zero()) {
            rep.add("delta vanishes", Verdict::inconclusive, "the group-algebra route needs delta = 0");
            return rep;
        }
    // order of sigma on the truncation
    std::size_t order = 0;
    std::vector<Matrix> pow = ore.sigma;
    for (std::size_t t = 1; t <= 64; ++t) {
        bool id = true;
        for (int d = 0; d <= bound && id; ++d) id = pow[d] == Matrix::identity(k, a.dim(d));
        if (id) {
            order = t;
            break;
        }
        for (int d = 0; d <= bound; ++d) pow[d] = ore.sigma[d] * pow[d];
    }
    if (order == 0 || (k.characteristic() && order % k.characteristic() == 0)) {
        rep.add("finite order", Verdict::inconclusive, "sigma has no order up to 64 invertible in k");
        return rep;
    }
    rep.data()["order"] = order;
    auto h = finalize_hopf(cyclic_group_algebra(k, order));
    ActionData act{h, ore.base, {}};
    act.mats.assign(order, {});
    for (int d = 0; d <= a.bound(); ++d) {
        Matrix m = Matrix::identity(k, a.dim(d));
        for (std::size_t g = 0; g < order; ++g) {
            // sigma is only known up to the bound; higher degrees are never used
            act.mats[g].push_back(d <= bound ? m : Matrix::identity(k, a.dim(d)));
            if (d <= bound) m = ore.sigma[d] * m;
        }
    }
    auto b = realize_shared(make_presentation(k, {"x"}, {}, bound, "k[x]"));
    std::vector<std::size_t> gen_deg{1};
    CoactionData co = bicharacter_coaction(h, b, gen_deg);
    SmashAlgebra s = smash_algebra(act, co, bound, false);
    std::string first;
    for (int i = 0; i <= bound && first.empty(); ++i)
        for (int j = 0; i + j <= bound && first.empty(); ++j)
            for (std::size_t x = 0; x < s.algebra->dim(i) && first.empty(); ++x)
                for (std::size_t y = 0; y < s.algebra->dim(j) && first.empty(); ++y)
                    if (s.algebra->product(i, x, j, y) != ore.algebra->product(i, x, j, y))
                        first = ore.algebra->label(i, x) + " * " + ore.algebra->label(j, y);
    rep.expect(first.empty(), "structure constants agree with the group-algebra smash product", "differs at " + first);
    return rep;
}

Report freeness_isomorphism(const SmashAlgebra& s) {
    Report rep("freeness_isomorphism " + s.algebra->name());
    const auto& A = *s.a;
    const auto& B = *s.b;
    const auto& h = *s.hopf;
    const auto& S = *s.algebra;
    const Field k = S.field();
    const int bound = S.bound();
    const std::size_t n = h.n;
    // target basis in degree d: (j, b, a) with b in B_j, a in A_{d-j}
    auto toff = [&](int d, int j) {
        std::size_t off = 0;
        for (int e = 0; e < j; ++e) off += B.dim(e) * A.dim(d - e);
        return off;
    };
    auto tdim = [&](int d) { return toff(d, d + 1); };
    std::vector<Matrix> phi;
    auto phi_apply = [&](int d, std::size_t si) {
        const auto& ix = s.basis[d][si];
        const int j = d - ix.i;
        Vec out = zero_vec(k, tdim(d));
        for (const auto& t : coterms(s.coaction.coef[j][ix.b], n, B.dim(j))) {
            Vec sa = s.action.act(h.S_inv(h.basis(t.k)), ix.i, unit_vec(k, A.dim(ix.i), ix.a));
            const std::size_t off = toff(d, j) + t.c * A.dim(ix.i);
            for (std::size_t z = 0; z < sa.size(); ++z) out[off + z] += t.coeff * sa[z];
        }
        return out;
    };
    bool bij = true;
    for (int d = 0; d <= bound; ++d) {
        std::vector<Vec> cols;
        for (std::size_t si = 0; si < S.dim(d); ++si) cols.push_back(phi_apply(d, si));
        phi.push_back(Matrix::from_columns(k, tdim(d), cols));
        if (tdim(d) != S.dim(d) || rank(phi.back()) != S.dim(d)) {
            bij = false;
            rep.fail("bijective in degree " + std::to_string(d), "phi is singular");
        }
    }
    if (bij) rep.pass("bijective through degree " + std::to_string(bound));

    // B acts on the left of B (x) A through B, A on the right through A.
    auto left_b = [&](int jb, std::size_t bb, int d, const Vec& v) {
        Vec out = zero_vec(k, tdim(d + jb));
        for (int j = 0; j <= d; ++j)
            for (std::size_t y = 0; y < B.dim(j); ++y)
                for (std::size_t x = 0; x < A.dim(d - j); ++x) {
                    const Scalar& c = v[toff(d, j) + y * A.dim(d - j) + x];
                    if (c.is_zero()) continue;
                    const Vec& by = B.product(jb, bb, j, y);
                    for (std::size_t z = 0; z < by.size(); ++z)
                        if (!by[z].is_zero()) out[toff(d + jb, j + jb) + z * A.dim(d - j) + x] += c * by[z];
                }
        return out;
    };
    auto right_a = [&](int d, const Vec& v, int ia, std::size_t aa) {
        Vec out = zero_vec(k, tdim(d + ia));
        for (int j = 0; j <= d; ++j)
            for (std::size_t y = 0; y < B.dim(j); ++y)
                for (std::size_t x = 0; x < A.dim(d - j); ++x) {
                    const Scalar& c = v[toff(d, j) + y * A.dim(d - j) + x];
                    if (c.is_zero()) continue;
                    const Vec& xa = A.product(d - j, x, ia, aa);
                    for (std::size_t z = 0; z < xa.size(); ++z)
                        if (!xa[z].is_zero()) out[toff(d + ia, j) + y * A.dim(d - j + ia) + z] += c * xa[z];
                }
        return out;
    };
    std::string first;
    std::size_t checked = 0;
    for (int d = 0; d <= bound && first.empty(); ++d)
        for (std::size_t si = 0; si < S.dim(d) && first.empty(); ++si) {
            Vec es = unit_vec(k, S.dim(d), si);
            for (int jb = 0; d + jb <= bound && first.empty(); ++jb)
                for (std::size_t bb = 0; bb < B.dim(jb) && first.empty(); ++bb) {
                    ++checked;
                    Vec oneb = s.pure_tensor(0, A.unit(), jb, unit_vec(k, B.dim(jb), bb));
                    Vec lhs = phi[d + jb].apply(S.multiply(jb, oneb, d, es));
                    if (lhs != left_b(jb, bb, d, phi[d].apply(es)))
                        first = "left action of " + B.label(jb, bb) + " on " + S.label(d, si);
                }
            for (int ia = 0; d + ia <= bound && first.empty(); ++ia)
                for (std::size_t aa = 0; aa < A.dim(ia) && first.empty(); ++aa) {
                    ++checked;
                    Vec a1 = s.pure_tensor(ia, unit_vec(k, A.dim(ia), aa), 0, B.unit());
                    Vec lhs = phi[d + ia].apply(S.multiply(d, es, ia, a1));
                    if (lhs != right_a(d, phi[d].apply(es), ia, aa))
                        first = "right action of " + A.label(ia, aa) + " on " + S.label(d, si);
                }
        }
    rep.expect(first.empty(), "B-A-bimodule law", "fails for the " + first);
    rep.data()["pairs_checked"] = checked;
    return rep;
}

Report twisted_tensor_check(const SmashAlgebra& s) {
    Report rep("twisted_tensor_check " + s.algebra->name());
    const auto& A = *s.a;
    const auto& B = *s.b;
    const auto& S = *s.algebra;
    const Field k = S.field();
    const std::size_t n = s.hopf->n;
    const int bound = S.bound();
    std::string first;
    std::size_t checked = 0;
    for (int d1 = 0; d1 <= bound && first.empty(); ++d1)
        for (int d2 = 0; d1 + d2 <= bound && first.empty(); ++d2)
            for (std::size_t s1 = 0; s1 < S.dim(d1) && first.empty(); ++s1)
                for (std::size_t s2 = 0; s2 < S.dim(d2) && first.empty(); ++s2) {
                    const auto& l = s.basis[d1][s1];
                    const auto& r = s.basis[d2][s2];
                    const int jl = d1 - l.i, jr = d2 - r.i;
                    // tau(b (x) a') as a matrix image: sum over the coaction of b of (h a') (x) b_0
                    Matrix ma = A.multiplication_matrix(l.i, r.i);
                    Matrix mb = B.multiplication_matrix(jl, jr);
                    Vec out = zero_vec(k, S.dim(d1 + d2));
                    const Vec& rho = s.coaction.coef[jl][l.b];
                    for (std::size_t hk = 0; hk < n; ++hk) {
                        Vec ha = s.action.mats[hk][r.i].column(r.a);
                        for (std::size_t c = 0; c < B.dim(jl); ++c) {
                            const Scalar& coeff = rho[hk * B.dim(jl) + c];
                            if (coeff.is_zero()) continue;
                            Vec at = zero_vec(k, A.dim(l.i) * A.dim(r.i));
                            for (std::size_t z = 0; z < ha.size(); ++z) at[l.a * A.dim(r.i) + z] = ha[z];
                            Vec bt = zero_vec(k, B.dim(jl) * B.dim(jr));
                            bt[c * B.dim(jr) + r.b] = k.one();
                            axpy(out, coeff, s.pure_tensor(l.i + r.i, ma.apply(at), jl + jr, mb.apply(bt)));
                        }
                    }
                    ++checked;
                    if (out != S.product(d1, s1, d2, s2)) first = S.label(d1, s1) + " * " + S.label(d2, s2);
                }
    rep.expect(first.empty(), "twisted tensor product reproduces the smash product", "differs at " + first);
    rep.data()["pairs_checked"] = checked;
    return rep;
}

}  // namespace takeuchi
