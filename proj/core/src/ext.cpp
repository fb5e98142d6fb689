#include "takeuchi/ext.hpp"

#include "ext_internal.hpp"

#include <sstream>

namespace takeuchi {

std::size_t BigradedAlgebra::total_dim(int n) const {
    std::size_t s = 0;
    for (int d = d_min; d <= d_max; ++d) s += dim(n, d);
    return s;
}

Vec BigradedAlgebra::multiply(int n1, int d1, std::span<const Scalar> u, int n2, int d2,
                              std::span<const Scalar> v) const {
    const int n = n1 + n2, d = d1 + d2;
    if (!in_range(n, d) || !in_range(n1, d1) || !in_range(n2, d2))
        throw ExtError("product outside the computed range");
    const std::size_t a = dim(n1, d1), b = dim(n2, d2);
    if (u.size() != a || v.size() != b) throw ExtError("multiply: length mismatch");
    Vec out = zero_vec(field, dim(n, d));
    if (out.empty() || a == 0 || b == 0) return out;
    const Matrix& m = products.at({n1, d1, n2, d2});
    for (std::size_t i = 0; i < a; ++i) {
        if (u[i].is_zero()) continue;
        for (std::size_t j = 0; j < b; ++j)
            if (!v[j].is_zero()) axpy(out, u[i] * v[j], m.column(i * b + j));
    }
    return out;
}

json BigradedAlgebra::to_json() const {
    json j;
    j["name"] = name;
    j["max_level"] = max_level;
    j["internal_degrees"] = {d_min, d_max};
    json comps = json::array();
    for (int n = 0; n <= max_level; ++n)
        for (int d = d_min; d <= d_max; ++d)
            if (dim(n, d) > 0) {
                json c;
                c["bidegree"] = {n, d};
                c["dim"] = dim(n, d);
                if (!labels.empty()) c["basis"] = labels[n][d - d_min];
                comps.push_back(std::move(c));
            }
    j["components"] = std::move(comps);
    json prods = json::array();
    for (const auto& [key, m] : products) {
        if (m.rows() == 0 || m.cols() == 0) continue;
        const std::size_t b = dim(key[2], key[3]);
        for (std::size_t c = 0; c < m.cols(); ++c) {
            Vec col = m.column(c);
            if (is_zero(col)) continue;
            json p;
            p["left"] = {key[0], key[1], c / b};
            p["right"] = {key[2], key[3], c % b};
            p["product"] = takeuchi::to_json(col);
            prods.push_back(std::move(p));
        }
    }
    j["products"] = std::move(prods);
    j["unit"] = takeuchi::to_json(unit);
    return j;
}

Report validate_bigraded(const BigradedAlgebra& e) {
    Report rep("bigraded algebra " + e.name);
    const Field& k = e.field;
    std::string first;
    // unit law
    if (e.dim(0, 0) != e.unit.size()) {
        rep.fail("unit", "unit has the wrong length");
        return rep;
    }
    for (int n = 0; n <= e.max_level && first.empty(); ++n)
        for (int d = e.d_min; d <= e.d_max && first.empty(); ++d)
            for (std::size_t i = 0; i < e.dim(n, d) && first.empty(); ++i) {
                Vec v = unit_vec(k, e.dim(n, d), i);
                if (e.multiply(0, 0, e.unit, n, d, v) != v || e.multiply(n, d, v, 0, 0, e.unit) != v)
                    first = "(" + std::to_string(n) + "," + std::to_string(d) + ") basis " + std::to_string(i);
            }
    rep.expect(first.empty(), "unit law", "fails at " + first);

    first.clear();
    std::size_t triples = 0;
    for (int n1 = 0; n1 <= e.max_level && first.empty(); ++n1)
        for (int n2 = 0; n1 + n2 <= e.max_level && first.empty(); ++n2)
            for (int n3 = 0; n1 + n2 + n3 <= e.max_level && first.empty(); ++n3)
                for (int d1 = e.d_min; d1 <= e.d_max && first.empty(); ++d1)
                    for (int d2 = e.d_min; d2 <= e.d_max && first.empty(); ++d2)
                        for (int d3 = e.d_min; d3 <= e.d_max && first.empty(); ++d3) {
                            if (!e.in_range(n1 + n2, d1 + d2) || !e.in_range(n2 + n3, d2 + d3) ||
                                !e.in_range(n1 + n2 + n3, d1 + d2 + d3))
                                continue;
                            const std::size_t a = e.dim(n1, d1), b = e.dim(n2, d2), c = e.dim(n3, d3);
                            for (std::size_t i = 0; i < a && first.empty(); ++i)
                                for (std::size_t j = 0; j < b && first.empty(); ++j)
                                    for (std::size_t l = 0; l < c && first.empty(); ++l) {
                                        Vec x = unit_vec(k, a, i), y = unit_vec(k, b, j), z = unit_vec(k, c, l);
                                        Vec lhs = e.multiply(n1 + n2, d1 + d2, e.multiply(n1, d1, x, n2, d2, y), n3,
                                                             d3, z);
                                        Vec rhs = e.multiply(n1, d1, x, n2 + n3, d2 + d3,
                                                             e.multiply(n2, d2, y, n3, d3, z));
                                        ++triples;
                                        if (lhs != rhs) {
                                            std::ostringstream os;
                                            os << "(" << n1 << "," << d1 << ")#" << i << " (" << n2 << "," << d2
                                               << ")#" << j << " (" << n3 << "," << d3 << ")#" << l;
                                            first = os.str();
                                        }
                                    }
                        }
    rep.expect(first.empty(), "associative on " + std::to_string(triples) + " basis triples", "fails at " + first);
    return rep;
}

json ExtAlgebra::to_json() const {
    json j = algebra.to_json();
    j["has_products"] = has_products;
    if (resolution) {
        j["resolution_bounds"] = {resolution->max_level, resolution->bound};
        j["resolution_minimal"] = resolution->minimal;
    }
    auto mats = [&](const std::vector<std::vector<std::vector<Matrix>>>& src) {
        json out = json::array();
        for (int n = 0; n < static_cast<int>(src.size()); ++n)
            for (int d = algebra.d_min; d <= algebra.d_max; ++d) {
                if (algebra.dim(n, d) == 0 || src[n][d - algebra.d_min].empty()) continue;
                json c;
                c["bidegree"] = {n, d};
                json ms = json::array();
                for (const auto& m : src[n][d - algebra.d_min]) ms.push_back(takeuchi::to_json(m));
                c["matrices"] = std::move(ms);
                out.push_back(std::move(c));
            }
        return out;
    };
    if (!action.empty()) j["h_action"] = mats(action);
    if (!coaction.empty()) j["h_coaction"] = mats(coaction);
    j["provenance"] = provenance;
    j["validation"] = validation.to_json();
    return j;
}

// ---------------------------------------------------------------------------
// Hom complex

namespace detail {

HomComplex::HomComplex(std::shared_ptr<const Resolution> r, ModulePtr target)
    : res_(std::move(r)), target_(std::move(target)), k_(res_->algebra->field()) {
    if (res_->side != Side::right) throw ExtError("Ext is computed from right-module resolutions");
}

const HomComplex::Space& HomComplex::space(int n, int d) const {
    auto key = std::make_pair(n, d);
    auto it = spaces_.find(key);
    if (it != spaces_.end()) return it->second;
    Space s;
    if (n >= 0 && n <= res_->length()) {
        const auto& W = res_->levels[n];
        for (std::size_t g = 0; g < W.rank(); ++g) {
            const int vd = W.degrees[g] - d;
            s.offset.push_back(s.dim);
            s.vdeg.push_back(vd);
            s.dim += target_->dim(vd);
        }
    }
    return spaces_.emplace(key, std::move(s)).first->second;
}

std::span<const Scalar> HomComplex::value(int n, int d, std::span<const Scalar> c, std::size_t g) const {
    const auto& s = space(n, d);
    return c.subspan(s.offset[g], target_->dim(s.vdeg[g]));
}

Vec HomComplex::evaluate(int n, int d, std::span<const Scalar> c, int e, std::span<const Scalar> v) const {
    const auto& W = res_->levels.at(n);
    const auto& R = *res_->algebra;
    Vec out = zero_vec(k_, target_->dim(e - d));
    if (e - d < 0 || e - d > target_->bound()) return out;
    for (std::size_t g = 0; g < W.rank(); ++g) {
        const int dg = W.degrees[g];
        if (dg > e) continue;
        std::span<const Scalar> blk = v.subspan(W.offset(e, g), R.dim(e - dg));
        if (is_zero(blk)) continue;
        std::span<const Scalar> val = value(n, d, c, g);
        if (val.empty() || is_zero(val)) continue;
        axpy(out, k_.one(), target_->act(dg - d, val, e - dg, blk));
    }
    return out;
}

const Matrix& HomComplex::coboundary(int n, int d) const {
    auto key = std::make_pair(n, d);
    auto it = cobound_.find(key);
    if (it != cobound_.end()) return it->second;
    const auto& src = space(n, d);
    const auto& dst = space(n + 1, d);
    std::vector<Vec> cols;
    cols.reserve(src.dim);
    for (std::size_t i = 0; i < src.dim; ++i) {
        Vec c = unit_vec(k_, src.dim, i);
        Vec out = zero_vec(k_, dst.dim);
        if (n + 1 <= res_->length()) {
            const auto& W1 = res_->levels[n + 1];
            for (std::size_t g = 0; g < W1.rank(); ++g) {
                const int e = W1.degrees[g];
                if (target_->dim(e - d) == 0) continue;
                Vec val = evaluate(n, d, c, e, res_->boundary[n + 1][g]);
                for (std::size_t z = 0; z < val.size(); ++z) out[dst.offset[g] + z] = val[z];
            }
        }
        cols.push_back(std::move(out));
    }
    return cobound_.emplace(key, Matrix::from_columns(k_, dst.dim, cols)).first->second;
}

const LinearSolver& HomComplex::diff_solver(int n, int e) const {
    auto key = std::make_pair(n, e);
    auto it = solvers_.find(key);
    if (it != solvers_.end()) return it->second;
    return solvers_.emplace(key, LinearSolver(res_->differential(n, e))).first->second;
}

Vec HomComplex::apply_chain(int level, int shift, const std::vector<Vec>& images, int src_level, int e,
                            std::span<const Scalar> v) const {
    // F(sum w_h r_h) = sum F(w_h) r_h, F(w_h) in P_level of degree deg h - shift
    const auto& Wsrc = res_->levels.at(src_level);
    const auto& Wdst = res_->levels.at(level);
    const auto& R = *res_->algebra;
    Vec out = zero_vec(k_, Wdst.dim(e - shift));
    for (std::size_t h = 0; h < Wsrc.rank(); ++h) {
        const int dh = Wsrc.degrees[h];
        if (dh > e) continue;
        std::span<const Scalar> blk = v.subspan(Wsrc.offset(e, h), R.dim(e - dh));
        if (is_zero(blk) || images[h].empty() || is_zero(images[h])) continue;
        axpy(out, k_.one(), Wdst.act(dh - shift, images[h], e - dh, blk));
    }
    return out;
}

const HomComplex::Lift& HomComplex::lift(int m, int d, std::size_t cls, const Vec& cocycle, int top) const {
    auto key = std::make_tuple(m, d, cls);
    auto it = lifts_.find(key);
    if (it != lifts_.end() && static_cast<int>(it->second.size()) > top - m) return it->second;
    if (target_ != res_->module) throw ExtError("Yoneda products need Ext(M, M)");
    Lift F;
    const Scalar sign = m % 2 ? k_.make(-1) : k_.one();
    for (int i = 0; m + i <= std::min(top, res_->length()); ++i) {
        const auto& W = res_->levels.at(m + i);
        std::vector<Vec> imgs(W.rank());
        for (std::size_t g = 0; g < W.rank(); ++g) {
            const int e = W.degrees[g] - d;
            if (e < 0) continue;
            if (e > res_->bound) throw ExtError("lift needs degrees beyond the bound");
            Vec rhs;
            if (i == 0) {
                std::span<const Scalar> val = value(m, d, cocycle, g);
                rhs.assign(val.begin(), val.end());
            } else {
                rhs = apply_chain(i - 1, d, F[i - 1], m + i - 1, W.degrees[g], res_->boundary[m + i][g]);
                for (auto& s : rhs) s = s * sign;
            }
            if (res_->levels[i].dim(e) == 0) {
                if (!is_zero(rhs)) throw ExtError("lifting solve inconsistent");
                imgs[g] = Vec{};
                continue;
            }
            auto x = diff_solver(i, e).solve(rhs);
            if (!x) throw ExtError("lifting solve inconsistent at level " + std::to_string(i));
            imgs[g] = std::move(*x);
        }
        F.push_back(std::move(imgs));
    }
    return lifts_.insert_or_assign(key, std::move(F)).first->second;
}

Vec HomComplex::compose(int n, int d, const Vec& e, int m, int d2, const Lift& F) const {
    // (e o F_n)(w_g) for generators of P_{n+m}
    const auto& out_space = space(n + m, d + d2);
    Vec out = zero_vec(k_, out_space.dim);
    if (n + m > res_->length() || n >= static_cast<int>(F.size())) return out;
    const auto& W = res_->levels.at(n + m);
    for (std::size_t g = 0; g < W.rank(); ++g) {
        const std::size_t len = target_->dim(out_space.vdeg[g]);
        if (len == 0 || F[n][g].empty()) continue;
        Vec val = evaluate(n, d, e, W.degrees[g] - d2, F[n][g]);
        for (std::size_t z = 0; z < len; ++z) out[out_space.offset[g] + z] = val[z];
    }
    return out;
}

Cohomology::Cohomology(const HomComplex& hc, int n, int d) : field(hc.field()) {
    const auto& C = hc.space(n, d);
    dim_c = C.dim;
    const Matrix& delta = hc.coboundary(n, d);
    std::vector<Vec> z = delta.rows() == 0 ? std::vector<Vec>{} : kernel_basis(delta);
    if (delta.rows() == 0)
        for (std::size_t i = 0; i < C.dim; ++i) z.push_back(unit_vec(field, C.dim, i));
    if (n > 0) {
        const Matrix& prev = hc.coboundary(n - 1, d);
        for (std::size_t c = 0; c < prev.cols(); ++c) {
            Vec col = prev.column(c);
            if (!is_zero(col)) boundaries.push_back(std::move(col));
        }
    }
    EchelonBasis eb(field, C.dim);
    for (const auto& b : boundaries) eb.add(b);
    const std::size_t nb = eb.dimension();
    for (auto& v : z)
        if (eb.add(v)) reps.push_back(std::move(v));
    std::vector<Vec> cols = reps;
    bdim = nb;
    cols.insert(cols.end(), boundaries.begin(), boundaries.end());
    if (C.dim > 0) solver.emplace(Matrix::from_columns(field, C.dim, cols));
    delta_ = &delta;
}

Vec Cohomology::coords(const Vec& cocycle) const {
    if (reps.empty()) return {};
    if (!is_zero(delta_->apply(cocycle))) throw ExtError("not a cocycle");
    auto x = solver->solve(cocycle);
    if (!x) throw ExtError("cocycle outside the span of classes and coboundaries");
    x->resize(reps.size());
    return *x;
}

bool Cohomology::is_coboundary(const Vec& v) const {
    if (is_zero(v)) return true;
    if (boundaries.empty()) return false;
    LinearSolver s(Matrix::from_columns(field, dim_c, boundaries));
    return s.in_image(v);
}

}  // namespace detail

}  // namespace takeuchi
