#include "takeuchi/resolution.hpp"

#include <algorithm>

namespace takeuchi {

std::size_t FreeModule::dim(int e) const {
    if (e < 0 || e > bound) return 0;
    std::size_t out = 0;
    for (int d : degrees)
        if (d <= e && e - d <= algebra->bound()) out += algebra->dim(e - d);
    return out;
}

std::size_t FreeModule::offset(int e, std::size_t g) const {
    std::size_t out = 0;
    for (std::size_t h = 0; h < g; ++h)
        if (degrees[h] <= e && e - degrees[h] <= algebra->bound()) out += algebra->dim(e - degrees[h]);
    return out;
}

Vec FreeModule::generator(std::size_t g) const {
    const int e = degrees.at(g);
    Vec v = zero_vec(algebra->field(), dim(e));
    const std::size_t off = offset(e, g);
    for (std::size_t r = 0; r < algebra->dim(0); ++r) v[off + r] = algebra->unit()[r];
    return v;
}

Vec FreeModule::act(int e, std::span<const Scalar> v, int j, std::span<const Scalar> r) const {
    const auto& R = *algebra;
    Vec out = zero_vec(R.field(), dim(e + j));
    std::size_t in_off = 0;
    for (std::size_t g = 0; g < degrees.size(); ++g) {
        const int dg = degrees[g];
        if (dg > e || e - dg > R.bound()) continue;
        const int de = e - dg;
        const std::size_t n = R.dim(de);
        std::span<const Scalar> c = v.subspan(in_off, n);
        in_off += n;
        if (is_zero(c) || e + j > bound) continue;
        Vec prod = side == Side::right ? R.multiply(de, c, j, r) : R.multiply(j, r, de, c);
        const std::size_t off = offset(e + j, g);
        for (std::size_t z = 0; z < prod.size(); ++z) out[off + z] += prod[z];
    }
    return out;
}

std::vector<std::size_t> FreeModule::generator_counts() const {
    std::vector<std::size_t> out(bound + 1, 0);
    for (int d : degrees)
        if (d <= bound) ++out[d];
    return out;
}

std::size_t Resolution::target_dim(int n, int e) const {
    return n == 0 ? module->dim(e) : levels.at(n - 1).dim(e);
}

namespace {

// Image of boundary element b (in degree dg of the target of level n) under r in R_j.
Vec act_target(const Resolution& res, int n, int dg, std::span<const Scalar> b, int j, std::span<const Scalar> r) {
    if (n == 0) {
        if (dg + j > res.module->bound()) return {};
        return res.module->act(dg, b, j, r);
    }
    return res.levels[n - 1].act(dg, b, j, r);
}

}  // namespace

const Matrix& Resolution::differential(int n, int e) const {
    if (cache_.size() < levels.size()) cache_.resize(levels.size());
    auto& row = cache_.at(n);
    if (row.size() < static_cast<std::size_t>(bound + 1)) row.resize(bound + 1);
    auto& slot = row.at(e);
    if (slot) return *slot;
    const auto& W = levels[n];
    const auto& R = *algebra;
    const std::size_t rows = target_dim(n, e);
    std::vector<Vec> cols;
    for (std::size_t g = 0; g < W.rank(); ++g) {
        const int dg = W.degrees[g];
        if (dg > e || e - dg > R.bound()) continue;
        for (std::size_t r = 0; r < R.dim(e - dg); ++r) {
            Vec c = rows ? act_target(*this, n, dg, boundary[n][g], e - dg, unit_vec(R.field(), R.dim(e - dg), r)) : Vec{};
            if (c.empty()) c = zero_vec(R.field(), rows);
            cols.push_back(std::move(c));
        }
    }
    slot = Matrix::from_columns(R.field(), rows, cols);
    return *slot;
}

Vec Resolution::act_h(int n, int e, std::size_t k, std::span<const Scalar> v) const {
    if (!action) throw ResolutionError("resolution carries no H-action");
    const auto& h = *action->hopf;
    const auto& W = levels.at(n);
    const auto& R = *algebra;
    const std::size_t nh = h.n;
    Vec out = zero_vec(R.field(), W.dim(e));
    for (std::size_t g = 0; g < W.rank(); ++g) {
        const int dg = W.degrees[g];
        if (dg > e) continue;
        const int de = e - dg;
        const std::size_t off = W.offset(e, g);
        std::span<const Scalar> c = v.subspan(off, R.dim(de));
        if (is_zero(c)) continue;
        for (std::size_t x = 0; x < nh; ++x)
            for (std::size_t y = 0; y < nh; ++y) {
                const Scalar& cf = h.comult[k][x * nh + y];
                if (cf.is_zero()) continue;
                Vec sa = action->act(h.S_inv(h.basis(x)), de, c);
                if (is_zero(sa)) continue;
                const Vec col = gen_action[n][y].column(g);
                for (std::size_t j = 0; j < col.size(); ++j) {
                    const Scalar& t = col[j];
                    if (t.is_zero()) continue;
                    const std::size_t oj = W.offset(e, j);
                    for (std::size_t z = 0; z < sa.size(); ++z) out[oj + z] += cf * t * sa[z];
                }
            }
    }
    return out;
}

Vec Resolution::coact(int n, int e, std::span<const Scalar> v) const {
    if (!coaction) throw ResolutionError("resolution carries no H-coaction");
    const auto& h = *coaction->hopf;
    const auto& W = levels.at(n);
    const auto& R = *algebra;
    const std::size_t nh = h.n, rank = W.rank(), dim = W.dim(e);
    Vec out = zero_vec(R.field(), nh * dim);
    for (std::size_t g = 0; g < rank; ++g) {
        const int dg = W.degrees[g];
        if (dg > e) continue;
        const int de = e - dg;
        const std::size_t off = W.offset(e, g);
        for (std::size_t r = 0; r < R.dim(de); ++r) {
            const Scalar& c = v[off + r];
            if (c.is_zero()) continue;
            const Vec& rb = coaction->coef[de][r];
            const Vec& rw = gen_coaction[n][g];
            for (std::size_t k = 0; k < nh; ++k)
                for (std::size_t j = 0; j < rank; ++j) {
                    if (rw[k * rank + j].is_zero()) continue;
                    const std::size_t oj = W.offset(e, j);
                    for (std::size_t l = 0; l < nh; ++l) {
                        Vec hh = h.multiply(h.basis(k), h.basis(l));
                        for (std::size_t cb = 0; cb < R.dim(de); ++cb) {
                            const Scalar& b = rb[l * R.dim(de) + cb];
                            if (b.is_zero()) continue;
                            Scalar f = c * rw[k * rank + j] * b;
                            for (std::size_t s = 0; s < nh; ++s)
                                if (!hh[s].is_zero()) out[s * dim + oj + cb] += f * hh[s];
                        }
                    }
                }
        }
    }
    return out;
}

json Resolution::to_json() const {
    json j;
    j["algebra"] = algebra->name();
    j["module"] = module->name();
    j["side"] = side == Side::left ? "left" : "right";
    j["bounds"] = {max_level, bound};
    j["minimal"] = minimal;
    j["terminated"] = terminated;
    j["provenance"] = provenance;
    json lv = json::array();
    for (std::size_t n = 0; n < levels.size(); ++n) {
        json l;
        l["generator_degrees"] = levels[n].degrees;
        json b = json::array();
        for (const auto& v : boundary[n]) {
            json terms = json::array();
            for (std::size_t z = 0; z < v.size(); ++z)
                if (!v[z].is_zero()) terms.push_back({z, v[z].to_string()});
            b.push_back(terms);
        }
        l["boundary"] = b;
        if (!gen_action.empty() && n < gen_action.size()) {
            json acts = json::array();
            for (const auto& m : gen_action[n]) {
                json rows = json::array();
                for (std::size_t r = 0; r < m.rows(); ++r) {
                    json row = json::array();
                    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).to_string());
                    rows.push_back(row);
                }
                acts.push_back(rows);
            }
            l["generator_action"] = acts;
        }
        lv.push_back(l);
    }
    j["levels"] = lv;
    return j;
}

std::optional<Vec> normalized_integral(const HopfData& h) {
    const std::size_t n = h.n;
    std::vector<Vec> rows;
    Vec rhs;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t c = 0; c < n; ++c) {
            // coefficient of h_c in h_a t - eps(h_a) t
            Vec row = zero_vec(h.field, n);
            for (std::size_t b = 0; b < n; ++b) row[b] += h.mult[a * n + b][c];
            row[c] -= h.counit[a];
            rows.push_back(std::move(row));
            rhs.push_back(h.field.zero());
        }
    rows.push_back(h.counit);
    rhs.push_back(h.field.one());
    return solve(Matrix::from_rows(h.field, n, rows), rhs);
}

HopfData dual_hopf(const HopfData& h) {
    const std::size_t n = h.n;
    HopfData d;
    d.field = h.field;
    d.n = n;
    d.name = h.name + "*";
    for (const auto& l : h.labels) d.labels.push_back("f[" + l + "]");
    d.mult.assign(n * n, zero_vec(h.field, n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c) d.mult[a * n + b][c] = h.comult[c][a * n + b];
    d.unit = h.counit;
    d.comult.assign(n, zero_vec(h.field, n * n));
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) d.comult[c][a * n + b] = h.mult[a * n + b][c];
    d.counit = h.unit;
    d.antipode = h.antipode.transpose();
    d.antipode_inv = h.antipode_inv.transpose();
    return d;
}

namespace {

// Right action of a Hopf algebra G (by basis element) on a stable subspace of the ambient space.
using OpFn = std::function<Vec(std::size_t, const Vec&)>;

struct Choice {
    std::vector<Vec> gens;
    std::vector<Matrix> ops;  // per G basis element, square on gens
    bool minimal = true;
    std::string how;
};

Vec apply_g(const HopfData& g, const OpFn& op, std::span<const Scalar> coeffs, const Vec& v) {
    Vec out = zero_vec(g.field, v.size());
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        if (!coeffs[k].is_zero()) axpy(out, coeffs[k], op(k, v));
    return out;
}

// Coordinates of the ops on span(gens); empty if the span is not stable.
std::optional<std::vector<Matrix>> ops_on_span(const HopfData& g, const OpFn& op, const std::vector<Vec>& gens,
                                               std::size_t ambient) {
    std::vector<Matrix> out;
    if (gens.empty()) {
        for (std::size_t k = 0; k < g.n; ++k) out.emplace_back(g.field, 0, 0);
        return out;
    }
    LinearSolver solver(Matrix::from_columns(g.field, ambient, gens));
    for (std::size_t k = 0; k < g.n; ++k) {
        std::vector<Vec> cols;
        for (const auto& w : gens) {
            auto x = solver.solve(op(k, w));
            if (!x) return std::nullopt;
            cols.push_back(std::move(*x));
        }
        out.push_back(Matrix::from_columns(g.field, gens.size(), cols));
    }
    return out;
}

// Chooses generators spanning a G-stable complement of the image inside the
// kernel. image: spanning vectors of I; cands: kernel vectors independent mod I.
Choice choose_stable(const HopfData& g, const OpFn& op, const std::vector<Vec>& image_rows,
                     const std::vector<Vec>& cands, std::size_t ambient) {
    Choice c;
    if (cands.empty()) {
        c.ops = *ops_on_span(g, op, {}, ambient);
        return c;
    }
    if (auto same = ops_on_span(g, op, cands, ambient)) {
        c.gens = cands;
        c.ops = std::move(*same);
        c.how = "minimal (chosen complement is stable)";
        return c;
    }
    if (auto t = normalized_integral(g)) {
        // Average the projection onto I along span(cands): q~(v) = sum q(v.S(t_1)).t_2.
        std::vector<Vec> cols = image_rows;
        cols.insert(cols.end(), cands.begin(), cands.end());
        LinearSolver solver(Matrix::from_columns(g.field, ambient, cols));
        auto q = [&](const Vec& v) {
            auto x = solver.solve(v);
            if (!x) throw ResolutionError("averaging left the kernel");
            Vec out = zero_vec(g.field, ambient);
            for (std::size_t z = 0; z < image_rows.size(); ++z)
                if (!(*x)[z].is_zero()) axpy(out, (*x)[z], image_rows[z]);
            return out;
        };
        Vec dt = g.coproduct(*t);
        std::vector<Vec> gens;
        for (const auto& cv : cands) {
            Vec avg = zero_vec(g.field, ambient);
            for (std::size_t x = 0; x < g.n; ++x)
                for (std::size_t y = 0; y < g.n; ++y) {
                    const Scalar& cf = dt[x * g.n + y];
                    if (cf.is_zero()) continue;
                    Vec v = apply_g(g, op, g.S(g.basis(x)), cv);
                    axpy(avg, cf, op(y, q(v)));
                }
            Vec w = cv;
            axpy(w, g.field.make(-1), avg);
            gens.push_back(std::move(w));
        }
        if (auto ops = ops_on_span(g, op, gens, ambient)) {
            c.gens = std::move(gens);
            c.ops = std::move(*ops);
            c.how = "minimal (averaged complement)";
            return c;
        }
    }
    // Closure fallback: generate a stable subspace from each candidate.
    EchelonBasis span(g.field, ambient);
    for (const auto& v : image_rows) span.add(v);
    const std::size_t needed = span.dimension() + cands.size();
    std::vector<Vec> gens;
    for (const auto& cv : cands) {
        if (span.contains(cv)) continue;
        Closure cl = closure(g.field, ambient, g.n, {cv}, [&](const Vec& v) {
            std::vector<Vec> comps;
            for (std::size_t k = 0; k < g.n; ++k) comps.push_back(op(k, v));
            return comps;
        });
        for (const auto& b : cl.basis) {
            span.add(b);
            gens.push_back(b);
        }
    }
    c.gens = gens;
    c.ops = *ops_on_span(g, op, gens, ambient);
    c.minimal = span.dimension() == needed && gens.size() == cands.size();
    c.how = "closure (stable hull of the chosen generators)";
    return c;
}

enum class Mode { plain, module, comodule };

struct Builder {
    Resolution res;
    Mode mode = Mode::plain;
    std::optional<HopfData> dual;

    // G-operator on the target of level n in degree e.
    OpFn target_op(int n, int e) const {
        if (mode == Mode::module) {
            if (n == 0) return [this, e](std::size_t k, const Vec& v) { return res.module_action->act_h(k, e, v); };
            return [this, n, e](std::size_t k, const Vec& v) { return res.act_h(n - 1, e, k, v); };
        }
        const std::size_t nh = res.coaction->hopf->n;
        return [this, n, e, nh](std::size_t k, const Vec& v) {
            Vec full = n == 0 ? res.module_coaction->coact(e, v) : res.coact(n - 1, e, v);
            const std::size_t dim = v.size();
            (void)nh;
            return Vec(full.begin() + static_cast<std::ptrdiff_t>(k * dim),
                       full.begin() + static_cast<std::ptrdiff_t>((k + 1) * dim));
        };
    }

    const HopfData* acting() const {
        if (mode == Mode::module) return res.action->hopf.get();
        if (mode == Mode::comodule) return &*dual;
        return nullptr;
    }

    // Builds level n; returns false when it has no generators.
    bool build_level(int n) {
        const auto& R = *res.algebra;
        const Field k = R.field();
        FreeModule W{res.algebra, res.side, {}, {}, res.bound};
        std::vector<Vec> bnd;
        const HopfData* g = acting();
        std::vector<std::tuple<std::size_t, std::size_t, std::vector<Matrix>>> op_blocks;
        for (int e = 0; e <= res.bound; ++e) {
            const std::size_t tdim = res.target_dim(n, e);
            if (tdim == 0) continue;
            std::vector<Vec> kernel;
            if (n == 0) {
                for (std::size_t i = 0; i < tdim; ++i) kernel.push_back(unit_vec(k, tdim, i));
            } else {
                kernel = kernel_basis(res.differential(n - 1, e));
            }
            if (kernel.empty()) continue;
            std::vector<Vec> image;
            for (std::size_t gi = 0; gi < W.rank(); ++gi) {
                const int dg = W.degrees[gi];
                if (e - dg > R.bound()) continue;
                for (std::size_t r = 0; r < R.dim(e - dg); ++r) {
                    Vec v = act_target(res, n, dg, bnd[gi], e - dg, unit_vec(k, R.dim(e - dg), r));
                    if (!v.empty()) image.push_back(std::move(v));
                }
            }
            EchelonBasis span(k, tdim);
            for (const auto& v : image) span.add(v);
            std::vector<Vec> cands;
            for (const auto& v : kernel) {
                if (span.contains(v)) continue;
                cands.push_back(v);
                for (std::size_t r = 0; r < R.dim(0); ++r) {
                    Vec vr = act_target(res, n, e, v, 0, unit_vec(k, R.dim(0), r));
                    if (!vr.empty()) span.add(vr);
                }
                span.add(v);
            }
            if (cands.empty()) continue;
            if (!R.connected()) res.minimal = false;
            std::vector<Vec> gens = cands;
            if (g) {
                Choice c = choose_stable(*g, target_op(n, e), span.rows(), cands, tdim);
                if (!c.minimal) res.minimal = false;
                res.provenance.push_back("level " + std::to_string(n) + " degree " + std::to_string(e) + ": " + c.how);
                gens = c.gens;
                op_blocks.emplace_back(W.rank(), gens.size(), std::move(c.ops));
            }
            for (std::size_t i = 0; i < gens.size(); ++i) {
                W.degrees.push_back(e);
                W.labels.push_back("w" + std::to_string(n) + "_" + std::to_string(W.rank() - 1));
                bnd.push_back(gens[i]);
            }
        }
        if (W.rank() == 0) return false;
        res.levels.push_back(std::move(W));
        res.boundary.push_back(std::move(bnd));
        if (g) {
            const std::size_t rank = res.levels.back().rank();
            std::vector<Matrix> full(g->n, Matrix(k, rank, rank));
            for (const auto& [start, size, ops] : op_blocks)
                for (std::size_t h = 0; h < g->n; ++h)
                    for (std::size_t a = 0; a < size; ++a)
                        for (std::size_t b = 0; b < size; ++b) full[h].set(start + a, start + b, ops[h].at(a, b));
            if (mode == Mode::module) {
                res.gen_action.push_back(std::move(full));
            } else {
                // rho(w_i) = sum_k h_k (x) (ops[k] w_i)
                std::vector<Vec> co(rank, zero_vec(k, g->n * rank));
                for (std::size_t i = 0; i < rank; ++i)
                    for (std::size_t h = 0; h < g->n; ++h)
                        for (std::size_t j = 0; j < rank; ++j) co[i][h * rank + j] = full[h].at(j, i);
                res.gen_coaction.push_back(std::move(co));
            }
        }
        return true;
    }

    void run() {
        for (int n = 0; n <= res.max_level; ++n)
            if (!build_level(n)) {
                res.terminated = true;
                break;
            }
        if (!res.terminated && res.max_level >= 0) {
            // Terminated if the top kernel vanishes within the bound.
            const int top = res.length();
            bool zero = true;
            for (int e = 0; e <= res.bound && zero; ++e)
                zero = kernel_basis(res.differential(top, e)).empty() || res.levels[top].dim(e) == 0;
            res.terminated = zero;
        }
        res.cache_.clear();
    }
};

Resolution empty_resolution(const ModulePtr& m, int max_level, int bound) {
    if (max_level < 0) throw ResolutionError("negative homological bound");
    Resolution r;
    r.module = m;
    r.algebra = m->algebra();
    r.side = m->side();
    r.max_level = max_level;
    r.bound = std::min(bound, r.algebra->bound());
    if (bound > r.algebra->bound()) r.provenance.push_back("internal bound clipped to the algebra bound");
    return r;
}

}  // namespace

Resolution minimal_resolution(const ModulePtr& m, int max_level, int bound) {
    Builder b;
    b.res = empty_resolution(m, max_level, bound);
    b.run();
    return std::move(b.res);
}

Resolution equivariant_module_resolution(const HModule& m, const ActionData& action, int max_level, int bound) {
    if (m.module->side() != Side::right) throw ResolutionError("equivariant resolutions are built for right modules");
    if (m.module->algebra() != action.algebra) throw ResolutionError("module and action live over different algebras");
    Builder b;
    b.res = empty_resolution(m.module, max_level, bound);
    b.res.action = action;
    b.mode = Mode::module;
    b.res.module_action = std::make_shared<const HModule>(m);
    b.run();
    return std::move(b.res);
}

Resolution equivariant_comodule_resolution(const HopfModule& x, const CoactionData& coaction, int max_level,
                                           int bound) {
    if (x.module->side() != Side::right) throw ResolutionError("comodule resolutions are built for right modules");
    if (x.module->algebra() != coaction.algebra) throw ResolutionError("module and coaction live over different algebras");
    Report hm = validate_hopf_module(x, coaction);
    if (!hm.ok()) throw ResolutionError("Hopf-module law violated: " + hm.summary());
    Builder b;
    b.res = empty_resolution(x.module, max_level, bound);
    b.res.coaction = coaction;
    b.mode = Mode::comodule;
    b.res.module_coaction = std::make_shared<const HopfModule>(x);
    b.dual = dual_hopf(*coaction.hopf);
    b.run();
    return std::move(b.res);
}

ModulePtr level_module(const Resolution& r, int n) {
    const auto& W = r.levels.at(n);
    const auto& R = *r.algebra;
    std::vector<std::vector<std::string>> labels(r.bound + 1);
    for (int e = 0; e <= r.bound; ++e)
        for (std::size_t g = 0; g < W.rank(); ++g) {
            const int dg = W.degrees[g];
            if (dg > e || e - dg > R.bound()) continue;
            for (std::size_t x = 0; x < R.dim(e - dg); ++x)
                labels[e].push_back(r.side == Side::right ? W.labels[g] + "*" + R.label(e - dg, x)
                                                          : R.label(e - dg, x) + "*" + W.labels[g]);
        }
    const FreeModule* wp = &W;
    auto fn = [wp, &R](int d, std::size_t m, int j, std::size_t x) {
        return wp->act(d, unit_vec(R.field(), wp->dim(d), m), j, unit_vec(R.field(), R.dim(j), x));
    };
    return std::make_shared<const GradedModule>(r.algebra, r.side, r.bound, labels, fn,
                                                "P" + std::to_string(n));
}

HModule level_hmodule(const Resolution& r, int n) {
    if (!r.action) throw ResolutionError("resolution carries no H-action");
    HModule hm{level_module(r, n), r.action->hopf, {}};
    const auto& h = *r.action->hopf;
    hm.mats.assign(h.n, {});
    for (std::size_t k = 0; k < h.n; ++k)
        for (int e = 0; e <= r.bound; ++e) {
            const std::size_t dim = r.levels[n].dim(e);
            std::vector<Vec> cols;
            for (std::size_t i = 0; i < dim; ++i) cols.push_back(r.act_h(n, e, k, unit_vec(h.field, dim, i)));
            hm.mats[k].push_back(Matrix::from_columns(h.field, dim, cols));
        }
    return hm;
}

namespace {

std::size_t block_offset(const SmashModule& s, int e, int i) {
    std::size_t off = 0;
    for (const auto& ix : s.basis.at(e)) {
        if (ix.i == i) return off;
        ++off;
    }
    return off;
}

Vec pure_in(const SmashModule& s, std::size_t second_dim, int e, int i, std::span<const Scalar> u,
            std::span<const Scalar> v) {
    Vec out = zero_vec(s.module->field(), s.module->dim(e));
    const std::size_t off = block_offset(s, e, i);
    for (std::size_t a = 0; a < u.size(); ++a) {
        if (u[a].is_zero()) continue;
        for (std::size_t b = 0; b < v.size(); ++b)
            if (!v[b].is_zero()) out[off + a * second_dim + b] += u[a] * v[b];
    }
    return out;
}

}  // namespace

TotalResolution total_smash_resolution(const SmashAlgebra& s, const Resolution& p, const Resolution& q,
                                       const SmashModule& target) {
    if (!p.action) throw ResolutionError("the A-side resolution needs its H-action");
    const auto& S = *s.algebra;
    const Field k = S.field();
    const int D = std::min({S.bound(), p.bound, q.bound});
    const int N = std::min(p.max_level, q.max_level);

    TotalResolution tot{Resolution{}, target, {}, {}};
    Resolution& r = tot.resolution;
    r.module = target.module;
    r.algebra = s.algebra;
    r.side = Side::right;
    r.max_level = N;
    r.bound = D;
    r.minimal = p.minimal && q.minimal && S.connected();
    r.provenance.push_back("total complex of the factor resolutions");

    // Smash modules P_p # Q_q and their freeness isomorphisms.
    struct Block {
        int p, q;
        SmashModule sm;
        ModulePtr qm;
        std::vector<std::pair<std::size_t, std::size_t>> pairs;  // generator pairs of this block (tot order)
        std::vector<std::optional<LinearSolver>> phi_inv;        // per degree
    };
    std::vector<std::vector<Block>> blocks(N + 1);
    for (int n = 0; n <= N; ++n)
        for (int pp = 0; pp <= n; ++pp) {
            const int qq = n - pp;
            if (pp > p.length() || qq > q.length()) continue;
            Block b{pp, qq, SmashModule{}, level_module(q, qq), {}, {}};
            HModule ph = level_hmodule(p, pp);
            b.sm = smash_module_right(s, ph, *b.qm, false);
            const auto& Wp = p.levels[pp];
            const auto& Vq = q.levels[qq];
            for (std::size_t i = 0; i < Wp.rank(); ++i)
                for (std::size_t j = 0; j < Vq.rank(); ++j)
                    if (Wp.degrees[i] + Vq.degrees[j] <= D) b.pairs.emplace_back(i, j);
            for (int e = 0; e <= D; ++e) {
                std::vector<Vec> cols;
                const std::size_t rows = b.sm.module->dim(e);
                for (const auto& [i, j] : b.pairs) {
                    const int dw = Wp.degrees[i], dv = Vq.degrees[j];
                    if (dw + dv > e) continue;
                    Vec gen = pure_in(b.sm, Vq.dim(dv), dw + dv, dw, Wp.generator(i), Vq.generator(j));
                    for (std::size_t x = 0; x < S.dim(e - dw - dv); ++x)
                        cols.push_back(b.sm.module->act(dw + dv, gen, e - dw - dv, unit_vec(k, S.dim(e - dw - dv), x)));
                }
                if (cols.size() != rows) throw ResolutionError("freeness isomorphism is not square");
                if (rows == 0) {
                    b.phi_inv.emplace_back(std::nullopt);
                    continue;
                }
                Matrix phi = Matrix::from_columns(k, rows, cols);
                if (rank(phi) != rows)
                    throw ResolutionError("freeness isomorphism singular in degree " + std::to_string(e));
                b.phi_inv.emplace_back(LinearSolver(phi));
            }
            blocks[n].push_back(std::move(b));
        }

    // Generators of each Tot level, in block order.
    std::vector<std::vector<std::size_t>> block_start(N + 1);
    for (int n = 0; n <= N; ++n) {
        FreeModule W{s.algebra, Side::right, {}, {}, D};
        std::vector<TotalResolution::Origin> orig;
        for (const auto& b : blocks[n]) {
            block_start[n].push_back(W.rank());
            for (const auto& [i, j] : b.pairs) {
                W.degrees.push_back(p.levels[b.p].degrees[i] + q.levels[b.q].degrees[j]);
                W.labels.push_back(p.levels[b.p].labels[i] + "#" + q.levels[b.q].labels[j]);
                tot.blocks.emplace_back(b.p, b.q);
                orig.push_back({b.p, i, b.q, j});
            }
        }
        if (W.rank() == 0) break;
        r.levels.push_back(std::move(W));
        tot.origin.push_back(std::move(orig));
    }

    auto to_tot = [&](int n, std::size_t bi, int e, const Vec& elem) {
        // coordinates of an element of block bi of level n, degree e, in the Tot basis
        const Block& b = blocks[n][bi];
        const FreeModule& W = r.levels[n];
        Vec out = zero_vec(k, W.dim(e));
        if (is_zero(elem)) return out;
        auto x = b.phi_inv[e]->solve(elem);
        if (!x) throw ResolutionError("element outside the smash module");
        std::size_t col = 0;
        for (std::size_t pi = 0; pi < b.pairs.size(); ++pi) {
            const std::size_t g = block_start[n][bi] + pi;
            const int dg = W.degrees[g];
            if (dg > e) continue;
            const std::size_t off = W.offset(e, g);
            for (std::size_t z = 0; z < S.dim(e - dg); ++z) out[off + z] = (*x)[col++];
        }
        return out;
    };
    auto find_block = [&](int n, int pp) -> std::optional<std::size_t> {
        for (std::size_t bi = 0; bi < blocks[n].size(); ++bi)
            if (blocks[n][bi].p == pp) return bi;
        return std::nullopt;
    };

    for (int n = 0; n < static_cast<int>(r.levels.size()); ++n) {
        std::vector<Vec> bnd;
        for (std::size_t bi = 0; bi < blocks[n].size(); ++bi) {
            const Block& b = blocks[n][bi];
            const auto& Wp = p.levels[b.p];
            const auto& Vq = q.levels[b.q];
            for (const auto& [i, j] : b.pairs) {
                const int dw = Wp.degrees[i], dv = Vq.degrees[j], e = dw + dv;
                if (n == 0) {
                    bnd.push_back(pure_in(target, q.module->dim(dv), e, dw, p.boundary[0][i], q.boundary[0][j]));
                    continue;
                }
                Vec v = zero_vec(k, r.levels[n - 1].dim(e));
                if (b.p >= 1) {
                    if (auto lb = find_block(n - 1, b.p - 1)) {
                        const Block& t = blocks[n - 1][*lb];
                        Vec elem = pure_in(t.sm, Vq.dim(dv), e, dw, p.boundary[b.p][i], Vq.generator(j));
                        axpy(v, k.one(), to_tot(n - 1, *lb, e, elem));
                    }
                }
                if (b.q >= 1) {
                    if (auto lb = find_block(n - 1, b.p)) {
                        const Block& t = blocks[n - 1][*lb];
                        Vec elem = pure_in(t.sm, q.levels[b.q - 1].dim(dv), e, dw, Wp.generator(i), q.boundary[b.q][j]);
                        axpy(v, b.p % 2 ? k.make(-1) : k.one(), to_tot(n - 1, *lb, e, elem));
                    }
                }
                bnd.push_back(std::move(v));
            }
        }
        r.boundary.push_back(std::move(bnd));
    }
    r.terminated = p.terminated && q.terminated && r.length() <= N;
    return tot;
}

Report validate_resolution(const Resolution& r) {
    Report rep("validate_resolution " + r.module->name() + " over " + r.algebra->name());
    const Field k = r.algebra->field();
    const int L = r.length();
    std::string first;
    for (int n = 1; n <= L && first.empty(); ++n)
        for (int e = 0; e <= r.bound && first.empty(); ++e)
            if (r.levels[n].dim(e) && !(r.differential(n - 1, e) * r.differential(n, e)).is_zero())
                first = "level " + std::to_string(n) + " degree " + std::to_string(e);
    rep.expect(first.empty(), "d^2 = 0", "fails at " + first);

    first.clear();
    for (int e = 0; e <= r.bound && first.empty(); ++e) {
        const std::size_t md = r.module->dim(e);
        if (L < 0) {
            if (md) first = "no generators for a nonzero module";
            continue;
        }
        if (rank(r.differential(0, e)) != md) first = "augmentation not onto in degree " + std::to_string(e);
        for (int n = 0; n < L && first.empty(); ++n) {
            const std::size_t dimn = r.levels[n].dim(e);
            const std::size_t ker = dimn - rank(r.differential(n, e));
            const std::size_t img = r.levels[n + 1].dim(e) ? rank(r.differential(n + 1, e)) : 0;
            if (ker != img) first = "level " + std::to_string(n) + " degree " + std::to_string(e);
        }
        if (first.empty() && r.terminated && L >= 0 && r.levels[L].dim(e) &&
            rank(r.differential(L, e)) != r.levels[L].dim(e))
            first = "top level not injective in degree " + std::to_string(e);
    }
    rep.expect(first.empty(), "exact within the bounds", "fails: " + first);

    if (r.minimal && r.algebra->connected()) {
        first.clear();
        for (int n = 1; n <= L && first.empty(); ++n) {
            const auto& prev = r.levels[n - 1];
            for (std::size_t g = 0; g < r.levels[n].rank() && first.empty(); ++g) {
                const int dg = r.levels[n].degrees[g];
                for (std::size_t h = 0; h < prev.rank(); ++h)
                    if (prev.degrees[h] == dg && !r.boundary[n][g][prev.offset(dg, h)].is_zero())
                        first = "level " + std::to_string(n) + " generator " + std::to_string(g);
            }
        }
        rep.expect(first.empty(), "minimal", "a differential entry has degree zero at " + first);
    }

    if (r.action && !r.gen_action.empty()) {
        const auto& h = *r.action->hopf;
        first.clear();
        for (int n = 0; n <= L && first.empty(); ++n) {
            const auto& T = r.gen_action[n];
            const std::size_t rank = r.levels[n].rank();
            Matrix unit(k, rank, rank);
            for (std::size_t c = 0; c < h.n; ++c)
                if (!h.unit[c].is_zero())
                    for (std::size_t i = 0; i < rank; ++i)
                        for (std::size_t j = 0; j < rank; ++j) unit.add_to(i, j, h.unit[c] * T[c].at(i, j));
            if (!(unit == Matrix::identity(k, rank))) first = "unit at level " + std::to_string(n);
            for (std::size_t a = 0; a < h.n && first.empty(); ++a)
                for (std::size_t b = 0; b < h.n && first.empty(); ++b) {
                    Vec ab = h.multiply(h.basis(a), h.basis(b));
                    Matrix lhs(k, rank, rank);
                    for (std::size_t c = 0; c < h.n; ++c)
                        if (!ab[c].is_zero())
                            for (std::size_t i = 0; i < rank; ++i)
                                for (std::size_t j = 0; j < rank; ++j) lhs.add_to(i, j, ab[c] * T[c].at(i, j));
                    if (!(lhs == T[b] * T[a])) first = "action law at level " + std::to_string(n);
                }
        }
        for (int n = 0; n <= L && first.empty(); ++n)
            for (int e = 0; e <= r.bound && first.empty(); ++e) {
                const std::size_t dim = r.levels[n].dim(e);
                for (std::size_t i = 0; i < dim && first.empty(); ++i)
                    for (std::size_t a = 0; a < h.n && first.empty(); ++a) {
                        Vec v = unit_vec(k, dim, i);
                        Vec lhs = r.d(n, e, r.act_h(n, e, a, v));
                        Vec dv = r.d(n, e, v);
                        Vec rhs = n == 0 ? (r.module_action ? r.module_action->act_h(a, e, dv) : lhs)
                                         : r.act_h(n - 1, e, a, dv);
                        if (lhs != rhs) first = "d not H-linear at level " + std::to_string(n);
                    }
            }
        rep.expect(first.empty(), "H-equivariant", first);
    }

    if (r.coaction && !r.gen_coaction.empty()) {
        const auto& h = *r.coaction->hopf;
        first.clear();
        for (int n = 0; n <= L && first.empty(); ++n)
            for (int e = 0; e <= r.bound && first.empty(); ++e) {
                if (n == 0 && !r.module_coaction) break;
                const std::size_t dim = r.levels[n].dim(e), tdim = r.target_dim(n, e);
                for (std::size_t i = 0; i < dim && first.empty(); ++i) {
                    Vec v = unit_vec(k, dim, i);
                    Vec lhs = n == 0 ? r.module_coaction->coact(e, r.d(n, e, v)) : r.coact(n - 1, e, r.d(n, e, v));
                    Vec cv = r.coact(n, e, v);
                    Vec rhs = zero_vec(k, h.n * tdim);
                    for (std::size_t a = 0; a < h.n; ++a) {
                        Vec part(cv.begin() + static_cast<std::ptrdiff_t>(a * dim),
                                 cv.begin() + static_cast<std::ptrdiff_t>((a + 1) * dim));
                        Vec dp = r.d(n, e, part);
                        for (std::size_t z = 0; z < tdim; ++z) rhs[a * tdim + z] = dp[z];
                    }
                    if (lhs != rhs) first = "d not colinear at level " + std::to_string(n);
                }
            }
        rep.expect(first.empty(), "H-colinear", first);
    }

    // Euler identity: sum (-1)^n dim P_n,e = dim M_e.
    const bool connected_minimal = r.minimal && r.algebra->connected();
    int top = r.terminated ? r.bound : (connected_minimal ? std::min(r.bound, r.max_level) : -1);
    first.clear();
    for (int e = 0; e <= top && first.empty(); ++e) {
        long long sum = 0;
        for (int n = 0; n <= L; ++n) sum += (n % 2 ? -1 : 1) * static_cast<long long>(r.levels[n].dim(e));
        if (sum != static_cast<long long>(r.module->dim(e))) first = "degree " + std::to_string(e);
    }
    if (top >= 0)
        rep.expect(first.empty(), "Euler identity through degree " + std::to_string(top), "fails in " + first);
    else
        rep.add("Euler identity", Verdict::inconclusive, "resolution neither terminated nor minimal over a connected algebra");
    return rep;
}

}  // namespace takeuchi
