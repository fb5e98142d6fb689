#include "takeuchi/module.hpp"

namespace takeuchi {

GradedModule::GradedModule(AlgebraPtr r, Side side, int bound, std::vector<std::vector<std::string>> labels,
                           const ActionFn& fn, std::string name)
    : r_(std::move(r)), side_(side), bound_(bound), labels_(std::move(labels)), name_(std::move(name)) {
    if (bound_ < 0) throw ModuleError("negative module bound");
    if (bound_ > r_->bound()) throw ModuleError("module bound exceeds the algebra bound");
    labels_.resize(bound_ + 1);
    table_.resize(bound_ + 1);
    for (int d = 0; d <= bound_; ++d) {
        table_[d].resize(bound_ + 1 - d);
        for (int j = 0; d + j <= bound_; ++j) {
            auto& cell = table_[d][j];
            for (std::size_t m = 0; m < dim(d); ++m)
                for (std::size_t a = 0; a < r_->dim(j); ++a) {
                    Vec v = fn(d, m, j, a);
                    if (v.size() != dim(d + j)) throw ModuleError("module action value has wrong length");
                    for (auto& s : v) s = field().coerce(s);
                    cell.push_back(std::move(v));
                }
        }
    }
}

std::vector<std::size_t> GradedModule::dims() const {
    std::vector<std::size_t> out;
    for (int d = 0; d <= bound_; ++d) out.push_back(dim(d));
    return out;
}

int GradedModule::top_degree() const {
    for (int d = bound_; d >= 0; --d)
        if (dim(d)) return d;
    return -1;
}

const Vec& GradedModule::act(int d, std::size_t m, int j, std::size_t r) const {
    if (d + j > bound_) throw DegreeOverflow("module action beyond the bound");
    return table_[d][j].at(m * r_->dim(j) + r);
}

Vec GradedModule::act(int d, std::span<const Scalar> m, int j, std::span<const Scalar> r) const {
    if (d + j > bound_) throw DegreeOverflow("module action beyond the bound");
    Vec out = zero_vec(field(), dim(d + j));
    const std::size_t dj = r_->dim(j);
    for (std::size_t x = 0; x < m.size(); ++x) {
        if (m[x].is_zero()) continue;
        for (std::size_t a = 0; a < r.size(); ++a)
            if (!r[a].is_zero()) axpy(out, m[x] * r[a], table_[d][j][x * dj + a]);
    }
    return out;
}

void GradedModule::set_action(int d, std::size_t m, int j, std::size_t r, Vec v) {
    if (v.size() != dim(d + j)) throw ModuleError("set_action: wrong length");
    table_.at(d).at(j).at(m * r_->dim(j) + r) = std::move(v);
}

json GradedModule::to_json() const {
    json j;
    j["name"] = name_;
    j["side"] = side_ == Side::left ? "left" : "right";
    j["algebra"] = r_->name();
    j["dims"] = dims();
    return j;
}

Report validate_module(const GradedModule& m) {
    Report rep("validate_module " + m.name());
    const auto& r = *m.algebra();
    const Field& k = m.field();
    const int D = m.bound();
    std::string first;
    for (int d = 0; d <= D && first.empty(); ++d)
        for (std::size_t x = 0; x < m.dim(d) && first.empty(); ++x) {
            Vec e = unit_vec(k, m.dim(d), x);
            if (m.act(d, e, 0, r.unit()) != e) first = m.label(d, x);
        }
    rep.expect(first.empty(), "unit acts as identity", "fails on " + first);

    first.clear();
    std::size_t triples = 0;
    for (int d = 0; d <= D && first.empty(); ++d)
        for (int i = 0; d + i <= D && first.empty(); ++i)
            for (int j = 0; d + i + j <= D && first.empty(); ++j)
                for (std::size_t x = 0; x < m.dim(d) && first.empty(); ++x)
                    for (std::size_t a = 0; a < r.dim(i) && first.empty(); ++a)
                        for (std::size_t b = 0; b < r.dim(j) && first.empty(); ++b) {
                            ++triples;
                            Vec lhs, rhs;
                            if (m.side() == Side::right) {
                                // (x.a).b = x.(ab)
                                lhs = m.act(d + i, m.act(d, x, i, a), j, unit_vec(k, r.dim(j), b));
                                rhs = m.act(d, unit_vec(k, m.dim(d), x), i + j, r.product(i, a, j, b));
                            } else {
                                // a.(b.x) = (ab).x
                                lhs = m.act(d + j, m.act(d, x, j, b), i, unit_vec(k, r.dim(i), a));
                                rhs = m.act(d, unit_vec(k, m.dim(d), x), i + j, r.product(i, a, j, b));
                            }
                            if (lhs != rhs)
                                first = "(" + m.label(d, x) + "," + r.label(i, a) + "," + r.label(j, b) + ")";
                        }
    rep.expect(first.empty(), "module associativity", "fails on " + first);
    rep.data()["triples_checked"] = triples;
    return rep;
}

ModulePtr trivial_module(const AlgebraPtr& r, Side side) {
    if (!r->connected()) throw ModuleError("the trivial module needs a connected algebra");
    std::vector<std::vector<std::string>> labels{{"1"}};
    const Field k = r->field();
    auto fn = [k](int d, std::size_t, int j, std::size_t) -> Vec {
        if (j == 0 && d == 0) return {k.one()};
        return {};
    };
    return std::make_shared<const GradedModule>(r, side, 0, labels, fn, "k");
}

ModulePtr regular_module(const AlgebraPtr& r, Side side) {
    std::vector<std::vector<std::string>> labels;
    for (int d = 0; d <= r->bound(); ++d) labels.push_back(r->labels(d));
    const GradedAlgebra* alg = r.get();
    auto fn = [alg, side](int d, std::size_t m, int j, std::size_t a) -> Vec {
        return side == Side::right ? alg->product(d, m, j, a) : alg->product(j, a, d, m);
    };
    return std::make_shared<const GradedModule>(r, side, r->bound(), labels, fn, r->name());
}

Vec HModule::act_h(std::size_t k, int d, std::span<const Scalar> v) const {
    if (d < 0 || d > module->bound()) return {};
    return mats[k][d].apply(v);
}

Vec HModule::act_h(std::span<const Scalar> h, int d, std::span<const Scalar> v) const {
    Vec out = zero_vec(module->field(), module->dim(d));
    if (d < 0 || d > module->bound()) return out;
    for (std::size_t k = 0; k < h.size(); ++k)
        if (!h[k].is_zero()) axpy(out, h[k], mats[k][d].apply(v));
    return out;
}

Report validate_hmodule(const HModule& hm, const ActionData& aa) {
    Report rep("validate_hmodule " + hm.module->name());
    const auto& m = *hm.module;
    const auto& h = *hm.hopf;
    const auto& r = *m.algebra();
    const Field& k = m.field();
    const std::size_t n = h.n;
    const bool right = m.side() == Side::right;
    std::string first;
    for (int d = 0; d <= m.bound() && first.empty(); ++d)
        for (std::size_t x = 0; x < m.dim(d) && first.empty(); ++x) {
            Vec e = unit_vec(k, m.dim(d), x);
            if (hm.act_h(h.unit, d, e) != e) first = "unit on " + m.label(d, x);
            for (std::size_t p = 0; p < n && first.empty(); ++p)
                for (std::size_t q = 0; q < n && first.empty(); ++q) {
                    Vec pq = h.multiply(h.basis(p), h.basis(q));
                    // right: (m.h_p).h_q = m.(h_p h_q); left: h_p.(h_q.m) = (h_p h_q).m
                    Vec lhs = right ? hm.act_h(q, d, hm.act_h(p, d, e)) : hm.act_h(p, d, hm.act_h(q, d, e));
                    if (lhs != hm.act_h(pq, d, e)) first = h.labels[p] + "," + h.labels[q] + " on " + m.label(d, x);
                }
        }
    rep.expect(first.empty(), "H-action is a module action", "fails at " + first);

    first.clear();
    for (int d = 0; d <= m.bound() && first.empty(); ++d)
        for (int j = 0; d + j <= m.bound() && first.empty(); ++j)
            for (std::size_t x = 0; x < m.dim(d) && first.empty(); ++x)
                for (std::size_t a = 0; a < r.dim(j) && first.empty(); ++a)
                    for (std::size_t p = 0; p < n && first.empty(); ++p) {
                        Vec e = unit_vec(k, m.dim(d), x), ea = unit_vec(k, r.dim(j), a);
                        Vec lhs, rhs = zero_vec(k, m.dim(d + j));
                        const Vec& dp = h.comult[p];
                        if (right) {
                            lhs = m.act(d, hm.act_h(p, d, e), j, ea);
                            for (std::size_t s = 0; s < n; ++s)
                                for (std::size_t t = 0; t < n; ++t)
                                    if (!dp[s * n + t].is_zero())
                                        axpy(rhs, dp[s * n + t], hm.act_h(t, d + j, m.act(d, e, j, aa.act(s, j, ea))));
                        } else {
                            lhs = hm.act_h(p, d + j, m.act(d, e, j, ea));
                            for (std::size_t s = 0; s < n; ++s)
                                for (std::size_t t = 0; t < n; ++t)
                                    if (!dp[s * n + t].is_zero())
                                        axpy(rhs, dp[s * n + t], m.act(d, hm.act_h(t, d, e), j, aa.act(s, j, ea)));
                        }
                        if (lhs != rhs) first = h.labels[p] + " with " + r.label(j, a) + " on " + m.label(d, x);
                    }
    rep.expect(first.empty(), "smash-module compatibility", "fails at " + first);
    return rep;
}

HModule trivial_hmodule(const ModulePtr& m, const HopfPtr& h) {
    HModule hm{m, h, {}};
    hm.mats.assign(h->n, {});
    for (std::size_t k = 0; k < h->n; ++k)
        for (int d = 0; d <= m->bound(); ++d) {
            Matrix s(m->field(), m->dim(d), m->dim(d));
            for (std::size_t i = 0; i < m->dim(d); ++i) s.set(i, i, h->counit[k]);
            hm.mats[k].push_back(std::move(s));
        }
    return hm;
}

HModule regular_hmodule(const ActionData& action, Side side) {
    const auto& h = *action.hopf;
    HModule hm{regular_module(action.algebra, side), action.hopf, {}};
    hm.mats.assign(h.n, {});
    for (std::size_t k = 0; k < h.n; ++k) {
        Vec hk = side == Side::left ? h.basis(k) : h.S_inv(h.basis(k));
        for (int d = 0; d <= action.algebra->bound(); ++d) {
            std::vector<Vec> cols;
            for (std::size_t b = 0; b < action.algebra->dim(d); ++b)
                cols.push_back(action.act(hk, d, unit_vec(h.field, action.algebra->dim(d), b)));
            hm.mats[k].push_back(Matrix::from_columns(h.field, action.algebra->dim(d), cols));
        }
    }
    return hm;
}

Vec HopfModule::coact(int d, std::span<const Scalar> v) const {
    const std::size_t n = hopf->n, dim = module->dim(d);
    Vec out = zero_vec(module->field(), n * dim);
    for (std::size_t i = 0; i < dim; ++i)
        if (!v[i].is_zero()) axpy(out, v[i], coef[d][i]);
    return out;
}

Report validate_hopf_module(const HopfModule& x, const CoactionData& co) {
    Report rep("validate_hopf_module " + x.module->name());
    const auto& m = *x.module;
    const auto& h = *x.hopf;
    const auto& b = *m.algebra();
    const Field& k = m.field();
    const std::size_t n = h.n;
    std::string first;
    for (int d = 0; d <= m.bound() && first.empty(); ++d) {
        const std::size_t dim = m.dim(d);
        for (std::size_t i = 0; i < dim && first.empty(); ++i) {
            const Vec& r = x.coef[d][i];
            Vec left = zero_vec(k, n * n * dim), right = zero_vec(k, n * n * dim), counit = zero_vec(k, dim);
            for (std::size_t p = 0; p < n; ++p)
                for (std::size_t z = 0; z < dim; ++z) {
                    const Scalar& c = r[p * dim + z];
                    if (c.is_zero()) continue;
                    counit[z] += h.counit[p] * c;
                    for (std::size_t s = 0; s < n * n; ++s)
                        if (!h.comult[p][s].is_zero()) left[s * dim + z] += c * h.comult[p][s];
                    const Vec& rz = x.coef[d][z];
                    for (std::size_t q = 0; q < n; ++q)
                        for (std::size_t y = 0; y < dim; ++y)
                            if (!rz[q * dim + y].is_zero()) right[(p * n + q) * dim + y] += c * rz[q * dim + y];
                }
            if (left != right) first = "coassociativity on " + m.label(d, i);
            else if (counit != unit_vec(k, dim, i)) first = "counit on " + m.label(d, i);
        }
    }
    rep.expect(first.empty(), "comodule axioms", "fails: " + first);

    first.clear();
    for (int d = 0; d <= m.bound() && first.empty(); ++d)
        for (int j = 0; d + j <= m.bound() && first.empty(); ++j)
            for (std::size_t i = 0; i < m.dim(d) && first.empty(); ++i)
                for (std::size_t a = 0; a < b.dim(j) && first.empty(); ++a) {
                    Vec lhs = x.coact(d + j, m.act(d, i, j, a));
                    // rho(x) rho(b) for right modules, rho(b) rho(x) for left ones.
                    const std::size_t dd = m.dim(d), dj = b.dim(j), dt = m.dim(d + j);
                    Vec rhs = zero_vec(k, n * dt);
                    const Vec& rx = x.coef[d][i];
                    const Vec& rb = co.coef[j][a];
                    for (std::size_t p = 0; p < n; ++p)
                        for (std::size_t z = 0; z < dd; ++z) {
                            if (rx[p * dd + z].is_zero()) continue;
                            for (std::size_t q = 0; q < n; ++q)
                                for (std::size_t y = 0; y < dj; ++y) {
                                    if (rb[q * dj + y].is_zero()) continue;
                                    Vec hh = m.side() == Side::right ? h.multiply(h.basis(p), h.basis(q))
                                                                     : h.multiply(h.basis(q), h.basis(p));
                                    const Vec& mv = m.act(d, z, j, y);
                                    Scalar c = rx[p * dd + z] * rb[q * dj + y];
                                    for (std::size_t s = 0; s < n; ++s)
                                        if (!hh[s].is_zero())
                                            for (std::size_t t = 0; t < dt; ++t)
                                                if (!mv[t].is_zero()) rhs[s * dt + t] += c * hh[s] * mv[t];
                                }
                        }
                    if (lhs != rhs) first = m.label(d, i) + " with " + b.label(j, a);
                }
    rep.expect(first.empty(), "Hopf-module law", "rho of a product differs at " + first);
    return rep;
}

HopfModule trivial_hopf_module(const ModulePtr& m, const HopfPtr& h) {
    HopfModule x{m, h, {}};
    x.coef.resize(m->bound() + 1);
    for (int d = 0; d <= m->bound(); ++d)
        for (std::size_t i = 0; i < m->dim(d); ++i) {
            Vec v = zero_vec(m->field(), h->n * m->dim(d));
            for (std::size_t r = 0; r < h->n; ++r) v[r * m->dim(d) + i] = h->unit[r];
            x.coef[d].push_back(std::move(v));
        }
    return x;
}

HopfModule regular_hopf_module(const CoactionData& co, Side side) {
    return HopfModule{regular_module(co.algebra, side), co.hopf, co.coef};
}

}  // namespace takeuchi
