#include "takeuchi/hopf.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace takeuchi {

Vec HopfData::multiply(std::span<const Scalar> u, std::span<const Scalar> v) const {
    Vec out = zero_vec(field, n);
    for (std::size_t a = 0; a < n; ++a) {
        if (u[a].is_zero()) continue;
        for (std::size_t b = 0; b < n; ++b)
            if (!v[b].is_zero()) axpy(out, u[a] * v[b], mult[a * n + b]);
    }
    return out;
}

Vec HopfData::coproduct(std::span<const Scalar> u) const {
    Vec out = zero_vec(field, n * n);
    for (std::size_t a = 0; a < n; ++a)
        if (!u[a].is_zero()) axpy(out, u[a], comult[a]);
    return out;
}

bool HopfData::is_grouplike(std::span<const Scalar> g) const {
    if (!eps(g).is_one()) return false;
    Vec d = coproduct(g);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (d[a * n + b] != g[a] * g[b]) return false;
    return true;
}

std::string HopfData::element_string(std::span<const Scalar> u) const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t a = 0; a < n; ++a) {
        if (u[a].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        if (!u[a].is_one()) os << u[a] << "*";
        os << labels[a];
    }
    if (first) os << "0";
    return os.str();
}

json HopfData::to_json() const {
    json j;
    j["name"] = name;
    j["field"] = field.name();
    j["dim"] = n;
    j["basis"] = labels;
    return j;
}

namespace {

std::vector<std::size_t> group_inverses(const std::vector<std::vector<std::size_t>>& t, std::size_t e) {
    std::vector<std::size_t> inv(t.size());
    for (std::size_t g = 0; g < t.size(); ++g)
        for (std::size_t h = 0; h < t.size(); ++h)
            if (t[g][h] == e) inv[g] = h;
    return inv;
}

}  // namespace

std::size_t GroupTable::identity() const {
    for (std::size_t e = 0; e < table.size(); ++e) {
        bool ok = true;
        for (std::size_t g = 0; g < table.size() && ok; ++g) ok = table[e][g] == g && table[g][e] == g;
        if (ok) return e;
    }
    throw HopfError("table has no identity element");
}

GroupTable cyclic_group_table(std::size_t order) {
    GroupTable t;
    t.table.assign(order, std::vector<std::size_t>(order));
    for (std::size_t a = 0; a < order; ++a)
        for (std::size_t b = 0; b < order; ++b) t.table[a][b] = (a + b) % order;
    return t;
}

HopfData group_algebra(const Field& k, const std::vector<std::vector<std::size_t>>& table,
                       std::vector<std::string> labels, std::string name) {
    const std::size_t n = table.size();
    if (n == 0) throw HopfError("empty group table");
    for (const auto& row : table) {
        if (row.size() != n) throw HopfError("group table is not square");
        for (auto v : row)
            if (v >= n) throw HopfError("group table entry out of range");
    }
    GroupTable gt{table};
    std::size_t e = gt.identity();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (table[table[a][b]][c] != table[a][table[b][c]]) throw HopfError("group table is not associative");
    for (std::size_t g = 0; g < n; ++g) {
        bool has_inverse = false;
        for (std::size_t h = 0; h < n; ++h) has_inverse |= table[g][h] == e && table[h][g] == e;
        if (!has_inverse) throw HopfError("group table element " + std::to_string(g) + " has no inverse");
    }
    auto inv = group_inverses(table, e);

    HopfData h;
    h.field = k;
    h.n = n;
    if (labels.empty()) {
        for (std::size_t g = 0; g < n; ++g) labels.push_back(g == e ? std::string("e") : "g" + std::to_string(g));
    }
    h.labels = std::move(labels);
    h.name = name.empty() ? "kG(" + std::to_string(n) + ")" : std::move(name);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) h.mult.push_back(unit_vec(k, n, table[a][b]));
    h.unit = unit_vec(k, n, e);
    for (std::size_t a = 0; a < n; ++a) h.comult.push_back(unit_vec(k, n * n, a * n + a));
    h.counit.assign(n, k.one());
    h.antipode = Matrix(k, n, n);
    for (std::size_t a = 0; a < n; ++a) h.antipode.set(inv[a], a, k.one());
    h.antipode_inv = antipode_inverse(h);
    return h;
}

HopfData cyclic_group_algebra(const Field& k, std::size_t order) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < order; ++i) labels.push_back(i == 0 ? std::string("1") : i == 1 ? "g" : "g^" + std::to_string(i));
    return group_algebra(k, cyclic_group_table(order).table, labels, "kC" + std::to_string(order));
}

HopfData symmetric_group_s3(const Field& k) {
    // Permutations of {0,1,2} in a fixed enumeration; composition (p*q)(i) = p(q(i)).
    std::vector<std::array<int, 3>> perms = {{0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}, {1, 2, 0}, {2, 0, 1}};
    std::vector<std::string> labels = {"e", "(01)", "(12)", "(02)", "(012)", "(021)"};
    std::vector<std::vector<std::size_t>> table(6, std::vector<std::size_t>(6));
    for (std::size_t a = 0; a < 6; ++a)
        for (std::size_t b = 0; b < 6; ++b) {
            std::array<int, 3> c{};
            for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
            for (std::size_t r = 0; r < 6; ++r)
                if (perms[r] == c) table[a][b] = r;
        }
    return group_algebra(k, table, labels, "kS3");
}

HopfData trivial_hopf(const Field& k) {
    return group_algebra(k, {{0}}, {"1"}, "k");
}

std::optional<Matrix> solve_antipode(const HopfData& h) {
    const std::size_t n = h.n;
    const Field& k = h.field;
    // Unknown S[r][c] at index r * n + c; equation for (basis i, output coordinate t):
    // sum_{a,b} Delta(h_i)[a,b] sum_r S[r][a] (h_r h_b)[t] = eps(h_i) unit[t].
    Matrix sys(k, n * n, n * n);
    Vec rhs = zero_vec(k, n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t t = 0; t < n; ++t) rhs[i * n + t] = h.counit[i] * h.unit[t];
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                const Scalar& c = h.comult[i][a * n + b];
                if (c.is_zero()) continue;
                for (std::size_t r = 0; r < n; ++r) {
                    const Vec& prod = h.mult[r * n + b];
                    for (std::size_t t = 0; t < n; ++t)
                        if (!prod[t].is_zero()) sys.add_to(i * n + t, r * n + a, c * prod[t]);
                }
            }
    }
    auto x = solve(sys, rhs);
    if (!x) return std::nullopt;
    Matrix s(k, n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) s.set(r, c, (*x)[r * n + c]);
    return s;
}

HopfData sweedler_hopf(const Field& k) {
    if (k.characteristic() == 2) throw HopfError("Sweedler's Hopf algebra needs characteristic different from 2");
    HopfData h;
    h.field = k;
    h.n = 4;
    h.labels = {"1", "g", "x", "gx"};
    h.name = "Sweedler";
    // Basis element index = a + 2b for g^a x^b.
    auto idx = [](int a, int b) { return static_cast<std::size_t>(a + 2 * b); };
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            int a = i % 2, b = i / 2, c = j % 2, d = j / 2;
            Vec v = zero_vec(k, 4);
            if (b + d < 2) v[idx((a + c) % 2, b + d)] = (b * c) % 2 ? k.make(-1) : k.one();
            h.mult.push_back(v);
        }
    h.unit = unit_vec(k, 4, 0);
    auto t = [&](std::size_t p, std::size_t q) { return p * 4 + q; };
    h.comult.assign(4, zero_vec(k, 16));
    h.comult[0][t(0, 0)] = k.one();
    h.comult[1][t(1, 1)] = k.one();
    h.comult[2][t(1, 2)] = k.one();  // g (x) x
    h.comult[2][t(2, 0)] = k.one();  // x (x) 1
    h.comult[3][t(0, 3)] = k.one();  // 1 (x) gx
    h.comult[3][t(3, 1)] = k.one();  // gx (x) g
    h.counit = {k.one(), k.one(), k.zero(), k.zero()};
    auto s = solve_antipode(h);
    if (!s) throw HopfError("antipode equations inconsistent for Sweedler data");
    h.antipode = *s;
    h.antipode_inv = antipode_inverse(h);
    return h;
}

Matrix antipode_inverse(const HopfData& h) {
    auto inv = inverse(h.antipode);
    if (!inv) throw HopfError("antipode not bijective");
    return *inv;
}

HopfPtr finalize_hopf(HopfData h) {
    h.antipode_inv = antipode_inverse(h);
    return std::make_shared<const HopfData>(std::move(h));
}


Report validate_hopf(const HopfData& h) {
    Report rep("validate_hopf " + h.name);
    const std::size_t n = h.n;
    const Field& k = h.field;
    auto e = [&](std::size_t a) { return h.basis(a); };
    bool sizes = h.mult.size() == n * n && h.comult.size() == n && h.unit.size() == n && h.counit.size() == n &&
                 h.antipode.rows() == n && h.antipode.cols() == n;
    rep.expect(sizes, "tensor shapes", "structure tensors have inconsistent sizes");
    if (!sizes) return rep;

    std::string first;
    for (std::size_t a = 0; a < n && first.empty(); ++a)
        for (std::size_t b = 0; b < n && first.empty(); ++b)
            for (std::size_t c = 0; c < n && first.empty(); ++c)
                if (h.multiply(h.multiply(e(a), e(b)), e(c)) != h.multiply(e(a), h.multiply(e(b), e(c))))
                    first = h.labels[a] + "," + h.labels[b] + "," + h.labels[c];
    rep.expect(first.empty(), "associativity", "fails on (" + first + ")");

    first.clear();
    for (std::size_t a = 0; a < n && first.empty(); ++a)
        if (h.multiply(h.unit, e(a)) != e(a) || h.multiply(e(a), h.unit) != e(a)) first = h.labels[a];
    rep.expect(first.empty(), "unit", "unit law fails on " + first);

    // Coassociativity: (Delta (x) id) Delta = (id (x) Delta) Delta.
    first.clear();
    for (std::size_t a = 0; a < n && first.empty(); ++a) {
        Vec left = zero_vec(k, n * n * n), right = zero_vec(k, n * n * n);
        const Vec& d = h.comult[a];
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = 0; q < n; ++q) {
                if (d[p * n + q].is_zero()) continue;
                const Vec& dp = h.comult[p];
                const Vec& dq = h.comult[q];
                for (std::size_t r = 0; r < n; ++r)
                    for (std::size_t s = 0; s < n; ++s) {
                        left[(r * n + s) * n + q] += d[p * n + q] * dp[r * n + s];
                        right[(p * n + r) * n + s] += d[p * n + q] * dq[r * n + s];
                    }
            }
        if (left != right) first = h.labels[a];
    }
    rep.expect(first.empty(), "coassociativity", "fails on " + first);

    first.clear();
    for (std::size_t a = 0; a < n && first.empty(); ++a) {
        Vec l = zero_vec(k, n), r = zero_vec(k, n);
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = 0; q < n; ++q) {
                const Scalar& c = h.comult[a][p * n + q];
                if (c.is_zero()) continue;
                l[q] += c * h.counit[p];
                r[p] += c * h.counit[q];
            }
        if (l != e(a) || r != e(a)) first = h.labels[a];
    }
    rep.expect(first.empty(), "counit", "counit law fails on " + first);

    // Delta and eps are algebra maps.
    first.clear();
    auto delta_product = [&](const Vec& x, const Vec& y) {
        Vec out = zero_vec(k, n * n);
        for (std::size_t p = 0; p < n * n; ++p) {
            if (x[p].is_zero()) continue;
            for (std::size_t q = 0; q < n * n; ++q) {
                if (y[q].is_zero()) continue;
                Vec l = h.mult[(p / n) * n + q / n], r = h.mult[(p % n) * n + q % n];
                for (std::size_t s = 0; s < n; ++s)
                    if (!l[s].is_zero())
                        for (std::size_t t = 0; t < n; ++t)
                            if (!r[t].is_zero()) out[s * n + t] += x[p] * y[q] * l[s] * r[t];
            }
        }
        return out;
    };
    for (std::size_t a = 0; a < n && first.empty(); ++a)
        for (std::size_t b = 0; b < n && first.empty(); ++b) {
            if (h.coproduct(h.multiply(e(a), e(b))) != delta_product(h.comult[a], h.comult[b]))
                first = "Delta(" + h.labels[a] + h.labels[b] + ")";
            else if (h.eps(h.multiply(e(a), e(b))) != h.counit[a] * h.counit[b])
                first = "eps(" + h.labels[a] + h.labels[b] + ")";
        }
    if (h.coproduct(h.unit) != [&] {
            Vec u = zero_vec(k, n * n);
            for (std::size_t p = 0; p < n; ++p)
                for (std::size_t q = 0; q < n; ++q) u[p * n + q] = h.unit[p] * h.unit[q];
            return u;
        }())
        first = "Delta(1)";
    rep.expect(first.empty(), "bialgebra compatibility", "fails at " + first);

    first.clear();
    for (std::size_t a = 0; a < n && first.empty(); ++a) {
        Vec l = zero_vec(k, n), r = zero_vec(k, n);
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = 0; q < n; ++q) {
                const Scalar& c = h.comult[a][p * n + q];
                if (c.is_zero()) continue;
                axpy(l, c, h.multiply(h.S(e(p)), e(q)));
                axpy(r, c, h.multiply(e(p), h.S(e(q))));
            }
        Vec target = scaled(h.unit, h.counit[a]);
        if (l != target || r != target) first = h.labels[a];
    }
    rep.expect(first.empty(), "antipode", "antipode axiom fails on " + first);

    bool inv_ok = h.antipode_inv.rows() == n && h.antipode * h.antipode_inv == Matrix::identity(k, n);
    rep.expect(inv_ok, "antipode inverse", "S * S^-1 is not the identity");
    return rep;
}

Report validate_character(const Character& c) {
    Report rep("validate_character");
    const auto& h = *c.hopf;
    rep.expect(c(h.unit).is_one(), "unital", "chi(1) != 1");
    bool mult = true;
    for (std::size_t a = 0; a < h.n && mult; ++a)
        for (std::size_t b = 0; b < h.n && mult; ++b)
            mult = c(h.multiply(h.basis(a), h.basis(b))) == c.values[a] * c.values[b];
    rep.expect(mult, "multiplicative", "chi(hh') != chi(h) chi(h')");
    return rep;
}

Vec ActionData::act(std::span<const Scalar> h, int d, std::span<const Scalar> v) const {
    Vec out = zero_vec(algebra->field(), v.size());
    for (std::size_t k = 0; k < h.size(); ++k)
        if (!h[k].is_zero()) axpy(out, h[k], mats[k][d].apply(v));
    return out;
}

Vec CoactionData::coact(int d, std::span<const Scalar> v) const {
    const std::size_t n = hopf->n, dim = algebra->dim(d);
    Vec out = zero_vec(algebra->field(), n * dim);
    for (std::size_t b = 0; b < dim; ++b)
        if (!v[b].is_zero()) axpy(out, v[b], coef[d][b]);
    return out;
}

Vec tensor_product_hb(const HopfData& h, const GradedAlgebra& b, int i, std::span<const Scalar> u, int j,
                      std::span<const Scalar> v) {
    const std::size_t n = h.n, di = b.dim(i), dj = b.dim(j), dk = b.dim(i + j);
    Vec out = zero_vec(b.field(), n * dk);
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t x = 0; x < di; ++x) {
            const Scalar& c1 = u[p * di + x];
            if (c1.is_zero()) continue;
            for (std::size_t q = 0; q < n; ++q)
                for (std::size_t y = 0; y < dj; ++y) {
                    const Scalar& c2 = v[q * dj + y];
                    if (c2.is_zero()) continue;
                    const Vec& hh = h.mult[p * n + q];
                    const Vec& bb = b.product(i, x, j, y);
                    Scalar c = c1 * c2;
                    for (std::size_t r = 0; r < n; ++r) {
                        if (hh[r].is_zero()) continue;
                        for (std::size_t z = 0; z < dk; ++z)
                            if (!bb[z].is_zero()) out[r * dk + z] += c * hh[r] * bb[z];
                    }
                }
        }
    return out;
}

namespace {

std::string word_label(const GradedAlgebra& a, const Word& w) {
    return a.presentation()->word_name(w);
}

}  // namespace

ActionData extend_action(const HopfPtr& hp, const AlgebraPtr& ap, const std::vector<std::vector<Vec>>& images) {
    const auto& h = *hp;
    const auto& a = *ap;
    if (!a.presentation()) throw ActionError("extend_action needs an algebra realized from a presentation");
    if (a.field() != h.field) throw ActionError("field mismatch between Hopf algebra and algebra");
    const auto& p = *a.presentation();
    const std::size_t n = h.n;
    if (images.size() != n) throw ActionError("need generator images for every Hopf basis element");
    for (std::size_t k = 0; k < n; ++k) {
        if (images[k].size() != p.generators.size()) throw ActionError("wrong number of generator images");
        for (std::size_t g = 0; g < p.generators.size(); ++g)
            if (p.generators[g].degree <= a.bound() && images[k][g].size() != a.dim(p.generators[g].degree))
                throw ActionError("generator image of wrong degree (actions must preserve degree)");
    }
    // val[d][word index][k]: h_k acting on the image of the word.
    std::vector<std::vector<std::vector<Vec>>> val(a.bound() + 1);
    for (int d = 0; d <= a.bound(); ++d) {
        const auto& words = a.words(d);
        val[d].resize(words.size());
        for (std::size_t wi = 0; wi < words.size(); ++wi) {
            const Word& w = words[wi];
            auto& out = val[d][wi];
            if (w.empty()) {
                for (std::size_t k = 0; k < n; ++k) out.push_back(scaled(a.unit(), h.counit[k]));
                continue;
            }
            Word prefix(w.begin(), w.end() - 1);
            std::size_t g = w.back();
            int dg = p.generators[g].degree;
            int dp = d - dg;
            std::size_t pi = std::lower_bound(a.words(dp).begin(), a.words(dp).end(), prefix) - a.words(dp).begin();
            for (std::size_t k = 0; k < n; ++k) {
                Vec acc = zero_vec(a.field(), a.dim(d));
                for (std::size_t x = 0; x < n; ++x)
                    for (std::size_t y = 0; y < n; ++y) {
                        const Scalar& c = h.comult[k][x * n + y];
                        if (c.is_zero()) continue;
                        axpy(acc, c, a.multiply(dp, val[dp][pi][x], dg, images[y][g]));
                    }
                out.push_back(std::move(acc));
            }
        }
    }
    ActionData act{hp, ap, {}};
    act.mats.assign(n, {});
    for (std::size_t k = 0; k < n; ++k)
        for (int d = 0; d <= a.bound(); ++d) {
            std::vector<Vec> cols;
            for (std::size_t b = 0; b < a.dim(d); ++b) {
                const Word& bw = a.basis_word(d, b);
                std::size_t wi = std::lower_bound(a.words(d).begin(), a.words(d).end(), bw) - a.words(d).begin();
                cols.push_back(val[d][wi][k]);
            }
            act.mats[k].push_back(Matrix::from_columns(a.field(), a.dim(d), cols));
        }
    // Ideal stability: every word must act as its normal form does.
    for (int d = 0; d <= a.bound(); ++d) {
        const auto& words = a.words(d);
        for (std::size_t wi = 0; wi < words.size(); ++wi) {
            Vec nf = a.normal_form(words[wi]);
            for (std::size_t k = 0; k < n; ++k)
                if (act.mats[k][d].apply(nf) != val[d][wi][k])
                    throw ActionError("ideal not stable: " + h.labels[k] + " acting on the word " +
                                      word_label(a, words[wi]) + " leaves the relation ideal");
        }
    }
    Report rep = validate_action(act);
    if (!rep.ok()) throw ActionError("module axiom failure: " + rep.summary());
    return act;
}

CoactionData extend_coaction(const HopfPtr& hp, const AlgebraPtr& bp, const std::vector<Vec>& images) {
    const auto& h = *hp;
    const auto& b = *bp;
    if (!b.presentation()) throw ActionError("extend_coaction needs an algebra realized from a presentation");
    if (b.field() != h.field) throw ActionError("field mismatch between Hopf algebra and algebra");
    const auto& p = *b.presentation();
    const std::size_t n = h.n;
    if (images.size() != p.generators.size()) throw ActionError("wrong number of generator coaction images");
    for (std::size_t g = 0; g < p.generators.size(); ++g)
        if (p.generators[g].degree <= b.bound() && images[g].size() != n * b.dim(p.generators[g].degree))
            throw ActionError("coaction image of wrong degree");
    std::vector<std::vector<Vec>> val(b.bound() + 1);
    for (int d = 0; d <= b.bound(); ++d) {
        const auto& words = b.words(d);
        for (const Word& w : words) {
            if (w.empty()) {
                Vec u = zero_vec(b.field(), n * b.dim(0));
                for (std::size_t r = 0; r < n; ++r)
                    for (std::size_t z = 0; z < b.dim(0); ++z) u[r * b.dim(0) + z] = h.unit[r] * b.unit()[z];
                val[d].push_back(std::move(u));
                continue;
            }
            Word prefix(w.begin(), w.end() - 1);
            std::size_t g = w.back();
            int dg = p.generators[g].degree, dp = d - dg;
            std::size_t pi = std::lower_bound(b.words(dp).begin(), b.words(dp).end(), prefix) - b.words(dp).begin();
            val[d].push_back(tensor_product_hb(h, b, dp, val[dp][pi], dg, images[g]));
        }
    }
    CoactionData co{hp, bp, {}};
    co.coef.resize(b.bound() + 1);
    for (int d = 0; d <= b.bound(); ++d)
        for (std::size_t i = 0; i < b.dim(d); ++i) {
            const Word& bw = b.basis_word(d, i);
            std::size_t wi = std::lower_bound(b.words(d).begin(), b.words(d).end(), bw) - b.words(d).begin();
            co.coef[d].push_back(val[d][wi]);
        }
    for (int d = 0; d <= b.bound(); ++d) {
        const auto& words = b.words(d);
        for (std::size_t wi = 0; wi < words.size(); ++wi)
            if (co.coact(d, b.normal_form(words[wi])) != val[d][wi])
                throw ActionError("ideal not stable: the coaction on the word " + word_label(b, words[wi]) +
                                  " leaves the relation ideal");
    }
    Report rep = validate_coaction(co);
    if (!rep.ok()) {
        std::string names;
        for (const auto& c : rep.failures()) names += (names.empty() ? "" : ", ") + c.name;
        throw ActionError("coaction invalid (" + names + "): " + rep.summary());
    }
    return co;
}

ActionData trivial_action(const HopfPtr& hp, const AlgebraPtr& ap) {
    ActionData act{hp, ap, {}};
    act.mats.assign(hp->n, {});
    for (std::size_t k = 0; k < hp->n; ++k)
        for (int d = 0; d <= ap->bound(); ++d) {
            Matrix s(ap->field(), ap->dim(d), ap->dim(d));
            for (std::size_t i = 0; i < ap->dim(d); ++i)
                if (!hp->counit[k].is_zero()) s.set(i, i, hp->counit[k]);
            act.mats[k].push_back(s);
        }
    return act;
}

CoactionData trivial_coaction(const HopfPtr& hp, const AlgebraPtr& bp) {
    CoactionData co{hp, bp, {}};
    const std::size_t n = hp->n;
    co.coef.resize(bp->bound() + 1);
    for (int d = 0; d <= bp->bound(); ++d)
        for (std::size_t i = 0; i < bp->dim(d); ++i) {
            Vec v = zero_vec(bp->field(), n * bp->dim(d));
            for (std::size_t r = 0; r < n; ++r) v[r * bp->dim(d) + i] = hp->unit[r];
            co.coef[d].push_back(std::move(v));
        }
    return co;
}

Report validate_action(const ActionData& act) {
    const auto& h = *act.hopf;
    const auto& a = *act.algebra;
    const Field& k = a.field();
    const std::size_t n = h.n;
    Report rep("validate_action");
    std::string first;
    // Unit acts trivially.
    for (int d = 0; d <= a.bound() && first.empty(); ++d)
        for (std::size_t b = 0; b < a.dim(d) && first.empty(); ++b) {
            Vec e = unit_vec(k, a.dim(d), b);
            if (act.act(h.unit, d, e) != e) first = a.label(d, b);
        }
    rep.expect(first.empty(), "unit acts as identity", "fails on " + first);

    first.clear();
    for (std::size_t x = 0; x < n && first.empty(); ++x)
        for (std::size_t y = 0; y < n && first.empty(); ++y) {
            Vec hy = h.multiply(h.basis(x), h.basis(y));
            for (int d = 0; d <= a.bound() && first.empty(); ++d)
                for (std::size_t b = 0; b < a.dim(d) && first.empty(); ++b) {
                    Vec e = unit_vec(k, a.dim(d), b);
                    if (act.act(hy, d, e) != act.act(x, d, act.act(y, d, e)))
                        first = "(" + h.labels[x] + h.labels[y] + ") on " + a.label(d, b);
                }
        }
    rep.expect(first.empty(), "action associativity", "fails at " + first);

    first.clear();
    for (std::size_t x = 0; x < n && first.empty(); ++x)
        if (act.act(x, 0, a.unit()) != scaled(a.unit(), h.counit[x])) first = h.labels[x];
    rep.expect(first.empty(), "h acts on 1 by eps(h)", "fails for " + first);

    first.clear();
    for (std::size_t x = 0; x < n && first.empty(); ++x)
        for (int i = 0; i <= a.bound() && first.empty(); ++i)
            for (int j = 0; i + j <= a.bound() && first.empty(); ++j)
                for (std::size_t p = 0; p < a.dim(i) && first.empty(); ++p)
                    for (std::size_t q = 0; q < a.dim(j) && first.empty(); ++q) {
                        Vec lhs = act.act(x, i + j, a.product(i, p, j, q));
                        Vec rhs = zero_vec(k, a.dim(i + j));
                        for (std::size_t s = 0; s < n; ++s)
                            for (std::size_t t = 0; t < n; ++t) {
                                const Scalar& c = h.comult[x][s * n + t];
                                if (c.is_zero()) continue;
                                axpy(rhs, c,
                                     a.multiply(i, act.act(s, i, unit_vec(k, a.dim(i), p)), j,
                                                act.act(t, j, unit_vec(k, a.dim(j), q))));
                            }
                        if (lhs != rhs) first = h.labels[x] + " on " + a.label(i, p) + "*" + a.label(j, q);
                    }
    rep.expect(first.empty(), "module-algebra law", "fails for " + first);
    return rep;
}

Report validate_coaction(const CoactionData& co) {
    const auto& h = *co.hopf;
    const auto& b = *co.algebra;
    const Field& k = b.field();
    const std::size_t n = h.n;
    Report rep("validate_coaction");
    std::string first;
    for (int d = 0; d <= b.bound() && first.empty(); ++d) {
        const std::size_t dim = b.dim(d);
        for (std::size_t i = 0; i < dim && first.empty(); ++i) {
            const Vec& r = co.coef[d][i];
            // (Delta (x) id) rho versus (id (x) rho) rho, indices (p, q, z).
            Vec left = zero_vec(k, n * n * dim), right = zero_vec(k, n * n * dim);
            for (std::size_t p = 0; p < n; ++p)
                for (std::size_t z = 0; z < dim; ++z) {
                    const Scalar& c = r[p * dim + z];
                    if (c.is_zero()) continue;
                    for (std::size_t s = 0; s < n * n; ++s)
                        if (!h.comult[p][s].is_zero()) left[s * dim + z] += c * h.comult[p][s];
                    const Vec& rz = co.coef[d][z];
                    for (std::size_t q = 0; q < n; ++q)
                        for (std::size_t y = 0; y < dim; ++y)
                            if (!rz[q * dim + y].is_zero()) right[(p * n + q) * dim + y] += c * rz[q * dim + y];
                }
            if (left != right) first = b.label(d, i);
        }
    }
    rep.expect(first.empty(), "coassociativity", "fails on " + first);

    first.clear();
    for (int d = 0; d <= b.bound() && first.empty(); ++d) {
        const std::size_t dim = b.dim(d);
        for (std::size_t i = 0; i < dim && first.empty(); ++i) {
            Vec v = zero_vec(k, dim);
            for (std::size_t p = 0; p < n; ++p)
                for (std::size_t z = 0; z < dim; ++z) v[z] += h.counit[p] * co.coef[d][i][p * dim + z];
            if (v != unit_vec(k, dim, i)) first = b.label(d, i);
        }
    }
    rep.expect(first.empty(), "counit law", "(eps (x) id) rho differs from id on " + first);

    first.clear();
    for (int i = 0; i <= b.bound() && first.empty(); ++i)
        for (int j = 0; i + j <= b.bound() && first.empty(); ++j)
            for (std::size_t p = 0; p < b.dim(i) && first.empty(); ++p)
                for (std::size_t q = 0; q < b.dim(j) && first.empty(); ++q) {
                    Vec lhs = co.coact(i + j, b.product(i, p, j, q));
                    Vec rhs = tensor_product_hb(h, b, i, co.coef[i][p], j, co.coef[j][q]);
                    if (lhs != rhs) first = b.label(i, p) + "*" + b.label(j, q);
                }
    {
        Vec u = zero_vec(k, n * b.dim(0));
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t z = 0; z < b.dim(0); ++z) u[r * b.dim(0) + z] = h.unit[r] * b.unit()[z];
        if (first.empty() && co.coact(0, b.unit()) != u) first = "unit";
    }
    rep.expect(first.empty(), "algebra map", "rho(bb') != rho(b)rho(b') at " + first);
    return rep;
}

AlgebraPtr hopf_as_algebra(const HopfPtr& hp, int bound) {
    const auto& h = *hp;
    std::vector<std::vector<std::string>> labels(bound + 1);
    labels[0] = h.labels;
    auto prod = [&](int i, std::size_t a, int j, std::size_t b) -> Vec {
        if (i == 0 && j == 0) return h.mult[a * h.n + b];
        return {};
    };
    return std::make_shared<const GradedAlgebra>(h.field, bound, labels, h.unit, prod, h.name);
}

CoactionData regular_coaction(const HopfPtr& hp, const AlgebraPtr& bp) {
    CoactionData co{hp, bp, {}};
    co.coef.resize(bp->bound() + 1);
    co.coef[0] = hp->comult;
    return co;
}

std::vector<std::vector<Scalar>> cyclic_bicharacter(const Field& k, std::size_t g_order, std::size_t l_order,
                                                    const Scalar& value) {
    std::vector<std::vector<Scalar>> t(g_order, std::vector<Scalar>(l_order));
    Scalar v = k.coerce(value);
    for (std::size_t g = 0; g < g_order; ++g)
        for (std::size_t l = 0; l < l_order; ++l) {
            Scalar p = k.one();
            for (std::size_t e = 0; e < g * l; ++e) p *= v;
            t[g][l] = p;
        }
    return t;
}

Report validate_bicharacter(const GroupTable& g, const GroupTable& l, const std::vector<std::vector<Scalar>>& t) {
    Report rep("validate_bicharacter");
    bool shape = t.size() == g.order();
    for (const auto& row : t) shape = shape && row.size() == l.order();
    rep.expect(shape, "shape", "t must be |G| x |L|");
    if (!shape) return rep;
    bool nonzero = true, left = true, right = true;
    for (std::size_t a = 0; a < g.order(); ++a)
        for (std::size_t x = 0; x < l.order(); ++x) {
            nonzero = nonzero && !t[a][x].is_zero();
            for (std::size_t b = 0; b < g.order(); ++b) left = left && t[g.table[a][b]][x] == t[a][x] * t[b][x];
            for (std::size_t y = 0; y < l.order(); ++y) right = right && t[a][l.table[x][y]] == t[a][x] * t[a][y];
        }
    rep.expect(nonzero, "values invertible", "t takes the value 0");
    rep.expect(left, "multiplicative in G", "t(gg', l) != t(g,l) t(g',l)");
    rep.expect(right, "multiplicative in L", "t(g, ll') != t(g,l) t(g,l')");
    return rep;
}

ActionData bicharacter_action(const HopfPtr& hp, const AlgebraPtr& ap, const GroupTable& g, const GroupTable& l,
                              const std::vector<std::vector<Scalar>>& t, const std::vector<std::size_t>& gen_degrees) {
    Report rep = validate_bicharacter(g, l, t);
    if (!rep.ok()) throw ActionError("t not a bicharacter: " + rep.summary());
    if (hp->n != l.order()) throw ActionError("Hopf algebra must be the group algebra of L");
    const auto& a = *ap;
    const auto& p = *a.presentation();
    if (gen_degrees.size() != p.generators.size()) throw ActionError("need a G-degree for every generator");
    std::vector<std::vector<Vec>> images(hp->n);
    for (std::size_t x = 0; x < hp->n; ++x)
        for (std::size_t gi = 0; gi < p.generators.size(); ++gi)
            images[x].push_back(scaled(a.normal_form(Word{gi}), a.field().coerce(t.at(gen_degrees[gi]).at(x))));
    return extend_action(hp, ap, images);
}

CoactionData bicharacter_coaction(const HopfPtr& hp, const AlgebraPtr& bp, const std::vector<std::size_t>& gen_degrees) {
    const auto& b = *bp;
    const auto& p = *b.presentation();
    if (gen_degrees.size() != p.generators.size()) throw ActionError("need an L-degree for every generator");
    std::vector<Vec> images;
    for (std::size_t gi = 0; gi < p.generators.size(); ++gi) {
        int d = p.generators[gi].degree;
        Vec nf = b.normal_form(Word{gi});
        Vec v = zero_vec(b.field(), hp->n * b.dim(d));
        for (std::size_t z = 0; z < nf.size(); ++z) v[gen_degrees[gi] * b.dim(d) + z] = nf[z];
        images.push_back(std::move(v));
    }
    return extend_coaction(hp, bp, images);
}

Closure closure(const Field& k, std::size_t dim, std::size_t n, const std::vector<Vec>& seeds,
                const std::function<std::vector<Vec>(const Vec&)>& components) {
    Closure out;
    EchelonBasis span(k, dim);
    std::vector<Vec> queue;
    for (const auto& s : seeds)
        if (span.add(s)) queue.push_back(s);
    for (std::size_t i = 0; i < queue.size(); ++i) {
        for (const auto& c : components(queue[i]))
            if (span.add(c)) queue.push_back(c);
    }
    out.basis = queue;
    Matrix basis_cols = Matrix::from_columns(k, dim, out.basis);
    LinearSolver solver(basis_cols);
    out.coeffs.assign(n, Matrix(k, out.basis.size(), out.basis.size()));
    for (std::size_t i = 0; i < out.basis.size(); ++i) {
        auto comps = components(out.basis[i]);
        for (std::size_t x = 0; x < n; ++x) {
            auto c = solver.solve(comps[x]);
            if (!c) throw HopfError("closure is not stable");
            for (std::size_t j = 0; j < out.basis.size(); ++j)
                if (!(*c)[j].is_zero()) out.coeffs[x].set(j, i, (*c)[j]);
        }
    }
    return out;
}

Closure comodule_closure(const HopfData& h, std::size_t dim, const std::vector<Vec>& seeds,
                         const std::function<std::vector<Vec>(const Vec&)>& rho_components) {
    return closure(h.field, dim, h.n, seeds, rho_components);
}

}  // namespace takeuchi
