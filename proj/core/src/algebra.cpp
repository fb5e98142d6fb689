#include "takeuchi/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace takeuchi {

json to_json(std::span<const Scalar> v) {
    json out = json::array();
    for (const auto& s : v) out.push_back(s.to_string());
    return out;
}

json to_json(const Matrix& m) {
    json out = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).to_string());
        out.push_back(std::move(row));
    }
    return out;
}


std::size_t Presentation::generator_index(const std::string& n) const {
    for (std::size_t i = 0; i < generators.size(); ++i)
        if (generators[i].name == n) return i;
    throw AlgebraError("unknown generator '" + n + "'");
}

int Presentation::word_degree(const Word& w) const {
    int d = 0;
    for (auto g : w) d += generators.at(g).degree;
    return d;
}

std::string Presentation::word_name(const Word& w) const {
    if (w.empty()) return "1";
    bool single = std::all_of(generators.begin(), generators.end(), [](const Generator& g) { return g.name.size() == 1; });
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i && !single) out += '*';
        out += generators.at(w[i]).name;
    }
    return out;
}

bool GradedElement::is_zero() const {
    return std::all_of(parts.begin(), parts.end(), [](const auto& kv) { return takeuchi::is_zero(kv.second); });
}

Vec GradedElement::component(int d) const {
    auto it = parts.find(d);
    if (it != parts.end()) return it->second;
    return zero_vec(algebra->field(), algebra->dim(d));
}

bool operator==(const GradedElement& a, const GradedElement& b) {
    std::set<int> degrees;
    for (const auto& kv : a.parts) degrees.insert(kv.first);
    for (const auto& kv : b.parts) degrees.insert(kv.first);
    for (int d : degrees) {
        Vec x = a.component(d), y = b.component(d);
        for (std::size_t i = 0; i < x.size(); ++i)
            if (x[i] != y[i]) return false;
    }
    return true;
}

std::vector<Word> enumerate_words(const std::vector<Generator>& gens, int degree) {
    std::vector<Word> out;
    if (degree == 0) {
        out.emplace_back();
        return out;
    }
    Word current;
    std::function<void(int)> rec = [&](int remaining) {
        if (remaining == 0) {
            out.push_back(current);
            return;
        }
        for (std::size_t g = 0; g < gens.size(); ++g) {
            if (gens[g].degree > remaining) continue;
            current.push_back(g);
            rec(remaining - gens[g].degree);
            current.pop_back();
        }
    };
    rec(degree);
    std::sort(out.begin(), out.end());
    return out;
}

GradedAlgebra::GradedAlgebra(Field k, int bound, std::vector<std::vector<std::string>> labels, Vec unit,
                             const ProductFn& product, std::string name)
    : field_(k), bound_(bound), labels_(std::move(labels)), unit_(std::move(unit)), name_(std::move(name)) {
    if (bound_ < 0) throw AlgebraError("negative truncation bound");
    if (labels_.size() != static_cast<std::size_t>(bound_) + 1)
        throw AlgebraError("expected a basis for every degree 0.." + std::to_string(bound_));
    if (unit_.size() != labels_[0].size()) throw AlgebraError("unit has wrong length");
    for (auto& s : unit_) s = field_.coerce(s);
    table_.resize(bound_ + 1);
    for (int i = 0; i <= bound_; ++i) {
        table_[i].resize(bound_ + 1 - i);
        for (int j = 0; i + j <= bound_; ++j) {
            auto& cell = table_[i][j];
            cell.reserve(dim(i) * dim(j));
            for (std::size_t a = 0; a < dim(i); ++a)
                for (std::size_t b = 0; b < dim(j); ++b) {
                    Vec v = product(i, a, j, b);
                    if (v.size() != dim(i + j)) throw AlgebraError("structure constant has wrong length");
                    for (auto& s : v) s = field_.coerce(s);
                    cell.push_back(std::move(v));
                }
        }
    }
    compute_default_generators();
}

std::size_t GradedAlgebra::dim(int d) const {
    if (d < 0 || d > bound_) throw DegreeOverflow("degree " + std::to_string(d) + " outside 0.." + std::to_string(bound_));
    return labels_[d].size();
}

std::vector<std::size_t> GradedAlgebra::dims() const {
    std::vector<std::size_t> out;
    for (int d = 0; d <= bound_; ++d) out.push_back(dim(d));
    return out;
}

const Vec& GradedAlgebra::product(int i, std::size_t a, int j, std::size_t b) const {
    if (i < 0 || j < 0 || i + j > bound_)
        throw DegreeOverflow("product of degrees " + std::to_string(i) + " and " + std::to_string(j) +
                             " exceeds bound " + std::to_string(bound_));
    return table_[i][j].at(a * dim(j) + b);
}

Vec GradedAlgebra::multiply(int i, std::span<const Scalar> u, int j, std::span<const Scalar> v) const {
    if (u.size() != dim(i) || v.size() != dim(j)) throw AlgebraError("multiply: coordinate length mismatch");
    Vec out = zero_vec(field_, dim(i + j));
    for (std::size_t a = 0; a < u.size(); ++a) {
        if (u[a].is_zero()) continue;
        for (std::size_t b = 0; b < v.size(); ++b) {
            if (v[b].is_zero()) continue;
            axpy(out, u[a] * v[b], table_[i][j][a * dim(j) + b]);
        }
    }
    return out;
}

GradedElement GradedAlgebra::multiply(const GradedElement& u, const GradedElement& v) const {
    GradedElement out{u.algebra, {}};
    for (const auto& [i, x] : u.parts) {
        if (takeuchi::is_zero(x)) continue;
        for (const auto& [j, y] : v.parts) {
            if (takeuchi::is_zero(y)) continue;
            if (i + j > bound_)
                throw DegreeOverflow("product lands in degree " + std::to_string(i + j) + " beyond bound " +
                                     std::to_string(bound_));
            Vec p = multiply(i, x, j, y);
            auto it = out.parts.find(i + j);
            if (it == out.parts.end()) {
                out.parts.emplace(i + j, std::move(p));
            } else {
                axpy(it->second, field_.one(), p);
            }
        }
    }
    return out;
}

void GradedAlgebra::compute_default_generators() {
    generators_.clear();
    for (int d = 1; d <= bound_; ++d) {
        EchelonBasis span(field_, dim(d));
        for (int i = 1; i < d; ++i)
            for (const auto& v : table_[i][d - i]) span.add(v);
        for (std::size_t b = 0; b < dim(d); ++b) {
            Vec e = unit_vec(field_, dim(d), b);
            if (span.add(e)) generators_.push_back(Gen{d, e, labels_[d][b]});
        }
    }
}

bool GradedAlgebra::generated_in_degree_one() const {
    return std::all_of(generators_.begin(), generators_.end(), [](const Gen& g) { return g.degree == 1; });
}

const std::vector<Word>& GradedAlgebra::words(int d) const {
    if (!presentation_) throw AlgebraError("algebra was not realized from a presentation");
    return word_data_.at(d).words;
}

Vec GradedAlgebra::normal_form(const Word& w) const {
    if (!presentation_) throw AlgebraError("algebra was not realized from a presentation");
    int d = presentation_->word_degree(w);
    if (d > bound_) throw DegreeOverflow("word degree " + std::to_string(d) + " beyond bound");
    const auto& wd = word_data_[d];
    return wd.normal_forms.at(wd.index.at(w));
}

const Word& GradedAlgebra::basis_word(int d, std::size_t i) const {
    if (!presentation_) throw AlgebraError("algebra was not realized from a presentation");
    const auto& wd = word_data_.at(d);
    return wd.words.at(wd.basis.at(i));
}

void GradedAlgebra::set_product(int i, std::size_t a, int j, std::size_t b, Vec value) {
    if (value.size() != dim(i + j)) throw AlgebraError("set_product: wrong length");
    table_.at(i).at(j).at(a * dim(j) + b) = std::move(value);
}

Matrix GradedAlgebra::multiplication_matrix(int i, int j) const {
    std::vector<Vec> cols;
    for (std::size_t a = 0; a < dim(i); ++a)
        for (std::size_t b = 0; b < dim(j); ++b) cols.push_back(product(i, a, j, b));
    return Matrix::from_columns(field_, dim(i + j), cols);
}

GradedElement GradedAlgebra::basis_element(int d, std::size_t i) const {
    GradedElement e;
    e.parts.emplace(d, unit_vec(field_, dim(d), i));
    return e;
}

GradedElement GradedAlgebra::one() const {
    GradedElement e;
    e.parts.emplace(0, unit_);
    return e;
}

json GradedAlgebra::to_json() const {
    json j;
    j["name"] = name_;
    j["field"] = field_.name();
    j["bound"] = bound_;
    j["dims"] = dims();
    j["basis"] = labels_;
    json gens = json::array();
    for (const auto& g : generators_) gens.push_back({{"name", g.name}, {"degree", g.degree}});
    j["generators"] = std::move(gens);
    return j;
}

GradedAlgebra realize(const Presentation& p) {
    const Field& k = p.field;
    if (p.bound < 1) throw AlgebraError("truncation bound must be positive");
    std::set<std::string> names;
    for (const auto& g : p.generators) {
        if (g.degree <= 0) throw AlgebraError("generator '" + g.name + "' must have positive degree");
        if (!names.insert(g.name).second) throw AlgebraError("duplicate generator name '" + g.name + "'");
    }
    std::vector<std::vector<Polynomial>> rel_by_degree(p.bound + 1);
    for (std::size_t r = 0; r < p.relations.size(); ++r) {
        const auto& rel = p.relations[r];
        int deg = -1;
        for (const auto& t : rel) {
            for (auto g : t.word)
                if (g >= p.generators.size()) throw AlgebraError("relation uses an unknown generator index");
            int d = p.word_degree(t.word);
            if (deg >= 0 && d != deg) throw AlgebraError("relation " + std::to_string(r) + " is not homogeneous");
            deg = d;
        }
        if (deg < 0) continue;
        if (deg == 0) throw AlgebraError("relation " + std::to_string(r) + " has degree 0");
        if (deg > p.bound)
            throw AlgebraError("truncation bound " + std::to_string(p.bound) + " is below relation degree " +
                               std::to_string(deg));
        rel_by_degree[deg].push_back(rel);
    }

    std::vector<GradedAlgebra::WordData> data(p.bound + 1);
    std::vector<std::vector<Vec>> ideal(p.bound + 1);
    std::vector<std::vector<std::size_t>> basis_words(p.bound + 1);
    for (int d = 0; d <= p.bound; ++d) {
        auto& wd = data[d];
        wd.words = enumerate_words(p.generators, d);
        for (std::size_t i = 0; i < wd.words.size(); ++i) wd.index.emplace(wd.words[i], i);
        const std::size_t n = wd.words.size();

        std::vector<Vec> rows;
        for (std::size_t g = 0; g < p.generators.size(); ++g) {
            int dg = p.generators[g].degree;
            if (dg >= d) continue;
            const auto& lower = data[d - dg];
            for (const auto& row : ideal[d - dg]) {
                Vec right = zero_vec(k, n), left = zero_vec(k, n);
                for (std::size_t w = 0; w < row.size(); ++w) {
                    if (row[w].is_zero()) continue;
                    Word r = lower.words[w];
                    r.push_back(g);
                    right[wd.index.at(r)] += row[w];
                    Word l{g};
                    l.insert(l.end(), lower.words[w].begin(), lower.words[w].end());
                    left[wd.index.at(l)] += row[w];
                }
                rows.push_back(std::move(right));
                rows.push_back(std::move(left));
            }
        }
        for (const auto& rel : rel_by_degree[d]) {
            Vec v = zero_vec(k, n);
            for (const auto& t : rel) v[wd.index.at(t.word)] += k.coerce(t.coeff);
            rows.push_back(std::move(v));
        }
        // Columns in descending word order so that pivots are leading words.
        Matrix m(k, rows.size(), n);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            Matrix::SparseRow sr;
            for (std::size_t w = 0; w < n; ++w)
                if (!rows[r][w].is_zero()) sr.emplace_back(n - 1 - w, rows[r][w]);
            m.set_row(r, std::move(sr));
        }
        auto red = rref(m);
        std::vector<bool> leading(n, false);
        for (std::size_t i = 0; i < red.rank; ++i) {
            leading[n - 1 - red.pivots[i]] = true;
            Vec v = zero_vec(k, n);
            for (const auto& [c, s] : red.reduced.row(i)) v[n - 1 - c] = s;
            ideal[d].push_back(std::move(v));
        }
        std::vector<std::size_t> position(n, 0);
        for (std::size_t w = 0; w < n; ++w)
            if (!leading[w]) {
                position[w] = basis_words[d].size();
                basis_words[d].push_back(w);
            }
        const std::size_t dim = basis_words[d].size();
        wd.normal_forms.assign(n, zero_vec(k, dim));
        for (std::size_t w = 0; w < n; ++w)
            if (!leading[w]) wd.normal_forms[w][position[w]] = k.one();
        for (std::size_t i = 0; i < red.rank; ++i) {
            std::size_t lead = n - 1 - red.pivots[i];
            for (const auto& [c, s] : red.reduced.row(i)) {
                std::size_t w = n - 1 - c;
                if (w != lead) wd.normal_forms[lead][position[w]] = -s;
            }
        }
    }

    std::vector<std::vector<std::string>> labels(p.bound + 1);
    for (int d = 0; d <= p.bound; ++d)
        for (auto w : basis_words[d]) labels[d].push_back(p.word_name(data[d].words[w]));
    Vec unit{k.one()};
    auto product = [&](int i, std::size_t a, int j, std::size_t b) {
        Word w = data[i].words[basis_words[i][a]];
        const Word& v = data[j].words[basis_words[j][b]];
        w.insert(w.end(), v.begin(), v.end());
        const auto& wd = data[i + j];
        return wd.normal_forms[wd.index.at(w)];
    };
    GradedAlgebra alg(k, p.bound, std::move(labels), std::move(unit), product, p.name);
    std::vector<GradedAlgebra::Gen> gens;
    for (std::size_t g = 0; g < p.generators.size(); ++g) {
        int dg = p.generators[g].degree;
        if (dg > p.bound) continue;
        Vec nf = data[dg].normal_forms[data[dg].index.at(Word{g})];
        if (takeuchi::is_zero(nf)) continue;
        gens.push_back(GradedAlgebra::Gen{dg, std::move(nf), p.generators[g].name});
    }
    alg.set_generators(std::move(gens));
    for (int d = 0; d <= p.bound; ++d) data[d].basis = basis_words[d];
    alg.presentation_ = p;
    alg.word_data_ = std::move(data);
    return alg;
}

AlgebraPtr realize_shared(const Presentation& p) { return std::make_shared<const GradedAlgebra>(realize(p)); }

namespace {

std::string vec_string(const Vec& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ")";
    return os.str();
}

// Product of a word evaluated through the multiplication table only.
Vec evaluate_word(const GradedAlgebra& alg, const Presentation& p, const Word& w) {
    int deg = 0;
    Vec acc = alg.unit();
    for (auto g : w) {
        int dg = p.generators[g].degree;
        Vec gen = alg.normal_form(Word{g});
        acc = alg.multiply(deg, acc, dg, gen);
        deg += dg;
    }
    return acc;
}

}  // namespace

Report validate_algebra(const GradedAlgebra& alg) {
    Report rep("validate_algebra " + alg.name());
    const Field& k = alg.field();
    const int D = alg.bound();
    constexpr std::size_t max_messages = 8;

    std::size_t unit_failures = 0;
    for (int d = 0; d <= D; ++d)
        for (std::size_t b = 0; b < alg.dim(d); ++b) {
            Vec e = unit_vec(k, alg.dim(d), b);
            if (alg.multiply(0, alg.unit(), d, e) != e || alg.multiply(d, e, 0, alg.unit()) != e) {
                if (unit_failures++ < max_messages)
                    rep.fail("unit law", "unit does not act as identity on " + alg.label(d, b));
            }
        }
    if (unit_failures == 0) rep.pass("unit law");

    std::size_t assoc_failures = 0, triples = 0;
    for (int i = 0; i <= D; ++i)
        for (int j = 0; i + j <= D; ++j)
            for (int l = 0; i + j + l <= D; ++l)
                for (std::size_t a = 0; a < alg.dim(i); ++a)
                    for (std::size_t b = 0; b < alg.dim(j); ++b) {
                        const Vec& ab = alg.product(i, a, j, b);
                        for (std::size_t c = 0; c < alg.dim(l); ++c) {
                            ++triples;
                            Vec left = alg.multiply(i + j, ab, l, unit_vec(k, alg.dim(l), c));
                            Vec right = alg.multiply(i, unit_vec(k, alg.dim(i), a), j + l, alg.product(j, b, l, c));
                            if (left != right && assoc_failures++ < max_messages)
                                rep.fail("associativity", "(" + alg.label(i, a) + "," + alg.label(j, b) + "," +
                                                              alg.label(l, c) + "): " + vec_string(left) +
                                                              " != " + vec_string(right));
                        }
                    }
    if (assoc_failures == 0) rep.pass("associativity", std::to_string(triples) + " basis triples");

    if (const auto& p = alg.presentation()) {
        std::size_t bad = 0;
        for (std::size_t r = 0; r < p->relations.size(); ++r) {
            const auto& rel = p->relations[r];
            if (rel.empty()) continue;
            int d = p->word_degree(rel.front().word);
            Vec acc = zero_vec(k, alg.dim(d));
            for (const auto& t : rel) axpy(acc, k.coerce(t.coeff), evaluate_word(alg, *p, t.word));
            if (!is_zero(acc) && bad++ < max_messages)
                rep.fail("relations vanish", "relation " + std::to_string(r) + " evaluates to " + vec_string(acc));
        }
        if (bad == 0) rep.pass("relations vanish");
    }
    rep.data()["associativity_failures"] = assoc_failures;
    rep.data()["triples_checked"] = triples;
    return rep;
}

GradedAlgebra opposite(const GradedAlgebra& alg) {
    std::vector<std::vector<std::string>> labels;
    for (int d = 0; d <= alg.bound(); ++d) labels.push_back(alg.labels(d));
    GradedAlgebra op(
        alg.field(), alg.bound(), std::move(labels), alg.unit(),
        [&](int i, std::size_t a, int j, std::size_t b) { return alg.product(j, b, i, a); }, alg.name() + "^op");
    op.set_generators(alg.generators());
    return op;
}

}  // namespace takeuchi

namespace takeuchi {

namespace {

struct PolyParser {
    const std::string& s;
    const Presentation& p;
    std::size_t pos = 0;

    [[noreturn]] void error(const std::string& what) const {
        throw AlgebraError("cannot parse polynomial '" + s + "' at offset " + std::to_string(pos) + ": " + what);
    }
    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool at_end() {
        skip();
        return pos >= s.size();
    }
    std::optional<BigInt> number() {
        skip();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) return std::nullopt;
        return BigInt(s.substr(start, pos - start));
    }
    std::optional<std::size_t> generator() {
        skip();
        std::optional<std::size_t> best;
        std::size_t best_len = 0;
        for (std::size_t g = 0; g < p.generators.size(); ++g) {
            const auto& n = p.generators[g].name;
            if (n.size() > best_len && s.compare(pos, n.size(), n) == 0) {
                best = g;
                best_len = n.size();
            }
        }
        if (best) pos += best_len;
        return best;
    }
    Term term(bool negative) {
        Rational coeff = negative ? -1 : 1;
        if (auto num = number()) {
            Rational c(*num);
            skip();
            if (pos < s.size() && s[pos] == '/') {
                ++pos;
                auto den = number();
                if (!den || *den == 0) error("bad denominator");
                c /= Rational(*den);
            }
            coeff *= c;
            skip();
            if (pos < s.size() && s[pos] == '*') ++pos;
        }
        Word w;
        while (true) {
            auto g = generator();
            if (!g) break;
            int power = 1;
            skip();
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                auto e = number();
                if (!e) error("missing exponent");
                power = static_cast<int>(*e);
            }
            for (int i = 0; i < power; ++i) w.push_back(*g);
            skip();
            if (pos < s.size() && s[pos] == '*') ++pos;
        }
        return Term{p.field.coerce(Scalar(coeff)), w};
    }
    Polynomial parse() {
        Polynomial out;
        bool first = true;
        while (!at_end()) {
            bool negative = false;
            if (s[pos] == '+' || s[pos] == '-') {
                negative = s[pos] == '-';
                ++pos;
            } else if (!first) {
                error("expected + or -");
            }
            std::size_t before = pos;
            Term t = term(negative);
            if (pos == before) error("empty term");
            out.push_back(std::move(t));
            first = false;
        }
        if (out.empty()) error("empty polynomial");
        return out;
    }
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const Presentation& p) {
    PolyParser parser{text, p};
    return parser.parse();
}

Presentation make_presentation(const Field& k, const std::vector<std::string>& generators,
                               const std::vector<std::string>& relations, int bound, std::string name,
                               const std::vector<int>& degrees) {
    Presentation p;
    p.field = k;
    p.bound = bound;
    p.name = std::move(name);
    for (std::size_t i = 0; i < generators.size(); ++i)
        p.generators.push_back(Generator{generators[i], i < degrees.size() ? degrees[i] : 1});
    for (const auto& r : relations) p.relations.push_back(parse_polynomial(r, p));
    return p;
}

}  // namespace takeuchi
