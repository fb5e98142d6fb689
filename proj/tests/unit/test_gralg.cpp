#include <doctest.h>

#include "takeuchi/algebra.hpp"

using namespace takeuchi;

namespace {

// Independent oracle: dimension of the degree-d part of the quotient of the free
// algebra computed from the full span of all u * r * v, without the incremental ideal.
std::size_t oracle_dim(const Presentation& p, int d) {
    auto words = enumerate_words(p.generators, d);
    std::map<Word, std::size_t> index;
    for (std::size_t i = 0; i < words.size(); ++i) index[words[i]] = i;
    std::vector<Vec> rows;
    for (const auto& rel : p.relations) {
        int rd = p.word_degree(rel.front().word);
        for (int i = 0; i + rd <= d; ++i)
            for (const auto& u : enumerate_words(p.generators, i))
                for (const auto& v : enumerate_words(p.generators, d - rd - i)) {
                    Vec row = zero_vec(p.field, words.size());
                    for (const auto& t : rel) {
                        Word w = u;
                        w.insert(w.end(), t.word.begin(), t.word.end());
                        w.insert(w.end(), v.begin(), v.end());
                        row[index[w]] += p.field.coerce(t.coeff);
                    }
                    rows.push_back(row);
                }
    }
    if (rows.empty()) return words.size();
    return words.size() - rank(Matrix::from_rows(p.field, words.size(), rows));
}

}  // namespace

TEST_CASE("realize: dimension examples") {
    Field q = Field::rationals();
    auto kx = realize(make_presentation(q, {"x"}, {}, 4, "k[x]"));
    CHECK(kx.dims() == std::vector<std::size_t>{1, 1, 1, 1, 1});

    auto kxy = realize(make_presentation(q, {"x", "y"}, {"yx - xy"}, 3));
    CHECK(kxy.dims() == std::vector<std::size_t>{1, 2, 3, 4});

    Field f7 = Field::prime(7);
    auto p = make_presentation(f7, {"x", "y"}, {"yx - 2xy"}, 3);
    auto qp = realize(p);
    CHECK(qp.dims() == std::vector<std::size_t>{1, 2, 3, 4});
    for (int d = 0; d <= 3; ++d) CHECK(qp.dim(d) == oracle_dim(p, d));

    auto dual = make_presentation(q, {"x"}, {"x^2"}, 5);
    auto dn = realize(dual);
    CHECK(dn.dims() == std::vector<std::size_t>{1, 1, 0, 0, 0, 0});
}

TEST_CASE("realize: oracle agreement on assorted presentations") {
    Field f7 = Field::prime(7);
    std::vector<Presentation> ps = {
        make_presentation(f7, {"x", "y"}, {"x^2 - y^2", "xy"}, 5),
        make_presentation(f7, {"x", "y", "z"}, {"yx - 3xy", "zy - yz", "zx - 5xz"}, 4),
        make_presentation(f7, {"x", "y"}, {"yx - xy - x^2"}, 5),
        make_presentation(f7, {"a", "b"}, {"b*a - a*a*a"}, 5, "mixed", {1, 2}),
    };
    for (const auto& p : ps) {
        auto a = realize(p);
        for (int d = 0; d <= p.bound; ++d) CHECK(a.dim(d) == oracle_dim(p, d));
        CHECK(validate_algebra(a).ok());
    }
}

TEST_CASE("realize: errors") {
    Field q = Field::rationals();
    CHECK_THROWS_AS(realize(make_presentation(q, {"x", "y"}, {"x^2 - y"}, 3)), AlgebraError);
    CHECK_THROWS_AS(realize(make_presentation(q, {"x", "y"}, {"x^2 y - y^3"}, 2)), AlgebraError);
    CHECK_THROWS_AS(make_presentation(q, {"x"}, {"x + z"}, 2), AlgebraError);
    Presentation dup = make_presentation(q, {"x"}, {}, 2);
    dup.generators.push_back({"x", 1});
    CHECK_THROWS_AS(realize(dup), AlgebraError);
}

TEST_CASE("multiply examples and overflow") {
    Field f7 = Field::prime(7);
    auto qp = realize_shared(make_presentation(f7, {"x", "y"}, {"yx - 2xy"}, 3));
    auto x = qp->normal_form({0});
    auto y = qp->normal_form({1});
    Vec yx = qp->multiply(1, y, 1, x);
    Vec xy = qp->multiply(1, x, 1, y);
    CHECK(yx == scaled(xy, f7.make(2)));

    GradedElement one = qp->one();
    one.algebra = qp;
    GradedElement v = qp->basis_element(2, 1);
    v.algebra = qp;
    CHECK(qp->multiply(one, v) == v);

    GradedElement a = qp->basis_element(2, 0);
    a.algebra = qp;
    GradedElement b = qp->basis_element(2, 0);
    b.algebra = qp;
    CHECK_THROWS_AS(static_cast<void>(qp->multiply(a, b)), DegreeOverflow);

    GradedElement ex = qp->basis_element(1, 0), ey = qp->basis_element(1, 1);
    ex.algebra = ey.algebra = qp;
    CHECK(qp->multiply(ex, qp->multiply(ex, ey)) == qp->multiply(qp->multiply(ex, ex), ey));
}

TEST_CASE("normal form is idempotent and zero relations give free algebras") {
    Field f7 = Field::prime(7);
    auto p = make_presentation(f7, {"x", "y"}, {"yx - 2xy", "y^2 - x^2"}, 4);
    auto a = realize(p);
    for (int d = 0; d <= 4; ++d)
        for (const auto& w : a.words(d)) {
            Vec nf = a.normal_form(w);
            Vec again = zero_vec(f7, a.dim(d));
            for (std::size_t b = 0; b < nf.size(); ++b) axpy(again, nf[b], a.normal_form(a.basis_word(d, b)));
            CHECK(again == nf);
        }
    auto free = realize(make_presentation(f7, {"x", "y"}, {}, 4));
    for (int d = 0; d <= 4; ++d) CHECK(free.dim(d) == (std::size_t(1) << d));
}

TEST_CASE("validate_algebra: pass and corrupted negative control") {
    Field q = Field::rationals();
    auto kx = realize(make_presentation(q, {"x"}, {}, 4));
    CHECK(validate_algebra(kx).ok());

    Field f7 = Field::prime(7);
    auto qp = realize(make_presentation(f7, {"x", "y"}, {"yx + xy"}, 6));
    CHECK(validate_algebra(qp).ok());

    auto bad = realize(make_presentation(f7, {"x", "y"}, {"yx - 2xy"}, 4));
    Vec v = bad.product(1, 1, 1, 0);
    v[0] += f7.one();
    bad.set_product(1, 1, 1, 0, v);
    auto rep = validate_algebra(bad);
    CHECK_FALSE(rep.ok());
    bool names_triple = false;
    for (const auto& c : rep.failures())
        if (c.name == "associativity" && c.message.find('(') != std::string::npos) names_triple = true;
    CHECK(names_triple);
}

TEST_CASE("opposite algebra reverses products") {
    Field f7 = Field::prime(7);
    auto qp = realize(make_presentation(f7, {"x", "y"}, {"yx - 2xy"}, 3));
    auto op = opposite(qp);
    CHECK(op.product(1, 0, 1, 1) == qp.product(1, 1, 1, 0));
    CHECK(validate_algebra(op).ok());
}
