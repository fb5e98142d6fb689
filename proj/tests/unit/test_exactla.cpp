#include <doctest.h>

#include "takeuchi/matrix.hpp"

using namespace takeuchi;

namespace {

Matrix mat(const Field& k, const std::vector<std::vector<std::int64_t>>& rows) {
    std::vector<Vec> r;
    for (const auto& row : rows) {
        Vec v;
        for (auto x : row) v.push_back(k.make(x));
        r.push_back(v);
    }
    return Matrix::from_rows(k, rows.empty() ? 0 : rows[0].size(), r);
}

// Brute-force determinant by cofactor expansion, independent of rref.
Scalar det(const Field& k, const std::vector<Vec>& m) {
    if (m.size() == 1) return m[0][0];
    Scalar out = k.zero();
    for (std::size_t c = 0; c < m.size(); ++c) {
        std::vector<Vec> minor;
        for (std::size_t r = 1; r < m.size(); ++r) {
            Vec row;
            for (std::size_t j = 0; j < m.size(); ++j)
                if (j != c) row.push_back(m[r][j]);
            minor.push_back(row);
        }
        Scalar term = m[0][c] * det(k, minor);
        out = c % 2 ? out - term : out + term;
    }
    return out;
}

}  // namespace

TEST_CASE("field parsing and arithmetic") {
    CHECK(Field::parse("F7").characteristic() == 7);
    CHECK(Field::parse("Q").kind() == Field::Kind::rationals);
    CHECK_THROWS_AS(Field::prime(9), FieldError);
    Field f7 = Field::prime(7);
    CHECK(f7.make(2) * f7.make(4) == f7.one());
    CHECK(f7.make(3).inverse() == f7.make(5));
    Field q = Field::rationals();
    CHECK(q.parse_scalar("-2/4") == q.make(-1, 2));
}

TEST_CASE("rref examples") {
    Field f7 = Field::prime(7);
    auto r = rref(mat(f7, {{1, 2}, {2, 4}}));
    CHECK(r.rank == 1);
    CHECK(r.pivots == std::vector<std::size_t>{0});

    Field q = Field::rationals();
    auto id = Matrix::identity(q, 3);
    auto ri = rref(id);
    CHECK(ri.rank == 3);
    CHECK(ri.reduced == id);

    // det = 1 - 6 = -5 = 0 mod 5, so the rank drops to 1.
    Field f5 = Field::prime(5);
    auto m = mat(f5, {{1, 3}, {2, 1}});
    CHECK(det(f5, m.to_dense()).is_zero());
    CHECK(rref(m).rank == 1);
}

TEST_CASE("kernel, solve, inverse examples") {
    Field q = Field::rationals();
    CHECK(kernel_basis(Matrix(q, 2, 3)).size() == 3);
    CHECK(kernel_basis(Matrix::identity(q, 4)).empty());

    Field f2 = Field::prime(2);
    auto k = kernel_basis(mat(f2, {{1, 1}}));
    REQUIRE(k.size() == 1);
    // Exhaustive oracle over all four vectors of F2^2.
    int annihilated = 0;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            if ((a + b) % 2 == 0 && (a || b)) ++annihilated;
    CHECK(annihilated == 1);
    CHECK(k[0] == Vec{f2.one(), f2.one()});

    auto x = solve(mat(q, {{2, 0}, {0, 3}}), Vec{q.one(), q.one()});
    REQUIRE(x);
    CHECK((*x)[0] == q.make(1, 2));
    CHECK((*x)[1] == q.make(1, 3));
    CHECK_FALSE(solve(Matrix(q, 2, 2), Vec{q.one(), q.zero()}));
    CHECK(solve(Matrix::identity(q, 2), unit_vec(q, 2, 0)) == unit_vec(q, 2, 0));
    CHECK_THROWS(solve(Matrix(q, 2, 2), Vec{q.one()}));

    auto swap = mat(q, {{0, 1}, {1, 0}});
    CHECK(inverse(swap) == swap);
    CHECK_FALSE(inverse(mat(q, {{1, 1}, {1, 1}})));
    CHECK(inverse(Matrix::identity(q, 3)) == Matrix::identity(q, 3));
    CHECK_THROWS(inverse(Matrix(q, 2, 3)));
}

TEST_CASE("linear algebra properties on pseudo-random matrices") {
    Field f7 = Field::prime(7);
    std::uint64_t state = 12345;
    auto next = [&]() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return static_cast<std::int64_t>((state >> 33) % 7);
    };
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t r = 1 + trial % 5, c = 1 + (trial * 3) % 6;
        std::vector<std::vector<std::int64_t>> rows(r, std::vector<std::int64_t>(c));
        for (auto& row : rows)
            for (auto& x : row) x = trial % 3 == 0 && next() < 4 ? 0 : next();
        Matrix m = mat(f7, rows);
        auto red = rref(m);
        // Row spaces agree: every original row lies in the span of the reduced rows and conversely.
        Matrix rt = red.reduced.transpose(), mt = m.transpose();
        for (std::size_t i = 0; i < r; ++i) CHECK(solve(rt, m.row_vec(i)));
        for (std::size_t i = 0; i < red.rank; ++i) CHECK(solve(mt, red.reduced.row_vec(i)));
        auto ker = kernel_basis(m);
        CHECK(ker.size() == c - red.rank);
        for (const auto& v : ker) CHECK(is_zero(m.apply(v)));
        if (!ker.empty()) CHECK(rank(Matrix::from_rows(f7, c, ker)) == ker.size());
        Vec x0;
        for (std::size_t j = 0; j < c; ++j) x0.push_back(f7.make(next()));
        auto x1 = solve(m, m.apply(x0));
        REQUIRE(x1);
        CHECK(m.apply(*x1) == m.apply(x0));
        if (r == c) {
            if (auto inv = inverse(m)) CHECK(*inv * m == Matrix::identity(f7, r));
        }
    }
}

TEST_CASE("dense and sparse rref paths agree") {
    Field q = Field::rationals();
    auto dense = mat(q, {{1, 2, 3, 4}, {2, 4, 6, 9}, {0, 1, 1, 1}});
    auto sparse = mat(q, {{1, 0, 0, 0, 0, 0, 2}, {0, 0, 0, 3, 0, 0, 0}, {0, 0, 0, 0, 0, 0, 1}});
    CHECK(rref(dense).rank == 3);
    CHECK(rref(sparse).rank == 3);
    CHECK(rref(sparse).pivots == std::vector<std::size_t>{0, 3, 6});
}
