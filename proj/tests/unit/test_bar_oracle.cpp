#include <doctest.h>

#include "takeuchi/bar_oracle.hpp"
#include "takeuchi/catalog.hpp"

using namespace takeuchi;

namespace {

ExtAlgebra resolution_ext(const AlgebraPtr& a, int n, int d) {
    auto r = std::make_shared<Resolution>(minimal_resolution(trivial_module(a, Side::right), n + 1, d));
    return ext_algebra(r, n);
}

}  // namespace

TEST_CASE("cobar dims on small algebras") {
    Field q = Field::rationals();
    auto kx = bar_ext_oracle(polynomial_algebra(q, {"x"}, 6), 3, 6);
    CHECK(kx.validation.ok());
    for (int n = 0; n <= 3; ++n)
        for (int d = 0; d <= 6; ++d) CHECK(kx.dim(n, d) == ((n == 0 && d == 0) || (n == 1 && d == 1) ? 1u : 0u));

    auto dual = bar_ext_oracle(dual_numbers(q, 6), 3, 6);
    for (int n = 0; n <= 3; ++n) CHECK(dual.dim(n, n) == 1);
    // t^3 != 0 under concatenation
    Vec t{q.one()};
    Vec t2 = dual.algebra.multiply(1, 1, t, 1, 1, t);
    CHECK_FALSE(is_zero(dual.algebra.multiply(2, 2, t2, 1, 1, t)));

    Field f7 = Field::prime(7);
    auto qp = bar_ext_oracle(quantum_plane(f7, -1, 6), 3, 6);
    CHECK(qp.dim(0, 0) == 1);
    CHECK(qp.dim(1, 1) == 2);
    CHECK(qp.dim(2, 2) == 1);
    CHECK(qp.algebra.total_dim(3) == 0);
}

TEST_CASE("cobar oracle agrees with the resolution path") {
    Field q = Field::rationals();
    Field f7 = Field::prime(7);
    std::vector<AlgebraPtr> algebras{polynomial_algebra(q, {"x"}, 6), polynomial_algebra(q, {"x", "y"}, 6),
                                     quantum_plane(f7, -1, 6), quantum_plane(f7, 2, 6), dual_numbers(q, 6)};
    for (const auto& a : algebras) {
        CAPTURE(a->name());
        auto bar = bar_ext_oracle(a, 3, 6);
        auto ext = resolution_ext(a, 3, 6);
        auto rep = bar_equivalence(bar, ext);
        CHECK_MESSAGE(rep.ok(), rep.summary());
    }
}
