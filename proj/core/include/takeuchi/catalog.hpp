#pragma once

#include "takeuchi/smash.hpp"

namespace takeuchi {

/// The input of a smash-product construction: a left H-module algebra A and a
/// left H-comodule algebra B.
struct SmashDatum {
    std::string name;
    HopfPtr hopf;
    ActionData action;
    CoactionData coaction;

    [[nodiscard]] const AlgebraPtr& a() const { return action.algebra; }
    [[nodiscard]] const AlgebraPtr& b() const { return coaction.algebra; }
};

/// k[vars] (commutative).
AlgebraPtr polynomial_algebra(const Field& k, const std::vector<std::string>& vars, int bound);
/// k<x, y>/(yx - q xy).
AlgebraPtr quantum_plane(const Field& k, const Scalar& q, int bound, const std::string& x = "x",
                         const std::string& y = "y");
/// k<x>/(x^2).
AlgebraPtr dual_numbers(const Field& k, int bound);

/// Multiplicative order of q in k (0 when it exceeds the search limit).
std::size_t multiplicative_order(const Field& k, const Scalar& q, std::size_t limit = 4096);

/// A = k[x], B = k[y], H = kC_n with n the order of q; g acts on x by q and
/// rho(y) = g (x) y, so A#B is the quantum plane yx = q xy.
SmashDatum quantum_plane_datum(const Field& k, const Scalar& q, int bound);
/// A = k[x], B = H = kC2 in degree 0 with the regular coaction, x -> -x.
SmashDatum skew_group_datum(const Field& k, int bound);
/// Trivial H acting on A and coacting on B.
SmashDatum trivial_datum(const AlgebraPtr& a, const AlgebraPtr& b);

/// k[u][x; sigma] with sigma(u) = s u and delta = 0.
OreExtension scaled_ore_extension(const Field& k, const Scalar& s, int bound);

}  // namespace takeuchi
