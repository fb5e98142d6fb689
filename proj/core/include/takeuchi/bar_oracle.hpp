#pragma once

#include "takeuchi/ext.hpp"

namespace takeuchi {

namespace detail {
struct BarState;
}

/// Ext(k, k) from the reduced cobar complex of a connected algebra, computed
/// without any resolution code. A cochain of bidegree (n, d) is a functional
/// on the words [a_1|...|a_n] of positive-degree basis elements of total
/// degree d, with (delta phi)[a_1|...|a_{n+1}] = sum_i (-1)^i phi[...|a_i a_{i+1}|...].
/// The product is concatenation: (phi psi)[a_1|...|a_{p+q}] = phi[a_1..a_p] psi[a_{p+1}..].
struct BarExt {
    BigradedAlgebra algebra;
    AlgebraPtr source;
    /// Cocycle representatives per bidegree, in word coordinates: [n][d][i].
    std::vector<std::vector<std::vector<Vec>>> reps;
    Report validation{"cobar"};
    std::shared_ptr<const detail::BarState> state;

    [[nodiscard]] std::size_t dim(int n, int d) const { return algebra.dim(n, d); }
    [[nodiscard]] Vec classify(int n, int d, const Vec& cocycle) const;
    /// Words of bidegree (n, d) as (degree, basis index) lists, in coordinate order.
    [[nodiscard]] const std::vector<std::vector<std::pair<int, std::size_t>>>& words(int n, int d) const;
    [[nodiscard]] json to_json() const;
};

/// Cobar computation for n <= max_level and 0 <= d <= bound (bound at most the
/// algebra's bound).
BarExt bar_ext_oracle(const AlgebraPtr& a, int max_level, int bound);

/// Compares the cobar path with Ext(k, k) computed from a resolution of the
/// trivial right module. A chain map G from the resolution to the normalized
/// bar resolution is built with the contracting homotopy of the latter, cobar
/// classes are pulled back along it, and the induced map is checked to be
/// bijective per bidegree and to turn concatenation into the reversed Yoneda
/// product: pi(phi psi) = pi(psi) pi(phi).
Report bar_equivalence(const BarExt& bar, const ExtAlgebra& ext);

}  // namespace takeuchi
