#pragma once

#include "takeuchi/ext.hpp"

#include <map>
#include <optional>
#include <tuple>

namespace takeuchi::detail {

/// Hom_R(P, N) for a right-module resolution P: a cochain of bidegree (n, d) is
/// the list of its values on the generators of P_n, the value on w_g lying in
/// N of degree deg g - d.
class HomComplex {
public:
    struct Space {
        std::vector<std::size_t> offset;
        std::vector<int> vdeg;
        std::size_t dim = 0;
    };
    /// Chain map lift of a cocycle of bidegree (m, d): lift[i][g] is the image
    /// of generator g of P_{m+i} in P_i (empty when that degree is negative).
    using Lift = std::vector<std::vector<Vec>>;

    HomComplex(std::shared_ptr<const Resolution> r, ModulePtr target);

    [[nodiscard]] const Field& field() const noexcept { return k_; }
    [[nodiscard]] const Resolution& resolution() const noexcept { return *res_; }
    [[nodiscard]] const ModulePtr& target() const noexcept { return target_; }

    [[nodiscard]] const Space& space(int n, int d) const;
    [[nodiscard]] std::span<const Scalar> value(int n, int d, std::span<const Scalar> c, std::size_t g) const;
    /// c evaluated on v in P_n of degree e; lands in N of degree e - d.
    [[nodiscard]] Vec evaluate(int n, int d, std::span<const Scalar> c, int e, std::span<const Scalar> v) const;
    /// delta: C^{n,d} -> C^{n+1,d}, (delta c)(w) = c(d w).
    [[nodiscard]] const Matrix& coboundary(int n, int d) const;

    /// Lift with d F_{i+1} = (-1)^m F_i d and eps F_0 = cocycle, up to source level top.
    [[nodiscard]] const Lift& lift(int m, int d, std::size_t cls, const Vec& cocycle, int top) const;
    /// e o F_n as a cochain of bidegree (n + m, d + d2).
    [[nodiscard]] Vec compose(int n, int d, const Vec& e, int m, int d2, const Lift& F) const;

private:
    [[nodiscard]] const LinearSolver& diff_solver(int n, int e) const;
    [[nodiscard]] Vec apply_chain(int level, int shift, const std::vector<Vec>& images, int src_level, int e,
                                  std::span<const Scalar> v) const;

    std::shared_ptr<const Resolution> res_;
    ModulePtr target_;
    Field k_;
    mutable std::map<std::pair<int, int>, Space> spaces_;
    mutable std::map<std::pair<int, int>, Matrix> cobound_;
    mutable std::map<std::pair<int, int>, LinearSolver> solvers_;
    mutable std::map<std::tuple<int, int, std::size_t>, Lift> lifts_;
};

/// Cohomology of the Hom complex in one bidegree: class representatives chosen
/// deterministically as kernel vectors independent modulo coboundaries.
struct Cohomology {
    Cohomology(const HomComplex& hc, int n, int d);

    Field field;
    std::size_t dim_c = 0;
    std::size_t bdim = 0;
    std::vector<Vec> reps;
    std::vector<Vec> boundaries;
    std::optional<LinearSolver> solver;

    /// Class coordinates of a cocycle (throws when not a cocycle).
    [[nodiscard]] Vec coords(const Vec& cocycle) const;
    [[nodiscard]] bool is_coboundary(const Vec& v) const;

private:
    const Matrix* delta_ = nullptr;
};

struct ExtState {
    ExtState(std::shared_ptr<const Resolution> r, ModulePtr target) : complex(std::move(r), std::move(target)) {}
    HomComplex complex;
    int d_min = 0;
    std::vector<std::vector<Cohomology>> cohomology;  // [n][d - d_min]
    [[nodiscard]] const Cohomology& at(int n, int d) const { return cohomology.at(n).at(d - d_min); }
};

/// (h_k f)(w) = sum f(w . S^2 h_2) . S h_1 on a cochain of bidegree (n, d).
/// The target's H-structure defaults to the resolved module's.
Vec act_cochain(const ExtState& st, int n, int d, std::size_t k, const Vec& c, const HModule* target = nullptr);
/// Cochain-level coaction: component t is the cochain paired with h_t.
std::vector<Vec> coact_cochain(const ExtState& st, int n, int d, const Vec& c, const HopfModule* target = nullptr);

}  // namespace takeuchi::detail
