#pragma once

#include "takeuchi/smash.hpp"

#include <optional>

namespace takeuchi {

class ResolutionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// W (x) R (right) or R (x) W (left) for a graded generator set W. In degree
/// e the basis is the pairs (g, r), r a basis element of R_{e - deg g},
/// ordered by g then r.
struct FreeModule {
    AlgebraPtr algebra;
    Side side = Side::right;
    std::vector<int> degrees;
    std::vector<std::string> labels;
    int bound = 0;

    [[nodiscard]] std::size_t rank() const noexcept { return degrees.size(); }
    [[nodiscard]] std::size_t dim(int e) const;
    /// First coordinate of generator g's block in degree e.
    [[nodiscard]] std::size_t offset(int e, std::size_t g) const;
    /// Generator g as a vector in degree deg g.
    [[nodiscard]] Vec generator(std::size_t g) const;
    /// v.r (right) or r.v (left) for v in degree e and r in R_j.
    [[nodiscard]] Vec act(int e, std::span<const Scalar> v, int j, std::span<const Scalar> r) const;
    /// Number of generators in each degree 0..bound.
    [[nodiscard]] std::vector<std::size_t> generator_counts() const;
};

/// Truncated free resolution P_N -> ... -> P_0 -> M, valid in internal degrees
/// up to D. boundary[n][g] is d(w_g): an element of P_{n-1} (or of M for n = 0)
/// in degree deg w_g.
struct Resolution {
    ModulePtr module;
    AlgebraPtr algebra;
    Side side = Side::right;
    int max_level = 0;  // N
    int bound = 0;      // D
    std::vector<FreeModule> levels;
    std::vector<std::vector<Vec>> boundary;
    bool minimal = true;
    bool terminated = false;  // some level had no generators within the bound
    std::vector<std::string> provenance;

    // Right A#H-structure: gen_action[n][k] has column i equal to w_i.h_k.
    std::optional<ActionData> action;
    std::vector<std::vector<Matrix>> gen_action;
    std::shared_ptr<const HModule> module_action;
    // Right Hopf-module structure over B: gen_coaction[n][i] has length
    // n_H * rank(W_n), coefficient of h_k (x) w_j at k * rank + j.
    std::optional<CoactionData> coaction;
    std::vector<std::vector<Vec>> gen_coaction;
    std::shared_ptr<const HopfModule> module_coaction;

    [[nodiscard]] int length() const { return static_cast<int>(levels.size()) - 1; }
    [[nodiscard]] std::size_t target_dim(int n, int e) const;
    /// Matrix of d_n in degree e (columns: basis of P_n in degree e).
    [[nodiscard]] const Matrix& differential(int n, int e) const;
    [[nodiscard]] Vec d(int n, int e, std::span<const Scalar> v) const { return differential(n, e).apply(v); }
    /// (w (x) a).h_k = sum (w.h_2) (x) (S^-1(h_1) a) on P_n in degree e.
    [[nodiscard]] Vec act_h(int n, int e, std::size_t k, std::span<const Scalar> v) const;
    /// rho(w (x) b) = rho(w) rho(b) on P_n in degree e; length n_H * dim.
    [[nodiscard]] Vec coact(int n, int e, std::span<const Scalar> v) const;
    [[nodiscard]] json to_json() const;

    mutable std::vector<std::vector<std::optional<Matrix>>> cache_;
};

/// Degreewise resolution. Generators are kernel vectors outside the submodule
/// generated so far; over a connected algebra this is the minimal resolution.
Resolution minimal_resolution(const ModulePtr& m, int max_level, int bound);

/// Resolution of a right A#H-module whose generator spaces are H-stable.
Resolution equivariant_module_resolution(const HModule& m, const ActionData& action, int max_level, int bound);

/// Resolution of a right Hopf module over B whose generator spaces are H-comodules.
Resolution equivariant_comodule_resolution(const HopfModule& x, const CoactionData& coaction, int max_level,
                                           int bound);

/// Level n of a resolution as a graded module (truncated at the bound).
ModulePtr level_module(const Resolution& r, int n);
/// Level n of a right A#H-equivariant resolution as an H-module.
HModule level_hmodule(const Resolution& r, int n);

/// Tot(P # Q) over A#B for an A#H-equivariant P resolving M and a comodule
/// resolution Q of X, resolving M # X. The freeness isomorphism of each
/// P_p # Q_q is inverted degreewise; a singular one raises ResolutionError.
struct TotalResolution {
    Resolution resolution;
    SmashModule target;  // M # X
    std::vector<std::pair<int, int>> blocks;  // per Tot generator: (p, q)
    /// Tot generator g of level n is w_i # v_j with w_i in W_p and v_j in V_q.
    struct Origin {
        int p;
        std::size_t i;
        int q;
        std::size_t j;
    };
    std::vector<std::vector<Origin>> origin;
};
TotalResolution total_smash_resolution(const SmashAlgebra& s, const Resolution& p, const Resolution& q,
                                       const SmashModule& target);

/// d^2 = 0, exactness within the bounds, minimality, equivariance and the
/// Euler identity.
Report validate_resolution(const Resolution& r);

/// Normalized left integral (h t = eps(h) t, eps(t) = 1); empty unless H is semisimple.
std::optional<Vec> normalized_integral(const HopfData& h);
/// The dual Hopf algebra on the dual basis f_k.
HopfData dual_hopf(const HopfData& h);

}  // namespace takeuchi
