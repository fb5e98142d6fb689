#pragma once

#include "takeuchi/resolution.hpp"

#include <array>
#include <map>

namespace takeuchi {

namespace detail {
struct ExtState;
}

class ExtError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Finite piece of a bigraded algebra: components (n, d) with 0 <= n <= max_level
/// and d_min <= d <= d_max, structure constants for every pair whose product
/// lands in range.
struct BigradedAlgebra {
    std::string name;
    Field field;
    int max_level = 0;
    int d_min = 0;
    int d_max = 0;
    std::vector<std::vector<std::size_t>> dims;  // [n][d - d_min]
    std::vector<std::vector<std::vector<std::string>>> labels;
    /// Key (n1, d1, n2, d2); column i * dim2 + j holds e_i * f_j.
    std::map<std::array<int, 4>, Matrix> products;
    Vec unit;  // in bidegree (0, 0)

    [[nodiscard]] bool in_range(int n, int d) const noexcept {
        return n >= 0 && n <= max_level && d >= d_min && d <= d_max;
    }
    [[nodiscard]] std::size_t dim(int n, int d) const {
        return in_range(n, d) ? dims[n][d - d_min] : 0;
    }
    [[nodiscard]] std::size_t total_dim(int n) const;
    /// u in (n1, d1) times v in (n2, d2); throws if the product is out of range.
    [[nodiscard]] Vec multiply(int n1, int d1, std::span<const Scalar> u, int n2, int d2,
                               std::span<const Scalar> v) const;
    [[nodiscard]] json to_json() const;
};

/// Associativity on all basis triples and the two-sided unit law.
Report validate_bigraded(const BigradedAlgebra& e);

/// Ext(M, N) from a resolution of M. Bidegree (n, d): classes of R-linear maps
/// P_n -> N lowering internal degree by d, represented by their values on the
/// generators. Bidegrees whose cochain spaces would need data beyond the
/// bounds are excluded from the range.
struct ExtAlgebra {
    BigradedAlgebra algebra;
    std::shared_ptr<const Resolution> resolution;
    ModulePtr target;
    bool has_products = false;
    /// Cocycle representatives per bidegree: [n][d - d_min][i].
    std::vector<std::vector<std::vector<Vec>>> reps;
    /// Left H-action on classes: action[n][d - d_min][k] (empty when absent).
    std::vector<std::vector<std::vector<Matrix>>> action;
    /// Left H-coaction: coaction[n][d - d_min][t]; rho(e) = sum_t h_t (x) C_t e.
    std::vector<std::vector<std::vector<Matrix>>> coaction;
    HopfPtr hopf;
    std::vector<std::string> provenance;
    Report validation{"ext"};
    std::shared_ptr<const detail::ExtState> state;

    [[nodiscard]] std::size_t dim(int n, int d) const { return algebra.dim(n, d); }
    /// Class coordinates of a cocycle of bidegree (n, d).
    [[nodiscard]] Vec classify(int n, int d, const Vec& cocycle) const;
    [[nodiscard]] json to_json() const;
};

/// Yoneda algebra Ext(M, M) for the resolved module M, up to homological degree
/// max_level (at most r.max_level - 1 unless the resolution terminated).
/// Products come from lifting cocycles to chain maps and composing.
ExtAlgebra ext_algebra(std::shared_ptr<const Resolution> r, int max_level);

/// Ext groups Ext(M, N) without products, in internal degrees [d_min, d_max].
ExtAlgebra ext_groups(std::shared_ptr<const Resolution> r, const ModulePtr& target, int max_level, int d_min,
                      int d_max);

/// Adds the action (h f)(m) = sum h_1 f(S h_2 m) on classes; needs an
/// equivariant resolution of an A#H-module. Validates the action law, that
/// coboundaries are preserved and the module-algebra law.
void h_action_on_ext(ExtAlgebra& e);

/// Adds the coaction rho(f)(x) = sum f(x_0)_{-1} S^-1(x_{-1}) (x) f(x_0)_0 on
/// classes; needs a comodule resolution of a Hopf module. Validates
/// coassociativity, counit and the comodule-algebra law.
void h_coaction_on_ext(ExtAlgebra& e);

/// Lambda # Gamma with (l # g)(l' # g') = (-1)^{|g||l'|} l (g_{-1} l') # g_0 g'.
/// Basis of (n, d): pairs (e_i in (n1, d1), f_j in (n2, d2)) with n1 + n2 = n,
/// d1 + d2 = d, ordered by n1, d1, i, j.
struct GradedSmash {
    BigradedAlgebra algebra;
    struct Index {
        int n1, d1;
        std::size_t i;
        int n2, d2;
        std::size_t j;
    };
    std::vector<std::vector<std::vector<Index>>> basis;  // [n][d - d_min]
    Report validation{"graded smash"};
};
GradedSmash graded_smash(const ExtAlgebra& ea, const ExtAlgebra& eb);

/// phi(f # g)(w # v) = (-1)^{|g||w|} sum f(w . S g_{-1}) # g_0(v), per bidegree,
/// as a matrix from the smash basis to the classes of Ext over the smash algebra.
struct ComparisonMap {
    std::vector<std::vector<Matrix>> matrices;  // [n][d - d_min]
    int max_level = 0;
    int d_min = 0;
    int d_max = 0;
    Report report{"comparison map"};
};
ComparisonMap comparison_map(const GradedSmash& sm, const ExtAlgebra& ea, const ExtAlgebra& eb,
                             const ExtAlgebra& etot, const TotalResolution& tot);

/// Full pipeline for a datum, M a right A#H-module and X a right Hopf module
/// over B: equivariant and comodule resolutions, Ext algebras with their
/// H-structures, graded smash, Tot, Ext over A#B and the comparison map.
struct ExtTheoremResult {
    Report report{"ext theorem"};
    std::optional<ExtAlgebra> ext_a, ext_b, ext_smash;
    std::optional<GradedSmash> smash;
    std::optional<ComparisonMap> phi;
};
ExtTheoremResult verify_ext_theorem(const ActionData& action, const CoactionData& coaction, const HModule& m,
                                    const HopfModule& x, int max_level, int bound);

/// Tor over A#B of N#Y (N a right A-module, Y a right Hopf module over B)
/// against M#X (M a left A#H-module, X a left B-module), compared with the
/// convolution of Tor over A and Tor over B.
Report tor_decomposition_check(const ActionData& action, const CoactionData& coaction, const ModulePtr& n,
                               const HopfModule& y, const HModule& m, const ModulePtr& x, int max_level, int bound);

/// Graded dims of Tor_n(N, L) in internal degrees 0..bound from a resolution of
/// N (right) and a left module L, read as zero above its bound: [n][e].
/// Levels below r.max_level unless terminated.
std::vector<std::vector<std::size_t>> tor_dims(const Resolution& r, const GradedModule& l, int max_level);

}  // namespace takeuchi
