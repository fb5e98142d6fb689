#pragma once

#include "takeuchi/module.hpp"

namespace takeuchi {

class SmashError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A#B for a left H-module algebra A and a left H-comodule algebra B, with
/// (a#b)(a'#b') = sum a(b_{-1} a') # b_0 b'. Degree-n basis: triples
/// (i, a, b) with a in A_i, b in B_{n-i}, ordered by i, then a, then b.
struct SmashAlgebra {
    AlgebraPtr algebra;
    AlgebraPtr a;
    AlgebraPtr b;
    HopfPtr hopf;
    ActionData action;
    CoactionData coaction;

    struct Index {
        int i;
        std::size_t a;
        std::size_t b;
    };
    std::vector<std::vector<Index>> basis;

    [[nodiscard]] std::size_t index(int n, int i, std::size_t a, std::size_t b) const;
    /// Coordinates of u # v (u in A_i, v in B_j) in degree i + j.
    [[nodiscard]] Vec pure_tensor(int i, std::span<const Scalar> u, int j, std::span<const Scalar> v) const;
};

/// Builds the structure constants and validates associativity and the unit up
/// to the bound (throws SmashError when validation fails). bound < 0 means
/// min of the factor bounds.
SmashAlgebra smash_algebra(const ActionData& action, const CoactionData& coaction, int bound = -1,
                           bool validate = true);

/// Which of the four module structures on a tensor product was used.
enum class SmashModuleKind {
    left_hmodule,     // (a#b)(m x) = sum a(b_{-1} m) (x) b_0 x
    right_hmodule,    // (m x)(a#b) = sum m(a#b_{-1}) (x) x b_0
    right_comodule,   // (n y)(a#b) = sum n(y_{-1} a) (x) y_0 b
    left_comodule,    // (a#b)(n y) = sum (S^-1(b_{-1} y_{-1}) a) n (x) b_0 y_0
};
std::string to_string(SmashModuleKind k);

struct SmashModule {
    ModulePtr module;
    SmashModuleKind kind;
    struct Index {
        int i;  // degree of the first factor
        std::size_t m;
        std::size_t x;
    };
    std::vector<std::vector<Index>> basis;
    Report validation;

    [[nodiscard]] std::size_t index(int n, int i, std::size_t m, std::size_t x) const;
};

/// M a right A#H-module, X a right B-module.
/// validate = false skips the exhaustive module-axiom check (validation stays empty).
SmashModule smash_module_right(const SmashAlgebra& s, const HModule& m, const GradedModule& x, bool validate = true);
/// M a left A#H-module, X a left B-module.
SmashModule smash_module_left(const SmashAlgebra& s, const HModule& m, const GradedModule& x);
/// N a right A-module, Y a right Hopf module over B.
SmashModule smash_module_right_comodule(const SmashAlgebra& s, const GradedModule& n, const HopfModule& y);
/// N a left A-module, Y a left Hopf module over B.
SmashModule smash_module_left_comodule(const SmashAlgebra& s, const GradedModule& n, const HopfModule& y);

/// Graded algebra on A (x) k[x] with x.a = sigma(a) x + delta(a); x has degree
/// one, sigma preserves degree and delta raises it by one. sigma and delta are
/// given on the presentation generators. Basis in degree n: (i, a) meaning
/// a x^{n-i} with a in A_i, ordered like the smash basis.
struct OreExtension {
    AlgebraPtr algebra;
    AlgebraPtr base;
    std::vector<Matrix> sigma;  // per degree
    std::vector<Matrix> delta;  // degree d to d + 1 (empty at the top)
};
OreExtension ore_extension(const AlgebraPtr& a, const std::vector<Vec>& sigma_images,
                           const std::vector<Vec>& delta_images, int bound = -1, std::string xname = "x");

/// With delta = 0 and sigma of finite order n invertible in k, rebuilds the
/// extension as A # k[x] over kC_n (g acts by sigma, rho(x) = g (x) x) and
/// compares structure constants on the common basis.
Report ore_cross_check(const OreExtension& ore);

/// phi(a#b) = sum b_0 (x) (S^-1 b_{-1} a): bijectivity per degree and the
/// B-A-bimodule law on basis triples.
Report freeness_isomorphism(const SmashAlgebra& s);

/// Multiplication through tau(b (x) a) = sum (b_{-1} a) (x) b_0 compared with
/// the stored structure constants on every basis quadruple.
Report twisted_tensor_check(const SmashAlgebra& s);

}  // namespace takeuchi
