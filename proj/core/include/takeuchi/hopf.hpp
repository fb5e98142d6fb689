#pragma once

#include "takeuchi/algebra.hpp"

#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace takeuchi {

class HopfError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Finite-dimensional Hopf algebra given by structure constants on a basis
/// h_0..h_{n-1}. Tensors in H (x) H use the index a * n + b.
struct HopfData {
    Field field;
    std::size_t n = 0;
    std::vector<std::string> labels;
    std::vector<Vec> mult;     // mult[a * n + b] = h_a h_b
    Vec unit;
    std::vector<Vec> comult;   // comult[a] = Delta(h_a), length n * n
    Vec counit;
    Matrix antipode;           // column a = S(h_a)
    Matrix antipode_inv;
    std::string name;

    [[nodiscard]] std::size_t dim() const noexcept { return n; }
    [[nodiscard]] Vec basis(std::size_t a) const { return unit_vec(field, n, a); }
    [[nodiscard]] Vec multiply(std::span<const Scalar> u, std::span<const Scalar> v) const;
    [[nodiscard]] Vec coproduct(std::span<const Scalar> u) const;
    [[nodiscard]] Scalar eps(std::span<const Scalar> u) const { return dot(counit, u); }
    [[nodiscard]] Vec S(std::span<const Scalar> u) const { return antipode.apply(u); }
    [[nodiscard]] Vec S_inv(std::span<const Scalar> u) const { return antipode_inv.apply(u); }
    /// Delta(h) = g (x) g and eps(g) = 1.
    [[nodiscard]] bool is_grouplike(std::span<const Scalar> g) const;
    [[nodiscard]] bool is_trivial() const { return n == 1; }
    [[nodiscard]] std::string element_string(std::span<const Scalar> u) const;
    [[nodiscard]] json to_json() const;
};

using HopfPtr = std::shared_ptr<const HopfData>;

/// Group algebra of the group with multiplication table table[g][h] = index of gh.
HopfData group_algebra(const Field& k, const std::vector<std::vector<std::size_t>>& table,
                       std::vector<std::string> labels = {}, std::string name = {});
HopfData cyclic_group_algebra(const Field& k, std::size_t order);
HopfData symmetric_group_s3(const Field& k);
HopfData trivial_hopf(const Field& k);
/// Sweedler's 4-dimensional algebra on {1, g, x, gx}: g^2 = 1, x^2 = 0,
/// xg = -gx, Delta(x) = g (x) x + x (x) 1. The antipode is solved from the axiom.
HopfData sweedler_hopf(const Field& k);

/// Solves m(S (x) id)Delta = u eps for S by linear algebra; empty if inconsistent.
std::optional<Matrix> solve_antipode(const HopfData& h);

/// Exact inverse of S; throws HopfError("antipode not bijective") when singular.
Matrix antipode_inverse(const HopfData& h);

/// Fills antipode_inv and returns a shared handle.
HopfPtr finalize_hopf(HopfData h);

Report validate_hopf(const HopfData& h);

/// Character of H: values on the basis, multiplicative and unital.
struct Character {
    HopfPtr hopf;
    Vec values;
    [[nodiscard]] Scalar operator()(std::span<const Scalar> h) const { return dot(values, h); }
};
Report validate_character(const Character& c);

class ActionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Degree-preserving left action of H on a graded algebra (or the underlying
/// graded space of a module); mats[k][d] has column b equal to h_k acting on e_b.
struct ActionData {
    HopfPtr hopf;
    AlgebraPtr algebra;
    std::vector<std::vector<Matrix>> mats;

    [[nodiscard]] Vec act(std::size_t k, int d, std::span<const Scalar> v) const { return mats[k][d].apply(v); }
    [[nodiscard]] Vec act(std::span<const Scalar> h, int d, std::span<const Scalar> v) const;
};

/// Left coaction rho: B_d -> H (x) B_d; coef[d][b] has length n * dim(d) with
/// the coefficient of h_k (x) e_c at k * dim(d) + c.
struct CoactionData {
    HopfPtr hopf;
    AlgebraPtr algebra;
    std::vector<std::vector<Vec>> coef;

    [[nodiscard]] Vec coact(int d, std::span<const Scalar> v) const;
};

/// Product in H (x) B_i times H (x) B_j.
Vec tensor_product_hb(const HopfData& h, const GradedAlgebra& b, int i, std::span<const Scalar> u, int j,
                      std::span<const Scalar> v);

/// Extends generator images (images[k][g] in the degree of generator g) to
/// all of A via h(aa') = sum (h_1 a)(h_2 a'); throws ActionError when the
/// relation ideal is not stable or a module-algebra axiom fails.
ActionData extend_action(const HopfPtr& h, const AlgebraPtr& a, const std::vector<std::vector<Vec>>& images);
/// images[g] has length n * dim(deg g).
CoactionData extend_coaction(const HopfPtr& h, const AlgebraPtr& b, const std::vector<Vec>& images);

ActionData trivial_action(const HopfPtr& h, const AlgebraPtr& a);
CoactionData trivial_coaction(const HopfPtr& h, const AlgebraPtr& b);

Report validate_action(const ActionData& act);
Report validate_coaction(const CoactionData& co);

/// H viewed as a graded algebra concentrated in degree 0, truncated at D.
AlgebraPtr hopf_as_algebra(const HopfPtr& h, int bound);
/// The regular coaction Delta of H on hopf_as_algebra(H, D).
CoactionData regular_coaction(const HopfPtr& h, const AlgebraPtr& b);

/// Group data attached to a group algebra built by group_algebra.
struct GroupTable {
    std::vector<std::vector<std::size_t>> table;
    [[nodiscard]] std::size_t order() const { return table.size(); }
    [[nodiscard]] std::size_t identity() const;
};
GroupTable cyclic_group_table(std::size_t order);

/// t(g, l) = value^(g l) on cyclic groups of the given orders.
std::vector<std::vector<Scalar>> cyclic_bicharacter(const Field& k, std::size_t g_order, std::size_t l_order,
                                                    const Scalar& value);
/// Checks t(gg', l) = t(g,l) t(g',l), t(g, ll') = t(g,l) t(g,l') and t nonzero.
Report validate_bicharacter(const GroupTable& g, const GroupTable& l, const std::vector<std::vector<Scalar>>& t);

/// l acts on a generator of G-degree g by t(g, l). H must be the group algebra
/// of L with basis ordered as in the table.
ActionData bicharacter_action(const HopfPtr& h, const AlgebraPtr& a, const GroupTable& g, const GroupTable& l,
                              const std::vector<std::vector<Scalar>>& t, const std::vector<std::size_t>& gen_degrees);
/// rho(b) = l (x) b for a generator of L-degree l.
CoactionData bicharacter_coaction(const HopfPtr& h, const AlgebraPtr& b, const std::vector<std::size_t>& gen_degrees);

/// Smallest subspace of k^dim containing seeds and closed under the maps in
/// components(v) (one vector per Hopf basis element). Used both for
/// comodule closures (matrix-coefficient maps) and H-submodule generation.
struct Closure {
    std::vector<Vec> basis;
    /// coeffs[k] has column i = coordinates of components(basis_i)[k] in basis.
    std::vector<Matrix> coeffs;
};
Closure closure(const Field& k, std::size_t dim, std::size_t n, const std::vector<Vec>& seeds,
                const std::function<std::vector<Vec>(const Vec&)>& components);

/// Comodule closure for a coaction on k^dim given as a function returning
/// the H-components of rho(v).
Closure comodule_closure(const HopfData& h, std::size_t dim, const std::vector<Vec>& seeds,
                         const std::function<std::vector<Vec>(const Vec&)>& rho_components);

}  // namespace takeuchi
