#pragma once

#include "takeuchi/ext.hpp"

namespace takeuchi {

/// Raised when a precondition fails, e.g. a degenerate Frobenius pairing or an
/// input that is not certified AS-regular.
class RegularityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class RegularityVerdict { certified, refuted, inconclusive };
std::string to_string(RegularityVerdict v);

/// AS-regularity of a connected graded algebra, decided within bounds (N, D)
/// from a minimal resolution of the trivial right module and the groups
/// Ext^i(k, A) in internal degrees up to D.
struct RegularityCertificate {
    AlgebraPtr algebra;
    int dimension = -1;  // global dimension candidate; -1 when the resolution did not stop
    int max_level = 0;
    int bound = 0;
    int ext_d_min = 0;
    /// ext_dims[i][d - ext_d_min]: dim Ext^{i,d}(k, A).
    std::vector<std::vector<std::size_t>> ext_dims;
    int as_index = 0;  // internal degree of the surviving class
    RegularityVerdict verdict = RegularityVerdict::inconclusive;
    std::string reason;
    Report report{"AS-regularity"};

    [[nodiscard]] bool certified() const { return verdict == RegularityVerdict::certified; }
    [[nodiscard]] json to_json() const;
};

RegularityCertificate as_regular_check(const AlgebraPtr& a, int max_level, int bound);

/// Certifies A, B and the product and compares dimensions (d = d_A + d_B).
/// Fails when the product is refuted or has the wrong dimension; a factor
/// that is not certified makes the outcome inconclusive.
Report regularity_smash_check(const AlgebraPtr& a, const AlgebraPtr& b, const AlgebraPtr& product, int max_level,
                              int bound);
/// Same, with the product built as A # B from the datum.
Report regularity_smash_check(const ActionData& action, const CoactionData& coaction, int max_level, int bound);

/// Frobenius data of Ext(k, k) for an AS-regular algebra of dimension d.
struct NakayamaData {
    int dimension = 0;
    int top_degree = 0;  // internal degree l of the top class
    /// nu per bidegree (n, e): <a, b> = <b, nu(a)>; indexed [n][e - d_min].
    std::vector<std::vector<Matrix>> nu;
    /// Degree-one Nakayama automorphism of A in the algebra basis of A_1.
    Matrix mu1;
    /// mu|_1 = sign * (nu on Ext^{1,1})^*, sign = (-1)^{d+1}.
    int calibration_sign = 1;
    std::string calibration = "(-1)^(d+1) times the dual of nu on Ext^1, identity on polynomial rings";
    Report report{"Frobenius-Nakayama"};

    [[nodiscard]] json to_json() const;
};

/// Needs an Ext algebra of k from a minimal resolution of the trivial right
/// module, computed through level d with products.
NakayamaData frobenius_nakayama(const ExtAlgebra& e, int d);

/// Homological determinant. H acts on the top class of Ext^d(k, A) for right
/// modules, with the action (h f)(m) = sum h_1 f(S h_2 m) on Hom, by a
/// character alpha; the determinant entering the Nakayama formula is
/// hdet = alpha o S, the side change from right to left modules.
struct HDetData {
    HopfPtr hopf;
    int dimension = 0;
    int as_index = 0;
    Vec top_character;  // alpha on the basis
    Vec values;         // hdet(h_k) = alpha(S h_k)
    std::string convention = "hdet = alpha o S, alpha the character on the top class of Ext(k, A) for right modules";
    Report report{"homological determinant"};
    [[nodiscard]] json to_json() const;
};
HDetData hdet_action(const ActionData& action, int max_level, int bound);

/// Homological codeterminant: rho(e) = g (x) e on the top class of Ext^d(k, B)
/// for right modules under the induced coaction on Hom. g is checked to be
/// grouplike. On k[y_1..y_n] with rho(y_i) = g_i (x) y_i it is (g_1...g_n)^-1.
struct HCodetData {
    HopfPtr hopf;
    int dimension = 0;
    int as_index = 0;
    Vec g;
    std::string convention = "g the coaction coefficient on the top class of Ext(k, B) for right modules";
    Report report{"homological codeterminant"};
    [[nodiscard]] json to_json() const;
};
HCodetData hcodet_coaction(const CoactionData& coaction, int max_level, int bound);

/// mu_{A#B} on (A#B)_1 two ways: from the Frobenius structure of Ext over
/// A # B, and from mu(a # b) = sum mu_A(g a) # hdet(b_{-1}) mu_B(b_0).
Report nakayama_smash_check(const ActionData& action, const CoactionData& coaction, int max_level, int bound);

}  // namespace takeuchi
