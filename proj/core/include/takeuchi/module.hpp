#pragma once

#include "takeuchi/hopf.hpp"

namespace takeuchi {

class ModuleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Side { left, right };

/// Graded module over a truncated graded algebra R, materialized in degrees
/// 0..D. act(d, m, j, r) is m.r (right) or r.m (left) and lies in degree d + j.
class GradedModule {
public:
    /// fn(d, m, j, r) must return a vector of length dim(d + j) whenever d + j <= D.
    using ActionFn = std::function<Vec(int, std::size_t, int, std::size_t)>;

    GradedModule(AlgebraPtr r, Side side, int bound, std::vector<std::vector<std::string>> labels, const ActionFn& fn,
                 std::string name = {});

    [[nodiscard]] const AlgebraPtr& algebra() const noexcept { return r_; }
    [[nodiscard]] const Field& field() const noexcept { return r_->field(); }
    [[nodiscard]] Side side() const noexcept { return side_; }
    [[nodiscard]] int bound() const noexcept { return bound_; }
    [[nodiscard]] std::size_t dim(int d) const { return d < 0 || d > bound_ ? 0 : labels_[d].size(); }
    [[nodiscard]] std::vector<std::size_t> dims() const;
    [[nodiscard]] const std::string& label(int d, std::size_t i) const { return labels_.at(d).at(i); }
    [[nodiscard]] const std::string& name() const noexcept { return name_; }
    /// Highest degree carrying a nonzero component.
    [[nodiscard]] int top_degree() const;

    [[nodiscard]] const Vec& act(int d, std::size_t m, int j, std::size_t r) const;
    /// Action of a homogeneous algebra element on a homogeneous module vector.
    [[nodiscard]] Vec act(int d, std::span<const Scalar> m, int j, std::span<const Scalar> r) const;

    void set_action(int d, std::size_t m, int j, std::size_t r, Vec v);
    [[nodiscard]] json to_json() const;

private:
    AlgebraPtr r_;
    Side side_;
    int bound_;
    std::vector<std::vector<std::string>> labels_;
    std::string name_;
    std::vector<std::vector<std::vector<Vec>>> table_;  // table_[d][j][m * dimR(j) + r]
};

using ModulePtr = std::shared_ptr<const GradedModule>;

/// Module axioms on all basis triples within the bound.
Report validate_module(const GradedModule& m);

/// k concentrated in degree 0 via the augmentation (R must be connected).
ModulePtr trivial_module(const AlgebraPtr& r, Side side);
/// R acting on itself.
ModulePtr regular_module(const AlgebraPtr& r, Side side);

/// A graded R-module with a degree-preserving H-action making it a module over
/// R#H: right modules carry m.h, left modules carry h.m. mats[k][d] has column
/// i equal to the action of h_k on e_i.
struct HModule {
    ModulePtr module;
    HopfPtr hopf;
    std::vector<std::vector<Matrix>> mats;

    [[nodiscard]] Vec act_h(std::size_t k, int d, std::span<const Scalar> v) const;
    [[nodiscard]] Vec act_h(std::span<const Scalar> h, int d, std::span<const Scalar> v) const;
};

/// Right R#H-module compatibility: (m.h).a = sum (m.(h_1 a)).h_2; left:
/// h.(a.m) = sum (h_1 a).(h_2.m). Also checks that the H-action is a module action.
Report validate_hmodule(const HModule& m, const ActionData& algebra_action);

/// H acting on every module vector by the counit.
HModule trivial_hmodule(const ModulePtr& m, const HopfPtr& h);
/// A over A#H: h.m = h m on the left, m.h = S^-1(h) m on the right.
HModule regular_hmodule(const ActionData& action, Side side);

/// A graded B-module with an H-coaction; Hopf-module law rho(x.b) = rho(x)rho(b)
/// (right) or rho(b.x) = rho(b)rho(x) (left). coef[d][i] as in CoactionData.
struct HopfModule {
    ModulePtr module;
    HopfPtr hopf;
    std::vector<std::vector<Vec>> coef;

    [[nodiscard]] Vec coact(int d, std::span<const Scalar> v) const;
};

Report validate_hopf_module(const HopfModule& x, const CoactionData& algebra_coaction);

/// Coaction 1 (x) x on every vector.
HopfModule trivial_hopf_module(const ModulePtr& m, const HopfPtr& h);
/// B as a Hopf module over itself with its own coaction.
HopfModule regular_hopf_module(const CoactionData& co, Side side);

}  // namespace takeuchi
