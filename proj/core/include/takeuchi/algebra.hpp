#pragma once

#include "takeuchi/matrix.hpp"
#include "takeuchi/report.hpp"

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace takeuchi {

/// Scalars as exact strings, matrices as lists of rows.
json to_json(std::span<const Scalar> v);
json to_json(const Matrix& m);


class AlgebraError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when a product would leave the truncation range 0..D.
class DegreeOverflow : public AlgebraError {
public:
    using AlgebraError::AlgebraError;
};

using Word = std::vector<std::size_t>;

struct Generator {
    std::string name;
    int degree = 1;
};

struct Term {
    Scalar coeff;
    Word word;
};

/// Homogeneous noncommutative polynomial.
using Polynomial = std::vector<Term>;

struct Presentation {
    Field field;
    std::vector<Generator> generators;
    std::vector<Polynomial> relations;
    int bound = 1;
    std::string name;

    [[nodiscard]] std::size_t generator_index(const std::string& name) const;
    [[nodiscard]] int word_degree(const Word& w) const;
    [[nodiscard]] std::string word_name(const Word& w) const;
};

class GradedAlgebra;
using AlgebraPtr = std::shared_ptr<const GradedAlgebra>;

/// Element of a truncated graded algebra, stored by homogeneous components.
struct GradedElement {
    AlgebraPtr algebra;
    std::map<int, Vec> parts;

    [[nodiscard]] bool is_zero() const;
    [[nodiscard]] Vec component(int d) const;
    friend bool operator==(const GradedElement& a, const GradedElement& b);
};

/// A graded algebra realized degreewise in degrees 0..D: a basis per degree
/// and structure constants for every basis pair whose degrees sum to at most D.
/// Degree 0 may be larger than the base field (smash products with H).
class GradedAlgebra {
public:
    using ProductFn = std::function<Vec(int, std::size_t, int, std::size_t)>;

    GradedAlgebra(Field k, int bound, std::vector<std::vector<std::string>> labels, Vec unit,
                  const ProductFn& product, std::string name = {});

    [[nodiscard]] const Field& field() const noexcept { return field_; }
    [[nodiscard]] int bound() const noexcept { return bound_; }
    [[nodiscard]] std::size_t dim(int d) const;
    [[nodiscard]] std::vector<std::size_t> dims() const;
    [[nodiscard]] const std::string& label(int d, std::size_t i) const { return labels_.at(d).at(i); }
    [[nodiscard]] const std::vector<std::string>& labels(int d) const { return labels_.at(d); }
    [[nodiscard]] const std::string& name() const noexcept { return name_; }
    void set_name(std::string n) { name_ = std::move(n); }

    /// Coordinates of the unit in degree 0.
    [[nodiscard]] const Vec& unit() const noexcept { return unit_; }
    [[nodiscard]] bool connected() const { return dim(0) == 1; }

    /// Product of basis element a of degree i with basis element b of degree j.
    [[nodiscard]] const Vec& product(int i, std::size_t a, int j, std::size_t b) const;
    /// Product of homogeneous coordinate vectors.
    [[nodiscard]] Vec multiply(int i, std::span<const Scalar> u, int j, std::span<const Scalar> v) const;
    /// Product of graded elements; throws DegreeOverflow if a nonzero part
    /// would exceed the bound.
    [[nodiscard]] GradedElement multiply(const GradedElement& u, const GradedElement& v) const;

    /// Generators as (degree, coordinates) pairs; by default a basis of the
    /// indecomposable quotient A_+ / A_+^2 chosen among basis elements.
    struct Gen {
        int degree;
        Vec coords;
        std::string name;
    };
    [[nodiscard]] const std::vector<Gen>& generators() const noexcept { return generators_; }
    void set_generators(std::vector<Gen> gens) { generators_ = std::move(gens); }
    [[nodiscard]] bool generated_in_degree_one() const;

    /// Word data for algebras realized from a presentation.
    [[nodiscard]] const std::optional<Presentation>& presentation() const noexcept { return presentation_; }
    [[nodiscard]] const std::vector<Word>& words(int d) const;
    [[nodiscard]] Vec normal_form(const Word& w) const;
    /// The word underlying basis element i of degree d.
    [[nodiscard]] const Word& basis_word(int d, std::size_t i) const;

    /// Test hook: overwrite one structure constant.
    void set_product(int i, std::size_t a, int j, std::size_t b, Vec value);

    /// Multiplication map A_i (x) A_j -> A_{i+j} as a matrix with columns
    /// indexed by a * dim(j) + b.
    [[nodiscard]] Matrix multiplication_matrix(int i, int j) const;

    [[nodiscard]] GradedElement basis_element(int d, std::size_t i) const;
    [[nodiscard]] GradedElement one() const;

    [[nodiscard]] json to_json() const;

private:
    friend GradedAlgebra realize(const Presentation& p);
    void compute_default_generators();

    Field field_;
    int bound_;
    std::vector<std::vector<std::string>> labels_;
    Vec unit_;
    // table_[i][j][a * dim(j) + b]
    std::vector<std::vector<std::vector<Vec>>> table_;
    std::vector<Gen> generators_;
    std::string name_;

    std::optional<Presentation> presentation_;
    struct WordData {
        std::vector<Word> words;
        std::map<Word, std::size_t> index;
        std::vector<Vec> normal_forms;
        std::vector<std::size_t> basis;
    };
    std::vector<WordData> word_data_;
};

/// Degreewise quotient of the free algebra by the ideal generated by the
/// relations, up to the bound. Basis words are the non-leading words for the
/// order (degree, lexicographic on generator indices).
GradedAlgebra realize(const Presentation& p);
AlgebraPtr realize_shared(const Presentation& p);

/// Exhaustive check of associativity, unit laws and relation vanishing.
Report validate_algebra(const GradedAlgebra& alg);

/// Opposite algebra (same basis, reversed product).
GradedAlgebra opposite(const GradedAlgebra& alg);

/// Parses a polynomial such as "y*x - 2*x*y", "yx - 2xy", "x^2 + 3/2 y^2"
/// over the generators of p. Juxtaposed names are split greedily (longest
/// generator name first).
Polynomial parse_polynomial(const std::string& text, const Presentation& p);

/// Presentation from generator names (all of degree 1 unless listed in
/// degrees) and textual relations.
Presentation make_presentation(const Field& k, const std::vector<std::string>& generators,
                               const std::vector<std::string>& relations, int bound, std::string name = {},
                               const std::vector<int>& degrees = {});

/// Words enumerated in increasing lexicographic order.
std::vector<Word> enumerate_words(const std::vector<Generator>& gens, int degree);

}  // namespace takeuchi
