#pragma once

#include <memory>
#include <string>
#include <vector>

#include "relhom/matrix.hpp"

namespace relhom {

/// Outcome of a structural validator. `ok()` or a first-violation report
/// with a short machine-readable code ("NotAssociative(0,1,2)", ...).
struct ValidationReport {
    bool ok = true;
    std::string code;
    std::string detail;

    static ValidationReport pass() { return {}; }
    static ValidationReport fail(std::string c, std::string d) {
        return {false, std::move(c), std::move(d)};
    }
};

/// Finite-dimensional associative unital algebra presented by structure
/// constants: c[i][j][k] is the coordinate of basis_k in basis_i * basis_j.
class Algebra {
public:
    Algebra(FieldSpec field, std::size_t dim, std::vector<std::string> basis_labels,
            std::vector<Scalar> structure, std::vector<Scalar> unit);

    const FieldSpec& field() const { return field_; }
    std::size_t dim() const { return dim_; }
    const std::vector<std::string>& basis_labels() const { return labels_; }
    const std::vector<Scalar>& unit() const { return unit_; }
    const Scalar& c(std::size_t i, std::size_t j, std::size_t k) const {
        return structure_[(i * dim_ + j) * dim_ + k];
    }

    /// Matrix of left multiplication by basis element i.
    const Matrix& left_mult(std::size_t i) const { return left_[i]; }
    /// Matrix of right multiplication by basis element j.
    const Matrix& right_mult(std::size_t j) const { return right_[j]; }

    Matrix left_mult_of(const std::vector<Scalar>& coords) const;
    Matrix right_mult_of(const std::vector<Scalar>& coords) const;

    /// Product of two coordinate vectors.
    std::vector<Scalar> multiply(const std::vector<Scalar>& u, const std::vector<Scalar>& v) const;

    bool structurally_equal(const Algebra& other) const;

private:
    FieldSpec field_;
    std::size_t dim_;
    std::vector<std::string> labels_;
    std::vector<Scalar> structure_;
    std::vector<Scalar> unit_;
    std::vector<Matrix> left_, right_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b);

/// Associativity on all basis triples and the two-sided unit law.
ValidationReport validate_algebra(const Algebra& a);

/// Finite group given by a multiplication table of element indices.
/// Identity and inverses are derived on construction and re-checked by the
/// validator.
struct GroupPresentation {
    std::size_t order = 0;
    std::vector<std::string> elements;
    std::vector<std::vector<std::size_t>> table;  // table[i][j] = index of g_i * g_j
    std::size_t identity = 0;
    std::vector<std::size_t> inverses;

    GroupPresentation() = default;
    GroupPresentation(std::vector<std::string> elems, std::vector<std::vector<std::size_t>> tab);
};

ValidationReport validate_group(const GroupPresentation& g);

/// Unital algebra embedding S -> R, given on basis coordinates.
struct Embedding {
    AlgebraPtr source;
    AlgebraPtr target;
    Matrix map;  // dim(target) x dim(source)

    /// Image of a source coordinate vector.
    std::vector<Scalar> image(const std::vector<Scalar>& v) const { return map.apply(v); }
};

/// Injectivity, unitality, multiplicativity on all basis pairs.
ValidationReport validate_embedding(const Embedding& e);

AlgebraPtr group_algebra(FieldSpec field, const GroupPresentation& g);

/// Skew group ring S*G together with its construction data; basis labels are
/// "b|g" ordered lexicographically in (basis, group element).
struct SkewGroupRing {
    AlgebraPtr ring;
    Embedding iota;
    AlgebraPtr base;
    GroupPresentation group;
    std::vector<Matrix> action;  // one automorphism matrix per group element

    std::size_t index(std::size_t b, std::size_t g) const { return b * group.order + g; }
};

/// Throws ValidationError (NotAnAutomorphism / NotAnAction) on bad input.
SkewGroupRing skew_group_ring(AlgebraPtr s, const GroupPresentation& g,
                              const std::vector<Matrix>& action);

/// R = S (x) S' over the common base field, with the embedding s -> s(x)1.
struct BaseChangeRing {
    AlgebraPtr ring;
    Embedding iota;
    AlgebraPtr base;
    AlgebraPtr factor;

    std::size_t index(std::size_t b, std::size_t bp) const;
};

BaseChangeRing base_change_algebra(AlgebraPtr s, AlgebraPtr sprime);

AlgebraPtr opposite_algebra(const AlgebraPtr& a);

}  // namespace relhom
