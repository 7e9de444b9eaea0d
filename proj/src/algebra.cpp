#include "relhom/algebra.hpp"

#include <algorithm>

namespace relhom {

Algebra::Algebra(FieldSpec field, std::size_t dim, std::vector<std::string> basis_labels,
                 std::vector<Scalar> structure, std::vector<Scalar> unit)
    : field_(field), dim_(dim), labels_(std::move(basis_labels)),
      structure_(std::move(structure)), unit_(std::move(unit)) {
    if (labels_.empty()) {
        labels_.resize(dim_);
        for (std::size_t i = 0; i < dim_; ++i) labels_[i] = "b" + std::to_string(i);
    }
    if (labels_.size() != dim_) throw DimensionMismatch("basis label count");
    if (structure_.size() != dim_ * dim_ * dim_) throw DimensionMismatch("structure tensor size");
    if (unit_.size() != dim_) throw DimensionMismatch("unit vector size");
    for (auto& e : structure_) e = field_.canon(e);
    for (auto& e : unit_) e = field_.canon(e);

    left_.reserve(dim_);
    right_.reserve(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        Matrix l(field_, dim_, dim_);
        Matrix r(field_, dim_, dim_);
        for (std::size_t j = 0; j < dim_; ++j)
            for (std::size_t k = 0; k < dim_; ++k) {
                l.set(k, j, c(i, j, k));  // left_mult(i) * e_j = b_i b_j
                r.set(k, j, c(j, i, k));  // right_mult(i) * e_j = b_j b_i
            }
        left_.push_back(std::move(l));
        right_.push_back(std::move(r));
    }
}

Matrix Algebra::left_mult_of(const std::vector<Scalar>& coords) const {
    if (coords.size() != dim_) throw DimensionMismatch("coordinate vector size");
    Matrix m(field_, dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        if (!FieldSpec::is_zero(coords[i])) m = m + left_[i].scaled(coords[i]);
    return m;
}

Matrix Algebra::right_mult_of(const std::vector<Scalar>& coords) const {
    if (coords.size() != dim_) throw DimensionMismatch("coordinate vector size");
    Matrix m(field_, dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        if (!FieldSpec::is_zero(coords[i])) m = m + right_[i].scaled(coords[i]);
    return m;
}

std::vector<Scalar> Algebra::multiply(const std::vector<Scalar>& u,
                                      const std::vector<Scalar>& v) const {
    if (u.size() != dim_ || v.size() != dim_) throw DimensionMismatch("coordinate vector size");
    std::vector<Scalar> out(dim_, Scalar(0));
    for (std::size_t i = 0; i < dim_; ++i) {
        if (FieldSpec::is_zero(u[i])) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (FieldSpec::is_zero(v[j])) continue;
            Scalar uv = u[i] * v[j];
            for (std::size_t k = 0; k < dim_; ++k) out[k] += uv * c(i, j, k);
        }
    }
    for (auto& e : out) e = field_.canon(e);
    return out;
}

bool Algebra::structurally_equal(const Algebra& other) const {
    return field_ == other.field_ && dim_ == other.dim_ && structure_ == other.structure_ &&
           unit_ == other.unit_;
}

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return a->structurally_equal(*b);
}

ValidationReport validate_algebra(const Algebra& a) {
    std::size_t n = a.dim();
    // (b_i b_j) b_k = b_i (b_j b_k): compare right_mult(k)*left_mult(i) columns
    // via the structure tensor directly.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<Scalar> bij(n);
            for (std::size_t k = 0; k < n; ++k) bij[k] = a.c(i, j, k);
            for (std::size_t k = 0; k < n; ++k) {
                std::vector<Scalar> ek(n, Scalar(0));
                ek[k] = Scalar(1);
                std::vector<Scalar> lhs = a.multiply(bij, ek);
                std::vector<Scalar> bjk(n);
                for (std::size_t t = 0; t < n; ++t) bjk[t] = a.c(j, k, t);
                std::vector<Scalar> ei(n, Scalar(0));
                ei[i] = Scalar(1);
                std::vector<Scalar> rhs = a.multiply(ei, bjk);
                if (lhs != rhs)
                    return ValidationReport::fail(
                        "NotAssociative(" + std::to_string(i) + "," + std::to_string(j) + "," +
                            std::to_string(k) + ")",
                        "associativity fails on basis triple");
            }
        }
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Scalar> ei(n, Scalar(0));
        ei[i] = Scalar(1);
        if (a.multiply(a.unit(), ei) != ei || a.multiply(ei, a.unit()) != ei)
            return ValidationReport::fail("BadUnit(" + std::to_string(i) + ")",
                                          "unit does not act as identity on basis element");
    }
    return ValidationReport::pass();
}

GroupPresentation::GroupPresentation(std::vector<std::string> elems,
                                     std::vector<std::vector<std::size_t>> tab)
    : order(elems.size()), elements(std::move(elems)), table(std::move(tab)) {
    if (table.size() != order) throw DimensionMismatch("group table size");
    for (auto& row : table) {
        if (row.size() != order) throw DimensionMismatch("group table row size");
        for (std::size_t v : row)
            if (v >= order) throw ValidationError("group table entry out of range");
    }
    // derive identity and inverses; validate_group re-checks the axioms
    bool found = false;
    for (std::size_t e = 0; e < order; ++e) {
        bool is_id = true;
        for (std::size_t j = 0; j < order; ++j)
            if (table[e][j] != j || table[j][e] != j) {
                is_id = false;
                break;
            }
        if (is_id) {
            identity = e;
            found = true;
            break;
        }
    }
    if (!found && order > 0) throw ValidationError("group table has no identity element");
    inverses.assign(order, 0);
    for (std::size_t i = 0; i < order; ++i) {
        bool inv_found = false;
        for (std::size_t j = 0; j < order; ++j)
            if (table[i][j] == identity && table[j][i] == identity) {
                inverses[i] = j;
                inv_found = true;
                break;
            }
        if (!inv_found) throw ValidationError("group element has no inverse");
    }
}

ValidationReport validate_group(const GroupPresentation& g) {
    for (std::size_t i = 0; i < g.order; ++i)
        for (std::size_t j = 0; j < g.order; ++j)
            for (std::size_t k = 0; k < g.order; ++k)
                if (g.table[g.table[i][j]][k] != g.table[i][g.table[j][k]])
                    return ValidationReport::fail("NotAssociative(" + std::to_string(i) + "," +
                                                      std::to_string(j) + "," + std::to_string(k) +
                                                      ")",
                                                  "group table is not associative");
    for (std::size_t j = 0; j < g.order; ++j)
        if (g.table[g.identity][j] != j || g.table[j][g.identity] != j)
            return ValidationReport::fail("BadIdentity", "identity law fails");
    for (std::size_t i = 0; i < g.order; ++i)
        if (g.table[i][g.inverses[i]] != g.identity || g.table[g.inverses[i]][i] != g.identity)
            return ValidationReport::fail("BadInverse(" + std::to_string(i) + ")",
                                          "inverse law fails");
    return ValidationReport::pass();
}

ValidationReport validate_embedding(const Embedding& e) {
    const Algebra& s = *e.source;
    const Algebra& r = *e.target;
    if (!(s.field() == r.field()))
        return ValidationReport::fail("FieldMismatch", "source and target fields differ");
    if (e.map.rows() != r.dim() || e.map.cols() != s.dim())
        return ValidationReport::fail("BadShape", "embedding matrix shape");
    if (rank(e.map) != s.dim())
        return ValidationReport::fail("NotInjective", "embedding matrix has a kernel");
    if (e.map.apply(s.unit()) != r.unit())
        return ValidationReport::fail("NotUnital", "embedding does not preserve the unit");
    for (std::size_t i = 0; i < s.dim(); ++i)
        for (std::size_t j = 0; j < s.dim(); ++j) {
            std::vector<Scalar> bi(s.dim(), Scalar(0)), bj(s.dim(), Scalar(0));
            bi[i] = Scalar(1);
            bj[j] = Scalar(1);
            std::vector<Scalar> lhs = e.image(s.multiply(bi, bj));
            std::vector<Scalar> rhs = r.multiply(e.image(bi), e.image(bj));
            if (lhs != rhs)
                return ValidationReport::fail(
                    "NotMultiplicative(" + std::to_string(i) + "," + std::to_string(j) + ")",
                    "embedding not multiplicative on basis pair");
        }
    return ValidationReport::pass();
}

AlgebraPtr group_algebra(FieldSpec field, const GroupPresentation& g) {
    ValidationReport rep = validate_group(g);
    if (!rep.ok) throw ValidationError("group_algebra: " + rep.code);
    std::size_t n = g.order;
    std::vector<Scalar> structure(n * n * n, Scalar(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) structure[(i * n + j) * n + g.table[i][j]] = Scalar(1);
    std::vector<Scalar> unit(n, Scalar(0));
    unit[g.identity] = Scalar(1);
    return std::make_shared<Algebra>(field, n, g.elements, std::move(structure), std::move(unit));
}

namespace {

ValidationReport check_automorphism(const Algebra& s, const Matrix& m) {
    if (m.rows() != s.dim() || m.cols() != s.dim())
        return ValidationReport::fail("BadShape", "automorphism matrix shape");
    if (rank(m) != s.dim()) return ValidationReport::fail("NotInvertible", "singular matrix");
    if (m.apply(s.unit()) != s.unit())
        return ValidationReport::fail("NotUnital", "does not fix the unit");
    for (std::size_t i = 0; i < s.dim(); ++i)
        for (std::size_t j = 0; j < s.dim(); ++j) {
            std::vector<Scalar> bi(s.dim(), Scalar(0)), bj(s.dim(), Scalar(0));
            bi[i] = Scalar(1);
            bj[j] = Scalar(1);
            if (m.apply(s.multiply(bi, bj)) != s.multiply(m.apply(bi), m.apply(bj)))
                return ValidationReport::fail("NotMultiplicative", "not multiplicative");
        }
    return ValidationReport::pass();
}

}  // namespace

SkewGroupRing skew_group_ring(AlgebraPtr s, const GroupPresentation& g,
                              const std::vector<Matrix>& action) {
    ValidationReport grep = validate_group(g);
    if (!grep.ok) throw ValidationError("skew_group_ring: " + grep.code);
    if (action.size() != g.order) throw DimensionMismatch("one action matrix per group element");
    for (std::size_t gi = 0; gi < g.order; ++gi) {
        ValidationReport rep = check_automorphism(*s, action[gi]);
        if (!rep.ok)
            throw ValidationError("NotAnAutomorphism(" + g.elements[gi] + "): " + rep.code);
    }
    if (!action[g.identity].is_identity())
        throw ValidationError("NotAnAction: identity element must act trivially");
    for (std::size_t gi = 0; gi < g.order; ++gi)
        for (std::size_t gj = 0; gj < g.order; ++gj)
            if (!(action[gi] * action[gj] == action[g.table[gi][gj]]))
                throw ValidationError("NotAnAction: composition mismatch at (" + g.elements[gi] +
                                      "," + g.elements[gj] + ")");

    const Algebra& base = *s;
    std::size_t ns = base.dim();
    std::size_t n = ns * g.order;
    auto index = [&](std::size_t b, std::size_t gi) { return b * g.order + gi; };

    // (b_i g)(b_j h) = b_i * sigma_g(b_j) (gh)
    std::vector<Scalar> structure(n * n * n, Scalar(0));
    for (std::size_t bi = 0; bi < ns; ++bi)
        for (std::size_t gi = 0; gi < g.order; ++gi)
            for (std::size_t bj = 0; bj < ns; ++bj)
                for (std::size_t gj = 0; gj < g.order; ++gj) {
                    std::vector<Scalar> ebj(ns, Scalar(0));
                    ebj[bj] = Scalar(1);
                    std::vector<Scalar> ebi(ns, Scalar(0));
                    ebi[bi] = Scalar(1);
                    std::vector<Scalar> prod = base.multiply(ebi, action[gi].apply(ebj));
                    std::size_t gh = g.table[gi][gj];
                    std::size_t row = index(bi, gi) * n + index(bj, gj);
                    for (std::size_t k = 0; k < ns; ++k)
                        structure[row * n + index(k, gh)] = prod[k];
                }

    std::vector<Scalar> unit(n, Scalar(0));
    for (std::size_t k = 0; k < ns; ++k) unit[index(k, g.identity)] = base.unit()[k];

    std::vector<std::string> labels(n);
    for (std::size_t b = 0; b < ns; ++b)
        for (std::size_t gi = 0; gi < g.order; ++gi)
            labels[index(b, gi)] = base.basis_labels()[b] + "|" + g.elements[gi];

    auto ring = std::make_shared<Algebra>(base.field(), n, std::move(labels),
                                          std::move(structure), std::move(unit));
    Matrix iota(base.field(), n, ns);
    for (std::size_t b = 0; b < ns; ++b) iota.set(index(b, g.identity), b, Scalar(1));

    return SkewGroupRing{ring, Embedding{s, ring, std::move(iota)}, s, g, action};
}

std::size_t BaseChangeRing::index(std::size_t b, std::size_t bp) const {
    return b * factor->dim() + bp;
}

BaseChangeRing base_change_algebra(AlgebraPtr s, AlgebraPtr sprime) {
    const Algebra& a = *s;
    const Algebra& b = *sprime;
    if (!(a.field() == b.field())) throw FieldMismatch("base_change_algebra: fields differ");
    std::size_t na = a.dim(), nb = b.dim(), n = na * nb;
    auto index = [&](std::size_t i, std::size_t j) { return i * nb + j; };

    std::vector<Scalar> structure(n * n * n, Scalar(0));
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < nb; ++j)
            for (std::size_t k = 0; k < na; ++k)
                for (std::size_t l = 0; l < nb; ++l) {
                    std::size_t row = index(i, j) * n + index(k, l);
                    for (std::size_t m = 0; m < na; ++m)
                        for (std::size_t t = 0; t < nb; ++t) {
                            Scalar v = a.field().mul(a.c(i, k, m), b.c(j, l, t));
                            if (!FieldSpec::is_zero(v)) structure[row * n + index(m, t)] = v;
                        }
                }

    std::vector<Scalar> unit(n, Scalar(0));
    for (std::size_t m = 0; m < na; ++m)
        for (std::size_t t = 0; t < nb; ++t)
            unit[index(m, t)] = a.field().mul(a.unit()[m], b.unit()[t]);

    std::vector<std::string> labels(n);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < nb; ++j)
            labels[index(i, j)] = a.basis_labels()[i] + "(x)" + b.basis_labels()[j];

    auto ring = std::make_shared<Algebra>(a.field(), n, std::move(labels), std::move(structure),
                                          std::move(unit));
    Matrix iota(a.field(), n, na);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t t = 0; t < nb; ++t) iota.set(index(i, t), i, b.unit()[t]);

    return BaseChangeRing{ring, Embedding{s, ring, std::move(iota)}, s, sprime};
}

AlgebraPtr opposite_algebra(const AlgebraPtr& a) {
    std::size_t n = a->dim();
    std::vector<Scalar> structure(n * n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) structure[(i * n + j) * n + k] = a->c(j, i, k);
    return std::make_shared<Algebra>(a->field(), n, a->basis_labels(), std::move(structure),
                                     std::vector<Scalar>(a->unit()));
}

}  // namespace relhom
