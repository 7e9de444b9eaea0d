#include "relhom/module.hpp"

namespace relhom {

namespace {

void require_same_algebra(const Module& a, const Module& b) {
    if (!same_algebra(a.algebra(), b.algebra()))
        throw AlgebraMismatch("modules over different algebras");
}

}  // namespace

Module::Module(AlgebraPtr algebra, std::size_t dim, std::vector<Matrix> action)
    : algebra_(std::move(algebra)), dim_(dim), action_(std::move(action)) {
    if (action_.size() != algebra_->dim())
        throw DimensionMismatch("one action matrix per algebra basis element");
    for (const Matrix& a : action_)
        if (a.rows() != dim_ || a.cols() != dim_)
            throw DimensionMismatch("action matrix shape");
}

Module Module::regular(AlgebraPtr algebra) {
    std::vector<Matrix> action;
    action.reserve(algebra->dim());
    for (std::size_t i = 0; i < algebra->dim(); ++i) action.push_back(algebra->left_mult(i));
    std::size_t d = algebra->dim();
    return Module(std::move(algebra), d, std::move(action));
}

Module Module::zero(AlgebraPtr algebra) {
    std::vector<Matrix> action(algebra->dim(), Matrix(algebra->field(), 0, 0));
    return Module(std::move(algebra), 0, std::move(action));
}

Matrix Module::act(const std::vector<Scalar>& coords) const {
    if (coords.size() != algebra_->dim()) throw DimensionMismatch("coordinate vector size");
    Matrix m(field(), dim_, dim_);
    for (std::size_t i = 0; i < coords.size(); ++i)
        if (!FieldSpec::is_zero(coords[i])) m = m + action_[i].scaled(coords[i]);
    return m;
}

ValidationReport validate_module(const Module& m) {
    const Algebra& a = *m.algebra();
    std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Matrix lhs = m.action(i) * m.action(j);
            Matrix rhs(m.field(), m.dim(), m.dim());
            for (std::size_t k = 0; k < n; ++k)
                if (!FieldSpec::is_zero(a.c(i, j, k))) rhs = rhs + m.action(k).scaled(a.c(i, j, k));
            if (!(lhs == rhs))
                return ValidationReport::fail(
                    "NotAModule(" + std::to_string(i) + "," + std::to_string(j) + ")",
                    "action does not respect the structure constants");
        }
    if (!m.act(a.unit()).is_identity())
        return ValidationReport::fail("BadUnitAction", "unit does not act as identity");
    return ValidationReport::pass();
}

ModuleMap ModuleMap::zero(const Module& src, const Module& tgt) {
    return ModuleMap{src, tgt, Matrix(src.field(), tgt.dim(), src.dim())};
}

ModuleMap ModuleMap::identity(const Module& m) {
    return ModuleMap{m, m, Matrix::identity(m.field(), m.dim())};
}

ValidationReport validate_module_map(const ModuleMap& f) {
    if (!same_algebra(f.source.algebra(), f.target.algebra()))
        return ValidationReport::fail("AlgebraMismatch", "source and target algebras differ");
    if (f.matrix.rows() != f.target.dim() || f.matrix.cols() != f.source.dim())
        return ValidationReport::fail("BadShape", "matrix shape");
    for (std::size_t i = 0; i < f.source.algebra()->dim(); ++i)
        if (!(f.matrix * f.source.action(i) == f.target.action(i) * f.matrix))
            return ValidationReport::fail("NotEquivariant(" + std::to_string(i) + ")",
                                          "matrix does not intertwine the actions");
    return ValidationReport::pass();
}

ModuleMap compose(const ModuleMap& second, const ModuleMap& first) {
    if (first.target.dim() != second.source.dim() ||
        !same_algebra(first.target.algebra(), second.source.algebra()))
        throw DimensionMismatch("compose: maps are not composable");
    return ModuleMap{first.source, second.target, second.matrix * first.matrix};
}

ValidationReport validate_ses(const ShortExactSequence& s) {
    if (s.i.target.dim() != s.p.source.dim())
        return ValidationReport::fail("NotComposable", "middle terms differ");
    std::size_t ra = rank(s.i.matrix);
    std::size_t rp = rank(s.p.matrix);
    if (ra != s.i.source.dim()) return ValidationReport::fail("NotInjective", "i has a kernel");
    if (rp != s.p.target.dim()) return ValidationReport::fail("NotSurjective", "p is not onto");
    if (!(s.p.matrix * s.i.matrix).is_zero())
        return ValidationReport::fail("NotAComplex", "p o i != 0");
    if (ra + rp != s.i.target.dim())
        return ValidationReport::fail("NotExact", "image(i) != kernel(p)");
    if (s.i.source.dim() + s.p.target.dim() != s.i.target.dim())
        return ValidationReport::fail("BadDimensions", "dim B != dim A + dim C");
    return ValidationReport::pass();
}

std::vector<ModuleMap> hom_space(const Module& m, const Module& n) {
    require_same_algebra(m, n);
    const FieldSpec& f = m.field();
    std::size_t nb = m.algebra()->dim();
    std::size_t dm = m.dim(), dn = n.dim();
    // Unknown X (dn x dm), row-major vec. Equations X*A_i - B_i*X = 0.
    Matrix system(f, nb * dn * dm, dn * dm);
    for (std::size_t i = 0; i < nb; ++i) {
        const Matrix& a = m.action(i);
        const Matrix& b = n.action(i);
        for (std::size_t r = 0; r < dn; ++r)
            for (std::size_t s = 0; s < dm; ++s) {
                std::size_t row = (i * dn + r) * dm + s;
                for (std::size_t t = 0; t < dm; ++t) {
                    // + X[r][t] * a[t][s]
                    std::size_t col = r * dm + t;
                    system.set(row, col, f.add(system.at(row, col), a.at(t, s)));
                }
                for (std::size_t t = 0; t < dn; ++t) {
                    // - b[r][t] * X[t][s]
                    std::size_t col = t * dm + s;
                    system.set(row, col, f.sub(system.at(row, col), b.at(r, t)));
                }
            }
    }
    Matrix basis = kernel(system);
    std::vector<ModuleMap> out;
    out.reserve(basis.cols());
    for (std::size_t j = 0; j < basis.cols(); ++j) {
        Matrix phi = unvectorize(f, dn, dm, column_vector(f, basis.column(j)));
        out.push_back(ModuleMap{m, n, std::move(phi)});
    }
    return out;
}

std::optional<Matrix> hom_coordinates(const std::vector<ModuleMap>& basis, const Matrix& f) {
    if (basis.empty()) {
        if (f.is_zero()) return Matrix(f.field(), 0, 1);
        return std::nullopt;
    }
    const FieldSpec& field = f.field();
    Matrix stacked(field, f.rows() * f.cols(), basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j)
        stacked.set_column(j, vectorize(basis[j].matrix).column(0));
    return solve(stacked, vectorize(f));
}

SubmoduleResult kernel_module(const ModuleMap& f) {
    const FieldSpec& field = f.matrix.field();
    Matrix k = kernel(f.matrix);  // source.dim x kd
    std::size_t kd = k.cols();
    std::vector<Matrix> action;
    action.reserve(f.source.algebra()->dim());
    for (std::size_t i = 0; i < f.source.algebra()->dim(); ++i) {
        // restrict: solve k * Y = action_i * k (unique, k has full column rank)
        auto y = solve(k, f.source.action(i) * k);
        if (!y) throw ValidationError("kernel is not action-stable (map is not a morphism)");
        action.push_back(std::move(*y));
    }
    Module mod(f.source.algebra(), kd, std::move(action));
    return SubmoduleResult{mod, ModuleMap{mod, f.source, k}};
    (void)field;
}

QuotientResult cokernel_module(const ModuleMap& f) {
    Matrix image = column_space(f.matrix);
    QuotientMaps q = quotient(f.target.dim(), image);
    std::vector<Matrix> action;
    action.reserve(f.target.algebra()->dim());
    for (std::size_t i = 0; i < f.target.algebra()->dim(); ++i)
        action.push_back(q.projection * f.target.action(i) * q.section);
    Module mod(f.target.algebra(), q.projection.rows(), std::move(action));
    return QuotientResult{mod, ModuleMap{f.target, mod, q.projection}};
}

DirectSum direct_sum(const std::vector<Module>& ms) {
    if (ms.empty()) throw ValidationError("direct_sum of an empty list needs an algebra; use Module::zero");
    for (std::size_t i = 1; i < ms.size(); ++i) require_same_algebra(ms[0], ms[i]);
    const FieldSpec& f = ms[0].field();
    std::size_t total = 0;
    for (const Module& m : ms) total += m.dim();

    std::vector<Matrix> action;
    for (std::size_t i = 0; i < ms[0].algebra()->dim(); ++i) {
        Matrix a(f, total, total);
        std::size_t off = 0;
        for (const Module& m : ms) {
            for (std::size_t r = 0; r < m.dim(); ++r)
                for (std::size_t c = 0; c < m.dim(); ++c)
                    a.set(off + r, off + c, m.action(i).at(r, c));
            off += m.dim();
        }
        action.push_back(std::move(a));
    }
    Module sum(ms[0].algebra(), total, std::move(action));

    DirectSum out{sum, {}, {}};
    std::size_t off = 0;
    for (const Module& m : ms) {
        Matrix inj(f, total, m.dim());
        Matrix prj(f, m.dim(), total);
        for (std::size_t r = 0; r < m.dim(); ++r) {
            inj.set(off + r, r, Scalar(1));
            prj.set(r, off + r, Scalar(1));
        }
        out.injections.push_back(ModuleMap{m, sum, std::move(inj)});
        out.projections.push_back(ModuleMap{sum, m, std::move(prj)});
        off += m.dim();
    }
    return out;
}

Pushout pushout(const ModuleMap& f, const ModuleMap& g) {
    if (f.source.dim() != g.source.dim() || !same_algebra(f.source.algebra(), g.source.algebra()))
        throw AlgebraMismatch("pushout: maps need a common source");
    DirectSum bc = direct_sum({f.target, g.target});
    Matrix combined = vstack(f.matrix, -g.matrix);
    ModuleMap diag{f.source, bc.module, std::move(combined)};
    QuotientResult q = cokernel_module(diag);
    ModuleMap from_b = compose(q.projection, bc.injections[0]);
    ModuleMap from_c = compose(q.projection, bc.injections[1]);
    return Pushout{q.module, std::move(from_b), std::move(from_c)};
}

Matrix submodule_span(const Module& m, const Matrix& vectors) {
    const FieldSpec& f = m.field();
    std::size_t nb = m.algebra()->dim();
    Matrix big(f, m.dim(), vectors.cols() * nb);
    for (std::size_t j = 0; j < vectors.cols(); ++j) {
        std::vector<Scalar> v = vectors.column(j);
        for (std::size_t i = 0; i < nb; ++i) {
            std::vector<Scalar> w = m.action(i).apply(v);
            for (std::size_t r = 0; r < m.dim(); ++r) big.set(r, j * nb + i, w[r]);
        }
    }
    return column_space(big);
}

DualModule a_dual(const Module& m, const AlgebraPtr& opposite) {
    Module reg = Module::regular(m.algebra());
    std::vector<ModuleMap> basis = hom_space(m, reg);
    std::size_t d = basis.size();
    const FieldSpec& f = m.field();
    std::size_t nb = m.algebra()->dim();

    // (phi . b_i)(v) = phi(v) * b_i, i.e. right_mult(i) o phi.
    std::vector<Matrix> action;
    action.reserve(nb);
    for (std::size_t i = 0; i < nb; ++i) {
        Matrix a(f, d, d);
        for (std::size_t j = 0; j < d; ++j) {
            Matrix moved = m.algebra()->right_mult(i) * basis[j].matrix;
            auto coords = hom_coordinates(basis, moved);
            if (!coords) throw ValidationError("a_dual: right action left the hom space");
            a.set_column(j, coords->column(0));
        }
        action.push_back(std::move(a));
    }
    return DualModule{Module(opposite, d, std::move(action)), std::move(basis)};
}

ModuleMap a_dual_map(const ModuleMap& f, const DualModule& dual_src, const DualModule& dual_tgt) {
    // f: m -> n induces Hom(n,A) -> Hom(m,A), phi -> phi o f.
    const FieldSpec& field = f.matrix.field();
    Matrix mat(field, dual_src.module.dim(), dual_tgt.module.dim());
    for (std::size_t j = 0; j < dual_tgt.maps.size(); ++j) {
        Matrix pulled = dual_tgt.maps[j].matrix * f.matrix;
        auto coords = hom_coordinates(dual_src.maps, pulled);
        if (!coords) throw ValidationError("a_dual_map: pullback not in dual basis span");
        mat.set_column(j, coords->column(0));
    }
    return ModuleMap{dual_tgt.module, dual_src.module, std::move(mat)};
}

}  // namespace relhom
