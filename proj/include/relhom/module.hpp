#pragma once

#include <vector>

#include "relhom/algebra.hpp"

namespace relhom {

/// Finite-dimensional left module: one action matrix per algebra basis
/// element. action(b_i) * action(b_j) must match the structure constants and
/// the unit must act as the identity (checked by validate_module).
class Module {
public:
    Module() = default;
    Module(AlgebraPtr algebra, std::size_t dim, std::vector<Matrix> action);

    /// The regular representation (left multiplication on the algebra itself).
    static Module regular(AlgebraPtr algebra);
    static Module zero(AlgebraPtr algebra);

    const AlgebraPtr& algebra() const { return algebra_; }
    std::size_t dim() const { return dim_; }
    const Matrix& action(std::size_t i) const { return action_[i]; }

    /// Action of a general algebra element given by coordinates.
    Matrix act(const std::vector<Scalar>& coords) const;

    const FieldSpec& field() const { return algebra_->field(); }

private:
    AlgebraPtr algebra_;
    std::size_t dim_ = 0;
    std::vector<Matrix> action_;
};

ValidationReport validate_module(const Module& m);

/// Module homomorphism as a target.dim x source.dim matrix intertwining the
/// two actions.
struct ModuleMap {
    Module source;
    Module target;
    Matrix matrix;

    static ModuleMap zero(const Module& src, const Module& tgt);
    static ModuleMap identity(const Module& m);
};

ValidationReport validate_module_map(const ModuleMap& f);

ModuleMap compose(const ModuleMap& second, const ModuleMap& first);  // second o first

/// i injective, p surjective, image(i) = kernel(p).
struct ShortExactSequence {
    ModuleMap i;  // A -> B
    ModuleMap p;  // B -> C
};

ValidationReport validate_ses(const ShortExactSequence& s);

/// Canonical basis of Hom_A(m, n): kernel of the stacked intertwining system,
/// one ModuleMap per kernel column. Deterministic ordering.
std::vector<ModuleMap> hom_space(const Module& m, const Module& n);

/// Express a module map in a given hom-space basis; infeasible only if f is
/// not in the span (i.e. not a module map).
std::optional<Matrix> hom_coordinates(const std::vector<ModuleMap>& basis, const Matrix& f);

struct SubmoduleResult {
    Module module;
    ModuleMap inclusion;
};

struct QuotientResult {
    Module module;
    ModuleMap projection;
};

SubmoduleResult kernel_module(const ModuleMap& f);
QuotientResult cokernel_module(const ModuleMap& f);

struct DirectSum {
    Module module;
    std::vector<ModuleMap> injections;
    std::vector<ModuleMap> projections;
};

DirectSum direct_sum(const std::vector<Module>& ms);

struct Pushout {
    Module module;
    ModuleMap from_b;
    ModuleMap from_c;
};

/// Pushout of B <-f- A -g-> C, computed as the cokernel of (f, -g): A -> B(+)C.
Pushout pushout(const ModuleMap& f, const ModuleMap& g);

/// Submodule spanned by the columns of `vectors` (closed under the action),
/// as a canonical subspace basis.
Matrix submodule_span(const Module& m, const Matrix& vectors);

/// Hom_A(m, A) as a left module over the opposite algebra. The chosen basis is
/// the canonical hom_space basis; `maps` returns it for coordinate work.
struct DualModule {
    Module module;                // over opposite_algebra(m.algebra)
    std::vector<ModuleMap> maps;  // basis homs m -> regular A
};

DualModule a_dual(const Module& m, const AlgebraPtr& opposite);

/// Contravariant action of a_dual on maps: Hom(n, A) -> Hom(m, A) for
/// f: m -> n, in the canonical dual bases.
ModuleMap a_dual_map(const ModuleMap& f, const DualModule& dual_src, const DualModule& dual_tgt);

}  // namespace relhom
