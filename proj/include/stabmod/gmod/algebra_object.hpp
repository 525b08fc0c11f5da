#pragma once

#include "stabmod/gmod/module.hpp"
#include "stabmod/hopf/hopf_algebra.hpp"

namespace stabmod::gmod {

/// Commutative unital algebra object in modules. mult has one column per basis pair (i, j) = i * dim + j.
struct AlgebraObject
{
    AModule module;
    BitMatrix mult;
    BitVector unit;

    int dim() const { return module.dim(); }
    BitVector multiply(const BitVector& x, const BitVector& y) const;
};

/// Cocommutative coalgebra object. comult has one row per basis pair (i, j) = i * dim + j.
struct CoalgebraObject
{
    AModule module;
    BitMatrix comult;
    BitVector counit;
    /// Projection A -> A//B (only set for quotient coalgebras).
    BitMatrix projection;
};

/// A//B = A (x)_B F with the comultiplication inherited from A.
CoalgebraObject quotient_coalgebra(const hopf::SubHopfInclusion& inc);
/// Linear dual of A//B with dual multiplication; degrees negated.
AlgebraObject T_of(const hopf::SubHopfInclusion& inc);
/// The unit as an algebra object; descent along it is trivial.
AlgebraObject unit_algebra(HopfPtr alg);
/// Componentwise product with diagonal unit. Throws on an empty list.
AlgebraObject T_product(const std::vector<AlgebraObject>& ts);

/// Violations of module-map, associativity, commutativity and unit axioms.
std::vector<std::string> validate_algebra_object(const AlgebraObject& t);

} // namespace stabmod::gmod
