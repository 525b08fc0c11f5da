#pragma once

#include "stabmod/f2/bit_matrix.hpp"
#include "stabmod/hopf/hopf_algebra.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace stabmod::gmod {

using f2::BitMatrix;
using f2::BitVector;
using hopf::Element;
using hopf::HopfPtr;

/// Finite-dimensional graded module over a Hopf algebra.
/// Action matrices act on column vectors: column j of act(i) is b_i . e_j.
struct AModule
{
    HopfPtr alg;
    std::vector<std::string> names;
    std::vector<int> degrees;
    /// One matrix per algebra generator.
    std::vector<BitMatrix> gens;
    /// One matrix per algebra basis element, derived from gens.
    std::vector<BitMatrix> basis_action;

    int dim() const { return static_cast<int>(degrees.size()); }
    const BitMatrix& act(int basis_index) const { return basis_action[static_cast<std::size_t>(basis_index)]; }
    BitMatrix act_element(Element a) const;

    std::map<int, int> graded_dims() const;
    std::vector<std::size_t> indices_in_degree(int d) const;
    int min_degree() const;
    int max_degree() const;
    int index_of(const std::string& name) const;
};

using ModulePtr = std::shared_ptr<const AModule>;

/// Fills basis_action from gens using the generator expressions of the algebra.
AModule make_module(HopfPtr alg, std::vector<std::string> names, std::vector<int> degrees, std::vector<BitMatrix> gens);

/// Arrow "generator: source -> targets" for building modules by hand.
struct Arrow
{
    std::string generator;
    std::string source;
    std::vector<std::string> targets;
};
AModule module_from_arrows(HopfPtr alg, const std::vector<std::pair<std::string, int>>& basis, const std::vector<Arrow>& arrows);

/// Violated relations and degree mismatches; empty iff valid.
std::vector<std::string> validate_module(const AModule& m);

AModule zero_module(HopfPtr alg);
/// The unit: F in degree 0 with trivial action.
AModule unit_module(HopfPtr alg);
AModule free_module(HopfPtr alg, const std::vector<int>& degrees);
AModule shift(const AModule& m, int t);
AModule direct_sum(const std::vector<AModule>& parts);
AModule tensor(const AModule& m, const AModule& n);
AModule dual(const AModule& m);
/// dual(m) (x) n; basis element (i, j) is the map e_i -> f_j.
AModule internal_hom(const AModule& m, const AModule& n);

/// Degree-t module map: sends source degree k into target degree k - t.
struct ModuleMap
{
    ModulePtr source;
    ModulePtr target;
    int degree = 0;
    BitMatrix matrix;

    /// Block from source degree k to target degree k - degree.
    BitMatrix component(int k) const;
};

ModuleMap identity_map(ModulePtr m);
ModuleMap compose(const ModuleMap& g, const ModuleMap& f);
/// Empty iff the matrix commutes with all generators and respects degrees.
std::vector<std::string> validate_map(const ModuleMap& f);

/// Evaluation hom(m, n) (x) m -> n.
ModuleMap evaluation_map(const AModule& m, const AModule& n);
/// Coevaluation 1 -> hom(m, m), 1 -> sum e_i^* (x) e_i.
ModuleMap coevaluation_map(const AModule& m);

/// Submodule spanned by the rows of `span` (must be invariant); also returns the inclusion.
std::pair<AModule, ModuleMap> submodule(ModulePtr m, const BitMatrix& span);
/// Quotient by the invariant subspace spanned by the rows; also returns the projection.
std::pair<AModule, ModuleMap> quotient(ModulePtr m, const BitMatrix& span);
/// Smallest invariant subspace containing the given vectors (rows of the result).
BitMatrix invariant_closure(const AModule& m, const std::vector<BitVector>& vectors);

ModulePtr share(AModule m);

/// Basis of degree-t module maps m -> n.
std::vector<ModuleMap> hom_space(ModulePtr m, ModulePtr n, int t);
std::vector<ModuleMap> hom_space(const AModule& m, const AModule& n, int t);

/// Elements of square zero used as Margolis operators: quasi-elementary generators, else algebra generators.
std::vector<Element> margolis_operators(const hopf::HopfAlgebra& h);
/// Margolis homology ker(q)/im(q) per degree, for each Margolis operator.
std::vector<std::map<int, int>> margolis_homology(const AModule& m);

struct IsoResult
{
    enum class Status { Isomorphic, NotIsomorphic, BudgetExhausted };
    Status status = Status::BudgetExhausted;
    std::optional<ModuleMap> map;
    std::string reason;
};
/// Searches for an invertible degree-0 map: invariant filter, greedy accumulation,
/// seeded random combinations, then exhaustive search when the hom space has dimension <= 16.
IsoResult is_module_iso(const AModule& m, const AModule& n);

std::string describe(const AModule& m);

} // namespace stabmod::gmod
