#pragma once

#include "stabmod/gmod/module.hpp"

#include <optional>
#include <string>

namespace stabmod::stable {

using gmod::AModule;
using gmod::ModuleMap;
using gmod::ModulePtr;
using f2::BitMatrix;
using f2::BitVector;

/// dim of m / I(A) m.
int radical_quotient_dim(const AModule& m);
bool is_free(const AModule& m);

/// Minimal free cover F -> m; F is free_module(alg, generator degrees) in its standard basis.
struct Cover
{
    std::vector<int> generator_degrees;
    ModuleMap map;
};
Cover minimal_cover(const AModule& m);
/// Minimal injective hull m -> I, with I = dual of the minimal cover of dual(m).
ModuleMap injective_hull(const AModule& m);

/// Kernel of the minimal cover.
AModule syzygy(const AModule& m);
/// Cokernel of the minimal injective hull.
AModule cosyzygy(const AModule& m);

struct Reduction
{
    AModule reduced;
    int free_rank = 0;
};
/// Strips free summands: cosyzygy of the syzygy, with its free rank read off from dimensions.
Reduction reduce(const AModule& m);

AModule kernel_module(const ModuleMap& f);
AModule cokernel_module(const ModuleMap& f);
bool is_stable_equiv(const ModuleMap& f);

struct StableVerdict
{
    enum class Kind { Yes, No, Unknown };
    Kind kind = Kind::Unknown;
    std::optional<ModuleMap> witness;
    std::string reason;
};
StableVerdict stably_isomorphic(const AModule& m, const AModule& n);

/// Two-sided free resolution P_s (s in [s_min, s_max]) of a module.
/// P_s is free_module(alg, generators.at(s)); d_s : P_s -> P_{s-1} in standard bases.
struct CompleteResolution
{
    ModulePtr module;
    int s_min = 0;
    int s_max = 0;
    std::map<int, std::vector<int>> generators;
    std::map<int, BitMatrix> differential;
    BitMatrix augmentation;   // P_0 -> m
    BitMatrix coaugmentation; // m -> P_{-1}

    int rank(int s) const { return static_cast<int>(generators.at(s).size()); }
    AModule term(int s) const;
    /// d_s for s in (s_min, s_max]; d_0 is the splice coaugmentation * augmentation.
    const BitMatrix& d(int s) const { return differential.at(s); }
};
CompleteResolution complete_resolution(const AModule& m, int s_min, int s_max);
/// Shared resolution of the unit, extended on demand; safe for concurrent readers.
std::shared_ptr<const CompleteResolution> unit_resolution(const hopf::HopfPtr& alg, int s_min, int s_max);
/// d o d = 0, exactness at interior terms and minimality away from d_0; empty iff all hold.
std::vector<std::string> check_resolution(const CompleteResolution& r);

struct ChartWindow
{
    int s_min = 0, s_max = 0, t_min = 0, t_max = 0;
};

/// Bigraded dimensions (s, t) -> dim, optional labels.
struct BigradedChart
{
    ChartWindow window;
    std::map<std::pair<int, int>, int> dims;
    std::map<std::pair<int, int>, std::vector<std::string>> labels;

    int dim(int s, int t) const
    {
        auto it = dims.find({s, t});
        return it == dims.end() ? 0 : it->second;
    }
    int total() const;
};

/// One bidegree of Ext: representative cocycles and a coordinate solver.
struct ExtGroup
{
    int s = 0, t = 0;
    /// Cochain coordinates: pairs (generator of P_s, basis element of X).
    std::vector<std::pair<int, int>> cochain_basis;
    std::vector<BitVector> representatives;
    /// Columns: representatives followed by a basis of coboundaries.
    BitMatrix span;
    int dim() const { return static_cast<int>(representatives.size()); }
    /// Coordinates of a cocycle; throws if not a cocycle of this group.
    BitVector coordinates(const BitVector& cocycle) const;
};

/// Hom_A(P, X) for a fixed resolution P and coefficient module X.
/// A cochain of degree t on P_s assigns to generator g_j an element of X in degree e_j - t.
class HomComplex
{
public:
    HomComplex(std::shared_ptr<const CompleteResolution> p, ModulePtr x);

    std::vector<std::pair<int, int>> cochain_basis(int s, int t) const;
    /// delta : Hom^t(P_s, X) -> Hom^t(P_{s+1}, X), f -> f o d_{s+1}.
    BitMatrix coboundary(int s, int t) const;
    /// Requires s - 1 >= s_min and s + 1 <= s_max of the resolution.
    ExtGroup ext(int s, int t) const;
    int ext_dim(int s, int t) const;
    /// Internal degrees where Hom^t(P_s, X) is nonzero.
    std::pair<int, int> t_range(int s) const;

    const CompleteResolution& resolution() const { return *p_; }
    const AModule& coefficients() const { return *x_; }

private:
    std::shared_ptr<const CompleteResolution> p_;
    ModulePtr x_;
};

/// Ext^{s,t}_A(m, n) over the window.
BigradedChart ext(const AModule& m, const AModule& n, const ChartWindow& w);
/// Ext^{s,t}(1, n) using the shared unit resolution.
BigradedChart ext_from_unit(const AModule& n, const ChartWindow& w);

/// Matrix of Ext^{s,t}(P, X) -> Ext^{s,t}(P, Y) induced by a degree-0 map f : X -> Y.
BitMatrix induced_map_on_ext(const HomComplex& from, const HomComplex& to, const ModuleMap& f, int s, int t);

struct PoincareReport
{
    bool ok = true;
    int checked = 0;
    std::vector<std::string> failures;
};
/// dim Ext^{s,t}(1,1) = dim Ext^{-1-s, -|A|-t}(1,1) for s in [s_min, s_max] and all t.
/// In this grading the unit class (0,0) is dual to the class at (-1, -|A|).
PoincareReport poincare_check(const hopf::HopfPtr& alg, int s_min, int s_max);

/// pi_{s,t} hom_A(1,1) = Ext^{s-1, |A|-t}(1,1)^* over the window, and pi_i(pic) = Ext^{i-2, |A|}(1,1)^*.
struct EndHomotopy
{
    BigradedChart chart;
    std::map<int, int> pic_homotopy; // i -> dim, i >= 2
};
EndHomotopy end_homotopy(const hopf::HopfPtr& alg, const ChartWindow& w);

/// Chain-level products on classes over the unit resolution (s >= 0).
class ProductEngine
{
public:
    explicit ProductEngine(hopf::HopfPtr alg, int s_max);
    /// Products over a given resolution of the unit.
    explicit ProductEngine(std::shared_ptr<const CompleteResolution> p);

    /// Yoneda composite b o a for a in Ext^{s1,t1}(1,1), b in Ext^{s2,t2}(1,1), as a cocycle on P_{s1+s2}.
    BitVector yoneda(int s1, int t1, const BitVector& a, int s2, int t2, const BitVector& b) const;
    /// Cup product of a in Ext(1, X) and b in Ext(1, Y), as a cocycle in Hom(P_{s1+s2}, X (x) Y).
    BitVector cup(const AModule& x, int s1, int t1, const BitVector& a, const AModule& y, int s2, int t2, const BitVector& b) const;

    const HomComplex& unit_complex() const { return unit_; }

private:
    hopf::HopfPtr alg_;
    std::shared_ptr<const CompleteResolution> p_;
    HomComplex unit_;
};

/// Ext(1,1) of A(1) with generator labels v0, eta, alpha, beta recognised by degree; monomials
/// in the window obtained from products of the labelled generators.
BigradedChart labelled_unit_ext_A1(const ChartWindow& w);

} // namespace stabmod::stable
