#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace stabmod::hopf {

/// An F2-combination of basis elements of a Hopf algebra, one bit per basis element.
using Element = std::uint64_t;
inline constexpr int kMaxDim = 64;

inline Element basis_element(int i) { return Element{1} << i; }

/// Word in the algebra generators: positions into HopfAlgebra::generators.
using Word = std::vector<int>;
/// Sum of words.
using Polynomial = std::vector<Word>;

struct Relation
{
    std::string name;
    Polynomial poly;
};

/// A configured quasi-elementary sub-Hopf-algebra: named, given by generating elements.
struct QuasiElementary
{
    std::string name;
    std::vector<std::string> generator_names;
    std::vector<Element> generators;
};

/// Finite-dimensional graded connected cocommutative Hopf algebra over F2 given by structure constants.
/// Basis index 0 is the unit.
struct HopfAlgebra
{
    std::string name;
    std::vector<std::string> basis_names;
    std::vector<int> degrees;
    /// mult[i][j] = b_i * b_j
    std::vector<std::vector<Element>> mult;
    /// comult[i] = list of (j, k) with Delta(b_i) = sum b_j (x) b_k
    std::vector<std::vector<std::pair<int, int>>> comult;
    Element counit = 1;
    std::vector<Element> antipode;
    /// Basis indices of the distinguished generators.
    std::vector<int> generators;
    /// Every basis element as a sum of words in the generators; filled by finalize().
    std::vector<Polynomial> expressions;
    /// Defining relations, if known; used for module validation reports.
    std::vector<Relation> relations;
    std::vector<QuasiElementary> quasi_elementary;

    int dim() const { return static_cast<int>(basis_names.size()); }
    int unit() const { return 0; }
    const std::string& generator_name(int g) const { return basis_names[static_cast<std::size_t>(generators[static_cast<std::size_t>(g)])]; }
    int generator_degree(int g) const { return degrees[static_cast<std::size_t>(generators[static_cast<std::size_t>(g)])]; }
    int num_generators() const { return static_cast<int>(generators.size()); }

    Element multiply(Element a, Element b) const;
    Element word_value(const Word& w) const;
    Element polynomial_value(const Polynomial& p) const;
    Element apply_antipode(Element a) const;
    /// Degree of a homogeneous nonzero element; throws if inhomogeneous or zero.
    int degree_of(Element a) const;
    int top_degree() const;
    int index_of(const std::string& basis_name) const;
    std::string element_to_string(Element a) const;
};

using HopfPtr = std::shared_ptr<const HopfAlgebra>;

/// Computes `expressions` by breadth-first products of generators; throws if the generators do not span.
void finalize(HopfAlgebra& h);

/// List of violated axioms; empty iff valid.
std::vector<std::string> validate_hopf(const HopfAlgebra& h);

int top_degree(const HopfAlgebra& h);

/// The one-dimensional Hopf algebra F.
HopfPtr trivial_algebra();

/// Inclusion of a sub-Hopf-algebra: embedding[i] is the image of sub basis element i.
struct SubHopfInclusion
{
    HopfPtr sub;
    HopfPtr ambient;
    std::vector<Element> embedding;

    Element image(Element sub_element) const;
};

/// Builds the inclusion determined by images of the sub generators, extended multiplicatively.
/// Throws if the result is not an injective, degree-preserving map of Hopf algebras.
SubHopfInclusion make_inclusion(HopfPtr sub, HopfPtr ambient, const std::vector<Element>& generator_images);

/// List of violated inclusion axioms; empty iff valid.
std::vector<std::string> validate_inclusion(const SubHopfInclusion& inc);

/// Sub-Hopf-algebra generated by the given elements, with a basis of monomials in them.
SubHopfInclusion generated_subalgebra(HopfPtr ambient, const std::string& name,
                                      const std::vector<std::string>& generator_names,
                                      const std::vector<Element>& generators);

SubHopfInclusion identity_inclusion(HopfPtr h);
/// F -> h.
SubHopfInclusion unit_inclusion(HopfPtr h);

/// Inclusions for every configured quasi-elementary of h.
std::vector<SubHopfInclusion> quasi_elementary_inclusions(HopfPtr h);

} // namespace stabmod::hopf
