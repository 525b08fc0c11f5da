#pragma once

#include "stabmod/hopf/hopf_algebra.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace stabmod::hopf {

struct GeneratorSpec
{
    std::string name;
    int degree = 1;
};

/// Explicit coproduct of a generator: pairs of words (left factor, right factor).
struct CoproductSpec
{
    std::vector<std::pair<Word, Word>> terms;
};

struct Presentation
{
    std::string name;
    std::vector<GeneratorSpec> generators;
    std::vector<Relation> relations;
    /// Generators absent from this map are primitive.
    std::map<int, CoproductSpec> coproducts;
    int degree_bound = 32;
};

class PresentationError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Quotient of the free algebra by the relations, with a basis of normal words under
/// degree-then-lexicographic order, multiplication by reduction, comultiplication extended
/// multiplicatively from the generators, and the antipode solved degree by degree.
/// Throws PresentationError("presentation not finite within bound") if not saturated by degree_bound.
HopfAlgebra from_presentation(const Presentation& p);

/// Parses a word like "Sq1 Sq2 Sq1" or "Sq1*Sq2" into generator positions.
Word parse_word(const std::vector<GeneratorSpec>& gens, const std::string& text);
/// Parses "Sq2 Sq2 + Sq1 Sq2 Sq1".
Polynomial parse_polynomial(const std::vector<GeneratorSpec>& gens, const std::string& text);

} // namespace stabmod::hopf
