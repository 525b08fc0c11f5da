#pragma once

#include "stabmod/descent/descent.hpp"

#include <optional>
#include <string>
#include <vector>

namespace stabmod::piclift {

using descent::PageWindow;
using descent::Tridegree;
using gmod::AModule;

struct PicCertificate
{
    AModule module;
    AModule inverse;
    /// module (x) inverse -> 1, a stable equivalence.
    gmod::ModuleMap witness;
};
std::optional<PicCertificate> is_invertible(const AModule& m);

/// The joker over A(1).
AModule joker(int offset = 0);

struct PicCandidate
{
    std::string name;
    AModule module;
    /// Restriction is one of the generators of the base Picard group.
    bool generates_base = false;
    /// Used when printing representatives, for example "Ω^a".
    std::string symbol;
};

struct PicConfig
{
    /// Summands of the Picard group of the subalgebra, for example {"Z", "Z"}.
    std::vector<std::string> base_group;
    /// Null when the descent algebra is trivial.
    const hopf::SubHopfInclusion* inc = nullptr;
    PageWindow window;
    std::vector<PicCandidate> candidates;
};
PicConfig default_pic_config_A1();
PicConfig default_pic_config_E1();

struct PicReport
{
    /// Surviving E2 classes on the counting diagonal (s, 0, s + 1), s >= 1, internal tridegrees.
    std::map<Tridegree, int> diagonal;
    int diagonal_rank = 0;
    std::string upper_bound;
    struct Candidate
    {
        std::string name;
        bool invertible = false;
        bool restricts_to_unit = false;
        bool order_two = false;
    };
    std::vector<Candidate> candidates;
    /// Distinct stable classes found in the kernel of restriction, the unit included.
    int kernel_lower_bound = 1;
    bool determined = false;
    std::string group;
    std::string representatives;
    std::vector<std::string> notes;
};
PicReport pic_report(hopf::HopfPtr a, const gmod::AlgebraObject& t, const PicConfig& cfg);

struct LiftObstructionReport
{
    bool first_order_datum = false;
    std::string page;
    /// Classes on the obstruction diagonal (s, 0, s + 2), s >= 1, internal tridegrees.
    std::map<Tridegree, int> classes;
    std::string verdict;

    bool empty() const { return first_order_datum && classes.empty(); }
};
LiftObstructionReport lift_obstruction_report(const hopf::SubHopfInclusion& inc, int generator, const AModule& base, const PageWindow& w);

struct LiftBound
{
    int rank = 0;
    long bound = 0;
    std::map<Tridegree, int> classes;
    std::string caveat;
};
LiftBound lift_bound(const hopf::SubHopfInclusion& inc, int generator, const AModule& base, const PageWindow& w);

struct LiftCensus
{
    AModule base;
    std::vector<AModule> lifts;
    long candidates_examined = 0;
    bool exhaustive = true;
};
/// Every action of the generator on base satisfying the ambient relations, up to isomorphism of A-modules.
LiftCensus brute_force_lifts(const hopf::SubHopfInclusion& inc, int generator, const AModule& base, long budget = 1L << 20);

struct StableCensus
{
    /// Reduced representatives of the distinct stable classes found.
    std::vector<AModule> classes;
    std::vector<std::string> origins;
    bool exhaustive = true;
};
/// Exact lifts of base (+) sum of shifted free modules, for every multiset of at most max_extra shifts, up to
/// stable isomorphism over the ambient algebra.
StableCensus stable_lift_census(const hopf::SubHopfInclusion& inc, int generator, const AModule& base, const std::vector<int>& shifts,
                                int max_extra, long budget = 1L << 20);

} // namespace stabmod::piclift
