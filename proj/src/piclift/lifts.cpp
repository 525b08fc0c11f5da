#include "stabmod/piclift/piclift.hpp"

#include "stabmod/gmod/change_of_rings.hpp"

#include <stdexcept>

namespace stabmod::piclift {

namespace {

/// Ambient generator matrices given the base action and the action x of the missing generator.
std::vector<gmod::BitMatrix> ambient_generators(const hopf::SubHopfInclusion& inc, int generator, const AModule& base, const gmod::BitMatrix& x)
{
    const auto& a = *inc.ambient;
    const int de = inc.sub->dim();
    std::vector<gmod::BitMatrix> gens;
    for (int g = 0; g < a.num_generators(); ++g) {
        const int b = a.generators[static_cast<std::size_t>(g)];
        if (b == generator) {
            gens.push_back(x);
            continue;
        }
        // Preimage of a single basis element of the ambient algebra.
        std::optional<hopf::Element> pre;
        for (hopf::Element e = 1; e < (hopf::Element{1} << de) && !pre; ++e)
            if (inc.image(e) == hopf::basis_element(b))
                pre = e;
        if (!pre)
            throw std::invalid_argument("brute_force_lifts: generator " + a.generator_name(g) +
                                        " is neither the missing generator nor in the subalgebra");
        gens.push_back(base.act_element(*pre));
    }
    return gens;
}

std::string shifts_name(const std::vector<int>& s)
{
    std::string out = "base";
    for (int k : s)
        out += " + free[" + std::to_string(k) + "]";
    return out;
}

} // namespace

LiftCensus brute_force_lifts(const hopf::SubHopfInclusion& inc, int generator, const AModule& base, long budget)
{
    if (base.alg->name != inc.sub->name)
        throw std::invalid_argument("brute_force_lifts: base is not a module over the subalgebra");
    LiftCensus census;
    census.base = base;
    auto space = descent::first_order_space(inc, generator, base);
    if (!space)
        return census;
    const std::size_t k = space->directions.size();
    if (k >= 62)
        throw std::invalid_argument("brute_force_lifts: search space of dimension " + std::to_string(k) + " is out of reach");
    const long total = 1L << k;
    const long limit = std::min(total, budget);
    census.exhaustive = limit == total;
    gmod::BitMatrix x = space->particular;
    for (long i = 0; i < limit; ++i) {
        if (i > 0)
            x ^= space->directions[static_cast<std::size_t>(__builtin_ctzl(static_cast<unsigned long>(i)))]; // Gray code step
        ++census.candidates_examined;
        auto m = gmod::make_module(inc.ambient, base.names, base.degrees, ambient_generators(inc, generator, base, x));
        if (!gmod::validate_module(m).empty())
            continue;
        bool seen = false;
        for (const auto& l : census.lifts)
            if (gmod::is_module_iso(l, m).status == gmod::IsoResult::Status::Isomorphic) {
                seen = true;
                break;
            }
        if (!seen)
            census.lifts.push_back(std::move(m));
    }
    return census;
}

StableCensus stable_lift_census(const hopf::SubHopfInclusion& inc, int generator, const AModule& base, const std::vector<int>& shifts,
                                int max_extra, long budget)
{
    StableCensus out;
    std::vector<std::vector<int>> multisets{{}};
    for (int size = 1; size <= max_extra; ++size) {
        std::vector<std::vector<int>> next;
        for (const auto& m : multisets)
            if (static_cast<int>(m.size()) == size - 1)
                for (std::size_t i = 0; i < shifts.size(); ++i)
                    if (m.empty() || shifts[i] >= m.back()) {
                        auto n = m;
                        n.push_back(shifts[i]);
                        next.push_back(std::move(n));
                    }
        multisets.insert(multisets.end(), next.begin(), next.end());
    }
    for (const auto& extra : multisets) {
        std::vector<AModule> parts{base};
        for (int s : extra)
            parts.push_back(gmod::free_module(inc.sub, {s}));
        auto census = brute_force_lifts(inc, generator, gmod::direct_sum(parts), budget);
        out.exhaustive = out.exhaustive && census.exhaustive;
        for (const auto& l : census.lifts) {
            auto r = stable::reduce(l).reduced;
            bool seen = false;
            for (const auto& c : out.classes) {
                const auto v = stable::stably_isomorphic(c, r);
                if (v.kind == stable::StableVerdict::Kind::Unknown)
                    out.exhaustive = false;
                if (v.kind == stable::StableVerdict::Kind::Yes) {
                    seen = true;
                    break;
                }
            }
            if (!seen) {
                out.classes.push_back(std::move(r));
                out.origins.push_back(shifts_name(extra));
            }
        }
    }
    return out;
}

} // namespace stabmod::piclift
