#include "doctest.h"

#include "random_modules.hpp"
#include "stabmod/gmod/catalog.hpp"
#include "stabmod/gmod/change_of_rings.hpp"
#include "stabmod/hopf/builtins.hpp"
#include "stabmod/piclift/piclift.hpp"

#include <random>

using namespace stabmod;
using namespace stabmod::piclift;
using test_support::random_module;

namespace {

constexpr int kSq2 = 2;

bool stably_iso(const AModule& a, const AModule& b) { return stable::stably_isomorphic(a, b).kind == stable::StableVerdict::Kind::Yes; }

const std::vector<int> kShifts{-6, -5, -4, -3, -2, -1, 0, 1, 2, 3, 4, 5, 6};

bool restricts_exactly(const hopf::SubHopfInclusion& inc, const AModule& lift, const AModule& base)
{
    const auto r = gmod::restrict(inc, lift);
    return r.degrees == base.degrees && r.gens == base.gens;
}

} // namespace

TEST_CASE("invertibility certificates")
{
    auto a1 = hopf::builtin_A1();
    auto one = gmod::unit_module(a1);
    auto c = is_invertible(one);
    REQUIRE(c.has_value());
    CHECK(c->inverse.dim() == 1);
    CHECK(stable::is_stable_equiv(c->witness));
    CHECK(is_invertible(gmod::shift(one, 3)).has_value());
    auto m = one;
    for (int a = 1; a <= 3; ++a) {
        m = stable::syzygy(m);
        CHECK(is_invertible(m).has_value());
    }
    CHECK(is_invertible(stable::cosyzygy(one)).has_value());
    CHECK(is_invertible(joker()).has_value());
    CHECK_FALSE(is_invertible(gmod::free_module(a1, {0})).has_value());
    CHECK_FALSE(is_invertible(gmod::direct_sum({one, one})).has_value());
}

TEST_CASE("joker")
{
    auto& inc = hopf::builtin_E1_in_A1();
    auto j = joker();
    CHECK(gmod::validate_module(j).empty());
    CHECK(j.dim() == 5);
    for (int d = -2; d <= 2; ++d)
        CHECK(j.indices_in_degree(d).size() == 1);
    CHECK(stably_iso(gmod::restrict(inc, j), gmod::unit_module(inc.sub)));
    CHECK_FALSE(stably_iso(j, gmod::unit_module(inc.ambient)));
    // j (x) j against shifts and syzygies of the unit in a small window
    const auto jj = gmod::tensor(j, j);
    int matches = 0, match_a = 99, match_b = 99;
    auto omega = gmod::unit_module(inc.ambient);
    for (int a = 0; a <= 2; ++a) {
        for (int b = -3; b <= 3; ++b)
            if (stably_iso(jj, gmod::shift(omega, b))) {
                ++matches;
                match_a = a;
                match_b = b;
            }
        omega = stable::syzygy(omega);
    }
    CHECK(matches == 1);
    CHECK(match_a == 0);
    CHECK(match_b == 0);
}

TEST_CASE("property: invertibility is detected on restriction")
{
    auto a1 = hopf::builtin_A1();
    auto& inc = hopf::builtin_E1_in_A1();
    std::mt19937_64 rng(5501);
    int invertible = 0;
    for (int i = 0; i < 200; ++i) {
        auto m = random_module(rng, a1, 8);
        const bool up = is_invertible(m).has_value();
        CHECK(up == is_invertible(gmod::restrict(inc, m)).has_value());
        invertible += up;
    }
    // Mix in known invertible modules so both outcomes are exercised.
    for (auto m : {joker(), stable::syzygy(joker()), gmod::shift(stable::cosyzygy(gmod::unit_module(a1)), 2)}) {
        CHECK(is_invertible(m).has_value());
        CHECK(is_invertible(gmod::restrict(inc, m)).has_value());
    }
    CHECK(invertible < 200);
}

TEST_CASE("pic reports")
{
    auto& inc = hopf::builtin_E1_in_A1();
    auto r = pic_report(inc.ambient, gmod::T_of(inc), default_pic_config_A1());
    CHECK(r.determined);
    CHECK(r.group == "Z ⊕ Z ⊕ Z/2");
    CHECK(r.representatives == "Ω^a J^c [b]");
    CHECK(r.diagonal_rank == 1);
    CHECK(r.kernel_lower_bound == 2);
    for (const auto& c : r.candidates)
        CHECK(c.invertible);

    auto e = pic_report(hopf::builtin_E1(), gmod::unit_algebra(hopf::builtin_E1()), default_pic_config_E1());
    CHECK(e.determined);
    CHECK(e.group == "Z ⊕ Z");

    // Trivial descent over A(1): the configured group comes back.
    auto cfg = default_pic_config_A1();
    cfg.inc = nullptr;
    cfg.candidates.erase(cfg.candidates.begin() + 1);
    auto d = pic_report(inc.ambient, gmod::unit_algebra(inc.ambient), cfg);
    CHECK(d.diagonal_rank == 0);
    CHECK(d.group == "Z ⊕ Z");

    cfg.base_group.clear();
    CHECK_THROWS(pic_report(inc.ambient, gmod::unit_algebra(inc.ambient), cfg));

    // Missing the joker leaves a gap that must be reported.
    auto gap = default_pic_config_A1();
    gap.candidates.erase(gap.candidates.begin() + 1);
    auto g = pic_report(inc.ambient, gmod::T_of(inc), gap);
    CHECK_FALSE(g.determined);
    CHECK(g.group.rfind("undetermined between", 0) == 0);
}

TEST_CASE("exact lift census")
{
    auto& inc = hopf::builtin_E1_in_A1();
    auto n = brute_force_lifts(inc, kSq2, gmod::module_N());
    CHECK(n.exhaustive);
    CHECK(n.lifts.size() == 2);
    for (const auto& l : n.lifts) {
        CHECK(gmod::validate_module(l).empty());
        CHECK(restricts_exactly(inc, l, gmod::module_N()));
    }
    CHECK(brute_force_lifts(inc, kSq2, gmod::module_M()).lifts.empty());
    CHECK(brute_force_lifts(inc, kSq2, gmod::unit_module(inc.sub)).lifts.size() == 1);
    CHECK(brute_force_lifts(inc, kSq2, gmod::restrict(inc, joker())).lifts.size() >= 1);
}

TEST_CASE("stable lift census against the counting bound")
{
    auto& inc = hopf::builtin_E1_in_A1();
    const descent::PageWindow w{-10, 2, 0, 0, 0, 12};
    auto n = stable_lift_census(inc, kSq2, gmod::module_N(), kShifts, 2);
    CHECK(n.exhaustive);
    CHECK(n.classes.size() == 8);
    for (std::size_t i = 0; i < n.classes.size(); ++i) {
        CHECK(stably_iso(gmod::restrict(inc, n.classes[i]), gmod::module_N()));
        for (std::size_t j = i + 1; j < n.classes.size(); ++j)
            CHECK_FALSE(stably_iso(n.classes[i], n.classes[j]));
    }
    auto bn = lift_bound(inc, kSq2, gmod::module_N(), w);
    CHECK(bn.rank == 3);
    CHECK(bn.bound == 8);
    CHECK(static_cast<long>(n.classes.size()) <= bn.bound);

    auto u = stable_lift_census(inc, kSq2, gmod::unit_module(inc.sub), kShifts, 2);
    CHECK(u.classes.size() == 2);
    bool has_joker = false;
    for (const auto& c : u.classes)
        has_joker = has_joker || stably_iso(c, joker());
    CHECK(has_joker);
    CHECK(lift_bound(inc, kSq2, gmod::unit_module(inc.sub), w).bound == 2);

    CHECK(stable_lift_census(inc, kSq2, gmod::module_M(), kShifts, 1).classes.empty());
    auto bm = lift_bound(inc, kSq2, gmod::module_M(), w);
    CHECK(bm.bound == 0);
}

TEST_CASE("lift census is stable under shift")
{
    auto& inc = hopf::builtin_E1_in_A1();
    for (int t = -3; t <= 3; ++t) {
        CHECK(brute_force_lifts(inc, kSq2, gmod::shift(gmod::module_N(), t)).lifts.size() == 2);
        CHECK(brute_force_lifts(inc, kSq2, gmod::shift(gmod::module_M(), t)).lifts.empty());
    }
}

TEST_CASE("lift obstruction reports")
{
    auto& inc = hopf::builtin_E1_in_A1();
    const descent::PageWindow w{-10, 2, 0, 0, 0, 12};
    auto m = lift_obstruction_report(inc, kSq2, gmod::module_M(), w);
    CHECK_FALSE(m.first_order_datum);
    CHECK_FALSE(m.empty());
    CHECK(m.verdict.rfind("does not lift", 0) == 0);
    auto n = lift_obstruction_report(inc, kSq2, gmod::module_N(), w);
    CHECK(n.first_order_datum);
    for (auto& [d, k] : n.classes) {
        const auto e = descent::homotopy_translation().apply(d);
        CHECK(e[1] == 0);
        CHECK(e[2] == e[0] + 2);
    }
}
