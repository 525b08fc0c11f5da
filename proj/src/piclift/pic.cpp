#include "stabmod/piclift/piclift.hpp"

#include "stabmod/gmod/catalog.hpp"
#include "stabmod/gmod/change_of_rings.hpp"
#include "stabmod/hopf/builtins.hpp"

#include <stdexcept>

namespace stabmod::piclift {

namespace {

bool stably_same(const AModule& a, const AModule& b)
{
    return stable::stably_isomorphic(a, b).kind == stable::StableVerdict::Kind::Yes;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep)
{
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i)
        out += (i ? sep : "") + parts[i];
    return out;
}

} // namespace

std::optional<PicCertificate> is_invertible(const AModule& m)
{
    if (m.dim() == 0)
        return std::nullopt;
    auto ev = gmod::evaluation_map(m, gmod::unit_module(m.alg));
    if (!stable::is_stable_equiv(ev))
        return std::nullopt;
    return PicCertificate{m, gmod::dual(m), ev};
}

AModule joker(int offset) { return gmod::joker(offset); }

PicConfig default_pic_config_A1()
{
    auto a1 = hopf::builtin_A1();
    PicConfig cfg;
    cfg.base_group = {"Z", "Z"};
    cfg.inc = &hopf::builtin_E1_in_A1();
    cfg.window = {-7, 1, 0, 0, 0, 8};
    cfg.candidates = {{"syzygy", stable::syzygy(gmod::unit_module(a1)), true, "Ω^a"},
                      {"joker", joker(), false, "J^c"},
                      {"shift", gmod::shift(gmod::unit_module(a1), 1), true, "[b]"}};
    return cfg;
}

PicConfig default_pic_config_E1()
{
    auto e1 = hopf::builtin_E1();
    PicConfig cfg;
    cfg.base_group = {"Z", "Z"};
    cfg.window = {-3, 1, 0, 0, 0, 4};
    cfg.candidates = {{"syzygy", stable::syzygy(gmod::unit_module(e1)), true, "Ω^a"},
                      {"shift", gmod::shift(gmod::unit_module(e1), 1), true, "[b]"}};
    return cfg;
}

PicReport pic_report(hopf::HopfPtr a, const gmod::AlgebraObject& t, const PicConfig& cfg)
{
    if (cfg.base_group.empty())
        throw std::invalid_argument("pic_report: the Picard group of the subalgebra must be configured");
    PicReport rep;
    const auto unit = gmod::unit_module(a);
    const auto page = descent::e2(descent::e1_end(a, t, unit, cfg.window));
    const auto tr = descent::homotopy_translation();
    for (auto& [d, k] : descent::end_diagonal(page, tr))
        if (tr.apply(d)[0] >= 1) {
            rep.diagonal[d] = k;
            rep.diagonal_rank += k;
        }
    const std::string base = join(cfg.base_group, " ⊕ ");
    rep.upper_bound = "extension of a subgroup of " + base + " by a group of order at most 2^" + std::to_string(rep.diagonal_rank);

    std::vector<AModule> kernel{unit};
    bool all_invertible = true, exponent_two = true;
    for (const auto& c : cfg.candidates) {
        PicReport::Candidate out{c.name};
        out.invertible = is_invertible(c.module).has_value();
        all_invertible = all_invertible && out.invertible;
        if (c.generates_base && cfg.inc && !is_invertible(gmod::restrict(*cfg.inc, c.module))) {
            all_invertible = false;
            rep.notes.push_back(c.name + ": restriction is not invertible");
        }
        if (cfg.inc && !c.generates_base)
            out.restricts_to_unit = stably_same(gmod::restrict(*cfg.inc, c.module), gmod::unit_module(cfg.inc->sub));
        if (out.restricts_to_unit) {
            out.order_two = stably_same(gmod::tensor(c.module, c.module), unit);
            exponent_two = exponent_two && out.order_two;
            bool seen = false;
            for (const auto& k : kernel)
                seen = seen || stably_same(k, c.module);
            if (!seen)
                kernel.push_back(stable::reduce(c.module).reduced);
        }
        rep.candidates.push_back(out);
    }
    // One round of products inside the kernel.
    const std::size_t found = kernel.size();
    for (std::size_t i = 1; i < found; ++i)
        for (std::size_t j = i + 1; j < found; ++j) {
            auto p = stable::reduce(gmod::tensor(kernel[i], kernel[j])).reduced;
            bool seen = false;
            for (const auto& k : kernel)
                seen = seen || stably_same(k, p);
            if (!seen)
                kernel.push_back(std::move(p));
        }
    rep.kernel_lower_bound = static_cast<int>(kernel.size());

    std::vector<std::string> symbols;
    for (const auto& c : cfg.candidates)
        if (!c.symbol.empty())
            symbols.push_back(c.symbol);
    rep.representatives = join(symbols, " ");

    const long upper = 1L << rep.diagonal_rank;
    std::vector<std::string> summands = cfg.base_group;
    for (int i = 0; i < rep.diagonal_rank; ++i)
        summands.push_back("Z/2");
    if (all_invertible && exponent_two && rep.kernel_lower_bound == upper) {
        rep.determined = true;
        rep.group = join(summands, " ⊕ ");
    } else {
        std::vector<std::string> lower = cfg.base_group;
        for (long n = rep.kernel_lower_bound; n > 1; n /= 2)
            lower.push_back("Z/2");
        rep.group = "undetermined between " + join(lower, " ⊕ ") + " and " + rep.upper_bound;
        if (!all_invertible)
            rep.notes.push_back("some candidates have no invertibility certificate");
        if (!exponent_two)
            rep.notes.push_back("a kernel candidate does not square to the unit");
    }
    rep.notes.push_back("counting diagonal read in the window n <= " + std::to_string(cfg.window.n_max));
    if (cfg.inc)
        rep.notes.push_back("image in the Picard group of the subalgebra is assumed generated by the configured generators");
    return rep;
}

LiftObstructionReport lift_obstruction_report(const hopf::SubHopfInclusion& inc, int generator, const AModule& base, const PageWindow& w)
{
    LiftObstructionReport rep;
    const auto tr = descent::homotopy_translation();
    const auto end = gmod::tensor(gmod::dual(base), base);
    descent::SSPage page;
    if (auto s = descent::find_first_order_datum(inc, generator, base)) {
        rep.first_order_datum = true;
        page = descent::e2(descent::e1_first_order(descent::first_order_end(descent::FirstOrderModule{inc, generator, base, *s}), w));
    } else {
        page = descent::e1_without_datum(inc, generator, end, w);
    }
    rep.page = page.label;
    for (auto& [d, k] : page.dims) {
        const auto e = tr.apply(d);
        if (k > 0 && e[0] >= 1 && e[1] == 0 && e[2] == e[0] + 2)
            rep.classes[d] = k;
    }
    if (!rep.first_order_datum)
        rep.verdict = "does not lift: the linear relations for " + inc.ambient->basis_names[static_cast<std::size_t>(generator)] +
                      " have no solution on the base";
    else if (rep.classes.empty())
        rep.verdict = "no obstruction classes";
    else
        rep.verdict = "obstruction groups are nonzero in the window; the E2 page alone does not decide the lift";
    return rep;
}

LiftBound lift_bound(const hopf::SubHopfInclusion& inc, int generator, const AModule& base, const PageWindow& w)
{
    LiftBound out;
    auto s = descent::find_first_order_datum(inc, generator, base);
    if (!s) {
        out.caveat = "no first-order datum: no lifts";
        return out;
    }
    const auto tr = descent::homotopy_translation();
    const auto page = descent::e2(descent::e1_first_order(descent::first_order_end(descent::FirstOrderModule{inc, generator, base, *s}), w));
    for (auto& [d, k] : page.dims) {
        const auto e = tr.apply(d);
        if (k > 0 && e[0] >= 1 && e[1] == 0 && e[2] == e[0] + 1) {
            out.classes[d] = k;
            out.rank += k;
        }
    }
    out.bound = 1L << out.rank;
    out.caveat = "counting diagonal read for n <= " + std::to_string(w.n_max) + "; classes beyond the window are not seen";
    return out;
}

} // namespace stabmod::piclift
