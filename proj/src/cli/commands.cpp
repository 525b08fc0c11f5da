#include "stabmod/cli/cli.hpp"

#include "stabmod/gmod/change_of_rings.hpp"
#include "stabmod/hopf/builtins.hpp"
#include "stabmod/piclift/piclift.hpp"

#include <fstream>
#include <sstream>

namespace stabmod::cli {

namespace {

// Internal window for lift questions: the diagonals have t = 0.
constexpr descent::PageWindow kLiftWindow{-10, 2, 0, 0, 0, 12};
const std::vector<int> kCensusShifts{-6, -5, -4, -3, -2, -1, 0, 1, 2, 3, 4, 5, 6};
constexpr int kCensusExtra = 2;

std::string render_chart(const stable::BigradedChart& c, const std::string& title, const WorkspaceConfig& cfg)
{
    return cfg.format == Format::Svg ? render_chart_svg(c, title, cfg.labels) : render_chart_text(c, title);
}

/// Only A(1) carries a descent configuration, over E(1) with Sq2 as the extra generator.
const hopf::SubHopfInclusion& descent_inclusion(const HopfPtr& alg)
{
    if (alg->name != "A1")
        throw InputError(alg->name + ": no descent configuration (only A1 over E1 is configured)");
    return hopf::builtin_E1_in_A1();
}

int sq2_index(const hopf::SubHopfInclusion& inc)
{
    const auto& names = inc.ambient->basis_names;
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == "Sq2")
            return static_cast<int>(i);
    throw ConsistencyError("A1 has no basis element Sq2");
}

std::string tri(const descent::Tridegree& d) { return "(" + std::to_string(d.n) + "," + std::to_string(d.s) + "," + std::to_string(d.t) + ")"; }

std::string external(const descent::Tridegree& d)
{
    const auto e = descent::homotopy_translation().apply(d);
    return "(" + std::to_string(e[0]) + "," + std::to_string(e[1]) + "," + std::to_string(e[2]) + ")";
}

/// Coefficients over the ambient algebra, or failing that over the subalgebra.
struct Coefficients
{
    AModule module;
    bool over_sub = false;
};

Coefficients load_coefficients(const hopf::SubHopfInclusion& inc, const std::string& arg, const WorkspaceConfig& cfg)
{
    try {
        return {load_module(inc.ambient, arg, cfg), false};
    } catch (const InputError& first) {
        try {
            return {load_module(inc.sub, arg, cfg), true};
        } catch (const InputError&) {
            throw first;
        }
    }
}

AModule load_base(const hopf::SubHopfInclusion& inc, const std::string& arg, const WorkspaceConfig& cfg)
{
    auto c = load_coefficients(inc, arg, cfg);
    return c.over_sub ? c.module : gmod::restrict(inc, c.module);
}

} // namespace

CommandResult guarded(const std::function<CommandResult()>& body)
{
    try {
        return body();
    } catch (const InputError& e) {
        return {1, std::string("error: ") + e.what() + "\n"};
    } catch (const ConsistencyError& e) {
        return {2, std::string("internal consistency failure: ") + e.what() + "\n"};
    } catch (const std::invalid_argument& e) {
        return {1, std::string("error: ") + e.what() + "\n"};
    } catch (const std::exception& e) {
        return {2, std::string("internal consistency failure: ") + e.what() + "\n"};
    }
}

CommandResult cmd_validate(const std::string& algebra, const std::vector<std::string>& modules, const WorkspaceConfig& cfg)
{
    auto alg = load_algebra(algebra, cfg);
    std::ostringstream out;
    out << "algebra " << alg->name << " dim " << alg->dim() << " top_degree " << alg->top_degree() << "\n";
    for (const auto& arg : modules) {
        const auto m = load_module(alg, arg, cfg);
        const auto problems = gmod::validate_module(m);
        if (!problems.empty())
            throw InputError(arg + ": " + problems.front());
        out << "module " << arg << " ok: " << gmod::describe(m) << "\n";
    }
    return {0, out.str()};
}

CommandResult cmd_ext(const std::string& algebra, const std::string& m, const std::string& n, const WorkspaceConfig& cfg)
{
    auto alg = load_algebra(algebra, cfg);
    const auto mm = load_module(alg, m, cfg);
    const auto nn = load_module(alg, n, cfg);
    const auto& w = cfg.ext_window;
    if (w.s_min > w.s_max || w.t_min > w.t_max)
        throw InputError("empty window");
    auto res = std::make_shared<const stable::CompleteResolution>(cached_resolution(mm, w.s_min - 1, w.s_max + 1, cfg.cache_dir));
    stable::HomComplex hc(res, gmod::share(nn));
    stable::BigradedChart c;
    c.window = w;
    for (int s = w.s_min; s <= w.s_max; ++s)
        for (int t = w.t_min; t <= w.t_max; ++t)
            if (const int d = hc.ext_dim(s, t))
                c.dims[{s, t}] = d;
    if (cfg.labels && alg->name == "A1" && mm.dim() == 1 && nn.dim() == 1 && mm.degrees[0] == 0 && nn.degrees[0] == 0) {
        const auto lab = stable::labelled_unit_ext_A1(w);
        for (const auto& [st, names] : lab.labels)
            if (c.dim(st.first, st.second) != lab.dim(st.first, st.second))
                throw ConsistencyError("labelled chart disagrees with the computed chart");
        c.labels = lab.labels;
    }
    return {0, render_chart(c, "Ext_" + alg->name + "(" + m + ", " + n + ")", cfg)};
}

CommandResult cmd_resolve(const std::string& algebra, const std::string& m, const WorkspaceConfig& cfg)
{
    auto alg = load_algebra(algebra, cfg);
    const auto mm = load_module(alg, m, cfg);
    const auto& w = cfg.ext_window;
    const auto r = cached_resolution(mm, w.s_min, w.s_max, cfg.cache_dir);
    std::ostringstream out;
    out << "resolution " << m << " over " << alg->name << "\n";
    out << "key " << resolution_key(mm, w.s_min, w.s_max) << "\n";
    for (const auto& [s, gens] : r.generators) {
        out << "P " << s << " rank " << gens.size() << " degrees";
        for (int d : gens)
            out << " " << d;
        out << "\n";
    }
    const auto problems = stable::check_resolution(r);
    for (const auto& p : problems)
        out << "problem " << p << "\n";
    out << "check " << (problems.empty() ? "ok" : "failed") << "\n";
    return {problems.empty() ? 0 : 2, out.str()};
}

CommandResult cmd_reduce(const std::string& algebra, const std::string& m, const WorkspaceConfig& cfg)
{
    auto alg = load_algebra(algebra, cfg);
    const auto mm = load_module(alg, m, cfg);
    const auto r = stable::reduce(mm);
    std::ostringstream out;
    out << "# " << m << ": free_rank " << r.free_rank << ", reduced " << gmod::describe(r.reduced) << "\n";
    out << dump_module(r.reduced, m + "_reduced");
    return {0, out.str()};
}

CommandResult cmd_tensor(const std::string& algebra, const std::string& m, const std::string& n, const WorkspaceConfig& cfg)
{
    auto alg = load_algebra(algebra, cfg);
    const auto t = gmod::tensor(load_module(alg, m, cfg), load_module(alg, n, cfg));
    return {0, "# " + gmod::describe(t) + "\n" + dump_module(t, m + "_x_" + n)};
}

CommandResult cmd_restrict(const std::string& algebra, const std::string& m, const std::string& sub, const WorkspaceConfig& cfg)
{
    auto alg = load_algebra(algebra, cfg);
    const auto& inc = descent_inclusion(alg);
    if (sub != inc.sub->name)
        throw InputError(sub + ": not a configured subalgebra of " + alg->name);
    const auto r = gmod::restrict(inc, load_module(alg, m, cfg));
    return {0, "# " + gmod::describe(r) + "\n" + dump_module(r, m + "_restricted")};
}

CommandResult cmd_descent(const std::string& algebra, const std::string& coefficients, int page_r, bool abutment, const WorkspaceConfig& cfg)
{
    if (page_r != 1 && page_r != 2)
        throw InputError("--r must be 1 or 2");
    auto alg = load_algebra(algebra, cfg);
    const auto& inc = descent_inclusion(alg);
    const int g = sq2_index(inc);
    const auto& w = cfg.page_window;
    const auto c = load_coefficients(inc, coefficients, cfg);

    descent::SSPage e1;
    std::string route;
    if (!c.over_sub) {
        e1 = descent::e1_end(alg, gmod::T_of(inc), c.module, w);
        route = "ambient";
    } else if (auto s = descent::find_first_order_datum(inc, g, c.module)) {
        e1 = descent::e1_first_order(descent::first_order_end({inc, g, c.module, *s}), w);
        route = "subalgebra with first-order datum";
    } else {
        e1 = descent::e1_without_datum(inc, g, gmod::tensor(gmod::dual(c.module), c.module), w);
        route = "subalgebra without first-order datum";
    }
    if (const auto bad = descent::check_page(e1); !bad.empty())
        throw ConsistencyError("d1 d1 != 0: " + bad.front());

    std::ostringstream out;
    const bool svg = cfg.format == Format::Svg;
    if (!svg)
        out << "coefficients " << coefficients << "\nroute " << route << "\n";
    if (page_r == 1) {
        out << (svg ? render_page_svg(e1, cfg.labels) : render_page_text(e1));
        return {0, out.str()};
    }
    if (!e1.d1_determined) {
        if (svg)
            return {0, render_page_svg(e1, cfg.labels)};
        out << render_page_text(e1) << "status undetermined\nreason no Sq2 action satisfies the linear relations, so d1 is not determined\n";
        return {0, out.str()};
    }
    const auto e2 = descent::e2(e1);
    if (svg)
        return {0, render_page_svg(e2, cfg.labels)};
    out << render_page_text(e2);
    if (abutment) {
        if (c.over_sub) {
            out << "abutment unavailable: coefficients are not a module over " << alg->name << "\n";
        } else {
            // Every (n, s) with s + n = T and n <= n_max lies in the widened window; levels above n_max are not seen,
            // so a total where the abutment exceeds E2 is reported as short rather than as a contradiction.
            const descent::PageWindow wide{w.s_min - w.n_max, w.s_max, w.t_min, w.t_max, 0, w.n_max};
            const auto e2w = descent::e2(descent::e1_end(alg, gmod::T_of(inc), c.module, wide));
            auto ab = stable::ext(c.module, c.module, stable::ChartWindow{w.s_min, w.s_max, w.t_min, w.t_max});
            descent::SSPage cut = e2w;
            cut.dims.clear();
            for (const auto& [d, k] : e2w.dims)
                if (d.s + d.n >= w.s_min && d.s + d.n <= w.s_max)
                    cut.dims[d] = k;
            const auto rep = descent::reconcile(cut, ab);
            out << "abutment Ext_" << alg->name << " totals " << w.s_min << " " << w.s_max << " levels 0 " << w.n_max << "\n";
            int short_rows = 0, surplus = 0;
            for (const auto& row : rep.rows) {
                if (!row.e2_dim && !row.abutment_dim)
                    continue;
                const bool is_short = row.abutment_dim > row.e2_dim;
                short_rows += is_short;
                surplus += std::max(row.e2_dim - row.abutment_dim, 0);
                out << "reconcile total " << row.total << " t " << row.t << " e2 " << row.e2_dim << " abutment " << row.abutment_dim
                    << (is_short ? " short" : "") << "\n";
            }
            out << "surplus " << surplus << " min_differential_rank " << (surplus + 1) / 2 << "\n";
            if (short_rows) {
                out << "status undetermined\n";
                out << "reason " << short_rows << " totals need classes from levels above " << w.n_max << "\n";
            } else {
                out << "status consistent\n";
            }
        }
    }
    return {0, out.str()};
}

CommandResult cmd_pic(const std::string& algebra, const WorkspaceConfig& cfg)
{
    auto alg = load_algebra(algebra, cfg);
    piclift::PicReport r;
    if (alg->name == "A1")
        r = piclift::pic_report(alg, gmod::T_of(hopf::builtin_E1_in_A1()), piclift::default_pic_config_A1());
    else if (alg->name == "E1")
        r = piclift::pic_report(alg, gmod::unit_algebra(alg), piclift::default_pic_config_E1());
    else
        throw InputError(alg->name + ": no Picard configuration (A1 and E1 are configured)");
    std::ostringstream out;
    out << "algebra " << alg->name << "\n";
    out << "status " << (r.determined ? "determined" : "undetermined") << "\n";
    out << "group " << r.group << "\n";
    if (!r.representatives.empty())
        out << "representatives " << r.representatives << "\n";
    // Generators in the order shift, syzygy, then the rest.
    std::vector<std::string> gens;
    for (const char* want : {"shift", "syzygy"})
        for (const auto& c : r.candidates)
            if (c.name == want && c.invertible)
                gens.push_back(c.name == "shift" ? "[1]-shift" : "Ω");
    for (const auto& c : r.candidates)
        if (c.name != "shift" && c.name != "syzygy" && c.invertible)
            gens.push_back(c.name);
    std::string gl;
    for (std::size_t i = 0; i < gens.size(); ++i)
        gl += (i ? ", " : "") + gens[i];
    out << "summary " << r.group << "; generators " << gl << "\n";
    out << "diagonal_rank " << r.diagonal_rank << "\n";
    for (const auto& [d, k] : r.diagonal)
        out << "diagonal internal " << tri(d) << " external " << external(d) << " dim " << k << "\n";
    out << "upper_bound " << r.upper_bound << "\n";
    for (const auto& c : r.candidates)
        out << "candidate " << c.name << " invertible " << (c.invertible ? "yes" : "no") << " restricts_to_unit "
            << (c.restricts_to_unit ? "yes" : "no") << " order_two " << (c.order_two ? "yes" : "no") << "\n";
    out << "kernel_lower_bound " << r.kernel_lower_bound << "\n";
    for (const auto& n : r.notes)
        out << "note " << n << "\n";
    return {0, out.str()};
}

CommandResult cmd_lift(const std::string& algebra, const std::string& base, const std::string& mode, const WorkspaceConfig& cfg)
{
    auto alg = load_algebra(algebra, cfg);
    const auto& inc = descent_inclusion(alg);
    const int g = sq2_index(inc);
    const auto b = load_base(inc, base, cfg);
    std::ostringstream out;
    out << "base " << base << " " << gmod::describe(b) << "\nmode " << mode << "\n";
    if (mode == "obstruction") {
        const auto r = piclift::lift_obstruction_report(inc, g, b, kLiftWindow);
        out << "first_order_datum " << (r.first_order_datum ? "yes" : "no") << "\n";
        for (const auto& [d, k] : r.classes)
            out << "class internal " << tri(d) << " external " << external(d) << " dim " << k << "\n";
        out << "status " << (!r.first_order_datum ? "obstructed" : r.empty() ? "unobstructed" : "undetermined") << "\n";
        out << "verdict " << r.verdict << "\n";
    } else if (mode == "bound") {
        const auto r = piclift::lift_bound(inc, g, b, kLiftWindow);
        for (const auto& [d, k] : r.classes)
            out << "class internal " << tri(d) << " external " << external(d) << " dim " << k << "\n";
        out << "rank " << r.rank << "\nbound " << r.bound << "\n";
        if (!r.caveat.empty())
            out << "caveat " << r.caveat << "\n";
    } else if (mode == "census") {
        const auto exact = piclift::brute_force_lifts(inc, g, b);
        const auto st = piclift::stable_lift_census(inc, g, b, kCensusShifts, kCensusExtra);
        out << "exact_lifts " << exact.lifts.size() << (exact.exhaustive ? "" : " (budget exhausted)") << "\n";
        out << "classes " << st.classes.size() << "\n";
        out << "search shifts " << kCensusShifts.front() << ".." << kCensusShifts.back() << " extra_free_summands <= " << kCensusExtra << "\n";
        for (std::size_t i = 0; i < st.classes.size(); ++i)
            out << "class " << i << " " << gmod::describe(st.classes[i]) << " from " << st.origins[i] << "\n";
        out << "status " << (exact.exhaustive && st.exhaustive ? "complete" : "undetermined") << "\n";
    } else {
        throw InputError("mode must be obstruction, bound or census, not '" + mode + "'");
    }
    return {0, out.str()};
}

CommandResult cmd_chart(const std::string& chart_file, const WorkspaceConfig& cfg)
{
    std::ifstream in(chart_file, std::ios::binary);
    if (!in)
        throw InputError(chart_file + ": cannot open");
    std::ostringstream ss;
    ss << in.rdbuf();
    const auto [c, title] = parse_chart_text(ss.str(), chart_file);
    return {0, render_chart(c, title, cfg)};
}

} // namespace stabmod::cli
