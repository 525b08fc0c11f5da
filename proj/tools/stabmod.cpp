#include "stabmod/cli/cli.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

using namespace stabmod;

namespace {

std::vector<int> parse_ints(const std::string& s)
{
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        std::size_t used = 0;
        const int v = std::stoi(tok, &used);
        if (used != tok.size())
            throw cli::InputError("--window: '" + tok + "' is not an integer");
        out.push_back(v);
    }
    return out;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"stable module computations over small Hopf algebras"};
    app.require_subcommand(1);
    app.fallthrough();

    cli::WorkspaceConfig cfg;
    std::string window, out_path, format = "text";
    std::optional<int> smin, smax, tmin, tmax;
    app.add_option("--window", window, "s_min,s_max,t_min,t_max[,n_min,n_max]");
    app.add_option("--smin", smin);
    app.add_option("--smax", smax);
    app.add_option("--tmin", tmin);
    app.add_option("--tmax", tmax);
    app.add_option("--out", out_path, "write the artifact here instead of stdout");
    app.add_option("--format", format, "text or svg")->check(CLI::IsMember({"text", "svg"}));
    app.add_option("--cache-dir", cfg.cache_dir, "resolution cache");
    app.add_option("--search-path", cfg.search_paths, "directories searched for input files");
    app.add_flag("--labels", cfg.labels, "label classes where names are known");

    std::string algebra, m, n, sub = "E1", mode, file;
    std::vector<std::string> modules;
    int page_r = 2;
    bool abutment = false;

    auto* validate = app.add_subcommand("validate", "parse and validate an algebra and modules");
    validate->add_option("algebra", algebra)->required();
    validate->add_option("modules", modules);
    auto* ext = app.add_subcommand("ext", "Ext chart of a pair of modules");
    ext->add_option("algebra", algebra)->required();
    ext->add_option("m", m)->required();
    ext->add_option("n", n)->required();
    auto* resolve = app.add_subcommand("resolve", "complete resolution over the window");
    resolve->add_option("algebra", algebra)->required();
    resolve->add_option("m", m)->required();
    auto* reduce = app.add_subcommand("reduce", "strip free summands");
    reduce->add_option("algebra", algebra)->required();
    reduce->add_option("m", m)->required();
    auto* tensor = app.add_subcommand("tensor", "tensor product of two modules");
    tensor->add_option("algebra", algebra)->required();
    tensor->add_option("m", m)->required();
    tensor->add_option("n", n)->required();
    auto* restrict_cmd = app.add_subcommand("restrict", "restriction to a subalgebra");
    restrict_cmd->add_option("algebra", algebra)->required();
    restrict_cmd->add_option("m", m)->required();
    restrict_cmd->add_option("--to", sub);
    auto* descent = app.add_subcommand("descent", "descent spectral sequence pages for End of a module");
    descent->add_option("algebra", algebra)->required();
    descent->add_option("coefficients", m)->required();
    descent->add_option("--r", page_r)->check(CLI::Range(1, 2));
    descent->add_flag("--abutment", abutment, "reconcile E2 against Ext over the algebra");
    auto* pic = app.add_subcommand("pic", "Picard group report");
    pic->add_option("algebra", algebra)->required();
    auto* lift = app.add_subcommand("lift", "lifting a module from the subalgebra");
    lift->add_option("algebra", algebra)->required();
    lift->add_option("base", m)->required();
    lift->add_option("mode", mode)->required()->check(CLI::IsMember({"obstruction", "bound", "census"}));
    auto* chart = app.add_subcommand("chart", "re-render a text chart");
    chart->add_option("file", file)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    const auto result = cli::guarded([&]() -> cli::CommandResult {
        cfg.format = format == "svg" ? cli::Format::Svg : cli::Format::Text;
        if (!window.empty()) {
            const auto v = parse_ints(window);
            if (v.size() != 4 && v.size() != 6)
                throw cli::InputError("--window needs 4 or 6 integers");
            cfg.ext_window = {v[0], v[1], v[2], v[3]};
            cfg.page_window = {v[0], v[1], v[2], v[3], cfg.page_window.n_min, cfg.page_window.n_max};
            if (v.size() == 6) {
                cfg.page_window.n_min = v[4];
                cfg.page_window.n_max = v[5];
            }
        }
        if (smin)
            cfg.ext_window.s_min = cfg.page_window.s_min = *smin;
        if (smax)
            cfg.ext_window.s_max = cfg.page_window.s_max = *smax;
        if (tmin)
            cfg.ext_window.t_min = cfg.page_window.t_min = *tmin;
        if (tmax)
            cfg.ext_window.t_max = cfg.page_window.t_max = *tmax;
        const auto& ew = cfg.ext_window;
        const auto& pw = cfg.page_window;
        if (ew.s_min > ew.s_max || ew.t_min > ew.t_max || pw.n_min > pw.n_max || pw.n_min < 0)
            throw cli::InputError("window is empty or has negative n");

        if (*validate)
            return cli::cmd_validate(algebra, modules, cfg);
        if (*ext)
            return cli::cmd_ext(algebra, m, n, cfg);
        if (*resolve)
            return cli::cmd_resolve(algebra, m, cfg);
        if (*reduce)
            return cli::cmd_reduce(algebra, m, cfg);
        if (*tensor)
            return cli::cmd_tensor(algebra, m, n, cfg);
        if (*restrict_cmd)
            return cli::cmd_restrict(algebra, m, sub, cfg);
        if (*descent)
            return cli::cmd_descent(algebra, m, page_r, abutment, cfg);
        if (*pic)
            return cli::cmd_pic(algebra, cfg);
        if (*lift)
            return cli::cmd_lift(algebra, m, mode, cfg);
        return cli::cmd_chart(file, cfg);
    });

    if (result.exit_code == 1 || (result.exit_code == 2 && result.output.rfind("internal", 0) == 0)) {
        std::cerr << result.output;
        return result.exit_code;
    }
    if (out_path.empty()) {
        std::cout << result.output;
    } else {
        try {
            cli::write_atomic(out_path, result.output);
        } catch (const cli::InputError& e) {
            std::cerr << "error: " << e.what() << "\n";
            return 1;
        }
    }
    return result.exit_code;
}
