#include "stabmod/cli/cli.hpp"

#include "stabmod/gmod/catalog.hpp"
#include "stabmod/hopf/builtins.hpp"
#include "stabmod/hopf/presentation.hpp"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace stabmod::cli {

namespace {

std::string trim(const std::string& s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
        return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(const std::string& s)
{
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok)
        out.push_back(tok);
    return out;
}

std::optional<int> to_int(const std::string& s)
{
    int v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size())
        return std::nullopt;
    return v;
}

[[noreturn]] void fail(const std::string& source, int line, const std::string& msg)
{
    throw InputError(source + ":" + std::to_string(line) + ": " + msg);
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError(path + ": cannot open");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::optional<std::string> find_file(const std::string& path, const WorkspaceConfig& cfg)
{
    namespace fs = std::filesystem;
    if (fs::is_regular_file(path))
        return path;
    for (const auto& dir : cfg.search_paths) {
        const auto p = fs::path(dir) / path;
        if (fs::is_regular_file(p))
            return p.string();
    }
    return std::nullopt;
}

hopf::Word parse_word_at(const hopf::Presentation& p, const std::string& text, const std::string& source, int line)
{
    try {
        return hopf::parse_word(p.generators, text);
    } catch (const hopf::PresentationError& e) {
        fail(source, line, e.what());
    }
}

} // namespace

InputFile parse_input(const std::string& text, const std::string& source)
{
    InputFile f;
    f.source = source;
    enum class Section { None, Algebra, Module, Action } section = Section::None;
    std::istringstream in(text);
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        const auto hash = raw.find('#');
        const std::string l = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (l.empty())
            continue;
        if (l.front() == '[') {
            if (l == "[algebra]") {
                if (f.algebra)
                    fail(source, line, "second [algebra] section");
                f.algebra = AlgebraSpec{};
                f.algebra->line = line;
                section = Section::Algebra;
            } else if (l == "[module]") {
                f.modules.push_back(ModuleSpec{});
                f.modules.back().line = line;
                section = Section::Module;
            } else if (l == "[action]") {
                if (f.modules.empty())
                    fail(source, line, "[action] before any [module]");
                section = Section::Action;
            } else {
                fail(source, line, "unknown section " + l);
            }
            continue;
        }
        if (section == Section::Action) {
            // GEN SOURCE -> TARGET ...
            const auto arrow = l.find("->");
            if (arrow == std::string::npos)
                fail(source, line, "expected 'generator source -> targets'");
            const auto lhs = split_ws(l.substr(0, arrow));
            if (lhs.size() != 2)
                fail(source, line, "expected 'generator source -> targets'");
            f.modules.back().arrows.push_back({lhs[0], lhs[1], split_ws(l.substr(arrow + 2))});
            continue;
        }
        const auto eq = l.find('=');
        if (eq == std::string::npos)
            fail(source, line, "expected 'key = value'");
        const std::string key = trim(l.substr(0, eq));
        const std::string value = trim(l.substr(eq + 1));
        if (section == Section::None)
            fail(source, line, "'" + key + "' outside a section");
        if (section == Section::Module) {
            auto& m = f.modules.back();
            if (key == "name") {
                m.name = value;
            } else if (key == "algebra") {
                m.algebra = value;
            } else if (key == "basis") {
                // name:degree entries
                for (const auto& tok : split_ws(value)) {
                    const auto colon = tok.rfind(':');
                    const auto deg = colon == std::string::npos ? std::nullopt : to_int(tok.substr(colon + 1));
                    if (!deg || colon == 0)
                        fail(source, line, "basis entry '" + tok + "' is not name:degree");
                    m.basis.push_back({tok.substr(0, colon), *deg});
                }
            } else {
                fail(source, line, "unknown module key '" + key + "'");
            }
            continue;
        }
        auto& a = *f.algebra;
        auto& p = a.presentation;
        if (key == "builtin") {
            a.builtin = value;
        } else if (key == "name") {
            p.name = value;
        } else if (key == "generator") {
            const auto parts = split_ws(value);
            const auto deg = parts.size() == 2 ? to_int(parts[1]) : std::nullopt;
            if (!deg || *deg <= 0)
                fail(source, line, "generator needs a name and a positive degree");
            p.generators.push_back({parts[0], *deg});
        } else if (key == "relation") {
            try {
                p.relations.push_back({value, hopf::parse_polynomial(p.generators, value)});
            } catch (const hopf::PresentationError& e) {
                fail(source, line, e.what());
            }
        } else if (key == "coproduct") {
            // g : L|R + L|R ...
            const auto colon = value.find(':');
            if (colon == std::string::npos)
                fail(source, line, "expected 'generator : left|right + ...'");
            const auto g = parse_word_at(p, trim(value.substr(0, colon)), source, line);
            if (g.size() != 1)
                fail(source, line, "coproduct must name one generator");
            hopf::CoproductSpec spec;
            std::istringstream terms(value.substr(colon + 1));
            std::string term;
            while (std::getline(terms, term, '+')) {
                const auto bar = term.find('|');
                if (bar == std::string::npos)
                    fail(source, line, "coproduct term '" + trim(term) + "' lacks '|'");
                spec.terms.push_back({parse_word_at(p, term.substr(0, bar), source, line),
                                      parse_word_at(p, term.substr(bar + 1), source, line)});
            }
            p.coproducts[g[0]] = spec;
        } else if (key == "bound") {
            const auto b = to_int(value);
            if (!b || *b <= 0)
                fail(source, line, "bound must be a positive integer");
            p.degree_bound = *b;
        } else {
            fail(source, line, "unknown algebra key '" + key + "'");
        }
    }
    if (f.algebra && f.algebra->builtin.empty() && f.algebra->presentation.generators.empty())
        fail(source, f.algebra->line, "[algebra] needs 'builtin' or generators");
    for (const auto& m : f.modules)
        if (m.name.empty())
            fail(source, m.line, "[module] without a name");
    return f;
}

HopfPtr build_algebra(const AlgebraSpec& spec, const std::string& source)
{
    if (!spec.builtin.empty()) {
        auto alg = hopf::builtin_by_name(spec.builtin);
        if (!alg)
            fail(source, spec.line, "unknown built-in algebra '" + spec.builtin + "'");
        return alg;
    }
    auto p = spec.presentation;
    if (p.name.empty())
        p.name = source;
    try {
        return std::make_shared<const hopf::HopfAlgebra>(hopf::from_presentation(p));
    } catch (const std::exception& e) {
        fail(source, spec.line, e.what());
    }
}

AModule build_module(HopfPtr alg, const ModuleSpec& spec, const std::string& source)
{
    if (!spec.algebra.empty() && spec.algebra != alg->name)
        fail(source, spec.line, "module '" + spec.name + "' is declared over " + spec.algebra + ", not " + alg->name);
    // Integer tokens that are not basis names index the basis.
    auto resolve = [&](const std::string& tok) {
        for (const auto& [nm, d] : spec.basis)
            if (nm == tok)
                return tok;
        if (auto k = to_int(tok); k && *k >= 0 && *k < static_cast<int>(spec.basis.size()))
            return spec.basis[static_cast<std::size_t>(*k)].first;
        return tok;
    };
    auto arrows = spec.arrows;
    for (auto& a : arrows) {
        a.source = resolve(a.source);
        for (auto& t : a.targets)
            t = resolve(t);
    }
    AModule m;
    try {
        m = gmod::module_from_arrows(alg, spec.basis, arrows);
    } catch (const std::exception& e) {
        fail(source, spec.line, "module '" + spec.name + "': " + e.what());
    }
    const auto problems = gmod::validate_module(m);
    if (!problems.empty())
        fail(source, spec.line, "module '" + spec.name + "': " + problems.front());
    return m;
}

HopfPtr load_algebra(const std::string& arg, const WorkspaceConfig& cfg)
{
    if (auto alg = hopf::builtin_by_name(arg))
        return alg;
    const auto path = find_file(arg, cfg);
    if (!path)
        throw InputError(arg + ": not a built-in algebra or a readable file");
    const auto f = parse_input(read_file(*path), arg);
    if (!f.algebra)
        throw InputError(arg + ": no [algebra] section");
    return build_algebra(*f.algebra, arg);
}

AModule load_module(HopfPtr alg, const std::string& arg, const WorkspaceConfig& cfg)
{
    const std::string& a = alg->name;
    if (arg == "unit")
        return gmod::unit_module(alg);
    if (arg == "M" || arg == "N") {
        if (a != "E1")
            throw InputError(arg + ": defined over E1, not " + a);
        return arg == "M" ? gmod::module_M() : gmod::module_N();
    }
    if (arg == "joker") {
        if (a != "A1")
            throw InputError("joker: defined over A1, not " + a);
        return gmod::joker();
    }
    std::string file = arg, name;
    auto path = find_file(file, cfg);
    if (!path) {
        const auto colon = arg.rfind(':');
        if (colon != std::string::npos) {
            file = arg.substr(0, colon);
            name = arg.substr(colon + 1);
            path = find_file(file, cfg);
        }
    }
    if (!path)
        throw InputError(arg + ": not a built-in module or a readable file");
    const auto f = parse_input(read_file(*path), file);
    if (f.modules.empty())
        throw InputError(file + ": no [module] section");
    if (name.empty())
        return build_module(alg, f.modules.front(), file);
    for (const auto& m : f.modules)
        if (m.name == name)
            return build_module(alg, m, file);
    throw InputError(file + ": no module named '" + name + "'");
}

std::string dump_module(const AModule& m, const std::string& name)
{
    // Basis names must survive the tokenizer: no blanks, ':', '#' or "->", no repeats.
    std::vector<std::string> names;
    for (auto nm : m.names) {
        for (auto& ch : nm)
            if (ch == ' ' || ch == '\t' || ch == ':' || ch == '#' || ch == '>')
                ch = '_';
        if (nm.empty())
            nm = "_";
        std::string base = nm;
        for (int k = 2; std::find(names.begin(), names.end(), nm) != names.end(); ++k)
            nm = base + "~" + std::to_string(k);
        names.push_back(nm);
    }
    std::ostringstream out;
    out << "[module]\nname = " << name << "\nalgebra = " << m.alg->name << "\nbasis =";
    for (int i = 0; i < m.dim(); ++i)
        out << " " << names[static_cast<std::size_t>(i)] << ":" << m.degrees[static_cast<std::size_t>(i)];
    out << "\n[action]\n";
    for (int g = 0; g < m.alg->num_generators(); ++g) {
        const auto& a = m.gens[static_cast<std::size_t>(g)];
        for (std::size_t c = 0; c < a.cols(); ++c) {
            std::string targets;
            for (std::size_t r = 0; r < a.rows(); ++r)
                if (a.get(r, c))
                    targets += " " + names[r];
            if (!targets.empty())
                out << m.alg->generator_name(g) << " " << names[c] << " ->" << targets << "\n";
        }
    }
    return out.str();
}

} // namespace stabmod::cli
