#include "doctest.h"

#include "random_modules.hpp"
#include "stabmod/cli/cli.hpp"
#include "stabmod/hopf/builtins.hpp"

#include <filesystem>
#include <fstream>
#include <random>
#include <unistd.h>

using namespace stabmod;
using namespace stabmod::cli;
using test_support::random_module;

namespace {

namespace fs = std::filesystem;

fs::path scratch_dir(const std::string& tag)
{
    auto p = fs::temp_directory_path() / ("stabmod_cli_" + tag + "_" + std::to_string(::getpid()));
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

void write_file(const fs::path& p, const std::string& s)
{
    std::ofstream out(p, std::ios::binary);
    out << s;
}

bool same_module(const AModule& a, const AModule& b)
{
    return a.alg == b.alg && a.degrees == b.degrees && a.gens == b.gens;
}

bool same_resolution(const stable::CompleteResolution& a, const stable::CompleteResolution& b)
{
    return a.s_min == b.s_min && a.s_max == b.s_max && a.generators == b.generators && a.differential == b.differential &&
           a.augmentation == b.augmentation && a.coaugmentation == b.coaugmentation;
}

/// Message of the InputError thrown by f, or empty.
template <class F>
std::string input_error(F f)
{
    try {
        f();
    } catch (const InputError& e) {
        return e.what();
    }
    return "";
}

} // namespace

TEST_CASE("cli: dumped modules parse back to the same module")
{
    std::mt19937_64 rng(5101);
    const hopf::HopfPtr algs[] = {hopf::builtin_A1(), hopf::builtin_E1()};
    for (int i = 0; i < 200; ++i) {
        auto alg = algs[i % 2];
        auto m = random_module(rng, alg, 8);
        if (i % 5 == 0)
            m = gmod::tensor(m, random_module(rng, alg, 3)); // names with blanks and tensor signs
        const auto f = parse_input(dump_module(m, "x"), "dump");
        REQUIRE(f.modules.size() == 1);
        CHECK(same_module(build_module(alg, f.modules[0], "dump"), m));
    }
}

TEST_CASE("cli: integer tokens index the basis")
{
    const std::string text = "[module]\nname = two\nbasis = a:0 b:1\n[action]\nSq1 0 -> 1\n";
    auto m = build_module(hopf::builtin_A1(), parse_input(text, "t").modules[0], "t");
    CHECK(m.gens[0].get(1, 0));
}

TEST_CASE("cli: diagnostics carry source and line")
{
    auto a1 = hopf::builtin_A1();
    CHECK(input_error([] { parse_input("# c\n\n[modules]\n", "f"); }).rfind("f:3:", 0) == 0);
    CHECK(input_error([] { parse_input("[action]\n", "f"); }).rfind("f:1:", 0) == 0);
    CHECK(input_error([] { parse_input("[module]\nname = m\nbasis = a:0 b\n", "f"); }).rfind("f:3:", 0) == 0);
    CHECK(input_error([] { parse_input("[module]\nbasis = a:0\n", "f"); }).rfind("f:1:", 0) == 0);
    CHECK(input_error([] { parse_input("[algebra]\ngenerator = x 0\n", "f"); }).rfind("f:2:", 0) == 0);
    CHECK(input_error([] { parse_input("[algebra]\ngenerator = x 1\nrelation = x y\n", "f"); }).rfind("f:3:", 0) == 0);
    const std::string bad_gen = "\n[module]\nname = m\nbasis = a:0 b:1\n[action]\nSq9 a -> b\n";
    CHECK(input_error([&] { build_module(a1, parse_input(bad_gen, "g").modules[0], "g"); }).rfind("g:2:", 0) == 0);
    // Sq1 Sq1 = 0 fails.
    const std::string bad_rel = "[module]\nname = m\nbasis = a:0 b:1 c:2\n[action]\nSq1 a -> b\nSq1 b -> c\n";
    CHECK(input_error([&] { build_module(a1, parse_input(bad_rel, "h").modules[0], "h"); }).find("relation") != std::string::npos);
    const std::string wrong_alg = "[module]\nname = m\nalgebra = E1\nbasis = a:0\n";
    CHECK_FALSE(input_error([&] { build_module(a1, parse_input(wrong_alg, "k").modules[0], "k"); }).empty());
}

TEST_CASE("cli: an algebra given by a presentation file")
{
    auto dir = scratch_dir("alg");
    write_file(dir / "ext.alg", "[algebra]\nname = X\ngenerator = Q0 1\ngenerator = Q1 3\n"
                                "relation = Q0 Q0\nrelation = Q1 Q1\nrelation = Q0 Q1 + Q1 Q0\n");
    WorkspaceConfig cfg;
    cfg.search_paths = {dir.string()};
    auto x = load_algebra("ext.alg", cfg);
    CHECK(x->dim() == 4);
    // Same exterior algebra with primitive generators as E1: identical Ext charts.
    const stable::ChartWindow w{-3, 4, -16, 14};
    const auto a = stable::ext(gmod::unit_module(x), gmod::unit_module(x), w);
    const auto b = stable::ext(gmod::unit_module(hopf::builtin_E1()), gmod::unit_module(hopf::builtin_E1()), w);
    CHECK(a.dims == b.dims);
    fs::remove_all(dir);
}

TEST_CASE("cli: cache entries round trip and reject corruption")
{
    std::mt19937_64 rng(5102);
    const hopf::HopfPtr algs[] = {hopf::builtin_A1(), hopf::builtin_E1()};
    for (int i = 0; i < 200; ++i) {
        auto alg = algs[i % 2];
        auto m = random_module(rng, alg, 6);
        const int lo = -1 - static_cast<int>(rng() % 3), hi = static_cast<int>(rng() % 3);
        const auto r = stable::complete_resolution(m, lo, hi);
        const auto bytes = serialize_resolution(r);
        auto back = deserialize_resolution(bytes, m);
        REQUIRE(back);
        CHECK(same_resolution(*back, r));
        auto flipped = bytes;
        flipped[rng() % flipped.size()] ^= static_cast<char>(1 + rng() % 255);
        CHECK_FALSE(deserialize_resolution(flipped, m));
        CHECK_FALSE(deserialize_resolution(bytes.substr(0, rng() % bytes.size()), m));
        // Keyed by content: a shifted module does not match.
        CHECK_FALSE(deserialize_resolution(bytes, gmod::shift(m, 1)));
    }
}

TEST_CASE("cli: cached resolutions are published and revalidated")
{
    auto dir = scratch_dir("cache");
    auto m = gmod::unit_module(hopf::builtin_A1());
    const auto r1 = cached_resolution(m, -2, 3, dir.string());
    const auto path = dir / (resolution_key(m, -2, 3) + ".res");
    REQUIRE(fs::is_regular_file(path));
    CHECK(same_resolution(cached_resolution(m, -2, 3, dir.string()), r1));
    // A damaged entry is rebuilt silently.
    write_file(path, "garbage");
    CHECK(same_resolution(cached_resolution(m, -2, 3, dir.string()), r1));
    std::ifstream in(path, std::ios::binary);
    std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(deserialize_resolution(bytes, m));
    int leftovers = 0;
    for (auto& e : fs::directory_iterator(dir))
        leftovers += e.path().string().find(".tmp.") != std::string::npos;
    CHECK(leftovers == 0);
    fs::remove_all(dir);
}

TEST_CASE("cli: chart text round trip")
{
    std::mt19937_64 rng(5103);
    for (int i = 0; i < 200; ++i) {
        stable::BigradedChart c;
        const int s0 = static_cast<int>(rng() % 7) - 3, t0 = static_cast<int>(rng() % 11) - 5;
        c.window = {s0, s0 + static_cast<int>(rng() % 5), t0, t0 + static_cast<int>(rng() % 9)};
        for (int k = static_cast<int>(rng() % 8); k > 0; --k) {
            const int s = c.window.s_min + static_cast<int>(rng() % static_cast<unsigned>(c.window.s_max - c.window.s_min + 1));
            const int t = c.window.t_min + static_cast<int>(rng() % static_cast<unsigned>(c.window.t_max - c.window.t_min + 1));
            const int d = 1 + static_cast<int>(rng() % 3);
            c.dims[{s, t}] = d;
            if (rng() & 1) {
                std::vector<std::string> labels;
                for (int j = 0; j < d; ++j)
                    labels.push_back("v" + std::to_string(rng() % 9) + "^" + std::to_string(j));
                c.labels[{s, t}] = labels;
            }
        }
        const auto text = render_chart_text(c, "random chart");
        const auto [back, title] = parse_chart_text(text, "r");
        CHECK(title == "random chart");
        CHECK(back.dims == c.dims);
        CHECK(back.labels == c.labels);
        CHECK(render_chart_text(back, title) == text);
    }
}

TEST_CASE("cli: svg charts place classes in Adams orientation")
{
    stable::BigradedChart c;
    c.window = {0, 2, 0, 4};
    c.dims[{1, 2}] = 2;
    const auto svg = render_chart_svg(c, "t", false);
    // x = t - s ranges over [-2, 4]; the class at (s, t) = (1, 2) sits in column 3 and row 1 from the top.
    const int cx = 36 + 3 * 24 + 12, top = 36 + 1 * 24;
    CHECK(svg.find("<circle cx=\"" + std::to_string(cx) + "\" cy=\"" + std::to_string(top + 8) + "\"") != std::string::npos);
    CHECK(svg.find("<circle cx=\"" + std::to_string(cx) + "\" cy=\"" + std::to_string(top + 16) + "\"") != std::string::npos);
}

TEST_CASE("cli: commands map failures to exit codes")
{
    WorkspaceConfig cfg;
    CHECK(guarded([&] { return cmd_ext("A1", "M", "unit", cfg); }).exit_code == 1);
    CHECK(guarded([&] { return cmd_ext("B7", "unit", "unit", cfg); }).exit_code == 1);
    CHECK(guarded([&] { return cmd_lift("A1", "N", "guess", cfg); }).exit_code == 1);
    CHECK(guarded([&] { return cmd_descent("E1", "unit", 2, false, cfg); }).exit_code == 1);
    CHECK(guarded([] () -> CommandResult { throw ConsistencyError("x"); }).exit_code == 2);
    // M has no first-order datum: E2 is undetermined, which is not an error.
    const auto d = guarded([&] { return cmd_descent("A1", "M", 2, false, cfg); });
    CHECK(d.exit_code == 0);
    CHECK(d.output.find("status undetermined") != std::string::npos);
}

TEST_CASE("cli: reports")
{
    WorkspaceConfig cfg;
    const auto pic = cmd_pic("A1", cfg).output;
    CHECK(pic.find("group Z ⊕ Z ⊕ Z/2\n") != std::string::npos);
    CHECK(pic.find("status determined\n") != std::string::npos);
    CHECK(cmd_lift("A1", "N", "census", cfg).output.find("\nclasses 8\n") != std::string::npos);
    CHECK(cmd_lift("A1", "M", "census", cfg).output.find("\nclasses 0\n") != std::string::npos);
    CHECK(cmd_lift("A1", "N", "bound", cfg).output.find("\nbound 8\n") != std::string::npos);
    // An A1-module as base is restricted first: the unit lifts to itself and the joker.
    CHECK(cmd_lift("A1", "unit", "census", cfg).output.find("\nclasses 2\n") != std::string::npos);
    const auto red = cmd_reduce("A1", "joker", cfg).output;
    CHECK(red.find("free_rank 0") != std::string::npos);
}
