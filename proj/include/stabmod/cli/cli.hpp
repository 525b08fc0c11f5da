#pragma once

#include "stabmod/descent/descent.hpp"
#include "stabmod/hopf/presentation.hpp"
#include "stabmod/stable/stable.hpp"

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace stabmod::cli {

using f2::BitMatrix;
using gmod::AModule;
using hopf::HopfPtr;

enum class Format { Text, Svg };

struct WorkspaceConfig
{
    /// Empty disables the resolution cache.
    std::string cache_dir;
    stable::ChartWindow ext_window{0, 10, 0, 24};
    descent::PageWindow page_window{-4, 4, -12, 16, 0, 3};
    Format format = Format::Text;
    bool labels = false;
    std::vector<std::string> search_paths;
};

/// Malformed or invalid input; exit code 1. The message carries "source:line: " when known.
class InputError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// A computed object failed its own checks; exit code 2.
class ConsistencyError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

struct ModuleSpec
{
    std::string name;
    std::string algebra; // empty: the algebra of the command
    int line = 0;
    std::vector<std::pair<std::string, int>> basis;
    std::vector<gmod::Arrow> arrows;
};

struct AlgebraSpec
{
    int line = 0;
    std::string builtin;
    hopf::Presentation presentation;
};

struct InputFile
{
    std::string source;
    std::optional<AlgebraSpec> algebra;
    std::vector<ModuleSpec> modules;
};

/// Line-oriented sections [algebra], [module], [action]; '#' starts a comment.
InputFile parse_input(const std::string& text, const std::string& source);
HopfPtr build_algebra(const AlgebraSpec& spec, const std::string& source);
AModule build_module(HopfPtr alg, const ModuleSpec& spec, const std::string& source);

/// A built-in name (A1, E1) or a file holding an [algebra] section.
HopfPtr load_algebra(const std::string& arg, const WorkspaceConfig& cfg);
/// A built-in name (unit, M, N, joker) or "file" / "file:name".
AModule load_module(HopfPtr alg, const std::string& arg, const WorkspaceConfig& cfg);

/// Module in the input grammar; parsing it back gives the same module.
std::string dump_module(const AModule& m, const std::string& name);

std::string render_chart_text(const stable::BigradedChart& c, const std::string& title);
/// Adams orientation: x = t - s, y = s; one unit square per bidegree, dots stacked for dimension > 1.
std::string render_chart_svg(const stable::BigradedChart& c, const std::string& title, bool labels);
/// Inverse of render_chart_text (title included).
std::pair<stable::BigradedChart, std::string> parse_chart_text(const std::string& text, const std::string& source);

std::string render_page_text(const descent::SSPage& p);
/// One chart per level n, laid out left to right.
std::string render_page_svg(const descent::SSPage& p, bool labels);

/// Content hash of (algebra, module, window); the cache file name.
std::string resolution_key(const AModule& m, int s_min, int s_max);
std::string serialize_resolution(const stable::CompleteResolution& r);
/// Nullopt on version, checksum or shape mismatch, or if the loaded resolution fails check_resolution.
std::optional<stable::CompleteResolution> deserialize_resolution(const std::string& bytes, const AModule& m);
/// Loads from cache_dir when possible, otherwise computes and publishes by atomic rename.
stable::CompleteResolution cached_resolution(const AModule& m, int s_min, int s_max, const std::string& cache_dir);

/// Writes through a temporary file and a rename.
void write_atomic(const std::string& path, const std::string& content);

struct CommandResult
{
    int exit_code = 0;
    std::string output;
};

CommandResult cmd_validate(const std::string& algebra, const std::vector<std::string>& modules, const WorkspaceConfig& cfg);
CommandResult cmd_ext(const std::string& algebra, const std::string& m, const std::string& n, const WorkspaceConfig& cfg);
CommandResult cmd_resolve(const std::string& algebra, const std::string& m, const WorkspaceConfig& cfg);
CommandResult cmd_reduce(const std::string& algebra, const std::string& m, const WorkspaceConfig& cfg);
CommandResult cmd_tensor(const std::string& algebra, const std::string& m, const std::string& n, const WorkspaceConfig& cfg);
CommandResult cmd_restrict(const std::string& algebra, const std::string& m, const std::string& sub, const WorkspaceConfig& cfg);
/// page_r is 1 or 2; with abutment, E2 is reconciled against Ext over the ambient algebra.
CommandResult cmd_descent(const std::string& algebra, const std::string& coefficients, int page_r, bool abutment,
                          const WorkspaceConfig& cfg);
CommandResult cmd_pic(const std::string& algebra, const WorkspaceConfig& cfg);
/// mode is obstruction, bound or census.
CommandResult cmd_lift(const std::string& algebra, const std::string& base, const std::string& mode, const WorkspaceConfig& cfg);
/// Re-renders a chart written by cmd_ext in text format.
CommandResult cmd_chart(const std::string& chart_file, const WorkspaceConfig& cfg);

/// Runs a command and maps exceptions to exit codes and diagnostics.
CommandResult guarded(const std::function<CommandResult()>& body);

} // namespace stabmod::cli
