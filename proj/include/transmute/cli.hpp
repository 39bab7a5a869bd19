#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "transmute/energy_plane.hpp"
#include "transmute/errors.hpp"
#include "transmute/tolerances.hpp"

namespace transmute::cli {

/// Bad command line or configuration file. Exit code 2.
class UsageError : public Error {
public:
    using Error::Error;
};

enum class OutputFormat { Csv, Json };

/// Flat key=value configuration, keys equal to the long flag names.
using ConfigMap = std::map<std::string, std::string>;

/// Parse `key = value` lines; '#' starts a comment. Repeated keys append
/// with a comma (used by tol-override).
ConfigMap parse_config_text(const std::string& text);

struct ScanConfig {
    std::string command;
    std::vector<std::string> regulators;
    std::vector<double> epsilons;
    std::vector<double> cutoffs;
    double width = 1.0;
    std::vector<double> energies;
    /// Argument in [0, pi] of the flow ray.
    double ray_arg = 0.5 * kPi;
    ComplexEnergy z = ComplexEnergy::interior(0.0, 1.0);
    ComplexEnergy anchor = ComplexEnergy::interior(0.0, 1.0);
    complex tau0{kFourPi, 0.0};
    double binding_energy = 1.0;
    int steps = 10;
    std::string model = "renormalized";
    PhysicalScales scales;
    OutputFormat format = OutputFormat::Csv;
    std::string out;
    Tolerances tol;
    unsigned threads = 0;
};

/// Validate and type the merged configuration for one command.
ScanConfig build_config(const std::string& command, const ConfigMap& values);

using Cell = std::variant<double, std::int64_t, std::string>;

struct Table {
    std::string command;
    /// Header comment block: one line per column group naming the relation
    /// it realizes.
    std::vector<std::string> comments;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
    /// Trailing metadata records.
    std::vector<std::pair<std::string, Cell>> footer;
};

/// Fixed 17-significant-digit scientific rendering.
std::string format_double(double v);

std::string render_csv(const Table& table);
std::string render_json(const Table& table);
std::string render(const Table& table, OutputFormat format);

Table run_command(const ScanConfig& config);

/// TRANSMUTE_LAB_THREADS, 0 when unset or invalid.
unsigned threads_from_environment();

/// Full driver: parse args (excluding argv[0]), run, write output.
/// Returns 0 on success, 1 on numerical failure (nothing written),
/// 2 on usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace transmute::cli
