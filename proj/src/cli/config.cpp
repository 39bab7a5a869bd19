#include <cmath>
#include <cstdlib>
#include <sstream>

#include "transmute/cli.hpp"

namespace transmute::cli {
namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, sep)) {
        parts.push_back(trim(item));
    }
    return parts;
}

double parse_number(const std::string& text, const std::string& key) {
    const std::string t = trim(text);
    char* end = nullptr;
    const double v = std::strtod(t.c_str(), &end);
    if (t.empty() || end != t.c_str() + t.size() || !std::isfinite(v)) {
        throw UsageError("invalid number '" + text + "' for " + key);
    }
    return v;
}

int parse_count(const std::string& text, const std::string& key) {
    const double v = parse_number(text, key);
    if (v != std::floor(v) || v < 1 || v > 1e6) {
        throw UsageError("invalid count '" + text + "' for " + key);
    }
    return static_cast<int>(v);
}

std::vector<double> spaced(double lo, double hi, int n, bool logarithmic, const std::string& key) {
    if (logarithmic && !(lo > 0.0 && hi > 0.0)) {
        throw UsageError(key + ": log-spaced bounds must be positive");
    }
    if (n == 1) {
        return {lo};
    }
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double t = static_cast<double>(i) / (n - 1);
        if (i == 0) {
            out.push_back(lo);
        } else if (i == n - 1) {
            out.push_back(hi);
        } else if (logarithmic) {
            out.push_back(std::exp(std::log(lo) + t * (std::log(hi) - std::log(lo))));
        } else {
            out.push_back(lo + t * (hi - lo));
        }
    }
    return out;
}

// "v" | "lo:hi:n[,log|,lin]" | "v1,v2,..."
std::vector<double> parse_grid(const std::string& text, const std::string& key, bool default_log) {
    const std::string t = trim(text);
    if (t.empty()) {
        throw UsageError(key + " must not be empty");
    }
    if (t.find(':') != std::string::npos) {
        auto parts = split(t, ',');
        bool logarithmic = default_log;
        if (parts.size() == 2) {
            if (parts[1] == "log") {
                logarithmic = true;
            } else if (parts[1] == "lin") {
                logarithmic = false;
            } else {
                throw UsageError(key + ": spacing must be 'log' or 'lin'");
            }
        } else if (parts.size() != 1) {
            throw UsageError(key + ": expected lo:hi:n[,log|,lin]");
        }
        const auto bounds = split(parts[0], ':');
        if (bounds.size() != 3) {
            throw UsageError(key + ": expected lo:hi:n");
        }
        return spaced(parse_number(bounds[0], key), parse_number(bounds[1], key), parse_count(bounds[2], key),
                      logarithmic, key);
    }
    std::vector<double> out;
    for (const auto& p : split(t, ',')) {
        out.push_back(parse_number(p, key));
    }
    return out;
}

void require_positive(const std::vector<double>& values, const std::string& key) {
    for (double v : values) {
        if (!(v > 0.0)) {
            throw UsageError(key + " values must be positive");
        }
    }
}

// "re:im" with im > 0 (interior) or im == "0+" (boundary value re + i0+).
ComplexEnergy parse_energy(const std::string& text, const std::string& key) {
    const auto parts = split(text, ':');
    if (parts.size() != 2) {
        throw UsageError(key + ": expected re:im or re:0+");
    }
    const double re = parse_number(parts[0], key);
    try {
        if (parts[1] == "0+") {
            return ComplexEnergy::above(re);
        }
        return ComplexEnergy::interior(re, parse_number(parts[1], key));
    } catch (const DomainError& e) {
        throw UsageError(key + ": " + e.what());
    }
}

complex parse_complex(const std::string& text, const std::string& key) {
    const auto parts = split(text, ':');
    if (parts.size() != 2) {
        throw UsageError(key + ": expected re:im");
    }
    return {parse_number(parts[0], key), parse_number(parts[1], key)};
}

ConfigMap defaults_for(const std::string& command) {
    ConfigMap d{
        {"kinetic-constant", "1"},
        {"width", "1"},
        {"format", "csv"},
    };
    if (command == "flow") {
        d["regulator"] = "pure-delta";
        d["anchor"] = "0:1";
        d["tau0"] = "12.566370614359172:0";
        d["energy"] = "1:2980.9579870417283:9,log";
        d["lambda"] = "1e8";
        d["width"] = "1e-4";
    } else if (command == "bind") {
        d["regulator"] = "pure-delta,sharp-cutoff,gaussian,circular-well";
        d["epsilon"] = "0.5:2:7";
        d["lambda"] = "1";
    } else if (command == "theorem") {
        d["epsilon"] = "1";
        d["z"] = "0:1";
        d["lambda"] = "1e2:1e12:11";
    } else if (command == "transmute") {
        d["eb"] = "1";
        d["z"] = "2:0+";
        d["steps"] = "10";
    } else if (command == "scatter") {
        d["model"] = "renormalized";
        d["eb"] = "1";
        d["energy"] = "1e-6:1e6:13,log";
        d["regulator"] = "sharp-cutoff";
        d["epsilon"] = "1";
        d["lambda"] = "1e6";
    } else {
        throw UsageError("unknown command '" + command + "'");
    }
    return d;
}

bool known_regulator(const std::string& name) {
    return name == "pure-delta" || name == "sharp-cutoff" || name == "gaussian" || name == "circular-well";
}

}  // namespace

ConfigMap parse_config_text(const std::string& text) {
    ConfigMap values;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) {
            line.erase(hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw UsageError("config line " + std::to_string(lineno) + ": expected key = value");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) {
            throw UsageError("config line " + std::to_string(lineno) + ": empty key");
        }
        auto [it, inserted] = values.emplace(key, value);
        if (!inserted) {
            it->second += "," + value;
        }
    }
    return values;
}

ScanConfig build_config(const std::string& command, const ConfigMap& values) {
    ConfigMap merged = defaults_for(command);
    static const char* known[] = {"regulator", "epsilon", "lambda", "width", "energy", "arg",   "z",
                                  "anchor",    "tau0",    "eb",     "steps", "model",  "out",   "format",
                                  "tol-override", "kinetic-constant"};
    for (const auto& [key, value] : values) {
        bool ok = false;
        for (const char* k : known) {
            ok = ok || key == k;
        }
        if (!ok) {
            throw UsageError("unknown configuration key '" + key + "'");
        }
        merged[key] = value;
    }

    ScanConfig cfg;
    cfg.command = command;
    try {
        cfg.scales = PhysicalScales(parse_number(merged["kinetic-constant"], "kinetic-constant"));
    } catch (const DomainError&) {
        throw UsageError("kinetic-constant must be positive");
    }
    cfg.width = parse_number(merged["width"], "width");
    if (!(cfg.width > 0.0)) {
        throw UsageError("width must be positive");
    }

    const std::string format = merged["format"];
    if (format == "csv") {
        cfg.format = OutputFormat::Csv;
    } else if (format == "json") {
        cfg.format = OutputFormat::Json;
    } else {
        throw UsageError("format must be csv or json");
    }
    cfg.out = merged.count("out") ? merged["out"] : "";

    if (merged.count("regulator")) {
        for (const auto& name : split(merged["regulator"], ',')) {
            if (!known_regulator(name)) {
                throw UsageError("unknown regulator '" + name + "'");
            }
            cfg.regulators.push_back(name);
        }
        if (cfg.regulators.empty()) {
            throw UsageError("regulator list is empty");
        }
    }
    if (merged.count("epsilon")) {
        cfg.epsilons = parse_grid(merged["epsilon"], "epsilon", false);
        require_positive(cfg.epsilons, "epsilon");
    }
    if (merged.count("lambda")) {
        cfg.cutoffs = parse_grid(merged["lambda"], "lambda", true);
        require_positive(cfg.cutoffs, "lambda");
    }
    if (merged.count("energy")) {
        cfg.energies = parse_grid(merged["energy"], "energy", true);
        require_positive(cfg.energies, "energy");
    }
    if (merged.count("z")) {
        cfg.z = parse_energy(merged["z"], "z");
    }
    if (merged.count("anchor")) {
        cfg.anchor = parse_energy(merged["anchor"], "anchor");
    }
    cfg.ray_arg = cfg.anchor.arg();
    if (merged.count("arg")) {
        cfg.ray_arg = parse_number(merged["arg"], "arg");
        if (cfg.ray_arg < 0.0 || cfg.ray_arg > kPi) {
            throw UsageError("arg must lie in [0, pi]");
        }
    }
    if (merged.count("tau0")) {
        cfg.tau0 = parse_complex(merged["tau0"], "tau0");
    }
    if (merged.count("eb")) {
        cfg.binding_energy = parse_number(merged["eb"], "eb");
        if (!(cfg.binding_energy > 0.0)) {
            throw UsageError("eb must be positive");
        }
    }
    if (merged.count("steps")) {
        cfg.steps = parse_count(merged["steps"], "steps");
        if (cfg.steps < 2) {
            throw UsageError("steps must be >= 2");
        }
    }
    if (merged.count("model")) {
        cfg.model = merged["model"];
        if (cfg.model != "renormalized" && cfg.model != "regulated" && cfg.model != "zero" &&
            cfg.model != "circular-well") {
            throw UsageError("model must be renormalized, regulated, zero or circular-well");
        }
    }
    if (merged.count("tol-override")) {
        for (const auto& item : split(merged["tol-override"], ',')) {
            const auto eq = item.find('=');
            if (eq == std::string::npos) {
                throw UsageError("tol-override expects name=value");
            }
            const std::string name = trim(item.substr(0, eq));
            if (!cfg.tol.set(name, parse_number(item.substr(eq + 1), "tol-override"))) {
                throw UsageError("unknown or non-positive tolerance '" + name + "'");
            }
        }
    }
    return cfg;
}

unsigned threads_from_environment() {
    const char* value = std::getenv("TRANSMUTE_LAB_THREADS");
    if (!value) {
        return 0;
    }
    char* end = nullptr;
    const long n = std::strtol(value, &end, 10);
    if (end == value || *end != '\0' || n < 0 || n > 1024) {
        return 0;
    }
    return static_cast<unsigned>(n);
}

}  // namespace transmute::cli
