#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <fstream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "transmute/amplitude.hpp"
#include "transmute/cli.hpp"
#include "transmute/fit.hpp"
#include "transmute/observables.hpp"
#include "transmute/oracle/well.hpp"
#include "transmute/regulators.hpp"

namespace transmute::cli {
namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

using Row = std::vector<Cell>;

unsigned worker_count(unsigned requested, std::size_t rows) {
    unsigned n = requested ? requested : std::max(1u, std::thread::hardware_concurrency());
    return static_cast<unsigned>(std::min<std::size_t>(n, std::max<std::size_t>(rows, 1)));
}

// Evaluates fn(0..n-1) on a worker pool; results and the first failure
// (by row index) are reported in input order.
template <class Fn>
auto parallel_rows(std::size_t n, unsigned threads, Fn fn) -> std::vector<decltype(fn(std::size_t{}))> {
    using Result = decltype(fn(std::size_t{}));
    std::vector<std::optional<Result>> results(n);
    std::vector<std::exception_ptr> failures(n);
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < n; i = next++) {
            try {
                results[i].emplace(fn(i));
            } catch (...) {
                failures[i] = std::current_exception();
            }
        }
    };
    const unsigned workers = worker_count(threads, n);
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back(work);
        }
    }
    std::vector<Result> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (failures[i]) {
            std::rethrow_exception(failures[i]);
        }
        out.push_back(std::move(*results[i]));
    }
    return out;
}

Regulator make_regulator(const std::string& name, const ScanConfig& cfg, double cutoff) {
    if (name == "pure-delta") return PureDelta{};
    if (name == "sharp-cutoff") return make_sharp_cutoff(cutoff);
    if (name == "gaussian") return make_gaussian(cfg.width);
    return make_circular_well(cfg.width);
}

double first_or(const std::vector<double>& v, const char* key) {
    if (v.empty()) {
        throw UsageError(std::string(key) + " is required for this command");
    }
    return v.front();
}

std::string flag(bool b) { return b ? "true" : "false"; }

double relative_gap(double a, double b) {
    const double scale = std::max(std::abs(a), std::abs(b));
    return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

ComplexEnergy ray_point(double modulus, double arg) {
    if (arg == 0.0) return ComplexEnergy::above(modulus);
    if (arg == kPi) return ComplexEnergy::above(-modulus);
    return ComplexEnergy::interior(modulus * std::cos(arg), modulus * std::sin(arg));
}

// --- flow -------------------------------------------------------------------

Table cmd_flow(const ScanConfig& cfg) {
    if (cfg.regulators.size() != 1 || cfg.regulators[0] == "circular-well") {
        throw UsageError("flow needs exactly one separable regulator");
    }
    if (!std::isfinite(cfg.tau0.real()) || !std::isfinite(cfg.tau0.imag())) {
        throw UsageError("flow anchor amplitude must be finite");
    }
    if (cfg.energies.empty()) {
        throw UsageError("flow needs an energy grid");
    }
    const Regulator reg = make_regulator(cfg.regulators[0], cfg, cfg.cutoffs.empty() ? 1e8 : cfg.cutoffs[0]);
    const FlowPoint anchor{cfg.anchor, Amplitude{cfg.tau0, Provenance::Computed}};

    Table t;
    t.command = "flow";
    t.comments = {
        "regulator: " + std::string(regulator_name(reg)),
        "anchor: z0 = " + format_double(cfg.anchor.re()) + " + i " + format_double(cfg.anchor.im()) +
            (cfg.anchor.boundary() ? " (boundary)" : "") + ", tau0 = " + format_double(cfg.tau0.real()) + " + i " +
            format_double(cfg.tau0.imag()),
        "z_re, z_im: energy on the ray arg z = " + format_double(cfg.ray_arg),
        "re_inv_tau, im_inv_tau: 1/tau(z) = 1/tau(z0) - kinetic_constant * G(z, z0); pure delta: G = ln(z/z0) / 4pi",
        "re_tau, im_tau: tau(z) = tau(z0) / (1 - tau(z0) * kinetic_constant * G(z, z0))",
        "status: OK or POLE",
    };
    t.columns = {"z_re", "z_im", "re_inv_tau", "im_inv_tau", "re_tau", "im_tau", "status"};

    struct FlowRow {
        ComplexEnergy z;
        std::optional<complex> tau;
    };
    const auto rows = parallel_rows(cfg.energies.size(), cfg.threads, [&](std::size_t i) {
        const ComplexEnergy z = ray_point(cfg.energies[i], cfg.ray_arg);
        try {
            return FlowRow{z, slide(anchor, reg, z, cfg.scales, cfg.tol).tau};
        } catch (const PoleSingularity&) {
            return FlowRow{z, std::nullopt};
        }
    });

    double max_defect = 0.0;
    std::vector<double> log_mod;
    std::vector<double> inv_re;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& r = rows[i];
        if (!r.tau) {
            t.rows.push_back({r.z.re(), r.z.im(), kNan, kNan, kNan, kNan, std::string("POLE")});
            continue;
        }
        const complex tau = *r.tau;
        const complex inv = tau == complex(0.0, 0.0) ? complex(std::numeric_limits<double>::infinity(), 0.0)
                                                     : 1.0 / tau;
        t.rows.push_back({r.z.re(), r.z.im(), inv.real(), inv.imag(), tau.real(), tau.imag(), std::string("OK")});
        if (tau != complex(0.0, 0.0)) {
            log_mod.push_back(std::log(r.z.modulus()));
            inv_re.push_back(inv.real());
        }
        if (i > 0 && rows[i - 1].tau) {
            // Group property: sliding through the previous row must agree.
            const FlowPoint via{rows[i - 1].z, Amplitude{*rows[i - 1].tau, Provenance::Computed}};
            try {
                const complex composed = slide(via, reg, r.z, cfg.scales, cfg.tol).tau;
                const double scale = std::abs(tau);
                const double defect = scale == 0.0 ? std::abs(composed) : std::abs(composed - tau) / scale;
                max_defect = std::max(max_defect, defect);
            } catch (const PoleSingularity&) {
                max_defect = std::numeric_limits<double>::infinity();
            }
        }
    }
    t.footer.emplace_back("max_group_defect", max_defect);
    t.footer.emplace_back("group_tolerance", cfg.tol.group_property);
    t.footer.emplace_back("group_property_ok", flag(max_defect <= cfg.tol.group_property));
    t.footer.emplace_back("inv_tau_slope_vs_ln_abs_z", fit_line(log_mod, inv_re).slope);
    t.footer.emplace_back("expected_slope_pure_delta", -1.0 / kFourPi);
    return t;
}

// --- bind -------------------------------------------------------------------

Table cmd_bind(const ScanConfig& cfg) {
    if (cfg.epsilons.empty()) {
        throw UsageError("bind needs an epsilon grid");
    }
    const double cutoff = first_or(cfg.cutoffs, "lambda");
    Table t;
    t.command = "bind";
    t.comments = {
        "epsilon: dimensionless attractive coupling",
        "E_B_solver: root of 1 + epsilon * I(-E_B + i0) = 0 (separable regulators) or of the circular-well "
        "s-wave matching condition",
        "E_B_closed_form: scale * exp(-4 pi / epsilon); scale = Lambda (sharp-cutoff) or kinetic_constant / a^2",
        "rel_dev: E_B_solver / E_B_closed_form - 1",
        "residue: residue of tau at z = -E_B (separable regulators)",
        "status: OK or NO_BOUND_STATE (pure-delta: no scattering and no binding)",
    };
    t.columns = {"epsilon", "regulator", "scale", "E_B_solver", "E_B_closed_form", "rel_dev", "residue", "status"};

    struct Job {
        double eps;
        std::string name;
    };
    std::vector<Job> jobs;
    for (double e : cfg.epsilons) {
        for (const auto& name : cfg.regulators) {
            jobs.push_back({e, name});
        }
    }
    const auto rows = parallel_rows(jobs.size(), cfg.threads, [&](std::size_t i) -> Row {
        const auto& job = jobs[i];
        const Regulator reg = make_regulator(job.name, cfg, cutoff);
        if (std::holds_alternative<PureDelta>(reg)) {
            return {job.eps, job.name, kNan, kNan, kNan, kNan, kNan, std::string("NO_BOUND_STATE")};
        }
        const double scale = characteristic_energy(reg, cfg.scales);
        const double closed = scale * std::exp(-kFourPi / job.eps);
        try {
            double eb;
            double residue = kNan;
            if (std::holds_alternative<CircularWell>(reg)) {
                eb = oracle::well_bound_state(oracle::WellParameters::from_coupling(job.eps, cfg.width, cfg.scales),
                                              cfg.scales);
            } else {
                const auto bs = bound_state_pole(Coupling(job.eps), reg, cfg.scales, cfg.tol);
                eb = bs.state->binding_energy;
                residue = bs.state->residue;
            }
            return {job.eps, job.name, scale, eb, closed, eb / closed - 1.0, residue, std::string("OK")};
        } catch (const NoBoundStateError&) {
            return {job.eps, job.name, scale, kNan, closed, kNan, kNan, std::string("NO_BOUND_STATE")};
        }
    });
    t.rows = rows;

    // ln(E_B / scale) against -4 pi / eps per regulator.
    std::optional<double> sharp_prefactor;
    std::vector<std::pair<std::string, LineFit>> fits;
    for (const auto& name : cfg.regulators) {
        std::vector<double> x;
        std::vector<double> y;
        for (const auto& row : rows) {
            if (std::get<std::string>(row[1]) == name && std::get<std::string>(row[7]) == "OK") {
                x.push_back(-kFourPi / std::get<double>(row[0]));
                y.push_back(std::log(std::get<double>(row[3]) / std::get<double>(row[2])));
            }
        }
        if (x.size() >= 2) {
            const LineFit fit = fit_line(x, y);
            fits.emplace_back(name, fit);
            if (name == "sharp-cutoff") {
                sharp_prefactor = std::exp(fit.intercept);
            }
        }
    }
    for (const auto& [name, fit] : fits) {
        t.footer.emplace_back("fit." + name + ".slope", fit.slope);
        t.footer.emplace_back("fit." + name + ".prefactor", std::exp(fit.intercept));
        if (sharp_prefactor) {
            t.footer.emplace_back("fit." + name + ".prefactor_ratio_to_sharp", std::exp(fit.intercept) / *sharp_prefactor);
        }
    }
    return t;
}

// --- theorem ----------------------------------------------------------------

Table cmd_theorem(const ScanConfig& cfg) {
    const Coupling eps(first_or(cfg.epsilons, "epsilon"));
    if (cfg.cutoffs.empty()) {
        throw UsageError("theorem needs a lambda schedule");
    }
    const auto demo = theorem_limit_demo(eps, cfg.z, cfg.cutoffs, cfg.scales);
    const Amplitude unregulated = tau_regulated(eps, PureDelta{}, cfg.z, cfg.scales);

    Table t;
    t.command = "theorem";
    t.comments = {
        "epsilon = " + format_double(eps.epsilon()) + ", z = " + format_double(cfg.z.re()) + " + i " +
            format_double(cfg.z.im()),
        "re_tau, im_tau, abs_tau: tau_Lambda(z) = -epsilon / (1 + epsilon * I(z, Lambda)), sharp cutoff",
        "inv_abs_tau: 1 / |tau_Lambda(z)|",
        "bound_4pi_over_lnLambda: 4 pi / ln(Lambda / |z|)",
        "unregulated model: tau(z) = 0 for Im z > 0 (divergent I)",
    };
    t.columns = {"Lambda", "re_tau", "im_tau", "abs_tau", "inv_abs_tau", "bound_4pi_over_lnLambda"};
    for (std::size_t i = 0; i < demo.cutoffs.size(); ++i) {
        const complex tau = demo.amplitudes[i].tau;
        t.rows.push_back({demo.cutoffs[i], tau.real(), tau.imag(), std::abs(tau), 1.0 / std::abs(tau),
                          demo.log_bounds[i]});
    }
    t.footer.emplace_back("unregulated_tau_re", unregulated.tau.real());
    t.footer.emplace_back("unregulated_tau_im", unregulated.tau.imag());
    t.footer.emplace_back("unregulated_provenance",
                          std::string(unregulated.is_theorem_zero() ? "no-scattering-theorem" : "computed"));
    t.footer.emplace_back("pole_region_cutoff", demo.pole_region_cutoff);
    t.footer.emplace_back("monotone_full", flag(demo.monotone_full));
    t.footer.emplace_back("monotone_beyond_pole", flag(demo.monotone_beyond_pole));
    t.footer.emplace_back("fit_slope_full", demo.fit_slope_full);
    t.footer.emplace_back("fit_slope_beyond_pole", demo.fit_slope_beyond_pole);
    t.footer.emplace_back("expected_slope", 1.0 / kFourPi);
    return t;
}

// --- transmute --------------------------------------------------------------

Table cmd_transmute(const ScanConfig& cfg) {
    const auto steps = transmutation_limit_demo(cfg.binding_energy, cfg.z, cfg.steps, cfg.scales);
    const complex target = tau_renormalized(cfg.binding_energy, cfg.z, cfg.tol).tau;
    Table t;
    t.command = "transmute";
    t.comments = {
        "E_B = " + format_double(cfg.binding_energy) + ", z = " + format_double(cfg.z.re()) + " + i " +
            format_double(cfg.z.im()) + (cfg.z.boundary() ? " (boundary)" : ""),
        "Lambda_n = E_B * 10^n, epsilon_n = 4 pi / ln(Lambda_n / E_B)",
        "re_tau, im_tau: sharp-cutoff tau = -epsilon_n / (1 + epsilon_n * I(z, Lambda_n))",
        "deviation_from_renormalized: |tau_n - 4 pi / ln(-E_B / z)| / |4 pi / ln(-E_B / z)|",
        "pole_energy: bound state of the regulated model at step n",
    };
    t.columns = {"n", "Lambda_n", "epsilon_n", "re_tau", "im_tau", "deviation_from_renormalized", "pole_energy"};
    bool monotone = true;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        const auto& s = steps[i];
        t.rows.push_back({static_cast<std::int64_t>(s.n), s.cutoff, s.epsilon, s.tau.tau.real(), s.tau.tau.imag(),
                          s.deviation, s.pole_energy});
        if (i > 0 && !(s.deviation < steps[i - 1].deviation)) {
            monotone = false;
        }
    }
    t.footer.emplace_back("renormalized_re_tau", target.real());
    t.footer.emplace_back("renormalized_im_tau", target.imag());
    t.footer.emplace_back("deviation_monotone", flag(monotone));
    t.footer.emplace_back("final_deviation", steps.back().deviation);
    t.footer.emplace_back("final_pole_energy", steps.back().pole_energy);
    return t;
}

// --- scatter ----------------------------------------------------------------

Table cmd_scatter(const ScanConfig& cfg) {
    if (cfg.energies.empty()) {
        throw UsageError("scatter needs an energy grid");
    }
    std::optional<Regulator> reg;
    std::optional<oracle::WellParameters> well;
    std::string description;
    if (cfg.model == "regulated") {
        if (cfg.regulators.size() != 1 || cfg.regulators[0] == "circular-well") {
            throw UsageError("regulated scatter model needs one separable regulator");
        }
        reg = make_regulator(cfg.regulators[0], cfg, first_or(cfg.cutoffs, "lambda"));
        description = "regulated " + std::string(regulator_name(*reg)) + ", epsilon = " +
                      format_double(first_or(cfg.epsilons, "epsilon"));
    } else if (cfg.model == "zero") {
        reg = PureDelta{};
        description = "unregulated contact interaction";
    } else if (cfg.model == "circular-well") {
        well = oracle::WellParameters::from_coupling(first_or(cfg.epsilons, "epsilon"), cfg.width, cfg.scales);
        description = "circular well, epsilon = " + format_double(first_or(cfg.epsilons, "epsilon")) +
                      ", a = " + format_double(cfg.width);
    } else {
        description = "renormalized, E_B = " + format_double(cfg.binding_energy);
    }

    Table t;
    t.command = "scatter";
    t.comments = {
        "model: " + description,
        "re_tau, im_tau: tau(E + i0)",
        "re_f, im_f: f(E) = -sqrt(1 / (8 pi k)) tau(E + i0)",
        "dL_dtheta: |f(E)|^2",
        "L_optical: sqrt(8 pi / k) Im f(E)",
        "L_from_im_tau: -Im tau(E + i0) / k",
        "delta0: tau = -4 exp(i delta0) sin(delta0), delta0 in (-pi/2, pi/2]",
        "unitarity_defect: Im(1/tau) - 1/4",
    };
    t.columns = {"E",         "k",        "re_tau",    "im_tau", "re_f",          "im_f",
                 "dL_dtheta", "L_optical", "L_from_im_tau", "delta0", "unitarity_defect", "status"};

    const auto rows = parallel_rows(cfg.energies.size(), cfg.threads, [&](std::size_t i) -> Row {
        const double energy = cfg.energies[i];
        const ComplexEnergy z = ComplexEnergy::above(energy);
        const Wavenumber k = wavenumber(energy, cfg.scales);
        Amplitude tau;
        try {
            if (well) {
                tau = Amplitude{tau_from_phase_shift(oracle::well_phase_shift(*well, k, cfg.scales))};
            } else if (reg) {
                const double e = cfg.model == "zero" ? 1.0 : cfg.epsilons.front();
                tau = tau_regulated(Coupling(e), *reg, z, cfg.scales, cfg.tol);
            } else {
                tau = tau_renormalized(cfg.binding_energy, z, cfg.tol);
            }
        } catch (const SingularInputError&) {
            return {energy, k.k, kNan, kNan, kNan, kNan, kNan, kNan, kNan, kNan, kNan, std::string("SINGULAR")};
        } catch (const PoleSingularity&) {
            return {energy, k.k, kNan, kNan, kNan, kNan, kNan, kNan, kNan, kNan, kNan, std::string("POLE")};
        }
        try {
            const auto obs = scattering_observables(tau, z, cfg.scales, cfg.tol);
            return {energy,        k.k,       tau.tau.real(), tau.tau.imag(), obs.f.real(),         obs.f.imag(),
                    obs.dL_dtheta, obs.L_optical, obs.L_total, obs.delta0, obs.unitarity_defect, std::string("OK")};
        } catch (const UnitarityViolation&) {
            const complex f = f_from_tau(tau, k);
            return {energy,        k.k,  tau.tau.real(), tau.tau.imag(), f.real(), f.imag(), std::norm(f),
                    optical_target_length(tau, k), -tau.tau.imag() / k.k, kNan, (1.0 / tau.tau).imag() - 0.25,
                    std::string("UNITARITY_VIOLATION")};
        }
    });
    t.rows = rows;

    double max_gap = 0.0;
    double max_defect = 0.0;
    for (const auto& row : rows) {
        if (std::get<std::string>(row[11]) != "OK") continue;
        max_gap = std::max(max_gap, relative_gap(std::get<double>(row[7]), std::get<double>(row[8])));
        max_defect = std::max(max_defect, std::abs(std::get<double>(row[10])));
    }
    t.footer.emplace_back("max_L_rel_disagreement", max_gap);
    t.footer.emplace_back("L_agreement_ok", flag(max_gap <= cfg.tol.target_length_agreement));
    t.footer.emplace_back("max_abs_unitarity_defect", max_defect);

    if (well) {
        // Low-energy fit of the renormalized form: E_B_eff = E exp(-pi cot delta0).
        const double low = 1e-4 * cfg.scales.kinetic_constant() / (cfg.width * cfg.width);
        std::vector<std::size_t> picked;
        double mean_log = 0.0;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const double energy = std::get<double>(rows[i][0]);
            const double delta = std::get<double>(rows[i][9]);
            if (energy <= low && std::get<std::string>(rows[i][11]) == "OK" && delta != 0.0) {
                picked.push_back(i);
                mean_log += std::log(energy) - kPi / std::tan(delta);
            }
        }
        const double well_eb = oracle::well_bound_state(*well, cfg.scales);
        t.footer.emplace_back("E_B_well", well_eb);
        if (!picked.empty()) {
            const double fitted = std::exp(mean_log / static_cast<double>(picked.size()));
            double worst = 0.0;
            for (std::size_t i : picked) {
                const complex tw(std::get<double>(rows[i][2]), std::get<double>(rows[i][3]));
                const complex tr = tau_renormalized(fitted, ComplexEnergy::above(std::get<double>(rows[i][0]))).tau;
                worst = std::max(worst, std::abs(tw - tr) / std::abs(tr));
            }
            t.footer.emplace_back("low_energy_rows", static_cast<std::int64_t>(picked.size()));
            t.footer.emplace_back("E_B_fit", fitted);
            t.footer.emplace_back("E_B_fit_rel_dev", fitted / well_eb - 1.0);
            t.footer.emplace_back("max_rel_tau_deviation_vs_renormalized", worst);
        }
    }
    return t;
}

}  // namespace

Table run_command(const ScanConfig& config) {
    if (config.command == "flow") return cmd_flow(config);
    if (config.command == "bind") return cmd_bind(config);
    if (config.command == "theorem") return cmd_theorem(config);
    if (config.command == "transmute") return cmd_transmute(config);
    if (config.command == "scatter") return cmd_scatter(config);
    throw UsageError("unknown command '" + config.command + "'");
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Two-dimensional contact-interaction scattering laboratory", "transmute-lab"};
    app.require_subcommand(1);

    struct Options {
        std::string config_path;
        std::map<std::string, std::string> values;
        std::vector<std::string> tol_overrides;
    };
    Options opts;
    static const std::pair<const char*, const char*> kFlags[] = {
        {"regulator", "pure-delta | sharp-cutoff | gaussian | circular-well (comma list for bind)"},
        {"epsilon", "coupling: v or v1:v2:n"},
        {"lambda", "cutoff: v, lo:hi:n (log-spaced) or v1,v2,..."},
        {"energy", "energy grid lo:hi:n[,log|,lin]"},
        {"width", "length a of the gaussian / circular-well regulator"},
        {"z", "complex energy re:im, or re:0+ for re + i0"},
        {"anchor", "flow anchor z0 as re:im or re:0+"},
        {"tau0", "flow anchor amplitude re:im"},
        {"arg", "flow ray argument in [0, pi]"},
        {"eb", "bound-state energy E_B"},
        {"steps", "transmutation limit steps"},
        {"model", "scatter model: renormalized | regulated | zero | circular-well"},
        {"kinetic-constant", "hbar^2 / 2 mu"},
        {"out", "output path (stdout when omitted)"},
        {"format", "csv | json"},
    };
    const char* commands[][2] = {
        {"flow", "sliding-scale flow of tau from an anchor point"},
        {"bind", "bound-state energies per coupling and regulator"},
        {"theorem", "cutoff-removal limit of the regulated amplitude"},
        {"transmute", "renormalization limit Lambda -> inf, epsilon -> 0+"},
        {"scatter", "continuum observables: f, target lengths, phase shift"},
    };
    for (const auto& [name, help] : commands) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("--config", opts.config_path, "key=value configuration file");
        for (const auto& [key, description] : kFlags) {
            sub->add_option_function<std::string>(
                std::string("--") + key, [&opts, key = std::string(key)](const std::string& v) { opts.values[key] = v; },
                description);
        }
        sub->add_option("--tol-override", opts.tol_overrides, "name=value (repeatable)");
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    std::string command;
    for (const auto* sub : app.get_subcommands()) {
        command = sub->get_name();
    }

    std::string rendered;
    ScanConfig cfg;
    try {
        ConfigMap values;
        if (!opts.config_path.empty()) {
            std::ifstream in(opts.config_path);
            if (!in) {
                throw UsageError("cannot read config file '" + opts.config_path + "'");
            }
            std::stringstream buffer;
            buffer << in.rdbuf();
            values = parse_config_text(buffer.str());
        }
        for (const auto& [key, value] : opts.values) {
            values[key] = value;
        }
        for (const auto& item : opts.tol_overrides) {
            auto& slot = values["tol-override"];
            slot += (slot.empty() ? "" : ",") + item;
        }
        cfg = build_config(command, values);
        cfg.threads = threads_from_environment();
        rendered = render(run_command(cfg), cfg.format);
    } catch (const UsageError& e) {
        err << "transmute-lab: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        err << "transmute-lab: invalid input: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "transmute-lab: numerical failure: " << e.what() << "\n";
        return 1;
    }

    if (cfg.out.empty()) {
        out << rendered;
        return 0;
    }
    std::ofstream file(cfg.out, std::ios::binary);
    file << rendered;
    if (!file) {
        err << "transmute-lab: cannot write '" << cfg.out << "'\n";
        return 1;
    }
    return 0;
}

}  // namespace transmute::cli
