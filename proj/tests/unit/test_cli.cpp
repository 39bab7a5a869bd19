#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "transmute/cli.hpp"

using namespace transmute;
using namespace transmute::cli;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> data_lines(const std::string& csv) {
    std::vector<std::string> lines;
    std::istringstream in(csv);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line[0] != '#') {
            lines.push_back(line);
        }
    }
    return lines;
}

std::vector<std::string> fields(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string f;
    while (std::getline(in, f, ',')) {
        out.push_back(f);
    }
    return out;
}

std::string footer(const std::string& csv, const std::string& key) {
    const std::string tag = "# " + key + "=";
    const auto pos = csv.find(tag);
    if (pos == std::string::npos) {
        return {};
    }
    const auto end = csv.find('\n', pos);
    return csv.substr(pos + tag.size(), end - pos - tag.size());
}

}  // namespace

TEST_CASE("number rendering") {
    CHECK(format_double(1.0) == "1.0000000000000000e+00");
    CHECK(format_double(-0.0) == "0.0000000000000000e+00");
    CHECK(format_double(NAN) == "nan");
    CHECK(format_double(-INFINITY) == "-inf");
    CHECK(std::stod(format_double(0.1)) == 0.1);
}

TEST_CASE("config text") {
    const auto m = parse_config_text("# comment\nepsilon = 1:2:3  # trailing\n\nregulator=gaussian\nregulator = sharp-cutoff\n");
    CHECK(m.at("epsilon") == "1:2:3");
    CHECK(m.at("regulator") == "gaussian,sharp-cutoff");
    CHECK_THROWS_AS(parse_config_text("novalue\n"), UsageError);
    CHECK_THROWS_AS(parse_config_text("= 3\n"), UsageError);
}

TEST_CASE("config validation") {
    const auto cfg = build_config("bind", {{"epsilon", "1:2:3"}, {"lambda", "2"}});
    CHECK(cfg.epsilons == std::vector<double>{1.0, 1.5, 2.0});
    CHECK(cfg.cutoffs == std::vector<double>{2.0});
    CHECK(cfg.regulators.size() == 4);

    const auto grid = build_config("scatter", {{"energy", "1e-2:1e2:5"}});
    REQUIRE(grid.energies.size() == 5);
    CHECK(grid.energies[2] == doctest::Approx(1.0));
    const auto lin = build_config("scatter", {{"energy", "1:3:3,lin"}});
    CHECK(lin.energies == std::vector<double>{1.0, 2.0, 3.0});

    const auto flow = build_config("flow", {{"anchor", "2:0+"}, {"tau0", "1:-1"}});
    CHECK(flow.anchor.boundary());
    CHECK(flow.ray_arg == 0.0);
    CHECK(flow.tau0 == complex(1.0, -1.0));

    const auto tol = build_config("flow", {{"tol-override", "group_property=1e-9,residue=1e-3"}});
    CHECK(tol.tol.group_property == 1e-9);
    CHECK(tol.tol.residue == 1e-3);

    CHECK_THROWS_AS(build_config("nope", {}), UsageError);
    CHECK_THROWS_AS(build_config("bind", {{"colour", "red"}}), UsageError);
    CHECK_THROWS_AS(build_config("bind", {{"epsilon", "-1"}}), UsageError);
    CHECK_THROWS_AS(build_config("bind", {{"epsilon", "1:2"}}), UsageError);
    CHECK_THROWS_AS(build_config("bind", {{"epsilon", "abc"}}), UsageError);
    CHECK_THROWS_AS(build_config("bind", {{"regulator", "square"}}), UsageError);
    CHECK_THROWS_AS(build_config("bind", {{"format", "xml"}}), UsageError);
    CHECK_THROWS_AS(build_config("scatter", {{"energy", "0:1:3"}}), UsageError);
    CHECK_THROWS_AS(build_config("flow", {{"anchor", "1:-1"}}), UsageError);
    CHECK_THROWS_AS(build_config("flow", {{"tol-override", "residue=0"}}), UsageError);
    CHECK_THROWS_AS(build_config("flow", {{"tol-override", "bogus=1"}}), UsageError);
}

TEST_CASE("csv layout") {
    Table t;
    t.command = "demo";
    t.comments = {"a: first"};
    t.columns = {"a", "b"};
    t.rows = {{1.5, std::string("x,y")}, {std::int64_t{3}, std::string("z")}};
    t.footer = {{"k", 2.0}};
    CHECK(render_csv(t) ==
          "# transmute-lab demo\n# a: first\na,b\n1.5000000000000000e+00,\"x,y\"\n3,z\n# k=2.0000000000000000e+00\n");
    const auto j = nlohmann::json::parse(render_json(t));
    CHECK(j["command"] == "demo");
    CHECK(j["rows"][0][0] == 1.5);
    CHECK(j["footer"]["k"] == 2.0);
}

TEST_CASE("flow command") {
    const auto r = run({"flow"});
    REQUIRE(r.code == 0);
    const auto lines = data_lines(r.out);
    CHECK(lines[0] == "z_re,z_im,re_inv_tau,im_inv_tau,re_tau,im_tau,status");
    CHECK(lines.size() == 10);
    CHECK(std::stod(footer(r.out, "inv_tau_slope_vs_ln_abs_z")) == doctest::Approx(-1.0 / (4.0 * kPi)).epsilon(1e-12));
    CHECK(std::stod(footer(r.out, "max_group_defect")) <= 1e-12);
    // The anchored flow with tau0 = 4 pi at z0 = i has its pole at z = e i.
    CHECK(fields(lines[2]).back() == "POLE");

    const auto zero = run({"flow", "--tau0", "0:0"});
    REQUIRE(zero.code == 0);
    const auto zl = data_lines(zero.out);
    for (std::size_t i = 1; i < zl.size(); ++i) {
        CHECK(fields(zl[i])[4] == "0.0000000000000000e+00");
        CHECK(fields(zl[i])[5] == "0.0000000000000000e+00");
    }

    const auto echo = run({"flow", "--tau0", "2:-1", "--energy", "1"});
    REQUIRE(echo.code == 0);
    const auto el = fields(data_lines(echo.out)[1]);
    CHECK(el[4] == format_double(2.0));
    CHECK(el[5] == format_double(-1.0));

    const auto sharp = run({"flow", "--regulator", "sharp-cutoff", "--lambda", "1e6", "--anchor", "0.5:0+",
                            "--tau0", "-1:-0.5", "--arg", "0"});
    CHECK(sharp.code == 0);
}

TEST_CASE("bind command") {
    const auto r = run({"bind", "--regulator", "sharp-cutoff", "--epsilon", "1,2,4", "--lambda", "1"});
    REQUIRE(r.code == 0);
    const auto lines = data_lines(r.out);
    REQUIRE(lines.size() == 4);
    const double expected[] = {std::exp(-4.0 * kPi), std::exp(-2.0 * kPi), std::exp(-kPi)};
    for (int i = 0; i < 3; ++i) {
        CHECK(std::stod(fields(lines[i + 1])[4]) == doctest::Approx(expected[i]).epsilon(1e-15));
    }
    const auto all = run({"bind"});
    REQUIRE(all.code == 0);
    CHECK(all.out.find("pure-delta,nan,nan,nan,nan,nan,NO_BOUND_STATE") != std::string::npos);
    CHECK(std::abs(std::stod(footer(all.out, "fit.circular-well.slope")) - 1.0) <= 0.02);
    CHECK(std::abs(std::stod(footer(all.out, "fit.gaussian.slope")) - 1.0) <= 0.02);
}

TEST_CASE("theorem and transmute commands") {
    const auto t = run({"theorem"});
    REQUIRE(t.code == 0);
    CHECK(data_lines(t.out)[0] == "Lambda,re_tau,im_tau,abs_tau,inv_abs_tau,bound_4pi_over_lnLambda");
    CHECK(footer(t.out, "unregulated_tau_re") == "0.0000000000000000e+00");
    CHECK(footer(t.out, "unregulated_provenance") == "no-scattering-theorem");

    const auto m = run({"transmute"});
    REQUIRE(m.code == 0);
    CHECK(data_lines(m.out)[0] == "n,Lambda_n,epsilon_n,re_tau,im_tau,deviation_from_renormalized,pole_energy");
    CHECK(data_lines(m.out).size() == 11);
    CHECK(footer(m.out, "deviation_monotone") == "true");
}

TEST_CASE("scatter command") {
    const auto r = run({"scatter", "--energy", "1", "--eb", "1"});
    REQUIRE(r.code == 0);
    const auto row = fields(data_lines(r.out)[1]);
    CHECK(std::stod(row[8]) == doctest::Approx(4.0));
    CHECK(std::stod(row[9]) == doctest::Approx(kPi / 2));

    const auto zero = run({"scatter", "--model", "zero"});
    REQUIRE(zero.code == 0);
    for (std::size_t i = 1; i < data_lines(zero.out).size(); ++i) {
        const auto f = fields(data_lines(zero.out)[i]);
        for (int c = 2; c <= 10; ++c) {
            CHECK(f[static_cast<std::size_t>(c)] == "0.0000000000000000e+00");
        }
    }

    const auto well = run({"scatter", "--model", "circular-well", "--epsilon", "1", "--energy", "1e-12:1e-4:9"});
    REQUIRE(well.code == 0);
    CHECK(std::stod(footer(well.out, "max_rel_tau_deviation_vs_renormalized")) <= 0.03);
    CHECK(std::abs(std::stod(footer(well.out, "E_B_fit_rel_dev"))) <= 0.05);

    const auto reg = run({"scatter", "--model", "regulated", "--lambda", "4", "--energy", "1:8:8,lin"});
    REQUIRE(reg.code == 0);
    CHECK(reg.out.find("SINGULAR") != std::string::npos);
    CHECK(footer(reg.out, "L_agreement_ok") == "true");
}

TEST_CASE("json output and files") {
    const auto r = run({"transmute", "--format", "json", "--steps", "3"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["rows"].size() == 3);
    CHECK(j["columns"][0] == "n");

    const std::string path = "transmute_cli_test_out.csv";
    std::remove(path.c_str());
    const auto f = run({"transmute", "--out", path});
    REQUIRE(f.code == 0);
    CHECK(f.out.empty());
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(buf.str() == run({"transmute"}).out);
    std::remove(path.c_str());
}

TEST_CASE("config file with flag override") {
    const std::string path = "transmute_cli_test.conf";
    std::ofstream(path) << "epsilon = 1,2\nregulator = sharp-cutoff\nlambda = 3\n";
    const auto r = run({"bind", "--config", path, "--lambda", "5"});
    std::remove(path.c_str());
    REQUIRE(r.code == 0);
    const auto lines = data_lines(r.out);
    REQUIRE(lines.size() == 3);
    CHECK(std::stod(fields(lines[1])[2]) == 5.0);
}

TEST_CASE("exit codes") {
    CHECK(run({}).code == 2);
    CHECK(run({"bogus"}).code == 2);
    CHECK(run({"bind", "--no-such-flag", "1"}).code == 2);
    CHECK(run({"bind", "--regulator", "square"}).code == 2);
    CHECK(run({"bind", "--config", "/nonexistent/file.conf"}).code == 2);
    CHECK(run({"flow", "--anchor", "1:-1"}).code == 2);
    CHECK(run({"flow", "--regulator", "circular-well"}).code == 2);
    CHECK(run({"theorem", "--lambda", "0.5"}).code == 2);
    CHECK(run({"bind", "--help"}).code == 0);

    // Anchor on the sharp-cutoff singularity: numerical failure, nothing written.
    const auto bad = run({"flow", "--regulator", "sharp-cutoff", "--lambda", "2", "--anchor", "2:0+"});
    CHECK(bad.code == 1);
    CHECK(bad.out.empty());
    CHECK_FALSE(bad.err.empty());
}

TEST_CASE("thread count does not change output") {
    ::setenv("TRANSMUTE_LAB_THREADS", "1", 1);
    CHECK(threads_from_environment() == 1);
    const auto one = run({"bind"});
    ::setenv("TRANSMUTE_LAB_THREADS", "3", 1);
    const auto three = run({"bind"});
    ::setenv("TRANSMUTE_LAB_THREADS", "junk", 1);
    CHECK(threads_from_environment() == 0);
    ::unsetenv("TRANSMUTE_LAB_THREADS");
    CHECK(one.out == three.out);
}
