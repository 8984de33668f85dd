#include "cli.hpp"
#include "output.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace touchdown::cli;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run invoke(const std::string& line) {
    CLI::App app;
    Options o;
    build_app(app, o);
    app.parse(line, false);
    std::ostringstream out, err;
    const int code = run(app, o, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name, const std::string& text) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << text;
    return path;
}

} // namespace

TEST_CASE("certify at a point prints the certified ratio") {
    const Run r = invoke("certify --theorem op1 --p 2 --mu 2 --finf 2.25 --d 0.1 --d0 4 --tau 0.8111 --beta 1.22 --K 0.7184");
    CHECK(r.code == kOk);
    CHECK(r.out.find("rho_lower = 0.118") != std::string::npos);
    CHECK(r.out.find("component.H = ") != std::string::npos);
}

TEST_CASE("exit codes") {
    const Run gate = invoke("certify --theorem op1 --p 2 --mu 0.5 --finf 0.6 --d 0.01 --d0 6");
    CHECK(gate.code == kHypothesis);
    CHECK(gate.err.find("mu > mu1") != std::string::npos);
    CHECK(invoke("certify --theorem op1 --p 2 --mu 2 --finf 2.25 --d 0.1 --d0 4 --k-max 0.05").code == kNoCandidate);
    CHECK(invoke("certify --theorem op5 --mu 2 --finf 2.25").code == kUsage);
    CHECK(invoke("certify --theorem op1 --p 2 --mu 2 --finf 2.25 --d 0.1 --d0 4 --tau 0.8").code == kUsage);
}

TEST_CASE("config file supplies values and flags override them") {
    const auto cfg = temp_file("touchdown_cli_test.conf",
                               "# OP1 example\ntheorem = op1\np = 2\nmu = 2\nfinf = 2.25\nd = 0.1\nd0 = 4\n"
                               "tau = 0.8111\nbeta = 1.22\nK = 0.7184\n");
    const Run from_file = invoke("certify --config " + cfg.string());
    CHECK(from_file.code == kOk);
    CHECK(from_file.out.find("rho_lower = 0.118") != std::string::npos);

    CLI::App app;
    Options o;
    build_app(app, o);
    app.parse("certify --config " + cfg.string() + " --mu 3 --d0 5", false);
    CHECK(o.mu == 3);
    CHECK(o.d0 == 5);
    CHECK(o.f_inf == 2.25);
    CHECK(o.tau.value() == 0.8111);
}

TEST_CASE("certify writes a CSV row that round-trips") {
    const auto path = std::filesystem::temp_directory_path() / "touchdown_cli_test.csv";
    const Run r = invoke("certify --theorem op3 --p 2 --mu 2 --finf 2.25 --d 0.1 --d0 4 --tau 0.8 --beta 1.14 --K 0.62 "
                         "--lambda 0.22 --out " + path.string());
    CHECK(r.code == kOk);
    std::ifstream in(path);
    std::string header, row;
    std::getline(in, header);
    std::getline(in, row);
    CHECK(header.rfind("theorem,p,mu", 0) == 0);
    CHECK(row.rfind("op3,2,2,2.25,0.1,4,0.8,1.14,0.62,1,0.22,", 0) == 0);
}

TEST_CASE("table command emits every row") {
    const Run r = invoke("table --id 4 --reference-only");
    CHECK(r.code == kOk);
    std::istringstream is(r.out);
    std::string line;
    int lines = 0;
    while (std::getline(is, line)) ++lines;
    CHECK(lines == 5);
    CHECK(r.out.find("rho printed") != std::string::npos);
    CHECK(invoke("table --id 5 --reference-only").out.find("lambda printed") != std::string::npos);
    CHECK_THROWS(invoke("table --id 6"));
}

TEST_CASE("plot writes CSV and SVG") {
    const auto prefix = (std::filesystem::temp_directory_path() / "touchdown_cutoff").string();
    const Run r = invoke("plot --what cutoff --theorem op1 --p 2 --mu 2 --beta 1.22 --K 0.7184 --out " + prefix);
    CHECK(r.code == kOk);
    std::ifstream svg(prefix + ".svg");
    std::stringstream text;
    text << svg.rdbuf();
    CHECK(text.str().find("<polyline") != std::string::npos);
    CHECK(text.str().rfind("<svg", 0) == 0);
}

TEST_CASE("output helpers") {
    std::ostringstream os;
    write_csv_row(os, {"a", "b,c", "say \"hi\""});
    CHECK(os.str() == "a,\"b,c\",\"say \"\"hi\"\"\"\n");
    for (double v : {0.1, 1.0 / 3, 1e-300, 123456.789}) CHECK(std::stod(fmt(v)) == v);
}
