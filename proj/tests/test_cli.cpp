#include <doctest.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

// Exercises the installed binary end to end: output format, CSV contract,
// exit codes.

namespace {

struct RunResult {
    int exit_code;
    std::string output; // stdout + stderr
};

RunResult run(const std::string& args)
{
    const std::string cmd = std::string(FPQUAD_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    while (std::size_t got = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), got);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

double field(const std::string& line, const std::string& key)
{
    const auto pos = line.find(key + "=");
    REQUIRE(pos != std::string::npos);
    return std::strtod(line.c_str() + pos + key.size() + 1, nullptr);
}

std::vector<std::string> split_lines(const std::string& s)
{
    std::vector<std::string> lines;
    std::istringstream in(s);
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) lines.push_back(line);
    return lines;
}

} // namespace

TEST_CASE("compute: known value, one machine-readable line")
{
    const RunResult r = run("compute exp_decay --n 1 --h 0.0625");
    CHECK(r.exit_code == 0);
    const auto lines = split_lines(r.output);
    REQUIRE(lines.size() == 1);
    CHECK(field(lines[0], "value") == doctest::Approx(-0.5772156649).epsilon(1e-9));
    CHECK(field(lines[0], "rel_error") < 1e-10);
}

TEST_CASE("compute: odd case of integrand (i) vanishes")
{
    const RunResult r = run("compute one_over_1px2 --n 3 --h 0.0625");
    CHECK(r.exit_code == 0);
    CHECK(std::abs(field(r.output, "value")) < 1e-10);
}

TEST_CASE("compute: full and symmetric modes agree")
{
    const double full = field(run("compute exp_decay --n 1 --h 0.0625 --mode full").output, "value");
    const double sym =
        field(run("compute exp_decay --n 1 --h 0.0625 --mode symmetric").output, "value");
    CHECK(std::abs(full - sym) < 1e-13);
}

TEST_CASE("sweep: monotone CSV with decreasing errors")
{
    const RunResult r = run("sweep exp_decay --n 1 --h 0.5 0.25 0.125 0.0625 0.03125");
    CHECK(r.exit_code == 0);
    const auto lines = split_lines(r.output);
    REQUIRE(lines.size() == 6);
    CHECK(lines[0] == "h,N_total,value,abs_error,rel_error");
    double prev_h = 1e300, prev_rel = 1e300;
    bool reached_floor = false;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        double h, value, abs_error, rel_error;
        int n_total;
        REQUIRE(std::sscanf(lines[i].c_str(), "%lf,%d,%lf,%lf,%lf", &h, &n_total, &value,
                            &abs_error, &rel_error) == 5);
        CHECK(h < prev_h);
        if (!reached_floor) CHECK(rel_error < prev_rel);
        if (rel_error < 1e-13) reached_floor = true;
        prev_h = h;
        prev_rel = rel_error;
    }
    CHECK(prev_rel < 1e-12);
}

TEST_CASE("sweep: final error of integrand (i), n = 4")
{
    const RunResult r = run("sweep one_over_1px2 --n 4 --h 0.25 0.125 0.0625 0.03125");
    CHECK(r.exit_code == 0);
    const auto lines = split_lines(r.output);
    double h, value, abs_error, rel_error;
    int n_total;
    REQUIRE(std::sscanf(lines.back().c_str(), "%lf,%d,%lf,%lf,%lf", &h, &n_total, &value,
                        &abs_error, &rel_error) == 5);
    CHECK(rel_error < 1e-9);
}

TEST_CASE("sweep: byte-identical reruns and 17-digit round trip")
{
    const RunResult a = run("sweep exp_decay --n 2 --h 0.5 0.125");
    const RunResult b = run("sweep exp_decay --n 2 --h 0.5 0.125");
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);

    // values parse back bit-exactly at 17 significant digits
    const auto lines = split_lines(a.output);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        double h, value, abs_error, rel_error;
        int n_total;
        REQUIRE(std::sscanf(lines[i].c_str(), "%lf,%d,%lf,%lf,%lf", &h, &n_total, &value,
                            &abs_error, &rel_error) == 5);
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.17g", value);
        double reparsed = std::strtod(buf, nullptr);
        CHECK(reparsed == value);
    }
}

TEST_CASE("sweep: --out writes the same CSV to a file with LF endings")
{
    const std::string path = "/tmp/fpquad_test_sweep.csv";
    const RunResult r = run("sweep exp_decay --n 1 --h 0.5 0.25 --out " + path);
    CHECK(r.exit_code == 0);
    std::ifstream f(path, std::ios::binary);
    std::stringstream ss;
    ss << f.rdbuf();
    const std::string contents = ss.str();
    CHECK(contents == run("sweep exp_decay --n 1 --h 0.5 0.25").output);
    CHECK(contents.find('\r') == std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("oracle-check agrees within 1e-5")
{
    const RunResult r1 = run("oracle-check exp_decay --n 2");
    CHECK(r1.exit_code == 0);
    CHECK(field(r1.output, "discrepancy") <= 1e-5);

    const RunResult r2 = run("oracle-check one_over_1px2 --n 1");
    CHECK(r2.exit_code == 0);
    CHECK(std::abs(field(r2.output, "engine")) < 1e-5);
    CHECK(std::abs(field(r2.output, "oracle")) < 1e-5);
}

TEST_CASE("exit-code contract")
{
    CHECK(run("compute no_such_integrand --n 1").exit_code == 2); // usage
    CHECK(run("oracle-check no_such_integrand --n 1").exit_code == 2);
    CHECK(run("compute exp_decay --n 0").exit_code == 2);
    CHECK(run("compute exp_decay --n 1 --contour-offset 1.5").exit_code == 2);
    CHECK(run("compute exp_decay").exit_code == 2); // missing required --n
    CHECK(run("sweep exp_decay --n 1 --h -0.5").exit_code == 2);
    CHECK(run("compute exp_decay --n 1 --max-terms 4").exit_code == 1); // NotConverged
    CHECK(run("--help").exit_code == 0);
}
