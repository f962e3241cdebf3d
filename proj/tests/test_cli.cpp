#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int code = -1;
    std::string out, err;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

RunResult run(const std::string& args) {
    static int counter = 0;
    const std::string tag = std::to_string(counter++);
    const std::string out_file = "cli_stdout_" + tag + ".txt";
    const std::string err_file = "cli_stderr_" + tag + ".txt";
    const std::string cmd =
        std::string(GEOBERG_CLI_BIN) + " " + args + " >" + out_file + " 2>" + err_file;
    const int raw = std::system(cmd.c_str());
    RunResult r;
    if (raw != -1 && WIFEXITED(raw)) r.code = WEXITSTATUS(raw);
    r.out = slurp(out_file);
    r.err = slurp(err_file);
    fs::remove(out_file);
    fs::remove(err_file);
    return r;
}

std::string fresh_dir(const std::string& name) {
    const std::string dir = "cli_test_out/" + name;
    fs::remove_all(dir);
    return dir;
}

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    return cells;
}

/** Cell lookup by header name and 0-based data row. */
std::string csv_cell(const std::string& path, const std::string& column, std::size_t row) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::string line;
    REQUIRE(std::getline(in, line));
    const std::vector<std::string> header = split(line);
    std::size_t col = header.size();
    for (std::size_t i = 0; i < header.size(); ++i)
        if (header[i] == column) col = i;
    REQUIRE(col < header.size());
    for (std::size_t r = 0; std::getline(in, line); ++r)
        if (r == row) {
            const std::vector<std::string> cells = split(line);
            REQUIRE(col < cells.size());
            return cells[col];
        }
    REQUIRE(false);
    return {};
}

std::size_t line_count(const std::string& path) {
    std::ifstream in(path);
    std::size_t n = 0;
    std::string line;
    while (std::getline(in, line)) ++n;
    return n;
}

} // namespace

TEST_CASE("help and version exit cleanly") {
    CHECK(run("--help").code == 0);
    CHECK(run("spectrum --help").code == 0);
    CHECK(run("--version").code == 0);
    const RunResult r = run("--help");
    CHECK(r.out.find("suite") != std::string::npos);
}

TEST_CASE("usage errors exit with code one") {
    CHECK(run("").code == 1);                    // a subcommand is required
    CHECK(run("spectrum --bogus-flag").code == 1);
    CHECK(run("not-a-command").code == 1);
}

TEST_CASE("malformed level list is rejected naming the field") {
    const std::string dir = fresh_dir("badk");
    const RunResult r = run("spectrum --k-list 16,8 --out " + dir);
    CHECK(r.code == 1);
    CHECK(r.err.find("k_list") != std::string::npos);
    CHECK(run("mass --k-list '' --out " + dir).code == 1);   // empty list
}

TEST_CASE("spectrum writes the dilation ladder") {
    const std::string dir = fresh_dir("spectrum");
    const RunResult r = run("spectrum --k-list 4,8 --out " + dir);
    REQUIRE(r.code == 0);
    REQUIRE(fs::exists(dir + "/spectrum.csv"));
    CHECK(line_count(dir + "/spectrum.csv") == 3);   // header + one row per level
    CHECK(std::stod(csv_cell(dir + "/spectrum.csv", "max_spacing", 0)) == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(std::stod(csv_cell(dir + "/spectrum.csv", "max_spacing", 1)) == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(std::stod(csv_cell(dir + "/spectrum.csv", "lambda_max", 1)) == doctest::Approx(4.0).epsilon(1e-9));
    const std::string summary = slurp(dir + "/summary.txt");
    CHECK(summary.find("all_pass = true") != std::string::npos);
    CHECK(summary.find("config_hash = ") != std::string::npos);
}

TEST_CASE("identical pair produces the all-zero spectrum") {
    const std::string dir = fresh_dir("zeros");
    const RunResult r = run("spectrum --k-list 4 --set pair.phi1_family=fs "
                            "--set pair.phi1_params= --out " + dir);
    REQUIRE(r.code == 0);
    CHECK(std::abs(std::stod(csv_cell(dir + "/spectrum.csv", "lambda_max", 0))) <= 1e-10);
    CHECK(std::abs(std::stod(csv_cell(dir + "/spectrum.csv", "lambda_min", 0))) <= 1e-10);
}

TEST_CASE("geodesic emits long-format surfaces with oracle rows") {
    const std::string dir = fresh_dir("geodesic");
    const RunResult r = run("geodesic --k-list 4 --set grid.t_nodes=9 --set grid.x_nodes=33 "
                            "--out " + dir);
    REQUIRE(r.code == 0);
    const std::string path = dir + "/surfaces.csv";
    REQUIRE(fs::exists(path));
    CHECK(line_count(path) == 1 + 2 * 9 * 33);   // header + level block + oracle block

    std::ifstream in(path);
    std::string line;
    std::getline(in, line);
    CHECK(line == "op,k,t,x,value");
    std::size_t oracle_rows = 0;
    while (std::getline(in, line))
        if (line.rfind("geodesic,-1,", 0) == 0) ++oracle_rows;
    CHECK(oracle_rows == 9 * 33);
    CHECK(fs::exists(dir + "/geodesic_summary.csv"));
}

TEST_CASE("mass run reports near-zero masses for the dilation pair") {
    const std::string dir = fresh_dir("mass");
    const RunResult r = run("mass --k-list 8 --set grid.t_nodes=17 --set grid.x_nodes=201 "
                            "--out " + dir);
    REQUIRE(r.code == 0);
    CHECK(std::abs(std::stod(csv_cell(dir + "/mass.csv", "boundary_mass", 0))) <= 1e-10);
    CHECK(csv_cell(dir + "/mass.csv", "gap_ok", 0) == "true");
    CHECK(slurp(dir + "/summary.txt").find("all_pass = true") != std::string::npos);
}

TEST_CASE("converge reports monotone envelope errors") {
    const std::string dir = fresh_dir("converge");
    const RunResult r = run("converge --k-list 8,16 --set grid.t_nodes=17 "
                            "--set grid.x_nodes=101 --out " + dir);
    REQUIRE(r.code == 0);
    CHECK(fs::exists(dir + "/e_k.csv"));
    CHECK(fs::exists(dir + "/E_l.csv"));
    CHECK(slurp(dir + "/summary.txt").find("E_nonincreasing = true") != std::string::npos);
}

TEST_CASE("stats skips the sampled comparison when samples are zero") {
    const std::string dir = fresh_dir("statszero");
    const RunResult r = run("stats --k-list 8 --set run.harnack_samples=0 "
                            "--set grid.t_nodes=17 --set grid.x_nodes=65 --out " + dir);
    REQUIRE(r.code == 0);
    const std::string summary = slurp(dir + "/summary.txt");
    CHECK(summary.find("harnack_global = skipped: run.harnack_samples = 0") != std::string::npos);
    CHECK(fs::exists(dir + "/stats.csv"));
    CHECK(fs::exists(dir + "/sobolev.csv"));
    CHECK_FALSE(fs::exists(dir + "/harnack.csv"));
}

TEST_CASE("numerical failures exit with code two") {
    const std::string dir = fresh_dir("numfail");
    const RunResult r = run("spectrum --k-list 4 --set pair.phi1_family=bump "
                            "--set pair.phi1_params=5,0.3 --out " + dir);
    CHECK(r.code == 2);
    CHECK(r.err.find("numerical failure") != std::string::npos);
}

TEST_CASE("config file round trip with nested output directories") {
    const std::string dir = fresh_dir("cfgfile") + "/deep/path";
    std::ofstream cfg("cli_test_out/case.ini");
    cfg << "[pair]\n"
        << "phi1_family = bump\n"
        << "phi1_params = 0.3, 1.5, 0\n"
        << "[levels]\n"
        << "k_list = 4, 8\n"
        << "[grid]\n"
        << "t_nodes = 9\n"
        << "x_nodes = 33\n";
    cfg.close();
    const RunResult r = run("spectrum --config cli_test_out/case.ini --out " + dir);
    REQUIRE(r.code == 0);
    CHECK(fs::exists(dir + "/spectrum.csv"));          // directory chain auto-created
    CHECK(line_count(dir + "/spectrum.csv") == 3);
    const RunResult bad = run("spectrum --config cli_test_out/missing.ini --out " + dir);
    CHECK(bad.code == 1);
}

TEST_CASE("identical configs reproduce byte-identical tables") {
    const std::string a = fresh_dir("repro_a");
    const std::string b = fresh_dir("repro_b");
    const std::string args = "converge --k-list 8 --set grid.t_nodes=9 --set grid.x_nodes=33 ";
    REQUIRE(run(args + "--out " + a).code == 0);
    REQUIRE(run(args + "--out " + b).code == 0);
    CHECK(slurp(a + "/e_k.csv") == slurp(b + "/e_k.csv"));
    CHECK(slurp(a + "/E_l.csv") == slurp(b + "/E_l.csv"));

    auto hash_line = [](const std::string& summary) {
        const std::size_t pos = summary.find("config_hash = ");
        REQUIRE(pos != std::string::npos);
        return summary.substr(pos, summary.find('\n', pos) - pos);
    };
    const std::string ha = hash_line(slurp(a + "/summary.txt"));
    CHECK(ha == hash_line(slurp(b + "/summary.txt")));

    // a semantic change (the seed participates in sampled checks) moves the hash
    const std::string c = fresh_dir("repro_c");
    REQUIRE(run(args + "--seed 1 --out " + c).code == 0);
    CHECK(ha != hash_line(slurp(c + "/summary.txt")));
}

TEST_CASE("suite with a six-order tightening fails with exit code three") {
    const std::string dir = fresh_dir("suite_tight");
    const RunResult r = run("suite --tol-scale 1e-6 --out " + dir);
    CHECK(r.code == 3);
    CHECK(r.out.find("[FAIL]") != std::string::npos);
    REQUIRE(fs::exists(dir + "/acceptance.csv"));
    CHECK(line_count(dir + "/acceptance.csv") == 14);   // header + thirteen criteria
    CHECK(slurp(dir + "/summary.txt").find("all_pass = false") != std::string::npos);
}
