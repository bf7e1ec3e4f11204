#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#ifndef CYCLAB_BIN
#error "CYCLAB_BIN must point at the cyclab executable"
#endif

namespace {

struct CliResult {
    int code = -1;
    std::string output;  // stdout + stderr interleaved
};

CliResult run_cli(const std::string& args) {
    const std::string cmd = std::string(CYCLAB_BIN) + " " + args + " 2>&1";
    std::array<char, 4096> buf{};
    CliResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (std::fgets(buf.data(), static_cast<int>(buf.size()), pipe) != nullptr)
        r.output += buf.data();
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);)
        if (!line.empty()) out.push_back(line);
    return out;
}

std::string tmp_prefix(const char* name) {
    static const std::string dir = [] {
        std::string tmpl = "/tmp/cyclab_cli_XXXXXX";
        char* got = mkdtemp(tmpl.data());
        REQUIRE(got != nullptr);
        return std::string(got);
    }();
    return dir + "/" + name;
}

}  // namespace

TEST_CASE("help and parse errors") {
    CHECK(run_cli("--help").code == 0);
    CHECK(run_cli("weights --help").code == 0);
    CHECK(run_cli("frobnicate").code == 1);
    CHECK(run_cli("weights").code == 1);                       // missing --family
    CHECK(run_cli("weights --family nosuchfamily").code == 1);  // domain error
}

TEST_CASE("weights command emits table, ladder, and manifest") {
    const std::string p = tmp_prefix("w");
    const CliResult r = run_cli("weights --family stretched,c=1,beta=0.5 --horizon 64 "
                                "--envelope --out " + p);
    CHECK(r.code == 0);

    const auto rows = lines_of(slurp(p + ".csv"));
    REQUIRE(!rows.empty());
    CHECK(rows[0] == "n,logw,envelope,partial_theorem1,partial_beurling");
    CHECK(rows.size() == 66);  // header + n = 0..64
    CHECK(rows[1].rfind("0,0,", 0) == 0);

    const auto ladder_rows = lines_of(slurp(p + ".ladder.csv"));
    REQUIRE(ladder_rows.size() >= 3);
    CHECK(ladder_rows[0] == "j,rung,logw");
    CHECK(ladder_rows[1].rfind("0,1,1", 0) == 0);  // sqrt weight: rungs 1,4,16,...
    CHECK(ladder_rows[2].rfind("1,4,2", 0) == 0);

    const std::string manifest = slurp(p + ".json");
    CHECK(manifest.find("\"family\"") != std::string::npos);
    CHECK(manifest.find("\"monotone\"") != std::string::npos);
}

TEST_CASE("scan command reproduces the flat-weight projection value") {
    const std::string p = tmp_prefix("s");
    const CliResult r = run_cli("scan --family flat --inner 1.0@0.0 --degrees 1,2,4 "
                                "--match 512 --out " + p);
    CHECK(r.code == 0);
    const auto rows = lines_of(slurp(p + ".csv"));
    REQUIRE(rows.size() == 4);
    CHECK(rows[0] == "N,M,dist,dist_sq,tail_bound,gram_condition");
    // dist = sqrt(1 - e^-2) = 0.929872... independent of N
    for (std::size_t i = 1; i < rows.size(); ++i) {
        std::istringstream ss(rows[i]);
        std::string field;
        std::getline(ss, field, ',');  // N
        std::getline(ss, field, ',');  // M
        CHECK(field == "512");
        std::getline(ss, field, ',');  // dist
        CHECK(std::abs(std::stod(field) - 0.92987349503219374) < 1e-6);
    }
}

TEST_CASE("bezout command certifies the solve") {
    const std::string p = tmp_prefix("b");
    const CliResult r =
        run_cli("bezout --inner 1.0@0.0 --n 4 --deg 32 --match 512 --out " + p);
    CHECK(r.code == 0);
    const auto rows = lines_of(slurp(p + ".csv"));
    REQUIRE(rows.size() == 2);
    CHECK(rows[0] == "n,d,M,residual_l2,f_sup,g_sup,corona_bound,pass");
    CHECK(rows[1].rfind("4,32,512,", 0) == 0);
    CHECK(rows[1].back() == '1');  // pass
}

TEST_CASE("verify exit codes follow the margin results") {
    // lemma 3 holds comfortably
    const CliResult l3 = run_cli("verify --lemma 3 --inner 1.0@0.0 --n 16");
    CHECK(l3.code == 0);
    CHECK(l3.output.find("lemma 3: PASS") != std::string::npos);

    // lemma 4's stated global bound fails on the measured grid (exit 3)
    const std::string p4 = tmp_prefix("v4");
    const CliResult l4 = run_cli("verify --lemma 4 --lambda power,alpha=1 --delta 0.1 "
                                 "--a 0.05 --out " + p4);
    CHECK(l4.code == 3);
    CHECK(l4.output.find("lemma 4: FAIL") != std::string::npos);
    const std::string m4 = slurp(p4 + ".json");
    CHECK(m4.find("margin_region") != std::string::npos);
    CHECK(m4.find("margin_global_pi") != std::string::npos);

    // lemma 5: valid hypothesis but the norm margin fails (exit 3)
    const CliResult l5 = run_cli("verify --lemma 5 --lambda power,alpha=1 --c 0.02 --n 100");
    CHECK(l5.code == 3);
    CHECK(l5.output.find("lemma 5: FAIL") != std::string::npos);

    // hypothesis violation is a usage error (exit 1), not a margin failure
    const CliResult bad = run_cli("verify --lemma 5 --lambda power,alpha=1 --c 1.0 --n 100");
    CHECK(bad.code == 1);

    CHECK(run_cli("verify --lemma 7").code == 1);
}

TEST_CASE("moments command tabulates the majorant weights") {
    const std::string p = tmp_prefix("m");
    const CliResult r = run_cli("moments --lambda power,alpha=1 --nmax 16 --out " + p);
    CHECK(r.code == 0);
    const auto rows = lines_of(slurp(p + ".csv"));
    REQUIRE(rows.size() == 18);
    CHECK(rows[0] == "n,logw");
    double prev = -1.0;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto comma = rows[i].find(',');
        const double logw = std::stod(rows[i].substr(comma + 1));
        CHECK(logw >= prev);
        prev = logw;
    }
}

TEST_CASE("pipeline command: runs, stalls, and input gates") {
    // theorem1 without atoms is a usage error
    CHECK(run_cli("pipeline --mode theorem1 --j0 1").code == 1);

    // integrable majorant: planning stalls with exit 2
    const CliResult stall =
        run_cli("pipeline --mode theorem2 --lambda power,alpha=0.5 --j0 1");
    CHECK(stall.code == 2);

    // small real run: csv row per j0 plus a classification line
    const std::string p = tmp_prefix("p");
    const CliResult r = run_cli("pipeline --mode theorem2 --lambda power,alpha=1 "
                                "--j0 1,2 --deg 32 --out " + p);
    CHECK(r.code == 0);
    CHECK(r.output.find("classification:") != std::string::npos);
    const auto rows = lines_of(slurp(p + ".csv"));
    REQUIRE(rows.size() == 3);
    CHECK(rows[0] == "j0,N,mode,residual,bound,constant_used");
    CHECK(rows[1].rfind("1,", 0) == 0);
    CHECK(rows[2].rfind("2,", 0) == 0);
    const std::string manifest = slurp(p + ".json");
    CHECK(manifest.find("planned_bound_j0_1") != std::string::npos);
}

TEST_CASE("contrast command writes labeled rows") {
    const std::string p = tmp_prefix("c");
    const CliResult r = run_cli("contrast --suite scans --degrees 2,4 --match 256 --out " + p);
    CHECK(r.code == 0);
    const auto rows = lines_of(slurp(p + ".csv"));
    REQUIRE(rows.size() >= 5);
    CHECK(rows[0] == "label,sweep_key,value,partial_sum,classification");
}

TEST_CASE("reruns are byte-identical") {
    const std::string p1 = tmp_prefix("d1");
    const std::string p2 = tmp_prefix("d2");
    const std::string args = "scan --family power,alpha=1 --inner 1.0@0.0 --degrees 1,2,4 "
                             "--match 256 --out ";
    CHECK(run_cli(args + p1).code == 0);
    CHECK(run_cli(args + p2).code == 0);
    CHECK(slurp(p1 + ".csv") == slurp(p2 + ".csv"));
}
