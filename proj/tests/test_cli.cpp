// End-to-end checks of the command-line tool: spawn the built binary and
// inspect exit codes and output.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

// Run the CLI with stderr folded into stdout.
RunResult run(const std::string& args) {
    std::string cmd = std::string(TPTRI_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult res;
    char buf[4096];
    while (std::size_t got = fread(buf, 1, sizeof buf, pipe)) res.out.append(buf, got);
    int status = pclose(pipe);
    REQUIRE(status != -1);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

// Write a spec file into the test's scratch directory.
class ScratchFile {
public:
    ScratchFile(const std::string& stem, const std::string& text) {
        path_ = std::filesystem::temp_directory_path() /
                ("tptri-test-" + stem + "-" + std::to_string(::getpid()) + ".spec");
        std::ofstream out(path_);
        out << text;
    }
    ~ScratchFile() { std::filesystem::remove(path_); }

    std::string path() const { return path_.string(); }

private:
    std::filesystem::path path_;
};

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("gen prints catalog triangles") {
    RunResult res = run("gen --spec pascal --order 4");
    CHECK(res.exit_code == 0);
    CHECK(res.out ==
          "1\n"
          "1 1\n"
          "1 2 1\n"
          "1 3 3 1\n"
          "1 4 6 4 1\n");

    RunResult csv = run("gen --spec pascal --order 3 --format csv");
    CHECK(csv.exit_code == 0);
    CHECK(csv.out == "1\n1,1\n1,2,1\n1,3,3,1\n");

    // The Eulerian triangle starts at row 1.
    RunResult eul = run("gen --spec eulerian --order 4");
    CHECK(eul.exit_code == 0);
    CHECK(eul.out ==
          "1\n"
          "1 1\n"
          "1 4 1\n"
          "1 11 11 1\n");
}

TEST_CASE("gen emits parseable json") {
    RunResult res = run("gen --spec shapiro-catalan --order 3 --format json");
    CHECK(res.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(res.out);
    CHECK(j.at("name") == "shapiro-catalan");
    CHECK(j.at("index_origin") == 0);
    CHECK(j.at("rows")[2] == nlohmann::json({"5", "4", "1"}));
    CHECK(j.at("rows")[3] == nlohmann::json({"14", "14", "6", "1"}));
}

TEST_CASE("gen verifies golden rows from spec files") {
    ScratchFile good("golden-good",
                     "name demo\nr 1\ns 2\nt 1\nrow 3 14 14 6 1\n");
    RunResult ok = run("gen --spec " + good.path() + " --order 2");
    CHECK(ok.exit_code == 0);
    // Output stops at the requested order even though the golden check
    // forced row 3 to be built.
    CHECK(ok.out == "1\n2 1\n5 4 1\n");

    ScratchFile bad("golden-bad",
                    "name demo\nr 1\ns 2\nt 1\nrow 2 6 4 1\n");
    RunResult fail = run("gen --spec " + bad.path() + " --order 2");
    CHECK(fail.exit_code == 1);
    CHECK(contains(fail.out,
                   "golden mismatch at row 2, column 0: expected 6, got 5"));
}

TEST_CASE("gen prints q-triangles with mixed separators") {
    ScratchFile qfile("qgen", "name qdemo\nr q\ns 1+q\nt 1\n");
    RunResult res = run("gen --spec " + qfile.path() + " --order 2");
    CHECK(res.exit_code == 0);
    CHECK(res.out ==
          "1\n"
          "1 + q | q\n"
          "1 + 3*q + q^2 | 2*q + 2*q^2 | q^2\n");
}

TEST_CASE("catalan-like prints the first column") {
    RunResult res = run("catalan-like --spec aigner-catalan --order 8");
    CHECK(res.exit_code == 0);
    CHECK(res.out == "1 1 2 5 14 42 132 429 1430\n");

    RunResult bell = run("catalan-like --spec bell --order 6 --format csv");
    CHECK(bell.exit_code == 0);
    CHECK(bell.out == "1,1,2,5,15,52,203\n");

    RunResult general = run("catalan-like --spec eulerian --order 4");
    CHECK(general.exit_code == 2);
    CHECK(contains(general.out, "numeric coefficient spec"));
}

TEST_CASE("check-tp verifies and refutes with exit codes") {
    RunResult ok = run("check-tp --spec shapiro-catalan --order 6");
    CHECK(ok.exit_code == 0);
    CHECK(contains(ok.out, "verified: yes"));
    CHECK(contains(ok.out, "order checked: all"));

    ScratchFile bad("not-tp", "r 3\ns 1\nt 3\n");
    RunResult refuted = run("check-tp --spec " + bad.path() + " --order 2");
    CHECK(refuted.exit_code == 1);
    CHECK(contains(refuted.out, "verified: no"));
    CHECK(contains(refuted.out, "witness rows: 1 2"));
    CHECK(contains(refuted.out, "witness cols: 0 1"));
    CHECK(contains(refuted.out, "witness value: -24"));

    RunResult json_out = run("check-tp --spec " + bad.path() + " --order 2 --format json");
    CHECK(json_out.exit_code == 1);
    nlohmann::json j = nlohmann::json::parse(json_out.out);
    CHECK(j.at("type") == "tp-report");
    CHECK(j.at("verified") == false);
    CHECK(j.at("witness").at("value") == "-24");

    RunResult capped = run("check-tp --spec " + bad.path() + " --order 2 --tp-order 1");
    CHECK(capped.exit_code == 0);
    CHECK(contains(capped.out, "order checked: 1"));
}

TEST_CASE("full enumeration respects the safety cap") {
    RunResult blocked = run("check-tp --spec pascal --order 17");
    CHECK(blocked.exit_code == 2);
    CHECK(contains(blocked.out, "safety cap"));

    // A bounded minor order never trips the cap.
    RunResult bounded = run("check-tp --spec pascal --order 17 --tp-order 2");
    CHECK(bounded.exit_code == 0);

    RunResult raised = run("check-tp --spec pascal --order 8 --max-order 4");
    CHECK(raised.exit_code == 2);
}

TEST_CASE("check-qtp certifies polynomial positivity") {
    ScratchFile qfile("qtp", "name qdemo\nr q\ns 1+q\nt 1\n");
    RunResult ok = run("check-qtp --spec " + qfile.path() + " --order 4");
    CHECK(ok.exit_code == 0);
    CHECK(contains(ok.out, "verified: yes"));

    // Numeric specs embed as constant polynomials.
    RunResult numeric = run("check-qtp --spec shapiro-catalan --order 4");
    CHECK(numeric.exit_code == 0);

    ScratchFile bad("qtp-bad", "name qbad\nr 2*q\ns 1\nt q\n");
    RunResult refuted = run("check-qtp --spec " + bad.path() + " --order 2 --format json");
    CHECK(refuted.exit_code == 1);
    nlohmann::json j = nlohmann::json::parse(refuted.out);
    CHECK(j.at("type") == "q-tp-report");
    CHECK(j.at("verified") == false);
    CHECK(j.at("witness").contains("first_negative_power"));

    RunResult wrong_kind = run("check-qtp --spec eulerian --order 4");
    CHECK(wrong_kind.exit_code == 2);

    RunResult use_qtp = run("check-tp --spec " + qfile.path() + " --order 3");
    CHECK(use_qtp.exit_code == 2);
    CHECK(contains(use_qtp.out, "check-qtp"));
}

TEST_CASE("check-criteria reports each requested criterion") {
    RunResult all = run("check-criteria --spec bell --order 8");
    CHECK(all.exit_code == 1);  // the column-dominance and bidiagonal checks fail
    CHECK(contains(all.out, "cor-2.4: holds"));
    CHECK(contains(all.out, "thm-2.9: holds"));
    CHECK(contains(all.out, "lemma-2.7-row: holds"));
    CHECK(contains(all.out, "lemma-2.7-col: fails at index 1: y_1 >= x_1 + z_2"));

    RunResult subset = run("check-criteria --spec bell --order 8 --which cor-2.4,thm-2.9");
    CHECK(subset.exit_code == 0);
    CHECK(subset.out == "cor-2.4: holds\nthm-2.9: holds\n");

    RunResult unknown = run("check-criteria --spec bell --order 8 --which thm-9.9");
    CHECK(unknown.exit_code == 2);
    CHECK(contains(unknown.out, "unknown criterion"));

    ScratchFile qfile("qcrit", "name qdemo\nr q\ns 1+q\nt 1\n");
    RunResult qall = run("check-criteria --spec " + qfile.path() + " --order 8");
    CHECK(qall.exit_code == 0);
    CHECK(qall.out ==
          "thm-3.1-i: holds\n"
          "thm-3.1-ii: holds\n"
          "thm-3.1-iii: holds\n");

    RunResult csv = run("check-criteria --spec bell --order 8 --which cor-2.5 --format csv");
    CHECK(csv.exit_code == 1);
    CHECK(csv.out == "cor-2.5,fails,1,t_1 == 0 violated: t_1 = 1\n");
}

TEST_CASE("factorization command") {
    RunResult ok = run("factorization --spec bell --order 6");
    CHECK(ok.exit_code == 0);
    CHECK(ok.out == "factorization verified up to order 6\n");

    RunResult js = run("factorization --spec stirling2 --order 5 --format json");
    CHECK(js.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(js.out);
    CHECK(j.at("verified") == true);
}

TEST_CASE("conjecture probes are labeled as finite evidence") {
    RunResult narayana = run("conjecture --name narayana --order 6");
    CHECK(narayana.exit_code == 0);
    CHECK(contains(narayana.out, "verified: yes"));
    CHECK(contains(narayana.out, "note: evidence at finite truncation, not a proof"));

    RunResult eulerian = run("conjecture --name eulerian --order 6 --format json");
    CHECK(eulerian.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(eulerian.out);
    CHECK(j.at("verified") == true);
    CHECK(j.at("note") == "evidence at finite truncation, not a proof");

    RunResult wrong = run("conjecture --name pascal --order 4");
    CHECK(wrong.exit_code == 2);
    CHECK(contains(wrong.out, "eulerian, narayana"));
}

TEST_CASE("spec and conjecture name may be passed positionally") {
    RunResult gen = run("gen aigner-catalan --order 4 --format plain");
    CHECK(gen.exit_code == 0);
    CHECK(gen.out ==
          "1\n"
          "1 1\n"
          "2 3 1\n"
          "5 9 5 1\n"
          "14 28 20 7 1\n");
    CHECK(gen.out == run("gen --spec aigner-catalan --order 4").out);

    RunResult crit = run("check-criteria bell --which thm-2.9 --order 12");
    CHECK(crit.exit_code == 0);
    CHECK(crit.out == "thm-2.9: holds\n");

    RunResult conj = run("conjecture narayana --order 8");
    CHECK(conj.exit_code == 0);
    CHECK(contains(conj.out, "verified: yes"));
}

TEST_CASE("usage errors exit with status 2") {
    CHECK(run("").exit_code == 2);
    CHECK(run("gen --spec pascal").exit_code == 2);          // missing --order
    CHECK(run("gen --order 3").exit_code == 2);              // missing --spec
    CHECK(run("gen --spec pascal --order -1").exit_code == 2);
    CHECK(run("gen --spec pascal --order 3 --format yaml").exit_code == 2);
    CHECK(run("frobnicate").exit_code == 2);

    RunResult unknown = run("gen --spec no-such-thing --order 3");
    CHECK(unknown.exit_code == 2);
    CHECK(contains(unknown.out, "unknown spec"));
    CHECK(contains(unknown.out, "pascal"));

    RunResult bad_tp_order = run("check-tp --spec pascal --order 3 --tp-order zero");
    CHECK(bad_tp_order.exit_code == 2);

    CHECK(run("--help").exit_code == 0);
    CHECK(run("gen --help").exit_code == 0);
}
