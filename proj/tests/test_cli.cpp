#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "fixtures.hpp"
#include "geotype/io.hpp"
#include "geotype/refinement.hpp"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string stdout_text;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(GEOTYPE_CLI_PATH) + " " + args + " 2>/dev/null";
    RunResult res;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
        res.stdout_text.append(buf.data(), got);
    }
    const int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

std::string write_temp(const std::string& name, const std::string& content) {
    const std::string path = std::string("cli_") + name;
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << content;
    return path;
}

}  // namespace

TEST_CASE("cli validate reports ok and failure with the exit-code contract") {
    const std::string good = write_temp("good.json", geotype::serialize_type(fixtures::t0()));
    const RunResult ok = run_cli("validate " + good);
    CHECK(ok.exit_code == 0);
    CHECK(ok.stdout_text == "ok: true\n");

    geotype::GeometricType broken = fixtures::t0();
    broken.hv[0].second = 1;  // unbalanced
    const std::string bad = write_temp("bad.json", geotype::serialize_type(broken));
    const RunResult fail = run_cli("validate " + bad);
    CHECK(fail.exit_code == 1);
    CHECK(fail.stdout_text.find("ok: false") == 0);

    const RunResult missing = run_cli("validate no_such_file.json");
    CHECK(missing.exit_code == 1);
}

TEST_CASE("cli validate flags non-mixing types with an advisory, not an error") {
    geotype::GeometricType perm;  // swap permutation, period 2
    perm.n = 2;
    perm.hv = {{1, 1}, {1, 1}};
    perm.rho = {{2, 1}, {1, 1}};
    perm.eps = {1, 1};
    const std::string path = write_temp("perm.json", geotype::serialize_type(perm));
    const RunResult res = run_cli("validate " + path);
    CHECK(res.exit_code == 0);
    CHECK(res.stdout_text == "ok: true\nadvisory: incidence matrix is not mixing\n");
}

TEST_CASE("cli refine emits the refined file and applied flag") {
    const std::string t0 = write_temp("t0.json", geotype::serialize_type(fixtures::t0()));
    const RunResult res = run_cli("refine " + t0);
    CHECK(res.exit_code == 0);
    const std::string expected =
        "applied: true\n" +
        geotype::serialize_type(geotype::binary_refinement(fixtures::t0()));
    CHECK(res.stdout_text == expected);

    // The emitted document (after the flag line) parses back to the type.
    const std::string doc = res.stdout_text.substr(res.stdout_text.find('\n') + 1);
    CHECK(geotype::parse_type(doc) == geotype::binary_refinement(fixtures::t0()));
}

TEST_CASE("cli output is byte-identical across invocations") {
    const std::string t0 = write_temp("det.json", geotype::serialize_type(fixtures::t0()));
    for (const std::string sub :
         {std::string("incidence "), std::string("boundary-codes "), std::string("refine ")}) {
        const RunResult a = run_cli(sub + t0);
        const RunResult b = run_cli(sub + t0);
        CHECK(a.exit_code == 0);
        CHECK(a.stdout_text == b.stdout_text);
        const RunResult aj = run_cli(sub + t0 + " --json");
        const RunResult bj = run_cli(sub + t0 + " --json");
        CHECK(aj.stdout_text == bj.stdout_text);
    }
}

TEST_CASE("cli incidence prints matrix and flags") {
    const std::string t0 = write_temp("inc.json", geotype::serialize_type(fixtures::t0()));
    const RunResult res = run_cli("incidence " + t0);
    CHECK(res.exit_code == 0);
    CHECK(res.stdout_text == "n: 1\nrow 1: 2\nbinary: false\nmixing: true\n");
}

TEST_CASE("cli orbit and boundary-codes") {
    const std::string b0 = write_temp(
        "b0.json", geotype::serialize_type(geotype::binary_refinement(fixtures::t0())));
    const RunResult orb = run_cli("orbit " + b0 + " s:+1");
    CHECK(orb.exit_code == 0);
    CHECK(orb.stdout_text == "transient: s:+1\ncycle: s:+2\n");

    const RunResult codes = run_cli("boundary-codes " + b0);
    CHECK(codes.exit_code == 0);
    CHECK(codes.stdout_text.find("s:-1 code: (1)*\n") != std::string::npos);
    CHECK(codes.stdout_text.find("s:+1 code: 1.(2)*\n") != std::string::npos);
    CHECK(codes.stdout_text.find("injective: true\n") != std::string::npos);

    const RunResult bad_label = run_cli("orbit " + b0 + " s:+9");
    CHECK(bad_label.exit_code == 1);
}

TEST_CASE("cli classify and class") {
    const std::string b0 = write_temp(
        "b0c.json", geotype::serialize_type(geotype::binary_refinement(fixtures::t0())));
    const RunResult interior = run_cli("classify " + b0 + " \"(12)*..(12)*@0\"");
    CHECK(interior.exit_code == 0);
    CHECK(interior.stdout_text == "in_S: false\nin_U: false\ninterior: true\n");

    const RunResult cls = run_cli("class " + b0 + " \"(1)*..(1)*@0\"");
    CHECK(cls.exit_code == 0);
    CHECK(cls.stdout_text.find("size: 2") == 0);
    CHECK(cls.stdout_text.find("member: (1)*..(1)*@0\n") != std::string::npos);
    CHECK(cls.stdout_text.find("member: (2)*..(2)*@0\n") != std::string::npos);

    // Truncation makes membership queries indeterminate, not wrong: the
    // class command reports it and exits on the property-violation code
    // when the closure cannot even start.
    const RunResult capped = run_cli("class " + b0 + " \"(1)*..(1)*@0\" --cap 1");
    CHECK(capped.exit_code == 0);
    CHECK(capped.stdout_text.find("truncated: true") != std::string::npos);

    // Non-binary type: property violation.
    const std::string t0 = write_temp("t0c.json", geotype::serialize_type(fixtures::t0()));
    const RunResult nonbin = run_cli("class " + t0 + " \"(1)*..(1)*@0\"");
    CHECK(nonbin.exit_code == 2);
}

TEST_CASE("cli json schemas are stable") {
    const std::string b0 = write_temp(
        "b0j.json", geotype::serialize_type(geotype::binary_refinement(fixtures::t0())));
    const RunResult orb = run_cli("orbit " + b0 + " s:+1 --json");
    CHECK(orb.exit_code == 0);
    CHECK(orb.stdout_text ==
          "{\n  \"transient\": [\n    \"s:+1\"\n  ],\n  \"cycle\": [\n    \"s:+2\"\n  ]\n}\n");

    const RunResult classify = run_cli("classify " + b0 + " \"(12)*..(12)*@0\" --json");
    CHECK(classify.exit_code == 0);
    CHECK(classify.stdout_text ==
          "{\n  \"in_S\": false,\n  \"in_U\": false,\n  \"interior\": true\n}\n");

    const std::string t0 = write_temp("t0j.json", geotype::serialize_type(fixtures::t0()));
    const RunResult cmp = run_cli("compare " + t0 + " " + b0 + " --json");
    CHECK(cmp.exit_code == 0);
    CHECK(cmp.stdout_text.find("\"verdict\": \"invariant-distinct\"") != std::string::npos);
    CHECK(cmp.stdout_text.find("\"inputs_equal\": false") != std::string::npos);
}

TEST_CASE("cli compare") {
    const std::string t0 = write_temp("cmp0.json", geotype::serialize_type(fixtures::t0()));
    const std::string t1 = write_temp("cmp1.json", geotype::serialize_type(fixtures::t1()));
    const RunResult same = run_cli("compare " + t0 + " " + t0);
    CHECK(same.exit_code == 0);
    CHECK(same.stdout_text.find("verdict: same-invariant\n") != std::string::npos);

    const RunResult distinct = run_cli("compare " + t0 + " " + t1);
    CHECK(distinct.exit_code == 0);
    CHECK(distinct.stdout_text.find("verdict: invariant-distinct\n") != std::string::npos);
}

TEST_CASE("cli words and periodic with budget exit code") {
    const std::string b0 = write_temp(
        "b0w.json", geotype::serialize_type(geotype::binary_refinement(fixtures::t0())));
    const RunResult count = run_cli("words " + b0 + " 3");
    CHECK(count.exit_code == 0);
    CHECK(count.stdout_text == "count: 8\n");

    const RunResult listed = run_cli("words " + b0 + " 2 --list");
    CHECK(listed.exit_code == 0);
    CHECK(listed.stdout_text ==
          "count: 4\nword: 1 1\nword: 1 2\nword: 2 1\nword: 2 2\n");

    const RunResult periodic = run_cli("periodic " + b0 + " 1");
    CHECK(periodic.exit_code == 0);
    CHECK(periodic.stdout_text == "count: 2\ncode: (1)*..(1)*@0\ncode: (2)*..(2)*@0\n");

    const RunResult over = run_cli("periodic " + b0 + " 25 --budget 100");
    CHECK(over.exit_code == 3);

    const RunResult huge_list = run_cli("words " + b0 + " 20 --list");
    CHECK(huge_list.exit_code == 3);

    // Non-binary file: property violation for word counting.
    const std::string t0 = write_temp("t0w.json", geotype::serialize_type(fixtures::t0()));
    const RunResult nonbin = run_cli("words " + t0 + " 3");
    CHECK(nonbin.exit_code == 2);
}
