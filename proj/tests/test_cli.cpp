// End-to-end checks of the ba binary: exit codes, document round trips,
// report wording, seeded determinism.
#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "ba/ba.hpp"
#include "ba/io.hpp"
#include "oracles.hpp"

namespace {

const ba::RationalField Q;

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(BA_CLI_PATH) + " " + args + " 2>/dev/null";
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string temp_file(const std::string& name, const std::string& content) {
    std::string path = std::string("cli_") + name;
    std::ofstream out(path);
    out << content;
    return path;
}

std::string doc_text(const ba::Json& j) { return ba::document_text(j); }

}  // namespace

TEST_CASE("check command verdicts and exit codes") {
    auto qb = ba::qbinom_matrix(Q, 4, Q.from_int(2));
    auto good_path = temp_file("qb42.json", doc_text(ba::matrix_document(qb)));
    auto r = run_cli("check " + good_path);
    CHECK(r.exit_code == 0);
    CHECK(r.out == "good\nvery good\n");

    auto id = ba::Matrix<ba::RationalField>::identity(Q, 2);
    auto id_path = temp_file("id1.json", doc_text(ba::matrix_document(id)));
    r = run_cli("check " + id_path);
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("not good: window(1,1) singular") != std::string::npos);

    auto bad_path = temp_file("broken.json", "{ not json");
    CHECK(run_cli("check " + bad_path).exit_code == 2);
    CHECK(run_cli("check no_such_file.json").exit_code == 2);
}

TEST_CASE("bvalues command with cross-checked methods") {
    auto qb = ba::qbinom_matrix(Q, 4, Q.from_int(3));
    auto path = temp_file("qb43.json", doc_text(ba::matrix_document(qb)));
    for (const std::string method : {"det", "brace", "flags", "all"}) {
        auto r = run_cli("bvalues " + path + " --method " + method);
        REQUIRE(r.exit_code == 0);
        auto vf = ba::parse_value_function_document(ba::Json::parse(r.out));
        auto& f = std::get<ba::ValueFunction<ba::RationalField>>(vf);
        CHECK(f == ba::ValueFunction<ba::RationalField>::constant(Q, 2, Q.parse("1/3")));
    }

    // not very good: exit 1
    auto id_path = temp_file("id2.json", doc_text(ba::matrix_document(ba::Matrix<ba::RationalField>::identity(Q, 3))));
    CHECK(run_cli("bvalues " + id_path).exit_code == 1);

    // small diameters: empty table, exit 0
    auto tiny = temp_file("tiny.json", doc_text(ba::matrix_document(oracles::mat(Q, {{1, 1}, {0, 1}}))));
    auto r = run_cli("bvalues " + tiny);
    CHECK(r.exit_code == 0);
    auto j = ba::Json::parse(r.out);
    CHECK(j["values"].empty());
}

TEST_CASE("nice and equiv commands") {
    auto t_path = temp_file("t.json", doc_text(ba::matrix_document(oracles::mat(Q, {{2, 2, 2}, {0, 1, 3}, {0, 0, 1}}))));
    auto r = run_cli("nice " + t_path);
    REQUIRE(r.exit_code == 0);
    auto m = ba::parse_matrix_document(ba::Json::parse(r.out));
    CHECK(std::get<ba::Matrix<ba::RationalField>>(m) == oracles::mat(Q, {{1, 1, 1}, {0, 1, 3}, {0, 0, 1}}));

    auto nice_path = temp_file("tn.json", r.out);
    r = run_cli("equiv " + t_path + " " + nice_path);
    CHECK(r.exit_code == 0);
    CHECK(r.out == "equivalent\n");

    auto pascal = temp_file("pascal.json", doc_text(ba::matrix_document(ba::qbinom_matrix(Q, 2, Q.one()))));
    auto qb2 = temp_file("qb2.json", doc_text(ba::matrix_document(ba::qbinom_matrix(Q, 2, Q.from_int(2)))));
    r = run_cli("equiv " + pascal + " " + qb2);
    CHECK(r.exit_code == 1);
    CHECK(r.out == "not equivalent\n");

    // incompatible inputs are a document error, not a verdict
    auto gf = temp_file("gf.json", doc_text(ba::matrix_document(ba::qbinom_matrix(ba::PrimeField(5), 2, ba::PrimeField(5).from_int(2)))));
    CHECK(run_cli("equiv " + pascal + " " + gf).exit_code == 2);
}

TEST_CASE("synth and from-bvalues commands") {
    auto ones = ba::ValueFunction<ba::RationalField>::constant(Q, 2, Q.one());
    auto f_path = temp_file("ones.json", doc_text(ba::value_function_document(ones)));
    auto r = run_cli("synth --from-values " + f_path);
    REQUIRE(r.exit_code == 0);
    CHECK(std::get<ba::Matrix<ba::RationalField>>(ba::parse_matrix_document(ba::Json::parse(r.out))) ==
          oracles::mat(Q, {{1, 1, 1}, {0, 1, 2}, {0, 0, 1}}));

    auto half = ba::ValueFunction<ba::RationalField>::constant(Q, 2, Q.parse("1/2"));
    auto g_path = temp_file("half.json", doc_text(ba::value_function_document(half)));
    r = run_cli("from-bvalues " + g_path + " --d 4");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out == doc_text(ba::matrix_document(ba::qbinom_matrix(Q, 4, Q.from_int(2)))));
    CHECK(run_cli("from-bvalues " + g_path + " --d 5").exit_code == 2);

    // round trip: B-values of the synthesized matrix reproduce g
    auto back_path = temp_file("back.json", r.out);
    auto rb = run_cli("bvalues " + back_path + " --method all");
    REQUIRE(rb.exit_code == 0);
    CHECK(ba::Json::parse(rb.out) == ba::value_function_document(half));
}

TEST_CASE("qbinom command") {
    auto r = run_cli("qbinom --d 3 --q 2");
    REQUIRE(r.exit_code == 0);
    CHECK(std::get<ba::Matrix<ba::RationalField>>(ba::parse_matrix_document(ba::Json::parse(r.out))) ==
          ba::qbinom_matrix(Q, 3, Q.from_int(2)));
    r = run_cli("qbinom --d 2 --q 1");
    CHECK(std::get<ba::Matrix<ba::RationalField>>(ba::parse_matrix_document(ba::Json::parse(r.out))) ==
          oracles::mat(Q, {{1, 1, 1}, {0, 1, 2}, {0, 0, 1}}));
    CHECK(run_cli("qbinom --d 2 --q 0").exit_code == 1);
    r = run_cli("qbinom --d 2 --q 6 --field gf:7");
    REQUIRE(r.exit_code == 0);
    CHECK(ba::Json::parse(r.out)["field"]["prime"] == 7);
}

TEST_CASE("render command") {
    auto r = run_cli("render --locations 3");
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "      030\n"
          "    120 021\n"
          "  210 111 012\n"
          "300 201 102 003\n");

    auto t_path = temp_file("rend.json", doc_text(ba::matrix_document(oracles::mat(Q, {{1, 1, 1}, {0, 1, 3}, {0, 0, 1}}))));
    r = run_cli("render " + t_path);
    CHECK(r.exit_code == 0);
    CHECK(r.out == "  1\n 1 3\n1 1 1\n");
}

TEST_CASE("selftest command is deterministic and fault-sensitive") {
    auto r1 = run_cli("selftest --d 4 --field gf:101 --trials 8 --seed 42");
    CHECK(r1.exit_code == 0);
    CHECK(r1.out.find("PASS") != std::string::npos);
    auto r2 = run_cli("selftest --d 4 --field gf:101 --trials 8 --seed 42");
    CHECK(r2.out == r1.out);  // byte-identical reports

    auto r3 = run_cli("selftest --d 4 --field gf:101 --trials 8 --seed 43");
    CHECK(r3.exit_code == 0);

    auto bad = run_cli("selftest --d 4 --field gf:101 --trials 4 --seed 42 --inject-fault");
    CHECK(bad.exit_code == 3);
    CHECK(bad.out.find("FAIL") != std::string::npos);
}

TEST_CASE("output flag writes files") {
    auto r = run_cli("qbinom --d 2 --q 3 --output cli_out.json");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.empty());
    std::ifstream in("cli_out.json");
    REQUIRE(in.good());
    std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(content == doc_text(ba::matrix_document(ba::qbinom_matrix(Q, 2, Q.from_int(3)))));
}
