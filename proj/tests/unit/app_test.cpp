#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include <gtest/gtest.h>

#include "kummer_app/documents.hpp"
#include "kummer_app/pipeline.hpp"
#include "support.hpp"

namespace kummer::app {
namespace {

const std::string data_dir = KUMMER_DATA_DIR;

JobSpec catalog_job(const std::string& name) {
    JobSpec job;
    job.catalog = name;
    return job;
}

JobSpec file_job(Mode mode, const std::string& path) {
    JobSpec job;
    job.mode = mode;
    job.input = path;
    return job;
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
    const auto path = std::filesystem::temp_directory_path() / ("kummer_test_" + name);
    std::ofstream(path) << content;
    return path;
}

const Check* find_check(const Report& r, const std::string& prefix) {
    for (const auto& c : r.checks)
        if (c.name.rfind(prefix, 0) == 0) return &c;
    return nullptr;
}

TEST(Pipeline, IntegralZ6) {
    const Report r = run(catalog_job("z6_sl2"));
    EXPECT_EQ(r.quotient, (IntPolynomial{1, 0, 4, 0, 1}));
    EXPECT_EQ(r.resolution, (IntPolynomial{1, 0, 22, 0, 1}));
    EXPECT_EQ(r.group_order, 6u);
    EXPECT_TRUE(r.all_passed());
    EXPECT_EQ(exit_code(r), 0);
    EXPECT_FALSE(r.hypotheses.empty());
    for (const auto& c : r.checks) EXPECT_FALSE(c.expected.empty() && c.actual.empty()) << c.name;
}

TEST(Pipeline, OctahedralWithOracle) {
    JobSpec job = catalog_job("octahedral_s4_sl3");
    job.oracle = 6;
    const Report r = run(job);
    EXPECT_EQ(r.resolution, (IntPolynomial{1, 0, 20, 14, 20, 0, 1}));
    ASSERT_NE(find_check(r, "torsion oracle at N=6"), nullptr);
    EXPECT_TRUE(find_check(r, "torsion oracle at N=6")->passed);
    EXPECT_TRUE(r.all_passed());
}

TEST(Pipeline, GroupFileMatchesCatalog) {
    const Report from_file = run(file_job(Mode::Integral, data_dir + "/groups/z6_sl2.json"));
    EXPECT_EQ(from_file.resolution, run(catalog_job("z6_sl2")).resolution);
    const Report octahedral = run(file_job(Mode::Integral, data_dir + "/groups/octahedral_s4.json"));
    EXPECT_EQ(octahedral.resolution, (IntPolynomial{1, 0, 20, 14, 20, 0, 1}));
}

TEST(Pipeline, Ledgers) {
    const Report d6 = run(file_job(Mode::Ledger, data_dir + "/ledgers/d6.json"));
    ASSERT_TRUE(d6.symbolic);
    EXPECT_EQ(d6.symbolic->linear, (IntPolynomial{0, 0, 1, 4, 6, 4, 1}));
    EXPECT_EQ(d6.resolution, (IntPolynomial{1, 0, 7, 8, 108, 8, 7, 0, 1}));
    EXPECT_TRUE(d6.all_passed());
    const Report d8 = run(file_job(Mode::Ledger, data_dir + "/ledgers/d8.json"));
    EXPECT_EQ(d8.resolution, (IntPolynomial{1, 0, 23, 0, 276, 0, 23, 0, 1}));
    EXPECT_TRUE(d8.all_passed());
}

TEST(Pipeline, AnalyticCatalogAndFileAgree) {
    JobSpec job = catalog_job("binary_tetrahedral");
    job.mode = Mode::Analytic;
    const Report a = run(job);
    const Report b = run(file_job(Mode::Analytic, data_dir + "/analytic/binary_tetrahedral.json"));
    EXPECT_TRUE(a.all_passed());
    EXPECT_TRUE(b.all_passed());
    EXPECT_EQ(a.bls, "BinaryTetrahedral");
    EXPECT_EQ(a.analytic, b.analytic);
    ASSERT_EQ(a.constraints.size(), 1u);
    EXPECT_FALSE(a.constraints.front().feasible);
}

TEST(Pipeline, FailedExpectationGivesExitOne) {
    auto doc = read_json_file(data_dir + "/ledgers/d8.json");
    doc["expect"]["polynomial"] = Json::array({1, 0, 23, 0, 277, 0, 23, 0, 1});
    const auto path = temp_file("bad_d8.json", doc.dump());
    const Report r = run(file_job(Mode::Ledger, path.string()));
    EXPECT_FALSE(r.all_passed());
    EXPECT_EQ(exit_code(r), 1);
    const Check* c = find_check(r, "resolution polynomial");
    ASSERT_NE(c, nullptr);
    EXPECT_FALSE(c->passed);
    EXPECT_NE(c->expected, c->actual);
}

TEST(Pipeline, InputErrorsThrow) {
    EXPECT_KUMMER_ERROR(run(catalog_job("nope")), ErrorCode::UnknownCatalogEntry);
    const auto bad = temp_file("bad_ledger.json", R"({"label": "x", "entries": [{"count": {"parameter": 1}, "base": [1]}]})");
    EXPECT_KUMMER_ERROR(run(file_job(Mode::Ledger, bad.string())), ErrorCode::MalformedLedger);
    JobSpec capped = catalog_job("standard_s4_d2");
    capped.max_group_order = 10;
    EXPECT_KUMMER_ERROR(run(capped), ErrorCode::NotFiniteWithinCap);
}

TEST(Documents, Parsing) {
    EXPECT_EQ(parse_rational(Json(3)), Rational(3));
    EXPECT_EQ(parse_rational(Json::array({2, 4})), Rational(1, 2));
    EXPECT_EQ(parse_polynomial(Json::array({1, 0, 4})), (IntPolynomial{1, 0, 4}));
    EXPECT_EQ(polynomial_json(IntPolynomial{1, 2}), Json::array({1, 2}));
    const auto action = parse_group_spec(read_json_file(data_dir + "/groups/z6_sl2.json"), 2, 100);
    EXPECT_EQ(action.d(), 2u);
    EXPECT_EQ(action.order(), 6u);
    const auto c = parse_constraint(Json::parse(
        R"({"label": "x", "unknowns": [{"name": "s", "min": 0, "max": 3}], "equations": [{"terms": [{"coeff": 1, "vars": ["s"]}, {"coeff": -2}]}], "expect": {"feasible": true}})"));
    EXPECT_EQ(c.constraint.unknowns.size(), 1u);
    EXPECT_EQ(c.expect.feasible, true);
}

TEST(Report, JsonRoundTripAndDeterminism) {
    JobSpec job = catalog_job("octahedral_s4_sl3");
    job.equivariant = true;
    job.oracle = 2;
    for (const Report& r : {run(job), run(file_job(Mode::Ledger, data_dir + "/ledgers/d6.json"))}) {
        const std::string text = emit_json(r);
        EXPECT_EQ(parse_report(text), r);
        EXPECT_EQ(emit_json(parse_report(text)), text);
        EXPECT_EQ(Json::parse(text)["report_version"], 1);
    }
    EXPECT_EQ(emit_json(run(job)), emit_json(run(job)));
    EXPECT_EQ(render_text(run(job)), render_text(run(job)));
}

// The installed binary, driven through the shell.
int run_cli(const std::string& args, std::string* output = nullptr) {
    const auto out = std::filesystem::temp_directory_path() / "kummer_cli_out.txt";
    const int status = std::system((std::string(KUMMER_CLI) + " " + args + " > " + out.string() + " 2>&1").c_str());
    if (output) {
        std::stringstream buffer;
        buffer << std::ifstream(out).rdbuf();
        *output = buffer.str();
    }
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

TEST(Cli, ExitCodes) {
    std::string out;
    EXPECT_EQ(run_cli("run --catalog z6_sl2 --format json", &out), 0);
    EXPECT_EQ(Json::parse(out)["resolution"], Json::array({1, 0, 22, 0, 1}));
    EXPECT_EQ(run_cli("run --catalog octahedral_s4_sl3 --d 1 --oracle 6", &out), 0);
    EXPECT_NE(out.find("1 + 20t^2 + 14t^3 + 20t^4 + t^6"), std::string::npos);
    EXPECT_EQ(run_cli("run --mode ledger --input " + data_dir + "/ledgers/d8.json"), 0);
    EXPECT_EQ(run_cli("run --mode analytic --catalog binary_tetrahedral"), 0);
    EXPECT_EQ(run_cli("run --catalog no_such_group"), 2);
    EXPECT_EQ(run_cli("run --catalog z6_sl2 --oracle 0"), 2);
    EXPECT_EQ(run_cli("run --bogus-flag"), 2);
    EXPECT_EQ(run_cli("run --mode ledger --input /nonexistent/ledger.json"), 2);
    auto doc = read_json_file(data_dir + "/ledgers/d8.json");
    doc["expect"]["polynomial"] = Json::array({1});
    EXPECT_EQ(run_cli("run --mode ledger --input " + temp_file("cli_bad.json", doc.dump()).string()), 1);
}

TEST(Cli, Listing) {
    std::string out;
    EXPECT_EQ(run_cli("list", &out), 0);
    EXPECT_NE(out.find("standard_s4_d2: Beauville generalized Kummer, dim 6"), std::string::npos) << out;
    EXPECT_NE(out.find("binary_tetrahedral"), std::string::npos);
    EXPECT_EQ(run_cli("list sl2", &out), 0);
    EXPECT_EQ(out.find("standard_s4_d2"), std::string::npos);
}

TEST(Cli, OutputIsByteIdentical) {
    std::string first, second;
    run_cli("run --catalog standard_s3 --format json --equivariant", &first);
    run_cli("run --catalog standard_s3 --format json --equivariant", &second);
    EXPECT_EQ(first, second);
    EXPECT_FALSE(first.empty());
}

}  // namespace
}  // namespace kummer::app
