#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "maass/cli.hpp"

using namespace maass;
using namespace maass::cli;

namespace {

struct Outcome
{
    int code;
    std::string out;
    std::string err;
};

Outcome invoke(const std::vector<std::string>& args)
{
    std::ostringstream out, err;
    const int code = cli::main(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text)
{
    std::vector<std::string> out;
    std::stringstream ss(text);
    for (std::string line; std::getline(ss, line);) out.push_back(line);
    return out;
}

std::vector<std::string> cells(const std::string& line)
{
    std::vector<std::string> out;
    std::stringstream ss(line);
    for (std::string cell; std::getline(ss, cell, ',');) out.push_back(cell);
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

/// Drops every "runtime_ms" member, recursively.
void strip_runtime(json& j)
{
    if (j.is_object()) {
        j.erase("runtime_ms");
        for (auto& [key, value] : j.items()) strip_runtime(value);
    } else if (j.is_array()) {
        for (auto& value : j) strip_runtime(value);
    }
}

int run_binary(const std::string& args)
{
    const std::string cmd = std::string("\"") + MAASS_CLI_PATH + "\" " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

} // namespace

TEST(ParseArgs, CoefficientTable)
{
    const auto cfg = parse_args({"coeff", "--kind", "maass", "--k", "-2", "--m", "1", "--level", "1", "--n", "0..8", "--cmax", "300", "--format", "json"});
    EXPECT_EQ(cfg.command, Command::coeff);
    EXPECT_EQ(cfg.kind, CoeffKind::maass);
    EXPECT_EQ(cfg.form.k, -2);
    EXPECT_EQ(cfg.form.m, 1);
    EXPECT_EQ(cfg.form.level, 1);
    EXPECT_EQ(cfg.n.lo, 0);
    EXPECT_EQ(cfg.n.hi, 8);
    EXPECT_EQ(cfg.trunc.c_max, 300);
    EXPECT_EQ(cfg.format, Format::json);
    EXPECT_FALSE(cfg.output_path.has_value());
}

TEST(ParseArgs, SuiteList)
{
    const auto cfg = parse_args({"verify", "--suite", "continuation-upper,continuation-lower", "--k", "-2", "--m", "1"});
    EXPECT_EQ(cfg.command, Command::verify);
    EXPECT_EQ(cfg.suite, (std::vector<std::string>{"continuation-upper", "continuation-lower"}));
    EXPECT_EQ(parse_args({"verify"}).suite, suite_names());
}

TEST(ParseArgs, LowerPlanePoint)
{
    const auto cfg = parse_args({"eval", "--k", "-2", "--m", "1", "--tau", "0.2,-1.3"});
    ASSERT_EQ(cfg.points.size(), 1u);
    EXPECT_EQ(cfg.points[0].plane(), forms::Plane::lower);
    EXPECT_DOUBLE_EQ(cfg.points[0].v(), -1.3);
}

TEST(ParseArgs, ContinuationDefaultsAndOverrides)
{
    const auto cfg = parse_args({"continue", "--tau", "0.2,1.3", "--tau", "0.1,-0.9", "--nodes", "128", "--radius-factor", "4.5", "--threads", "2"});
    EXPECT_EQ(cfg.command, Command::continuation);
    EXPECT_EQ(cfg.points.size(), 2u);
    EXPECT_EQ(cfg.trunc.c_max, 30);
    EXPECT_EQ(cfg.trunc.contour_nodes, 128);
    EXPECT_DOUBLE_EQ(cfg.trunc.radius_factor, 4.5);
    EXPECT_EQ(cfg.trunc.threads, 2u);
}

TEST(ParseArgs, UsageErrors)
{
    const std::vector<std::vector<std::string>> bad{
        {},
        {"frobnicate"},
        {"coeff", "--bogus"},
        {"eval", "--k", "-2"},
        {"eval", "--tau", "0.2"},
        {"eval", "--tau", "0.2,abc"},
        {"eval", "--tau", "0.2,0.0001"},
        {"coeff", "--n", "5..2"},
        {"coeff", "--n", "a..b"},
        {"coeff", "--format", "xml"},
        {"coeff", "--kind", "mock"},
        {"continue", "--tau", "0.2,1.3", "--radius-factor", "7"},
        {"continue", "--tau", "0.2,1.3", "--nodes", "0"},
        {"verify", "--suite", "continuation-upper,nonsense"},
        {"verify", "--tol", "-1"},
        {"kloosterman", "--c", "0..3"},
    };
    for (const auto& args : bad) {
        EXPECT_THROW(parse_args(args), usage_error) << (args.empty() ? std::string("<empty>") : args[0]);
        EXPECT_EQ(invoke(args).code, exit_usage);
    }
}

TEST(ParseArgs, HelpIsNotAnError)
{
    const auto r = invoke({"--help"});
    EXPECT_EQ(r.code, exit_ok);
    EXPECT_NE(r.out.find("verify"), std::string::npos);
}

TEST(ParseArgs, RangesAndPoints)
{
    EXPECT_EQ(parse_range("7").lo, 7);
    EXPECT_EQ(parse_range("7").hi, 7);
    EXPECT_EQ(parse_range("-3..4").lo, -3);
    EXPECT_THROW(parse_range("1..2x"), usage_error);
    EXPECT_EQ(parse_point("-0.4,1.1").tau(), Complex(-0.4, 1.1));
    EXPECT_THROW(parse_point("1.0;2.0"), usage_error);
}

TEST(Run, HoloRatioColumnReproducesTau)
{
    const auto r = invoke({"coeff", "--kind", "holo", "--k", "12", "--m", "1", "--n", "1..4", "--format", "csv"});
    ASSERT_EQ(r.code, exit_ok);
    const auto rows = lines(r.out);
    ASSERT_EQ(rows.size(), 5u);
    EXPECT_EQ(rows[0], "kind,k,m,level,n,part,value,tail,c_max,ratio");
    const double expected[] = {1.0, -24.0, 252.0, -1472.0};
    for (int i = 0; i < 4; ++i) {
        const auto c = cells(rows[static_cast<std::size_t>(i + 1)]);
        ASSERT_EQ(c.size(), 10u);
        EXPECT_EQ(c[0], "holo");
        EXPECT_EQ(c[8], "300");
        EXPECT_NEAR(std::stod(c[9]), expected[i], 1e-3);
    }
}

TEST(Run, CoefficientJsonSchema)
{
    const auto r = invoke({"coeff", "--k", "-2", "--m", "1", "--n", "0..3", "--cmax", "50"});
    ASSERT_EQ(r.code, exit_ok);
    const json doc = json::parse(r.out);
    EXPECT_EQ(doc.at("schema_version"), schema_version);
    EXPECT_EQ(doc.at("command"), "coeff");
    EXPECT_EQ(doc.at("params").at("kind"), "maass");
    EXPECT_EQ(doc.at("params").at("trunc").at("c_max"), 50);
    EXPECT_TRUE(doc.at("errors").empty());
    const auto& results = doc.at("results");
    ASSERT_EQ(results.size(), 7u); // n = 0 plus two parts for n = 1..3
    for (const auto& row : results) {
        EXPECT_TRUE(row.contains("tail"));
        EXPECT_EQ(row.at("c_max"), 50);
    }
    EXPECT_EQ(results[0].at("part"), "plus");
    EXPECT_DOUBLE_EQ(results[0].at("value").get<double>(), coeffs::a_plus_zero(-2, 1, 1, parse_args({"coeff", "--cmax", "50"}).trunc).value);
}

TEST(Run, KloostermanCsv)
{
    const auto r = invoke({"kloosterman", "--m", "1", "--n", "1", "--c", "5..5", "--format", "csv"});
    ASSERT_EQ(r.code, exit_ok);
    const auto rows = lines(r.out);
    ASSERT_EQ(rows.size(), 2u);
    const auto c = cells(rows[1]);
    EXPECT_NEAR(std::stod(c[3]), (3.0 - std::sqrt(5.0)) / 2.0, 1e-14);
}

TEST(Run, EvalBothPlanes)
{
    const auto r = invoke({"eval", "--k", "-2", "--m", "1", "--tau", "0.2,1.3", "--tau", "0.2,-1.3", "--cmax", "100"});
    ASSERT_EQ(r.code, exit_ok);
    const json doc = json::parse(r.out);
    ASSERT_EQ(doc.at("results").size(), 2u);
    EXPECT_EQ(doc["results"][0].at("plane"), "upper");
    EXPECT_EQ(doc["results"][1].at("plane"), "lower");
    for (const auto& row : doc["results"]) {
        EXPECT_TRUE(row.contains("tail_estimate"));
        EXPECT_EQ(row.at("c_max"), 100);
        EXPECT_EQ(row.at("n_max"), 20);
    }
}

TEST(Run, ContinuationMatchesEval)
{
    const auto h = json::parse(invoke({"continue", "--tau", "0.2,1.3", "--k", "-2", "--m", "1"}).out);
    const auto f = json::parse(invoke({"eval", "--tau", "0.2,1.3", "--k", "-2", "--m", "1", "--nmax", "40"}).out);
    const auto& hv = h["results"][0]["value"];
    const auto& fv = f["results"][0]["value"];
    const Complex a(hv["re"].get<double>(), hv["im"].get<double>()), b(fv["re"].get<double>(), fv["im"].get<double>());
    EXPECT_LE(std::abs(a - b) / (1.0 + std::abs(b)), 1e-4);
    for (const char* key : {"contour_nodes", "radius_factor", "t_tail", "rounding", "min_pole_distance", "c_max"})
        EXPECT_TRUE(h["results"][0].contains(key)) << key;
}

TEST(Run, VerifyPassAndFail)
{
    const auto pass = invoke({"verify", "--suite", "bol,xi,tau", "--k", "-2", "--m", "1"});
    EXPECT_EQ(pass.code, exit_ok);
    const json doc = json::parse(pass.out);
    EXPECT_EQ(doc.at("results").size(), 3u);
    for (const auto& r : doc["results"]) EXPECT_TRUE(r.at("passed").get<bool>());

    const auto fail = invoke({"verify", "--suite", "continuation-upper", "--k", "-2", "--m", "1", "--tol", "1e-12"});
    EXPECT_EQ(fail.code, exit_verify_failed);
    const json bad = json::parse(fail.out);
    EXPECT_FALSE(bad["results"][0].at("passed").get<bool>());
    EXPECT_EQ(bad["results"][0].at("residuals").size(), 3u);
    EXPECT_NE(fail.err.find("FAILED continuation-upper"), std::string::npos);
}

TEST(Run, NumericErrorsAreRecords)
{
    const auto r = invoke({"coeff", "--k", "3", "--m", "1", "--n", "1..2"});
    EXPECT_EQ(r.code, exit_numeric_error);
    const json doc = json::parse(r.out);
    ASSERT_EQ(doc.at("errors").size(), 1u);
    EXPECT_EQ(doc["errors"][0].at("kind"), "domain");

    const auto csv = invoke({"coeff", "--kind", "holo", "--k", "4", "--m", "-1", "--n", "1000000..1000000", "--cmax", "2", "--format", "csv"});
    EXPECT_EQ(csv.code, exit_numeric_error);
    EXPECT_EQ(lines(csv.out).at(0), "error_kind,message");
    EXPECT_EQ(cells(lines(csv.out).at(1)).at(0), "overflow");

    const auto manifest = invoke({"verify", "--suite", "bol", "--manifest", "/nonexistent/points.json"});
    EXPECT_EQ(manifest.code, exit_numeric_error);
}

TEST(Run, RerunsAreByteIdentical)
{
    const std::vector<std::string> eval{"eval", "--tau", "0.13,0.8", "--tau", "0.2,-1.3", "--format", "csv"};
    EXPECT_EQ(invoke(eval).out, invoke(eval).out);

    const std::vector<std::string> ver{"verify", "--suite", "bol,polylog,modularity-T"};
    json a = json::parse(invoke(ver).out), b = json::parse(invoke(ver).out);
    strip_runtime(a);
    strip_runtime(b);
    EXPECT_EQ(a.dump(), b.dump());
}

TEST(Run, ThreadCountDoesNotChangeOutput)
{
    const std::vector<std::string> base{"continue", "--tau", "0.2,1.3", "--tau", "0.13,-0.8", "--cmax", "12"};
    auto threaded = base;
    threaded.insert(threaded.end(), {"--threads", "3"});
    EXPECT_EQ(invoke(base).out, invoke(threaded).out);
}

TEST(Run, OutputDirectoryOverride)
{
    const auto dir = std::filesystem::temp_directory_path() / "maass_cli_test_out";
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    ASSERT_EQ(setenv("MAASS_OUTPUT_DIR", dir.c_str(), 1), 0);
    const auto r = invoke({"kloosterman", "--c", "1..3", "--output", "kl.json"});
    unsetenv("MAASS_OUTPUT_DIR");
    EXPECT_EQ(r.code, exit_ok);
    EXPECT_TRUE(r.out.empty());
    std::ifstream in(dir / "kl.json");
    ASSERT_TRUE(in.good());
    const json doc = json::parse(in);
    EXPECT_EQ(doc.at("results").size(), 30u);
    std::filesystem::remove_all(dir);
}

TEST(Manifest, DataFileMatchesDefaults)
{
    const auto m = load_manifest(std::string(MAASS_SOURCE_DIR) + "/data/sample_points.json");
    const verify::SampleManifest d;
    EXPECT_EQ(m.version, d.version);
    EXPECT_EQ(m.upper, d.upper);
    EXPECT_EQ(m.lower, d.lower);
    EXPECT_EQ(m.modularity, d.modularity);
    EXPECT_EQ(m.laplacian, d.laplacian);
    EXPECT_EQ(m.cosets, d.cosets);
    EXPECT_THROW(load_manifest("/nonexistent.json"), domain_error);
}

TEST(Binary, ExitCodes)
{
    EXPECT_EQ(run_binary("verify --suite bol,xi --k -2 --m 1"), exit_ok);
    EXPECT_EQ(run_binary("verify --suite continuation-upper --k -2 --m 1 --tol 1e-12"), exit_verify_failed);
    EXPECT_EQ(run_binary("coeff --k 3 --m 1"), exit_numeric_error);
    EXPECT_EQ(run_binary("coeff --bogus"), exit_usage);
    EXPECT_EQ(run_binary("--help"), exit_ok);
}
