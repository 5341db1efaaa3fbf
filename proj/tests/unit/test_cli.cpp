#include "hmf/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
    nlohmann::json json() const { return nlohmann::json::parse(out); }
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int code = hmf::cli::dispatch(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(std::string const & name)
{
    return std::filesystem::temp_directory_path() / ("hmf_cli_test_" + name);
}

}  // namespace

TEST_SUITE("cli")
{
    TEST_CASE("hecke relation")
    {
        auto r = run({"hecke", "verify-relation", "--p", "2", "--k", "1", "--m", "1"});
        CHECK(r.code == 0);
        CHECK(r.json() == nlohmann::json::parse(R"({"T16":1,"T4":2,"T1":4})"));
        auto r3 = run({"hecke", "verify-relation", "--p", "3", "--k", "1", "--m", "1"});
        CHECK(r3.json() == nlohmann::json::parse(R"({"T81":1,"T9":3,"T1":9})"));
    }

    TEST_CASE("S polynomial orthogonality")
    {
        auto r = run({"measure", "phi", "--p", "2:0", "--spoly", "1"});
        CHECK(r.code == 0);
        CHECK(std::abs(r.json().at("value").get<double>()) < 1e-8);
        auto r0 = run({"measure", "phi", "--p", "2:0", "--spoly", "0"});
        CHECK(r0.json().at("value").get<double>() == doctest::Approx(1.0));
        auto inert = run({"--field", "Q(sqrt 5)", "measure", "phi", "--p", "2:0", "--moment", "2"});
        CHECK(inert.json().at("value").get<double>() == doctest::Approx(4.0));
    }

    TEST_CASE("exit codes")
    {
        CHECK(run({"bogus"}).code == 2);
        CHECK(run({}).code == 2);
        CHECK(run({"hecke", "verify-relation", "--p", "2"}).code == 2);
        auto bad = run({"--field", "Q(sqrt 4)", "field", "info"});
        CHECK(bad.code == 1);
        auto err = nlohmann::json::parse(bad.err);
        CHECK(err.at("code") == "not_squarefree");
        CHECK(run({"kloosterman", "eval", "--c", "0"}).code == 1);
        CHECK(run({"hecke", "nu", "--p", "2:0", "--lambda", "3.5"}).code == 1);
    }

    TEST_CASE("field commands")
    {
        auto info = run({"--field", "Q(sqrt 5)", "field", "info"});
        CHECK(info.code == 0);
        CHECK(info.json().at("discriminant") == 5);
        CHECK(info.json().at("fundamental_unit") == "0,1");
        auto fac = run({"--field", "Q(sqrt 5)", "field", "factor", "--p", "11"});
        CHECK(fac.json().size() == 2);
        auto el = run({"--field", "Q(sqrt 2)", "field", "element", "--x", "3+1*w"});
        CHECK(el.json().at("trace") == 6);
        CHECK(run({"equidist", "level-index", "--level", "6"}).json().at("level_index") == 12);
    }

    TEST_CASE("measure and kloosterman commands")
    {
        CHECK(run({"measure", "eval", "--kind", "pl0", "--interval", "0:0"}).json().at("value") == 1.0);
        CHECK(run({"measure", "eval", "--kind", "pl1", "--interval=-1:0"}).json().at("value") == 2.0);
        auto k = run({"kloosterman", "eval", "--c", "5"});
        CHECK(k.json().at("re").get<double>() == doctest::Approx(0.381966011250105).epsilon(1e-12));
        auto d = run({"--field", "Q(sqrt 5)", "kloosterman", "delta", "--r", "-1/5,2/5", "--rp", "-1/5,2/5"});
        CHECK(d.code == 0);
        CHECK(d.json().at("re").get<double>() == doctest::Approx(1.0));
    }

    TEST_CASE("equidist pipeline and output files")
    {
        auto data = temp_file("data.jsonl");
        auto box = R"({"xi":[0,0],"q":[0],"e":[{"index":1,"a":0.3,"b":1.2}]})";
        auto s = run({"--field", "Q(sqrt 73)", "--seed", "3", "--out", data.string(), "equidist", "synth", "--box", box,
                      "--t", "20", "--primes", "2:0,3:0", "--count", "2000", "--covolume", "1"});
        CHECK(s.code == 0);
        REQUIRE(std::filesystem::exists(data));
        auto c = run({"--field", "Q(sqrt 73)", "equidist", "count", "--data", data.string(), "--box", box, "--t", "20",
                      "--intervals", "2:0=0:1"});
        CHECK(c.code == 0);
        auto p = run({"--field", "Q(sqrt 73)", "equidist", "predict", "--box", box, "--t", "20", "--intervals",
                      "2:0=0:1", "--covolume", "1"});
        CHECK(p.code == 0);
        double ratio = c.json().at("count").get<double>() / p.json().at("prediction").get<double>();
        CHECK(ratio == doctest::Approx(1.0).epsilon(0.1));

        auto again = temp_file("data2.jsonl");
        run({"--field", "Q(sqrt 73)", "--seed", "3", "--out", again.string(), "equidist", "synth", "--box", box, "--t",
             "20", "--primes", "2:0,3:0", "--count", "2000", "--covolume", "1"});
        std::ifstream a(data), b(again);
        std::stringstream sa, sb;
        sa << a.rdbuf();
        sb << b.rdbuf();
        CHECK(sa.str() == sb.str());
        std::filesystem::remove(data);
        std::filesystem::remove(again);
    }
}
