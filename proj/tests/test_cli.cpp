#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "braid3/cli.hpp"

using namespace braid3;
using nlohmann::json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run_cli(CliConfig cfg) {
    std::ostringstream out, err;
    const int code = run(cfg, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("enumerate_words small counts") {
    CHECK(enumerate_words(1).size() == 4);
    CHECK(enumerate_words(2).size() == 12);
    // no duplicates and everything cyclically reduced, sorted by degree
    const auto v = enumerate_words(4);
    for (std::size_t i = 1; i < v.size(); ++i)
        CHECK(v[i - 1].total_degree() <= v[i].total_degree());
    for (const auto& cw : v) {
        CHECK(cw.total_degree() >= 1);
        CHECK(cw.total_degree() <= 4);
    }
}

TEST_CASE("bounds command emits the stable JSON schema for braids") {
    CliConfig cfg;
    cfg.command = "bounds";
    cfg.word = "s1^3 s2^-2";
    cfg.boundary = "tr";
    cfg.json = true;
    const Result r = run_cli(cfg);
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    // golden field set
    const std::vector<std::string> fields = {
        "word",         "boundary",     "L",          "lambda_lower", "lambda_upper",
        "module_lower", "module_upper", "exceptional", "nt_class",    "normal_form",
        "theta_word"};
    CHECK(j.size() == fields.size());
    for (const auto& f : fields) CHECK(j.contains(f));
    CHECK(j["word"] == "s1^3 s2^-2");
    CHECK(j["theta_word"] == "a1 a2^-1");
    CHECK(j["exceptional"].is_null());
    CHECK(j["L"].get<double>() == doctest::Approx(2 * std::log(3.0)).epsilon(1e-14));
}

TEST_CASE("bounds command on exceptional braid") {
    CliConfig cfg;
    cfg.command = "bounds";
    cfg.word = "s1^5 d^3";
    cfg.json = true;
    const Result r = run_cli(cfg);
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["exceptional"] == "b = sigma_j^k Delta^l");
    CHECK(j["lambda_upper"] == 0.0);
    CHECK(j["module_upper"].is_null());
}

TEST_CASE("entropy command PASS verdict and values") {
    CliConfig cfg;
    cfg.command = "entropy";
    cfg.pure_word = "a1^-1 a2";
    cfg.json = true;
    const Result r = run_cli(cfg);
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["verdict"] == "PASS");
    CHECK(j["entropy_exact"].get<double>() == doctest::Approx(1.7627471740390861));
    CHECK(j["entropy_lower"].get<double>() == doctest::Approx(0.5493061443340549));
    CHECK(j["entropy_upper"].get<double>() ==
          doctest::Approx(150 * 3.141592653589793 * 2 * std::log(3.0)));
    const std::vector<std::string> fields = {
        "word",         "boundary",      "L",          "lambda_lower",  "lambda_upper",
        "module_lower", "module_upper",  "exceptional", "nt_class",     "entropy_lower",
        "entropy_upper", "entropy_exact", "verdict"};
    CHECK(j.size() == fields.size());
    for (const auto& f : fields) CHECK(j.contains(f));
}

TEST_CASE("enumerate --check exit code and summary") {
    CliConfig cfg;
    cfg.command = "enumerate";
    cfg.max_degree = 4;
    cfg.check = true;
    const Result r = run_cli(cfg);
    CHECK(r.code == 0);
    CHECK(r.out.find("0 failures") != std::string::npos);
}

TEST_CASE("syllables and parse commands") {
    {
        CliConfig cfg;
        cfg.command = "syllables";
        cfg.pure_word = "a2^-1 a1^2 a2^-3 a1^-1 a2^-1 a1^-1 a2 a1^-1";
        cfg.json = true;
        const Result r = run_cli(cfg);
        REQUIRE(r.code == 0);
        const json j = json::parse(r.out);
        REQUIRE(j["syllables"].size() == 6);
        CHECK(j["syllables"][0]["degree"] == 1);
        CHECK(j["syllables"][3]["kind"] == "form2");
        CHECK(j["L"].get<double>() == doctest::Approx(10.037537560656383));
    }
    {
        CliConfig cfg;
        cfg.command = "parse";
        cfg.word = "s1^3   s2^-2";
        const Result r = run_cli(cfg);
        CHECK(r.code == 0);
        CHECK(r.out == "s1^3 s2^-2\n");
    }
}

TEST_CASE("parse errors give exit code 2") {
    CliConfig cfg;
    cfg.command = "bounds";
    cfg.word = "s1^0";
    const Result r = run_cli(cfg);
    CHECK(r.code == 2);
    CHECK(r.err.find("offset") != std::string::npos);
}

TEST_CASE("glue command") {
    CliConfig cfg;
    cfg.command = "glue";
    cfg.pure_word = "a1^2 a2^-2";
    cfg.grid_step = 1.0 / 180;
    cfg.json = true;
    const Result r = run_cli(cfg);
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["pass"] == true);
    CHECK(j["sup_mu"].get<double>() < 0.1712);
    CHECK(j["qc_dilatation"].get<double>() <= 1.414);
}

TEST_CASE("unknown command") {
    CliConfig cfg;
    cfg.command = "frobnicate";
    const Result r = run_cli(cfg);
    CHECK(r.code == 2);
}
