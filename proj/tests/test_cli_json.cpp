#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>

#include "latzeta/golden.hpp"
#include "latzeta/json_io.hpp"

using namespace latzeta;

TEST_CASE("constant expression JSON round trip over the golden table") {
    for (const std::string& key : golden_value_keys()) {
        ConstantExpression e = golden_value(key);
        ConstantExpression back = constant_expression_from_json(to_json(e));
        CHECK(back.terms == e.terms);
    }
}

TEST_CASE("shifted combination JSON round trip") {
    for (const char* key : {"so6_all2_relation", "lam1_all2_relation", "pu4_all2_relation"}) {
        ShiftedCombination c = golden_relation(key);
        ShiftedCombination back = shifted_combination_from_json(to_json(c));
        CHECK(back == c);
    }
}

TEST_CASE("schema shapes match the documented encodings") {
    // pi^2/6 -> {"terms":[{"coeff":{"re":"1/6","im":"0"},"pi_pow":2,"factors":[]}]}
    ConstMonomial m;
    m.pi_pow = 2;
    json j = to_json(ConstantExpression::monomial(Gaussian(rational_of(1, 6)), m));
    REQUIRE(j.at("terms").size() == 1);
    CHECK(j["terms"][0]["coeff"]["re"] == "1/6");
    CHECK(j["terms"][0]["coeff"]["im"] == "0");
    CHECK(j["terms"][0]["pi_pow"] == 2);
    CHECK(j["terms"][0]["factors"].empty());

    // (2u - 1) zeta(s): one term, family zeta, shift 0, two coefficient monomials
    SymbolicCoefficient c;
    c.add_term(0, 1, Gaussian(Rational(2)));
    c.add_term(0, 0, Gaussian(-1));
    json k = to_json(ShiftedCombination::single(Family::Zeta, 0, c));
    REQUIRE(k.at("terms").size() == 1);
    CHECK(k["terms"][0]["family"] == "zeta");
    CHECK(k["terms"][0]["shift"] == 0);
    CHECK(k["terms"][0]["coeff"].size() == 2);
}

TEST_CASE("report document carries the required fields") {
    json doc = make_report("eval", json{{"tuple", "2,2,2,2,2,2"}}, json::object(), "1e-12", 42);
    for (const char* field : {"version", "command", "inputs", "result", "error_bound",
                              "duration_ms"})
        CHECK(doc.contains(field));
}

namespace {

int run_cli(const std::string& args) {
    std::string cmd = "./latzeta " + args + " > /dev/null 2>&1";
    int rc = std::system(cmd.c_str());
    return WEXITSTATUS(rc);
}

} // namespace

TEST_CASE("command line driver") {
    if (!std::ifstream("./latzeta").good()) {
        MESSAGE("latzeta binary not next to the test; skipping CLI checks");
        return;
    }
    CHECK(run_cli("eval --tuple 2,2,2,2,2,2 --lattice Q --twist zero --cutoff 64 "
                  "--json cli_eval.json") == 0);
    {
        std::ifstream in("cli_eval.json");
        REQUIRE(in.good());
        json doc;
        in >> doc;
        CHECK(doc["command"] == "eval");
        CHECK(doc["result"]["golden"]["match"] == true);
        CHECK(doc["result"]["value"]["re"].is_string());
    }
    CHECK(run_cli("verify --theorem PU4 --p 2 --q 2 --a 2 --b 2 --c 2 --s 2 --cutoff 64 "
                  "--tol 1e-6") == 0);
    CHECK(run_cli("derive --family pnew --k 1 --target A3") == 0);
    CHECK(run_cli("relation --theorem SO6") == 0);
    // usage errors exit with 2
    CHECK(run_cli("eval --tuple 2,2") == 2);
    CHECK(run_cli("eval --no-such-flag 1") == 2);
    CHECK(run_cli("derive --family pnew --k 1 --target NOPE") == 2);
}
