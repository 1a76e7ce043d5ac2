#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include "ym/cli.hpp"
#include "ym/json_io.hpp"

using namespace ym;

namespace {

struct Run {
    int status;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int status = run_cli(args, out, err);
    return {status, out.str(), err.str()};
}

}  // namespace

TEST_CASE("cli: poincare and series") {
    const Run latex = run({"poincare", "--group", "sp", "--rank", "1", "--genus", "3", "--format", "latex"});
    CHECK(latex.status == 0);
    CHECK(latex.out.rfind("\\frac{", 0) == 0);

    const Run text = run({"poincare", "--group", "sp", "--rank", "1", "--genus", "3"});
    CHECK(parse_ratfun(text.out.substr(0, text.out.size() - 1)) == sp_flat(1, 3));

    const Run json = run({"poincare", "--group", "so-odd", "--rank", "2", "--w2", "1", "--format", "json"});
    REQUIRE(json.status == 0);
    const Json j = Json::parse(json.out);
    CHECK(j["engine"] == "both");
    CHECK(parse_ratfun(j["series"]["text"].get<std::string>()) == so_odd_flat(2, 2, 1));

    const Run su2 = run({"series", "--group", "su", "--rank", "2", "--genus", "2", "--order", "6"});
    CHECK(su2.status == 0);
    CHECK(su2.out == render_coeffs(series_expand(sun_flat(2, 2), 6)) + "\n");

    const Run expr = run({"series", "--expr", "(1)/(1 - t)", "--order", "3"});
    CHECK(expr.out == "1 1 1 1\n");

    /* Identical requests give identical bytes. */
    CHECK(run({"poincare", "--group", "u", "--rank", "3", "--k", "2"}).out == run({"poincare", "--group", "u", "--rank", "3", "--k", "2"}).out);
}

TEST_CASE("cli: strata and components") {
    const Run s = run({"stratum", "--group", "sp", "--rank", "2", "--composition", "1,1", "--labels", "2,1"});
    CHECK(s.status == 0);
    const Run amb = run({"stratum", "--group", "so-odd", "--rank", "2", "--composition", "2", "--labels", "0", "--tail", "zero-block"});
    CHECK(amb.status == 2);
    CHECK(amb.err.find("AmbiguousComponent") != std::string::npos);

    const Run list = run({"strata-list", "--group", "u", "--rank", "2", "--bound", "4"});
    CHECK(list.out == "codim  point\n0  (2;0)\n3  (1,1;1,-1)\n");

    const Run comps = run({"components", "--group", "sp", "--rank", "2", "--composition", "1,1", "--labels", "2,1"});
    REQUIRE(comps.status == 0);
    const ComponentReport r = component_report_from_json(Json::parse(comps.out));
    CHECK(r.components.size() == 1);
    CHECK(run({"components", "--group", "sp", "--rank", "2", "--composition", "1,1", "--labels", "2,1", "--format", "text"}).out ==
          "M~(l,i;1,2) x M~(l,i;1,1)\n");
    const Run all = run({"components", "--group", "so-odd", "--rank", "1", "--bound", "1"});
    CHECK(Json::parse(all.out).size() == 2);
}

TEST_CASE("cli: verification verbs and exit codes") {
    CHECK(run({"verify-isomorphisms", "--genus", "2"}).status == 0);
    const Run rec = run({"verify-recursion", "--group", "u", "--rank", "2", "--k", "1", "--degree", "20", "--format", "json"});
    CHECK(rec.status == 0);
    CHECK(recursion_report_from_json(Json::parse(rec.out)).holds);
    CHECK(run({"verify-appendix", "--specs", "20", "--samples", "20"}).status == 0);

    CHECK(run({}).status == 2);
    CHECK(run({"poincare", "--group", "nope", "--rank", "1"}).status == 2);
    CHECK(run({"poincare", "--group", "u"}).status == 2);
    CHECK(run({"poincare", "--group", "u", "--rank", "2", "--k", "1", "--w2", "1"}).status == 2);
    CHECK(run({"--help"}).status == 0);

    setenv("YM_TRUNCATION_DEFAULT", "12", 1);
    CHECK(default_truncation() == 12);
    const Run r12 = run({"verify-recursion", "--group", "sp", "--rank", "1", "--format", "json"});
    CHECK(Json::parse(r12.out)["degree"] == 12);
    setenv("YM_TRUNCATION_DEFAULT", "x", 1);
    CHECK(run({"verify-recursion", "--group", "sp", "--rank", "1"}).status == 2);
    unsetenv("YM_TRUNCATION_DEFAULT");
    CHECK(default_truncation() == 40);
}
