#include <doctest.h>

#include "ym/json_io.hpp"

using namespace ym;

TEST_CASE("json: root systems and Levi profiles round-trip") {
    for (GroupSpec g : {GroupSpec{Family::U, 3}, GroupSpec{Family::SOodd, 2}, GroupSpec{Family::SOeven, 3}, GroupSpec{Family::Sp, 2}}) {
        const RootSystem rs = build_root_system(g);
        const Json j = root_system_to_json(rs);
        CHECK(root_system_from_json(Json::parse(j.dump())) == rs);
        for (const auto& I : enumerate_parabolics(g)) {
            const LeviProfile p = levi_profile(g, I);
            CHECK(levi_profile_from_json(Json::parse(levi_profile_to_json(p).dump())) == p);
        }
    }
    /* Rationals travel as exact strings. */
    const Json so5 = root_system_to_json(build_root_system({Family::SOodd, 2}));
    CHECK(so5["fundamental_weights"][1][0] == "1/2");
}

TEST_CASE("json: reports round-trip") {
    const RecursionReport r = verify_recursion({Family::SOodd, 1}, {1}, 2, 20);
    const Json rj = recursion_report_to_json(r);
    CHECK(rj["holds"] == true);
    CHECK(rj["l"] == 2);
    CHECK(recursion_report_from_json(Json::parse(rj.dump())) == r);

    const NonorientablePoint p{Family::SOodd, {1, 2}, {1, 0}, true, 1, 1};
    const ComponentReport c = classify_components({Family::SOodd, 3}, p);
    const Json cj = component_report_to_json(c);
    CHECK(cj["component_count"] == 2);
    CHECK(cj["components"][0]["factors"][1]["kind"] == "twisted-o");
    CHECK(cj["validity"]["l_min"] == 2);
    CHECK(component_report_from_json(Json::parse(cj.dump())) == c);

    try {
        component_report_from_json(Json::parse(R"({"group": {"family": "sp"}})"));
        FAIL("expected ParseError");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ParseError);
    }
}
