#include "ym/json_io.hpp"

namespace ym {

namespace {

/* Reader failures surface as ParseError whatever nlohmann throws. */
template <class F>
auto reading(const char* what, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const Error&) {
        throw;
    } catch (const std::exception& e) {
        throw Error(ErrorKind::ParseError, std::string("malformed ") + what + " JSON: " + e.what());
    }
}

BigRat rat_from(const Json& j) {
    BigRat q;
    if (q.set_str(j.get<std::string>(), 10) != 0) throw Error(ErrorKind::ParseError, "bad rational " + j.dump());
    q.canonicalize();
    return q;
}

BigInt int_from(const Json& j) {
    BigInt z;
    if (z.set_str(j.get<std::string>(), 10) != 0) throw Error(ErrorKind::ParseError, "bad integer " + j.dump());
    return z;
}

Json vec_to_json(const RatVec& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(x.get_str());
    return out;
}

RatVec vec_from(const Json& j) {
    RatVec out;
    for (const auto& x : j) out.push_back(rat_from(x));
    return out;
}

Json vecs_to_json(const std::vector<RatVec>& vs) {
    Json out = Json::array();
    for (const auto& v : vs) out.push_back(vec_to_json(v));
    return out;
}

std::vector<RatVec> vecs_from(const Json& j) {
    std::vector<RatVec> out;
    for (const auto& v : j) out.push_back(vec_from(v));
    return out;
}

const char* root_type_name(RootType t) {
    switch (t) {
        case RootType::A: return "A";
        case RootType::B: return "B";
        case RootType::C: return "C";
        case RootType::D: return "D";
    }
    return "A";
}

RootType root_type_from(const std::string& s) {
    if (s == "A") return RootType::A;
    if (s == "B") return RootType::B;
    if (s == "C") return RootType::C;
    if (s == "D") return RootType::D;
    throw Error(ErrorKind::ParseError, "unknown root type " + s);
}

const char* tail_kind_name(TailKind t) {
    switch (t) {
        case TailKind::None: return "none";
        case TailKind::SOodd: return "so-odd";
        case TailKind::SOeven: return "so-even";
        case TailKind::Sp: return "sp";
    }
    return "none";
}

TailKind tail_kind_from(const std::string& s) {
    for (TailKind t : {TailKind::None, TailKind::SOodd, TailKind::SOeven, TailKind::Sp})
        if (s == tail_kind_name(t)) return t;
    throw Error(ErrorKind::ParseError, "unknown tail " + s);
}

const char* point_tail_name(PointTail t) {
    switch (t) {
        case PointTail::None: return "none";
        case PointTail::ZeroBlock: return "zero-block";
        case PointTail::MinusLast: return "minus-last";
    }
    return "none";
}

PointTail point_tail_from(const std::string& s) {
    for (PointTail t : {PointTail::None, PointTail::ZeroBlock, PointTail::MinusLast})
        if (s == point_tail_name(t)) return t;
    throw Error(ErrorKind::ParseError, "unknown point tail " + s);
}

const char* factor_kind_name(FactorKind k) {
    switch (k) {
        case FactorKind::TwistedU: return "twisted-u";
        case FactorKind::TwistedO: return "twisted-o";
        case FactorKind::FlatSp: return "flat-sp";
    }
    return "twisted-u";
}

FactorKind factor_kind_from(const std::string& s) {
    for (FactorKind k : {FactorKind::TwistedU, FactorKind::TwistedO, FactorKind::FlatSp})
        if (s == factor_kind_name(k)) return k;
    throw Error(ErrorKind::ParseError, "unknown factor kind " + s);
}

Json factor_to_json(const TwistedFactor& f) {
    Json params;
    params["n"] = f.n;
    if (f.kind == FactorKind::TwistedU) params["k"] = f.k;
    if (f.kind == FactorKind::TwistedO) {
        params["det"] = f.det;
        params["sign"] = f.sign;
    }
    return {{"kind", factor_kind_name(f.kind)}, {"params", params}};
}

TwistedFactor factor_from(const Json& j) {
    TwistedFactor f;
    f.kind = factor_kind_from(j.at("kind").get<std::string>());
    const Json& p = j.at("params");
    f.n = p.at("n").get<int>();
    if (f.kind == FactorKind::TwistedU) f.k = p.at("k").get<long>();
    if (f.kind == FactorKind::TwistedO) {
        f.det = p.at("det").get<int>();
        f.sign = p.at("sign").get<int>();
    }
    return f;
}

}  // namespace

Json group_to_json(const GroupSpec& g) { return {{"family", family_flag(g.family)}, {"rank", g.n}, {"name", group_name(g)}}; }

GroupSpec group_from_json(const Json& j) {
    return reading("group", [&] { return GroupSpec{parse_family(j.at("family").get<std::string>()), j.at("rank").get<int>()}; });
}

Json root_system_to_json(const RootSystem& rs) {
    return {{"type", root_type_name(rs.type)},
            {"dim", rs.dim},
            {"rank", rs.rank},
            {"simple_roots", vecs_to_json(rs.simple_roots)},
            {"simple_coroots", vecs_to_json(rs.simple_coroots)},
            {"positive_roots", vecs_to_json(rs.positive_roots)},
            {"positive_coroots", vecs_to_json(rs.positive_coroots)},
            {"expansions", rs.expansions},
            {"fundamental_weights", vecs_to_json(rs.fundamental_weights)}};
}

RootSystem root_system_from_json(const Json& j) {
    return reading("root system", [&] {
        RootSystem rs;
        rs.type = root_type_from(j.at("type").get<std::string>());
        rs.dim = j.at("dim").get<int>();
        rs.rank = j.at("rank").get<int>();
        rs.simple_roots = vecs_from(j.at("simple_roots"));
        rs.simple_coroots = vecs_from(j.at("simple_coroots"));
        rs.positive_roots = vecs_from(j.at("positive_roots"));
        rs.positive_coroots = vecs_from(j.at("positive_coroots"));
        rs.expansions = j.at("expansions").get<std::vector<std::vector<long>>>();
        rs.fundamental_weights = vecs_from(j.at("fundamental_weights"));
        return rs;
    });
}

Json levi_profile_to_json(const LeviProfile& p) {
    Json rho = Json::array();
    for (const auto& [alpha, value] : p.rho_pairings) rho.push_back({{"alpha", alpha}, {"value", value.get_str()}});
    return {{"unitary_blocks", p.unitary_blocks},
            {"tail", tail_kind_name(p.tail)},
            {"tail_rank", p.tail_rank},
            {"tail_name", tail_name(p.tail, p.tail_rank)},
            {"cut_set", p.cut_set},
            {"dimU", p.dimU},
            {"center_excess", p.center_excess},
            {"rho_pairings", rho},
            {"betti", {{"degrees", p.betti.degrees}, {"center_count", p.betti.center_count}}}};
}

LeviProfile levi_profile_from_json(const Json& j) {
    return reading("Levi profile", [&] {
        LeviProfile p;
        p.unitary_blocks = j.at("unitary_blocks").get<std::vector<int>>();
        p.tail = tail_kind_from(j.at("tail").get<std::string>());
        p.tail_rank = j.at("tail_rank").get<int>();
        p.cut_set = j.at("cut_set").get<std::vector<int>>();
        p.dimU = j.at("dimU").get<long>();
        p.center_excess = j.at("center_excess").get<int>();
        for (const auto& r : j.at("rho_pairings")) p.rho_pairings.emplace_back(r.at("alpha").get<int>(), rat_from(r.at("value")));
        p.betti.degrees = j.at("betti").at("degrees").get<std::vector<int>>();
        p.betti.center_count = j.at("betti").at("center_count").get<int>();
        return p;
    });
}

Json recursion_report_to_json(const RecursionReport& r) {
    Json strata = Json::array();
    for (const auto& rp : r.strata)
        strata.push_back({{"mu",
                           {{"composition", rp.point.composition},
                            {"labels", rp.point.labels},
                            {"tail", point_tail_name(rp.point.tail)},
                            {"text", render_point(rp.point)}}},
                          {"codim", rp.codim}});
    Json residual = Json::array();
    for (const auto& c : r.residual) residual.push_back(c.get_str());
    return {{"group", group_to_json(r.group)}, {"topclass", r.topclass.k}, {"l", r.genus},   {"degree", r.degree},
            {"holds", r.holds},                {"residual", residual},      {"strata", strata}};
}

RecursionReport recursion_report_from_json(const Json& j) {
    return reading("recursion report", [&] {
        RecursionReport r;
        r.group = group_from_json(j.at("group"));
        r.topclass.k = j.at("topclass").get<long>();
        r.genus = j.at("l").get<long>();
        r.degree = j.at("degree").get<long>();
        r.holds = j.at("holds").get<bool>();
        for (const auto& c : j.at("residual")) r.residual.push_back(int_from(c));
        for (const auto& s : j.at("strata")) {
            const Json& mu = s.at("mu");
            AtiyahBottPoint p{r.group.family, mu.at("composition").get<std::vector<int>>(), mu.at("labels").get<std::vector<long>>(),
                              point_tail_from(mu.at("tail").get<std::string>())};
            r.strata.push_back({std::move(p), s.at("codim").get<long>()});
        }
        return r;
    });
}

Json component_report_to_json(const ComponentReport& r) {
    Json comps = Json::array();
    for (const auto& c : r.components) {
        Json factors = Json::array();
        for (const auto& f : c.factors) factors.push_back(factor_to_json(f));
        comps.push_back({{"w2", c.w2},
                         {"w2_label", c.fixed_by_point ? "fixed_by_point" : w2_label(c)},
                         {"bundle", w2_label(c)},
                         {"factors", factors}});
    }
    const auto& p = r.point;
    return {{"group", group_to_json(r.group)},
            {"point",
             {{"composition", p.composition},
              {"labels", p.labels},
              {"zero_tail", p.zero_tail},
              {"last_sign", p.last_sign}}},
            {"surface_i", p.surface_i},
            {"component_count", r.components.size()},
            {"components", comps},
            {"validity", {{"l_min", r.l_min}, {"notes", r.notes}}}};
}

ComponentReport component_report_from_json(const Json& j) {
    return reading("component report", [&] {
        ComponentReport r;
        r.group = group_from_json(j.at("group"));
        const Json& p = j.at("point");
        r.point = {r.group.family,
                   p.at("composition").get<std::vector<int>>(),
                   p.at("labels").get<std::vector<long>>(),
                   p.at("zero_tail").get<bool>(),
                   p.at("last_sign").get<int>(),
                   j.at("surface_i").get<int>()};
        for (const auto& c : j.at("components")) {
            Component comp;
            comp.w2 = c.at("w2").get<int>();
            comp.fixed_by_point = c.at("w2_label").get<std::string>() == "fixed_by_point";
            for (const auto& f : c.at("factors")) comp.factors.push_back(factor_from(f));
            r.components.push_back(std::move(comp));
        }
        r.l_min = j.at("validity").at("l_min").get<long>();
        r.notes = j.at("validity").at("notes").get<std::vector<std::string>>();
        return r;
    });
}

}  // namespace ym
