#include "ym/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <optional>
#include <ostream>

#include "ym/json_io.hpp"
#include "ym/suites.hpp"

namespace ym {

namespace {

struct Options {
    std::string family = "u";
    int rank = 1;
    long genus = 2;
    long k = 0;
    std::optional<long> w2;
    std::optional<long> genus_opt;
    int surface_i = 1;
    std::string format;
    std::string engine = "both";
    std::optional<long> degree;
    long order = 10;
    std::optional<long> bound;
    std::vector<int> composition;
    std::vector<long> labels;
    std::string tail = "none";
    std::string component;
    bool zero_tail = false;
    int last_sign = 1;
    std::string expr;
    std::size_t specs = 200;
    std::size_t samples = 1000;
    unsigned seed = 1;
};

/* A verification verb that did not hold. */
struct Failed {};

GroupSpec group_of(const Options& o) {
    GroupSpec g{parse_family(o.family), o.rank};
    check_rank(g);
    return g;
}

TopClass topclass_of(const Options& o) { return {o.w2 ? *o.w2 : o.k}; }

long degree_of(const Options& o) {
    const long d = o.degree ? *o.degree : default_truncation();
    if (d < 0) throw Error(ErrorKind::TruncationTooSmall, "degree must be nonnegative");
    return d;
}

Json ratfun_json(const RatFun& f) {
    Json num = Json::array(), den = Json::array();
    for (const auto& c : f.num().coeffs()) num.push_back(c.get_str());
    for (const auto& c : f.den().coeffs()) den.push_back(c.get_str());
    return {{"text", render_text(f)}, {"latex", render_latex(f)}, {"num", num}, {"den", den}};
}

void emit_ratfun(std::ostream& out, const std::string& format, const RatFun& f, Json context) {
    if (format == "latex") {
        out << render_latex(f) << "\n";
    } else if (format == "json") {
        context["series"] = ratfun_json(f);
        out << context.dump(2) << "\n";
    } else {
        out << render_text(f) << "\n";
    }
}

RatFun flat_series(const Options& o, std::ostream& err, std::string& engine_used) {
    const FlatSeriesRequest req{group_of(o), topclass_of(o), {o.genus, 0}};
    if (o.engine == "general") {
        engine_used = "general";
        return lr_general(req);
    }
    if (o.engine == "specialized") {
        engine_used = "specialized";
        return specialized_flat(req);
    }
    const RatFun special = specialized_flat(req);
    if (req.group.family == Family::SU) {
        err << "note: the general engine does not cover " << group_name(req.group) << "; using the specialized form\n";
        engine_used = "specialized";
        return special;
    }
    const RatFun general = lr_general(req);
    if (general != special) {
        err << "engines disagree for " << group_name(req.group) << ": general " << render_text(general) << ", specialized "
            << render_text(special) << "\n";
        throw Failed{};
    }
    engine_used = "both";
    return special;
}

Json request_json(const Options& o) { return {{"group", group_to_json(group_of(o))}, {"topclass", topclass_of(o).k}, {"l", o.genus}}; }

PointTail point_tail_of(const std::string& s) {
    if (s == "none") return PointTail::None;
    if (s == "zero-block") return PointTail::ZeroBlock;
    if (s == "minus-last") return PointTail::MinusLast;
    throw Error(ErrorKind::ParseError, "unknown tail " + s);
}

ComponentTag tag_of(const std::string& s) {
    if (s.empty()) return ComponentTag::None;
    if (s == "plus") return ComponentTag::Plus;
    if (s == "minus") return ComponentTag::Minus;
    throw Error(ErrorKind::ParseError, "unknown component " + s);
}

void report_suites(std::ostream& out, const std::string& format, const std::vector<SuiteResult>& suites) {
    bool all = true;
    if (format == "json") {
        Json arr = Json::array();
        for (const auto& s : suites) {
            arr.push_back({{"name", s.name}, {"passed", s.passed}, {"cases", s.cases}, {"detail", s.detail}});
            all = all && s.passed;
        }
        out << Json{{"suites", arr}, {"passed", all}}.dump(2) << "\n";
    } else {
        for (const auto& s : suites) {
            out << (s.passed ? "PASS " : "FAIL ") << s.name << " (" << s.cases << " cases)";
            if (!s.passed) out << ": " << s.detail;
            out << "\n";
            all = all && s.passed;
        }
    }
    if (!all) throw Failed{};
}

void add_group(CLI::App* sub, Options& o) {
    sub->add_option("--group", o.family, "family: u, su, so-odd, so-even, sp, spin-odd, spin-even")->required();
    sub->add_option("--rank", o.rank, "rank parameter n")->required();
}

void add_class(CLI::App* sub, Options& o) {
    auto* k = sub->add_option("--k", o.k, "degree of a U(n) bundle");
    auto* w = sub->add_option("--w2", o.w2, "w2 of an SO bundle");
    k->excludes(w);
}

void add_format(CLI::App* sub, Options& o) {
    sub->add_option("--format", o.format, "text, latex or json")->check(CLI::IsMember({"text", "latex", "json"}));
}

}  // namespace

long default_truncation() {
    const char* env = std::getenv("YM_TRUNCATION_DEFAULT");
    if (env == nullptr || *env == '\0') return 40;
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 0) throw Error(ErrorKind::ParseError, std::string("YM_TRUNCATION_DEFAULT is not a natural number: ") + env);
    return v;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Equivariant Poincare series of Yang-Mills strata for classical groups", "ym"};
    app.require_subcommand(1);

    auto* poincare = app.add_subcommand("poincare", "flat or central series of a group on an orientable surface");
    add_group(poincare, o);
    add_class(poincare, o);
    poincare->add_option("--genus", o.genus, "genus l")->capture_default_str();
    poincare->add_option("--engine", o.engine, "general, specialized or both")->check(CLI::IsMember({"general", "specialized", "both"}));
    add_format(poincare, o);

    auto* stratum = app.add_subcommand("stratum", "series of one Atiyah-Bott stratum");
    add_group(stratum, o);
    stratum->add_option("--genus", o.genus, "genus l")->capture_default_str();
    stratum->add_option("--composition", o.composition, "block sizes, comma separated")->delimiter(',')->required();
    stratum->add_option("--labels", o.labels, "block labels, comma separated")->delimiter(',')->required();
    stratum->add_option("--tail", o.tail, "none, zero-block or minus-last")->check(CLI::IsMember({"none", "zero-block", "minus-last"}));
    stratum->add_option("--component", o.component, "plus or minus, for SO zero blocks")->check(CLI::IsMember({"plus", "minus"}));
    add_format(stratum, o);

    auto* list = app.add_subcommand("strata-list", "Atiyah-Bott points of one type ordered by codimension");
    add_group(list, o);
    add_class(list, o);
    list->add_option("--genus", o.genus, "genus l")->capture_default_str();
    list->add_option("--bound", o.bound, "largest codimension listed (default: half the truncation degree)");
    add_format(list, o);

    auto* comps = app.add_subcommand("components", "components of Yang-Mills types over a nonorientable surface");
    add_group(comps, o);
    comps->add_option("--i", o.surface_i, "surface index, 1 or 2")->check(CLI::Range(1, 2))->capture_default_str();
    comps->add_option("--composition", o.composition, "block sizes, comma separated")->delimiter(',');
    comps->add_option("--labels", o.labels, "block labels, comma separated")->delimiter(',');
    comps->add_flag("--zero-tail", o.zero_tail, "the last block is the zero tail");
    comps->add_option("--last-sign", o.last_sign, "sign of the last coordinate (SO(4m))")->check(CLI::IsMember({-1, 1}));
    comps->add_option("--bound", o.bound, "list every point with |k_j| up to this bound instead of one point");
    add_format(comps, o);

    auto* rec = app.add_subcommand("verify-recursion", "check the stratification recursion to a truncation degree");
    add_group(rec, o);
    add_class(rec, o);
    rec->add_option("--genus", o.genus, "genus l")->capture_default_str();
    rec->add_option("--degree", o.degree, "truncation degree (default 40 or YM_TRUNCATION_DEFAULT)");
    add_format(rec, o);

    auto* iso = app.add_subcommand("verify-isomorphisms", "check the exceptional isomorphisms (genus 1 to 5 by default)");
    iso->add_option("--genus", o.genus_opt, "a single genus");
    add_format(iso, o);

    auto* appendix = app.add_subcommand("verify-appendix", "cone sums, Langlands identities and inversion round trips");
    appendix->add_option("--specs", o.specs, "random cone specs")->capture_default_str();
    appendix->add_option("--samples", o.samples, "Langlands samples per rank")->capture_default_str();
    appendix->add_option("--seed", o.seed, "random seed")->capture_default_str();
    appendix->add_option("--order", o.order, "series order for cone sums")->capture_default_str();
    appendix->add_option("--genus", o.genus, "genus for the round trips")->capture_default_str();
    add_format(appendix, o);

    auto* series = app.add_subcommand("series", "power series coefficients of a flat series or of a given rational function");
    series->add_option("--group", o.family, "family flag");
    series->add_option("--rank", o.rank, "rank parameter n");
    add_class(series, o);
    series->add_option("--genus", o.genus, "genus l")->capture_default_str();
    series->add_option("--engine", o.engine, "general, specialized or both")->check(CLI::IsMember({"general", "specialized", "both"}));
    series->add_option("--expr", o.expr, "rational function in the plain text form (num)/(den)");
    series->add_option("--order", o.order, "highest power of t")->capture_default_str();
    add_format(series, o);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (poincare->parsed()) {
            std::string engine;
            const RatFun f = flat_series(o, err, engine);
            Json ctx = request_json(o);
            ctx["engine"] = engine;
            emit_ratfun(out, o.format, f, ctx);
        } else if (stratum->parsed()) {
            const GroupSpec g = group_of(o);
            const AtiyahBottPoint mu{g.family, o.composition, o.labels, point_tail_of(o.tail)};
            const RatFun f = stratum_series(g, mu, o.genus, tag_of(o.component));
            Json ctx{{"group", group_to_json(g)}, {"l", o.genus}, {"mu", render_point(mu)}, {"codim", codim(g, mu, o.genus)}};
            if (!o.component.empty()) ctx["component"] = o.component;
            emit_ratfun(out, o.format, f, ctx);
        } else if (list->parsed()) {
            const GroupSpec g = group_of(o);
            const long bound = o.bound ? *o.bound : default_truncation() / 2;
            const auto points = enumerate_ab_points(g, topclass_of(o), o.genus, bound);
            if (o.format == "json") {
                Json arr = Json::array();
                for (const auto& rp : points)
                    arr.push_back({{"mu", render_point(rp.point)}, {"composition", rp.point.composition}, {"labels", rp.point.labels}, {"codim", rp.codim}});
                out << Json{{"group", group_to_json(g)}, {"topclass", topclass_of(o).k}, {"l", o.genus}, {"bound", bound}, {"strata", arr}}.dump(2)
                    << "\n";
            } else {
                out << "codim  point\n";
                for (const auto& rp : points) out << rp.codim << "  " << render_point(rp.point) << "\n";
            }
        } else if (comps->parsed()) {
            const GroupSpec g = group_of(o);
            std::vector<ComponentReport> reports;
            if (o.bound) {
                for (const auto& p : enumerate_nonorientable_points(g, o.surface_i, *o.bound)) reports.push_back(classify_components(g, p));
            } else {
                if (o.composition.empty()) throw Error(ErrorKind::InvalidPoint, "give --composition and --labels, or --bound");
                reports.push_back(classify_components(g, {g.family, o.composition, o.labels, o.zero_tail, o.last_sign, o.surface_i}));
            }
            const std::string format = o.format.empty() ? "json" : o.format;
            if (format == "json") {
                Json arr = Json::array();
                for (const auto& r : reports) arr.push_back(component_report_to_json(r));
                out << (o.bound ? arr : arr[0]).dump(2) << "\n";
            } else {
                for (const auto& r : reports) {
                    if (o.bound) out << "# (" << [&] {
                        std::string s;
                        for (std::size_t j = 0; j < r.point.composition.size(); ++j)
                            s += (j ? "," : "") + std::to_string(r.point.composition[j]);
                        s += ";";
                        for (std::size_t j = 0; j < r.point.labels.size(); ++j) s += (j ? "," : "") + std::to_string(r.point.labels[j]);
                        return s + ")" + (r.point.zero_tail ? " zero-tail" : "") + (r.point.last_sign < 0 ? " minus-last" : "");
                    }() << "\n";
                    out << decomposition_render(r);
                }
            }
        } else if (rec->parsed()) {
            const RecursionReport r = verify_recursion(group_of(o), topclass_of(o), o.genus, degree_of(o));
            if (o.format == "json") {
                out << recursion_report_to_json(r).dump(2) << "\n";
            } else {
                out << group_name(r.group) << " class " << r.topclass.k << " l=" << r.genus << " degree " << r.degree << ": "
                    << (r.holds ? "holds" : "FAILS") << " over " << r.strata.size() << " strata\n";
                for (const auto& rp : r.strata) out << "  " << rp.codim << "  " << render_point(rp.point) << "\n";
                if (!r.holds) out << "residual: " << render_coeffs(r.residual) << "\n";
            }
            if (!r.holds) throw Failed{};
        } else if (iso->parsed()) {
            std::vector<SuiteResult> suites;
            if (o.genus_opt) {
                suites.push_back(isomorphism_suite(*o.genus_opt));
            } else {
                for (long l = 1; l <= 5; ++l) suites.push_back(isomorphism_suite(l));
            }
            report_suites(out, o.format, suites);
        } else if (appendix->parsed()) {
            std::vector<SuiteResult> suites{cone_sum_suite(o.specs, static_cast<std::size_t>(o.order), o.seed)};
            for (int rank = 1; rank <= 3; ++rank) suites.push_back(langlands_suite(rank, o.samples, o.seed + static_cast<unsigned>(rank)));
            suites.push_back(round_trip_suite(o.genus, 40));
            report_suites(out, o.format, suites);
        } else if (series->parsed()) {
            RatFun f;
            Json ctx;
            if (!o.expr.empty()) {
                f = parse_ratfun(o.expr);
                ctx["expr"] = o.expr;
            } else {
                if (series->count("--group") == 0 || series->count("--rank") == 0) {
                    err << "usage error: series needs --expr or --group and --rank\n";
                    return 2;
                }
                std::string engine;
                f = flat_series(o, err, engine);
                ctx = request_json(o);
            }
            if (o.order < 0) throw Error(ErrorKind::TruncationTooSmall, "order must be nonnegative");
            const CoeffVector c = series_expand(f, static_cast<std::size_t>(o.order));
            if (o.format == "json") {
                Json arr = Json::array();
                for (const auto& x : c) arr.push_back(x.get_str());
                ctx["order"] = o.order;
                ctx["coefficients"] = arr;
                out << ctx.dump(2) << "\n";
            } else {
                out << render_coeffs(c) << "\n";
            }
        }
    } catch (const Failed&) {
        return 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

}  // namespace ym
