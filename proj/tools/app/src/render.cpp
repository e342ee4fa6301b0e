#include <iomanip>
#include <sstream>

#include "kummer/error.hpp"
#include "kummer_app/documents.hpp"
#include "kummer_app/pipeline.hpp"

namespace kummer::app {

namespace {

Json poly(const IntPolynomial& p) { return polynomial_json(p); }

IntPolynomial poly(const Json& j) { return parse_polynomial(j); }

template <class T>
T get(const Json& j, const char* key) {
    return j.at(key).get<T>();
}

} // namespace

std::string emit_json(const Report& r) {
    Json j;
    j["report_version"] = r.report_version;
    Json input;
    input["mode"] = to_string(r.mode);
    input["source"] = r.source;
    if (r.d) input["d"] = *r.d;
    if (r.oracle) input["oracle"] = *r.oracle;
    input["equivariant"] = r.equivariant;
    j["input"] = input;
    j["label"] = r.label;
    if (r.group_order) j["group_order"] = r.group_order;
    if (r.rank) j["rank"] = r.rank;
    if (r.quotient) j["quotient"] = poly(*r.quotient);
    if (!r.strata.empty()) {
        Json rows = Json::array();
        for (const auto& c : r.strata)
            rows.push_back({{"isotropy_class", c.isotropy_class},
                            {"isotropy_order", c.isotropy_order},
                            {"dimension", c.dimension},
                            {"components", c.components},
                            {"components_upstairs", c.components_upstairs},
                            {"weyl_order", c.weyl_order},
                            {"fiber", poly(c.fiber)},
                            {"open_virtual", poly(c.open_virtual)},
                            {"open_weighted", poly(c.open_weighted)}});
        j["strata"] = rows;
    }
    if (!r.strata_detail.empty()) {
        Json rows = Json::array();
        for (const auto& s : r.strata_detail)
            rows.push_back({{"isotropy_class", s.isotropy_class},
                            {"dimension", s.dimension},
                            {"orbit_size", s.orbit_size},
                            {"stabilizer_order", s.stabilizer_order},
                            {"weyl_order", s.weyl_order},
                            {"deeper", s.deeper},
                            {"equivariant_fiber", s.equivariant_fiber},
                            {"closure_quotient", poly(s.closure_quotient)},
                            {"open_virtual", poly(s.open_virtual)},
                            {"open_weighted", poly(s.open_weighted)}});
        j["strata_detail"] = rows;
    }
    if (r.symbolic) {
        Json s{{"parameter", r.symbolic->parameter},
               {"constant", poly(r.symbolic->constant)},
               {"linear", poly(r.symbolic->linear)}};
        if (r.symbolic->value) s["value"] = *r.symbolic->value;
        j["symbolic"] = s;
    }
    if (r.resolution) j["resolution"] = poly(*r.resolution);
    if (!r.analytic.empty()) {
        Json rows = Json::array();
        for (const auto& a : r.analytic)
            rows.push_back({{"class", a.class_index},
                            {"element_order", a.element_order},
                            {"class_size", a.class_size},
                            {"exponents", a.exponents},
                            {"codimension", a.codimension},
                            {"isolated", a.isolated},
                            {"fixed_points", a.fixed_points}});
        j["analytic"] = rows;
    }
    if (r.reflection_generated) j["reflection_generated"] = *r.reflection_generated;
    if (r.bls) j["bls"] = *r.bls;
    if (!r.constraints.empty()) {
        Json rows = Json::array();
        for (const auto& c : r.constraints) {
            Json sols = Json::array();
            for (const auto& s : c.solutions) {
                Json o = Json::object();
                for (const auto& [k, v] : s) o[k] = v;
                sols.push_back(o);
            }
            rows.push_back({{"label", c.label},
                            {"equations", c.equations},
                            {"feasible", c.feasible},
                            {"solutions", sols},
                            {"witness", c.witness}});
        }
        j["constraints"] = rows;
    }
    Json checks = Json::array();
    for (const auto& c : r.checks)
        checks.push_back({{"name", c.name}, {"passed", c.passed}, {"expected", c.expected}, {"actual", c.actual}});
    j["checks"] = checks;
    j["hypotheses"] = r.hypotheses;
    j["status"] = r.all_passed() ? "pass" : "fail";
    return j.dump(2) + "\n";
}

Report parse_report(const std::string& text) {
    const Json j = Json::parse(text);
    Report r;
    r.report_version = get<int>(j, "report_version");
    if (r.report_version != Report::current_version)
        throw Error(ErrorCode::InvalidInput, "unsupported report_version " + std::to_string(r.report_version));
    const auto& input = j.at("input");
    r.mode = parse_mode(get<std::string>(input, "mode"));
    r.source = get<std::string>(input, "source");
    if (input.contains("d")) r.d = get<unsigned>(input, "d");
    if (input.contains("oracle")) r.oracle = get<std::int64_t>(input, "oracle");
    r.equivariant = get<bool>(input, "equivariant");
    r.label = get<std::string>(j, "label");
    if (j.contains("group_order")) r.group_order = get<std::size_t>(j, "group_order");
    if (j.contains("rank")) r.rank = get<std::size_t>(j, "rank");
    if (j.contains("quotient")) r.quotient = poly(j.at("quotient"));
    if (j.contains("strata"))
        for (const auto& c : j.at("strata"))
            r.strata.push_back({get<std::size_t>(c, "isotropy_class"), get<std::size_t>(c, "isotropy_order"),
                                get<std::size_t>(c, "dimension"), get<std::size_t>(c, "components"),
                                get<std::size_t>(c, "components_upstairs"), get<std::size_t>(c, "weyl_order"),
                                poly(c.at("fiber")), poly(c.at("open_virtual")), poly(c.at("open_weighted"))});
    if (j.contains("strata_detail"))
        for (const auto& s : j.at("strata_detail"))
            r.strata_detail.push_back({get<std::size_t>(s, "isotropy_class"), get<std::size_t>(s, "dimension"),
                                       get<std::size_t>(s, "orbit_size"), get<std::size_t>(s, "stabilizer_order"),
                                       get<std::size_t>(s, "weyl_order"), get<std::size_t>(s, "deeper"),
                                       get<std::string>(s, "equivariant_fiber"), poly(s.at("closure_quotient")),
                                       poly(s.at("open_virtual")), poly(s.at("open_weighted"))});
    if (j.contains("symbolic")) {
        const auto& s = j.at("symbolic");
        SymbolicResult sym{get<std::string>(s, "parameter"), poly(s.at("constant")), poly(s.at("linear")), {}};
        if (s.contains("value")) sym.value = get<std::int64_t>(s, "value");
        r.symbolic = sym;
    }
    if (j.contains("resolution")) r.resolution = poly(j.at("resolution"));
    if (j.contains("analytic"))
        for (const auto& a : j.at("analytic"))
            r.analytic.push_back({get<std::size_t>(a, "class"), get<std::size_t>(a, "element_order"),
                                  get<std::size_t>(a, "class_size"), get<std::string>(a, "exponents"),
                                  get<std::size_t>(a, "codimension"), get<bool>(a, "isolated"),
                                  get<std::int64_t>(a, "fixed_points")});
    if (j.contains("reflection_generated")) r.reflection_generated = get<bool>(j, "reflection_generated");
    if (j.contains("bls")) r.bls = get<std::string>(j, "bls");
    if (j.contains("constraints"))
        for (const auto& c : j.at("constraints")) {
            ConstraintOutcome o{get<std::string>(c, "label"), get<std::string>(c, "equations"),
                                get<bool>(c, "feasible"), {}, get<std::string>(c, "witness")};
            for (const auto& s : c.at("solutions")) {
                std::map<std::string, std::int64_t> sol;
                for (const auto& [k, v] : s.items()) sol[k] = v.get<std::int64_t>();
                o.solutions.push_back(std::move(sol));
            }
            r.constraints.push_back(std::move(o));
        }
    for (const auto& c : j.at("checks"))
        r.checks.push_back({get<std::string>(c, "name"), get<bool>(c, "passed"), get<std::string>(c, "expected"),
                            get<std::string>(c, "actual")});
    r.hypotheses = j.at("hypotheses").get<std::vector<std::string>>();
    return r;
}

std::string render_text(const Report& r) {
    std::ostringstream os;
    os << "kummer report (" << to_string(r.mode) << ")\n";
    os << "  source: " << r.source;
    if (!r.label.empty() && r.label != r.source) os << " [" << r.label << "]";
    os << '\n';
    if (r.group_order) os << "  group order: " << r.group_order << '\n';
    if (r.rank) os << "  rank r: " << r.rank << '\n';
    if (r.d) os << "  d: " << *r.d << '\n';
    if (r.quotient) os << "\nquotient  P_Y(t) = " << r.quotient->to_string() << '\n';

    if (!r.strata.empty()) {
        os << "\nstrata by isotropy class\n";
        os << "  " << std::left << std::setw(7) << "class" << std::setw(5) << "|H|" << std::setw(5) << "dim"
           << std::setw(8) << "comps" << std::setw(6) << "|W|" << std::setw(22) << "fiber" << "Y-stratum  |  X-stratum\n";
        for (const auto& c : r.strata)
            os << "  " << std::setw(7) << c.isotropy_class << std::setw(5) << c.isotropy_order << std::setw(5)
               << c.dimension << std::setw(8) << c.components << std::setw(6) << c.weyl_order << std::setw(22)
               << c.fiber.to_string() << c.open_virtual.to_string() << "  |  " << c.open_weighted.to_string() << '\n';
    }
    if (!r.strata_detail.empty()) {
        os << "\ncomponent orbits\n";
        for (const auto& s : r.strata_detail)
            os << "  class " << s.isotropy_class << ", dim " << s.dimension << ", orbit " << s.orbit_size
               << ", |W_K| " << s.weyl_order << ", deeper " << s.deeper << ", fiber " << s.equivariant_fiber
               << "\n    closure/W_K " << s.closure_quotient.to_string() << ";  open "
               << s.open_virtual.to_string() << ";  weighted " << s.open_weighted.to_string() << '\n';
    }
    if (r.symbolic) {
        ParametricPolynomial p{r.symbolic->constant, r.symbolic->linear};
        os << "\nsymbolic  P_X(t) = " << p.to_string(r.symbolic->parameter.empty() ? "m" : r.symbolic->parameter);
        if (r.symbolic->value) os << "   with " << r.symbolic->parameter << " = " << *r.symbolic->value;
        os << '\n';
    }
    if (r.resolution) os << "\nresolution  P_X(t) = " << r.resolution->to_string() << '\n';

    if (!r.analytic.empty()) {
        os << "\nclasses\n";
        for (const auto& a : r.analytic) {
            os << "  class " << a.class_index << ": order " << a.element_order << ", size " << a.class_size
               << ", exponents " << a.exponents << ", codim " << a.codimension;
            if (a.codimension > 0) {
                if (a.isolated)
                    os << ", " << a.fixed_points << " isolated fixed points";
                else
                    os << ", fixed locus of positive dimension";
            }
            os << '\n';
        }
    }
    if (r.reflection_generated)
        os << "  generated by symplectic reflections: " << (*r.reflection_generated ? "yes" : "no") << '\n';
    if (r.bls) os << "  classification match: " << *r.bls << '\n';
    for (const auto& c : r.constraints) {
        os << "\nconstraint: " << c.label << "\n  " << c.equations << "\n  "
           << (c.feasible ? "feasible" : "infeasible");
        if (c.feasible) {
            os << ":";
            for (const auto& s : c.solutions) {
                os << " {";
                bool first = true;
                for (const auto& [k, v] : s) {
                    os << (first ? "" : ", ") << k << "=" << v;
                    first = false;
                }
                os << "}";
            }
        } else {
            os << ": " << c.witness;
        }
        os << '\n';
    }

    os << "\nchecks\n";
    for (const auto& c : r.checks) {
        os << "  [" << (c.passed ? "pass" : "FAIL") << "] " << c.name;
        if (!c.passed) os << "\n         expected " << c.expected << "\n         actual   " << c.actual;
        os << '\n';
    }
    if (!r.hypotheses.empty()) {
        os << "\nassumed\n";
        for (const auto& h : r.hypotheses) os << "  - " << h << '\n';
    }
    os << "\nstatus: " << (r.all_passed() ? "pass" : "FAIL") << '\n';
    return os.str();
}

} // namespace kummer::app
