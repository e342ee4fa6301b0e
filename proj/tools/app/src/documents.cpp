#include "kummer_app/documents.hpp"

#include <fstream>

#include "kummer/error.hpp"
#include "kummer/groupcore/catalog.hpp"

namespace kummer::app {

namespace {

[[noreturn]] void fail(ErrorCode code, const std::string& message) { throw Error(code, message); }

const Json& require(const Json& doc, const char* key, ErrorCode code) {
    if (!doc.is_object() || !doc.contains(key)) fail(code, std::string("missing field '") + key + "'");
    return doc.at(key);
}

std::int64_t integer(const Json& v, const std::string& what, ErrorCode code) {
    if (!v.is_number_integer()) fail(code, what + " must be an integer");
    return v.get<std::int64_t>();
}

std::string text(const Json& doc, const char* key, const std::string& fallback = {}) {
    if (!doc.contains(key)) return fallback;
    if (!doc.at(key).is_string()) throw Error(ErrorCode::InvalidInput, std::string("'") + key + "' must be a string");
    return doc.at(key).get<std::string>();
}

IntMatrix parse_matrix(const Json& rows, ErrorCode code) {
    if (!rows.is_array() || rows.empty()) fail(code, "matrix must be a non-empty list of rows");
    std::vector<std::vector<std::int64_t>> out;
    for (const auto& row : rows) {
        if (!row.is_array() || row.size() != rows.size()) fail(code, "matrices must be square lists of integer rows");
        std::vector<std::int64_t> r;
        for (const auto& x : row) r.push_back(integer(x, "matrix entry", code));
        out.push_back(std::move(r));
    }
    return IntMatrix::from_rows(out);
}

Element parse_permutation(const Json& p, std::size_t degree) {
    if (!p.is_array() || p.size() != degree)
        fail(ErrorCode::InvalidInput, "permutations must list " + std::to_string(degree) + " images");
    Element e;
    std::vector<bool> seen(degree, false);
    for (const auto& x : p) {
        const auto v = integer(x, "permutation image", ErrorCode::InvalidInput);
        if (v < 0 || static_cast<std::size_t>(v) >= degree || seen[static_cast<std::size_t>(v)])
            fail(ErrorCode::InvalidInput, "not a permutation of 0.." + std::to_string(degree - 1));
        seen[static_cast<std::size_t>(v)] = true;
        e.push_back(v);
    }
    return e;
}

ExponentMultiset parse_exponents(const Json& list) {
    if (!list.is_array()) fail(ErrorCode::InvalidInput, "exponents must be a list");
    std::vector<Rational> out;
    for (const auto& x : list) out.push_back(parse_rational(x));
    return ExponentMultiset(std::move(out));
}

AffineCount parse_count(const Json& v, const std::string& what) {
    if (v.is_number_integer()) return {v.get<std::int64_t>(), 0};
    if (v.is_object()) {
        AffineCount c;
        if (v.contains("constant")) c.constant = integer(v.at("constant"), what, ErrorCode::MalformedLedger);
        if (v.contains("parameter")) c.coefficient = integer(v.at("parameter"), what, ErrorCode::MalformedLedger);
        return c;
    }
    fail(ErrorCode::MalformedLedger, what + " must be an integer or {constant, parameter}");
}

std::vector<ConstraintDocument> parse_constraints(const Json& doc) {
    std::vector<ConstraintDocument> out;
    if (!doc.contains("constraints")) return out;
    if (!doc.at("constraints").is_array()) fail(ErrorCode::InvalidInput, "'constraints' must be a list");
    for (const auto& c : doc.at("constraints")) out.push_back(parse_constraint(c));
    return out;
}

} // namespace

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::InvalidInput, "cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        fail(ErrorCode::InvalidInput, "'" + path + "' is not valid JSON: " + e.what());
    }
}

Rational parse_rational(const Json& value) {
    if (value.is_number_integer()) return Rational(value.get<std::int64_t>());
    if (value.is_array() && value.size() == 2 && value[0].is_number_integer() && value[1].is_number_integer()) {
        const auto den = value[1].get<std::int64_t>();
        if (den == 0) fail(ErrorCode::InvalidInput, "zero denominator");
        return Rational(value[0].get<std::int64_t>(), den);
    }
    fail(ErrorCode::InvalidInput, "expected an integer or a [num, den] pair, got " + value.dump());
}

IntPolynomial parse_polynomial(const Json& value) {
    if (!value.is_array()) fail(ErrorCode::InvalidInput, "polynomials are coefficient lists, lowest degree first");
    std::vector<std::int64_t> c;
    for (const auto& x : value) c.push_back(integer(x, "coefficient", ErrorCode::InvalidInput));
    return IntPolynomial(std::move(c));
}

Json polynomial_json(const IntPolynomial& p) {
    Json out = Json::array();
    for (auto c : p.coefficients()) out.push_back(c);
    return out;
}

IntegralAction parse_group_spec(const Json& doc, std::optional<unsigned> d, std::size_t cap) {
    const auto& mats = require(doc, "matrices", ErrorCode::InvalidInput);
    if (!mats.is_array() || mats.empty()) fail(ErrorCode::InvalidInput, "'matrices' must be a non-empty list");
    std::vector<IntMatrix> gens;
    for (const auto& m : mats) gens.push_back(parse_matrix(m, ErrorCode::InvalidInput));
    for (const auto& g : gens)
        if (g.rows() != gens.front().rows()) fail(ErrorCode::InvalidInput, "generators differ in size");
    unsigned dim = 1;
    if (doc.contains("d")) {
        const auto v = integer(doc.at("d"), "d", ErrorCode::InvalidInput);
        if (v < 1) fail(ErrorCode::InvalidInput, "d must be positive");
        dim = static_cast<unsigned>(v);
    }
    if (d) dim = *d;
    GenerateOptions opts;
    opts.cap = cap;
    if (doc.contains("special")) {
        if (!doc.at("special").is_boolean()) fail(ErrorCode::InvalidInput, "'special' must be a boolean");
        opts.special = doc.at("special").get<bool>();
    }
    return IntegralAction::generate(gens, dim, opts, text(doc, "name", "input"));
}

AnalyticDocument parse_analytic(const Json& doc, std::size_t cap) {
    const auto degree = integer(require(doc, "degree", ErrorCode::InvalidInput), "degree", ErrorCode::InvalidInput);
    if (degree < 1) fail(ErrorCode::InvalidInput, "degree must be positive");
    std::vector<Element> gens;
    for (const auto& p : require(doc, "generators", ErrorCode::InvalidInput))
        gens.push_back(parse_permutation(p, static_cast<std::size_t>(degree)));
    const auto group = AbstractGroup::generate(static_cast<std::size_t>(degree), gens, cap, text(doc, "name", "input"));
    const auto& g = group.group();

    std::vector<std::optional<ExponentMultiset>> per_class(g.conjugacy_classes().size());
    for (const auto& entry : require(doc, "classes", ErrorCode::InvalidInput)) {
        const auto exps = parse_exponents(require(entry, "exponents", ErrorCode::InvalidInput));
        if (entry.contains("representative")) {
            const auto e = g.find(parse_permutation(entry.at("representative"), static_cast<std::size_t>(degree)));
            if (!e) fail(ErrorCode::InvalidInput, "class representative is not in the group");
            per_class[g.class_of(*e)] = exps;
        } else if (entry.contains("element_order")) {
            const auto order = integer(entry.at("element_order"), "element_order", ErrorCode::InvalidInput);
            bool any = false;
            for (std::size_t c = 0; c < per_class.size(); ++c)
                if (static_cast<std::int64_t>(g.element_order(g.conjugacy_classes()[c].front())) == order) {
                    per_class[c] = exps;
                    any = true;
                }
            if (!any) fail(ErrorCode::InvalidInput, "no elements of order " + std::to_string(order));
        } else {
            fail(ErrorCode::InvalidInput, "each class needs 'representative' or 'element_order'");
        }
    }
    std::vector<ExponentMultiset> classes;
    for (std::size_t c = 0; c < per_class.size(); ++c) {
        if (!per_class[c]) fail(ErrorCode::InvalidInput, "no exponents for conjugacy class " + std::to_string(c));
        classes.push_back(*per_class[c]);
    }

    AnalyticDocument out{AnalyticEigenData(group.shared_group(), std::move(classes), group.label()),
                         parse_constraints(doc), {}};
    if (doc.contains("expect")) {
        const auto& e = doc.at("expect");
        if (e.contains("fixed_points_by_order"))
            for (const auto& [k, v] : e.at("fixed_points_by_order").items())
                out.expect.fixed_points_by_order.emplace_back(std::stoul(k),
                                                              integer(v, "fixed point count", ErrorCode::InvalidInput));
        if (e.contains("bls")) out.expect.bls = e.at("bls").get<std::string>();
    }
    return out;
}

LedgerDocument parse_ledger(const Json& doc) {
    if (!doc.is_object()) fail(ErrorCode::MalformedLedger, "a ledger is a JSON object");
    LedgerDocument out;
    try {
        out.ledger.label = text(doc, "label");
        if (doc.contains("parameter")) {
            const auto& p = doc.at("parameter");
            out.ledger.parameter = require(p, "name", ErrorCode::MalformedLedger).get<std::string>();
            if (p.contains("value"))
                out.ledger.value = integer(p.at("value"), "parameter value", ErrorCode::MalformedLedger);
        }
        for (const auto& e : require(doc, "entries", ErrorCode::MalformedLedger)) {
            LedgerEntry entry;
            entry.label = text(e, "label");
            if (e.contains("count")) entry.count = parse_count(e.at("count"), "count of '" + entry.label + "'");
            const auto& base = require(e, "base", ErrorCode::MalformedLedger);
            if (base.is_object()) {
                const auto& m = require(base, "molien", ErrorCode::MalformedLedger);
                MolienBase mb;
                mb.catalog = require(m, "catalog", ErrorCode::MalformedLedger).get<std::string>();
                mb.d = static_cast<unsigned>(integer(require(m, "d", ErrorCode::MalformedLedger), "d",
                                                     ErrorCode::MalformedLedger));
                entry.base = mb;
            } else {
                entry.base = parse_polynomial(base);
            }
            if (e.contains("subtract"))
                for (const auto& s : e.at("subtract"))
                    entry.subtract.push_back({parse_count(require(s, "multiplicity", ErrorCode::MalformedLedger),
                                                          "multiplicity in '" + entry.label + "'"),
                                              parse_polynomial(require(s, "polynomial", ErrorCode::MalformedLedger))});
            if (e.contains("fiber")) entry.fiber = parse_polynomial(e.at("fiber"));
            out.ledger.entries.push_back(std::move(entry));
        }
        if (doc.contains("expect")) {
            const auto& x = doc.at("expect");
            if (x.contains("polynomial")) out.expect.polynomial = parse_polynomial(x.at("polynomial"));
            if (x.contains("constant")) out.expect.constant = parse_polynomial(x.at("constant"));
            if (x.contains("linear")) out.expect.linear = parse_polynomial(x.at("linear"));
        }
    } catch (const Error& e) {
        if (e.code() == ErrorCode::MalformedLedger) throw;
        throw Error(ErrorCode::MalformedLedger, e.what());
    } catch (const Json::exception& e) {
        throw Error(ErrorCode::MalformedLedger, e.what());
    }
    out.constraints = parse_constraints(doc);
    return out;
}

ConstraintDocument parse_constraint(const Json& doc) {
    ConstraintDocument out;
    auto& c = out.constraint;
    c.label = text(doc, "label");
    for (const auto& u : require(doc, "unknowns", ErrorCode::InvalidInput)) {
        CountingUnknown x;
        x.name = require(u, "name", ErrorCode::InvalidInput).get<std::string>();
        if (u.contains("min")) x.min = integer(u.at("min"), "min", ErrorCode::InvalidInput);
        if (u.contains("max")) x.max = integer(u.at("max"), "max", ErrorCode::InvalidInput);
        if (u.contains("power_of"))
            for (const auto& p : u.at("power_of")) x.power_of.push_back(integer(p, "power_of", ErrorCode::InvalidInput));
        c.unknowns.push_back(std::move(x));
    }
    for (const auto& e : require(doc, "equations", ErrorCode::InvalidInput)) {
        CountingEquation eq;
        for (const auto& t : require(e, "terms", ErrorCode::InvalidInput)) {
            CountingTerm term;
            term.coefficient = integer(require(t, "coeff", ErrorCode::InvalidInput), "coeff", ErrorCode::InvalidInput);
            if (t.contains("vars"))
                for (const auto& v : t.at("vars")) term.unknowns.push_back(v.get<std::string>());
            eq.terms.push_back(std::move(term));
        }
        c.equations.push_back(std::move(eq));
    }
    if (doc.contains("expect")) {
        const auto& x = doc.at("expect");
        if (x.contains("feasible")) out.expect.feasible = x.at("feasible").get<bool>();
        if (x.contains("solutions")) {
            std::vector<CountingSolution> sols;
            for (const auto& s : x.at("solutions")) {
                CountingSolution sol;
                for (const auto& [k, v] : s.items()) sol[k] = integer(v, "solution value", ErrorCode::InvalidInput);
                sols.push_back(std::move(sol));
            }
            out.expect.solutions = std::move(sols);
        }
    }
    return out;
}

ConstraintDocument binary_tetrahedral_obstruction() {
    // |Fix(-1)| = 4 (|Fix(M)| - s) + s with |Fix(-1)| = 256, |Fix(M)| = 16.
    ConstraintDocument out;
    out.constraint.label = "isolated points of -1 covered by the four order-6 fixed sets";
    out.constraint.unknowns = {{"s", 0, 256, {}}};
    out.constraint.equations = {{{{-3, {"s"}}, {64 - 256, {}}}}};
    out.expect.feasible = false;
    return out;
}

} // namespace kummer::app
