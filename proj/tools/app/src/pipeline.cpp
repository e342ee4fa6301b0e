#include "kummer_app/pipeline.hpp"

#include <algorithm>
#include <sstream>

#include "kummer/error.hpp"
#include "kummer/exactalg/smith.hpp"
#include "kummer/groupcore/catalog.hpp"
#include "kummer/repring/molien.hpp"
#include "kummer/strata/strata.hpp"
#include "kummer/symcheck/symplectic.hpp"
#include "kummer/toruslat/fixed_locus.hpp"
#include "kummer_app/documents.hpp"

namespace kummer::app {

namespace {

std::string join(const std::vector<std::int64_t>& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + std::to_string(v[i]);
    return out + "]";
}

Check compare(std::string name, const IntPolynomial& expected, const IntPolynomial& actual) {
    return {std::move(name), expected == actual, expected.to_string(), actual.to_string()};
}

Check compare(std::string name, std::int64_t expected, std::int64_t actual) {
    return {std::move(name), expected == actual, std::to_string(expected), std::to_string(actual)};
}

/// Shape checks every assembled resolution polynomial must pass.
void shape_checks(Report& report, const IntPolynomial& p, std::optional<int> degree) {
    report.checks.push_back({"palindromic", p.is_palindromic(), "palindromic", p.to_string()});
    report.checks.push_back(compare("constant term", 1, p.coeff(0)));
    report.checks.push_back(compare("t^1 coefficient", 0, p.coeff(1)));
    report.checks.push_back(compare("leading coefficient", 1, p.leading()));
    if (degree) report.checks.push_back(compare("degree", *degree, p.degree()));
}

ConstraintOutcome solve(const ConstraintDocument& doc, Report& report, std::int64_t budget) {
    const auto result = counting_feasibility(doc.constraint, budget);
    ConstraintOutcome out;
    out.label = doc.constraint.label;
    for (std::size_t i = 0; i < doc.constraint.equations.size(); ++i)
        out.equations += (i ? "; " : "") + describe_equation(doc.constraint.equations[i]);
    out.feasible = result.feasible;
    out.solutions = result.solutions;
    out.witness = result.witness;
    const std::string tag = "constraint '" + out.label + "'";
    if (doc.expect.feasible)
        report.checks.push_back({tag + " feasibility", *doc.expect.feasible == result.feasible,
                                 *doc.expect.feasible ? "feasible" : "infeasible",
                                 result.feasible ? "feasible" : "infeasible"});
    if (doc.expect.solutions) {
        auto show = [](const std::vector<CountingSolution>& sols) {
            std::string s;
            for (const auto& sol : sols) {
                s += s.empty() ? "{" : " {";
                bool first = true;
                for (const auto& [k, v] : sol) {
                    s += (first ? "" : ", ") + k + "=" + std::to_string(v);
                    first = false;
                }
                s += "}";
            }
            return s.empty() ? std::string("none") : s;
        };
        auto expected = *doc.expect.solutions;
        auto actual = result.solutions;
        std::sort(expected.begin(), expected.end());
        std::sort(actual.begin(), actual.end());
        report.checks.push_back({tag + " solutions", expected == actual, show(expected), show(actual)});
    }
    return out;
}

void analytic_section(Report& report, const AnalyticEigenData& data) {
    const auto& g = data.group();
    for (std::size_t c = 0; c < g.conjugacy_classes().size(); ++c) {
        AnalyticRow row;
        row.class_index = c;
        row.element_order = g.element_order(g.conjugacy_classes()[c].front());
        row.class_size = g.conjugacy_classes()[c].size();
        row.exponents = data.at_class(c).to_string();
        const auto count = lefschetz_count(data, c);
        row.codimension = data.dimension() - data.at_class(c).zero_count();
        row.isolated = count.isolated;
        row.fixed_points = count.count;
        report.analytic.push_back(std::move(row));
    }
    report.reflection_generated = symplectic_reflection_generated(data).generated;
    try {
        report.bls = bls_classify(data).to_string();
    } catch (const Error& e) {
        if (e.code() != ErrorCode::ShapeMismatch) throw;
        report.bls = "not of the form V + V*";
    }
}

void run_integral(const JobSpec& job, Report& report) {
    const IntegralAction action = job.catalog.empty()
                                      ? parse_group_spec(read_json_file(job.input), job.d, job.max_group_order)
                                      : catalog_action(job.catalog, job.d, job.max_group_order);
    report.label = action.label();
    report.d = action.d();
    report.group_order = action.order();
    report.rank = action.rank();

    const auto quotient = quotient_poincare(action);
    const auto strata = stratify(action);
    report.quotient = quotient;
    report.resolution = strata.resolution;
    for (const auto& c : strata.classes)
        report.strata.push_back({c.isotropy_class, c.isotropy_order, c.dimension, c.components_downstairs,
                                 c.components_upstairs, c.weyl_order, c.fiber, c.open_virtual, c.open_weighted});
    if (job.equivariant)
        for (const auto& s : strata.strata)
            report.strata_detail.push_back({s.isotropy_class, s.dimension(), s.orbit_size, s.stabilizer.order(),
                                            s.weyl.lift.size(), s.deeper.size(),
                                            describe_equivariant(*s.fiber.equivariant), s.closure_quotient,
                                            s.open_virtual, s.open_weighted});

    shape_checks(report, strata.resolution, static_cast<int>(2 * action.rank() * action.d()));
    report.checks.push_back(compare("partition: open strata sum to the quotient", quotient, strata.quotient));
    report.checks.push_back(compare("orbit path equals full-stabilizer path", strata.resolution,
                                    strata.resolution_frobenius));
    report.checks.push_back(compare("Euler number: P_X(-1) equals the orbifold Euler number",
                                    orbifold_euler(action), strata.resolution.evaluate(-1)));

    if (job.oracle) {
        const auto n = *job.oracle;
        const auto counts = torsion_oracle(action, n, job.max_enumeration);
        std::vector<std::int64_t> predicted;
        for (std::size_t g = 0; g < action.order(); ++g) {
            // Solutions of (I - g) x = 0 mod N from the Smith divisors.
            const auto divisors = smith_normal_form(IntMatrix::identity(action.rank()) - action.matrix(g)).divisors();
            std::int64_t count = 1;
            for (std::size_t i = 0; i < action.rank(); ++i) {
                const std::int64_t di = i < divisors.size() ? divisors[i] : 0;
                count *= std::gcd(di, n);
            }
            std::int64_t power = 1;
            for (unsigned k = 0; k < 2 * action.d(); ++k) power *= count;
            predicted.push_back(power);
        }
        report.checks.push_back({"torsion oracle at N=" + std::to_string(n), predicted == counts, join(predicted),
                                 join(counts)});
    }

    const auto data = AnalyticEigenData::from_integral(action);
    for (std::size_t c = 0; c < action.group().conjugacy_classes().size(); ++c) {
        const auto rep = action.group().conjugacy_classes()[c].front();
        const auto count = lefschetz_count(data, c);
        if (!count.isolated) continue;
        report.checks.push_back(compare("Lefschetz count of class " + std::to_string(c) + " equals |det(I - g)|^{2d}",
                                        isolated_count(action, rep), count.count));
    }
    report.hypotheses = {
        "the resolution is locally a product along each stratum",
        "each transversal quotient singularity has a crepant resolution obeying the McKay correspondence",
    };
}

void run_analytic(const JobSpec& job, Report& report) {
    std::optional<AnalyticDocument> doc;
    if (!job.catalog.empty() && is_analytic_entry(job.catalog)) {
        doc = AnalyticDocument{AnalyticEigenData::binary_tetrahedral(), {binary_tetrahedral_obstruction()}, {}};
        doc->expect.fixed_points_by_order = {{2, 256}, {6, 16}};
        doc->expect.bls = "BinaryTetrahedral";
    } else if (!job.catalog.empty()) {
        const auto action = catalog_action(job.catalog, job.d, job.max_group_order);
        doc = AnalyticDocument{AnalyticEigenData::from_integral(action), {}, {}};
        report.d = action.d();
    } else {
        doc = parse_analytic(read_json_file(job.input), job.max_group_order);
    }
    const auto& data = doc->data;
    report.label = data.label();
    report.group_order = data.group().order();
    analytic_section(report, data);

    for (const auto& [order, expected] : doc->expect.fixed_points_by_order)
        for (const auto& row : report.analytic)
            if (row.element_order == order)
                report.checks.push_back(compare("fixed points of class " + std::to_string(row.class_index) +
                                                    " (order " + std::to_string(order) + ")",
                                                expected, row.isolated ? row.fixed_points : -1));
    if (doc->expect.bls)
        report.checks.push_back({"symplectic classification", *doc->expect.bls == *report.bls, *doc->expect.bls,
                                 *report.bls});
    for (const auto& row : report.analytic) {
        if (!row.isolated || data.dimension() % 2 != 0) continue;
        std::int64_t root = 0;
        while ((root + 1) * (root + 1) <= row.fixed_points) ++root;
        report.checks.push_back({"fixed-point count of class " + std::to_string(row.class_index) + " is a square",
                                 root * root == row.fixed_points, "a perfect square",
                                 std::to_string(row.fixed_points)});
    }
    for (const auto& c : doc->constraints) report.constraints.push_back(solve(c, report, job.max_enumeration));
}

void run_ledger(const JobSpec& job, Report& report) {
    if (job.input.empty()) throw Error(ErrorCode::InvalidInput, "ledger mode reads --input");
    const auto doc = parse_ledger(read_json_file(job.input));
    report.label = doc.ledger.label;
    const auto symbolic = assemble_symbolic(doc.ledger);
    report.symbolic = SymbolicResult{doc.ledger.parameter, symbolic.constant, symbolic.linear, doc.ledger.value};
    if (doc.expect.constant) report.checks.push_back(compare("symbolic constant part", *doc.expect.constant, symbolic.constant));
    if (doc.expect.linear) report.checks.push_back(compare("symbolic linear part", *doc.expect.linear, symbolic.linear));
    for (const auto& c : doc.constraints) {
        report.constraints.push_back(solve(c, report, job.max_enumeration));
        // A constraint on the ledger parameter must single out the value used.
        const auto& out = report.constraints.back();
        if (doc.ledger.value && !doc.ledger.parameter.empty() && !out.solutions.empty() &&
            out.solutions.front().contains(doc.ledger.parameter)) {
            bool all_match = true;
            for (const auto& s : out.solutions) all_match = all_match && s.at(doc.ledger.parameter) == *doc.ledger.value;
            report.checks.push_back({"constraint '" + out.label + "' forces " + doc.ledger.parameter + "=" +
                                         std::to_string(*doc.ledger.value),
                                     all_match, std::to_string(*doc.ledger.value), out.equations});
        }
    }
    const bool needs_value = !symbolic.linear.is_zero() && !doc.ledger.value;
    if (!needs_value) {
        const auto p = assemble_from_ledger(doc.ledger);
        report.resolution = p;
        if (!p.is_zero()) shape_checks(report, p, std::nullopt);
        if (doc.expect.polynomial) report.checks.push_back(compare("resolution polynomial", *doc.expect.polynomial, p));
    }
    report.hypotheses = {
        "stratum counts and fibers are supplied by hand in the ledger",
        "the resolution is locally a product along each stratum",
        "each transversal quotient singularity has a crepant resolution obeying the McKay correspondence",
    };
}

} // namespace

std::string to_string(Mode mode) {
    switch (mode) {
    case Mode::Integral: return "integral";
    case Mode::Analytic: return "analytic";
    case Mode::Ledger: return "ledger";
    }
    return "integral";
}

Mode parse_mode(const std::string& text) {
    if (text == "integral") return Mode::Integral;
    if (text == "analytic") return Mode::Analytic;
    if (text == "ledger") return Mode::Ledger;
    throw Error(ErrorCode::InvalidInput, "unknown mode '" + text + "' (integral, analytic, ledger)");
}

bool Report::all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

Report run(const JobSpec& job) {
    if (job.catalog.empty() == job.input.empty())
        throw Error(ErrorCode::InvalidInput, "give exactly one of --catalog and --input");
    if (job.oracle && *job.oracle < 1) throw Error(ErrorCode::InvalidInput, "--oracle needs N >= 1");
    if (job.d && *job.d < 1) throw Error(ErrorCode::InvalidInput, "--d must be positive");
    Report report;
    report.mode = job.mode;
    report.source = job.catalog.empty() ? job.input : job.catalog;
    report.oracle = job.oracle;
    report.equivariant = job.equivariant;
    switch (job.mode) {
    case Mode::Integral: run_integral(job, report); break;
    case Mode::Analytic: run_analytic(job, report); break;
    case Mode::Ledger: run_ledger(job, report); break;
    }
    return report;
}

int exit_code(const Report& report) { return report.all_passed() ? 0 : 1; }

} // namespace kummer::app
