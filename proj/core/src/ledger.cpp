#include "kummer/strata/ledger.hpp"

#include <sstream>

#include "kummer/error.hpp"
#include "kummer/groupcore/catalog.hpp"
#include "kummer/repring/molien.hpp"

namespace kummer {

namespace {

IntPolynomial base_polynomial(const LedgerEntry& entry) {
    if (const auto* p = std::get_if<IntPolynomial>(&entry.base)) return *p;
    const auto& m = std::get<MolienBase>(entry.base);
    try {
        return quotient_poincare(catalog_action(m.catalog, m.d));
    } catch (const Error& e) {
        throw Error(ErrorCode::MalformedLedger, "entry '" + entry.label + "': Molien base: " + e.what());
    }
}

bool is_symbolic(const Ledger& ledger) {
    for (const auto& e : ledger.entries) {
        if (e.count.coefficient != 0) return true;
        for (const auto& s : e.subtract)
            if (s.multiplicity.coefficient != 0) return true;
    }
    return false;
}

} // namespace

std::string ParametricPolynomial::to_string(const std::string& parameter) const {
    const int deg = std::max(constant.degree(), linear.degree());
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i <= deg; ++i) {
        const auto a = constant.coeff(static_cast<std::size_t>(i));
        const auto b = linear.coeff(static_cast<std::size_t>(i));
        if (a == 0 && b == 0) continue;
        if (!first) os << " + ";
        first = false;
        std::string c;
        if (b == 0) {
            c = std::to_string(a);
        } else {
            const std::string lin = (b == 1 ? "" : b == -1 ? "-" : std::to_string(b)) + parameter;
            c = a == 0 ? lin : "(" + std::to_string(a) + (b > 0 ? "+" : "") + lin + ")";
        }
        if (i == 0) {
            os << c;
        } else {
            if (c != "1") os << c;
            os << 't';
            if (i > 1) os << '^' << i;
        }
    }
    if (first) os << '0';
    return os.str();
}

ParametricPolynomial assemble_symbolic(const Ledger& ledger) {
    if (is_symbolic(ledger) && ledger.parameter.empty())
        throw Error(ErrorCode::MalformedLedger, "ledger '" + ledger.label + "' has symbolic counts but no parameter");
    ParametricPolynomial total;
    for (const auto& entry : ledger.entries) {
        if (entry.fiber.is_zero())
            throw Error(ErrorCode::MalformedLedger, "entry '" + entry.label + "' has a zero fiber");
        const IntPolynomial base = base_polynomial(entry);
        IntPolynomial p0 = entry.count.constant * base;
        IntPolynomial p1 = entry.count.coefficient * base;
        for (const auto& s : entry.subtract) {
            p0 -= s.multiplicity.constant * s.polynomial;
            p1 -= s.multiplicity.coefficient * s.polynomial;
        }
        total.constant += p0 * entry.fiber;
        total.linear += p1 * entry.fiber;
    }
    return total;
}

IntPolynomial assemble_from_ledger(const Ledger& ledger) {
    const auto symbolic = assemble_symbolic(ledger);
    if (symbolic.linear.is_zero()) return symbolic.constant;
    if (!ledger.value)
        throw Error(ErrorCode::MalformedLedger,
                    "ledger '" + ledger.label + "' needs a value for parameter '" + ledger.parameter + "'");
    return symbolic.at(*ledger.value);
}

} // namespace kummer
