#include "kummer/mckay/fiber.hpp"

#include <sstream>

#include "kummer/error.hpp"
#include "kummer/exactalg/cyclotomic.hpp"

namespace kummer {

Rational element_age(const IntegralAction& action, std::size_t element) {
    return age(exponent_multiset(action.matrix(element)), action.d());
}

unsigned integral_age(const IntegralAction& action, std::size_t element) {
    const Rational a = element_age(action, element);
    if (!is_integer(a))
        throw Error(ErrorCode::NonIntegerAge, "element " + action.matrix(element).to_string() + " has age " +
                                                  kummer::to_string(a) + "; the transversal action is not Gorenstein");
    return static_cast<unsigned>(a.numerator());
}

FiberPolynomial fiber_poincare(const IntegralAction& action, const Subgroup& h) {
    IntPolynomial p;
    for (const auto& cls : action.group().classes_within(h))
        p += IntPolynomial::monomial(1, 2 * integral_age(action, cls.front()));
    return {p, std::nullopt};
}

IntPolynomial fiber_trace(const IntegralAction& action, const WeylClassAction& classes, std::size_t element) {
    IntPolynomial p;
    for (std::size_t c = 0; c < classes.h_classes.size(); ++c)
        if (classes.image(action.group(), element, c) == c)
            p += IntPolynomial::monomial(1, 2 * integral_age(action, classes.h_classes[c].front()));
    return p;
}

FiberPolynomial fiber_poincare_equivariant(const IntegralAction& action, const Subgroup& h, const Subgroup& n) {
    const auto classes = weyl_action_on_classes(action.group(), h, n);
    const auto weyl = quotient_group(action.group(), n, h);
    auto equivariant = EquivariantPolynomial::from_elements(
        weyl.group, [&](std::size_t w) { return fiber_trace(action, classes, weyl.lift[w]); });
    FiberPolynomial out = fiber_poincare(action, h);
    out.equivariant = std::move(equivariant);
    return out;
}

std::string describe_equivariant(const EquivariantPolynomial& p) {
    std::ostringstream os;
    const auto& classes = p.group().conjugacy_classes();
    if (p.group().order() == 2) {
        // Decompose each coefficient into 1 and the sign character e.
        const int deg = p.degree();
        bool first = true;
        for (int i = 0; i <= deg; ++i) {
            const auto a = p.at_class(0).coeff(static_cast<std::size_t>(i));
            const auto b = p.at_class(1).coeff(static_cast<std::size_t>(i));
            const auto trivial = (a + b) / 2;
            const auto sign = (a - b) / 2;
            if (trivial == 0 && sign == 0) continue;
            if (!first) os << " + ";
            first = false;
            std::string coeff;
            if (sign == 0) {
                coeff = std::to_string(trivial);
            } else if (trivial == 0) {
                coeff = (sign == 1 ? "" : std::to_string(sign)) + "e";
            } else {
                coeff = "(" + std::to_string(trivial) + "+" + (sign == 1 ? "" : std::to_string(sign)) + "e)";
            }
            if (i == 0) {
                os << coeff;
            } else {
                if (coeff != "1") os << coeff;
                os << 't';
                if (i > 1) os << '^' << i;
            }
        }
        if (first) os << '0';
        return os.str();
    }
    os << '{';
    for (std::size_t c = 0; c < classes.size(); ++c)
        os << (c ? "; " : "") << "class " << c << ": " << p.at_class(c).to_string();
    os << '}';
    return os.str();
}

} // namespace kummer
