#include "kummer/exactalg/polynomial.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "kummer/error.hpp"
#include "kummer/exactalg/checked.hpp"

namespace kummer {

IntPolynomial::IntPolynomial(std::vector<std::int64_t> coefficients) : coeffs_(std::move(coefficients)) {
    trim();
}

IntPolynomial::IntPolynomial(std::initializer_list<std::int64_t> coefficients) : coeffs_(coefficients) {
    trim();
}

IntPolynomial IntPolynomial::constant(std::int64_t c) { return IntPolynomial(std::vector<std::int64_t>{c}); }

IntPolynomial IntPolynomial::monomial(std::int64_t c, std::size_t degree) {
    std::vector<std::int64_t> v(degree + 1, 0);
    v[degree] = c;
    return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] = checked_add(coeffs_[i], o.coeffs_[i]);
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] = checked_sub(coeffs_[i], o.coeffs_[i]);
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& o) {
    *this = *this * o;
    return *this;
}

IntPolynomial& IntPolynomial::operator*=(std::int64_t s) {
    for (auto& c : coeffs_) c = checked_mul(c, s);
    trim();
    return *this;
}

IntPolynomial IntPolynomial::pow(unsigned e) const {
    IntPolynomial result = constant(1);
    IntPolynomial base = *this;
    while (e > 0) {
        if (e & 1U) result *= base;
        e >>= 1U;
        if (e > 0) base *= base;
    }
    return result;
}

std::int64_t IntPolynomial::evaluate(std::int64_t x) const {
    std::int64_t acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = checked_add(checked_mul(acc, x), *it);
    return acc;
}

IntPolynomial IntPolynomial::divide_exact(std::int64_t d) const {
    if (d == 0) throw Error(ErrorCode::InvalidInput, "division by zero");
    std::vector<std::int64_t> out(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] % d != 0)
            throw Error(ErrorCode::NonIntegralInvariant,
                        "coefficient " + std::to_string(coeffs_[i]) + " of t^" + std::to_string(i) +
                            " not divisible by " + std::to_string(d));
        out[i] = coeffs_[i] / d;
    }
    return IntPolynomial(std::move(out));
}

std::pair<IntPolynomial, IntPolynomial> IntPolynomial::divmod_monic(const IntPolynomial& divisor) const {
    if (divisor.is_zero() || divisor.leading() != 1)
        throw Error(ErrorCode::InvalidInput, "divisor must be monic");
    std::vector<std::int64_t> rem = coeffs_;
    const std::size_t dd = divisor.coeffs_.size() - 1;
    if (rem.size() <= dd) return {IntPolynomial{}, *this};
    std::vector<std::int64_t> quot(rem.size() - dd, 0);
    for (std::size_t k = rem.size(); k-- > dd;) {
        const std::int64_t q = rem[k];
        quot[k - dd] = q;
        if (q == 0) continue;
        for (std::size_t j = 0; j <= dd; ++j)
            rem[k - dd + j] = checked_sub(rem[k - dd + j], checked_mul(q, divisor.coeffs_[j]));
    }
    rem.resize(dd);
    return {IntPolynomial(std::move(quot)), IntPolynomial(std::move(rem))};
}

IntPolynomial IntPolynomial::reflect_sign() const {
    std::vector<std::int64_t> out = coeffs_;
    for (std::size_t i = 1; i < out.size(); i += 2) out[i] = -out[i];
    return IntPolynomial(std::move(out));
}

bool IntPolynomial::is_palindromic() const {
    return std::equal(coeffs_.begin(), coeffs_.end(), coeffs_.rbegin());
}

std::string IntPolynomial::to_string(char variable) const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const std::int64_t c = coeffs_[i];
        if (c == 0) continue;
        const std::int64_t mag = c < 0 ? -c : c;
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0 || mag != 1) os << mag;
        if (i >= 1) os << variable;
        if (i >= 2) os << '^' << i;
    }
    return os.str();
}

IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
IntPolynomial operator-(const IntPolynomial& a) { return IntPolynomial{} - a; }

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    const auto ac = a.coefficients();
    const auto bc = b.coefficients();
    std::vector<std::int64_t> out(ac.size() + bc.size() - 1, 0);
    for (std::size_t i = 0; i < ac.size(); ++i) {
        if (ac[i] == 0) continue;
        for (std::size_t j = 0; j < bc.size(); ++j)
            out[i + j] = checked_add(out[i + j], checked_mul(ac[i], bc[j]));
    }
    return IntPolynomial(std::move(out));
}

IntPolynomial operator*(std::int64_t s, IntPolynomial a) { return a *= s; }

} // namespace kummer
