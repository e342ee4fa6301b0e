#include "kummer/exactalg/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "kummer/error.hpp"
#include "kummer/exactalg/checked.hpp"

namespace kummer {

IntPolynomial char_poly(const IntMatrix& m) {
    if (!m.is_square()) throw Error(ErrorCode::InvalidInput, "char_poly of non-square matrix");
    const std::size_t n = m.rows();
    // c[n] = 1; M_1 = I; c_{n-k} = -tr(A M_k)/k; M_{k+1} = A M_k + c_{n-k} I
    std::vector<std::int64_t> c(n + 1, 0);
    c[n] = 1;
    IntMatrix mk = IntMatrix::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        const IntMatrix amk = m * mk;
        const std::int64_t tr = amk.trace();
        if (tr % static_cast<std::int64_t>(k) != 0)
            throw Error(ErrorCode::Overflow, "inexact Faddeev-LeVerrier step");
        c[n - k] = -tr / static_cast<std::int64_t>(k);
        mk = amk;
        for (std::size_t i = 0; i < n; ++i) mk(i, i) = checked_add(mk(i, i), c[n - k]);
    }
    return IntPolynomial(std::move(c));
}

IntPolynomial det_one_plus_t(const IntMatrix& m) {
    const IntPolynomial chi = char_poly(m);
    const std::size_t n = m.rows();
    std::vector<std::int64_t> out(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        const std::int64_t c = chi.coeff(n - k);
        out[k] = (k % 2 == 0) ? c : -c;
    }
    return IntPolynomial(std::move(out));
}

unsigned euler_phi(unsigned k) {
    unsigned result = k;
    unsigned n = k;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

const IntPolynomial& cyclotomic_polynomial(unsigned k) {
    if (k == 0) throw Error(ErrorCode::InvalidInput, "cyclotomic index must be positive");
    static std::mutex mutex;
    static std::map<unsigned, IntPolynomial> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(k); it != cache.end()) return it->second;
    }
    // Phi_k = (x^k - 1) / prod_{d | k, d < k} Phi_d
    IntPolynomial p = IntPolynomial::monomial(1, k) - IntPolynomial::constant(1);
    for (unsigned d = 1; d < k; ++d) {
        if (k % d != 0) continue;
        auto [q, r] = p.divmod_monic(cyclotomic_polynomial(d));
        p = std::move(q);
    }
    std::lock_guard lock(mutex);
    return cache.emplace(k, std::move(p)).first->second;
}

std::vector<CyclotomicFactor> cyclotomic_factor(const IntPolynomial& p) {
    if (p.is_zero() || p.leading() != 1)
        throw Error(ErrorCode::NotProductOfCyclotomics, "polynomial is not monic: " + p.to_string('x'));
    std::vector<CyclotomicFactor> out;
    IntPolynomial rest = p;
    const unsigned n = static_cast<unsigned>(p.degree());
    // phi(k) >= sqrt(k/2), so every admissible k satisfies k <= 2 n^2.
    const unsigned bound = std::max(2U, 2U * n * n);
    for (unsigned k = 1; k <= bound && rest.degree() > 0; ++k) {
        if (euler_phi(k) > static_cast<unsigned>(rest.degree())) continue;
        const IntPolynomial& phi = cyclotomic_polynomial(k);
        unsigned mult = 0;
        while (rest.degree() >= phi.degree()) {
            auto [q, r] = rest.divmod_monic(phi);
            if (!r.is_zero()) break;
            rest = std::move(q);
            ++mult;
        }
        if (mult > 0) out.push_back({k, mult});
    }
    if (rest != IntPolynomial::constant(1))
        throw Error(ErrorCode::NotProductOfCyclotomics,
                    p.to_string('x') + " has a non-cyclotomic factor " + rest.to_string('x'));
    return out;
}

ExponentMultiset::ExponentMultiset(std::vector<Rational> entries) : entries_(std::move(entries)) {
    for (auto& e : entries_) e = frac(e);
    std::sort(entries_.begin(), entries_.end());
}

ExponentMultiset ExponentMultiset::from_factors(const std::vector<CyclotomicFactor>& factors) {
    std::vector<Rational> entries;
    for (const auto& f : factors)
        for (unsigned rep = 0; rep < f.multiplicity; ++rep)
            for (unsigned j = 0; j < f.order; ++j)
                if (std::gcd(j, f.order) == 1) entries.emplace_back(j, f.order);
    return ExponentMultiset(std::move(entries));
}

std::int64_t ExponentMultiset::order() const {
    std::int64_t l = 1;
    for (const auto& e : entries_) l = std::lcm(l, e.denominator());
    return l;
}

std::size_t ExponentMultiset::zero_count() const {
    return static_cast<std::size_t>(std::count(entries_.begin(), entries_.end(), Rational(0)));
}

Rational ExponentMultiset::sum() const {
    Rational s(0);
    for (const auto& e : entries_) s += e;
    return s;
}

ExponentMultiset ExponentMultiset::conjugate() const {
    std::vector<Rational> out;
    out.reserve(entries_.size());
    for (const auto& e : entries_) out.push_back(frac(-e));
    return ExponentMultiset(std::move(out));
}

ExponentMultiset ExponentMultiset::operator+(const ExponentMultiset& o) const {
    std::vector<Rational> out = entries_;
    out.insert(out.end(), o.entries_.begin(), o.entries_.end());
    return ExponentMultiset(std::move(out));
}

ExponentMultiset ExponentMultiset::repeated(unsigned copies) const {
    std::vector<Rational> out;
    out.reserve(entries_.size() * copies);
    for (unsigned c = 0; c < copies; ++c) out.insert(out.end(), entries_.begin(), entries_.end());
    return ExponentMultiset(std::move(out));
}

std::vector<CyclotomicFactor> ExponentMultiset::factors() const {
    std::map<std::int64_t, std::map<std::int64_t, unsigned>> by_order;
    for (const auto& e : entries_) ++by_order[e.denominator()][e.numerator()];
    std::vector<CyclotomicFactor> out;
    for (const auto& [k, nums] : by_order) {
        const unsigned phi = euler_phi(static_cast<unsigned>(k));
        if (nums.size() != phi)
            throw Error(ErrorCode::ShapeMismatch, "exponents of order " + std::to_string(k) +
                                                      " are not closed under the Galois action");
        const unsigned mult = nums.begin()->second;
        for (const auto& [num, m] : nums)
            if (m != mult)
                throw Error(ErrorCode::ShapeMismatch, "unequal multiplicities among primitive " +
                                                          std::to_string(k) + "-th roots");
        out.push_back({static_cast<unsigned>(k), mult});
    }
    return out;
}

bool ExponentMultiset::is_galois_closed() const {
    try {
        (void)factors();
        return true;
    } catch (const Error&) {
        return false;
    }
}

std::string ExponentMultiset::to_string() const {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i) os << ", ";
        os << kummer::to_string(entries_[i]);
    }
    os << '}';
    return os.str();
}

ExponentMultiset exponent_multiset(const IntMatrix& m) {
    return ExponentMultiset::from_factors(cyclotomic_factor(char_poly(m)));
}

Rational age(const ExponentMultiset& e, unsigned copies) {
    return e.sum() * Rational(static_cast<std::int64_t>(copies));
}

} // namespace kummer
