#include "kummer/toruslat/subtorus.hpp"

#include <algorithm>
#include <sstream>

#include "kummer/error.hpp"
#include "kummer/exactalg/smith.hpp"

namespace kummer {

namespace {

std::vector<Rational> frac_all(std::vector<Rational> v) {
    for (auto& x : v) x = frac(x);
    return v;
}

// Point on {x : P x = c} for P with trivial Smith divisors beyond its rank.
std::vector<Rational> particular_point(const IntMatrix& p, std::span<const Rational> c, std::size_t r) {
    std::vector<Rational> x(r, Rational(0));
    if (p.rows() == 0) return x;
    const auto snf = smith_normal_form(p);
    const auto uc = multiply(snf.U, c);
    std::vector<Rational> y(r, Rational(0));
    for (std::size_t i = 0; i < snf.rank(); ++i) y[i] = uc[i] / Rational(snf.D(i, i));
    return frac_all(multiply(snf.V, std::span<const Rational>(y)));
}

} // namespace

TorusCoset TorusCoset::whole(std::size_t r) {
    TorusCoset t;
    t.annihilator_ = IntMatrix(0, r);
    t.lattice_ = IntMatrix::identity(r);
    t.point_.assign(r, Rational(0));
    return t;
}

TorusCoset TorusCoset::through(const IntMatrix& annihilator, std::span<const Rational> point) {
    const std::size_t r = annihilator.cols();
    if (point.size() != r) throw Error(ErrorCode::InvalidInput, "point has the wrong dimension");
    TorusCoset t;
    const auto h = hermite_normal_form(annihilator);
    t.annihilator_ = h.basis();
    t.offset_ = frac_all(multiply(t.annihilator_, point));
    t.lattice_ = integer_kernel(t.annihilator_);
    t.point_ = particular_point(t.annihilator_, t.offset_, r);
    return t;
}

std::vector<TorusCoset> TorusCoset::solve(const IntMatrix& m, std::span<const Rational> rhs) {
    const std::size_t r = m.cols();
    if (rhs.size() != m.rows()) throw Error(ErrorCode::InvalidInput, "right-hand side has the wrong length");
    if (m.rows() == 0) return {whole(r)};
    const auto snf = smith_normal_form(m);
    const std::size_t k = snf.rank();
    const auto uc = multiply(snf.U, rhs);
    for (std::size_t i = k; i < uc.size(); ++i)
        if (!is_integer(uc[i])) return {};
    const IntMatrix annihilator = unimodular_inverse(snf.V).row_block(0, k);

    std::vector<std::int64_t> divisors(k);
    for (std::size_t i = 0; i < k; ++i) divisors[i] = snf.D(i, i);
    std::vector<TorusCoset> out;
    std::vector<std::int64_t> digits(k, 0);
    for (;;) {
        std::vector<Rational> y(r, Rational(0));
        for (std::size_t i = 0; i < k; ++i) y[i] = (uc[i] + Rational(digits[i])) / Rational(divisors[i]);
        const auto x = multiply(snf.V, std::span<const Rational>(y));
        out.push_back(through(annihilator, x));
        std::size_t i = 0;
        while (i < k && ++digits[i] == divisors[i]) digits[i++] = 0;
        if (i == k) break;
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool TorusCoset::contains_point(std::span<const Rational> x) const {
    const auto v = multiply(annihilator_, x);
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!is_integer(v[i] - offset_[i])) return false;
    return true;
}

bool TorusCoset::contains(const TorusCoset& smaller) const {
    if (smaller.ambient_rank() != ambient_rank()) throw Error(ErrorCode::InvalidInput, "ambient rank mismatch");
    if (smaller.rank() > rank()) return false;
    const IntMatrix image = annihilator_ * smaller.lattice_;
    for (auto e : image.data())
        if (e != 0) return false;
    return contains_point(smaller.point_);
}

std::vector<TorusCoset> TorusCoset::intersect(const TorusCoset& other) const {
    if (other.ambient_rank() != ambient_rank()) throw Error(ErrorCode::InvalidInput, "ambient rank mismatch");
    std::vector<Rational> rhs = offset_;
    rhs.insert(rhs.end(), other.offset_.begin(), other.offset_.end());
    if (annihilator_.rows() == 0 && other.annihilator_.rows() == 0) return {*this};
    return solve(annihilator_.vstack(other.annihilator_), rhs);
}

TorusCoset TorusCoset::act(const IntMatrix& g, const IntMatrix& g_inverse) const {
    const auto image = multiply(g, std::span<const Rational>(point_));
    if (annihilator_.rows() == 0) return *this;
    return through(annihilator_ * g_inverse, image);
}

bool TorusCoset::fixed_pointwise_by(const IntMatrix& g) const {
    if (!(g * lattice_ == lattice_)) return false;
    const auto image = multiply(g, std::span<const Rational>(point_));
    for (std::size_t i = 0; i < image.size(); ++i)
        if (!is_integer(image[i] - point_[i])) return false;
    return true;
}

std::string TorusCoset::to_string() const {
    std::ostringstream os;
    os << "{P=" << annihilator_.to_string() << ", c=(";
    for (std::size_t i = 0; i < offset_.size(); ++i) os << (i ? "," : "") << kummer::to_string(offset_[i]);
    os << ")}";
    return os.str();
}

std::strong_ordering operator<=>(const TorusCoset& a, const TorusCoset& b) {
    if (auto c = a.annihilator_ <=> b.annihilator_; c != 0) return c;
    if (a.offset_.size() != b.offset_.size()) return a.offset_.size() <=> b.offset_.size();
    for (std::size_t i = 0; i < a.offset_.size(); ++i) {
        if (a.offset_[i] < b.offset_[i]) return std::strong_ordering::less;
        if (b.offset_[i] < a.offset_[i]) return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

AffineSubtorus::AffineSubtorus(std::vector<TorusCoset> factors) : factors_(std::move(factors)) {
    if (factors_.empty() || factors_.size() % 2 != 0)
        throw Error(ErrorCode::InvalidInput, "an affine subtorus has 2d torus factors");
    for (const auto& f : factors_)
        if (!(f.annihilator() == factors_.front().annihilator()))
            throw Error(ErrorCode::InvalidInput, "factors of an affine subtorus must share one lattice");
}

AffineSubtorus AffineSubtorus::whole(std::size_t r, unsigned d) {
    return AffineSubtorus(std::vector<TorusCoset>(2 * d, TorusCoset::whole(r)));
}

std::vector<std::vector<Rational>> AffineSubtorus::translate() const {
    std::vector<std::vector<Rational>> out(ambient_rank(), std::vector<Rational>(factors_.size()));
    for (std::size_t j = 0; j < factors_.size(); ++j)
        for (std::size_t i = 0; i < ambient_rank(); ++i) out[i][j] = factors_[j].point()[i];
    return out;
}

bool AffineSubtorus::contains(const AffineSubtorus& smaller) const {
    if (smaller.factors_.size() != factors_.size()) throw Error(ErrorCode::InvalidInput, "torus dimension mismatch");
    for (std::size_t j = 0; j < factors_.size(); ++j)
        if (!factors_[j].contains(smaller.factors_[j])) return false;
    return true;
}

std::vector<AffineSubtorus> AffineSubtorus::intersect(const AffineSubtorus& other) const {
    if (other.factors_.size() != factors_.size()) throw Error(ErrorCode::InvalidInput, "torus dimension mismatch");
    std::vector<std::vector<TorusCoset>> pieces;
    for (std::size_t j = 0; j < factors_.size(); ++j) {
        pieces.push_back(factors_[j].intersect(other.factors_[j]));
        if (pieces.back().empty()) return {};
    }
    std::vector<AffineSubtorus> out;
    std::vector<std::size_t> idx(pieces.size(), 0);
    for (;;) {
        std::vector<TorusCoset> f;
        for (std::size_t j = 0; j < pieces.size(); ++j) f.push_back(pieces[j][idx[j]]);
        out.emplace_back(std::move(f));
        std::size_t j = 0;
        while (j < idx.size() && ++idx[j] == pieces[j].size()) idx[j++] = 0;
        if (j == idx.size()) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

AffineSubtorus AffineSubtorus::act(const IntMatrix& g, const IntMatrix& g_inverse) const {
    std::vector<TorusCoset> f;
    for (const auto& c : factors_) f.push_back(c.act(g, g_inverse));
    return AffineSubtorus(std::move(f));
}

bool AffineSubtorus::fixed_pointwise_by(const IntMatrix& g) const {
    return std::all_of(factors_.begin(), factors_.end(), [&](const auto& c) { return c.fixed_pointwise_by(g); });
}

std::string AffineSubtorus::to_string() const {
    std::ostringstream os;
    os << "lattice " << lattice().to_string() << " translate [";
    const auto tr = translate();
    for (std::size_t i = 0; i < tr.size(); ++i) {
        os << (i ? "," : "") << '[';
        for (std::size_t j = 0; j < tr[i].size(); ++j) os << (j ? "," : "") << kummer::to_string(tr[i][j]);
        os << ']';
    }
    os << ']';
    return os.str();
}

std::vector<AffineSubtorus> product_components(const std::vector<TorusCoset>& factors, unsigned d) {
    std::vector<AffineSubtorus> out;
    if (factors.empty()) return out;
    const std::size_t slots = 2 * static_cast<std::size_t>(d);
    std::vector<std::size_t> idx(slots, 0);
    for (;;) {
        std::vector<TorusCoset> f;
        for (auto i : idx) f.push_back(factors[i]);
        out.emplace_back(std::move(f));
        std::size_t j = 0;
        while (j < slots && ++idx[j] == factors.size()) idx[j++] = 0;
        if (j == slots) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace kummer
