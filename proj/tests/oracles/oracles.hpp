#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include <boost/rational.hpp>

// Slow, self-contained reference computations. Nothing here calls into the
// library's algorithms; only plain vectors and rationals are used.
namespace oracle {

using Int = std::int64_t;
using Q = boost::rational<Int>;
using Mat = std::vector<std::vector<Int>>;
using QMat = std::vector<std::vector<Q>>;
/// Coefficients low to high, trailing zeros trimmed.
using Poly = std::vector<Int>;

Mat identity(std::size_t n);
Mat multiply(const Mat& a, const Mat& b);
Mat subtract(const Mat& a, const Mat& b);

/// Every product of the generators, by breadth-first closure.
std::set<Mat> closure(const std::vector<Mat>& generators, std::size_t cap = 100000);

/// Orbits of the group on itself under conjugation, each as a sorted set.
std::vector<std::set<Mat>> conjugacy_classes(const std::set<Mat>& group);

/// Laplace expansion along the first row.
Int det_cofactor(const Mat& m);
Q det_cofactor(const QMat& m);

/// det(I + t M) recovered from its values at t = 0..n by Newton interpolation.
Poly det_one_plus_t(const QMat& m);
Poly det_one_plus_t(const Mat& m);

/// x^n - 1 divided by every Phi_k with k a proper divisor of n.
Poly cyclotomic(unsigned n);

Poly trim(Poly p);
Poly mul(const Poly& a, const Poly& b);
Poly pow(const Poly& a, unsigned e);
Poly add(const Poly& a, const Poly& b);
Int eval(const Poly& p, Int x);

/// Rank over the rationals by Gaussian elimination.
std::size_t rank(const QMat& m);
QMat to_rational(const Mat& m);

/// age of g on A^r with A of dimension d: d times the sum of eigenvalue
/// exponents, read from the dimensions of ker(g^k - I).
Q age(const Mat& g, unsigned d);

/// Solutions x in (Z/N)^r of M x = 0 mod N, M any r-column matrix.
std::vector<std::vector<Int>> torsion_solutions(const Mat& m, Int n);

/// (1/|G|) sum over commuting pairs of the Euler number of Fix(g) & Fix(h),
/// with finite intersections counted on torsion points.
Int commuting_pair_euler(const std::set<Mat>& group, unsigned d);

/// Orbifold (stringy) Poincare polynomial:
///   (1/|G|) sum_{gh = hg} t^{2 age g} tr(h | H*(Fix g)).
/// Components of Fix(g) are found among the torsion points of order dividing ord(g).
Poly orbifold_poincare(const std::set<Mat>& group, unsigned d);

/// (1/|G|) sum_g det(I + t g)^{2d}.
Poly molien(const std::set<Mat>& group, unsigned d);

}  // namespace oracle
