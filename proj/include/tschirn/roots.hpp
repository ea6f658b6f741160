#ifndef TSCHIRN_ROOTS_HPP
#define TSCHIRN_ROOTS_HPP

#include <vector>

#include "tschirn/bigfloat.hpp"

namespace tsch {

// All roots of the monic polynomial z^n + a[0] z^{n-1} + ... + a[n-1] by the
// Aberth-Ehrlich iteration with a Newton polish, at the working precision.
std::vector<BComplex> aberth_roots(const std::vector<BComplex>& a);

// Horner evaluation of the same monic polynomial and its derivative.
BComplex eval_monic(const std::vector<BComplex>& a, const BComplex& z);
BComplex eval_monic_deriv(const std::vector<BComplex>& a, const BComplex& z);

// Greedy minimal-distance matching between two equal-size point sets;
// returns max over matches of |x_i - y_{sigma(i)}|.
BigFloat match_distance(const std::vector<BComplex>& xs, const std::vector<BComplex>& ys);

} // namespace tsch

#endif
