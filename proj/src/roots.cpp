#include "tschirn/roots.hpp"

#include <cmath>
#include <stdexcept>

namespace tsch {

BComplex eval_monic(const std::vector<BComplex>& a, const BComplex& z) {
    BComplex acc(1.0);
    for (const auto& c : a) acc = acc * z + c;
    return acc;
}

BComplex eval_monic_deriv(const std::vector<BComplex>& a, const BComplex& z) {
    std::size_t n = a.size();
    BComplex acc(static_cast<double>(n));
    for (std::size_t i = 0; i + 1 < n; ++i)
        acc = acc * z + BComplex(static_cast<double>(n - 1 - i)) * a[i];
    return acc;
}

std::vector<BComplex> aberth_roots(const std::vector<BComplex>& a) {
    std::size_t n = a.size();
    if (n == 0) return {};
    // Cauchy-style initial radius
    double maxc = 0;
    for (const auto& c : a) {
        double m = std::abs(c.re.to_double()) + std::abs(c.im.to_double());
        if (m > maxc) maxc = m;
    }
    double radius = 1.0 + maxc;
    std::vector<BComplex> z(n);
    for (std::size_t i = 0; i < n; ++i) {
        double th = 2.0 * 3.14159265358979323846 * static_cast<double>(i) /
                        static_cast<double>(n) +
                    0.4;
        z[i] = BComplex(radius * std::cos(th), radius * std::sin(th));
    }
    mpfr_prec_t prec = working_precision();
    BigFloat tol = BigFloat(2.0);
    for (mpfr_prec_t i = 0; i + 24 < prec; ++i) tol = tol * BigFloat(0.5);
    const int max_iter = 400;
    for (int iter = 0; iter < max_iter; ++iter) {
        BigFloat worst(0.0);
        for (std::size_t i = 0; i < n; ++i) {
            BComplex p = eval_monic(a, z[i]);
            BComplex dp = eval_monic_deriv(a, z[i]);
            BComplex newton = p / dp;
            BComplex s(0.0);
            for (std::size_t j = 0; j < n; ++j)
                if (j != i) s = s + BComplex(1.0) / (z[i] - z[j]);
            BComplex corr = newton / (BComplex(1.0) - newton * s);
            z[i] = z[i] - corr;
            BigFloat rel = corr.abs() / (BigFloat(1.0) + z[i].abs());
            if (rel > worst) worst = rel;
        }
        if (worst < tol) break;
        if (iter == max_iter - 1)
            throw std::runtime_error("aberth_roots: no convergence");
    }
    // one extra Newton polish per root
    for (std::size_t i = 0; i < n; ++i) {
        BComplex p = eval_monic(a, z[i]);
        BComplex dp = eval_monic_deriv(a, z[i]);
        BigFloat d = dp.abs();
        if (!d.is_zero()) z[i] = z[i] - p / dp;
    }
    return z;
}

BigFloat match_distance(const std::vector<BComplex>& xs, const std::vector<BComplex>& ys) {
    if (xs.size() != ys.size()) throw std::invalid_argument("match_distance: size mismatch");
    std::vector<bool> used(ys.size(), false);
    BigFloat worst(0.0);
    for (const auto& x : xs) {
        std::size_t best = ys.size();
        BigFloat bd(0.0);
        for (std::size_t j = 0; j < ys.size(); ++j) {
            if (used[j]) continue;
            BigFloat d = (x - ys[j]).abs();
            if (best == ys.size() || d < bd) {
                best = j;
                bd = d;
            }
        }
        used[best] = true;
        if (bd > worst) worst = bd;
    }
    return worst;
}

} // namespace tsch
