#ifndef TSCHIRN_NEWTON_HPP
#define TSCHIRN_NEWTON_HPP

#include <complex>
#include <string>
#include <vector>

#include "tschirn/multipoly.hpp"
#include "tschirn/scalar.hpp"

namespace tsch {

// Monic polynomial z^n + a_1 z^{n-1} + ... + a_n, stored as a_1..a_n.
struct CoeffVector {
    std::vector<Scalar> a;
    std::size_t n() const { return a.size(); }
    const Ring& ring() const;
    // comma-separated a_1,...,a_n with rational entries "num/den"
    static CoeffVector parse(const Ring& r, const std::string& text);
    std::string to_string() const;
};

// p_0..p_kmax with p_0 = n as a ring element
struct PowerSums {
    std::size_t n = 0;
    std::vector<Scalar> p;
};

// Standard-sign Newton recurrence: p_k = -(k a_k + sum_{i<k} a_{k-i} p_i)
// for k <= n, and p_k = -sum_{i=k-n}^{k-1} a_{k-i} p_i beyond, so that p_k
// is the k-th power sum of the roots. Division-free: valid over any ring.
PowerSums power_sums_from_coeffs(const CoeffVector& a, std::size_t kmax);

// Inverse direction; requires 1..n invertible (char 0 or p > n).
CoeffVector coeffs_from_power_sums(const PowerSums& p);

// Numeric oracle: p_k = sum_j roots_j^k in complex floating arithmetic.
std::vector<std::complex<double>>
power_sums_from_roots(const std::vector<std::complex<double>>& roots, std::size_t kmax);

// p_k as polynomials in a_1..a_n over ZZ (variables named a_1..a_n),
// indices 0..kmax
std::vector<MultiPoly> symbolic_power_sums(std::size_t n, std::size_t kmax);

std::vector<std::string> a_var_names(std::size_t n);
std::vector<std::string> b_var_names(std::size_t n);

// Generic versions used by numeric and radical-tower element types. T needs
// +,-,*,/ and Ops must provide zero(), one(), from_int(long).
template <typename T, typename Ops>
std::vector<T> power_sums_generic(const std::vector<T>& a, std::size_t kmax, const Ops& ops) {
    std::size_t n = a.size();
    std::vector<T> p;
    p.reserve(kmax + 1);
    p.push_back(ops.from_int(static_cast<long>(n)));
    for (std::size_t k = 1; k <= kmax; ++k) {
        T s = ops.zero();
        if (k <= n) {
            s = a[k - 1] * ops.from_int(static_cast<long>(k));
            for (std::size_t i = 1; i < k; ++i) s = s + a[k - i - 1] * p[i];
        } else {
            for (std::size_t i = k - n; i < k; ++i) s = s + a[k - i - 1] * p[i];
        }
        p.push_back(ops.zero() - s);
    }
    return p;
}

template <typename T, typename Ops>
std::vector<T> coeffs_from_power_sums_generic(const std::vector<T>& p, std::size_t n,
                                              const Ops& ops) {
    std::vector<T> a;
    a.reserve(n);
    for (std::size_t k = 1; k <= n; ++k) {
        T s = p[k];
        for (std::size_t i = 1; i < k; ++i) s = s + a[k - i - 1] * p[i];
        a.push_back((ops.zero() - s) / ops.from_int(static_cast<long>(k)));
    }
    return a;
}

} // namespace tsch

#endif
