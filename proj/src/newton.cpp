#include "tschirn/newton.hpp"

#include <sstream>

namespace tsch {

const Ring& CoeffVector::ring() const {
    if (a.empty()) throw ring_error("empty coefficient vector");
    return a.front().ring();
}

CoeffVector CoeffVector::parse(const Ring& r, const std::string& text) {
    CoeffVector cv;
    std::istringstream is(text);
    std::string part;
    while (std::getline(is, part, ',')) {
        auto b = part.find_first_not_of(" \t");
        auto e = part.find_last_not_of(" \t");
        if (b == std::string::npos) throw ring_error("empty coefficient entry");
        cv.a.push_back(Scalar::parse(r, part.substr(b, e - b + 1)));
    }
    if (cv.a.empty()) throw ring_error("empty coefficient vector");
    return cv;
}

std::string CoeffVector::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) out += ",";
        out += a[i].to_string();
    }
    return out;
}

namespace {
struct ScalarOps {
    Ring ring;
    Scalar zero() const { return Scalar::zero(ring); }
    Scalar one() const { return Scalar::one(ring); }
    Scalar from_int(long v) const { return Scalar::from_int(ring, v); }
};
} // namespace

PowerSums power_sums_from_coeffs(const CoeffVector& a, std::size_t kmax) {
    ScalarOps ops{a.ring()};
    PowerSums ps;
    ps.n = a.n();
    ps.p = power_sums_generic(a.a, kmax, ops);
    return ps;
}

CoeffVector coeffs_from_power_sums(const PowerSums& p) {
    if (p.p.size() < p.n + 1) throw ring_error("need power sums up to k = n");
    ScalarOps ops{p.p.front().ring()};
    CoeffVector cv;
    cv.a = coeffs_from_power_sums_generic(p.p, p.n, ops);
    return cv;
}

std::vector<std::complex<double>>
power_sums_from_roots(const std::vector<std::complex<double>>& roots, std::size_t kmax) {
    std::vector<std::complex<double>> p(kmax + 1);
    p[0] = static_cast<double>(roots.size());
    std::vector<std::complex<double>> pw(roots.size(), 1.0);
    for (std::size_t k = 1; k <= kmax; ++k) {
        std::complex<double> s = 0.0;
        for (std::size_t j = 0; j < roots.size(); ++j) {
            pw[j] *= roots[j];
            s += pw[j];
        }
        p[k] = s;
    }
    return p;
}

std::vector<std::string> a_var_names(std::size_t n) {
    std::vector<std::string> v;
    v.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) v.push_back("a_" + std::to_string(i));
    return v;
}

std::vector<std::string> b_var_names(std::size_t n) {
    std::vector<std::string> v;
    v.reserve(n);
    for (std::size_t i = 0; i < n; ++i) v.push_back("b_" + std::to_string(i));
    return v;
}

std::vector<MultiPoly> symbolic_power_sums(std::size_t n, std::size_t kmax) {
    Ring zz = Ring::ZZ();
    auto vars = a_var_names(n);
    std::vector<MultiPoly> av;
    av.reserve(n);
    for (std::size_t i = 1; i <= n; ++i)
        av.push_back(MultiPoly::variable(zz, vars, "a_" + std::to_string(i)));
    std::vector<MultiPoly> p;
    p.reserve(kmax + 1);
    p.push_back(MultiPoly::constant(zz, vars, Scalar::integer(static_cast<long>(n))));
    for (std::size_t k = 1; k <= kmax; ++k) {
        MultiPoly s = MultiPoly::zero(zz, vars);
        if (k <= n) {
            s = av[k - 1] * Scalar::integer(static_cast<long>(k));
            for (std::size_t i = 1; i < k; ++i) s = s + av[k - i - 1] * p[i];
        } else {
            for (std::size_t i = k - n; i < k; ++i) s = s + av[k - i - 1] * p[i];
        }
        p.push_back(-s);
    }
    return p;
}

} // namespace tsch
