#include "tschirn/reduce.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "tschirn/forms.hpp"
#include "tschirn/newton.hpp"
#include "tschirn/roots.hpp"

namespace tsch {

namespace {

struct RatOps {
    mpq_class zero_v = 0;
    mpq_class zero() const { return 0; }
    mpq_class one() const { return 1; }
    mpq_class from_int(long v) const { return v; }
    mpq_class from_mpz(const mpz_class& v) const { return mpq_class(v); }
};

std::vector<BComplex> to_complex(const std::vector<mpq_class>& v) {
    std::vector<BComplex> out;
    out.reserve(v.size());
    for (const auto& q : v) out.emplace_back(q);
    return out;
}

std::vector<BComplex> tower_shadow(const std::vector<TowerElem>& v) {
    std::vector<BComplex> out;
    out.reserve(v.size());
    for (const auto& e : v) out.push_back(e.numeric());
    return out;
}

BigFloat inf_norm(const std::vector<BComplex>& v) {
    BigFloat m(0.0);
    for (const auto& x : v) {
        BigFloat a = x.abs();
        if (a > m) m = a;
    }
    return m;
}

// normalized residuals |p_k(c)| / max(1, |c|_inf) for k = 1..kmax
std::vector<BigFloat> residuals_of(const std::vector<BComplex>& c, unsigned kmax) {
    BComplexOps ops;
    auto pc = power_sums_generic(c, kmax, ops);
    BigFloat scale = inf_norm(c);
    if (scale < BigFloat(1.0)) scale = BigFloat(1.0);
    std::vector<BigFloat> out;
    for (unsigned k = 1; k <= kmax; ++k) out.push_back(pc[k].abs() / scale);
    return out;
}

void require_distinct_roots(const std::vector<mpq_class>& a) {
    if (a.size() < 2) throw std::invalid_argument("reduce: need degree >= 2");
    if (discriminant(a) == 0)
        throw std::domain_error(
            "reduce: repeated roots (zero discriminant); the construction is generic");
}

std::vector<mpq_class> rational_power_sums(const std::vector<mpq_class>& a, std::size_t kmax) {
    RatOps ops;
    return power_sums_generic(a, kmax, ops);
}

QuadricForm t12_gram_q(const std::vector<mpq_class>& a) {
    std::size_t n = a.size();
    auto p = rational_power_sums(a, 2 * (n - 1));
    QuadricForm q;
    q.gram.assign(n - 1, std::vector<mpq_class>(n - 1, 0));
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = 1; j < n; ++j) {
            mpq_class v = p[i + j] - p[i] * p[j] / static_cast<long>(n);
            v.canonicalize();
            q.gram[i - 1][j - 1] = v;
        }
    return q;
}

std::vector<BComplex> bvec_from_prime(const std::vector<BComplex>& bprime,
                                      const std::vector<mpq_class>& psums, std::size_t n) {
    // b_0 = -(sum_i p_i b_i) / n along the T_1 hyperplane
    BComplex s(0.0);
    for (std::size_t i = 1; i < n; ++i) s = s + BComplex(psums[i]) * bprime[i - 1];
    std::vector<BComplex> b;
    b.reserve(n);
    b.push_back(-(s / BComplex(static_cast<double>(n))));
    for (const auto& x : bprime) b.push_back(x);
    return b;
}

ReductionStep identity_step(const std::vector<mpq_class>& a) {
    std::size_t n = a.size();
    ReductionStep st;
    st.desc = "identity (input already normalized)";
    st.b.assign(n, BComplex(0.0));
    st.b[1] = BComplex(1.0);
    st.c = to_complex(a);
    return st;
}

} // namespace

std::vector<BComplex> polynomial_roots(const std::vector<BComplex>& a) {
    return aberth_roots(a);
}

std::vector<BComplex> transform_numeric(const std::vector<BComplex>& a,
                                        const std::vector<BComplex>& b) {
    std::size_t n = a.size();
    BComplexOps ops;
    auto pa = power_sums_generic(a, n * (n - 1), ops);
    auto pc = transformed_power_sums(pa, b, n, ops);
    return coeffs_from_power_sums_generic(pc, n, ops);
}

ReductionTrace reduce_to_principal(const std::vector<mpq_class>& a, ReduceMode mode,
                                   std::uint64_t seed) {
    std::size_t n = a.size();
    if (n < 3) throw std::invalid_argument("reduce_to_principal: need n >= 3");
    require_distinct_roots(a);
    ReductionTrace trace;
    trace.input = a;
    trace.level = ReduceLevel::Principal;
    trace.mode = mode;
    trace.seed = seed;

    auto psums = rational_power_sums(a, 2 * (n - 1));
    if (psums[1] == 0 && psums[2] == 0) {
        trace.steps.push_back(identity_step(a));
        trace.exact_zero = true;
        trace.residuals = residuals_of(trace.steps.back().c, 2);
        return trace;
    }

    QuadricForm Q = t12_gram_q(a);
    if (Q.rank() < Q.dim())
        throw std::domain_error("reduce_to_principal: degenerate T_12 quadric");
    Diagonalization D = diagonalize(Q);

    // isotropic point of the diagonal form on the first coordinate pair:
    // y_1 = sqrt(-d_2/d_1), y_2 = 1
    mpq_class ratio = -D.diag[1] / D.diag[0];
    ratio.canonicalize();

    if (mode == ReduceMode::Tower) {
        auto tower = RadicalTower::rationals();
        mpq_class root;
        TowerElem s = TowerElem::from_rational(tower, 0);
        if (rational_sqrt(ratio, root)) {
            s = TowerElem::from_rational(tower, root);
        } else {
            tower = tower->adjoin(TowerElem::from_rational(RadicalTower::rationals(), ratio));
            s = TowerElem::top_root(tower);
        }
        TowerOps ops{tower};
        std::vector<TowerElem> y(n - 1, ops.zero());
        y[0] = s;
        y[1] = ops.one();
        std::vector<TowerElem> bprime(n - 1, ops.zero());
        for (std::size_t r = 0; r + 1 < n; ++r) {
            TowerElem acc = ops.zero();
            for (std::size_t ccol = 0; ccol + 1 < n; ++ccol) {
                if (D.L[r][ccol] == 0) continue;
                acc = acc + TowerElem::from_rational(tower, D.L[r][ccol]) * y[ccol];
            }
            bprime[r] = acc;
        }
        TowerElem s0 = ops.zero();
        for (std::size_t i = 1; i < n; ++i)
            s0 = s0 + TowerElem::from_rational(tower, psums[i]) * bprime[i - 1];
        std::vector<TowerElem> b;
        b.push_back(-(s0 / ops.from_int(static_cast<long>(n))));
        for (auto& x : bprime) b.push_back(x);

        std::vector<TowerElem> pa;
        pa.reserve(n * (n - 1) + 1);
        for (const auto& q : rational_power_sums(a, n * (n - 1)))
            pa.push_back(TowerElem::from_rational(tower, q));
        auto pc = transformed_power_sums(pa, b, n, ops);
        auto c = coeffs_from_power_sums_generic(pc, n, ops);

        ReductionStep st;
        st.desc = "T_12 point via exact diagonalization (radical tower)";
        st.b = tower_shadow(b);
        st.c = tower_shadow(c);
        st.b_exact = std::move(b);
        st.c_exact = std::move(c);
        trace.steps.push_back(std::move(st));
        trace.exact_zero = pc[1].is_zero() && pc[2].is_zero();
        if (!trace.exact_zero)
            throw std::runtime_error("reduce_to_principal: tower residuals not exactly zero");
        trace.residuals = residuals_of(trace.steps.back().c, 2);
        return trace;
    }

    BComplex s = BComplex(ratio).sqrt();
    std::vector<BComplex> y(n - 1, BComplex(0.0));
    y[0] = s;
    y[1] = BComplex(1.0);
    std::vector<BComplex> bprime(n - 1, BComplex(0.0));
    for (std::size_t r = 0; r + 1 < n; ++r) {
        BComplex acc(0.0);
        for (std::size_t ccol = 0; ccol + 1 < n; ++ccol) {
            if (D.L[r][ccol] == 0) continue;
            acc = acc + BComplex(D.L[r][ccol]) * y[ccol];
        }
        bprime[r] = acc;
    }
    auto b = bvec_from_prime(bprime, psums, n);
    auto c = transform_numeric(to_complex(a), b);
    ReductionStep st;
    st.desc = "T_12 point via exact diagonalization + one square root";
    st.b = std::move(b);
    st.c = std::move(c);
    trace.steps.push_back(std::move(st));
    trace.residuals = residuals_of(trace.steps.back().c, 2);
    return trace;
}

ReductionTrace reduce_to_bring(const std::vector<mpq_class>& a, std::uint64_t seed,
                               double tol) {
    std::size_t n = a.size();
    if (n < 5) throw std::invalid_argument("reduce_to_bring: need n >= 5");
    require_distinct_roots(a);
    ReductionTrace trace;
    trace.input = a;
    trace.level = ReduceLevel::Bring;
    trace.mode = ReduceMode::Numeric;
    trace.seed = seed;

    auto psums = rational_power_sums(a, n * (n - 1));
    if (psums[1] == 0 && psums[2] == 0 && psums[3] == 0) {
        trace.steps.push_back(identity_step(a));
        trace.exact_zero = true;
        trace.residuals = residuals_of(trace.steps.back().c, 3);
        return trace;
    }

    QuadricForm Q = t12_gram_q(a);
    if (Q.rank() < Q.dim())
        throw std::domain_error("reduce_to_bring: degenerate T_12 quadric");
    Diagonalization D = diagonalize(Q);
    IsotropicBasis iso = maximal_isotropic(Q, D);
    std::size_t m = iso.basis.size();
    if (m < 2) throw std::domain_error("reduce_to_bring: isotropic subspace too small");

    // numeric shadows of the isotropic basis, in b_1..b_{n-1} coordinates
    std::vector<std::vector<BComplex>> lambda;
    for (const auto& vec : iso.basis) lambda.push_back(tower_shadow(vec));

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> coef(-4, 4);
    BComplexOps ops;
    auto pa = [&] {
        std::vector<BComplex> v;
        for (const auto& q : psums) v.emplace_back(q);
        return v;
    }();

    auto eval_p3 = [&](const std::vector<BComplex>& b) {
        auto pc = transformed_power_sums(pa, b, 3, ops);
        return pc[3];
    };

    const int max_lines = 16;
    for (int attempt = 0; attempt < max_lines; ++attempt) {
        trace.lines_tried = static_cast<unsigned>(attempt + 1);
        // a line u + t w inside the isotropic subspace
        std::vector<BComplex> u(n - 1, BComplex(0.0)), w(n - 1, BComplex(0.0));
        if (attempt == 0) {
            u = lambda[0];
            w = lambda[1];
        } else {
            for (std::size_t k = 0; k < m; ++k) {
                long cu = coef(rng), cw = coef(rng);
                for (std::size_t i = 0; i + 1 < n; ++i) {
                    u[i] = u[i] + BComplex(static_cast<double>(cu)) * lambda[k][i];
                    w[i] = w[i] + BComplex(static_cast<double>(cw)) * lambda[k][i];
                }
            }
        }
        if (inf_norm(u).to_double() < 1e-30 || inf_norm(w).to_double() < 1e-30) continue;

        // restrict the cubic to the line: values at t = 0,1,2,3 then
        // interpolate gamma_0..gamma_3
        std::vector<BComplex> gamma(4, BComplex(0.0));
        {
            std::vector<BComplex> vals;
            for (int tv = 0; tv < 4; ++tv) {
                std::vector<BComplex> bprime(n - 1);
                for (std::size_t i = 0; i + 1 < n; ++i)
                    bprime[i] = u[i] + BComplex(static_cast<double>(tv)) * w[i];
                vals.push_back(eval_p3(bvec_from_prime(bprime, psums, n)));
            }
            // Newton forward differences for nodes 0,1,2,3
            BComplex d0 = vals[0];
            BComplex d1 = vals[1] - vals[0];
            BComplex d2 = vals[2] - BComplex(2.0) * vals[1] + vals[0];
            BComplex d3 = vals[3] - BComplex(3.0) * vals[2] + BComplex(3.0) * vals[1] - vals[0];
            // expand d0 + d1 t + d2 t(t-1)/2 + d3 t(t-1)(t-2)/6
            gamma[0] = d0;
            gamma[1] = d1 - d2 / BComplex(2.0) + d3 / BComplex(3.0);
            gamma[2] = d2 / BComplex(2.0) - d3 / BComplex(2.0);
            gamma[3] = d3 / BComplex(6.0);
        }
        BigFloat gmax = BigFloat(0.0);
        for (const auto& g : gamma) {
            BigFloat ab = g.abs();
            if (ab > gmax) gmax = ab;
        }
        if (gmax.to_double() < 1e-40) continue; // cubic identically zero on the line

        // roots of the restricted cubic (with degree fallback)
        std::vector<BComplex> roots;
        double lead_rel = (gamma[3].abs() / gmax).to_double();
        if (lead_rel > 1e-30) {
            std::vector<BComplex> mon{gamma[2] / gamma[3], gamma[1] / gamma[3],
                                      gamma[0] / gamma[3]};
            roots = aberth_roots(mon);
        } else if ((gamma[2].abs() / gmax).to_double() > 1e-30) {
            std::vector<BComplex> mon{gamma[1] / gamma[2], gamma[0] / gamma[2]};
            roots = aberth_roots(mon);
        } else if ((gamma[1].abs() / gmax).to_double() > 1e-30) {
            roots = {-(gamma[0] / gamma[1])};
        } else {
            continue; // constant nonzero: the line misses T_3 entirely
        }

        for (const auto& t_star : roots) {
            std::vector<BComplex> bprime(n - 1);
            for (std::size_t i = 0; i + 1 < n; ++i) bprime[i] = u[i] + t_star * w[i];
            if (inf_norm(bprime).to_double() < 1e-30) continue;
            auto b = bvec_from_prime(bprime, psums, n);
            auto c = transform_numeric(to_complex(a), b);
            auto res = residuals_of(c, 3);
            double worst = 0;
            for (int k = 0; k < 3; ++k) worst = std::max(worst, res[k].to_double());
            if (worst < tol) {
                ReductionStep st;
                st.desc = "T_123 point: line in a maximal isotropic of T_12, cubic solved";
                st.b = std::move(b);
                st.c = std::move(c);
                trace.steps.push_back(std::move(st));
                trace.residuals = std::move(res);
                return trace;
            }
        }
    }
    throw std::runtime_error("reduce_to_bring: retry budget exhausted (degenerate lines)");
}

TraceVerification verify_trace(const ReductionTrace& trace, double tol, double root_tol) {
    TraceVerification ver;
    ver.max_step_dev = BigFloat(0.0);
    ver.max_residual = BigFloat(0.0);
    ver.root_mismatch = BigFloat(0.0);
    if (trace.steps.empty()) return ver;
    std::size_t n = trace.input.size();

    std::vector<BComplex> prev = to_complex(trace.input);
    for (std::size_t si = 0; si < trace.steps.size(); ++si) {
        const auto& st = trace.steps[si];
        auto c = transform_numeric(prev, st.b);
        BigFloat dev(0.0);
        for (std::size_t i = 0; i < n; ++i) {
            BigFloat d = (c[i] - st.c[i]).abs();
            if (d > dev) dev = d;
        }
        BigFloat scale = inf_norm(st.c);
        if (scale < BigFloat(1.0)) scale = BigFloat(1.0);
        dev = dev / scale;
        if (dev > ver.max_step_dev) ver.max_step_dev = dev;
        if (dev.to_double() > tol) {
            ver.failed_step = static_cast<int>(si);
            ver.ok = false;
            return ver;
        }
        // exact cross-check through the companion-matrix oracle where the
        // step is rational
        if (si == 0 && n <= 8) {
            bool rational = true;
            std::vector<mpq_class> bq(n);
            if (st.b_exact) {
                for (std::size_t i = 0; i < n; ++i) {
                    if (!(*st.b_exact)[i].is_rational()) {
                        rational = false;
                        break;
                    }
                    bq[i] = (*st.b_exact)[i].rational_value();
                }
            } else {
                rational = false;
            }
            if (rational) {
                CoeffVector av;
                for (const auto& q : trace.input) av.a.push_back(Scalar(mpq_class(q)));
                TschirnhausVector bv;
                for (const auto& q : bq) bv.b.push_back(Scalar(mpq_class(q)));
                CoeffVector c1 = transform_coeffs(av, bv);
                CoeffVector c2 = transform_coeffs_oracle(av, bv);
                for (std::size_t i = 0; i < n; ++i)
                    if (c1.a[i] != c2.a[i]) {
                        ver.failed_step = static_cast<int>(si);
                        ver.ok = false;
                        return ver;
                    }
                ver.oracle_checked = true;
            }
        }
        prev = st.c;
    }

    unsigned kmax = trace.level == ReduceLevel::Bring ? 3 : 2;
    auto res = residuals_of(trace.steps.back().c, kmax);
    for (const auto& r : res)
        if (r > ver.max_residual) ver.max_residual = r;
    if (ver.max_residual.to_double() > tol) {
        ver.failed_step = static_cast<int>(trace.steps.size()) - 1;
        ver.ok = false;
        return ver;
    }

    // root correspondence through the whole chain
    auto z = polynomial_roots(to_complex(trace.input));
    std::vector<BComplex> y = z;
    for (const auto& st : trace.steps) {
        for (auto& zi : y) {
            BComplex acc(0.0), p(1.0);
            for (std::size_t j = 0; j < st.b.size(); ++j) {
                acc = acc + st.b[j] * p;
                p = p * zi;
            }
            zi = acc;
        }
    }
    auto yc = polynomial_roots(trace.final_c());
    ver.root_mismatch = match_distance(y, yc);
    if (ver.root_mismatch.to_double() > root_tol) {
        ver.failed_step = static_cast<int>(trace.steps.size()) - 1;
        ver.ok = false;
        return ver;
    }
    ver.ok = true;
    return ver;
}

namespace {
nlohmann::json cvec_json(const std::vector<BComplex>& v, int digits) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& x : v) arr.push_back(x.to_string(digits));
    return arr;
}
} // namespace

std::string ReductionTrace::to_json(int digits) const {
    nlohmann::json j;
    j["schema"] = "tschirn/v1";
    nlohmann::json in = nlohmann::json::array();
    for (const auto& q : input) in.push_back(q.get_str());
    j["input"] = in;
    j["level"] = level == ReduceLevel::Bring ? "bring" : "principal";
    j["mode"] = mode == ReduceMode::Tower ? "tower" : "numeric";
    j["seed"] = seed;
    j["lines_tried"] = lines_tried;
    j["exact_zero"] = exact_zero;
    auto& steps_j = j["steps"] = nlohmann::json::array();
    for (const auto& st : steps) {
        nlohmann::json js;
        js["desc"] = st.desc;
        js["b"] = cvec_json(st.b, digits);
        js["c"] = cvec_json(st.c, digits);
        if (st.b_exact) {
            nlohmann::json eb = nlohmann::json::array();
            for (const auto& e : *st.b_exact) eb.push_back(e.to_string());
            js["b_exact"] = eb;
        }
        steps_j.push_back(js);
    }
    auto& res = j["residuals"] = nlohmann::json::array();
    for (const auto& r : residuals) res.push_back(r.to_string(6));
    return j.dump();
}

std::string TraceVerification::to_json() const {
    nlohmann::json j;
    j["schema"] = "tschirn/v1";
    j["ok"] = ok;
    j["failed_step"] = failed_step;
    j["max_step_dev"] = max_step_dev.to_string(6);
    j["max_residual"] = max_residual.to_string(6);
    j["root_mismatch"] = root_mismatch.to_string(6);
    j["oracle_checked"] = oracle_checked;
    return j.dump();
}

} // namespace tsch
