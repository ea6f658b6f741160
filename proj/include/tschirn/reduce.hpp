#ifndef TSCHIRN_REDUCE_HPP
#define TSCHIRN_REDUCE_HPP

#include <optional>
#include <string>
#include <vector>

#include "tschirn/bigfloat.hpp"
#include "tschirn/quadric.hpp"
#include "tschirn/tower.hpp"

namespace tsch {

enum class ReduceLevel { Principal, Bring };
enum class ReduceMode { Numeric, Tower };

struct ReductionStep {
    std::string desc;
    std::vector<BComplex> b; // b_0..b_{n-1}
    std::vector<BComplex> c; // c_1..c_n after this step
    std::optional<std::vector<TowerElem>> b_exact;
    std::optional<std::vector<TowerElem>> c_exact;
};

struct ReductionTrace {
    std::vector<mpq_class> input; // a_1..a_n
    ReduceLevel level = ReduceLevel::Principal;
    ReduceMode mode = ReduceMode::Numeric;
    std::uint64_t seed = 1;
    unsigned lines_tried = 0;
    std::vector<ReductionStep> steps;
    std::vector<BigFloat> residuals; // normalized |p_k(c)| for the killed k
    bool exact_zero = false;         // tower mode: vanishing is exact

    const std::vector<BComplex>& final_c() const { return steps.back().c; }
    std::string to_json(int digits = 20) const;
};

// Kills p_1 and p_2: the T_1 hyperplane eliminates b_0 and a point on the
// T_12 quadric is produced by exact diagonalization plus one square root.
// Tower mode keeps the whole computation exact.
ReductionTrace reduce_to_principal(const std::vector<mpq_class>& a,
                                   ReduceMode mode = ReduceMode::Numeric,
                                   std::uint64_t seed = 1);

// Kills p_1, p_2, p_3 (n >= 5): a line inside a maximal isotropic of T_12 is
// intersected with the cubic T_3; the only non-rational operations are
// square roots and one univariate cubic.
ReductionTrace reduce_to_bring(const std::vector<mpq_class>& a, std::uint64_t seed = 1,
                               double tol = 1e-8);

struct TraceVerification {
    bool ok = false;
    int failed_step = -1;      // index of the first failing step, -1 if none
    BigFloat max_step_dev;     // worst |c_stored - c_recomputed|
    BigFloat max_residual;     // worst normalized residual
    BigFloat root_mismatch;    // matched root correspondence error
    bool oracle_checked = false;
    std::string to_json() const;
};

// Recomputes every step with the numeric evaluation map (and against the
// exact companion-matrix oracle when a step is rational), re-checks the
// residual power sums and the root correspondence.
TraceVerification verify_trace(const ReductionTrace& trace, double tol = 1e-8,
                               double root_tol = 1e-6);

// numeric roots of the monic polynomial with coefficients a_1..a_n
std::vector<BComplex> polynomial_roots(const std::vector<BComplex>& a);

// numeric transform: c from (a, b) through power sums
std::vector<BComplex> transform_numeric(const std::vector<BComplex>& a,
                                        const std::vector<BComplex>& b);

} // namespace tsch

#endif
