#ifndef TSCHIRN_BOUNDS_HPP
#define TSCHIRN_BOUNDS_HPP

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace tsch {

// psi(d,k)_0..psi(d,k)_{d-1}:
//   psi_0 = k
//   psi_{i+1} = ceil(psi_i + binom(psi_i + d - i, psi_i) / (psi_i + 1)),  i < d-2
//   psi_{d-1} = 2 psi_{d-2} + 1
struct PsiSequence {
    unsigned d = 0;
    unsigned k = 0;
    std::vector<mpz_class> psi;
};

PsiSequence psi_sequence(unsigned d, unsigned k);

// dim of the space of degree-d hypersurfaces in P^N: binom(N+d, d) - 1
mpz_class dim_hypersurfaces(unsigned d, const mpz_class& N);

// dim of the moduli of cubic hypersurfaces in P^N: max{0, binom(N+3,3) - (N+1)^2}
mpz_class dim_moduli_cubics(const mpz_class& N);

// (r+1)(N-r) - binom(d+r, r) >= 0  (d >= 3)
bool waldron_feasible(unsigned d, unsigned r, const mpz_class& N);

// Phi(d,k) = max{ (d+k)!/d! + 1, dim_moduli_cubics(psi_{d-2}) + d + k + 1 }
mpz_class phi(unsigned d, unsigned k);

struct FwResult {
    mpz_class value;
    std::optional<std::pair<unsigned, unsigned>> minimizer; // (d, k); none for r <= 3
};

// FW(r) = r + 1 for r <= 3; otherwise 2*floor(min_{d+k+1=r} Phi(d,k) / 2) + 1,
// minimized over d >= 2, k >= 1, ties broken toward smaller d.
FwResult fw(unsigned r);

// Brauer's cutoff B(r) = (r-1)! + 1
mpz_class brauer(unsigned r);

struct LemmaDimReport {
    bool first = false;  // moduli dim dominates the hypersurface tower dims
    bool second = false; // moduli dim + d + k + 1 >= psi_{d-1} + 2
    mpz_class moduli_dim;
    mpz_class tower_max;  // 0 when the tower is empty
    mpz_class second_lhs;
    mpz_class second_rhs;
    bool holds() const { return first && second; }
};

LemmaDimReport check_lemma_dim(unsigned d, unsigned k);

struct BoundsRow {
    unsigned r = 0;
    mpz_class fw;
    std::optional<std::pair<unsigned, unsigned>> minimizer;
    mpz_class brauer;
    mpz_class prior;          // best prior bound B'(r)
    std::string prior_source; // provenance label
    mpq_class ratio;          // exact B'(r) / FW(r)
    std::string ratio_2dp;    // display rendering
};

std::vector<BoundsRow> bounds_table(unsigned r_max);

std::string render_table(const std::vector<BoundsRow>& rows, const std::string& format);

// Historical cutoffs, stored as reference data only.
struct ReferenceConstants {
    // H(4)..H(9)
    static const std::vector<mpz_class>& hamilton();
    // S(4)..S(7)
    static const std::vector<mpz_class>& sylvester();
};

// Exploratory: least k <= k_max such that (d+k)!/d! + 1 = Phi(d,k) and
// Phi(d,k) <= Phi(d-1,k+1) both hold from k through k_max. No contractual
// output; mirrors the rho of the asymptotic comparison argument.
std::optional<unsigned> rho_search(unsigned d, unsigned k_max);

} // namespace tsch

#endif
