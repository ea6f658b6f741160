#ifndef TSCHIRN_SMOOTHNESS_HPP
#define TSCHIRN_SMOOTHNESS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "tschirn/forms.hpp"
#include "tschirn/scalar.hpp"

namespace tsch {

// One nu-orbit on {1, ..., modulus-1}: the cycle starting at its least
// element j, and the integer exponents eps(t) = (p^r nu^t(j) + modulus -
// nu^{t-1}(j)) / modulus for t = 1..s.
struct Orbit {
    std::vector<unsigned> cycle;
    std::vector<mpz_class> eps;
    std::size_t size() const { return cycle.size(); }
};

// Witness package from the generic-smoothness argument for T_{12i} with
// i = p^r + 1: the permutation nu(j) = p^{-r} j, its orbits, the exponent
// table, a bound N exceeding every contradiction exponent, and an element of
// exact order N in F_{p^m} with m = ord_N(p).
struct OrbitCertificate {
    unsigned n = 0;
    std::uint64_t p = 0;
    unsigned r = 0;
    unsigned i = 0;       // p^r + 1
    int which_case = 0;   // 1: p does not divide n, 2: p | n
    unsigned modulus = 0; // n (case 1) or n-1 (case 2)
    std::vector<unsigned> nu; // nu[j] for 1 <= j < modulus; nu[0] unused
    std::vector<Orbit> orbits;
    mpz_class max_exponent; // max_{alpha,t} |E_alpha(t)|
    mpz_class bound_N;
    unsigned witness_m = 0;
    Ring witness_ring;
    Scalar witness_a;

    Pencil pencil() const { return which_case == 1 ? Pencil::XnPlusA : Pencil::XnPlusAX; }
    bool reduced() const { return which_case == 2; }
    std::vector<unsigned> degrees() const { return {1u, 2u, i}; }
    std::string to_json() const;
};

OrbitCertificate orbit_certificate(unsigned n, std::uint64_t p, unsigned r);

// Re-derives nu and the orbits from (n, p, r), re-checks eps integrality,
// the bound, and the witness's exact order (by brute-force powering).
bool verify_certificate(const OrbitCertificate& cert);

struct SmoothnessReport {
    unsigned n = 0;
    std::vector<unsigned> degrees;
    Ring field;
    Scalar a;
    Pencil pencil = Pencil::XnPlusA;
    bool reduced = false;
    std::uint64_t points_checked = 0; // projective points enumerated
    std::uint64_t on_variety = 0;
    std::vector<std::vector<Scalar>> singular_points;
    bool smooth() const { return singular_points.empty(); }
    std::string to_json() const;
};

// Exhaustive check: enumerates P^{V-1}(F_q) (one representative per line,
// leading nonzero coordinate 1), keeps points where all pencil-specialized
// forms vanish, and reports those where the Jacobian has rank < k.
SmoothnessReport brute_force_smooth(unsigned n, const std::vector<unsigned>& degrees,
                                    const Ring& field, const Scalar& a, Pencil pencil,
                                    bool reduced, std::uint64_t budget = 10000000,
                                    unsigned threads = 0);

// The certificate's own rank test: the 2 x (modulus-1) matrix with columns
//   ( a b_w , (-a)^{eps(w)} b_{nu(w)}^{p^r} ),  w = 1..modulus-1,
// must have rank 2. `everywhere` scans all of P^{modulus-2}(F_{p^{m ext}});
// otherwise only points on the mod-p specialized intersection are tested.
struct MatrixCheckReport {
    unsigned n = 0;
    std::uint64_t p = 0;
    unsigned r = 0;
    unsigned ext = 1;
    bool everywhere = true;
    std::uint64_t points_checked = 0;
    std::uint64_t points_tested = 0; // on-variety count in variety mode
    std::vector<std::vector<Scalar>> rank_failures;
    bool full_rank() const { return rank_failures.empty(); }
    std::string to_json() const;
};

MatrixCheckReport certificate_matrix_check(const OrbitCertificate& cert, unsigned ext = 1,
                                           std::uint64_t budget = 10000000,
                                           bool everywhere = true);

// det(Gram of T_12(a)) against disc(z^n + a_1 z^{n-1} + ... + a_n) at random
// rational points: reports whether the ratio is constant, and its value.
struct DiscScalingReport {
    unsigned n = 0;
    unsigned trials = 0;
    bool constant = false;
    mpq_class ratio;
    unsigned resamples = 0;
    std::string to_json() const;
};

DiscScalingReport quadric_discriminant_scaling(unsigned n, unsigned trials,
                                               std::uint64_t seed = 1);

} // namespace tsch

#endif
