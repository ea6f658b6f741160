#ifndef TSCHIRN_FORMS_HPP
#define TSCHIRN_FORMS_HPP

#include <functional>
#include <vector>

#include "tschirn/multipoly.hpp"
#include "tschirn/newton.hpp"
#include "tschirn/scalar.hpp"

namespace tsch {

// Tschirnhaus substitution y = sum_j b_j z^j, b = (b_0, ..., b_{n-1}).
// A valid transformation needs some b_i != 0 with i > 0.
struct TschirnhausVector {
    std::vector<Scalar> b;
    std::size_t n() const { return b.size(); }
    bool primitive() const;
    static TschirnhausVector parse(const Ring& r, const std::string& text);
};

struct CompleteIntersectionSpec {
    unsigned n = 0;
    std::vector<unsigned> degrees; // strictly increasing, all >= 1
    bool reduced = false;          // additionally cut by b_0 = 0
    void validate() const;
};

// Degree-i form in b_0..b_{n-1} with coefficients in ZZ[a_1..a_n]:
//   sum_{|kappa| = i} binom(i, kappa) p_{||kappa||} b^kappa,
// homogeneous of degree i in the b block. Variable order: b's then a's.
struct TschirnhausForm {
    unsigned n = 0;
    unsigned i = 0;
    MultiPoly body;
};

enum class Pencil { XnPlusA, XnPlusAX };

TschirnhausForm tschirnhaus_form(unsigned n, unsigned i);

std::vector<TschirnhausForm> complete_intersection(const CompleteIntersectionSpec& spec);

// Streams the summands binom(i, kappa) * p_{||kappa||}(a) * b^kappa in
// descending lex order of kappa, without building the full expansion.
void stream_tschirnhaus_form(
    unsigned n, unsigned i,
    const std::function<void(const Exponents& kappa, const mpz_class& coef,
                             const MultiPoly& p_norm)>& sink);

// Specializes a form to the radical pencil x^n + a (a = (0,...,0,a)) or
// x^n + a x (a = (0,...,0,a,0)); result lives in b_0..b_{n-1} and "a".
MultiPoly radical_specialize(const TschirnhausForm& form, Pencil pencil);

// Coefficient vector of the pencil member at parameter value a.
CoeffVector pencil_coeffs(unsigned n, Pencil pencil, const Scalar& a);

// The same form with every a_i specialized to the pencil at a concrete
// parameter, over a.ring(); variables b_0..b_{n-1} (b_0 dropped if reduced).
MultiPoly form_at_pencil(unsigned n, unsigned i, Pencil pencil, const Scalar& a, bool reduced);

// Evaluation map (a, b) -> c: coefficients of prod_i (y - sum_j b_j z_i^j),
// computed through power sums. Needs 1..n invertible in the ring.
CoeffVector transform_coeffs(const CoeffVector& a, const TschirnhausVector& b);

// Independent oracle: characteristic polynomial of sum_j b_j M^j for M the
// companion matrix of a, via the division-free Berkowitz algorithm (valid in
// any characteristic). n above the cap is rejected.
CoeffVector transform_coeffs_oracle(const CoeffVector& a, const TschirnhausVector& b,
                                    unsigned cap = 8);

// b lies on T_{i_1...i_k}(a) iff p_{i_1}(c) = ... = p_{i_k}(c) = 0
bool membership(const CoeffVector& a, const TschirnhausVector& b,
                const std::vector<unsigned>& degrees);
// prefix-style variant: c_1 = ... = c_k = 0 for the listed indices
bool membership_coeff_vanishing(const CoeffVector& a, const TschirnhausVector& b,
                                const std::vector<unsigned>& degrees);

// Division-free characteristic polynomial (Berkowitz): coefficients of
// det(yI - A) as (1, c_1, ..., c_n).
std::vector<Scalar> berkowitz_char_poly(const std::vector<std::vector<Scalar>>& A);

// Gram matrix of the T_12 quadric in coordinates b_1..b_{n-1} (b_0
// eliminated along T_1): G[i][j] = p_{i+j} - p_i p_j / n.
std::vector<std::vector<Scalar>> t12_gram(const CoeffVector& a);

// Generic transformed power sums p_k(c) for k = 0..upto:
//   p_k(c) = sum_{|kappa| = k} binom(k, kappa) p_{||kappa||}(a) b^kappa
template <typename T, typename Ops>
std::vector<T> transformed_power_sums(const std::vector<T>& pa, const std::vector<T>& b,
                                      std::size_t upto, const Ops& ops) {
    std::size_t n = b.size();
    std::vector<T> out;
    out.reserve(upto + 1);
    out.push_back(ops.from_int(static_cast<long>(n)));
    for (std::size_t k = 1; k <= upto; ++k) {
        // powers b_j^e for e <= k
        std::vector<std::vector<T>> bp(n);
        for (std::size_t j = 0; j < n; ++j) {
            bp[j].reserve(k + 1);
            bp[j].push_back(ops.one());
            for (std::size_t e = 1; e <= k; ++e) bp[j].push_back(bp[j][e - 1] * b[j]);
        }
        T acc = ops.zero();
        for (CompositionIter it(n, static_cast<unsigned>(k)); it.valid(); it.next()) {
            const Exponents& kappa = it.kappa();
            std::size_t w = 0;
            for (std::size_t j = 0; j < n; ++j) w += j * kappa[j];
            T term = ops.from_mpz(multinomial(static_cast<unsigned>(k), kappa)) * pa[w];
            for (std::size_t j = 0; j < n; ++j)
                if (kappa[j]) term = term * bp[j][kappa[j]];
            acc = acc + term;
        }
        out.push_back(acc);
    }
    return out;
}

} // namespace tsch

#endif
