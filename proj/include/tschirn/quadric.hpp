#ifndef TSCHIRN_QUADRIC_HPP
#define TSCHIRN_QUADRIC_HPP

#include <vector>

#include <gmpxx.h>

#include "tschirn/tower.hpp"

namespace tsch {

// Quadratic form Q(x) = x^T gram x over Q, gram symmetric.
struct QuadricForm {
    std::vector<std::vector<mpq_class>> gram;
    std::size_t dim() const { return gram.size(); }
    void validate() const;
    mpq_class eval(const std::vector<mpq_class>& x) const;
    mpq_class det() const;
    std::size_t rank() const;
};

// Invertible rational L with Q(Lx) = sum_i diag[i] x_i^2 (completing squares;
// zero diagonal pivots handled by a hyperbolic-pair shear first).
struct Diagonalization {
    std::vector<std::vector<mpq_class>> L;
    std::vector<mpq_class> diag;
};

Diagonalization diagonalize(const QuadricForm& q);

// Basis (in the original coordinates) of an isotropic subspace of dimension
// floor(dim/2), exact over a radical tower; one square root per coordinate
// pair, skipped when the ratio is a rational square.
struct IsotropicBasis {
    std::shared_ptr<const RadicalTower> tower;
    std::vector<std::vector<TowerElem>> basis; // basis[k][coord]
};

IsotropicBasis maximal_isotropic(const QuadricForm& q, const Diagonalization& d);

// Exact determinant by fraction-free-style Gaussian elimination over Q.
mpq_class rational_det(std::vector<std::vector<mpq_class>> m);

// Discriminant of the monic polynomial z^n + a_1 z^{n-1} + ... + a_n via the
// Sylvester resultant of (f, f').
mpq_class discriminant(const std::vector<mpq_class>& a);

} // namespace tsch

#endif
