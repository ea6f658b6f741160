#include "tschirn/quadric.hpp"

#include <stdexcept>

namespace tsch {

void QuadricForm::validate() const {
    for (const auto& row : gram)
        if (row.size() != gram.size())
            throw std::invalid_argument("quadric: gram matrix not square");
    for (std::size_t i = 0; i < gram.size(); ++i)
        for (std::size_t j = i + 1; j < gram.size(); ++j)
            if (gram[i][j] != gram[j][i])
                throw std::invalid_argument("quadric: gram matrix not symmetric");
}

mpq_class QuadricForm::eval(const std::vector<mpq_class>& x) const {
    mpq_class acc = 0;
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = 0; j < dim(); ++j) acc += gram[i][j] * x[i] * x[j];
    return acc;
}

mpq_class QuadricForm::det() const { return rational_det(gram); }

std::size_t QuadricForm::rank() const {
    auto m = gram;
    std::size_t n = m.size(), rank = 0;
    for (std::size_t col = 0; col < n && rank < n; ++col) {
        std::size_t piv = rank;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) continue;
        std::swap(m[piv], m[rank]);
        for (std::size_t i = rank + 1; i < n; ++i) {
            if (m[i][col] == 0) continue;
            mpq_class f = m[i][col] / m[rank][col];
            for (std::size_t j = col; j < n; ++j) m[i][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

mpq_class rational_det(std::vector<std::vector<mpq_class>> m) {
    std::size_t n = m.size();
    mpq_class det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t i = col + 1; i < n; ++i) {
            if (m[i][col] == 0) continue;
            mpq_class f = m[i][col] / m[col][col];
            for (std::size_t j = col; j < n; ++j) m[i][j] -= f * m[col][j];
        }
    }
    return det;
}

Diagonalization diagonalize(const QuadricForm& q) {
    q.validate();
    std::size_t n = q.dim();
    auto A = q.gram;
    std::vector<std::vector<mpq_class>> L(n, std::vector<mpq_class>(n, 0));
    for (std::size_t i = 0; i < n; ++i) L[i][i] = 1;

    // congruence column operation col_j += f * col_i, mirrored on rows and on L
    auto shear = [&](std::size_t i, std::size_t j, const mpq_class& f) {
        for (std::size_t r = 0; r < n; ++r) A[r][j] += f * A[r][i];
        for (std::size_t c = 0; c < n; ++c) A[j][c] += f * A[i][c];
        for (std::size_t r = 0; r < n; ++r) L[r][j] += f * L[r][i];
    };
    auto swap_cols = [&](std::size_t i, std::size_t j) {
        for (std::size_t r = 0; r < n; ++r) std::swap(A[r][i], A[r][j]);
        for (std::size_t c = 0; c < n; ++c) std::swap(A[i][c], A[j][c]);
        for (std::size_t r = 0; r < n; ++r) std::swap(L[r][i], L[r][j]);
    };

    for (std::size_t k = 0; k < n; ++k) {
        if (A[k][k] == 0) {
            // prefer a later nonzero diagonal entry
            std::size_t d = k + 1;
            while (d < n && A[d][d] == 0) ++d;
            if (d < n) {
                swap_cols(k, d);
            } else {
                // all-zero diagonal: bring in a hyperbolic pair if any entry is left
                std::size_t bi = n, bj = n;
                for (std::size_t i = k; i < n && bi == n; ++i)
                    for (std::size_t j = i + 1; j < n; ++j)
                        if (A[i][j] != 0) {
                            bi = i;
                            bj = j;
                            break;
                        }
                if (bi == n) break; // remaining block identically zero
                if (bi != k) swap_cols(k, bi);
                // col_k += col_bj makes A_kk = 2 A[k][bj] nonzero
                shear(bj == bi ? k : bj, k, 1);
            }
        }
        if (A[k][k] == 0) continue;
        for (std::size_t j = k + 1; j < n; ++j) {
            if (A[k][j] == 0) continue;
            shear(k, j, -A[k][j] / A[k][k]);
        }
    }
    Diagonalization d;
    d.L = L;
    d.diag.resize(n);
    for (std::size_t i = 0; i < n; ++i) d.diag[i] = A[i][i];
    return d;
}

IsotropicBasis maximal_isotropic(const QuadricForm& q, const Diagonalization& d) {
    std::size_t n = q.dim();
    for (const auto& e : d.diag)
        if (e == 0) throw std::domain_error("maximal_isotropic: degenerate quadric");
    auto tower = RadicalTower::rationals();
    struct PairRoot {
        std::size_t i, j;
        bool rational;
        mpq_class rat;
        unsigned level; // tower level when irrational
    };
    std::vector<PairRoot> pairs;
    for (std::size_t i = 0; i + 1 < n; i += 2) {
        // on the pair (i, i+1): y_i = t, y_{i+1} = 1 with d_i t^2 + d_{i+1} = 0
        mpq_class ratio = -d.diag[i + 1] / d.diag[i];
        PairRoot pr;
        pr.i = i;
        pr.j = i + 1;
        mpq_class root;
        if (rational_sqrt(ratio, root)) {
            pr.rational = true;
            pr.rat = root;
            pr.level = 0;
        } else {
            pr.rational = false;
            TowerElem rad = TowerElem::from_rational(tower, ratio);
            tower = tower->adjoin(rad);
            pr.level = tower->depth() - 1;
        }
        pairs.push_back(pr);
    }
    IsotropicBasis out;
    out.tower = tower;
    TowerOps ops{tower};
    for (const auto& pr : pairs) {
        // y-coordinates of the basis vector for this pair
        std::vector<TowerElem> y(n, ops.zero());
        if (pr.rational)
            y[pr.i] = TowerElem::from_rational(tower, pr.rat);
        else {
            // the level-pr.level root has basis index 2^level in the final tower
            std::vector<mpq_class> c(std::size_t(1) << tower->depth(), mpq_class(0));
            c[std::size_t(1) << pr.level] = 1;
            y[pr.i] = TowerElem(tower, std::move(c));
        }
        y[pr.j] = ops.one();
        // back to original coordinates: x = L y
        std::vector<TowerElem> x(n, ops.zero());
        for (std::size_t r = 0; r < n; ++r) {
            TowerElem acc = ops.zero();
            for (std::size_t c = 0; c < n; ++c) {
                if (d.L[r][c] == 0) continue;
                acc = acc + TowerElem::from_rational(tower, d.L[r][c]) * y[c];
            }
            x[r] = acc;
        }
        out.basis.push_back(std::move(x));
    }
    return out;
}

mpq_class discriminant(const std::vector<mpq_class>& a) {
    std::size_t n = a.size();
    if (n < 1) throw std::invalid_argument("discriminant: empty polynomial");
    // f = z^n + a_1 z^{n-1} + ... + a_n, f' of degree n-1
    std::vector<mpq_class> f(n + 1);
    f[0] = 1;
    for (std::size_t i = 0; i < n; ++i) f[i + 1] = a[i];
    std::vector<mpq_class> g(n);
    for (std::size_t i = 0; i < n; ++i) g[i] = f[i] * static_cast<long>(n - i);
    // Sylvester matrix of (f, g): (2n-1) x (2n-1)
    std::size_t size = 2 * n - 1;
    std::vector<std::vector<mpq_class>> s(size, std::vector<mpq_class>(size, 0));
    for (std::size_t r = 0; r + 1 < n; ++r)
        for (std::size_t c = 0; c <= n; ++c) s[r][r + c] = f[c];
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) s[n - 1 + r][r + c] = g[c];
    mpq_class res = rational_det(s);
    // disc = (-1)^{n(n-1)/2} Res(f, f') for monic f
    if (((n * (n - 1)) / 2) % 2) res = -res;
    return res;
}

} // namespace tsch
