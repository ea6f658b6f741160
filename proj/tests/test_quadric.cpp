#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "tschirn/forms.hpp"
#include "tschirn/quadric.hpp"

using namespace tsch;

namespace {

QuadricForm make(const std::vector<std::vector<long>>& m) {
    QuadricForm q;
    for (const auto& row : m) {
        std::vector<mpq_class> r;
        for (long x : row) r.emplace_back(x);
        q.gram.push_back(std::move(r));
    }
    return q;
}

void check_diag_exact(const QuadricForm& q, const Diagonalization& d) {
    // L^T G L must be exactly diagonal with the reported entries
    std::size_t n = q.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            mpq_class acc = 0;
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t c = 0; c < n; ++c)
                    acc += d.L[r][i] * q.gram[r][c] * d.L[c][j];
            if (i == j)
                CHECK(acc == d.diag[i]);
            else
                CHECK(acc == 0);
        }
}

} // namespace

TEST_CASE("hyperbolic plane xy diagonalizes to opposite-sign squares") {
    QuadricForm q = make({{0, 1}, {1, 0}}); // Q = 2xy as a bilinear form
    auto d = diagonalize(q);
    check_diag_exact(q, d);
    CHECK(d.diag[0] * d.diag[1] < 0);
    mpq_class ratio = -d.diag[1] / d.diag[0], root;
    CHECK(rational_sqrt(ratio, root)); // split off a rational isotropic
}

TEST_CASE("already diagonal is the identity transform") {
    QuadricForm q = make({{2, 0}, {0, -3}});
    auto d = diagonalize(q);
    CHECK(d.L == std::vector<std::vector<mpq_class>>{{1, 0}, {0, 1}});
    CHECK(d.diag == std::vector<mpq_class>{2, -3});
}

TEST_CASE("degenerate forms report zero diagonal entries") {
    QuadricForm q = make({{1, 1}, {1, 1}}); // rank 1
    auto d = diagonalize(q);
    check_diag_exact(q, d);
    int zeros = 0;
    for (const auto& x : d.diag)
        if (x == 0) ++zeros;
    CHECK(zeros == 1);
    CHECK(q.rank() == 1);
}

TEST_CASE("random symmetric matrices diagonalize exactly") {
    std::mt19937_64 rng(53);
    std::uniform_int_distribution<long> d(-9, 9);
    for (int iter = 0; iter < 40; ++iter) {
        std::size_t n = 2 + (iter % 5);
        QuadricForm q;
        q.gram.assign(n, std::vector<mpq_class>(n, 0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) {
                mpq_class v(d(rng), 1 + (iter % 3));
                v.canonicalize();
                q.gram[i][j] = v;
                q.gram[j][i] = v;
            }
        auto di = diagonalize(q);
        check_diag_exact(q, di);
        // L invertible
        CHECK(rational_det(di.L) != 0);
    }
}

TEST_CASE("T_12 Gram on the n = 5 radical pencil splits into two hyperbolic planes") {
    // a = (0,0,0,0,a) with a = 1: quadric -10(b_1 b_4 + b_2 b_3), rank 4
    std::vector<mpq_class> a{0, 0, 0, 0, 1};
    CoeffVector cv;
    for (const auto& q : a) cv.a.push_back(Scalar(mpq_class(q)));
    auto G = t12_gram(cv);
    QuadricForm q;
    q.gram.assign(4, std::vector<mpq_class>(4, 0));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) q.gram[i][j] = G[i][j].as_rat();
    CHECK(q.rank() == 4);
    auto d = diagonalize(q);
    check_diag_exact(q, d);
    // signature (2, 2): two positive, two negative entries up to squares
    int pos = 0, neg = 0;
    for (const auto& x : d.diag) (x > 0 ? pos : neg)++;
    CHECK(pos == 2);
    CHECK(neg == 2);
}

TEST_CASE("isotropic basis: diag(1,1) needs sqrt(-1), diag(1,-1) stays rational") {
    QuadricForm q1 = make({{1, 0}, {0, 1}});
    auto d1 = diagonalize(q1);
    auto iso1 = maximal_isotropic(q1, d1);
    REQUIRE(iso1.basis.size() == 1);
    CHECK(iso1.tower->depth() == 1); // adjoined sqrt(-1)
    // Q vanishes exactly on the basis vector
    TowerOps ops{iso1.tower};
    TowerElem acc = ops.zero();
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            acc = acc + TowerElem::from_rational(iso1.tower, q1.gram[i][j]) * iso1.basis[0][i] *
                            iso1.basis[0][j];
    CHECK(acc.is_zero());

    QuadricForm q2 = make({{1, 0}, {0, -1}});
    auto d2 = diagonalize(q2);
    auto iso2 = maximal_isotropic(q2, d2);
    CHECK(iso2.tower->depth() == 0); // (1, 1) is rational
    CHECK(iso2.basis[0][0].is_rational());
}

TEST_CASE("isotropy is exact over the tower for the n = 5 pencil quadric") {
    std::vector<mpq_class> a{0, 0, 0, 0, 1};
    CoeffVector cv;
    for (const auto& q : a) cv.a.push_back(Scalar(mpq_class(q)));
    auto G = t12_gram(cv);
    QuadricForm q;
    q.gram.assign(4, std::vector<mpq_class>(4, 0));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) q.gram[i][j] = G[i][j].as_rat();
    auto d = diagonalize(q);
    auto iso = maximal_isotropic(q, d);
    REQUIRE(iso.basis.size() == 2);
    TowerOps ops{iso.tower};
    // Q vanishes on every basis vector and on pairwise sums
    auto evalQ = [&](const std::vector<TowerElem>& v) {
        TowerElem acc = ops.zero();
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j)
                acc = acc + TowerElem::from_rational(iso.tower, q.gram[i][j]) * v[i] * v[j];
        return acc;
    };
    for (const auto& v : iso.basis) CHECK(evalQ(v).is_zero());
    std::vector<TowerElem> sum;
    for (std::size_t i = 0; i < 4; ++i) sum.push_back(iso.basis[0][i] + iso.basis[1][i]);
    CHECK(evalQ(sum).is_zero());
    // numeric shadows agree
    for (const auto& v : iso.basis) {
        BComplex acc(0.0);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j)
                acc = acc + BComplex(q.gram[i][j]) * v[i].numeric() * v[j].numeric();
        CHECK(acc.abs().to_double() < 1e-60);
    }
}

TEST_CASE("tower arithmetic basics") {
    auto t0 = RadicalTower::rationals();
    auto t1 = t0->adjoin(TowerElem::from_rational(t0, 2)); // sqrt(2)
    TowerElem s = TowerElem::top_root(t1);
    CHECK((s * s).rational_value() == 2);
    TowerElem x = TowerElem::from_rational(t1, 3) + s;
    TowerElem y = x.inv();
    CHECK((x * y - TowerElem::from_rational(t1, 1)).is_zero());
    // nested: adjoin sqrt(1 + sqrt(2))
    auto t2 = t1->adjoin(x);
    TowerElem u = TowerElem::top_root(t2);
    CHECK((u * u - x.lift_to(t2)).is_zero());
    double approx = u.numeric().re.to_double();
    CHECK(approx == doctest::Approx(std::sqrt(3 + std::sqrt(2.0))).epsilon(1e-12));
}

TEST_CASE("discriminants of classic polynomials") {
    // z^2 + bz + c: disc = b^2 - 4c
    CHECK(discriminant({3, 1}) == 5);
    // z^3 + pz + q: disc = -4p^3 - 27 q^2
    CHECK(discriminant({0, -1, 1}) == -23);
    CHECK(discriminant({0, 0, 1}) == -27);
    // repeated root
    CHECK(discriminant({-2, 1, 0}) == 0);
}
