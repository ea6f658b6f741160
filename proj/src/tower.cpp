#include "tschirn/tower.hpp"

#include <sstream>
#include <stdexcept>

namespace tsch {

namespace {

using Coords = std::vector<mpq_class>;

// recursive tower arithmetic on raw coordinate vectors; depth-d vectors have
// 2^d entries split as (lo, hi) over the depth-(d-1) subtower with top root s:
// (x0 + x1 s)(y0 + y1 s) = (x0 y0 + x1 y1 r, x0 y1 + x1 y0), r = s^2
Coords add(const Coords& a, const Coords& b) {
    Coords r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Coords sub(const Coords& a, const Coords& b) {
    Coords r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Coords neg(const Coords& a) {
    Coords r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

bool zero(const Coords& a) {
    for (const auto& q : a)
        if (q != 0) return false;
    return true;
}

Coords mul(const RadicalTower& tw, unsigned depth, const Coords& a, const Coords& b) {
    if (depth == 0) return {a[0] * b[0]};
    std::size_t h = a.size() / 2;
    Coords a0(a.begin(), a.begin() + h), a1(a.begin() + h, a.end());
    Coords b0(b.begin(), b.begin() + h), b1(b.begin() + h, b.end());
    const Coords& r = tw.radicand(depth - 1);
    Coords lo = add(mul(tw, depth - 1, a0, b0), mul(tw, depth - 1, mul(tw, depth - 1, a1, b1), r));
    Coords hi = add(mul(tw, depth - 1, a0, b1), mul(tw, depth - 1, a1, b0));
    lo.insert(lo.end(), hi.begin(), hi.end());
    return lo;
}

Coords inv(const RadicalTower& tw, unsigned depth, const Coords& a) {
    if (zero(a)) throw std::domain_error("tower: division by zero");
    if (depth == 0) return {1 / a[0]};
    std::size_t h = a.size() / 2;
    Coords a0(a.begin(), a.begin() + h), a1(a.begin() + h, a.end());
    const Coords& r = tw.radicand(depth - 1);
    // (a0 + a1 s)^{-1} = (a0 - a1 s) / (a0^2 - r a1^2)
    Coords norm = sub(mul(tw, depth - 1, a0, a0), mul(tw, depth - 1, r, mul(tw, depth - 1, a1, a1)));
    if (zero(norm))
        throw std::domain_error("tower: degenerate adjunction (zero norm)");
    Coords ni = inv(tw, depth - 1, norm);
    Coords lo = mul(tw, depth - 1, a0, ni);
    Coords hi = mul(tw, depth - 1, neg(a1), ni);
    lo.insert(lo.end(), hi.begin(), hi.end());
    return lo;
}

BComplex numeric_rec(const RadicalTower& tw, unsigned depth, const Coords& a) {
    if (depth == 0) return BComplex(mpq_class(a[0]));
    std::size_t h = a.size() / 2;
    Coords a0(a.begin(), a.begin() + h), a1(a.begin() + h, a.end());
    return numeric_rec(tw, depth - 1, a0) + numeric_rec(tw, depth - 1, a1) * tw.shadow(depth - 1);
}

} // namespace

std::shared_ptr<const RadicalTower> RadicalTower::rationals() {
    return std::shared_ptr<const RadicalTower>(new RadicalTower());
}

std::shared_ptr<const RadicalTower> RadicalTower::adjoin(const TowerElem& radicand) const {
    if (!radicand.tower()->same_as(*this))
        throw std::invalid_argument("tower: radicand lives on a different tower");
    auto t = std::shared_ptr<RadicalTower>(new RadicalTower(*this));
    t->radicands_.push_back(radicand.coords());
    t->shadows_.push_back(radicand.numeric().sqrt());
    return t;
}

bool RadicalTower::same_as(const RadicalTower& o) const {
    return radicands_ == o.radicands_;
}

TowerElem::TowerElem(std::shared_ptr<const RadicalTower> t, std::vector<mpq_class> coords)
    : tower_(std::move(t)), c_(std::move(coords)) {
    std::size_t want = std::size_t(1) << tower_->depth();
    if (c_.size() != want) throw std::invalid_argument("tower element: wrong coord count");
    for (auto& q : c_) q.canonicalize();
}

TowerElem TowerElem::from_rational(const std::shared_ptr<const RadicalTower>& t,
                                   const mpq_class& q) {
    std::vector<mpq_class> c(std::size_t(1) << t->depth(), mpq_class(0));
    c[0] = q;
    return TowerElem(t, std::move(c));
}

TowerElem TowerElem::top_root(const std::shared_ptr<const RadicalTower>& t) {
    if (t->depth() == 0) throw std::invalid_argument("tower: no adjoined root");
    std::vector<mpq_class> c(std::size_t(1) << t->depth(), mpq_class(0));
    c[c.size() / 2] = 1;
    return TowerElem(t, std::move(c));
}

bool TowerElem::is_zero() const { return zero(c_); }

bool TowerElem::is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

mpq_class TowerElem::rational_value() const {
    if (!is_rational()) throw std::domain_error("tower element is irrational");
    return c_[0];
}

TowerElem TowerElem::lift_to(const std::shared_ptr<const RadicalTower>& t) const {
    if (t->depth() < tower_->depth())
        throw std::invalid_argument("tower: cannot lift to a shallower tower");
    for (unsigned j = 0; j < tower_->depth(); ++j)
        if (t->radicand(j) != tower_->radicand(j))
            throw std::invalid_argument("tower: lift target is not an extension");
    std::vector<mpq_class> c(std::size_t(1) << t->depth(), mpq_class(0));
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] = c_[i];
    return TowerElem(t, std::move(c));
}

TowerElem TowerElem::operator-() const { return TowerElem(tower_, neg(c_)); }

TowerElem operator+(const TowerElem& a, const TowerElem& b) {
    if (!a.tower_->same_as(*b.tower_)) throw std::invalid_argument("tower mismatch");
    return TowerElem(a.tower_, add(a.c_, b.c_));
}

TowerElem operator-(const TowerElem& a, const TowerElem& b) {
    if (!a.tower_->same_as(*b.tower_)) throw std::invalid_argument("tower mismatch");
    return TowerElem(a.tower_, sub(a.c_, b.c_));
}

TowerElem operator*(const TowerElem& a, const TowerElem& b) {
    if (!a.tower_->same_as(*b.tower_)) throw std::invalid_argument("tower mismatch");
    return TowerElem(a.tower_, mul(*a.tower_, a.tower_->depth(), a.c_, b.c_));
}

TowerElem operator/(const TowerElem& a, const TowerElem& b) { return a * b.inv(); }

TowerElem TowerElem::inv() const {
    return TowerElem(tower_, tsch::inv(*tower_, tower_->depth(), c_));
}

BComplex TowerElem::numeric() const { return numeric_rec(*tower_, tower_->depth(), c_); }

std::string TowerElem::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        if (!first) os << " + ";
        os << c_[i].get_str();
        if (i) {
            os << "*";
            bool dot = false;
            for (unsigned j = 0; j < tower_->depth(); ++j)
                if (i & (std::size_t(1) << j)) {
                    if (dot) os << "*";
                    os << "s" << j;
                    dot = true;
                }
        }
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

bool rational_sqrt(const mpq_class& q, mpq_class& root) {
    if (q < 0) return false;
    mpz_class num = q.get_num(), den = q.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) && mpz_perfect_square_p(den.get_mpz_t())) {
        mpz_class rn, rd;
        mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
        mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
        root = mpq_class(rn, rd);
        root.canonicalize();
        return true;
    }
    return false;
}

} // namespace tsch
