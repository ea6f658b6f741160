#ifndef TSCHIRN_TOWER_HPP
#define TSCHIRN_TOWER_HPP

#include <memory>
#include <vector>

#include <gmpxx.h>

#include "tschirn/bigfloat.hpp"

namespace tsch {

class TowerElem;

// Iterated quadratic extension Q(sqrt(r_0), sqrt(r_0 r_1 ...)): level j
// adjoins the square root of an element of the depth-j prefix. Each adjoined
// root carries a fixed numeric value (principal branch of the radicand's
// shadow), so every element has a consistent complex approximation.
class RadicalTower : public std::enable_shared_from_this<RadicalTower> {
  public:
    static std::shared_ptr<const RadicalTower> rationals();
    // new tower with sqrt(radicand) adjoined; radicand lives on this tower
    std::shared_ptr<const RadicalTower> adjoin(const TowerElem& radicand) const;

    unsigned depth() const { return static_cast<unsigned>(radicands_.size()); }
    // coords of the level-j radicand (length 2^j)
    const std::vector<mpq_class>& radicand(unsigned j) const { return radicands_[j]; }
    const BComplex& shadow(unsigned j) const { return shadows_[j]; }
    bool same_as(const RadicalTower& o) const;

  private:
    std::vector<std::vector<mpq_class>> radicands_;
    std::vector<BComplex> shadows_;
};

// Element of a radical tower: 2^depth rational coordinates in the basis of
// products of the adjoined roots. Zero coordinates mean the element is zero;
// radicands are chosen non-square at adjunction, so this is a sound check
// for the pipeline's towers.
class TowerElem {
  public:
    TowerElem() = default;
    TowerElem(std::shared_ptr<const RadicalTower> t, std::vector<mpq_class> coords);
    static TowerElem from_rational(const std::shared_ptr<const RadicalTower>& t,
                                   const mpq_class& q);
    // the root adjoined at the top level of t (depth >= 1)
    static TowerElem top_root(const std::shared_ptr<const RadicalTower>& t);

    const std::shared_ptr<const RadicalTower>& tower() const { return tower_; }
    const std::vector<mpq_class>& coords() const { return c_; }
    bool is_zero() const;
    bool is_rational() const;
    mpq_class rational_value() const; // valid when is_rational()

    TowerElem lift_to(const std::shared_ptr<const RadicalTower>& t) const;

    TowerElem operator-() const;
    friend TowerElem operator+(const TowerElem& a, const TowerElem& b);
    friend TowerElem operator-(const TowerElem& a, const TowerElem& b);
    friend TowerElem operator*(const TowerElem& a, const TowerElem& b);
    friend TowerElem operator/(const TowerElem& a, const TowerElem& b);
    TowerElem inv() const;

    BComplex numeric() const;
    std::string to_string() const;

  private:
    std::shared_ptr<const RadicalTower> tower_;
    std::vector<mpq_class> c_;
};

struct TowerOps {
    std::shared_ptr<const RadicalTower> tower;
    TowerElem zero() const { return TowerElem::from_rational(tower, 0); }
    TowerElem one() const { return TowerElem::from_rational(tower, 1); }
    TowerElem from_int(long v) const { return TowerElem::from_rational(tower, v); }
    TowerElem from_mpz(const mpz_class& v) const {
        return TowerElem::from_rational(tower, mpq_class(v));
    }
};

// true iff q is the square of a rational; sets root when so
bool rational_sqrt(const mpq_class& q, mpq_class& root);

} // namespace tsch

#endif
