#ifndef TSCHIRN_BIGFLOAT_HPP
#define TSCHIRN_BIGFLOAT_HPP

#include <string>

#include <gmpxx.h>
#include <mpfr.h>

namespace tsch {

// Working precision in bits for all numeric work. Initialized once from the
// TSCH_PRECISION environment variable (default 256, floor 64).
mpfr_prec_t working_precision();
void set_working_precision(mpfr_prec_t bits);

// Thin RAII wrapper over mpfr_t at the working precision.
class BigFloat {
  public:
    BigFloat() { mpfr_init2(v_, working_precision()); mpfr_set_zero(v_, 1); }
    BigFloat(const BigFloat& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    BigFloat(BigFloat&& o) noexcept { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_swap(v_, o.v_); }
    explicit BigFloat(double d) : BigFloat() { mpfr_set_d(v_, d, MPFR_RNDN); }
    explicit BigFloat(long i) : BigFloat() { mpfr_set_si(v_, i, MPFR_RNDN); }
    explicit BigFloat(const mpz_class& z) : BigFloat() { mpfr_set_z(v_, z.get_mpz_t(), MPFR_RNDN); }
    explicit BigFloat(const mpq_class& q) : BigFloat() { mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN); }
    ~BigFloat() { mpfr_clear(v_); }

    BigFloat& operator=(const BigFloat& o) {
        if (this != &o) mpfr_set(v_, o.v_, MPFR_RNDN);
        return *this;
    }
    BigFloat& operator=(BigFloat&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b) {
        BigFloat r;
        mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b) {
        BigFloat r;
        mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b) {
        BigFloat r;
        mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b) {
        BigFloat r;
        mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    BigFloat operator-() const {
        BigFloat r;
        mpfr_neg(r.v_, v_, MPFR_RNDN);
        return r;
    }

    BigFloat sqrt() const {
        BigFloat r;
        mpfr_sqrt(r.v_, v_, MPFR_RNDN);
        return r;
    }
    BigFloat abs() const {
        BigFloat r;
        mpfr_abs(r.v_, v_, MPFR_RNDN);
        return r;
    }

    bool operator<(const BigFloat& o) const { return mpfr_cmp(v_, o.v_) < 0; }
    bool operator>(const BigFloat& o) const { return mpfr_cmp(v_, o.v_) > 0; }
    bool operator<=(const BigFloat& o) const { return mpfr_cmp(v_, o.v_) <= 0; }
    bool operator>=(const BigFloat& o) const { return mpfr_cmp(v_, o.v_) >= 0; }
    bool is_zero() const { return mpfr_zero_p(v_); }
    int sign() const { return mpfr_sgn(v_); }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    std::string to_string(int digits = 20) const;

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

  private:
    mpfr_t v_;
};

struct CDouble {
    double re = 0, im = 0;
};

// Complex number over BigFloat (principal-branch square root).
struct BComplex {
    BigFloat re, im;

    BComplex() = default;
    BComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}
    explicit BComplex(double r, double i = 0) : re(r), im(i) {}
    explicit BComplex(const mpq_class& q) : re(q), im(0.0) {}

    friend BComplex operator+(const BComplex& a, const BComplex& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend BComplex operator-(const BComplex& a, const BComplex& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend BComplex operator*(const BComplex& a, const BComplex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend BComplex operator/(const BComplex& a, const BComplex& b) {
        BigFloat d = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
    }
    BComplex operator-() const { return {-re, -im}; }

    BigFloat abs() const;
    BComplex sqrt() const;

    CDouble to_double() const { return {re.to_double(), im.to_double()}; }
    std::string to_string(int digits = 20) const;
};

struct BComplexOps {
    BComplex zero() const { return BComplex(); }
    BComplex one() const { return BComplex(1.0); }
    BComplex from_int(long v) const { return BComplex(static_cast<double>(v)); }
    BComplex from_mpz(const mpz_class& v) const { return BComplex{BigFloat(v), BigFloat(0.0)}; }
};

} // namespace tsch

#endif
