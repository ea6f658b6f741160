#ifndef TSCHIRN_SCALAR_HPP
#define TSCHIRN_SCALAR_HPP

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace tsch {

struct ring_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Finite field F_{p^m}. For m > 1 elements are polynomials in a generator g
// with g^m reduced by a fixed monic irreducible modulus. The modulus is the
// lexicographically least monic irreducible of degree m over F_p (constant
// term enumerated fastest), so a (p, m) pair always names the same field.
class GFContext {
  public:
    GFContext(std::uint64_t p, unsigned m);

    std::uint64_t p() const { return p_; }
    unsigned m() const { return m_; }
    // q = p^m
    const mpz_class& order() const { return order_; }
    // modulus coefficients c_0..c_m (c_m = 1); empty for m == 1
    const std::vector<std::uint64_t>& modulus() const { return modulus_; }

    using Elem = std::vector<std::uint64_t>; // length m, coeffs in [0, p)

    Elem zero() const { return Elem(m_, 0); }
    Elem one() const;
    Elem from_int(const mpz_class& v) const;
    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem inv(const Elem& a) const;
    Elem pow(const Elem& a, const mpz_class& e) const;
    bool is_zero(const Elem& a) const;
    bool is_one(const Elem& a) const;

    // multiplicative order; brute-force over the divisors of q - 1 is not
    // available in general, so this factors the given candidate order bound
    // instead.  a must satisfy a^bound = 1; returns the exact order.
    mpz_class order_dividing(const Elem& a, const mpz_class& bound) const;

    // deterministic element of exact multiplicative order N (N | q - 1)
    Elem element_of_order(const mpz_class& N) const;

    std::string to_string(const Elem& a) const;

    static bool is_prime(std::uint64_t p);

  private:
    std::uint64_t p_;
    unsigned m_;
    std::vector<std::uint64_t> modulus_;
    mpz_class order_;

    using Poly = std::vector<std::uint64_t>; // dense, coeffs in [0, p)
    Poly poly_mulmod(const Poly& a, const Poly& b) const;
    Poly poly_powp(const Poly& a) const; // a^p mod modulus
    bool irreducible(const Poly& f) const;
};

enum class RingKind { Integer, Rational, GF };

struct Ring {
    RingKind kind = RingKind::Rational;
    std::shared_ptr<const GFContext> gf; // set iff kind == GF

    static Ring ZZ() { return Ring{RingKind::Integer, nullptr}; }
    static Ring QQ() { return Ring{RingKind::Rational, nullptr}; }
    static Ring GFq(std::uint64_t p, unsigned m = 1);

    bool operator==(const Ring& o) const;
    bool operator!=(const Ring& o) const { return !(*this == o); }
    std::string name() const;
};

// Exact scalar: arbitrary-precision integer, rational (normalized, positive
// denominator), or element of F_{p^m}. Arithmetic between distinct rings is
// a hard error; use convert_to() when an embedding is intended.
class Scalar {
  public:
    Scalar() : ring_(Ring::ZZ()), v_(mpz_class(0)) {}
    explicit Scalar(mpz_class z) : ring_(Ring::ZZ()), v_(std::move(z)) {}
    explicit Scalar(mpq_class q) : ring_(Ring::QQ()), v_(std::move(q)) {
        std::get<mpq_class>(v_).canonicalize();
    }
    Scalar(Ring r, GFContext::Elem e) : ring_(std::move(r)), v_(std::move(e)) {}

    static Scalar integer(long v) { return Scalar(mpz_class(v)); }
    static Scalar rational(long num, long den);
    static Scalar zero(const Ring& r);
    static Scalar one(const Ring& r);
    static Scalar from_int(const Ring& r, const mpz_class& v);

    const Ring& ring() const { return ring_; }

    bool is_zero() const;
    bool is_one() const;

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    // division: exact in Z (error if not divisible), field division otherwise
    Scalar operator/(const Scalar& o) const;
    Scalar inv() const;
    Scalar pow(const mpz_class& e) const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    const mpz_class& as_int() const;
    const mpq_class& as_rat() const;
    const GFContext::Elem& as_gf() const;
    // numeric value for Integer/Rational scalars
    double to_double() const;

    // embeddings: Z -> Q, Z -> F_q, Q -> F_q (error if denominator not a unit)
    Scalar convert_to(const Ring& target) const;

    std::string to_string() const;
    // parses "123", "-4/7"; in a GF ring an integer literal (reduced mod p)
    static Scalar parse(const Ring& r, const std::string& text);

  private:
    Ring ring_;
    std::variant<mpz_class, mpq_class, GFContext::Elem> v_;

    void check_same(const Scalar& o) const;
};

// shared contexts so that Ring equality is cheap; one context per (p, m)
std::shared_ptr<const GFContext> gf_context(std::uint64_t p, unsigned m);

} // namespace tsch

#endif
