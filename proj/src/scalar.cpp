#include "tschirn/scalar.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace tsch {

bool GFContext::is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

GFContext::GFContext(std::uint64_t p, unsigned m) : p_(p), m_(m) {
    if (!is_prime(p)) throw ring_error("GF: p = " + std::to_string(p) + " is not prime");
    if (p >= (1ull << 31)) throw ring_error("GF: p too large (need p < 2^31)");
    if (m == 0) throw ring_error("GF: m must be >= 1");
    mpz_ui_pow_ui(order_.get_mpz_t(), p, m);
    if (m_ > 1) {
        // least monic irreducible of degree m, constant coefficient fastest
        Poly f(m_ + 1, 0);
        f[m_] = 1;
        mpz_class counter = 1; // c_0 = 0 would be divisible by x
        for (;; ++counter) {
            mpz_class rem = counter;
            for (unsigned i = 0; i < m_; ++i) {
                mpz_class digit = rem % p;
                f[i] = digit.get_ui();
                rem /= p;
            }
            if (rem != 0) throw ring_error("GF: no irreducible modulus found");
            if (f[0] != 0 && irreducible(f)) break;
        }
        modulus_ = f;
    }
}

GFContext::Elem GFContext::one() const {
    Elem e(m_, 0);
    e[0] = 1;
    return e;
}

GFContext::Elem GFContext::from_int(const mpz_class& v) const {
    mpz_class r = v % static_cast<unsigned long>(p_);
    if (r < 0) r += static_cast<unsigned long>(p_);
    Elem e(m_, 0);
    e[0] = r.get_ui();
    return e;
}

GFContext::Elem GFContext::add(const Elem& a, const Elem& b) const {
    Elem e(m_);
    for (unsigned i = 0; i < m_; ++i) {
        std::uint64_t s = a[i] + b[i];
        e[i] = s >= p_ ? s - p_ : s;
    }
    return e;
}

GFContext::Elem GFContext::sub(const Elem& a, const Elem& b) const {
    Elem e(m_);
    for (unsigned i = 0; i < m_; ++i) e[i] = a[i] >= b[i] ? a[i] - b[i] : a[i] + p_ - b[i];
    return e;
}

GFContext::Elem GFContext::neg(const Elem& a) const { return sub(zero(), a); }

GFContext::Poly GFContext::poly_mulmod(const Poly& a, const Poly& b) const {
    // schoolbook product of elements (degree < m) reduced by the modulus
    std::vector<std::uint64_t> prod(2 * m_ - 1, 0);
    for (unsigned i = 0; i < m_; ++i) {
        if (i >= a.size() || a[i] == 0) continue;
        for (unsigned j = 0; j < m_; ++j) {
            if (j >= b.size() || b[j] == 0) continue;
            prod[i + j] = (prod[i + j] + a[i] * b[j]) % p_;
        }
    }
    for (unsigned d = 2 * m_ - 2; d >= m_; --d) {
        std::uint64_t c = prod[d];
        if (c) {
            prod[d] = 0;
            for (unsigned i = 0; i < m_; ++i) {
                std::uint64_t t = (c * (p_ - modulus_[i])) % p_;
                prod[d - m_ + i] = (prod[d - m_ + i] + t) % p_;
            }
        }
        if (d == m_) break;
    }
    prod.resize(m_);
    return prod;
}

GFContext::Elem GFContext::mul(const Elem& a, const Elem& b) const {
    if (m_ == 1) return Elem{(a[0] * b[0]) % p_};
    return poly_mulmod(a, b);
}

GFContext::Elem GFContext::pow(const Elem& a, const mpz_class& e) const {
    if (e < 0) return pow(inv(a), -e);
    Elem base = a, acc = one();
    mpz_class k = e;
    while (k != 0) {
        if (mpz_odd_p(k.get_mpz_t())) acc = mul(acc, base);
        base = mul(base, base);
        k >>= 1;
    }
    return acc;
}

GFContext::Elem GFContext::inv(const Elem& a) const {
    if (is_zero(a)) throw ring_error("GF: division by zero");
    return pow(a, order_ - 2);
}

bool GFContext::is_zero(const Elem& a) const {
    return std::all_of(a.begin(), a.end(), [](std::uint64_t c) { return c == 0; });
}

bool GFContext::is_one(const Elem& a) const {
    if (a[0] != 1) return false;
    for (unsigned i = 1; i < m_; ++i)
        if (a[i] != 0) return false;
    return true;
}

GFContext::Poly GFContext::poly_powp(const Poly& a) const {
    Poly acc{1};
    acc.resize(m_, 0);
    Poly base = a;
    base.resize(m_, 0);
    std::uint64_t k = p_;
    while (k) {
        if (k & 1) acc = poly_mulmod(acc, base);
        base = poly_mulmod(base, base);
        k >>= 1;
    }
    return acc;
}

bool GFContext::irreducible(const Poly& f) const {
    // x^{p^m} == x mod f, and x^{p^{m/l}} != x for prime l | m
    const unsigned m = m_;
    auto frob = [&](const Poly& a) {
        // a^p mod f using the candidate modulus f (not modulus_, unset yet)
        Poly acc{1}, base = a;
        std::uint64_t k = p_;
        auto mulf = [&](const Poly& x, const Poly& y) {
            std::vector<std::uint64_t> prod(2 * m - 1, 0);
            for (unsigned i = 0; i < m; ++i) {
                if (i >= x.size() || x[i] == 0) continue;
                for (unsigned j = 0; j < m; ++j) {
                    if (j >= y.size() || y[j] == 0) continue;
                    prod[i + j] = (prod[i + j] + x[i] * y[j]) % p_;
                }
            }
            if (m >= 2)
                for (unsigned d = 2 * m - 2; d >= m; --d) {
                    std::uint64_t c = prod[d];
                    if (c) {
                        prod[d] = 0;
                        for (unsigned i = 0; i < m; ++i) {
                            std::uint64_t t = (c * (p_ - f[i])) % p_;
                            prod[d - m + i] = (prod[d - m + i] + t) % p_;
                        }
                    }
                    if (d == m) break;
                }
            prod.resize(m);
            return Poly(prod.begin(), prod.end());
        };
        acc.resize(m, 0);
        base.resize(m, 0);
        while (k) {
            if (k & 1) acc = mulf(acc, base);
            base = mulf(base, base);
            k >>= 1;
        }
        return acc;
    };
    Poly x(m, 0);
    if (m == 1) return true;
    x[1] = 1;
    // iterate Frobenius: x -> x^p
    Poly cur = x;
    std::vector<Poly> frobs(m + 1);
    frobs[0] = x;
    for (unsigned i = 1; i <= m; ++i) {
        cur = frob(cur);
        frobs[i] = cur;
    }
    if (frobs[m] != x) return false;
    for (unsigned l = 2; l <= m; ++l) {
        if (m % l) continue;
        bool lp = true;
        for (unsigned d = 2; d * d <= l; ++d)
            if (l % d == 0) lp = false;
        if (!lp) continue;
        if (frobs[m / l] == x) return false;
    }
    return true;
}

mpz_class GFContext::order_dividing(const Elem& a, const mpz_class& bound) const {
    if (is_zero(a)) throw ring_error("GF: zero has no multiplicative order");
    if (!is_one(pow(a, bound))) throw ring_error("GF: order does not divide bound");
    // strip each prime factor of bound as far as possible
    mpz_class ord = bound, n = bound;
    for (mpz_class f = 2; f * f <= n; ++f) {
        while (n % f == 0) {
            n /= f;
            while (ord % f == 0 && is_one(pow(a, ord / f))) ord /= f;
        }
    }
    if (n > 1)
        while (ord % n == 0 && is_one(pow(a, ord / n))) ord /= n;
    return ord;
}

GFContext::Elem GFContext::element_of_order(const mpz_class& N) const {
    if ((order_ - 1) % N != 0) throw ring_error("GF: N does not divide q - 1");
    mpz_class cof = (order_ - 1) / N;
    // prime factors of N (N is small in all uses)
    std::vector<mpz_class> pf;
    mpz_class n = N;
    for (mpz_class f = 2; f * f <= n; ++f)
        if (n % f == 0) {
            pf.push_back(f);
            while (n % f == 0) n /= f;
        }
    if (n > 1) pf.push_back(n);
    // deterministic scan over field elements in base-p digit order
    for (mpz_class idx = 1; idx < order_; ++idx) {
        Elem g(m_, 0);
        mpz_class rem = idx;
        for (unsigned d = 0; d < m_; ++d) {
            mpz_class digit = rem % p_;
            g[d] = digit.get_ui();
            rem /= p_;
        }
        Elem a = pow(g, cof);
        if (is_one(a)) continue;
        bool ok = true;
        for (const auto& f : pf)
            if (is_one(pow(a, N / f))) {
                ok = false;
                break;
            }
        if (ok) return a;
    }
    throw ring_error("GF: no element of order " + N.get_str() + " found");
}

std::string GFContext::to_string(const Elem& a) const {
    if (m_ == 1) return std::to_string(a[0]);
    std::ostringstream os;
    bool first = true;
    for (unsigned i = 0; i < m_; ++i) {
        if (a[i] == 0) continue;
        if (!first) os << "+";
        if (a[i] != 1 || i == 0) os << a[i];
        if (i > 0) {
            if (a[i] != 1) os << "*";
            os << "g";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

namespace {
std::map<std::pair<std::uint64_t, unsigned>, std::shared_ptr<const GFContext>> g_gf_cache;
std::mutex g_gf_mutex;
} // namespace

std::shared_ptr<const GFContext> gf_context(std::uint64_t p, unsigned m) {
    std::lock_guard<std::mutex> lock(g_gf_mutex);
    auto key = std::make_pair(p, m);
    auto it = g_gf_cache.find(key);
    if (it != g_gf_cache.end()) return it->second;
    auto ctx = std::make_shared<const GFContext>(p, m);
    g_gf_cache[key] = ctx;
    return ctx;
}

Ring Ring::GFq(std::uint64_t p, unsigned m) { return Ring{RingKind::GF, gf_context(p, m)}; }

bool Ring::operator==(const Ring& o) const {
    if (kind != o.kind) return false;
    if (kind != RingKind::GF) return true;
    return gf->p() == o.gf->p() && gf->m() == o.gf->m();
}

std::string Ring::name() const {
    switch (kind) {
        case RingKind::Integer: return "ZZ";
        case RingKind::Rational: return "QQ";
        case RingKind::GF:
            if (gf->m() == 1) return "GF(" + std::to_string(gf->p()) + ")";
            return "GF(" + std::to_string(gf->p()) + "^" + std::to_string(gf->m()) + ")";
    }
    return "?";
}

Scalar Scalar::rational(long num, long den) {
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(q);
}

Scalar Scalar::zero(const Ring& r) {
    switch (r.kind) {
        case RingKind::Integer: return Scalar(mpz_class(0));
        case RingKind::Rational: return Scalar(mpq_class(0));
        case RingKind::GF: return Scalar(r, r.gf->zero());
    }
    throw ring_error("bad ring");
}

Scalar Scalar::one(const Ring& r) { return from_int(r, 1); }

Scalar Scalar::from_int(const Ring& r, const mpz_class& v) {
    switch (r.kind) {
        case RingKind::Integer: return Scalar(v);
        case RingKind::Rational: return Scalar(mpq_class(v));
        case RingKind::GF: return Scalar(r, r.gf->from_int(v));
    }
    throw ring_error("bad ring");
}

void Scalar::check_same(const Scalar& o) const {
    if (ring_ != o.ring_)
        throw ring_error("ring mismatch: " + ring_.name() + " vs " + o.ring_.name());
}

bool Scalar::is_zero() const {
    switch (ring_.kind) {
        case RingKind::Integer: return std::get<mpz_class>(v_) == 0;
        case RingKind::Rational: return std::get<mpq_class>(v_) == 0;
        case RingKind::GF: return ring_.gf->is_zero(std::get<GFContext::Elem>(v_));
    }
    return false;
}

bool Scalar::is_one() const {
    switch (ring_.kind) {
        case RingKind::Integer: return std::get<mpz_class>(v_) == 1;
        case RingKind::Rational: return std::get<mpq_class>(v_) == 1;
        case RingKind::GF: return ring_.gf->is_one(std::get<GFContext::Elem>(v_));
    }
    return false;
}

Scalar Scalar::operator-() const {
    switch (ring_.kind) {
        case RingKind::Integer: return Scalar(mpz_class(-std::get<mpz_class>(v_)));
        case RingKind::Rational: return Scalar(mpq_class(-std::get<mpq_class>(v_)));
        case RingKind::GF: return Scalar(ring_, ring_.gf->neg(std::get<GFContext::Elem>(v_)));
    }
    throw ring_error("bad ring");
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same(o);
    switch (ring_.kind) {
        case RingKind::Integer:
            return Scalar(mpz_class(std::get<mpz_class>(v_) + std::get<mpz_class>(o.v_)));
        case RingKind::Rational:
            return Scalar(mpq_class(std::get<mpq_class>(v_) + std::get<mpq_class>(o.v_)));
        case RingKind::GF:
            return Scalar(ring_, ring_.gf->add(std::get<GFContext::Elem>(v_),
                                               std::get<GFContext::Elem>(o.v_)));
    }
    throw ring_error("bad ring");
}

Scalar Scalar::operator-(const Scalar& o) const {
    check_same(o);
    switch (ring_.kind) {
        case RingKind::Integer:
            return Scalar(mpz_class(std::get<mpz_class>(v_) - std::get<mpz_class>(o.v_)));
        case RingKind::Rational:
            return Scalar(mpq_class(std::get<mpq_class>(v_) - std::get<mpq_class>(o.v_)));
        case RingKind::GF:
            return Scalar(ring_, ring_.gf->sub(std::get<GFContext::Elem>(v_),
                                               std::get<GFContext::Elem>(o.v_)));
    }
    throw ring_error("bad ring");
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_same(o);
    switch (ring_.kind) {
        case RingKind::Integer:
            return Scalar(mpz_class(std::get<mpz_class>(v_) * std::get<mpz_class>(o.v_)));
        case RingKind::Rational:
            return Scalar(mpq_class(std::get<mpq_class>(v_) * std::get<mpq_class>(o.v_)));
        case RingKind::GF:
            return Scalar(ring_, ring_.gf->mul(std::get<GFContext::Elem>(v_),
                                               std::get<GFContext::Elem>(o.v_)));
    }
    throw ring_error("bad ring");
}

Scalar Scalar::operator/(const Scalar& o) const {
    check_same(o);
    if (o.is_zero()) throw ring_error("division by zero");
    switch (ring_.kind) {
        case RingKind::Integer: {
            const auto& a = std::get<mpz_class>(v_);
            const auto& b = std::get<mpz_class>(o.v_);
            if (a % b != 0) throw ring_error("inexact integer division");
            return Scalar(mpz_class(a / b));
        }
        case RingKind::Rational:
            return Scalar(mpq_class(std::get<mpq_class>(v_) / std::get<mpq_class>(o.v_)));
        case RingKind::GF:
            return *this * o.inv();
    }
    throw ring_error("bad ring");
}

Scalar Scalar::inv() const {
    if (is_zero()) throw ring_error("division by zero");
    switch (ring_.kind) {
        case RingKind::Integer: {
            const auto& a = std::get<mpz_class>(v_);
            if (a == 1 || a == -1) return *this;
            throw ring_error("non-unit in ZZ");
        }
        case RingKind::Rational:
            return Scalar(mpq_class(1 / std::get<mpq_class>(v_)));
        case RingKind::GF:
            return Scalar(ring_, ring_.gf->inv(std::get<GFContext::Elem>(v_)));
    }
    throw ring_error("bad ring");
}

Scalar Scalar::pow(const mpz_class& e) const {
    if (e < 0) return inv().pow(-e);
    if (ring_.kind == RingKind::GF)
        return Scalar(ring_, ring_.gf->pow(std::get<GFContext::Elem>(v_), e));
    Scalar acc = one(ring_), base = *this;
    mpz_class k = e;
    while (k != 0) {
        if (mpz_odd_p(k.get_mpz_t())) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

bool Scalar::operator==(const Scalar& o) const {
    if (ring_ != o.ring_) return false;
    return v_ == o.v_;
}

const mpz_class& Scalar::as_int() const {
    if (ring_.kind != RingKind::Integer) throw ring_error("not an integer scalar");
    return std::get<mpz_class>(v_);
}

const mpq_class& Scalar::as_rat() const {
    if (ring_.kind != RingKind::Rational) throw ring_error("not a rational scalar");
    return std::get<mpq_class>(v_);
}

const GFContext::Elem& Scalar::as_gf() const {
    if (ring_.kind != RingKind::GF) throw ring_error("not a finite-field scalar");
    return std::get<GFContext::Elem>(v_);
}

double Scalar::to_double() const {
    switch (ring_.kind) {
        case RingKind::Integer: return std::get<mpz_class>(v_).get_d();
        case RingKind::Rational: return std::get<mpq_class>(v_).get_d();
        default: throw ring_error("no real value for finite-field scalar");
    }
}

Scalar Scalar::convert_to(const Ring& target) const {
    if (ring_ == target) return *this;
    switch (ring_.kind) {
        case RingKind::Integer: {
            const auto& z = std::get<mpz_class>(v_);
            if (target.kind == RingKind::Rational) return Scalar(mpq_class(z));
            if (target.kind == RingKind::GF) return Scalar(target, target.gf->from_int(z));
            break;
        }
        case RingKind::Rational: {
            const auto& q = std::get<mpq_class>(v_);
            if (target.kind == RingKind::GF) {
                Scalar num(target, target.gf->from_int(q.get_num()));
                Scalar den(target, target.gf->from_int(q.get_den()));
                return num / den;
            }
            if (target.kind == RingKind::Integer) {
                if (q.get_den() != 1) throw ring_error("rational is not an integer");
                return Scalar(mpz_class(q.get_num()));
            }
            break;
        }
        default: break;
    }
    throw ring_error("no embedding " + ring_.name() + " -> " + target.name());
}

std::string Scalar::to_string() const {
    switch (ring_.kind) {
        case RingKind::Integer: return std::get<mpz_class>(v_).get_str();
        case RingKind::Rational: {
            const auto& q = std::get<mpq_class>(v_);
            if (q.get_den() == 1) return q.get_num().get_str();
            return q.get_num().get_str() + "/" + q.get_den().get_str();
        }
        case RingKind::GF: return ring_.gf->to_string(std::get<GFContext::Elem>(v_));
    }
    return "?";
}

Scalar Scalar::parse(const Ring& r, const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) {
        mpz_class z;
        if (z.set_str(text, 10) != 0) throw ring_error("bad scalar literal: " + text);
        return from_int(r, z);
    }
    mpz_class num, den;
    if (num.set_str(text.substr(0, slash), 10) != 0 ||
        den.set_str(text.substr(slash + 1), 10) != 0 || den == 0)
        throw ring_error("bad scalar literal: " + text);
    if (r.kind == RingKind::Rational) {
        mpq_class q(num, den);
        q.canonicalize();
        return Scalar(q);
    }
    return from_int(r, num) / from_int(r, den);
}

} // namespace tsch
