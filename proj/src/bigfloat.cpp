#include "tschirn/bigfloat.hpp"

#include <atomic>
#include <cstdlib>
#include <sstream>

namespace tsch {

namespace {
std::atomic<mpfr_prec_t> g_prec{0};

mpfr_prec_t init_precision() {
    const char* env = std::getenv("TSCH_PRECISION");
    long bits = 256;
    if (env) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && v > 0) bits = v;
    }
    if (bits < 64) bits = 64;
    return static_cast<mpfr_prec_t>(bits);
}
} // namespace

mpfr_prec_t working_precision() {
    mpfr_prec_t p = g_prec.load(std::memory_order_relaxed);
    if (p == 0) {
        p = init_precision();
        g_prec.store(p, std::memory_order_relaxed);
    }
    return p;
}

void set_working_precision(mpfr_prec_t bits) {
    g_prec.store(bits < 64 ? 64 : bits, std::memory_order_relaxed);
}

std::string BigFloat::to_string(int digits) const {
    std::ostringstream os;
    char* s = nullptr;
    mpfr_exp_t e;
    s = mpfr_get_str(nullptr, &e, 10, static_cast<std::size_t>(digits), v_, MPFR_RNDN);
    if (!s) return "nan";
    std::string m(s);
    mpfr_free_str(s);
    bool neg = !m.empty() && m[0] == '-';
    std::string digits_only = neg ? m.substr(1) : m;
    if (digits_only.find_first_not_of('0') == std::string::npos) return "0";
    os << (neg ? "-" : "") << digits_only[0] << "." << digits_only.substr(1) << "e"
       << (e - 1);
    return os.str();
}

BigFloat BComplex::abs() const {
    BigFloat r;
    mpfr_hypot(r.raw(), re.raw(), im.raw(), MPFR_RNDN);
    return r;
}

BComplex BComplex::sqrt() const {
    // principal branch: w = sqrt((|z| + re)/2) + i sign(im) sqrt((|z| - re)/2)
    BigFloat a = abs();
    BigFloat half(0.5);
    BigFloat wr = ((a + re) * half).sqrt();
    BigFloat wi = ((a - re) * half).sqrt();
    if (im.sign() < 0) wi = -wi;
    return {wr, wi};
}

std::string BComplex::to_string(int digits) const {
    return re.to_string(digits) + (im.sign() < 0 ? "" : "+") + im.to_string(digits) + "i";
}

} // namespace tsch
