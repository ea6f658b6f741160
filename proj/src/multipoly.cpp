#include "tschirn/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include <nlohmann/json.hpp>

namespace tsch {

bool GrlexDesc::operator()(const Exponents& a, const Exponents& b) const {
    unsigned da = std::accumulate(a.begin(), a.end(), 0u);
    unsigned db = std::accumulate(b.begin(), b.end(), 0u);
    if (da != db) return da > db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

MultiPoly MultiPoly::constant(const Ring& r, std::vector<std::string> vars, const Scalar& c) {
    MultiPoly p(r, std::move(vars));
    p.add_term(Exponents(p.nvars(), 0), c);
    return p;
}

MultiPoly MultiPoly::variable(const Ring& r, std::vector<std::string> vars,
                              const std::string& name) {
    MultiPoly p(r, std::move(vars));
    auto idx = p.var_index(name);
    if (!idx) throw ring_error("unknown variable: " + name);
    Exponents e(p.nvars(), 0);
    e[*idx] = 1;
    p.add_term(e, Scalar::one(r));
    return p;
}

void MultiPoly::add_term(const Exponents& exp, const Scalar& c) {
    if (exp.size() != nvars()) throw ring_error("exponent vector has wrong length");
    if (c.ring() != ring_) throw ring_error("coefficient ring mismatch");
    if (c.is_zero()) return;
    auto it = terms_.find(exp);
    if (it == terms_.end()) {
        terms_.emplace(exp, c);
    } else {
        Scalar s = it->second + c;
        if (s.is_zero())
            terms_.erase(it);
        else
            it->second = s;
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(ring_, vars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    if (ring_ != o.ring_ || vars_ != o.vars_)
        throw ring_error("polynomial ring/variable mismatch");
    MultiPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    if (ring_ != o.ring_ || vars_ != o.vars_)
        throw ring_error("polynomial ring/variable mismatch");
    MultiPoly r(ring_, vars_);
    Exponents e(nvars());
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

MultiPoly MultiPoly::operator*(const Scalar& c) const {
    MultiPoly r(ring_, vars_);
    if (c.is_zero()) return r;
    for (const auto& [e, k] : terms_) r.add_term(e, k * c);
    return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly acc = constant(ring_, vars_, Scalar::one(ring_));
    MultiPoly base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        base = e > 1 ? base * base : base;
        e >>= 1;
    }
    return acc;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
    return ring_ == o.ring_ && vars_ == o.vars_ && terms_ == o.terms_;
}

unsigned MultiPoly::total_degree() const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0u));
    return d;
}

unsigned MultiPoly::degree_in(std::size_t var_index) const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var_index]);
    return d;
}

bool MultiPoly::homogeneous_in(std::span<const std::size_t> block, unsigned degree) const {
    for (const auto& [e, c] : terms_) {
        unsigned d = 0;
        for (auto i : block) d += e[i];
        if (d != degree) return false;
    }
    return true;
}

std::optional<std::size_t> MultiPoly::var_index(const std::string& name) const {
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - vars_.begin());
}

Scalar MultiPoly::eval(const std::map<std::string, Scalar>& assignment) const {
    std::vector<Scalar> values(nvars(), Scalar::zero(ring_));
    std::vector<bool> have(nvars(), false);
    for (const auto& [name, v] : assignment) {
        auto idx = var_index(name);
        if (!idx) continue;
        if (v.ring() != ring_) throw ring_error("assignment ring mismatch for " + name);
        values[*idx] = v;
        have[*idx] = true;
    }
    for (const auto& [e, c] : terms_)
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0 && !have[i]) throw ring_error("missing variable: " + vars_[i]);
    return eval_vec(values);
}

Scalar MultiPoly::eval_vec(std::span<const Scalar> values) const {
    if (values.size() != nvars()) throw ring_error("wrong number of values");
    Scalar acc = Scalar::zero(ring_);
    for (const auto& [e, c] : terms_) {
        Scalar t = c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            Scalar p = values[i];
            for (std::uint32_t k = 1; k < e[i]; ++k) p = p * values[i];
            t = t * p;
        }
        acc = acc + t;
    }
    return acc;
}

MultiPoly MultiPoly::partial(const std::string& var) const {
    auto idx = var_index(var);
    if (!idx) throw ring_error("unknown variable: " + var);
    MultiPoly r(ring_, vars_);
    for (const auto& [e, c] : terms_) {
        if (e[*idx] == 0) continue;
        Exponents f = e;
        f[*idx] -= 1;
        r.add_term(f, c * Scalar::from_int(ring_, e[*idx]));
    }
    return r;
}

MultiPoly MultiPoly::specialize(const Subst& subst,
                                std::optional<std::vector<std::string>> target_vars) const {
    std::vector<std::string> target;
    if (target_vars) {
        target = *target_vars;
    } else {
        for (const auto& v : vars_)
            if (!subst.count(v)) target.push_back(v);
    }
    MultiPoly result(ring_, target);
    // per-variable replacement polynomial on the target variable list
    std::vector<MultiPoly> repl;
    repl.reserve(nvars());
    for (const auto& v : vars_) {
        auto it = subst.find(v);
        if (it == subst.end()) {
            auto idx = std::find(target.begin(), target.end(), v);
            if (idx == target.end())
                throw ring_error("variable " + v + " not declared in the result");
            repl.push_back(MultiPoly::variable(ring_, target, v));
        } else if (std::holds_alternative<Scalar>(it->second)) {
            const auto& s = std::get<Scalar>(it->second);
            if (s.ring() != ring_) throw ring_error("substitution ring mismatch for " + v);
            repl.push_back(MultiPoly::constant(ring_, target, s));
        } else {
            const auto& p = std::get<MultiPoly>(it->second);
            if (p.ring() != ring_) throw ring_error("substitution ring mismatch for " + v);
            repl.push_back(p.with_vars(target));
        }
    }
    for (const auto& [e, c] : terms_) {
        MultiPoly term = MultiPoly::constant(ring_, target, c);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) term = term * repl[i].pow(e[i]);
        result = result + term;
    }
    return result;
}

MultiPoly MultiPoly::cast_to(const Ring& target) const {
    MultiPoly r(target, vars_);
    for (const auto& [e, c] : terms_) r.add_term(e, c.convert_to(target));
    return r;
}

MultiPoly MultiPoly::with_vars(const std::vector<std::string>& new_vars) const {
    MultiPoly r(ring_, new_vars);
    std::vector<std::size_t> where(nvars());
    for (std::size_t i = 0; i < nvars(); ++i) {
        auto it = std::find(new_vars.begin(), new_vars.end(), vars_[i]);
        if (it == new_vars.end()) {
            if (degree_in(i) > 0)
                throw ring_error("variable " + vars_[i] + " not declared in the result");
            where[i] = SIZE_MAX;
        } else {
            where[i] = static_cast<std::size_t>(it - new_vars.begin());
        }
    }
    for (const auto& [e, c] : terms_) {
        Exponents f(new_vars.size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i]) f[where[i]] = e[i];
        r.add_term(f, c);
    }
    return r;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        std::string cs = c.to_string();
        bool neg = !cs.empty() && cs[0] == '-';
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        if (neg) cs = cs.substr(1);
        bool has_vars = std::any_of(e.begin(), e.end(), [](auto x) { return x != 0; });
        bool coeff_is_unit = (cs == "1");
        if (!coeff_is_unit || !has_vars) os << cs;
        bool printed = !coeff_is_unit || !has_vars;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (printed) os << "*";
            os << vars_[i];
            if (e[i] > 1) os << "^" << e[i];
            printed = true;
        }
        first = false;
    }
    return os.str();
}

namespace {

// recursive-descent parser for the documented text grammar:
//   poly   := [sign] term ((`+`|`-`) term)*
//   term   := factor (`*` factor)*
//   factor := coeff | var [`^` nat]
//   coeff  := int [`/` nat]
struct Parser {
    const std::string& s;
    std::size_t i = 0;
    const Ring& ring;
    const std::vector<std::string>& vars;

    void skip() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eat(char c) {
        skip();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    std::string number() {
        skip();
        std::size_t j = i;
        if (j < s.size() && (s[j] == '-' || s[j] == '+')) ++j;
        std::size_t k = j;
        while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
        if (k == j) throw ring_error("expected number at position " + std::to_string(i));
        std::string out = s.substr(i, k - i);
        i = k;
        return out;
    }
    std::string ident() {
        skip();
        std::size_t k = i;
        while (k < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[k])) || s[k] == '_'))
            ++k;
        std::string out = s.substr(i, k - i);
        i = k;
        return out;
    }

    MultiPoly term() {
        Scalar coeff = Scalar::one(ring);
        Exponents exp(vars.size(), 0);
        bool any = false;
        for (;;) {
            skip();
            if (i >= s.size()) break;
            char c = s[i];
            if (std::isdigit(static_cast<unsigned char>(c))) {
                std::string num = number();
                if (eat('/')) num += "/" + number();
                coeff = coeff * Scalar::parse(ring, num);
                any = true;
            } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                std::string v = ident();
                auto it = std::find(vars.begin(), vars.end(), v);
                if (it == vars.end()) throw ring_error("unknown variable: " + v);
                unsigned e = 1;
                if (eat('^')) e = static_cast<unsigned>(std::stoul(number()));
                exp[static_cast<std::size_t>(it - vars.begin())] += e;
                any = true;
            } else {
                break;
            }
            if (!eat('*')) break;
        }
        if (!any) throw ring_error("empty term in polynomial text");
        MultiPoly p(ring, vars);
        p.add_term(exp, coeff);
        return p;
    }

    MultiPoly poly() {
        MultiPoly acc(ring, vars);
        skip();
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        for (;;) {
            MultiPoly t = term();
            acc = neg ? acc - t : acc + t;
            skip();
            if (eat('+'))
                neg = false;
            else if (eat('-'))
                neg = true;
            else
                break;
        }
        skip();
        if (i != s.size()) throw ring_error("trailing input in polynomial text");
        return acc;
    }
};

nlohmann::json ring_to_json(const Ring& r) {
    switch (r.kind) {
        case RingKind::Integer: return {{"kind", "int"}};
        case RingKind::Rational: return {{"kind", "rat"}};
        case RingKind::GF: return {{"kind", "gf"}, {"p", r.gf->p()}, {"m", r.gf->m()}};
    }
    return {};
}

Ring ring_from_json(const nlohmann::json& j) {
    std::string k = j.at("kind");
    if (k == "int") return Ring::ZZ();
    if (k == "rat") return Ring::QQ();
    if (k == "gf") return Ring::GFq(j.at("p").get<std::uint64_t>(), j.at("m").get<unsigned>());
    throw ring_error("bad ring kind: " + k);
}

std::string coeff_to_text(const Scalar& c) {
    if (c.ring().kind != RingKind::GF || c.ring().gf->m() == 1) return c.to_string();
    // m > 1: comma-joined residues, low degree first
    std::string out;
    const auto& e = c.as_gf();
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(e[i]);
    }
    return out;
}

Scalar coeff_from_text(const Ring& r, const std::string& t) {
    if (r.kind == RingKind::GF && r.gf->m() > 1 && t.find(',') != std::string::npos) {
        GFContext::Elem e;
        std::istringstream is(t);
        std::string part;
        while (std::getline(is, part, ',')) e.push_back(std::stoull(part));
        e.resize(r.gf->m(), 0);
        return Scalar(r, e);
    }
    return Scalar::parse(r, t);
}

} // namespace

MultiPoly MultiPoly::parse(const Ring& r, const std::vector<std::string>& vars,
                           const std::string& text) {
    Parser p{text, 0, r, vars};
    return p.poly();
}

std::string MultiPoly::to_json() const {
    nlohmann::json j;
    j["ring"] = ring_to_json(ring_);
    j["vars"] = vars_;
    auto& terms = j["terms"] = nlohmann::json::array();
    for (const auto& [e, c] : terms_)
        terms.push_back({{"exp", e}, {"coeff", coeff_to_text(c)}});
    return j.dump();
}

MultiPoly MultiPoly::from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    Ring r = ring_from_json(j.at("ring"));
    MultiPoly p(r, j.at("vars").get<std::vector<std::string>>());
    for (const auto& t : j.at("terms"))
        p.add_term(t.at("exp").get<Exponents>(),
                   coeff_from_text(r, t.at("coeff").get<std::string>()));
    return p;
}

mpz_class binomial(const mpz_class& n, unsigned long k) {
    if (n < 0) throw ring_error("binomial: negative n");
    mpz_class r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
    return r;
}

mpz_class factorial(unsigned long n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

mpz_class multinomial(unsigned i, const Exponents& kappa) {
    mpz_class r = factorial(i);
    for (auto k : kappa)
        if (k > 1) r /= factorial(k);
    return r;
}

CompositionIter::CompositionIter(std::size_t n, unsigned total)
    : k_(n, 0), total_(total), valid_(true) {
    if (n == 0) {
        valid_ = (total == 0);
        return;
    }
    k_[0] = total;
}

void CompositionIter::next() {
    // descending lex successor: take one unit from the rightmost positive
    // entry left of the last slot and push everything after it into the
    // slot directly to its right
    if (!valid_) return;
    std::size_t n = k_.size();
    std::size_t i = n;
    if (n >= 1)
        for (std::size_t j = n - 1; j-- > 0;)
            if (k_[j] > 0) {
                i = j;
                break;
            }
    if (i == n) {
        valid_ = false;
        return;
    }
    unsigned rest = 1;
    for (std::size_t j = i + 1; j < n; ++j) {
        rest += k_[j];
        k_[j] = 0;
    }
    k_[i] -= 1;
    k_[i + 1] = rest;
}

} // namespace tsch
