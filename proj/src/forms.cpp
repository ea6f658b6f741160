#include "tschirn/forms.hpp"

#include <algorithm>

namespace tsch {

bool TschirnhausVector::primitive() const {
    for (std::size_t i = 1; i < b.size(); ++i)
        if (!b[i].is_zero()) return true;
    return false;
}

TschirnhausVector TschirnhausVector::parse(const Ring& r, const std::string& text) {
    auto cv = CoeffVector::parse(r, text);
    return TschirnhausVector{std::move(cv.a)};
}

void CompleteIntersectionSpec::validate() const {
    if (n < 1) throw ring_error("complete intersection: need n >= 1");
    if (degrees.empty()) throw ring_error("complete intersection: no degrees");
    for (std::size_t i = 0; i < degrees.size(); ++i) {
        if (degrees[i] < 1) throw ring_error("complete intersection: degree < 1");
        if (i && degrees[i] <= degrees[i - 1])
            throw ring_error("complete intersection: degrees must be strictly increasing");
    }
}

namespace {

std::vector<std::string> joint_var_names(std::size_t n) {
    auto vars = b_var_names(n);
    auto av = a_var_names(n);
    vars.insert(vars.end(), av.begin(), av.end());
    return vars;
}

} // namespace

TschirnhausForm tschirnhaus_form(unsigned n, unsigned i) {
    if (n < 1 || i < 1) throw ring_error("tschirnhaus_form: need n, i >= 1");
    Ring zz = Ring::ZZ();
    auto vars = joint_var_names(n);
    auto psums = symbolic_power_sums(n, static_cast<std::size_t>(i) * (n - 1));
    MultiPoly body(zz, vars);
    for (CompositionIter it(n, i); it.valid(); it.next()) {
        const Exponents& kappa = it.kappa();
        std::size_t w = 0;
        for (std::size_t j = 0; j < n; ++j) w += j * kappa[j];
        Scalar coef(multinomial(i, kappa));
        // binom(i, kappa) * p_w(a) * b^kappa, merged into the joint variables
        for (const auto& [ae, ac] : psums[w].terms()) {
            Exponents e(vars.size(), 0);
            for (std::size_t j = 0; j < n; ++j) e[j] = kappa[j];
            for (std::size_t j = 0; j < n; ++j) e[n + j] = ae[j];
            body.add_term(e, ac * coef);
        }
    }
    return TschirnhausForm{n, i, std::move(body)};
}

std::vector<TschirnhausForm> complete_intersection(const CompleteIntersectionSpec& spec) {
    spec.validate();
    std::vector<TschirnhausForm> forms;
    forms.reserve(spec.degrees.size());
    for (unsigned d : spec.degrees) {
        TschirnhausForm f = tschirnhaus_form(spec.n, d);
        if (spec.reduced) {
            MultiPoly::Subst s{{"b_0", Scalar::zero(Ring::ZZ())}};
            f.body = f.body.specialize(s, f.body.vars());
        }
        forms.push_back(std::move(f));
    }
    return forms;
}

void stream_tschirnhaus_form(
    unsigned n, unsigned i,
    const std::function<void(const Exponents&, const mpz_class&, const MultiPoly&)>& sink) {
    if (n < 1 || i < 1) throw ring_error("tschirnhaus_form: need n, i >= 1");
    auto psums = symbolic_power_sums(n, static_cast<std::size_t>(i) * (n - 1));
    for (CompositionIter it(n, i); it.valid(); it.next()) {
        const Exponents& kappa = it.kappa();
        std::size_t w = 0;
        for (std::size_t j = 0; j < n; ++j) w += j * kappa[j];
        sink(kappa, multinomial(i, kappa), psums[w]);
    }
}

MultiPoly radical_specialize(const TschirnhausForm& form, Pencil pencil) {
    auto vars = b_var_names(form.n);
    vars.push_back("a");
    Ring zz = Ring::ZZ();
    MultiPoly a_poly = MultiPoly::variable(zz, vars, "a");
    MultiPoly::Subst subst;
    unsigned keep = pencil == Pencil::XnPlusA ? form.n : form.n - 1;
    for (unsigned j = 1; j <= form.n; ++j) {
        std::string name = "a_" + std::to_string(j);
        if (j == keep)
            subst.emplace(name, a_poly);
        else
            subst.emplace(name, Scalar::zero(zz));
    }
    return form.body.specialize(subst, vars);
}

CoeffVector pencil_coeffs(unsigned n, Pencil pencil, const Scalar& a) {
    CoeffVector cv;
    cv.a.assign(n, Scalar::zero(a.ring()));
    if (pencil == Pencil::XnPlusA)
        cv.a[n - 1] = a;
    else {
        if (n < 2) throw ring_error("pencil x^n + a*x needs n >= 2");
        cv.a[n - 2] = a;
    }
    return cv;
}

MultiPoly form_at_pencil(unsigned n, unsigned i, Pencil pencil, const Scalar& a, bool reduced) {
    const Ring& ring = a.ring();
    CoeffVector cv = pencil_coeffs(n, pencil, a);
    PowerSums ps = power_sums_from_coeffs(cv, static_cast<std::size_t>(i) * (n - 1));
    auto vars = b_var_names(n);
    if (reduced) vars.erase(vars.begin());
    MultiPoly body(ring, vars);
    for (CompositionIter it(n, i); it.valid(); it.next()) {
        const Exponents& kappa = it.kappa();
        if (reduced && kappa[0] > 0) continue;
        std::size_t w = 0;
        for (std::size_t j = 0; j < n; ++j) w += j * kappa[j];
        if (ps.p[w].is_zero()) continue;
        Scalar coef = Scalar::from_int(ring, multinomial(i, kappa)) * ps.p[w];
        Exponents e(kappa.begin() + (reduced ? 1 : 0), kappa.end());
        body.add_term(e, coef);
    }
    return body;
}

namespace {
struct ScalarOps {
    Ring ring;
    Scalar zero() const { return Scalar::zero(ring); }
    Scalar one() const { return Scalar::one(ring); }
    Scalar from_int(long v) const { return Scalar::from_int(ring, v); }
    Scalar from_mpz(const mpz_class& v) const { return Scalar::from_int(ring, v); }
};
} // namespace

CoeffVector transform_coeffs(const CoeffVector& a, const TschirnhausVector& b) {
    std::size_t n = a.n();
    if (b.n() != n) throw ring_error("transform: a and b must have the same degree");
    if (a.ring() != b.b.front().ring()) throw ring_error("transform: ring mismatch");
    ScalarOps ops{a.ring()};
    PowerSums pa = power_sums_from_coeffs(a, n * (n - 1));
    auto pc = transformed_power_sums(pa.p, b.b, n, ops);
    PowerSums ps;
    ps.n = n;
    ps.p = std::move(pc);
    return coeffs_from_power_sums(ps);
}

std::vector<Scalar> berkowitz_char_poly(const std::vector<std::vector<Scalar>>& A) {
    std::size_t n = A.size();
    if (n == 0) throw ring_error("char poly of empty matrix");
    const Ring& ring = A[0][0].ring();
    std::vector<Scalar> V{Scalar::one(ring), -A[0][0]};
    for (std::size_t r = 2; r <= n; ++r) {
        // q = (1, -a, -S T, -S M T, -S M^2 T, ...) for the leading r x r block
        std::vector<Scalar> q;
        q.reserve(r + 1);
        q.push_back(Scalar::one(ring));
        q.push_back(-A[r - 1][r - 1]);
        std::vector<Scalar> w(r - 1, Scalar::zero(ring));
        for (std::size_t i = 0; i < r - 1; ++i) w[i] = A[i][r - 1];
        for (std::size_t j = 2; j <= r; ++j) {
            Scalar s = Scalar::zero(ring);
            for (std::size_t i = 0; i < r - 1; ++i) s = s + A[r - 1][i] * w[i];
            q.push_back(-s);
            if (j < r) {
                std::vector<Scalar> w2(r - 1, Scalar::zero(ring));
                for (std::size_t i = 0; i < r - 1; ++i) {
                    Scalar acc = Scalar::zero(ring);
                    for (std::size_t l = 0; l < r - 1; ++l) acc = acc + A[i][l] * w[l];
                    w2[i] = acc;
                }
                w = std::move(w2);
            }
        }
        std::vector<Scalar> V2(r + 1, Scalar::zero(ring));
        for (std::size_t i = 0; i <= r; ++i)
            for (std::size_t j = 0; j < V.size() && j <= i; ++j)
                if (i - j < q.size()) V2[i] = V2[i] + q[i - j] * V[j];
        V = std::move(V2);
    }
    return V;
}

CoeffVector transform_coeffs_oracle(const CoeffVector& a, const TschirnhausVector& b,
                                    unsigned cap) {
    std::size_t n = a.n();
    if (b.n() != n) throw ring_error("transform: a and b must have the same degree");
    if (n > cap) throw ring_error("oracle: degree exceeds cap " + std::to_string(cap));
    const Ring& ring = a.ring();
    Scalar z = Scalar::zero(ring), o = Scalar::one(ring);
    // companion matrix of z^n + a_1 z^{n-1} + ... + a_n acting on 1, z, ..., z^{n-1}
    std::vector<std::vector<Scalar>> M(n, std::vector<Scalar>(n, z));
    for (std::size_t j = 0; j + 1 < n; ++j) M[j + 1][j] = o;
    for (std::size_t i = 0; i < n; ++i) M[i][n - 1] = -a.a[n - 1 - i];
    // B = sum_j b_j M^j
    std::vector<std::vector<Scalar>> B(n, std::vector<Scalar>(n, z));
    std::vector<std::vector<Scalar>> P(n, std::vector<Scalar>(n, z)); // M^j
    for (std::size_t i = 0; i < n; ++i) P[i][i] = o;
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) B[r][c] = B[r][c] + b.b[j] * P[r][c];
        if (j + 1 < n) {
            std::vector<std::vector<Scalar>> Q(n, std::vector<Scalar>(n, z));
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t c = 0; c < n; ++c) {
                    Scalar acc = z;
                    for (std::size_t l = 0; l < n; ++l) acc = acc + M[r][l] * P[l][c];
                    Q[r][c] = acc;
                }
            P = std::move(Q);
        }
    }
    auto V = berkowitz_char_poly(B);
    CoeffVector c;
    c.a.assign(V.begin() + 1, V.end());
    return c;
}

bool membership(const CoeffVector& a, const TschirnhausVector& b,
                const std::vector<unsigned>& degrees) {
    CoeffVector c = transform_coeffs(a, b);
    unsigned kmax = *std::max_element(degrees.begin(), degrees.end());
    PowerSums pc = power_sums_from_coeffs(c, kmax);
    for (unsigned d : degrees)
        if (!pc.p[d].is_zero()) return false;
    return true;
}

bool membership_coeff_vanishing(const CoeffVector& a, const TschirnhausVector& b,
                                const std::vector<unsigned>& degrees) {
    CoeffVector c = transform_coeffs(a, b);
    for (unsigned d : degrees) {
        if (d < 1 || d > c.n()) throw ring_error("membership: index out of range");
        if (!c.a[d - 1].is_zero()) return false;
    }
    return true;
}

std::vector<std::vector<Scalar>> t12_gram(const CoeffVector& a) {
    std::size_t n = a.n();
    if (n < 2) throw ring_error("t12_gram: need n >= 2");
    PowerSums ps = power_sums_from_coeffs(a, 2 * (n - 1));
    Scalar ninv = Scalar::from_int(a.ring(), static_cast<long>(n)).inv();
    std::vector<std::vector<Scalar>> G(n - 1, std::vector<Scalar>(n - 1, Scalar::zero(a.ring())));
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = 1; j < n; ++j)
            G[i - 1][j - 1] = ps.p[i + j] - ps.p[i] * ps.p[j] * ninv;
    return G;
}

} // namespace tsch
