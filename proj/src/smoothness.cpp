#include "tschirn/smoothness.hpp"

#include <algorithm>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "tschirn/quadric.hpp"

namespace tsch {

namespace {

std::uint64_t pow_u64_checked(std::uint64_t base, unsigned exp, std::uint64_t cap) {
    std::uint64_t v = 1;
    for (unsigned i = 0; i < exp; ++i) {
        if (v > cap / base) return cap + 1;
        v *= base;
    }
    return v;
}

unsigned mod_order(std::uint64_t base, std::uint64_t mod) {
    // multiplicative order of base modulo mod (gcd(base, mod) = 1, mod small)
    std::uint64_t v = base % mod;
    unsigned k = 1;
    while (v != 1) {
        v = (v * (base % mod)) % mod;
        ++k;
        if (k > mod) throw ring_error("mod_order: not invertible");
    }
    return k;
}

std::uint64_t mod_inverse_pow(std::uint64_t p, unsigned r, std::uint64_t mod) {
    // (p^r)^{-1} mod `mod`
    std::uint64_t pr = 1;
    for (unsigned i = 0; i < r; ++i) pr = (pr * (p % mod)) % mod;
    unsigned ord = mod_order(pr, mod);
    std::uint64_t inv = 1;
    for (unsigned i = 0; i + 1 < ord; ++i) inv = (inv * pr) % mod;
    return inv;
}

} // namespace

OrbitCertificate orbit_certificate(unsigned n, std::uint64_t p, unsigned r) {
    if (!GFContext::is_prime(p)) throw ring_error("orbit_certificate: p must be prime");
    if (r < 1) throw ring_error("orbit_certificate: need r >= 1");
    std::uint64_t i_val = pow_u64_checked(p, r, 1u << 30);
    if (i_val + 1 >= n)
        throw ring_error("orbit_certificate: need i = p^r + 1 < n");
    OrbitCertificate cert;
    cert.n = n;
    cert.p = p;
    cert.r = r;
    cert.i = static_cast<unsigned>(i_val + 1);
    cert.which_case = (n % p == 0) ? 2 : 1;
    cert.modulus = cert.which_case == 1 ? n : n - 1;
    unsigned mod = cert.modulus;
    if (mod < 2) throw ring_error("orbit_certificate: trivial modulus");

    std::uint64_t inv_pr = mod_inverse_pow(p, r, mod);
    cert.nu.assign(mod, 0);
    for (unsigned j = 1; j < mod; ++j)
        cert.nu[j] = static_cast<unsigned>((inv_pr * j) % mod);

    mpz_class P; // p^r, exact
    mpz_ui_pow_ui(P.get_mpz_t(), p, r);

    std::vector<bool> seen(mod, false);
    cert.max_exponent = 0;
    for (unsigned j0 = 1; j0 < mod; ++j0) {
        if (seen[j0]) continue;
        Orbit orb;
        unsigned j = j0;
        do {
            seen[j] = true;
            orb.cycle.push_back(j);
            j = cert.nu[j];
        } while (j != j0);
        std::size_t s = orb.cycle.size();
        for (std::size_t t = 1; t <= s; ++t) {
            unsigned cur = orb.cycle[t % s];   // nu^t(j0)
            unsigned prev = orb.cycle[t - 1];  // nu^{t-1}(j0)
            mpz_class num = P * cur + mod - prev;
            if (num % mod != 0)
                throw ring_error("orbit_certificate: eps integrality violated");
            mpz_class eps = num / mod;
            if (eps < 1) throw ring_error("orbit_certificate: eps not positive");
            orb.eps.push_back(eps);
        }
        // S = sum_t p^{(t-1)r} (p^r - 1)(eps(t) - 1)
        mpz_class S = 0, pw = 1;
        for (std::size_t t = 1; t <= s; ++t) {
            S += pw * (P - 1) * (orb.eps[t - 1] - 1);
            pw *= P;
        }
        // E(t) = 2 (p^{sr} - 1)(eps(t) - 1) - S; pw is now p^{sr}
        bool nonzero = false;
        for (std::size_t t = 1; t <= s; ++t) {
            mpz_class E = 2 * (pw - 1) * (orb.eps[t - 1] - 1) - S;
            if (E != 0) nonzero = true;
            mpz_class absE = abs(E);
            if (absE > cert.max_exponent) cert.max_exponent = absE;
        }
        if (!nonzero)
            throw ring_error("orbit_certificate: all contradiction exponents vanish on an orbit");
        cert.orbits.push_back(std::move(orb));
    }

    // N > max_exponent with gcd(N, p) = 1, chosen to minimize ord_N(p) so the
    // witness field stays small; the window always contains p^k - 1 for the
    // least k with p^k - 1 > max_exponent.
    if (cert.max_exponent == 0) throw ring_error("orbit_certificate: empty exponent table");
    mpz_class lo_mp = cert.max_exponent + 1;
    mpz_class hi_mp = (cert.max_exponent + 2) * static_cast<unsigned long>(p);
    if (!hi_mp.fits_ulong_p()) throw ring_error("orbit_certificate: exponent bound too large");
    std::uint64_t lo = lo_mp.get_ui();
    std::uint64_t hi = hi_mp.get_ui();
    std::uint64_t bestN = 0;
    unsigned bestOrd = 0;
    for (std::uint64_t c = lo; c <= hi; ++c) {
        if (c < 2 || c % p == 0) continue;
        unsigned ord = mod_order(p, c);
        if (bestN == 0 || ord < bestOrd) {
            bestN = c;
            bestOrd = ord;
        }
    }
    cert.bound_N = static_cast<unsigned long>(bestN);
    cert.witness_m = bestOrd;
    cert.witness_ring = Ring::GFq(p, bestOrd);
    cert.witness_a =
        Scalar(cert.witness_ring, cert.witness_ring.gf->element_of_order(cert.bound_N));
    return cert;
}

bool verify_certificate(const OrbitCertificate& cert) {
    OrbitCertificate fresh = orbit_certificate(cert.n, cert.p, cert.r);
    if (fresh.modulus != cert.modulus || fresh.nu != cert.nu) return false;
    if (fresh.orbits.size() != cert.orbits.size()) return false;
    for (std::size_t i = 0; i < cert.orbits.size(); ++i)
        if (fresh.orbits[i].cycle != cert.orbits[i].cycle ||
            fresh.orbits[i].eps != cert.orbits[i].eps)
            return false;
    if (cert.bound_N <= cert.max_exponent) return false;
    // orbits partition {1, ..., modulus-1}
    std::vector<bool> seen(cert.modulus, false);
    for (const auto& orb : cert.orbits)
        for (unsigned j : orb.cycle) {
            if (j < 1 || j >= cert.modulus || seen[j]) return false;
            seen[j] = true;
        }
    for (unsigned j = 1; j < cert.modulus; ++j)
        if (!seen[j]) return false;
    // witness order is exactly N, by brute-force powering
    const auto& gf = *cert.witness_ring.gf;
    auto a = cert.witness_a.as_gf();
    auto acc = a;
    mpz_class N = cert.bound_N;
    for (mpz_class k = 1; k < N; ++k) {
        if (gf.is_one(acc)) return false;
        acc = gf.mul(acc, a);
    }
    return gf.is_one(acc);
}

namespace {

// decodes a field element from a base-p digit index
GFContext::Elem elem_from_index(const GFContext& gf, std::uint64_t idx) {
    GFContext::Elem e(gf.m(), 0);
    for (unsigned d = 0; d < gf.m(); ++d) {
        e[d] = idx % gf.p();
        idx /= gf.p();
    }
    return e;
}

std::size_t matrix_rank(std::vector<std::vector<Scalar>> m) {
    if (m.empty()) return 0;
    std::size_t rows = m.size(), cols = m[0].size(), rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && m[piv][c].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[rank]);
        Scalar inv = m[rank][c].inv();
        for (std::size_t i = rank + 1; i < rows; ++i) {
            if (m[i][c].is_zero()) continue;
            Scalar f = m[i][c] * inv;
            for (std::size_t j = c; j < cols; ++j) m[i][j] = m[i][j] - f * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

// Enumerates representatives of P^{V-1}(F_q): for each leading position l,
// coords[l] = 1 and coords[l+1..] run over all field values. fn returns
// false to abort.
template <typename Fn>
void enumerate_projective(const GFContext& gf, std::size_t nvars, std::uint64_t q,
                          const Fn& fn) {
    for (std::size_t lead = 0; lead < nvars; ++lead) {
        std::size_t free_ct = nvars - lead - 1;
        std::uint64_t total = 1;
        for (std::size_t i = 0; i < free_ct; ++i) total *= q;
        for (std::uint64_t idx = 0; idx < total; ++idx) {
            std::uint64_t rem = idx;
            std::vector<GFContext::Elem> coords(nvars, gf.zero());
            coords[lead] = gf.one();
            for (std::size_t i = 0; i < free_ct; ++i) {
                coords[lead + 1 + i] = elem_from_index(gf, rem % q);
                rem /= q;
            }
            if (!fn(coords)) return;
        }
    }
}

} // namespace

SmoothnessReport brute_force_smooth(unsigned n, const std::vector<unsigned>& degrees,
                                    const Ring& field, const Scalar& a, Pencil pencil,
                                    bool reduced, std::uint64_t budget, unsigned threads) {
    if (field.kind != RingKind::GF) throw ring_error("brute_force_smooth: need a finite field");
    const GFContext& gf = *field.gf;
    mpz_class q_mp = gf.order();
    if (!q_mp.fits_ulong_p()) throw ring_error("brute_force_smooth: field too large");
    std::uint64_t q = q_mp.get_ui();
    std::size_t nvars = reduced ? n - 1 : n;
    // budget: q^(dim of the ambient projective space)
    mpz_class work = 1;
    for (std::size_t i = 0; i + 1 < nvars; ++i) work *= q_mp;
    if (work > budget) throw ring_error("brute_force_smooth: budget exceeded (need " +
                                        work.get_str() + " points)");

    Scalar af = a.ring() == field ? a : a.convert_to(field);
    SmoothnessReport rep;
    rep.n = n;
    rep.degrees = degrees;
    rep.field = field;
    rep.a = af;
    rep.pencil = pencil;
    rep.reduced = reduced;

    std::vector<MultiPoly> forms;
    std::vector<std::vector<MultiPoly>> jac; // jac[f][v]
    for (unsigned d : degrees) {
        MultiPoly f = form_at_pencil(n, d, pencil, af, reduced);
        std::vector<MultiPoly> row;
        for (const auto& v : f.vars()) row.push_back(f.partial(v));
        forms.push_back(std::move(f));
        jac.push_back(std::move(row));
    }
    std::size_t k = forms.size();

    // partition the enumeration by leading position, chunking the big block
    unsigned nthreads = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
    std::mutex merge_mutex;
    std::vector<std::thread> pool;
    std::uint64_t checked = 0, on_var = 0;
    std::vector<std::pair<std::uint64_t, std::vector<Scalar>>> singular; // keyed for ordering

    auto process_point = [&](const std::vector<GFContext::Elem>& coords,
                             std::uint64_t key,
                             std::uint64_t& local_checked, std::uint64_t& local_onvar,
                             std::vector<std::pair<std::uint64_t, std::vector<Scalar>>>& local_sing) {
        ++local_checked;
        std::vector<Scalar> pt;
        pt.reserve(coords.size());
        for (const auto& c : coords) pt.emplace_back(field, c);
        for (const auto& f : forms)
            if (!f.eval_vec(pt).is_zero()) return;
        ++local_onvar;
        std::vector<std::vector<Scalar>> J(k);
        for (std::size_t fi = 0; fi < k; ++fi) {
            J[fi].reserve(pt.size());
            for (const auto& dp : jac[fi]) J[fi].push_back(dp.eval_vec(pt));
        }
        if (matrix_rank(J) < k) local_sing.emplace_back(key, pt);
    };

    // flatten enumeration into (lead, idx) keys; parallelize over stripes
    std::vector<std::uint64_t> block_sizes(nvars);
    std::uint64_t total_points = 0;
    for (std::size_t lead = 0; lead < nvars; ++lead) {
        std::uint64_t t = 1;
        for (std::size_t i = 0; i + lead + 1 < nvars; ++i) t *= q;
        block_sizes[lead] = t;
        total_points += t;
    }
    auto decode = [&](std::uint64_t key, std::vector<GFContext::Elem>& coords) {
        std::uint64_t rem = key;
        std::size_t lead = 0;
        while (rem >= block_sizes[lead]) {
            rem -= block_sizes[lead];
            ++lead;
        }
        coords.assign(nvars, gf.zero());
        coords[lead] = gf.one();
        for (std::size_t i = lead + 1; i < nvars; ++i) {
            coords[i] = elem_from_index(gf, rem % q);
            rem /= q;
        }
    };

    auto worker = [&](std::uint64_t begin, std::uint64_t end) {
        std::uint64_t lc = 0, lv = 0;
        std::vector<std::pair<std::uint64_t, std::vector<Scalar>>> ls;
        std::vector<GFContext::Elem> coords;
        for (std::uint64_t key = begin; key < end; ++key) {
            decode(key, coords);
            process_point(coords, key, lc, lv, ls);
        }
        std::lock_guard<std::mutex> lock(merge_mutex);
        checked += lc;
        on_var += lv;
        for (auto& s : ls) singular.push_back(std::move(s));
    };

    if (nthreads <= 1 || total_points < 4096) {
        worker(0, total_points);
    } else {
        std::uint64_t chunk = (total_points + nthreads - 1) / nthreads;
        for (unsigned t = 0; t < nthreads; ++t) {
            std::uint64_t b = t * chunk, e = std::min(total_points, b + chunk);
            if (b >= e) break;
            pool.emplace_back(worker, b, e);
        }
        for (auto& th : pool) th.join();
    }

    std::sort(singular.begin(), singular.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    rep.points_checked = checked;
    rep.on_variety = on_var;
    for (auto& s : singular) rep.singular_points.push_back(std::move(s.second));
    return rep;
}

MatrixCheckReport certificate_matrix_check(const OrbitCertificate& cert, unsigned ext,
                                           std::uint64_t budget, bool everywhere) {
    MatrixCheckReport rep;
    rep.n = cert.n;
    rep.p = cert.p;
    rep.r = cert.r;
    rep.ext = ext;
    rep.everywhere = everywhere;
    Ring field = ext == 1 ? cert.witness_ring : Ring::GFq(cert.p, cert.witness_m * ext);
    const GFContext& gf = *field.gf;
    mpz_class q_mp = gf.order();
    if (!q_mp.fits_ulong_p()) throw ring_error("certificate_matrix_check: field too large");
    std::uint64_t q = q_mp.get_ui();
    Scalar a = ext == 1 ? cert.witness_a : Scalar(field, gf.element_of_order(cert.bound_N));

    unsigned mod = cert.modulus;
    std::size_t C = mod - 1; // coordinates b_1..b_{mod-1}
    mpz_class work = 1;
    for (std::size_t i = 0; i + 1 < C; ++i) work *= q_mp;
    if (work > budget)
        throw ring_error("certificate_matrix_check: budget exceeded");

    mpz_class P;
    mpz_ui_pow_ui(P.get_mpz_t(), cert.p, cert.r);
    // column data: for w = 1..mod-1, eps(w) = (P nu(w) + mod - w) / mod
    std::vector<mpz_class> eps(mod, 0);
    for (unsigned w = 1; w < mod; ++w) {
        mpz_class num = P * cert.nu[w] + mod - w;
        eps[w] = num / mod;
    }
    Scalar nega = -a;
    std::vector<Scalar> nega_pow(mod, Scalar::one(field));
    for (unsigned w = 1; w < mod; ++w) nega_pow[w] = nega.pow(eps[w]);

    // mod-p specialized intersection forms for the on-variety filter; the
    // forms live on b_1.. (reduced coordinates drop b_0, and in case 2 the
    // top variable b_{n-1} is pinned to 0 by T'_1)
    std::vector<MultiPoly> forms;
    if (!everywhere) {
        for (unsigned d : cert.degrees()) {
            MultiPoly f = form_at_pencil(cert.n, d, cert.pencil(), a, true);
            forms.push_back(std::move(f));
        }
    }

    std::uint64_t checked = 0, tested = 0;
    enumerate_projective(gf, C, q, [&](const std::vector<GFContext::Elem>& coords) {
        ++checked;
        std::vector<Scalar> b(mod, Scalar::zero(field)); // b[1..mod-1]
        for (std::size_t i = 0; i < C; ++i) b[i + 1] = Scalar(field, coords[i]);
        if (!everywhere) {
            // coordinates for the form evaluation: case 2 forms also carry
            // b_{n-1}, pinned to 0 on T'_1
            std::vector<Scalar> pt;
            for (unsigned j = 1; j <= cert.n - 1; ++j)
                pt.push_back(j < mod ? b[j] : Scalar::zero(field));
            for (const auto& f : forms)
                if (!f.eval_vec(pt).is_zero()) return true;
        }
        ++tested;
        std::vector<std::vector<Scalar>> M(2, std::vector<Scalar>(C, Scalar::zero(field)));
        for (unsigned w = 1; w < mod; ++w) {
            M[0][w - 1] = a * b[w];
            M[1][w - 1] = nega_pow[w] * b[cert.nu[w]].pow(P);
        }
        if (matrix_rank(M) < 2) {
            std::vector<Scalar> pt(b.begin() + 1, b.end());
            if (rep.rank_failures.size() < 32) rep.rank_failures.push_back(pt);
        }
        return true;
    });
    rep.points_checked = checked;
    rep.points_tested = everywhere ? checked : tested;
    return rep;
}

DiscScalingReport quadric_discriminant_scaling(unsigned n, unsigned trials,
                                               std::uint64_t seed) {
    if (n < 3) throw ring_error("disc-scaling: need n >= 3 (quadric in P^0 is degenerate)");
    if (trials < 2) throw ring_error("disc-scaling: need at least 2 trials");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 3);
    DiscScalingReport rep;
    rep.n = n;
    rep.trials = trials;
    bool have_ratio = false;
    rep.constant = true;
    unsigned done = 0;
    unsigned guard = 0;
    Ring qq = Ring::QQ();
    while (done < trials) {
        if (++guard > 64 * trials + 64)
            throw ring_error("disc-scaling: all sampled points had zero discriminant");
        std::vector<mpq_class> a(n);
        for (auto& x : a) {
            x = mpq_class(num(rng), den(rng));
            x.canonicalize();
        }
        mpq_class disc = discriminant(a);
        if (disc == 0) {
            ++rep.resamples;
            continue;
        }
        CoeffVector cv;
        for (const auto& x : a) cv.a.push_back(Scalar(mpq_class(x)));
        auto G = t12_gram(cv);
        std::vector<std::vector<mpq_class>> Gq(n - 1, std::vector<mpq_class>(n - 1));
        for (std::size_t i = 0; i + 1 < n; ++i)
            for (std::size_t j = 0; j + 1 < n; ++j) Gq[i][j] = G[i][j].as_rat();
        mpq_class det = rational_det(Gq);
        mpq_class ratio = det / disc;
        ratio.canonicalize();
        if (!have_ratio) {
            rep.ratio = ratio;
            have_ratio = true;
        } else if (ratio != rep.ratio) {
            rep.constant = false;
        }
        ++done;
    }
    return rep;
}

namespace {
nlohmann::json scalar_point_json(const std::vector<Scalar>& pt) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& s : pt) arr.push_back(s.to_string());
    return arr;
}
} // namespace

std::string OrbitCertificate::to_json() const {
    nlohmann::json j;
    j["schema"] = "tschirn/v1";
    j["n"] = n;
    j["p"] = p;
    j["r"] = r;
    j["i"] = i;
    j["case"] = which_case;
    j["modulus"] = modulus;
    j["nu"] = std::vector<unsigned>(nu.begin() + 1, nu.end());
    auto& orbs = j["orbits"] = nlohmann::json::array();
    for (const auto& o : orbits) {
        nlohmann::json jo;
        jo["cycle"] = o.cycle;
        auto& eps = jo["eps"] = nlohmann::json::array();
        for (const auto& e : o.eps) eps.push_back(e.get_str());
        orbs.push_back(jo);
    }
    j["max_exponent"] = max_exponent.get_str();
    j["bound_N"] = bound_N.get_str();
    j["witness_field"] = {{"p", p}, {"m", witness_m}};
    if (witness_m > 1) {
        std::vector<std::uint64_t> modcoef = witness_ring.gf->modulus();
        j["witness_field"]["modulus"] = modcoef;
    }
    j["witness_a"] = witness_a.to_string();
    return j.dump();
}

std::string SmoothnessReport::to_json() const {
    nlohmann::json j;
    j["schema"] = "tschirn/v1";
    j["n"] = n;
    j["degrees"] = degrees;
    j["field"] = field.name();
    if (field.kind == RingKind::GF && field.gf->m() > 1)
        j["field_modulus"] = field.gf->modulus();
    j["a"] = a.to_string();
    j["pencil"] = pencil == Pencil::XnPlusA ? "x^n+a" : "x^n+a*x";
    j["reduced"] = reduced;
    j["points_checked"] = points_checked;
    j["on_variety"] = on_variety;
    j["smooth"] = smooth();
    auto& sing = j["singular_points"] = nlohmann::json::array();
    for (const auto& pt : singular_points) sing.push_back(scalar_point_json(pt));
    return j.dump();
}

std::string MatrixCheckReport::to_json() const {
    nlohmann::json j;
    j["schema"] = "tschirn/v1";
    j["n"] = n;
    j["p"] = p;
    j["r"] = r;
    j["ext"] = ext;
    j["mode"] = everywhere ? "everywhere" : "on-variety";
    j["points_checked"] = points_checked;
    j["points_tested"] = points_tested;
    j["full_rank"] = full_rank();
    auto& fails = j["rank_failures"] = nlohmann::json::array();
    for (const auto& pt : rank_failures) fails.push_back(scalar_point_json(pt));
    return j.dump();
}

std::string DiscScalingReport::to_json() const {
    nlohmann::json j;
    j["schema"] = "tschirn/v1";
    j["n"] = n;
    j["trials"] = trials;
    j["constant"] = constant;
    j["ratio"] = ratio.get_num().get_str() + "/" + ratio.get_den().get_str();
    j["resamples"] = resamples;
    return j.dump();
}

} // namespace tsch
