// Acceptance suite: prints one PASS/FAIL line per criterion and exits with
// the number of failures.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "tschirn/bounds.hpp"
#include "tschirn/forms.hpp"
#include "tschirn/newton.hpp"
#include "tschirn/reduce.hpp"
#include "tschirn/smoothness.hpp"

using namespace tsch;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int idx, bool ok, const std::string& what, const std::string& detail = "") {
    std::printf("[%s] criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", idx, what.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++failures;
}

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// ---- criterion 1: Table 1 fidelity ---------------------------------------
void criterion_table() {
    auto t0 = Clock::now();
    bool ok = true;
    std::ostringstream why;
    std::vector<BoundsRow> rows;
    try {
        rows = bounds_table(15);
    } catch (const std::exception& e) {
        report(1, false, "bounds table", e.what());
        return;
    }
    const char* fw_expect[] = {"3",      "4",      "5",       "9",       "41",
                               "121",    "841",    "6721",    "60481",   "604801",
                               "6652801", "78485043", "320082459", "3632428801"};
    const char* ratio_expect[] = {"1",    "1",    "1",    "1",    "1.07", "5.95", "5.99",
                                  "5.99", "5.99", "5.99", "5.99", "6.10", "19.45", "24"};
    std::pair<unsigned, unsigned> mins[] = {{3, 1}, {3, 2}, {3, 3}, {3, 4}, {3, 5}, {3, 6},
                                            {3, 7}, {3, 8}, {4, 8}, {4, 9}, {4, 10}};
    if (rows.size() != 14) ok = false;
    for (std::size_t i = 0; ok && i < 14; ++i) {
        if (rows[i].fw.get_str() != fw_expect[i]) {
            ok = false;
            why << "FW(" << rows[i].r << ") = " << rows[i].fw.get_str();
        }
        if (rows[i].ratio_2dp != ratio_expect[i]) {
            ok = false;
            why << " ratio(" << rows[i].r << ") = " << rows[i].ratio_2dp;
        }
    }
    for (std::size_t i = 0; ok && i < 11; ++i)
        if (!rows[i + 3].minimizer || *rows[i + 3].minimizer != mins[i]) {
            ok = false;
            why << "minimizer(r=" << i + 5 << ")";
        }
    double dt = seconds_since(t0);
    if (dt >= 1.0) {
        ok = false;
        why << " runtime " << dt << "s >= 1s";
    }
    report(1, ok, "bounds table --max-r 15 reproduces the reference table exactly", why.str());
}

// ---- criterion 2: the worked Phi example ---------------------------------
void criterion_phi_example() {
    bool ok = true;
    std::ostringstream why;
    mpz_class fac = factorial(3 + 1) / factorial(3) + 1; // 5
    mpz_class mod = dim_moduli_cubics(psi_sequence(3, 1).psi[1]) + 3 + 1 + 1; // 9
    if (fac != 5 || mod != 9) {
        ok = false;
        why << "max arguments " << fac.get_str() << ", " << mod.get_str();
    }
    if (phi(3, 1) != 9) {
        ok = false;
        why << " phi(3,1) = " << phi(3, 1).get_str();
    }
    if (fw(5).value != 9) {
        ok = false;
        why << " FW(5) = " << fw(5).value.get_str();
    }
    report(2, ok, "Phi(3,1) = max{5, 9} = 9 and FW(5) = 9", why.str());
}

// ---- criterion 3: oracle equivalence -------------------------------------
void criterion_oracle() {
    auto t0 = Clock::now();
    std::mt19937_64 rng(1009);
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 4);
    bool ok = true;
    std::ostringstream why;
    for (std::size_t n = 2; n <= 6 && ok; ++n) {
        for (int iter = 0; iter < 200 && ok; ++iter) {
            CoeffVector a;
            TschirnhausVector b;
            for (std::size_t i = 0; i < n; ++i) {
                a.a.push_back(Scalar::rational(num(rng), den(rng)));
                b.b.push_back(Scalar::rational(num(rng), den(rng)));
            }
            CoeffVector c1 = transform_coeffs(a, b);
            CoeffVector c2 = transform_coeffs_oracle(a, b);
            for (std::size_t i = 0; i < n; ++i)
                if (c1.a[i] != c2.a[i]) {
                    ok = false;
                    why << "mismatch at n = " << n << " iter " << iter;
                }
        }
    }
    double dt = seconds_since(t0);
    if (dt >= 30) {
        ok = false;
        why << " runtime " << dt << "s >= 30s";
    }
    report(3, ok, "transform_coeffs == transform_coeffs_oracle on 200 instances per n in 2..6",
           why.str());
}

// ---- criterion 4: Newton roundtrip ----------------------------------------
void criterion_newton() {
    std::mt19937_64 rng(2003);
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 5);
    bool ok = true;
    std::ostringstream why;
    for (std::size_t n = 1; n <= 8 && ok; ++n)
        for (int iter = 0; iter < 100 && ok; ++iter) {
            CoeffVector a;
            for (std::size_t i = 0; i < n; ++i) a.a.push_back(Scalar::rational(num(rng), den(rng)));
            auto back = coeffs_from_power_sums(power_sums_from_coeffs(a, n));
            for (std::size_t i = 0; i < n; ++i)
                if (back.a[i] != a.a[i]) {
                    ok = false;
                    why << "n = " << n;
                }
        }
    report(4, ok, "coeffs -> power sums -> coeffs is the identity (100 per n <= 8)", why.str());
}

// ---- criterion 5: closed-form specialization -------------------------------
MultiPoly lemma22_closed_form(unsigned n) {
    auto vars = b_var_names(n);
    vars.push_back("a");
    MultiPoly out(Ring::ZZ(), vars);
    long nn = static_cast<long>(n);
    for (unsigned i = 1; 2 * i < n; ++i) {
        Exponents e(vars.size(), 0);
        e[i] = 1;
        e[n - i] = 1;
        e[vars.size() - 1] = 1;
        out.add_term(e, Scalar::integer(-2 * nn));
    }
    if (n % 2 == 0) {
        Exponents e(vars.size(), 0);
        e[n / 2] = 2;
        e[vars.size() - 1] = 1;
        out.add_term(e, Scalar::integer(-nn));
    }
    return out;
}

void criterion_closed_form() {
    bool ok = true;
    std::ostringstream why;
    for (unsigned n = 4; n <= 10; ++n) {
        TschirnhausForm f = tschirnhaus_form(n, 2);
        MultiPoly sp = radical_specialize(f, Pencil::XnPlusA);
        MultiPoly::Subst kill{{"b_0", Scalar::zero(Ring::ZZ())}};
        MultiPoly got = sp.specialize(kill, sp.vars());
        if (got != lemma22_closed_form(n)) {
            ok = false;
            why << "n = " << n << " differs; ";
        }
    }
    report(5, ok, "radical specialization of T_2 matches its closed form, 4 <= n <= 10",
           why.str());
}

// ---- criterion 6: smoothness lab -------------------------------------------
void criterion_smoothness() {
    auto t0 = Clock::now();
    bool ok = true;
    std::ostringstream why;

    // (a) brute force on the F_11 quadric pencil
    try {
        Ring f11 = Ring::GFq(11);
        auto rep = brute_force_smooth(5, {1, 2}, f11, Scalar::one(f11), Pencil::XnPlusA, false);
        if (!rep.smooth()) {
            ok = false;
            why << "F_11 check found " << rep.singular_points.size() << " singular points; ";
        }
    } catch (const std::exception& e) {
        ok = false;
        why << "F_11 check threw: " << e.what() << "; ";
    }

    // (b) the (9,2,1) certificate
    OrbitCertificate cert;
    try {
        cert = orbit_certificate(9, 2, 1);
        bool orbits_ok = cert.orbits.size() == 2 &&
                         cert.orbits[0].cycle == std::vector<unsigned>{1, 5, 7, 8, 4, 2} &&
                         cert.orbits[1].cycle == std::vector<unsigned>{3, 6};
        if (!orbits_ok) {
            ok = false;
            why << "(9,2,1) orbits wrong; ";
        }
        if (cert.bound_N <= cert.max_exponent) {
            ok = false;
            why << "bound N invalid; ";
        }
        if (!verify_certificate(cert)) {
            ok = false;
            why << "certificate self-verification (incl. brute-force witness order) failed; ";
        }
    } catch (const std::exception& e) {
        ok = false;
        why << "(9,2,1) certificate threw: " << e.what() << "; ";
    }

    // (c) the certificate's rank test on the smallest instances fitting the
    // 10^7-point budget: (4,2,1) over F_8 (P^1, 9 points) and (5,2,1) over
    // F_32 (P^3, 33825 points). This clause is expected to fail: the mod-p
    // full-rank conclusion behind the certificate has on-variety
    // counterexamples for every witness when p = 2 (the reduced quadric
    // vanishes identically mod 2), exhaustively here and by complete
    // enumeration of the proportionality family for (9,2,1) in the unit
    // suite. The certificate data and witness order above remain verified.
    try {
        OrbitCertificate c4 = orbit_certificate(4, 2, 1);
        auto m4 = certificate_matrix_check(c4, 1, 10000000, true);
        OrbitCertificate c5 = orbit_certificate(5, 2, 1);
        auto m5 = certificate_matrix_check(c5, 1, 10000000, true);
        auto m5v = certificate_matrix_check(c5, 1, 10000000, false);
        if (!m4.full_rank() || !m5.full_rank()) {
            ok = false;
            why << "rank test: (4,2,1) " << m4.rank_failures.size() << "/" << m4.points_checked
                << " singular, (5,2,1) " << m5.rank_failures.size() << "/" << m5.points_checked
                << " (on-variety " << m5v.rank_failures.size() << "/" << m5v.points_tested
                << "); the full-rank claim fails for every witness in characteristic 2 "
                   "(see README caveats); ";
        }
    } catch (const std::exception& e) {
        ok = false;
        why << "matrix check threw: " << e.what() << "; ";
    }

    double dt = seconds_since(t0);
    if (dt >= 120) {
        ok = false;
        why << "runtime " << dt << "s >= 120s";
    }
    report(6, ok, "smoothness: F_11 brute force, (9,2,1) certificate, witness checks", why.str());
}

// ---- criterion 7: reductions ------------------------------------------------
void criterion_reduction() {
    auto t0 = Clock::now();
    bool ok = true;
    std::ostringstream why;
    std::mt19937_64 rng(3001);
    std::uniform_int_distribution<long> d(-9, 9);

    int quintics = 0, attempts = 0;
    while (quintics < 50 && attempts < 200) {
        ++attempts;
        std::vector<mpq_class> a;
        for (int i = 0; i < 5; ++i) a.emplace_back(d(rng));
        try {
            auto trace = reduce_to_bring(a, 1000 + attempts);
            double worst = 0;
            for (const auto& r : trace.residuals) worst = std::max(worst, r.to_double());
            auto ver = verify_trace(trace, 1e-8, 1e-6);
            if (worst >= 1e-8 || !ver.ok) {
                ok = false;
                why << "bring failure at attempt " << attempts << " (residual " << worst << "); ";
                break;
            }
            ++quintics;
        } catch (const std::domain_error&) {
            // repeated-root draw; resample
        }
    }
    if (quintics < 50) {
        ok = false;
        why << "only " << quintics << " quintics reduced; ";
    }

    int nonics = 0;
    attempts = 0;
    while (nonics < 50 && attempts < 200 && ok) {
        ++attempts;
        std::vector<mpq_class> a;
        for (int i = 0; i < 9; ++i) a.emplace_back(d(rng));
        try {
            auto trace = reduce_to_principal(a, ReduceMode::Numeric, 2000 + attempts);
            double worst = 0;
            for (const auto& r : trace.residuals) worst = std::max(worst, r.to_double());
            auto ver = verify_trace(trace, 1e-8, 1e-6);
            if (worst >= 1e-8 || !ver.ok) {
                ok = false;
                why << "principal failure at attempt " << attempts << "; ";
                break;
            }
            ++nonics;
        } catch (const std::domain_error&) {
        }
    }
    if (nonics < 50 && ok) {
        ok = false;
        why << "only " << nonics << " nonics reduced; ";
    }
    double dt = seconds_since(t0);
    if (dt >= 120) {
        ok = false;
        why << "runtime " << dt << "s >= 120s";
    }
    report(7, ok, "50 quintics to Bring form and 50 nonics to principal form", why.str());
}

// ---- criterion 8: the section-5 inequality sweep ----------------------------
void criterion_sweep() {
    bool ok = true;
    std::ostringstream why;
    for (unsigned d = 2; d <= 6; ++d)
        for (unsigned k = 1; k <= 12; ++k)
            if (!check_lemma_dim(d, k).holds()) {
                ok = false;
                why << "lemma fails at (" << d << "," << k << "); ";
            }
    mpz_class prev = 0;
    for (unsigned r = 2; r <= 30; ++r) {
        auto f = fw(r);
        if (f.value <= prev) {
            ok = false;
            why << "FW not monotone at r = " << r << "; ";
        }
        prev = f.value;
        // the blanket claim FW <= B is false at the degenerate rows r = 2, 3
        // (FW(2) = 3 > 2 = B(2), FW(3) = 4 > 3 = B(3)); it holds from r = 4
        if (r >= 4 && f.value > brauer(r)) {
            ok = false;
            why << "FW > B at r = " << r << "; ";
        }
    }
    report(8, ok, "dimension-inequality sweep (2<=d<=6, k<=12), FW monotone, <= B(r) for 4<=r<=30",
           why.str());
}

} // namespace

int main() {
    criterion_table();
    criterion_phi_example();
    criterion_oracle();
    criterion_newton();
    criterion_closed_form();
    criterion_smoothness();
    criterion_reduction();
    criterion_sweep();
    if (failures == 0)
        std::printf("all acceptance criteria passed\n");
    else
        std::printf("%d acceptance criterion(s) failed\n", failures);
    return failures;
}
