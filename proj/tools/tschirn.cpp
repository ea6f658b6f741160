#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include <nlohmann/json.hpp>

#include "tschirn/bounds.hpp"
#include "tschirn/forms.hpp"
#include "tschirn/newton.hpp"
#include "tschirn/reduce.hpp"
#include "tschirn/smoothness.hpp"

using namespace tsch;

namespace {

int fail_computation(const std::string& msg) {
    nlohmann::json j{{"error", msg}, {"kind", "computation"}};
    std::cerr << j.dump() << "\n";
    return 1;
}

std::vector<unsigned> parse_degrees(const std::string& text) {
    std::vector<unsigned> out;
    std::istringstream is(text);
    std::string part;
    while (std::getline(is, part, ',')) out.push_back(static_cast<unsigned>(std::stoul(part)));
    return out;
}

std::vector<mpq_class> parse_rationals(const std::string& text) {
    std::vector<mpq_class> out;
    std::istringstream is(text);
    std::string part;
    while (std::getline(is, part, ',')) {
        mpq_class q(part);
        q.canonicalize();
        out.push_back(q);
    }
    return out;
}

// pretty printer for one streamed form term, p_k left unexpanded
std::string pretty_term(const Exponents& kappa, const mpz_class& coef, std::size_t w) {
    std::ostringstream os;
    if (coef != 1) os << coef.get_str() << "*";
    os << "p_" << w;
    for (std::size_t j = 0; j < kappa.size(); ++j) {
        if (!kappa[j]) continue;
        os << "*b_" << j;
        if (kappa[j] > 1) os << "^" << kappa[j];
    }
    return os.str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tschirnhaus complete intersections: forms, bounds, certificates, reductions"};
    app.require_subcommand(1);

    // bounds
    auto* bounds_cmd = app.add_subcommand("bounds", "resolvent-degree bound tables");
    auto* table_cmd = bounds_cmd->add_subcommand("table", "FW(r) vs prior bounds");
    unsigned max_r = 15;
    std::string table_format = "md";
    table_cmd->add_option("--max-r", max_r, "largest r")->check(CLI::Range(2u, 200u));
    table_cmd->add_option("--format", table_format, "md|csv|json")
        ->check(CLI::IsMember({"md", "csv", "json"}));

    // psi
    auto* psi_cmd = app.add_subcommand("psi", "psi(d,k) sequence");
    unsigned psi_d = 3, psi_k = 1;
    bool psi_json = false;
    psi_cmd->add_option("d", psi_d, "degree")->required();
    psi_cmd->add_option("k", psi_k, "plane dimension")->required();
    psi_cmd->add_flag("--json", psi_json, "JSON output");

    // form
    auto* form_cmd = app.add_subcommand("form", "emit a Tschirnhaus form");
    unsigned form_n = 5, form_i = 2;
    bool form_json = false, form_pretty = false, form_reduced = false;
    std::string form_pencil;
    form_cmd->add_option("--n", form_n, "polynomial degree")->required();
    form_cmd->add_option("--i", form_i, "form degree")->required();
    form_cmd->add_flag("--json", form_json, "JSON output");
    form_cmd->add_flag("--pretty", form_pretty, "p_k symbols left unexpanded");
    form_cmd->add_flag("--reduced", form_reduced, "restrict to b_0 = 0");
    form_cmd->add_option("--pencil", form_pencil, "specialize: xn+a or xn+ax")
        ->check(CLI::IsMember({"xn+a", "xn+ax"}));

    // transform
    auto* tr_cmd = app.add_subcommand("transform", "evaluation map (a, b) -> c");
    std::string tr_coeffs, tr_b;
    bool tr_json = false, tr_oracle = false;
    tr_cmd->add_option("--coeffs", tr_coeffs, "a_1,...,a_n")->required();
    tr_cmd->add_option("--b", tr_b, "b_0,...,b_{n-1}")->required();
    tr_cmd->add_flag("--json", tr_json, "JSON output");
    tr_cmd->add_flag("--oracle", tr_oracle, "use the companion-matrix oracle");

    // reduce
    auto* red_cmd = app.add_subcommand("reduce", "principal/Bring normal form");
    std::string red_coeffs, red_level = "principal", red_mode = "numeric";
    double red_tol = 1e-8;
    std::uint64_t red_seed = 1;
    bool red_json = false;
    red_cmd->add_option("--coeffs", red_coeffs, "a_1,...,a_n")->required();
    red_cmd->add_option("--level", red_level, "principal|bring")
        ->check(CLI::IsMember({"principal", "bring"}));
    red_cmd->add_option("--mode", red_mode, "numeric|tower (principal only)")
        ->check(CLI::IsMember({"numeric", "tower"}));
    red_cmd->add_option("--tol", red_tol, "residual tolerance");
    red_cmd->add_option("--seed", red_seed, "line-choice seed");
    red_cmd->add_flag("--json", red_json, "JSON trace output");

    // certify
    auto* cert_cmd = app.add_subcommand("certify", "orbit certificate for T_{12i}, i = p^r + 1");
    unsigned cert_n = 9, cert_r = 1;
    std::uint64_t cert_p = 2;
    bool cert_check = false;
    bool cert_matrix = false, cert_onvariety = false;
    std::uint64_t cert_budget = 10000000;
    cert_cmd->add_option("--n", cert_n, "polynomial degree")->required();
    cert_cmd->add_option("--p", cert_p, "prime")->required();
    cert_cmd->add_option("--r", cert_r, "prime-power exponent")->required();
    cert_cmd->add_flag("--self-check", cert_check, "re-derive and verify before printing");
    cert_cmd->add_flag("--matrix-check", cert_matrix,
                       "exhaustive rank test of the certificate matrix over the witness field");
    cert_cmd->add_flag("--on-variety", cert_onvariety,
                       "restrict the rank test to points on the specialized intersection");
    cert_cmd->add_option("--budget", cert_budget, "point budget for the rank test");

    // verify-smooth
    auto* vs_cmd = app.add_subcommand("verify-smooth", "brute-force smoothness over F_q");
    unsigned vs_n = 5;
    std::string vs_degrees = "1,2", vs_a = "1", vs_pencil = "xn+a";
    std::uint64_t vs_p = 11, vs_budget = 10000000;
    unsigned vs_m = 1, vs_threads = 0;
    bool vs_reduced = false;
    vs_cmd->add_option("--n", vs_n, "polynomial degree")->required();
    vs_cmd->add_option("--degrees", vs_degrees, "form degrees, comma separated");
    vs_cmd->add_option("--p", vs_p, "field characteristic")->required();
    vs_cmd->add_option("--m", vs_m, "field extension degree");
    vs_cmd->add_option("--a", vs_a, "pencil parameter (integer literal)");
    vs_cmd->add_option("--pencil", vs_pencil, "xn+a or xn+ax")
        ->check(CLI::IsMember({"xn+a", "xn+ax"}));
    vs_cmd->add_flag("--reduced", vs_reduced, "cut by b_0 = 0");
    vs_cmd->add_option("--budget", vs_budget, "point budget");
    vs_cmd->add_option("--threads", vs_threads, "worker threads (0 = auto)");

    // disc-scaling
    auto* ds_cmd = app.add_subcommand("disc-scaling", "det(Gram T_12) vs discriminant");
    unsigned ds_n = 3, ds_trials = 10;
    std::uint64_t ds_seed = 1;
    ds_cmd->add_option("--n", ds_n, "polynomial degree")->required();
    ds_cmd->add_option("--trials", ds_trials, "sample count");
    ds_cmd->add_option("--seed", ds_seed, "sampling seed");

    // rho-search (exploratory)
    auto* rho_cmd = app.add_subcommand("rho-search", "least k where the factorial term wins");
    unsigned rho_d = 3, rho_kmax = 30;
    rho_cmd->add_option("--d", rho_d, "degree")->required();
    rho_cmd->add_option("--kmax", rho_kmax, "search bound");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (table_cmd->parsed()) {
            std::cout << render_table(bounds_table(max_r), table_format);
            if (table_format != "csv") std::cout << "\n";
            return 0;
        }
        if (bounds_cmd->parsed()) {
            std::cerr << "usage: bounds table [--max-r R] [--format md|csv|json]\n";
            return 2;
        }
        if (psi_cmd->parsed()) {
            PsiSequence s = psi_sequence(psi_d, psi_k);
            if (psi_json) {
                nlohmann::json j{{"schema", "tschirn/v1"}, {"d", psi_d}, {"k", psi_k}};
                auto& arr = j["psi"] = nlohmann::json::array();
                for (const auto& v : s.psi) arr.push_back(v.get_str());
                std::cout << j.dump() << "\n";
                return 0;
            }
            for (std::size_t i = 0; i < s.psi.size(); ++i)
                std::cout << (i ? " " : "") << s.psi[i].get_str();
            std::cout << "\n";
            return 0;
        }
        if (form_cmd->parsed()) {
            if (!form_pencil.empty()) {
                TschirnhausForm f = tschirnhaus_form(form_n, form_i);
                Pencil pencil = form_pencil == "xn+a" ? Pencil::XnPlusA : Pencil::XnPlusAX;
                MultiPoly sp = radical_specialize(f, pencil);
                if (form_reduced) {
                    MultiPoly::Subst s{{"b_0", Scalar::zero(Ring::ZZ())}};
                    sp = sp.specialize(s, sp.vars());
                }
                std::cout << (form_json ? sp.to_json() : sp.to_string()) << "\n";
                return 0;
            }
            if (form_pretty) {
                // streamed, p_k unexpanded
                bool first = true;
                stream_tschirnhaus_form(form_n, form_i,
                                        [&](const Exponents& kappa, const mpz_class& coef,
                                            const MultiPoly&) {
                                            if (form_reduced && kappa[0] > 0) return;
                                            std::size_t w = 0;
                                            for (std::size_t j = 0; j < kappa.size(); ++j)
                                                w += j * kappa[j];
                                            std::cout << (first ? "" : " + ")
                                                      << pretty_term(kappa, coef, w);
                                            first = false;
                                        });
                std::cout << "\n";
                return 0;
            }
            if (form_json) {
                // streamed JSON terms, fully expanded coefficients in ZZ[a]
                std::cout << "{\"n\":" << form_n << ",\"i\":" << form_i << ",\"vars\":[";
                auto bv = b_var_names(form_n);
                auto av = a_var_names(form_n);
                bool firstv = true;
                for (const auto& v : bv) {
                    std::cout << (firstv ? "" : ",") << "\"" << v << "\"";
                    firstv = false;
                }
                for (const auto& v : av) std::cout << ",\"" << v << "\"";
                std::cout << "],\"terms\":[";
                bool first = true;
                stream_tschirnhaus_form(
                    form_n, form_i,
                    [&](const Exponents& kappa, const mpz_class& coef, const MultiPoly& pk) {
                        if (form_reduced && kappa[0] > 0) return;
                        for (const auto& [ae, ac] : pk.terms()) {
                            if (!first) std::cout << ",";
                            std::cout << "{\"exp\":[";
                            for (std::size_t j = 0; j < kappa.size(); ++j)
                                std::cout << (j ? "," : "") << kappa[j];
                            for (std::size_t j = 0; j < ae.size(); ++j)
                                std::cout << "," << ae[j];
                            mpz_class c = ac.as_int() * coef;
                            std::cout << "],\"coeff\":\"" << c.get_str() << "\"}";
                            first = false;
                        }
                    });
                std::cout << "]}\n";
                return 0;
            }
            TschirnhausForm f = tschirnhaus_form(form_n, form_i);
            MultiPoly body = f.body;
            if (form_reduced) {
                MultiPoly::Subst s{{"b_0", Scalar::zero(Ring::ZZ())}};
                body = body.specialize(s, body.vars());
            }
            std::cout << body.to_string() << "\n";
            return 0;
        }
        if (tr_cmd->parsed()) {
            Ring qq = Ring::QQ();
            CoeffVector a = CoeffVector::parse(qq, tr_coeffs);
            TschirnhausVector b = TschirnhausVector::parse(qq, tr_b);
            CoeffVector c = tr_oracle ? transform_coeffs_oracle(a, b) : transform_coeffs(a, b);
            if (tr_json) {
                nlohmann::json j;
                j["a"] = tr_coeffs;
                j["b"] = tr_b;
                j["c"] = c.to_string();
                j["oracle"] = tr_oracle;
                std::cout << j.dump() << "\n";
            } else {
                std::cout << c.to_string() << "\n";
            }
            return 0;
        }
        if (red_cmd->parsed()) {
            auto a = parse_rationals(red_coeffs);
            ReductionTrace trace;
            if (red_level == "bring") {
                if (red_mode == "tower")
                    return fail_computation("tower mode is supported through the principal step only");
                trace = reduce_to_bring(a, red_seed, red_tol);
            } else {
                trace = reduce_to_principal(
                    a, red_mode == "tower" ? ReduceMode::Tower : ReduceMode::Numeric, red_seed);
            }
            auto ver = verify_trace(trace, red_tol);
            if (red_json) {
                std::cout << trace.to_json() << "\n";
            } else {
                std::cout << "level: " << red_level << "  steps: " << trace.steps.size()
                          << "  exact: " << (trace.exact_zero ? "yes" : "no") << "\n";
                const auto& st = trace.steps.back();
                std::cout << "b:";
                for (const auto& x : st.b) std::cout << " " << x.to_string(8);
                std::cout << "\nc:";
                for (const auto& x : st.c) std::cout << " " << x.to_string(8);
                std::cout << "\nresiduals:";
                for (const auto& r : trace.residuals) std::cout << " " << r.to_string(4);
                std::cout << "\nverified: " << (ver.ok ? "ok" : "FAILED") << "\n";
            }
            return ver.ok ? 0 : 1;
        }
        if (cert_cmd->parsed()) {
            OrbitCertificate cert = orbit_certificate(cert_n, cert_p, cert_r);
            if (cert_check && !verify_certificate(cert))
                return fail_computation("certificate failed self-verification");
            if (cert_matrix) {
                auto rep = certificate_matrix_check(cert, 1, cert_budget, !cert_onvariety);
                std::cout << rep.to_json() << "\n";
                return rep.full_rank() ? 0 : 1;
            }
            std::cout << cert.to_json() << "\n";
            return 0;
        }
        if (vs_cmd->parsed()) {
            Ring field = Ring::GFq(vs_p, vs_m);
            Scalar a = Scalar::parse(field, vs_a);
            Pencil pencil = vs_pencil == "xn+a" ? Pencil::XnPlusA : Pencil::XnPlusAX;
            SmoothnessReport rep = brute_force_smooth(vs_n, parse_degrees(vs_degrees), field, a,
                                                      pencil, vs_reduced, vs_budget, vs_threads);
            std::cout << rep.to_json() << "\n";
            return rep.smooth() ? 0 : 1;
        }
        if (ds_cmd->parsed()) {
            DiscScalingReport rep = quadric_discriminant_scaling(ds_n, ds_trials, ds_seed);
            std::cout << rep.to_json() << "\n";
            return rep.constant ? 0 : 1;
        }
        if (rho_cmd->parsed()) {
            auto k = rho_search(rho_d, rho_kmax);
            if (k)
                std::cout << *k << "\n";
            else
                std::cout << "none up to k = " << rho_kmax << "\n";
            return 0;
        }
    } catch (const std::exception& e) {
        return fail_computation(e.what());
    }
    return 2;
}
