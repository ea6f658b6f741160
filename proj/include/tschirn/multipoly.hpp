#ifndef TSCHIRN_MULTIPOLY_HPP
#define TSCHIRN_MULTIPOLY_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "tschirn/scalar.hpp"

namespace tsch {

using Exponents = std::vector<std::uint32_t>;

// graded lexicographic, higher terms first (leading term printed first)
struct GrlexDesc {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

// Sparse multivariate polynomial over an exact ring. Terms are kept in
// descending graded-lex order of the declared variable list; no stored term
// has a zero coefficient, so equality is structural.
class MultiPoly {
  public:
    using TermMap = std::map<Exponents, Scalar, GrlexDesc>;

    MultiPoly(Ring ring, std::vector<std::string> vars)
        : ring_(std::move(ring)), vars_(std::move(vars)) {}

    static MultiPoly zero(const Ring& r, std::vector<std::string> vars) {
        return MultiPoly(r, std::move(vars));
    }
    static MultiPoly constant(const Ring& r, std::vector<std::string> vars, const Scalar& c);
    static MultiPoly variable(const Ring& r, std::vector<std::string> vars,
                              const std::string& name);

    const Ring& ring() const { return ring_; }
    const std::vector<std::string>& vars() const { return vars_; }
    std::size_t nvars() const { return vars_.size(); }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    // adds c * x^exp into the polynomial (dropping the term if it cancels)
    void add_term(const Exponents& exp, const Scalar& c);

    MultiPoly operator-() const;
    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator*(const Scalar& c) const;
    MultiPoly pow(unsigned e) const;
    bool operator==(const MultiPoly& o) const;
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    unsigned total_degree() const; // 0 for the zero polynomial
    unsigned degree_in(std::size_t var_index) const;
    // homogeneous of the given degree in the listed variable block
    bool homogeneous_in(std::span<const std::size_t> block, unsigned degree) const;

    std::optional<std::size_t> var_index(const std::string& name) const;

    // exact evaluation; assignment must cover every variable that appears
    Scalar eval(const std::map<std::string, Scalar>& assignment) const;
    // positional evaluation (values for all declared variables, same ring)
    Scalar eval_vec(std::span<const Scalar> values) const;

    MultiPoly partial(const std::string& var) const;

    // substitutes scalars and/or polynomials for some variables. The result
    // lives on target_vars (remaining variables by default); substituted
    // polynomials must only use variables declared there.
    using Subst = std::map<std::string, std::variant<Scalar, MultiPoly>>;
    MultiPoly specialize(const Subst& subst,
                         std::optional<std::vector<std::string>> target_vars = {}) const;

    // explicit ring embedding applied to every coefficient
    MultiPoly cast_to(const Ring& target) const;
    // reorder/extend to a new variable list (must contain all used vars)
    MultiPoly with_vars(const std::vector<std::string>& new_vars) const;

    std::string to_string() const;
    std::string to_json() const;
    static MultiPoly parse(const Ring& r, const std::vector<std::string>& vars,
                           const std::string& text);
    static MultiPoly from_json(const std::string& text);

  private:
    Ring ring_;
    std::vector<std::string> vars_;
    TermMap terms_;
};

mpz_class binomial(const mpz_class& n, unsigned long k);
mpz_class factorial(unsigned long n);
// i! / (kappa_0! kappa_1! ... )
mpz_class multinomial(unsigned i, const Exponents& kappa);

// Iterates over all exponent vectors kappa in N^n with |kappa| = total,
// in descending lex order, O(n) state. Returns false when exhausted.
class CompositionIter {
  public:
    CompositionIter(std::size_t n, unsigned total);
    bool valid() const { return valid_; }
    const Exponents& kappa() const { return k_; }
    void next();

  private:
    Exponents k_;
    unsigned total_;
    bool valid_;
};

} // namespace tsch

#endif
