#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rational.hpp"

namespace mfwb {

// Ordered variable names of a polynomial ring. Shared by every value built
// over the ring; two rings are compatible when the name lists are equal.
using Vars = std::vector<std::string>;
using VarsPtr = std::shared_ptr<const Vars>;

VarsPtr make_vars(Vars names);
bool same_vars(const VarsPtr& a, const VarsPtr& b);

// Exponent tuple, one entry per ring variable.
using Exps = std::vector<int>;

inline int total_degree(const Exps& e)
{
    int d = 0;
    for (int k : e)
        d += k;
    return d;
}

// Graded-lexicographic order: total degree first, ties broken by
// lexicographic comparison of exponent tuples (earlier variables dominate).
struct GrlexLess {
    bool operator()(const Exps& a, const Exps& b) const
    {
        int da = total_degree(a), db = total_degree(b);
        if (da != db)
            return da < db;
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    }
};

std::vector<Exps> monomials_of_degree(int nvars, int degree);
std::vector<Exps> monomials_below_degree(int nvars, int bound); // total degree < bound

// Sparse multivariate polynomial over the rationals. Terms are kept in a
// graded-lex ordered map with no zero coefficients stored.
class Polynomial {
public:
    using TermMap = std::map<Exps, Rat, GrlexLess>;

    Polynomial() = default;
    explicit Polynomial(VarsPtr vars) : vars_(std::move(vars)) {}

    static Polynomial zero(VarsPtr vars) { return Polynomial(std::move(vars)); }
    static Polynomial constant(VarsPtr vars, Rat c);
    static Polynomial variable(const VarsPtr& vars, int index);
    static Polynomial monomial(VarsPtr vars, Exps e, Rat c);

    const VarsPtr& vars() const { return vars_; }
    int nvars() const { return vars_ ? static_cast<int>(vars_->size()) : 0; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // -1 for the zero polynomial.
    int degree() const;
    int degree_in(int var) const;
    Rat coefficient(const Exps& e) const;
    Rat constant_term() const;
    Rat leading_coefficient() const; // graded-lex greatest term
    const Exps& leading_monomial() const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { a += b; return a; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { a -= b; return a; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

    Polynomial scaled(const Rat& c) const;
    Polynomial pow(int e) const;

    Polynomial derivative(int var) const;

    // Simultaneous substitution. Variables listed in `assignment` (keyed by
    // index in this ring) are replaced by the given polynomials over
    // `target`; every other variable must exist by name in `target`.
    Polynomial substitute(const std::map<int, Polynomial>& assignment,
                          const VarsPtr& target) const;

    // Exponent-level variable transport into `target`: var_map[i] gives the
    // target index of source variable i. Cheap injections and renamings.
    Polynomial remap(const VarsPtr& target, const std::vector<int>& var_map) const;

    // Merge the exponent of variable `from` onto variable `to` (substitution
    // x_from -> x_to within the same ring).
    Polynomial merge_var(int from, int to) const;

    std::string to_string() const;

    friend bool operator==(const Polynomial& a, const Polynomial& b);
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    void add_term(const Exps& e, const Rat& c);

private:
    void require_compatible(const Polynomial& o) const;

    VarsPtr vars_;
    TermMap terms_;
};

// (R, w): polynomial ring with a potential w in the maximal ideal.
struct RingContext {
    VarsPtr vars;
    Polynomial w;

    int n() const { return static_cast<int>(vars->size()); }
};

RingContext make_ring(Vars names, const std::string& potential_expr);
RingContext make_ring(VarsPtr vars, Polynomial w);

// Recursive-descent parser for the expression grammar
//   expr   := ('+'|'-')? term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' uint)?
//   base   := rational | var | '(' expr ')'
// Reports unknown identifiers, malformed syntax and negative exponents with
// the source position.
Polynomial parse_polynomial(std::string_view text, const VarsPtr& vars);

} // namespace mfwb
