#pragma once

#include <map>
#include <string>
#include <vector>

#include "braidops/matrix.hpp"
#include "braidops/rational.hpp"

namespace braidops {

/// Sparse multivariate polynomial with rational coefficients.
/// Monomials are exponent vectors indexed by variable.
class Poly {
public:
    using Monomial = std::vector<unsigned>;

    explicit Poly(std::size_t nvars = 0) : nvars_(nvars) {}
    static Poly constant(std::size_t nvars, const Rational& c);
    static Poly variable(std::size_t nvars, std::size_t idx);

    std::size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    int total_degree() const;
    unsigned degree_in(std::size_t var) const;
    const std::map<Monomial, Rational>& terms() const { return terms_; }

    void add_term(Monomial exps, const Rational& c);

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly scaled(const Rational& c) const;

    /// Replace variable `var` by polynomial `value` (same variable space).
    Poly substituted(std::size_t var, const Poly& value) const;

    Rational evaluate(const std::vector<Rational>& point) const;

    std::string str(const std::vector<std::string>& names) const;

private:
    std::size_t nvars_;
    std::map<Monomial, Rational> terms_;
};

/// A handful of polynomials of total degree <= 2 in named variables.
struct PolySystem {
    std::vector<std::string> variables;
    std::vector<Poly> polynomials;

    std::string str() const;
};

/// Exact solution of a PolySystem in at most two variables.
struct PolySolveOutcome {
    enum class Kind {
        NoSolution,    // provably empty even over extensions
        FinitePoints,  // complete list of solutions, all rational
        AffineSpace,   // solution set is a full affine subspace of the parameters
        Residual,      // rational description unavailable; system returned as-is
        TooManyParams, // more than two variables; caller reports the raw system
    };
    Kind kind = Kind::NoSolution;
    std::vector<std::vector<Rational>> points;
    AffineSolutionSet space;
    PolySystem residual;
    std::string note;
};

PolySolveOutcome eliminate_quadratics(const PolySystem& sys);

} // namespace braidops
