#include <doctest.h>

#include <algorithm>

#include "braidops/polysystem.hpp"

using namespace braidops;

namespace {

Poly uni(std::size_t nvars, std::size_t var, const std::vector<Rational>& coeffs) {
    Poly p(nvars);
    for (std::size_t e = 0; e < coeffs.size(); ++e) {
        Poly::Monomial m(nvars, 0);
        m[var] = static_cast<unsigned>(e);
        p.add_term(std::move(m), coeffs[e]);
    }
    return p;
}

bool has_point(const PolySolveOutcome& out, const std::vector<Rational>& pt) {
    return std::find(out.points.begin(), out.points.end(), pt) != out.points.end();
}

} // namespace

TEST_CASE("zero-variable systems accept or reject") {
    PolySystem accept;
    accept.polynomials.push_back(Poly(0));
    const auto a = eliminate_quadratics(accept);
    CHECK(a.kind == PolySolveOutcome::Kind::FinitePoints);
    REQUIRE(a.points.size() == 1);
    CHECK(a.points[0].empty());

    PolySystem reject;
    reject.polynomials.push_back(Poly::constant(0, Rational(1)));
    CHECK(eliminate_quadratics(reject).kind == PolySolveOutcome::Kind::NoSolution);
}

TEST_CASE("univariate quadratics") {
    PolySystem sys;
    sys.variables = {"t"};
    sys.polynomials.push_back(uni(1, 0, {Rational(0), Rational(-1), Rational(1)})); // t^2 - t
    const auto out = eliminate_quadratics(sys);
    CHECK(out.kind == PolySolveOutcome::Kind::FinitePoints);
    CHECK(out.points.size() == 2);
    CHECK(has_point(out, {Rational(0)}));
    CHECK(has_point(out, {Rational(1)}));

    PolySystem irr;
    irr.variables = {"t"};
    irr.polynomials.push_back(uni(1, 0, {Rational(-2), Rational(0), Rational(1)})); // t^2 - 2
    const auto r = eliminate_quadratics(irr);
    CHECK(r.kind == PolySolveOutcome::Kind::Residual);
    CHECK(r.note.find("no rational points") != std::string::npos);

    PolySystem line;
    line.variables = {"t"};
    line.polynomials.push_back(Poly(1)); // identically zero
    const auto l = eliminate_quadratics(line);
    CHECK(l.kind == PolySolveOutcome::Kind::AffineSpace);
    CHECK(l.space.param_count() == 1);
}

TEST_CASE("two variables through a linear member") {
    // x + y - 1 = 0, x y = 0  ->  (1, 0) and (0, 1)
    PolySystem sys;
    sys.variables = {"x", "y"};
    Poly lin = Poly::variable(2, 0) + Poly::variable(2, 1) - Poly::constant(2, Rational(1));
    Poly prod = Poly::variable(2, 0) * Poly::variable(2, 1);
    sys.polynomials = {lin, prod};
    const auto out = eliminate_quadratics(sys);
    CHECK(out.kind == PolySolveOutcome::Kind::FinitePoints);
    CHECK(out.points.size() == 2);
    CHECK(has_point(out, {Rational(1), Rational(0)}));
    CHECK(has_point(out, {Rational(0), Rational(1)}));

    // x - y = 0, x^2 + y^2 - 1 = 0: intersection is irrational
    PolySystem irr;
    irr.variables = {"x", "y"};
    Poly diff = Poly::variable(2, 0) - Poly::variable(2, 1);
    Poly circle = Poly::variable(2, 0) * Poly::variable(2, 0) +
                  Poly::variable(2, 1) * Poly::variable(2, 1) - Poly::constant(2, Rational(1));
    irr.polynomials = {diff, circle};
    CHECK(eliminate_quadratics(irr).kind == PolySolveOutcome::Kind::Residual);
}

TEST_CASE("two variables via univariate members") {
    // x^2 - 1 = 0, y^2 - 4 = 0 -> four points
    PolySystem sys;
    sys.variables = {"x", "y"};
    sys.polynomials = {
        Poly::variable(2, 0) * Poly::variable(2, 0) - Poly::constant(2, Rational(1)),
        Poly::variable(2, 1) * Poly::variable(2, 1) - Poly::constant(2, Rational(4))};
    const auto out = eliminate_quadratics(sys);
    CHECK(out.kind == PolySolveOutcome::Kind::FinitePoints);
    CHECK(out.points.size() == 4);
    CHECK(has_point(out, {Rational(1), Rational(2)}));
    CHECK(has_point(out, {Rational(-1), Rational(-2)}));
}

TEST_CASE("two genuinely bivariate quadratics via the resultant") {
    // x^2 + y^2 - 2 = 0, x y - 1 = 0 -> (1, 1) and (-1, -1)
    PolySystem sys;
    sys.variables = {"x", "y"};
    Poly circle = Poly::variable(2, 0) * Poly::variable(2, 0) +
                  Poly::variable(2, 1) * Poly::variable(2, 1) - Poly::constant(2, Rational(2));
    Poly hyper = Poly::variable(2, 0) * Poly::variable(2, 1) - Poly::constant(2, Rational(1));
    sys.polynomials = {circle, hyper};
    const auto out = eliminate_quadratics(sys);
    CHECK(out.kind == PolySolveOutcome::Kind::FinitePoints);
    CHECK(out.points.size() == 2);
    CHECK(has_point(out, {Rational(1), Rational(1)}));
    CHECK(has_point(out, {Rational(-1), Rational(-1)}));
}

TEST_CASE("parameter overflow is reported, not solved") {
    PolySystem sys;
    sys.variables = {"a", "b", "c"};
    sys.polynomials.push_back(Poly::variable(3, 0) * Poly::variable(3, 1));
    const auto out = eliminate_quadratics(sys);
    CHECK(out.kind == PolySolveOutcome::Kind::TooManyParams);
    CHECK(out.residual.polynomials.size() == 1);
}

TEST_CASE("polynomial printing is stable") {
    Poly p = Poly::variable(2, 0) * Poly::variable(2, 0) -
             Poly::variable(2, 1).scaled(Rational(2)) + Poly::constant(2, Rational(1));
    CHECK(p.str({"x", "y"}) == "1 - 2*y + x^2");
}
