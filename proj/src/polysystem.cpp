#include "braidops/polysystem.hpp"

#include <algorithm>
#include <sstream>

#include "braidops/errors.hpp"

namespace braidops {

Poly Poly::constant(std::size_t nvars, const Rational& c) {
    Poly p(nvars);
    p.add_term(Monomial(nvars, 0), c);
    return p;
}

Poly Poly::variable(std::size_t nvars, std::size_t idx) {
    Poly p(nvars);
    Monomial m(nvars, 0);
    m[idx] = 1;
    p.add_term(std::move(m), Rational(1));
    return p;
}

int Poly::total_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) {
        int t = 0;
        for (unsigned e : m) t += static_cast<int>(e);
        d = std::max(d, t);
    }
    return d;
}

unsigned Poly::degree_in(std::size_t var) const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
    return d;
}

void Poly::add_term(Monomial exps, const Rational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        terms_.emplace(std::move(exps), c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Poly Poly::operator+(const Poly& o) const {
    Poly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    Poly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    Poly r(nvars_);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            Monomial m(nvars_);
            for (std::size_t i = 0; i < nvars_; ++i) m[i] = ma[i] + mb[i];
            r.add_term(std::move(m), ca * cb);
        }
    }
    return r;
}

Poly Poly::scaled(const Rational& c) const {
    Poly r(nvars_);
    for (const auto& [m, v] : terms_) r.add_term(m, v * c);
    return r;
}

Poly Poly::substituted(std::size_t var, const Poly& value) const {
    Poly r(nvars_);
    for (const auto& [m, c] : terms_) {
        Monomial rest = m;
        const unsigned e = rest[var];
        rest[var] = 0;
        Poly piece(nvars_);
        piece.add_term(std::move(rest), c);
        for (unsigned k = 0; k < e; ++k) piece = piece * value;
        r = r + piece;
    }
    return r;
}

Rational Poly::evaluate(const std::vector<Rational>& point) const {
    if (point.size() != nvars_) throw DimMismatch("evaluation point has wrong arity");
    Rational total;
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < nvars_; ++i)
            for (unsigned k = 0; k < m[i]; ++k) t *= point[i];
        total += t;
    }
    return total;
}

std::string Poly::str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        const bool neg = c.sign() < 0;
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        const Rational a = c.abs();
        bool has_var = false;
        for (unsigned e : m)
            if (e > 0) has_var = true;
        if (!a.is_one() || !has_var) os << a.str();
        bool wrote = !a.is_one() || !has_var;
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (m[i] == 0) continue;
            if (wrote) os << "*";
            os << names[i];
            if (m[i] > 1) os << "^" << m[i];
            wrote = true;
        }
    }
    return os.str();
}

std::string PolySystem::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < polynomials.size(); ++i) {
        if (i) os << "; ";
        os << polynomials[i].str(variables) << " = 0";
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// exact solving, at most two variables

namespace {

using UniPoly = std::vector<Rational>; // coeff[i] of t^i, trimmed

void uni_trim(UniPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int uni_deg(const UniPoly& p) { return static_cast<int>(p.size()) - 1; }

UniPoly uni_sub(const UniPoly& a, const UniPoly& b) {
    UniPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    uni_trim(r);
    return r;
}

UniPoly uni_mul(const UniPoly& a, const UniPoly& b) {
    if (a.empty() || b.empty()) return {};
    UniPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    uni_trim(r);
    return r;
}

UniPoly uni_rem(UniPoly a, const UniPoly& b) {
    while (uni_deg(a) >= uni_deg(b) && !a.empty()) {
        const Rational f = a.back() / b.back();
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        uni_trim(a);
    }
    return a;
}

UniPoly uni_monic(UniPoly p) {
    uni_trim(p);
    if (p.empty()) return p;
    const Rational lead = p.back();
    for (Rational& c : p) c /= lead;
    return p;
}

UniPoly uni_gcd(UniPoly a, UniPoly b) {
    uni_trim(a);
    uni_trim(b);
    while (!b.empty()) {
        UniPoly r = uni_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return uni_monic(std::move(a));
}

Rational uni_eval(const UniPoly& p, const Rational& t) {
    Rational acc;
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * t + p[i];
    return acc;
}

// deflation by a known root (exact synthetic division)
UniPoly uni_deflate(const UniPoly& p, const Rational& root) {
    UniPoly q(p.size() - 1);
    Rational carry = p.back();
    for (std::size_t i = p.size() - 1; i-- > 0;) {
        q[i] = carry;
        carry = p[i] + carry * root;
    }
    return q;
}

bool rational_sqrt(const Rational& x, Rational& out) {
    if (x.sign() < 0) return false;
    mpz_class n = x.num(), d = x.den();
    if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return false;
    if (mpz_perfect_square_p(d.get_mpz_t()) == 0) return false;
    mpz_class sn, sd;
    mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
    out = Rational(mpq_class(sn, sd));
    return true;
}

struct RootResult {
    std::vector<Rational> roots;  // distinct rational roots
    bool all_rational = true;     // true iff the full complex root set is the list above
    bool gave_up = false;
    std::string note;
};

// divisors of |n|, bounded; empty result with ok=false when n resists factoring
bool small_divisors(const mpz_class& n, std::vector<mpz_class>& out) {
    mpz_class m = abs(n);
    if (m == 0) return false;
    std::vector<std::pair<mpz_class, unsigned>> factors;
    for (mpz_class p = 2; p * p <= m && p < 1000000; p = (p == 2 ? mpz_class(3) : mpz_class(p + 2))) {
        unsigned e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        if (e) factors.emplace_back(p, e);
    }
    if (m > 1) {
        if (mpz_probab_prime_p(m.get_mpz_t(), 30) == 0 && m > mpz_class("1000000000000"))
            return false;
        factors.emplace_back(m, 1);
    }
    out = {mpz_class(1)};
    for (const auto& [p, e] : factors) {
        const std::size_t base = out.size();
        mpz_class pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) {
                out.push_back(out[i] * pk);
                if (out.size() > 20000) return false;
            }
        }
    }
    return true;
}

RootResult rational_roots(const UniPoly& poly) {
    RootResult res;
    UniPoly p = poly;
    uni_trim(p);
    if (p.empty() || uni_deg(p) == 0) return res;

    while (!p.empty() && p.front().is_zero()) { // roots at 0
        p.erase(p.begin());
        if (std::find(res.roots.begin(), res.roots.end(), Rational(0)) == res.roots.end())
            res.roots.push_back(Rational(0));
    }

    while (uni_deg(p) >= 1) {
        if (uni_deg(p) == 1) {
            const Rational r = -p[0] / p[1];
            if (std::find(res.roots.begin(), res.roots.end(), r) == res.roots.end())
                res.roots.push_back(r);
            return res;
        }
        if (uni_deg(p) == 2) {
            const Rational disc = p[1] * p[1] - Rational(4) * p[2] * p[0];
            Rational sq;
            if (!rational_sqrt(disc, sq)) {
                res.all_rational = false;
                res.note = disc.sign() < 0 ? "no real roots of the quadratic factor"
                                           : "irrational roots of the quadratic factor";
                return res;
            }
            for (const Rational& r : {(-p[1] + sq) / (Rational(2) * p[2]),
                                      (-p[1] - sq) / (Rational(2) * p[2])})
                if (std::find(res.roots.begin(), res.roots.end(), r) == res.roots.end())
                    res.roots.push_back(r);
            return res;
        }
        // degree >= 3: bounded rational-root search, then deflate
        mpz_class lcm = 1;
        for (const Rational& c : p) {
            mpz_class d = c.den();
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), d.get_mpz_t());
            lcm = lcm / g * d;
        }
        std::vector<mpz_class> ic(p.size());
        for (std::size_t i = 0; i < p.size(); ++i)
            ic[i] = mpz_class(p[i].num() * (lcm / p[i].den()));
        std::vector<mpz_class> dnum, dden;
        if (!small_divisors(ic.front(), dnum) || !small_divisors(ic.back(), dden)) {
            res.gave_up = true;
            res.all_rational = false;
            res.note = "rational-root search exceeded factoring bounds";
            return res;
        }
        bool found = false;
        for (const mpz_class& a : dnum) {
            for (const mpz_class& b : dden) {
                for (int s : {1, -1}) {
                    const Rational cand(mpq_class(s * a, b));
                    if (!uni_eval(p, cand).is_zero()) continue;
                    if (std::find(res.roots.begin(), res.roots.end(), cand) == res.roots.end())
                        res.roots.push_back(cand);
                    p = uni_deflate(p, cand);
                    found = true;
                    break;
                }
                if (found) break;
            }
            if (found) break;
        }
        if (!found) {
            res.all_rational = false;
            res.note = "no rational roots of the residual factor (degree " +
                       std::to_string(uni_deg(p)) + ")";
            return res;
        }
    }
    return res;
}

UniPoly to_unipoly(const Poly& p, std::size_t var) {
    UniPoly r;
    for (const auto& [m, c] : p.terms()) {
        for (std::size_t i = 0; i < m.size(); ++i)
            if (i != var && m[i] != 0) throw Error("polynomial is not univariate");
        if (m[var] >= r.size()) r.resize(m[var] + 1);
        r[m[var]] += c;
    }
    uni_trim(r);
    return r;
}

// coefficients of powers of `main`, each a univariate polynomial in the other variable
std::vector<UniPoly> coeffs_in(const Poly& p, std::size_t main, std::size_t other) {
    std::vector<UniPoly> out(p.degree_in(main) + 1);
    for (const auto& [m, c] : p.terms()) {
        UniPoly& u = out[m[main]];
        if (m[other] >= u.size()) u.resize(m[other] + 1);
        u[m[other]] += c;
    }
    for (UniPoly& u : out) uni_trim(u);
    return out;
}

UniPoly uni_det(std::vector<std::vector<UniPoly>> m) {
    const std::size_t n = m.size();
    if (n == 1) return m[0][0];
    UniPoly acc;
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i][0].empty()) continue;
        std::vector<std::vector<UniPoly>> minor;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == i) continue;
            minor.emplace_back(m[r].begin() + 1, m[r].end());
        }
        UniPoly term = uni_mul(m[i][0], uni_det(std::move(minor)));
        if (i % 2) {
            for (Rational& c : term) c = -c;
        }
        acc = uni_sub(acc, term);
        for (Rational& c : acc) c = -c; // acc += term
        uni_trim(acc);
    }
    return acc;
}

// resultant w.r.t. `main`; result is univariate in `other`
UniPoly resultant(const Poly& a, const Poly& b, std::size_t main, std::size_t other) {
    const auto ca = coeffs_in(a, main, other);
    const auto cb = coeffs_in(b, main, other);
    const std::size_t m = ca.size() - 1, n = cb.size() - 1;
    const std::size_t size = m + n;
    std::vector<std::vector<UniPoly>> syl(size, std::vector<UniPoly>(size));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t k = 0; k <= m; ++k) syl[r][r + k] = ca[m - k];
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t k = 0; k <= n; ++k) syl[n + r][r + k] = cb[n - k];
    return uni_det(std::move(syl));
}

PolySolveOutcome residual_outcome(const PolySystem& sys, std::string note) {
    PolySolveOutcome out;
    out.kind = PolySolveOutcome::Kind::Residual;
    out.residual = sys;
    out.note = std::move(note);
    return out;
}

bool satisfies_all(const std::vector<Poly>& polys, const std::vector<Rational>& pt) {
    for (const Poly& p : polys)
        if (!p.evaluate(pt).is_zero()) return false;
    return true;
}

PolySolveOutcome solve_univariate(const PolySystem& sys, const std::vector<Poly>& polys,
                                  std::size_t var) {
    UniPoly g;
    for (const Poly& p : polys) g = uni_gcd(g, to_unipoly(p, var));
    if (uni_deg(g) == 0) {
        PolySolveOutcome out;
        out.kind = PolySolveOutcome::Kind::NoSolution;
        return out;
    }
    const RootResult rr = rational_roots(g);
    if (rr.roots.empty() && !rr.all_rational)
        return residual_outcome(sys, "no rational points; " + rr.note);
    PolySolveOutcome out;
    out.kind = PolySolveOutcome::Kind::FinitePoints;
    for (const Rational& r : rr.roots) out.points.push_back({r});
    if (!rr.all_rational) {
        out.kind = PolySolveOutcome::Kind::Residual;
        out.residual = sys;
        out.note = "further non-rational solutions exist; " + rr.note;
    }
    return out;
}

PolySolveOutcome solve_bivariate(const PolySystem& sys, std::vector<Poly> polys);

// substitute var := value (affine in the other variable) and solve the rest
PolySolveOutcome solve_after_substitution(const PolySystem& sys, const std::vector<Poly>& polys,
                                          std::size_t var, const Poly& value) {
    const std::size_t other = 1 - var;
    std::vector<Poly> reduced;
    for (const Poly& p : polys) {
        Poly q = p.substituted(var, value);
        if (!q.is_zero()) reduced.push_back(std::move(q));
    }
    PolySolveOutcome out;
    if (reduced.empty()) {
        // a full line: other free, var determined by the affine expression
        out.kind = PolySolveOutcome::Kind::AffineSpace;
        std::vector<Rational> base(2), dir(2);
        base[other] = 0;
        base[var] = value.evaluate({Rational(0), Rational(0)});
        dir[other] = 1;
        Poly lin = value;
        std::vector<Rational> at_one(2);
        at_one[other] = 1;
        dir[var] = lin.evaluate(at_one) - base[var];
        out.space.particular = std::move(base);
        out.space.directions = {std::move(dir)};
        return out;
    }
    PolySolveOutcome sub = solve_univariate(sys, reduced, other);
    if (sub.kind == PolySolveOutcome::Kind::NoSolution) return sub;
    if (sub.kind != PolySolveOutcome::Kind::FinitePoints)
        return residual_outcome(sys, sub.note);
    out.kind = PolySolveOutcome::Kind::FinitePoints;
    for (const auto& p1 : sub.points) {
        std::vector<Rational> pt(2);
        pt[other] = p1[0];
        pt[var] = value.evaluate(pt);
        if (satisfies_all(polys, pt)) out.points.push_back(std::move(pt));
    }
    return out;
}

PolySolveOutcome solve_bivariate(const PolySystem& sys, std::vector<Poly> polys) {
    // eliminate via a linear polynomial when one is available
    for (const Poly& p : polys) {
        if (p.total_degree() > 1) continue;
        if (p.total_degree() == 0) {
            PolySolveOutcome out;
            out.kind = PolySolveOutcome::Kind::NoSolution;
            return out;
        }
        // c0 + c1 x0 + c2 x1 = 0
        Rational c0, c1, c2;
        for (const auto& [m, c] : p.terms()) {
            if (m[0] == 1) c1 = c;
            else if (m[1] == 1) c2 = c;
            else c0 = c;
        }
        const std::size_t var = c1.is_zero() ? 1 : 0;
        const Rational& cv = c1.is_zero() ? c2 : c1;
        const Rational& co = c1.is_zero() ? c1 : c2;
        Poly value = Poly::constant(2, -c0 / cv) +
                     Poly::variable(2, 1 - var).scaled(-co / cv);
        return solve_after_substitution(sys, polys, var, value);
    }

    // purely quadratic from here on; use a univariate member when present
    for (std::size_t v = 0; v < 2; ++v) {
        for (const Poly& p : polys) {
            if (p.degree_in(1 - v) != 0) continue;
            const RootResult rr = rational_roots(to_unipoly(p, v));
            if (!rr.all_rational || rr.gave_up)
                return residual_outcome(sys, "no complete rational root list; " + rr.note);
            PolySolveOutcome out;
            out.kind = PolySolveOutcome::Kind::FinitePoints;
            for (const Rational& r : rr.roots) {
                PolySolveOutcome branch =
                    solve_after_substitution(sys, polys, v, Poly::constant(2, r));
                if (branch.kind == PolySolveOutcome::Kind::Residual)
                    return branch;
                if (branch.kind == PolySolveOutcome::Kind::AffineSpace)
                    return residual_outcome(sys, "positive-dimensional branch; not parameterized");
                for (auto& pt : branch.points) out.points.push_back(std::move(pt));
            }
            if (out.points.empty()) out.kind = PolySolveOutcome::Kind::NoSolution;
            return out;
        }
    }

    // two genuinely bivariate quadratics: eliminate x1 by resultant
    const UniPoly res = resultant(polys[0], polys[1], 1, 0);
    if (res.empty())
        return residual_outcome(sys, "polynomials share a positive-dimensional component");
    const RootResult rr = rational_roots(res);
    if (rr.gave_up) return residual_outcome(sys, rr.note);
    PolySolveOutcome out;
    out.kind = PolySolveOutcome::Kind::FinitePoints;
    for (const Rational& x0 : rr.roots) {
        PolySolveOutcome branch = solve_after_substitution(sys, polys, 0, Poly::constant(2, x0));
        if (branch.kind == PolySolveOutcome::Kind::Residual) return branch;
        if (branch.kind == PolySolveOutcome::Kind::AffineSpace)
            return residual_outcome(sys, "positive-dimensional branch; not parameterized");
        for (auto& pt : branch.points) out.points.push_back(std::move(pt));
    }
    if (!rr.all_rational) {
        PolySolveOutcome resid = residual_outcome(
            sys, "solutions with irrational coordinates may exist; " + rr.note);
        resid.points = std::move(out.points);
        return resid;
    }
    if (out.points.empty()) out.kind = PolySolveOutcome::Kind::NoSolution;
    return out;
}

} // namespace

PolySolveOutcome eliminate_quadratics(const PolySystem& sys) {
    const std::size_t n = sys.variables.size();
    std::vector<Poly> polys;
    for (const Poly& p : sys.polynomials) {
        if (p.nvars() != n) throw DimMismatch("polynomial/variable arity mismatch");
        if (!p.is_zero()) polys.push_back(p);
    }
    PolySolveOutcome out;
    if (n > 2) {
        out.kind = PolySolveOutcome::Kind::TooManyParams;
        out.residual = sys;
        out.note = "more than two free parameters";
        return out;
    }
    if (polys.empty()) {
        if (n == 0) {
            out.kind = PolySolveOutcome::Kind::FinitePoints;
            out.points.push_back({});
            return out;
        }
        out.kind = PolySolveOutcome::Kind::AffineSpace;
        out.space.particular.assign(n, Rational(0));
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<Rational> dir(n);
            dir[i] = 1;
            out.space.directions.push_back(std::move(dir));
        }
        return out;
    }
    if (n == 0) {
        out.kind = PolySolveOutcome::Kind::NoSolution;
        return out;
    }
    if (n == 1) return solve_univariate(sys, polys, 0);
    return solve_bivariate(sys, std::move(polys));
}

} // namespace braidops
