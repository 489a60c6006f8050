#include "braidops/coherence.hpp"

#include <algorithm>
#include <string>

#include "braidops/errors.hpp"

namespace braidops {

Rational unit_eval(const UnitAction& ua, const std::vector<Rational>& mu, UnitSide side) {
    const std::vector<Rational>& f = (side == UnitSide::RightUnit) ? ua.alpha : ua.beta;
    if (mu.size() != f.size()) throw DimMismatch("unit functional length mismatch");
    Rational acc;
    for (std::size_t i = 0; i < mu.size(); ++i) acc += mu[i] * f[i];
    return acc;
}

bool unit_action_normalized(const OperadPresentation& p, const UnitAction& ua) {
    if (ua.alpha.size() != p.star_coeffs.size() || ua.beta.size() != p.star_coeffs.size())
        return false;
    return unit_eval(ua, p.star_coeffs, UnitSide::RightUnit).is_one() &&
           unit_eval(ua, p.star_coeffs, UnitSide::LeftUnit).is_one();
}

bool CoherenceReport::all_pass() const {
    return std::all_of(entries.begin(), entries.end(),
                       [](const CoherenceEntry& e) { return e.pass; });
}

const CoherenceEntry* CoherenceReport::first_failure() const {
    for (const CoherenceEntry& e : entries)
        if (!e.pass) return &e;
    return nullptr;
}

CoherenceReport check_coherence(const OperadPresentation& p, const UnitAction& ua) {
    const int n = p.generator_count();
    const auto& alpha = ua.alpha;
    const auto& beta = ua.beta;
    if (alpha.size() != static_cast<std::size_t>(n) || beta.size() != static_cast<std::size_t>(n))
        throw DimMismatch("unit functional length mismatch");

    CoherenceReport report;
    for (std::size_t r = 0; r < p.relations.size(); ++r) {
        const QuadraticRelation& rel = p.relations[r];
        std::vector<std::vector<Rational>> diff(6, std::vector<Rational>(n));
        Rational q4, q5; // scalar sides of the two quadratic equations

        for (const auto& t : rel.left) {
            const auto in = static_cast<std::size_t>(t.inner);
            const auto out = static_cast<std::size_t>(t.outer);
            diff[1][out] += t.coeff * beta[in];
            diff[2][out] += t.coeff * alpha[in];
            diff[3][in] += t.coeff * alpha[out];
            diff[4][in] += t.coeff * beta[out];
            q5 += t.coeff * alpha[in] * alpha[out];
        }
        for (const auto& t : rel.right) {
            const auto in = static_cast<std::size_t>(t.inner);
            const auto out = static_cast<std::size_t>(t.outer);
            diff[1][in] -= t.coeff * beta[out];
            diff[2][out] -= t.coeff * beta[in];
            diff[3][out] -= t.coeff * alpha[in];
            q4 += t.coeff * beta[out] * beta[in];
            diff[5][in] -= t.coeff * alpha[out];
        }
        for (int g = 0; g < n; ++g) {
            const auto gi = static_cast<std::size_t>(g);
            diff[4][gi] -= q4 * p.star_coeffs[gi];
            diff[5][gi] += q5 * p.star_coeffs[gi];
        }

        for (int eq = 1; eq <= 5; ++eq) {
            CoherenceEntry entry;
            entry.relation = static_cast<int>(r) + 1;
            entry.equation = eq;
            entry.difference = diff[static_cast<std::size_t>(eq)];
            entry.pass = std::all_of(entry.difference.begin(), entry.difference.end(),
                                     [](const Rational& x) { return x.is_zero(); });
            report.entries.push_back(std::move(entry));
        }
    }
    return report;
}

CoherenceSolution solve_coherence(const OperadPresentation& p) {
    const int n = p.generator_count();
    const std::size_t nn = static_cast<std::size_t>(n);

    // unknowns: alpha_0..alpha_{n-1}, beta_0..beta_{n-1}
    std::vector<std::vector<Rational>> rows;
    std::vector<Rational> rhs;

    std::vector<Rational> norm_a(2 * nn), norm_b(2 * nn);
    for (std::size_t g = 0; g < nn; ++g) {
        norm_a[g] = p.star_coeffs[g];
        norm_b[nn + g] = p.star_coeffs[g];
    }
    rows.push_back(std::move(norm_a));
    rhs.push_back(Rational(1));
    rows.push_back(std::move(norm_b));
    rhs.push_back(Rational(1));

    for (const QuadraticRelation& rel : p.relations) {
        for (std::size_t g = 0; g < nn; ++g) {
            std::vector<Rational> r1(2 * nn), r2(2 * nn), r3(2 * nn);
            for (const auto& t : rel.left) {
                const auto in = static_cast<std::size_t>(t.inner);
                const auto out = static_cast<std::size_t>(t.outer);
                if (out == g) {
                    r1[nn + in] += t.coeff;
                    r2[in] += t.coeff;
                }
                if (in == g) r3[out] += t.coeff;
            }
            for (const auto& t : rel.right) {
                const auto in = static_cast<std::size_t>(t.inner);
                const auto out = static_cast<std::size_t>(t.outer);
                if (in == g) r1[nn + out] -= t.coeff;
                if (out == g) r2[nn + in] -= t.coeff;
                if (out == g) r3[in] -= t.coeff;
            }
            rows.push_back(std::move(r1));
            rhs.push_back(Rational(0));
            rows.push_back(std::move(r2));
            rhs.push_back(Rational(0));
            rows.push_back(std::move(r3));
            rhs.push_back(Rational(0));
        }
    }

    CoherenceSolution sol;
    const auto linear = solve_affine(Matrix::from_rows(rows), rhs);
    if (!linear) {
        sol.kind = CoherenceSolution::Kind::Infeasible;
        sol.note = "linear coherence equations are inconsistent";
        return sol;
    }
    sol.linear_stage = *linear;
    const std::size_t params = linear->param_count();

    // alpha/beta coordinates as affine polynomials in the parameters
    const auto coord_poly = [&](std::size_t xi) {
        Poly q = Poly::constant(params, linear->particular[xi]);
        for (std::size_t d = 0; d < params; ++d)
            q = q + Poly::variable(params, d).scaled(linear->directions[d][xi]);
        return q;
    };
    std::vector<Poly> ap, bp;
    for (std::size_t g = 0; g < nn; ++g) {
        ap.push_back(coord_poly(g));
        bp.push_back(coord_poly(nn + g));
    }

    PolySystem sys;
    for (std::size_t d = 0; d < params; ++d) sys.variables.push_back("t" + std::to_string(d + 1));
    for (const QuadraticRelation& rel : p.relations) {
        Poly q4(params), q5(params);
        for (const auto& t : rel.right) {
            const auto in = static_cast<std::size_t>(t.inner);
            const auto out = static_cast<std::size_t>(t.outer);
            q4 = q4 + (bp[out] * bp[in]).scaled(t.coeff);
        }
        for (const auto& t : rel.left) {
            const auto in = static_cast<std::size_t>(t.inner);
            const auto out = static_cast<std::size_t>(t.outer);
            q5 = q5 + (ap[in] * ap[out]).scaled(t.coeff);
        }
        for (std::size_t g = 0; g < nn; ++g) {
            Poly e4 = Poly(params) - q4.scaled(p.star_coeffs[g]);
            Poly e5 = q5.scaled(p.star_coeffs[g]);
            for (const auto& t : rel.left)
                if (static_cast<std::size_t>(t.inner) == g)
                    e4 = e4 + bp[static_cast<std::size_t>(t.outer)].scaled(t.coeff);
            for (const auto& t : rel.right)
                if (static_cast<std::size_t>(t.inner) == g)
                    e5 = e5 - ap[static_cast<std::size_t>(t.outer)].scaled(t.coeff);
            if (!e4.is_zero()) sys.polynomials.push_back(std::move(e4));
            if (!e5.is_zero()) sys.polynomials.push_back(std::move(e5));
        }
    }

    const PolySolveOutcome out = eliminate_quadratics(sys);

    const auto lift_point = [&](const std::vector<Rational>& t) {
        std::vector<Rational> x = linear->particular;
        for (std::size_t d = 0; d < params; ++d)
            for (std::size_t i = 0; i < x.size(); ++i) x[i] += t[d] * linear->directions[d][i];
        UnitAction ua;
        ua.alpha.assign(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(nn));
        ua.beta.assign(x.begin() + static_cast<std::ptrdiff_t>(nn), x.end());
        return ua;
    };

    switch (out.kind) {
    case PolySolveOutcome::Kind::FinitePoints:
        sol.kind = CoherenceSolution::Kind::Points;
        for (const auto& t : out.points) sol.points.push_back(lift_point(t));
        break;
    case PolySolveOutcome::Kind::AffineSpace: {
        if (out.space.directions.empty()) {
            sol.kind = CoherenceSolution::Kind::Points;
            sol.points.push_back(lift_point(out.space.particular));
            break;
        }
        sol.kind = CoherenceSolution::Kind::Family;
        const UnitAction base = lift_point(out.space.particular);
        sol.family.particular = base.alpha;
        sol.family.particular.insert(sol.family.particular.end(), base.beta.begin(),
                                     base.beta.end());
        for (const auto& d : out.space.directions) {
            std::vector<Rational> dir(2 * nn);
            for (std::size_t pd = 0; pd < params; ++pd)
                for (std::size_t i = 0; i < 2 * nn; ++i)
                    dir[i] += d[pd] * linear->directions[pd][i];
            sol.family.directions.push_back(std::move(dir));
        }
        break;
    }
    case PolySolveOutcome::Kind::NoSolution:
        sol.kind = CoherenceSolution::Kind::NoSolutions;
        sol.note = "quadratic coherence equations have no solutions";
        break;
    case PolySolveOutcome::Kind::Residual:
    case PolySolveOutcome::Kind::TooManyParams:
        sol.kind = CoherenceSolution::Kind::Residual;
        sol.residual = out.residual;
        sol.note = out.note;
        break;
    }
    return sol;
}

namespace {

std::vector<Rational> tensor_square(const std::vector<Rational>& u,
                                    const std::vector<Rational>& v) {
    const std::size_t n = u.size();
    std::vector<Rational> out(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        if (u[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) out[i * n + j] = u[i] * v[j];
    }
    return out;
}

std::vector<Rational> pair_vector(const std::vector<Rational>& first,
                                  const std::vector<Rational>& second) {
    std::vector<Rational> out = first;
    out.insert(out.end(), second.begin(), second.end());
    return out;
}

} // namespace

RelationSpace relation_space(const std::vector<Rational>& star_coeffs,
                             const std::vector<std::vector<Rational>>& basis_ops,
                             RelationSpaceCase space_case) {
    const int n = static_cast<int>(basis_ops.size());
    const std::size_t nn = static_cast<std::size_t>(n);
    if (n < 1) throw Error("empty basis");
    for (const auto& b : basis_ops)
        if (b.size() != star_coeffs.size()) throw DimMismatch("basis vector length mismatch");
    if (star_coeffs.size() != nn)
        throw DimMismatch("basis size must equal the binary-part dimension");

    std::vector<Rational> sum(nn);
    for (const auto& b : basis_ops)
        for (std::size_t g = 0; g < nn; ++g) sum[g] += b[g];
    if (sum != star_coeffs)
        throw StarMismatch("supplied basis does not sum to the distinguished element");
    if (rank_of(basis_ops) != nn) throw Error("supplied operations are not a basis");

    RelationSpace space;
    space.space_case = space_case;
    space.n = n;
    space.basis_ops = basis_ops;

    const std::vector<Rational> zero2(nn * nn);
    const auto p = [&](int i) -> const std::vector<Rational>& {
        return basis_ops[static_cast<std::size_t>(i - 1)];
    };

    if (space_case == RelationSpaceCase::Prime) {
        if (n < 2) throw Error("the distinct-functional case needs at least two operations");
        space.generators.push_back(
            pair_vector(tensor_square(star_coeffs, p(2)), tensor_square(p(2), p(2))));
        space.generators.push_back(
            pair_vector(tensor_square(p(1), p(1)), tensor_square(p(1), star_coeffs)));
        for (int i = 2; i <= n; ++i)
            space.generators.push_back(
                pair_vector(tensor_square(p(i), p(1)), tensor_square(p(i), p(1))));
        for (int j = 3; j <= n; ++j)
            space.generators.push_back(
                pair_vector(tensor_square(p(2), p(j)), tensor_square(p(2), p(j))));
        for (int i = 3; i <= n; ++i)
            space.generators.push_back(
                pair_vector(tensor_square(p(1), p(i)), tensor_square(p(i), p(2))));
        for (int i = 3; i <= n; ++i) {
            for (int j = 3; j <= n; ++j) {
                space.generators.push_back(pair_vector(tensor_square(p(i), p(j)), zero2));
                space.generators.push_back(pair_vector(zero2, tensor_square(p(i), p(j))));
            }
        }
    } else {
        std::vector<Rational> combined(2 * nn * nn);
        const auto add = [&](const std::vector<Rational>& v, const Rational& c) {
            for (std::size_t i = 0; i < v.size(); ++i) combined[i] += c * v[i];
        };
        add(pair_vector(tensor_square(p(1), star_coeffs), tensor_square(p(1), star_coeffs)),
            Rational(1));
        add(pair_vector(tensor_square(star_coeffs, p(1)), tensor_square(star_coeffs, p(1))),
            Rational(1));
        add(pair_vector(tensor_square(p(1), p(1)), tensor_square(p(1), p(1))), Rational(-1));
        space.generators.push_back(std::move(combined));
        for (int i = 2; i <= n; ++i) {
            for (int j = 2; j <= n; ++j) {
                space.generators.push_back(pair_vector(tensor_square(p(i), p(j)), zero2));
                space.generators.push_back(pair_vector(zero2, tensor_square(p(i), p(j))));
            }
        }
    }
    return space;
}

std::vector<Rational> relation_pair_vector(const OperadPresentation& p, int relation_index) {
    const std::size_t nn = static_cast<std::size_t>(p.generator_count());
    const QuadraticRelation& rel = p.relations[static_cast<std::size_t>(relation_index)];
    std::vector<Rational> v(2 * nn * nn);
    for (const auto& t : rel.left)
        v[static_cast<std::size_t>(t.inner) * nn + static_cast<std::size_t>(t.outer)] += t.coeff;
    for (const auto& t : rel.right)
        v[nn * nn + static_cast<std::size_t>(t.outer) * nn + static_cast<std::size_t>(t.inner)] +=
            t.coeff;
    return v;
}

ContainmentResult check_containment(const OperadPresentation& p, const RelationSpace& space) {
    for (std::size_t r = 0; r < p.relations.size(); ++r) {
        if (!subspace_contains(space.generators,
                               relation_pair_vector(p, static_cast<int>(r))))
            return {false, static_cast<int>(r) + 1};
    }
    return {true, 0};
}

namespace {

std::pair<Rational, LabeledTree> collapse_leaf(const LabeledTree& t, int pos,
                                               const UnitAction& ua) {
    const int left_leaves = t.left().leaf_count();
    if (pos < left_leaves) {
        if (t.left().is_leaf())
            return {ua.beta[static_cast<std::size_t>(t.label())], t.right()};
        auto [s, sub] = collapse_leaf(t.left(), pos, ua);
        return {s, LabeledTree::node(t.label(), std::move(sub), t.right())};
    }
    if (t.right().is_leaf())
        return {ua.alpha[static_cast<std::size_t>(t.label())], t.left()};
    auto [s, sub] = collapse_leaf(t.right(), pos - left_leaves, ua);
    return {s, LabeledTree::node(t.label(), t.left(), std::move(sub))};
}

} // namespace

PElement substitute_unit(const OperadComponents& c, const UnitAction& ua, const PElement& e,
                         int leaf_index) {
    if (e.arity < 2) throw Error("unit substitution needs arity >= 2");
    if (leaf_index < 0 || leaf_index >= e.arity)
        throw IndexOutOfRange("leaf index " + std::to_string(leaf_index));

    std::vector<Rational> acc(static_cast<std::size_t>(c.dim(e.arity - 1)));
    for (std::size_t b = 0; b < e.coords.size(); ++b) {
        if (e.coords[b].is_zero()) continue;
        const LabeledTree& tree = c.representative(e.arity, static_cast<int>(b));
        const auto [scalar, collapsed] = collapse_leaf(tree, leaf_index, ua);
        if (scalar.is_zero()) continue;
        const auto reduced = c.reduce_tree(collapsed);
        for (std::size_t i = 0; i < acc.size(); ++i)
            acc[i] += e.coords[b] * scalar * reduced[i];
    }
    return PElement{e.arity - 1, std::move(acc)};
}

} // namespace braidops
