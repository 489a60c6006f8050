#include <doctest.h>

#include "braidops/coherence.hpp"
#include "braidops/errors.hpp"
#include "braidops/io.hpp"

using namespace braidops;

namespace {

UnitAction corrupted_dendriform_unit() {
    UnitAction ua;
    ua.alpha = {Rational(1), Rational(0)};
    ua.beta = {Rational(1), Rational(0)}; // left functional swapped onto the first generator
    return ua;
}

std::vector<std::vector<Rational>> generator_basis(const OperadPresentation& p,
                                                   const std::vector<std::string>& names) {
    std::vector<std::vector<Rational>> basis;
    for (const auto& n : names) {
        std::vector<Rational> v(static_cast<std::size_t>(p.generator_count()));
        v[static_cast<std::size_t>(p.generator_index(n))] = 1;
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace

TEST_CASE("unit functional evaluation") {
    const OperadPresentation p = load_preset("dendriform");
    REQUIRE(p.unit_action.has_value());
    const UnitAction& ua = *p.unit_action;

    const std::vector<Rational> prec = {Rational(1), Rational(0)};
    const std::vector<Rational> succ = {Rational(0), Rational(1)};
    CHECK(unit_eval(ua, prec, UnitSide::RightUnit) == Rational(1));
    CHECK(unit_eval(ua, succ, UnitSide::RightUnit) == Rational(0));
    CHECK(unit_eval(ua, prec, UnitSide::LeftUnit) == Rational(0));
    CHECK(unit_eval(ua, p.star_coeffs, UnitSide::RightUnit) == Rational(1));
    CHECK(unit_eval(ua, p.star_coeffs, UnitSide::LeftUnit) == Rational(1));
    CHECK(unit_action_normalized(p, ua));
}

TEST_CASE("coherence of the shipped presets") {
    for (const char* name : {"dendriform", "tridendriform", "associative"}) {
        const OperadPresentation p = load_preset(name);
        const CoherenceReport rep = check_coherence(p, *p.unit_action);
        CHECK(rep.all_pass());
        CHECK(rep.entries.size() == p.relations.size() * 5);
    }
}

TEST_CASE("corrupted left functional fails first at relation 1, equation C1") {
    const OperadPresentation p = load_preset("dendriform");
    const UnitAction bad = corrupted_dendriform_unit();
    CHECK(unit_action_normalized(p, bad)); // still normalized, only incoherent

    const CoherenceReport rep = check_coherence(p, bad);
    CHECK_FALSE(rep.all_pass());
    const CoherenceEntry* f = rep.first_failure();
    REQUIRE(f != nullptr);
    CHECK(f->relation == 1);
    CHECK(f->equation == 1);
    CHECK(f->difference == std::vector<Rational>{Rational(0), Rational(-1)});
}

TEST_CASE("relation scaling does not change any verdict") {
    OperadPresentation p = load_preset("tridendriform");
    const CoherenceReport before = check_coherence(p, *p.unit_action);
    for (auto& rel : p.relations) {
        for (auto& t : rel.left) t.coeff *= Rational(2);
        for (auto& t : rel.right) t.coeff *= Rational(2);
    }
    const CoherenceReport after = check_coherence(p, *p.unit_action);
    REQUIRE(before.entries.size() == after.entries.size());
    for (std::size_t i = 0; i < before.entries.size(); ++i)
        CHECK(before.entries[i].pass == after.entries[i].pass);
}

TEST_CASE("solver recovers the preset unit actions") {
    {
        const OperadPresentation p = load_preset("dendriform");
        const CoherenceSolution sol = solve_coherence(p);
        REQUIRE(sol.kind == CoherenceSolution::Kind::Points);
        REQUIRE(sol.points.size() == 1);
        CHECK(sol.points[0].alpha == std::vector<Rational>{Rational(1), Rational(0)});
        CHECK(sol.points[0].beta == std::vector<Rational>{Rational(0), Rational(1)});
    }
    {
        const OperadPresentation p = load_preset("tridendriform");
        const CoherenceSolution sol = solve_coherence(p);
        REQUIRE(sol.kind == CoherenceSolution::Kind::Points);
        bool found = false;
        for (const UnitAction& ua : sol.points) {
            found = found ||
                    (ua.alpha == std::vector<Rational>{Rational(1), Rational(0), Rational(0)} &&
                     ua.beta == std::vector<Rational>{Rational(0), Rational(1), Rational(0)});
            CHECK(check_coherence(p, ua).all_pass());
        }
        CHECK(found);
    }
    {
        const OperadPresentation p = load_preset("associative");
        const CoherenceSolution sol = solve_coherence(p);
        REQUIRE(sol.kind == CoherenceSolution::Kind::Points);
        REQUIRE(sol.points.size() == 1);
        CHECK(sol.points[0].alpha == std::vector<Rational>{Rational(1)});
        CHECK(sol.points[0].beta == std::vector<Rational>{Rational(1)});
    }
}

TEST_CASE("solver round trip on an ad-hoc presentation") {
    // one relation pairing the distinguished element with the second generator
    OperadPresentation p;
    p.name = "adhoc";
    p.generator_names = {"a", "b"};
    p.star_coeffs = {Rational(1), Rational(1)};
    QuadraticRelation rel; // (star (x) b, 0)
    rel.left.push_back({0, 1, Rational(1)});
    rel.left.push_back({1, 1, Rational(1)});
    p.relations.push_back(rel);

    const CoherenceSolution sol = solve_coherence(p);
    if (sol.kind == CoherenceSolution::Kind::Points) {
        for (const UnitAction& ua : sol.points) CHECK(check_coherence(p, ua).all_pass());
    } else if (sol.kind == CoherenceSolution::Kind::Family) {
        UnitAction base;
        const std::size_t n = 2;
        base.alpha.assign(sol.family.particular.begin(), sol.family.particular.begin() + n);
        base.beta.assign(sol.family.particular.begin() + n, sol.family.particular.end());
        CHECK(check_coherence(p, base).all_pass());
    }
}

TEST_CASE("a relation-free presentation yields a two-parameter family") {
    OperadPresentation p;
    p.name = "free2";
    p.generator_names = {"a", "b"};
    p.star_coeffs = {Rational(1), Rational(1)};

    const CoherenceSolution sol = solve_coherence(p);
    REQUIRE(sol.kind == CoherenceSolution::Kind::Family);
    CHECK(sol.family.directions.size() == 2);

    UnitAction base;
    base.alpha.assign(sol.family.particular.begin(), sol.family.particular.begin() + 2);
    base.beta.assign(sol.family.particular.begin() + 2, sol.family.particular.end());
    CHECK(unit_action_normalized(p, base));
    CHECK(check_coherence(p, base).all_pass());

    // shifted family members stay normalized solutions
    for (const auto& dir : sol.family.directions) {
        UnitAction shifted = base;
        for (std::size_t i = 0; i < 2; ++i) {
            shifted.alpha[i] += dir[i];
            shifted.beta[i] += dir[i + 2];
        }
        CHECK(unit_action_normalized(p, shifted));
        CHECK(check_coherence(p, shifted).all_pass());
    }
}

TEST_CASE("solver reports inconsistency") {
    // (star (x) star, 0) forces the left functional to vanish on star
    OperadPresentation p;
    p.name = "bad";
    p.generator_names = {"a", "b"};
    p.star_coeffs = {Rational(1), Rational(1)};
    QuadraticRelation rel;
    for (int i = 0; i < 2; ++i)
        for (int o = 0; o < 2; ++o) rel.left.push_back({i, o, Rational(1)});
    p.relations.push_back(rel);
    CHECK(solve_coherence(p).kind == CoherenceSolution::Kind::Infeasible);
}

TEST_CASE("canonical relation space generators") {
    const OperadPresentation den = load_preset("dendriform");
    const auto basis = generator_basis(den, {"prec", "succ"});

    const RelationSpace prime = relation_space(den.star_coeffs, basis, RelationSpaceCase::Prime);
    REQUIRE(prime.generators.size() == 3);
    // (star (x) p2, p2 (x) p2), (p1 (x) p1, p1 (x) star), (p2 (x) p1, p2 (x) p1)
    const std::vector<Rational> g1 = {0, 1, 0, 1, 0, 0, 0, 1};
    const std::vector<Rational> g2 = {1, 0, 0, 0, 1, 1, 0, 0};
    const std::vector<Rational> g3 = {0, 0, 1, 0, 0, 0, 1, 0};
    CHECK(prime.generators[0] == g1);
    CHECK(prime.generators[1] == g2);
    CHECK(prime.generators[2] == g3);

    const RelationSpace dbl =
        relation_space(den.star_coeffs, basis, RelationSpaceCase::DoublePrime);
    CHECK(dbl.generators.size() == 3);

    // generator counts follow the index ranges
    for (int n = 2; n <= 5; ++n) {
        OperadPresentation q;
        q.generator_names.resize(static_cast<std::size_t>(n));
        std::vector<std::vector<Rational>> ops;
        q.star_coeffs.assign(static_cast<std::size_t>(n), Rational(1));
        for (int i = 0; i < n; ++i) {
            std::vector<Rational> v(static_cast<std::size_t>(n));
            v[static_cast<std::size_t>(i)] = 1;
            ops.push_back(std::move(v));
        }
        const auto pr = relation_space(q.star_coeffs, ops, RelationSpaceCase::Prime);
        const auto db = relation_space(q.star_coeffs, ops, RelationSpaceCase::DoublePrime);
        CHECK(static_cast<int>(pr.generators.size()) ==
              2 + (n - 1) + 2 * (n - 2) + 2 * (n - 2) * (n - 2));
        CHECK(static_cast<int>(db.generators.size()) == 1 + 2 * (n - 1) * (n - 1));
    }

    // a basis that does not sum to the distinguished element is rejected
    CHECK_THROWS_AS(relation_space(den.star_coeffs, {basis[0], basis[0]},
                                   RelationSpaceCase::Prime),
                    StarMismatch);
}

TEST_CASE("containment of the preset relations") {
    const OperadPresentation den = load_preset("dendriform");
    const auto basis = generator_basis(den, {"prec", "succ"});
    const RelationSpace prime = relation_space(den.star_coeffs, basis, RelationSpaceCase::Prime);
    const RelationSpace dbl =
        relation_space(den.star_coeffs, basis, RelationSpaceCase::DoublePrime);

    CHECK(check_containment(den, prime).contained);
    CHECK_FALSE(check_containment(den, dbl).contained);

    // each relation coincides with one listed generator
    CHECK(relation_pair_vector(den, 0) == prime.generators[1]);
    CHECK(relation_pair_vector(den, 1) == prime.generators[2]);
    CHECK(relation_pair_vector(den, 2) == prime.generators[0]);

    // swapping the ordered basis breaks containment at the first relation
    const auto swapped = generator_basis(den, {"succ", "prec"});
    const RelationSpace prime_swapped =
        relation_space(den.star_coeffs, swapped, RelationSpaceCase::Prime);
    const ContainmentResult res = check_containment(den, prime_swapped);
    CHECK_FALSE(res.contained);
    CHECK(res.first_offending_relation == 1);

    const OperadPresentation tri = load_preset("tridendriform");
    const auto tbasis = generator_basis(tri, {"prec", "succ", "mid"});
    const RelationSpace tprime = relation_space(tri.star_coeffs, tbasis, RelationSpaceCase::Prime);
    CHECK(check_containment(tri, tprime).contained);
    CHECK_FALSE(check_containment(
                    tri, relation_space(tri.star_coeffs, tbasis, RelationSpaceCase::DoublePrime))
                    .contained);

    // relations 4..7 against the listed generators at n = 3:
    // generator order: (s(x)p2,p2(x)p2), (p1(x)p1,p1(x)s), (p2(x)p1,..), (p3(x)p1,..),
    //                  (p2(x)p3,..), (p1(x)p3,p3(x)p2), (p3(x)p3,0), (0,p3(x)p3)
    CHECK(relation_pair_vector(tri, 3) == tprime.generators[3]);
    CHECK(relation_pair_vector(tri, 5) == tprime.generators[4]);
    CHECK(relation_pair_vector(tri, 4) == tprime.generators[5]);
    {
        std::vector<Rational> split(tprime.generators[6].size());
        for (std::size_t i = 0; i < split.size(); ++i)
            split[i] = tprime.generators[6][i] + tprime.generators[7][i];
        CHECK(relation_pair_vector(tri, 6) == split);
    }
}

TEST_CASE("unit substitution collapses the star tower") {
    for (const char* name : {"dendriform", "tridendriform", "associative"}) {
        const OperadPresentation p = load_preset(name);
        const OperadComponents c = build_components(p, 4);
        const StarTower t = star_tower(c);
        REQUIRE(t.associative);
        for (int n = 2; n <= 4; ++n) {
            for (int i = 0; i < n; ++i) {
                CHECK(substitute_unit(c, *p.unit_action, t.star[static_cast<std::size_t>(n)], i) ==
                      t.star[static_cast<std::size_t>(n - 1)]);
            }
        }
    }
}

TEST_CASE("unit substitution on a single generator emits the functional") {
    const OperadPresentation p = load_preset("dendriform");
    const OperadComponents c = build_components(p, 4);
    const PElement prec = c.generator(0);
    // left slot: collapse scaled by the left functional; right slot by the right
    CHECK(substitute_unit(c, *p.unit_action, prec, 0) ==
          PElement{1, {Rational(0)}});
    CHECK(substitute_unit(c, *p.unit_action, prec, 1) ==
          PElement{1, {Rational(1)}});
    CHECK_THROWS_AS(substitute_unit(c, *p.unit_action, p_identity(), 0), Error);
}
