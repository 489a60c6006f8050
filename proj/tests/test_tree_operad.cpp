#include <doctest.h>

#include <random>

#include "braidops/errors.hpp"
#include "braidops/io.hpp"
#include "braidops/operad.hpp"
#include "braidops/tree.hpp"

using namespace braidops;

namespace {

OperadPresentation free_one_generator() {
    OperadPresentation p;
    p.name = "free1";
    p.generator_names = {"m"};
    p.star_coeffs = {Rational(1)};
    return p;
}

int tree_pos(const OperadComponents& c, int arity, const LabeledTree& t) {
    return c.tree_index(arity, t);
}

} // namespace

TEST_CASE("tree enumeration counts and order") {
    CHECK(enumerate_trees(1, 2).size() == 1);
    CHECK(enumerate_trees(1, 2)[0].is_leaf());
    CHECK(enumerate_trees(2, 2).size() == 2);
    CHECK(enumerate_trees(3, 2).size() == 8);
    CHECK(enumerate_trees(4, 2).size() == 40);
    CHECK(enumerate_trees(4, 3).size() == 135);
    CHECK(enumerate_trees(5, 2).size() == 224);

    // left-comb shapes come first, labels in preorder lexicographic order
    const auto trees = enumerate_trees(3, 2);
    CHECK(trees[0] == left_comb(0, 0));
    CHECK(trees[1] == left_comb(0, 1));
    CHECK(trees[2] == left_comb(1, 0));
    CHECK(trees[3] == left_comb(1, 1));
    CHECK(trees[4] == right_comb(0, 0));
}

TEST_CASE("grafting") {
    const LabeledTree mu = generator_tree(0), nu = generator_tree(1);
    CHECK(graft(LabeledTree::leaf(), 0, mu) == mu);
    CHECK(graft(mu, 0, LabeledTree::leaf()) == mu);
    CHECK(graft(mu, 1, LabeledTree::leaf()) == mu);
    CHECK(graft(nu, 0, mu) == left_comb(1, 0));
    CHECK(graft(nu, 1, mu) == right_comb(1, 0));
    CHECK_THROWS_AS(graft(mu, 2, nu), IndexOutOfRange);
}

TEST_CASE("relation vectors of the shipped presets") {
    const OperadPresentation den = load_preset("dendriform");
    const auto rv = relation_vectors(den);
    REQUIRE(rv.size() == 3);
    const auto trees = enumerate_trees(3, 2);
    std::map<std::vector<int>, std::size_t> idx;
    for (std::size_t i = 0; i < trees.size(); ++i) idx[trees[i].code()] = i;

    // first relation: +LC(outer 0, inner 0) - RC(0, 0) - RC(0, 1)
    FreeVector expect(8);
    expect[idx[left_comb(0, 0).code()]] = 1;
    expect[idx[right_comb(0, 0).code()]] = -1;
    expect[idx[right_comb(0, 1).code()]] = -1;
    CHECK(rv[0] == expect);

    // second relation: +LC(outer 0, inner 1) - RC(outer 1, inner 0)
    FreeVector expect2(8);
    expect2[idx[left_comb(0, 1).code()]] = 1;
    expect2[idx[right_comb(1, 0).code()]] = -1;
    CHECK(rv[1] == expect2);

    const OperadPresentation tri = load_preset("tridendriform");
    const auto rv7 = relation_vectors(tri);
    REQUIRE(rv7.size() == 7);
    const auto trees3 = enumerate_trees(3, 3);
    std::map<std::vector<int>, std::size_t> idx3;
    for (std::size_t i = 0; i < trees3.size(); ++i) idx3[trees3[i].code()] = i;
    FreeVector expect7(18);
    expect7[idx3[left_comb(2, 2).code()]] = 1;
    expect7[idx3[right_comb(2, 2).code()]] = -1;
    CHECK(rv7[6] == expect7);
}

TEST_CASE("component dimensions of the presets") {
    const OperadComponents den = build_components(load_preset("dendriform"), 4);
    CHECK(den.dim(1) == 1);
    CHECK(den.dim(2) == 2);
    CHECK(den.dim(3) == 5);
    CHECK(den.dim(4) == 14);

    const OperadComponents tri = build_components(load_preset("tridendriform"), 4);
    CHECK(tri.dim(1) == 1);
    CHECK(tri.dim(2) == 3);
    CHECK(tri.dim(3) == 11);
    CHECK(tri.dim(4) == 45);

    const OperadComponents assoc = build_components(load_preset("associative"), 4);
    for (int k = 1; k <= 4; ++k) CHECK(assoc.dim(k) == 1);

    const OperadComponents free1 = build_components(free_one_generator(), 4);
    CHECK(free1.dim(1) == 1);
    CHECK(free1.dim(2) == 1);
    CHECK(free1.dim(3) == 2);
    CHECK(free1.dim(4) == 5);

    // dimension never exceeds the free count
    for (int k = 1; k <= 4; ++k)
        CHECK(den.dim(k) <= static_cast<int>(den.free_trees(k).size()));

    // one truncation step further
    const OperadComponents den5 = build_components(load_preset("dendriform"), 5);
    CHECK(den5.dim(5) == 42);
}

TEST_CASE("reduction fixes representatives and kills the ideal") {
    const OperadComponents c = build_components(load_preset("dendriform"), 4);
    for (int k = 1; k <= 4; ++k) {
        for (int b = 0; b < c.dim(k); ++b) {
            const auto coords = c.reduce_tree(c.representative(k, b));
            for (int i = 0; i < c.dim(k); ++i)
                CHECK(coords[static_cast<std::size_t>(i)] == (i == b ? Rational(1) : Rational(0)));
        }
        for (const auto& row : c.ideal_rows(k)) {
            const auto coords = c.reduce(k, row);
            for (const Rational& x : coords) CHECK(x.is_zero());
        }
    }
}

TEST_CASE("composition satisfies the unit axioms and the preset identities") {
    const OperadComponents c = build_components(load_preset("dendriform"), 4);
    const PElement prec = c.generator(0), succ = c.generator(1);

    // identity element composes trivially on both sides
    CHECK(compose(c, p_identity(), {prec}) == prec);
    CHECK(compose(c, prec, {p_identity(), p_identity()}) == prec);

    // first defining relation in quotient coordinates
    const PElement lhs = compose(c, prec, {prec, p_identity()});
    PElement rhs = compose(c, prec, {p_identity(), prec});
    const PElement extra = compose(c, prec, {p_identity(), succ});
    for (std::size_t i = 0; i < rhs.coords.size(); ++i) rhs.coords[i] += extra.coords[i];
    CHECK(lhs == rhs);

    CHECK_THROWS_AS(compose(c, prec, {prec, prec, prec}), DimMismatch);
    const PElement big{4, std::vector<Rational>(14, Rational(1))};
    CHECK_THROWS_AS(compose(c, prec, {big, p_identity()}), ArityOverflow);
}

TEST_CASE("composition is associative on nested grafts") {
    const OperadComponents c = build_components(load_preset("tridendriform"), 4);
    std::mt19937 rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        const PElement mu = c.generator(static_cast<int>(rng() % 3));
        const PElement nu = c.generator(static_cast<int>(rng() % 3));
        const PElement rho = c.generator(static_cast<int>(rng() % 3));
        const PElement left =
            compose(c, compose(c, mu, {nu, p_identity()}), {rho, p_identity(), p_identity()});
        const PElement right = compose(c, mu, {compose(c, nu, {rho, p_identity()}), p_identity()});
        CHECK(left == right);
    }
}

TEST_CASE("random relation contexts reduce to zero") {
    for (const char* name : {"dendriform", "tridendriform"}) {
        const OperadPresentation p = load_preset(name);
        const OperadComponents c = build_components(p, 4);
        const auto rels = relation_vectors(p);
        const int n = p.generator_count();
        std::mt19937 rng(123);
        std::uniform_int_distribution<long> coeff(-2, 2);

        for (int trial = 0; trial < 20; ++trial) {
            // random combination of the relations, arity 3
            FreeVector r(c.free_trees(3).size());
            for (const auto& rel : rels) {
                const Rational s(coeff(rng));
                for (std::size_t i = 0; i < r.size(); ++i) r[i] += s * rel[i];
            }
            {
                const auto coords = c.reduce(3, r);
                for (const Rational& x : coords) CHECK(x.is_zero());
            }

            // plug it under a random binary root next to a random tree
            const int g = static_cast<int>(rng() % static_cast<unsigned>(n));
            const auto& others = c.free_trees(1);
            const LabeledTree& t = others[rng() % others.size()];
            FreeVector outer_left(c.free_trees(4).size());
            FreeVector outer_right(c.free_trees(4).size());
            for (std::size_t i = 0; i < r.size(); ++i) {
                if (r[i].is_zero()) continue;
                const LabeledTree& base = c.free_trees(3)[i];
                outer_left[static_cast<std::size_t>(
                    tree_pos(c, 4, LabeledTree::node(g, base, t)))] += r[i];
                outer_right[static_cast<std::size_t>(
                    tree_pos(c, 4, LabeledTree::node(g, t, base)))] += r[i];
            }
            for (const Rational& x : c.reduce(4, outer_left)) CHECK(x.is_zero());
            for (const Rational& x : c.reduce(4, outer_right)) CHECK(x.is_zero());

            // substitute a random generator into a random slot of the relation
            const int pos = static_cast<int>(rng() % 3);
            const int g2 = static_cast<int>(rng() % static_cast<unsigned>(n));
            FreeVector inner(c.free_trees(4).size());
            for (std::size_t i = 0; i < r.size(); ++i) {
                if (r[i].is_zero()) continue;
                const LabeledTree sub = graft(c.free_trees(3)[i], pos, generator_tree(g2));
                inner[static_cast<std::size_t>(tree_pos(c, 4, sub))] += r[i];
            }
            for (const Rational& x : c.reduce(4, inner)) CHECK(x.is_zero());
        }
    }
}

TEST_CASE("star towers of the presets") {
    const OperadComponents den = build_components(load_preset("dendriform"), 4);
    const StarTower t = star_tower(den);
    CHECK(t.associative);
    CHECK(t.splits_ok);

    const OperadComponents tri = build_components(load_preset("tridendriform"), 4);
    CHECK(star_tower(tri).associative);
    CHECK(star_tower(tri).splits_ok);

    const OperadComponents assoc = build_components(load_preset("associative"), 4);
    const StarTower ta = star_tower(assoc);
    CHECK(ta.associative);
    for (int k = 1; k <= 4; ++k) {
        REQUIRE(ta.star[static_cast<std::size_t>(k)].coords.size() == 1);
        CHECK(ta.star[static_cast<std::size_t>(k)].coords[0] == Rational(1));
    }

    // the free generator alone is not associative
    const StarTower tf = star_tower(build_components(free_one_generator(), 4));
    CHECK_FALSE(tf.associative);
    CHECK_FALSE(tf.assoc_difference.empty());
}

TEST_CASE("zero relation is skipped with a warning") {
    OperadPresentation p = free_one_generator();
    QuadraticRelation degenerate;
    degenerate.left.push_back({0, 0, Rational(1)});
    degenerate.left.push_back({0, 0, Rational(-1)});
    degenerate.right = {};
    p.relations.push_back(degenerate);
    // parser would reject an empty relation, but the builder tolerates a
    // relation that cancels to zero
    const OperadComponents c = build_components(p, 3);
    CHECK(c.warnings().size() == 1);
    CHECK(c.dim(3) == 2);
}
