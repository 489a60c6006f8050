#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "braidops/matrix.hpp"
#include "braidops/rational.hpp"
#include "braidops/tree.hpp"

namespace braidops {

/// One quadratic relation between two-step composites of binary generators.
/// Left terms place the inner operation in the first argument slot, right
/// terms place it in the second; the relation asserts sum(left) = sum(right).
struct QuadraticRelation {
    struct Term {
        int inner = 0;
        int outer = 0;
        Rational coeff = Rational(1);
    };
    std::vector<Term> left;
    std::vector<Term> right;
};

/// Pair of functionals on the binary part describing how generators absorb
/// the adjoined 0-ary unit: mu(a, 1) = alpha(mu) a and mu(1, a) = beta(mu) a.
struct UnitAction {
    std::vector<Rational> alpha;
    std::vector<Rational> beta;
};

struct OperadPresentation {
    std::string name;
    std::vector<std::string> generator_names;
    std::vector<Rational> star_coeffs; // distinguished associative element, generator basis
    std::vector<QuadraticRelation> relations;
    std::optional<UnitAction> unit_action;

    int generator_count() const { return static_cast<int>(generator_names.size()); }
    int generator_index(const std::string& name) const;
};

/// Dense coordinates over the enumerate_trees basis of one arity.
using FreeVector = std::vector<Rational>;

/// Element of one graded component of the quotient, in quotient-basis
/// coordinates.
struct PElement {
    int arity = 1;
    std::vector<Rational> coords;

    bool is_zero() const;
    friend bool operator==(const PElement&, const PElement&) = default;
};

PElement p_identity();

/// One arity-3 vector per relation: +coeff on left-comb trees, -coeff on
/// right-comb trees, in the free-tree basis.
std::vector<FreeVector> relation_vectors(const OperadPresentation& p);

/// Per-arity quotient data of the presented operad, truncated at max_arity:
/// free tree bases, the relation ideal in row-reduced form, quotient bases
/// with representative trees, reduction maps, and binary composition tables.
class OperadComponents {
public:
    int max_arity() const { return max_arity_; }
    int generator_count() const { return pres_.generator_count(); }
    const OperadPresentation& presentation() const { return pres_; }
    const std::vector<std::string>& warnings() const { return warnings_; }

    int dim(int arity) const;
    const std::vector<LabeledTree>& free_trees(int arity) const;
    int tree_index(int arity, const LabeledTree& t) const;
    const LabeledTree& representative(int arity, int basis_index) const;
    const std::vector<std::vector<Rational>>& ideal_rows(int arity) const;

    std::vector<Rational> reduce(int arity, const FreeVector& v) const;
    std::vector<Rational> reduce_tree(const LabeledTree& t) const;
    FreeVector lift(const PElement& e) const;

    PElement generator(int g) const;

    /// Quotient coordinates of generator g applied to basis elements
    /// (a, ai) and (b, bi); arities must satisfy a + b <= max_arity.
    const std::vector<Rational>& binary_compose(int g, int a, int ai, int b, int bi) const;

    friend OperadComponents build_components(const OperadPresentation& p, int max_arity);

private:
    struct Graded {
        std::vector<LabeledTree> trees;
        std::map<std::vector<int>, int> index;      // tree code -> free position
        std::vector<std::vector<Rational>> ideal;   // reduced row-echelon basis
        std::vector<std::size_t> pivots;            // pivot column per ideal row
        std::vector<int> basis_cols;                // free columns = quotient basis
    };

    const Graded& graded(int arity) const;

    OperadPresentation pres_;
    int max_arity_ = 0;
    std::vector<Graded> by_arity_; // index 1..max_arity
    std::vector<std::string> warnings_;
    // tables_[g][a][b][ai * dim(b) + bi]
    std::vector<std::vector<std::vector<std::vector<std::vector<Rational>>>>> tables_;
};

OperadComponents build_components(const OperadPresentation& p, int max_arity);

/// Operadic composition through representatives followed by reduction;
/// multilinear in the root and every argument.
PElement compose(const OperadComponents& c, const PElement& root,
                 const std::vector<PElement>& args);

/// The tower of iterated products of the distinguished element, one per
/// arity, together with the associativity verdict and the split identities.
struct StarTower {
    bool associative = false;
    std::vector<Rational> assoc_difference; // arity-3 quotient coordinates when not associative
    std::vector<PElement> star;             // star[k] for 1 <= k <= max arity; [0] unused
    bool splits_ok = false;
    std::string splits_witness;
};

StarTower star_tower(const OperadComponents& c);

} // namespace braidops
