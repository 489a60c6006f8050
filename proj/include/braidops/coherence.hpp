#pragma once

#include <string>
#include <vector>

#include "braidops/operad.hpp"
#include "braidops/polysystem.hpp"

namespace braidops {

enum class UnitSide {
    RightUnit, // a mu 1 = alpha(mu) a
    LeftUnit,  // 1 mu a = beta(mu) a
};

/// Value of the unit functional on a binary-part vector mu.
Rational unit_eval(const UnitAction& ua, const std::vector<Rational>& mu, UnitSide side);

/// true iff alpha(star) = beta(star) = 1.
bool unit_action_normalized(const OperadPresentation& p, const UnitAction& ua);

/// Per-relation verdicts of the five compatibility equations between the
/// relations and a unit action. Equations 1-3 compare vectors in the binary
/// part; 4 and 5 compare against the stated multiple of the distinguished
/// element. `difference` is always lhs - rhs in generator coordinates.
struct CoherenceEntry {
    int relation = 0; // 1-based
    int equation = 0; // 1..5
    bool pass = false;
    std::vector<Rational> difference;
};

struct CoherenceReport {
    std::vector<CoherenceEntry> entries;
    bool all_pass() const;
    const CoherenceEntry* first_failure() const;
};

CoherenceReport check_coherence(const OperadPresentation& p, const UnitAction& ua);

/// Exact solution of the coherence equations over the unknown pair of unit
/// functionals: the linear equations plus both normalizations are solved
/// first; the affine family is then substituted into the two quadratic
/// equations and eliminated exactly (up to two free parameters).
struct CoherenceSolution {
    enum class Kind {
        Infeasible,  // linear stage inconsistent
        NoSolutions, // quadratic stage empty over the rationals and over extensions
        Points,      // complete finite list
        Family,      // solution set is an affine family
        Residual,    // quadratic residue not rationally solvable; system reported
    };
    Kind kind = Kind::Infeasible;
    std::vector<UnitAction> points;
    AffineSolutionSet family;      // in (alpha, beta) coordinates, length 2n
    AffineSolutionSet linear_stage; // always present unless Infeasible
    PolySystem residual;
    std::string note;
};

CoherenceSolution solve_coherence(const OperadPresentation& p);

/// The two canonical subspaces of relation pairs compatible with some unit
/// action, spelled out over a supplied ordered basis {p_i} of the binary
/// part summing to the distinguished element.
enum class RelationSpaceCase { Prime, DoublePrime };

struct RelationSpace {
    RelationSpaceCase space_case = RelationSpaceCase::Prime;
    int n = 0;
    std::vector<std::vector<Rational>> basis_ops;  // each length n
    std::vector<std::vector<Rational>> generators; // each length 2 n^2
};

RelationSpace relation_space(const std::vector<Rational>& star_coeffs,
                             const std::vector<std::vector<Rational>>& basis_ops,
                             RelationSpaceCase space_case);

/// Relation as a pair vector in (binary part)^{x2} + (binary part)^{x2}:
/// left terms flatten as inner*n + outer, right terms as outer*n + inner.
std::vector<Rational> relation_pair_vector(const OperadPresentation& p, int relation_index);

struct ContainmentResult {
    bool contained = true;
    int first_offending_relation = 0; // 1-based; 0 when contained
};

ContainmentResult check_containment(const OperadPresentation& p, const RelationSpace& space);

/// Partial composition with the adjoined 0-ary unit at one leaf: the leaf's
/// parent vertex collapses onto its sibling subtree, scaled by alpha or beta
/// of the vertex label. Input arity must be at least 2.
PElement substitute_unit(const OperadComponents& c, const UnitAction& ua, const PElement& e,
                         int leaf_index);

} // namespace braidops
