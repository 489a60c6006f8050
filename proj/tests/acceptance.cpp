// Acceptance suite: every check is exact over the rationals, zero tolerance.
// Prints one pass/fail line per criterion and exits with the failure count.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "braidops/coherence.hpp"
#include "braidops/hopf.hpp"
#include "braidops/io.hpp"
#include "braidops/matrix.hpp"
#include "braidops/operad.hpp"

using namespace braidops;

namespace {

int failures = 0;

void criterion(int number, const std::string& what, bool ok, const std::string& detail = "") {
    std::cout << "[criterion " << number << "] " << (ok ? "PASS" : "FAIL") << " - " << what;
    if (!ok && !detail.empty()) std::cout << " (" << detail << ")";
    std::cout << "\n";
    if (!ok) ++failures;
}

std::vector<std::vector<Rational>> generator_basis(const OperadPresentation& p) {
    std::vector<std::vector<Rational>> basis;
    for (int i = 0; i < p.generator_count(); ++i) {
        std::vector<Rational> v(static_cast<std::size_t>(p.generator_count()));
        v[static_cast<std::size_t>(i)] = 1;
        basis.push_back(std::move(v));
    }
    return basis;
}

BraidedSpace involutive_diagonal() {
    return diagonal_braiding({{Rational(1), Rational(2)}, {Rational(1, 2), Rational(-1)}});
}

BraidedSpace noninvolutive_diagonal() {
    return diagonal_braiding({{Rational(1), Rational(2)}, {Rational(2), Rational(1)}});
}

// 1. hexagon checks plus reduced-word independence of the positive lifts
void criterion1() {
    std::string detail;
    bool ok = check_yang_baxter(flip_braiding(1)).ok && check_yang_baxter(flip_braiding(2)).ok &&
              check_yang_baxter(identity_braiding(2)).ok;
    if (!ok) detail = "flip or identity rejected";

    Matrix m = flip_braiding(2).sigma();
    m.at(0, 1) = 1; // single-entry perturbation off the flip pattern
    const YbeCheck bad = check_yang_baxter(BraidedSpace(2, m));
    if (bad.ok || bad.witness.size() != 3) {
        ok = false;
        detail = "perturbed flip not rejected with a witness";
    }

    for (const BraidedSpace& V : {flip_braiding(2), involutive_diagonal()}) {
        if (!check_involutive(V) || !check_yang_baxter(V).ok) {
            ok = false;
            detail = "fixture is not an involutive solution";
            break;
        }
        for (const Permutation& w : all_permutations(4)) {
            const auto words = all_reduced_words(w);
            for (int word_idx = 0; word_idx < 16; ++word_idx) {
                std::vector<int> letters(4);
                for (int i = 0; i < 4; ++i) letters[static_cast<std::size_t>(i)] = (word_idx >> i) & 1;
                const TensorVector t = TensorVector::basis(2, letters);
                const TensorVector first = apply_word(V, words[0], t);
                for (std::size_t k = 1; k < words.size(); ++k) {
                    if (!(apply_word(V, words[k], t) == first)) {
                        ok = false;
                        detail = "two reduced words disagree";
                    }
                }
                if (!(apply_positive_lift(V, w, t) == first)) {
                    ok = false;
                    detail = "canonical lift disagrees";
                }
            }
        }
    }
    criterion(1, "hexagon suite and reduced-word independence", ok, detail);
}

// 2. component dimensions with the arity-3 hand count
void criterion2() {
    std::string detail;
    bool ok = true;

    const OperadPresentation den = load_preset("dendriform");
    const OperadComponents dc = build_components(den, 4);
    ok = ok && dc.dim(1) == 1 && dc.dim(2) == 2 && dc.dim(3) == 5 && dc.dim(4) == 14;

    const OperadPresentation tri = load_preset("tridendriform");
    const OperadComponents tc = build_components(tri, 4);
    ok = ok && tc.dim(1) == 1 && tc.dim(2) == 3 && tc.dim(3) == 11 && tc.dim(4) == 45;
    if (!ok) detail = "quotient dimensions differ from (1,2,5,14)/(1,3,11,45)";

    // arity 3 cross-check: free count minus the rank of the relation span
    const auto den_rel = relation_vectors(den);
    const std::size_t den_rank = rank_of(den_rel);
    const auto tri_rel = relation_vectors(tri);
    const std::size_t tri_rank = rank_of(tri_rel);
    if (8 - den_rank != 5 || den_rank != 3 || 18 - tri_rank != 11 || tri_rank != 7) {
        ok = false;
        detail = "hand count 8-3=5 / 18-7=11 failed";
    }
    criterion(2, "component dimension oracles", ok, detail);
}

// 3. star tower: associativity, all split identities, unit substitutions
void criterion3() {
    bool ok = true;
    std::string detail;
    for (const char* name : {"dendriform", "tridendriform"}) {
        const OperadPresentation p = load_preset(name);
        const OperadComponents c = build_components(p, 4);
        const StarTower t = star_tower(c);
        if (!t.associative || !t.splits_ok) {
            ok = false;
            detail = std::string(name) + ": associativity or splits failed";
            continue;
        }
        // boundary splits hold through the unit functionals
        if (!unit_action_normalized(p, *p.unit_action)) {
            ok = false;
            detail = std::string(name) + ": unit action not normalized";
        }
        for (int n = 2; n <= 4 && ok; ++n) {
            for (int i = 0; i < n; ++i) {
                if (!(substitute_unit(c, *p.unit_action, t.star[static_cast<std::size_t>(n)], i) ==
                      t.star[static_cast<std::size_t>(n - 1)])) {
                    ok = false;
                    detail = std::string(name) + ": unit substitution failed";
                    break;
                }
            }
        }
    }
    criterion(3, "star tower identities", ok, detail);
}

// 4. coherence checker and solver
void criterion4() {
    bool ok = true;
    std::string detail;

    const OperadPresentation den = load_preset("dendriform");
    const OperadPresentation tri = load_preset("tridendriform");
    if (!check_coherence(den, *den.unit_action).all_pass() ||
        !check_coherence(tri, *tri.unit_action).all_pass()) {
        ok = false;
        detail = "preset unit actions rejected";
    }

    UnitAction bad;
    bad.alpha = {Rational(1), Rational(0)};
    bad.beta = {Rational(1), Rational(0)};
    const CoherenceReport rep = check_coherence(den, bad);
    const CoherenceEntry* f = rep.first_failure();
    if (rep.all_pass() || f == nullptr || f->relation != 1 || f->equation != 1) {
        ok = false;
        detail = "corrupted variant did not fail first at (relation 1, C1)";
    }

    const OperadPresentation assoc = load_preset("associative");
    for (const OperadPresentation* p : {&den, &tri, &assoc}) {
        const CoherenceSolution sol = solve_coherence(*p);
        if (sol.kind != CoherenceSolution::Kind::Points || sol.points.empty()) {
            ok = false;
            detail = p->name + ": solver found no points";
            continue;
        }
        bool known = false;
        for (const UnitAction& ua : sol.points) {
            if (!check_coherence(*p, ua).all_pass()) {
                ok = false;
                detail = p->name + ": returned point fails re-verification";
            }
            known = known || (ua.alpha == p->unit_action->alpha &&
                              ua.beta == p->unit_action->beta);
        }
        if (!known) {
            ok = false;
            detail = p->name + ": known point missing from the solution set";
        }
    }
    criterion(4, "coherence checker and solver", ok, detail);
}

// 5. containment in the canonical relation subspaces
void criterion5() {
    bool ok = true;
    std::string detail;

    const OperadPresentation den = load_preset("dendriform");
    const auto dbasis = generator_basis(den);
    const RelationSpace dprime = relation_space(den.star_coeffs, dbasis, RelationSpaceCase::Prime);
    const RelationSpace ddbl =
        relation_space(den.star_coeffs, dbasis, RelationSpaceCase::DoublePrime);
    if (!check_containment(den, dprime).contained) {
        ok = false;
        detail = "dendriform not contained in the distinct-functional subspace";
    }
    if (check_containment(den, ddbl).contained) {
        ok = false;
        detail = "dendriform wrongly contained in the equal-functional subspace";
    }
    // the three relations coincide with listed generators
    if (!(relation_pair_vector(den, 0) == dprime.generators[1] &&
          relation_pair_vector(den, 1) == dprime.generators[2] &&
          relation_pair_vector(den, 2) == dprime.generators[0])) {
        ok = false;
        detail = "dendriform relations do not match the listed generators";
    }

    const OperadPresentation tri = load_preset("tridendriform");
    const RelationSpace tprime =
        relation_space(tri.star_coeffs, generator_basis(tri), RelationSpaceCase::Prime);
    if (!check_containment(tri, tprime).contained) {
        ok = false;
        detail = "tridendriform not contained in the distinct-functional subspace";
    }
    criterion(5, "classification containment", ok, detail);
}

// 6. full axiom suite on both presets, letter dimensions one and two
void criterion6() {
    bool ok = true;
    std::string detail;
    for (const char* name : {"dendriform", "tridendriform"}) {
        const OperadPresentation p = load_preset(name);
        const OperadComponents c = build_components(p, 4);
        for (int dim : {1, 2}) {
            const HopfLab lab(c, *p.unit_action, flip_braiding(dim));
            const HopfReport rep = lab.verify_axioms(true);
            if (!rep.all_pass()) {
                ok = false;
                const HopfReport::Item* item = rep.first_failure();
                detail = std::string(name) + " dim " + std::to_string(dim) + ": " +
                         (item ? item->name + " - " + item->witness : "unknown");
            }
        }
    }

    // the coproduct of a product of two letters has the derived closed form
    {
        const OperadPresentation p = load_preset("dendriform");
        const OperadComponents c = build_components(p, 4);
        const HopfLab lab(c, *p.unit_action, flip_braiding(2));
        const APlusKey x = APlusKey::graded(1, 0, {0});
        const APlusKey y = APlusKey::graded(1, 0, {1});
        const APlusKey xy = APlusKey::graded(2, 0, {0, 1});
        TensorElement expect;
        expect.factors = 2;
        expect.add({xy, APlusKey::unit()}, Rational(1));
        expect.add({APlusKey::unit(), xy}, Rational(1));
        expect.add({y, x}, Rational(1));
        if (!(lab.coproduct(AlgebraElement::basis(xy)) == expect)) {
            ok = false;
            detail = "closed form of the coproduct of a product of letters";
        }
    }
    criterion(6, "braided Hopf axiom suite at degree 4", ok, detail);
}

// 7. corrupted unit action breaks coproduct well-definedness with a witness
void criterion7() {
    const OperadPresentation p = load_preset("dendriform");
    const OperadComponents c = build_components(p, 4);
    UnitAction bad;
    bad.alpha = {Rational(1), Rational(0)};
    bad.beta = {Rational(1), Rational(0)};
    const HopfLab lab(c, bad, flip_braiding(2));
    const HopfReport rep = lab.verify_axioms(false);
    bool ok = false;
    std::string detail = "well-definedness did not fail";
    for (const auto& item : rep.items) {
        if (item.name != "well-definedness") continue;
        ok = item.verdict == HopfReport::Verdict::Fail && !item.witness.empty();
        if (ok) detail.clear();
    }
    criterion(7, "negative control: incoherent unit action is caught", ok, detail);
}

// 8. the morphism flag implies the invariance flag on every shipped fixture
void criterion8() {
    bool ok = true;
    std::string detail;
    struct Config {
        const char* preset;
        BraidedSpace space;
        int dim_note;
        int degree;
    };
    const std::vector<Config> configs = {
        {"dendriform", flip_braiding(1), 1, 4},
        {"dendriform", flip_braiding(2), 2, 4},
        {"dendriform", involutive_diagonal(), 2, 4},
        {"dendriform", noninvolutive_diagonal(), 2, 4},
        {"tridendriform", flip_braiding(1), 1, 4},
        {"tridendriform", flip_braiding(2), 2, 4},
        {"associative", flip_braiding(1), 1, 4},
        {"associative", flip_braiding(2), 2, 4},
        {"associative", noninvolutive_diagonal(), 2, 4},
    };
    for (const Config& cfg : configs) {
        const OperadPresentation p = load_preset(cfg.preset);
        const OperadComponents c = build_components(p, cfg.degree);
        const HopfLab lab(c, *p.unit_action, cfg.space);
        const TwistedCocommutativity tw = lab.check_twisted_cocommutativity();
        if (tw.morphism_holds && !tw.cocomm_holds) {
            ok = false;
            detail = std::string(cfg.preset) + " dim " + std::to_string(cfg.dim_note) +
                     ": morphism holds but the coproduct moves";
        }
    }
    criterion(8, "twisted cocommutativity implication across fixtures", ok, detail);
}

} // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    std::cout << (failures == 0 ? "all criteria pass" : "criteria failed") << "\n";
    return failures;
}
