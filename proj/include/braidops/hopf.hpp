#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "braidops/braided_space.hpp"
#include "braidops/coherence.hpp"
#include "braidops/operad.hpp"

namespace braidops {

/// Basis key of the truncated unitary free algebra: the unit (arity 0) or a
/// graded piece (arity, quotient basis index, letter word over the space).
struct APlusKey {
    int arity = 0;
    int basis = 0;
    std::vector<int> word;

    bool is_unit() const { return arity == 0; }
    static APlusKey unit() { return {}; }
    static APlusKey graded(int arity, int basis, std::vector<int> word) {
        return {arity, basis, std::move(word)};
    }

    friend bool operator==(const APlusKey&, const APlusKey&) = default;
    friend auto operator<=>(const APlusKey&, const APlusKey&) = default;
};

/// Element of the truncated unitary free algebra. `overflow` records that a
/// product spilled past the truncation arity and poisons equality checks.
struct AlgebraElement {
    Rational unit;
    std::map<APlusKey, Rational> terms; // graded keys only
    bool overflow = false;

    static AlgebraElement unit_element(const Rational& c = Rational(1));
    static AlgebraElement basis(APlusKey k);
    void add(const APlusKey& k, const Rational& c);
    bool is_zero() const { return unit.is_zero() && terms.empty(); }

    friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;
};

/// Element of a tensor power of the unitary algebra, `factors` keys per term.
struct TensorElement {
    int factors = 2;
    std::map<std::vector<APlusKey>, Rational> terms;
    bool overflow = false;

    static TensorElement singleton(std::vector<APlusKey> keys);
    void add(std::vector<APlusKey> keys, const Rational& c);
    bool is_zero() const { return terms.empty(); }

    friend bool operator==(const TensorElement&, const TensorElement&) = default;
};

struct HopfReport {
    enum class Verdict { Pass, Fail, Inconclusive };
    struct Item {
        std::string name;
        Verdict verdict = Verdict::Pass;
        std::string witness;
    };
    std::vector<Item> items;

    bool all_pass() const; // no failures; inconclusive entries do not fail
    const Item* first_failure() const;
};

struct TwistedCocommutativity {
    bool morphism_holds = false;
    bool cocomm_holds = false;
    std::string morphism_witness;
    std::string cocomm_witness;
};

/// The truncated unitary free algebra over a braided space, with the induced
/// braiding, the twisted tensor-square products, the coproduct fixed on
/// letters, counit, antipode, and an exhaustive axiom suite.
class HopfLab {
public:
    HopfLab(const OperadComponents& components, const UnitAction& ua, BraidedSpace space);

    int truncation() const { return comp_.max_arity(); }
    int letter_dim() const { return space_.dim(); }
    const OperadComponents& components() const { return comp_; }
    const UnitAction& unit_action() const { return ua_; }

    std::vector<std::vector<int>> words(int length) const;
    std::vector<APlusKey> graded_keys(int arity) const;

    AlgebraElement element(const APlusKey& k) const;

    AlgebraElement product(const std::vector<Rational>& mu, const AlgebraElement& x,
                           const AlgebraElement& y) const;
    AlgebraElement star_product(const AlgebraElement& x, const AlgebraElement& y) const;

    /// Induced braiding on a pure pair: list of (first, second, coeff) with
    /// the two tensor factors exchanged; unit factors cross trivially.
    std::vector<std::tuple<APlusKey, APlusKey, Rational>> cross(const APlusKey& x,
                                                                const APlusKey& y) const;

    /// Twisted product of the tensor square: one operation applied to two
    /// pure pairs, the inner factors crossed by the induced braiding.
    TensorElement boxtimes_pure(const std::vector<Rational>& mu, const APlusKey& x1,
                                const APlusKey& y1, const APlusKey& x2,
                                const APlusKey& y2) const;
    TensorElement boxtimes(const std::vector<Rational>& mu, const TensorElement& left,
                           const TensorElement& right) const;

    TensorElement coproduct(const AlgebraElement& e) const;
    /// Structural coproduct of one decorated tree; used directly by the
    /// well-definedness check.
    const TensorElement& coproduct_of_tree(const LabeledTree& t,
                                           const std::vector<int>& word) const;

    Rational counit(const AlgebraElement& e) const { return e.unit; }
    AlgebraElement antipode(const AlgebraElement& e) const;

    // pipeline steps on tensor powers, positions 1-based
    TensorElement braid_at(const TensorElement& t, int pos) const;
    TensorElement product_at(const TensorElement& t, const std::vector<Rational>& mu,
                             int pos) const;
    TensorElement delta_at(const TensorElement& t, int pos) const;
    TensorElement counit_at(const TensorElement& t, int pos) const;
    TensorElement antipode_at(const TensorElement& t, int pos) const;

    HopfReport verify_axioms(bool include_antipode = true) const;
    TwistedCocommutativity check_twisted_cocommutativity() const;

    std::string key_str(const APlusKey& k) const;

private:
    TensorElement tensor_pair(const AlgebraElement& a, const AlgebraElement& b) const;
    AlgebraElement pure_product(const std::vector<Rational>& mu, const APlusKey& x,
                                const APlusKey& y) const;
    const TensorElement& delta_key(const APlusKey& k) const;
    const AlgebraElement& antipode_key(const APlusKey& k) const;

    OperadComponents comp_;
    UnitAction ua_;
    BraidedSpace space_;
    std::vector<std::vector<Rational>> gen_vec_; // generator coordinate vectors

    // braid lift of the block swap for each pair of arities, word -> image
    std::map<std::pair<int, int>, std::map<std::vector<int>, TensorVector>> block_lift_;

    mutable std::map<std::pair<std::vector<int>, std::vector<int>>, TensorElement> delta_memo_;
    mutable std::map<APlusKey, AlgebraElement> antipode_memo_;
};

} // namespace braidops
