#include "braidops/hopf.hpp"

#include <algorithm>
#include <sstream>

#include "braidops/errors.hpp"

namespace braidops {

AlgebraElement AlgebraElement::unit_element(const Rational& c) {
    AlgebraElement e;
    e.unit = c;
    return e;
}

AlgebraElement AlgebraElement::basis(APlusKey k) {
    AlgebraElement e;
    if (k.is_unit())
        e.unit = 1;
    else
        e.terms.emplace(std::move(k), Rational(1));
    return e;
}

void AlgebraElement::add(const APlusKey& k, const Rational& c) {
    if (c.is_zero()) return;
    if (k.is_unit()) {
        unit += c;
        return;
    }
    auto it = terms.find(k);
    if (it == terms.end()) {
        terms.emplace(k, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

TensorElement TensorElement::singleton(std::vector<APlusKey> keys) {
    TensorElement t;
    t.factors = static_cast<int>(keys.size());
    t.terms.emplace(std::move(keys), Rational(1));
    return t;
}

void TensorElement::add(std::vector<APlusKey> keys, const Rational& c) {
    if (c.is_zero()) return;
    auto it = terms.find(keys);
    if (it == terms.end()) {
        terms.emplace(std::move(keys), c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

bool HopfReport::all_pass() const {
    return std::none_of(items.begin(), items.end(), [](const Item& i) {
        return i.verdict == Verdict::Fail;
    });
}

const HopfReport::Item* HopfReport::first_failure() const {
    for (const Item& i : items)
        if (i.verdict == Verdict::Fail) return &i;
    return nullptr;
}

namespace {

void acc_algebra(AlgebraElement& out, const AlgebraElement& z, const Rational& scale) {
    out.overflow = out.overflow || z.overflow;
    if (scale.is_zero()) return;
    out.unit += z.unit * scale;
    for (const auto& [k, c] : z.terms) out.add(k, c * scale);
}

void acc_tensor(TensorElement& out, const TensorElement& z, const Rational& scale) {
    out.overflow = out.overflow || z.overflow;
    if (scale.is_zero()) return;
    for (const auto& [k, c] : z.terms) out.add(k, c * scale);
}

std::vector<APlusKey> spliced(const std::vector<APlusKey>& keys, std::size_t pos,
                              std::initializer_list<APlusKey> replacement) {
    std::vector<APlusKey> out;
    out.reserve(keys.size() - 2 + replacement.size() + 1);
    out.insert(out.end(), keys.begin(), keys.begin() + static_cast<std::ptrdiff_t>(pos));
    out.insert(out.end(), replacement.begin(), replacement.end());
    out.insert(out.end(), keys.begin() + static_cast<std::ptrdiff_t>(pos) + 1, keys.end());
    return out;
}

} // namespace

HopfLab::HopfLab(const OperadComponents& components, const UnitAction& ua, BraidedSpace space)
    : comp_(components), ua_(ua), space_(std::move(space)) {
    const int n = comp_.generator_count();
    if (ua_.alpha.size() != static_cast<std::size_t>(n) ||
        ua_.beta.size() != static_cast<std::size_t>(n))
        throw DimMismatch("unit functional length mismatch");
    if (!unit_action_normalized(comp_.presentation(), ua_))
        throw Error("unit action is not normalized on the distinguished element");

    for (int g = 0; g < n; ++g) {
        std::vector<Rational> v(static_cast<std::size_t>(n));
        v[static_cast<std::size_t>(g)] = 1;
        gen_vec_.push_back(std::move(v));
    }

    const int K = comp_.max_arity();
    for (int i = 1; i < K; ++i) {
        for (int j = 1; i + j <= K; ++j) {
            const Permutation swap = block_transposition(i, j);
            auto& table = block_lift_[{i, j}];
            for (const auto& w : words(i + j))
                table.emplace(w, apply_positive_lift(space_, swap,
                                                     TensorVector::basis(space_.dim(), w)));
        }
    }
}

std::vector<std::vector<int>> HopfLab::words(int length) const {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<std::size_t>(length), 0);
    const int d = space_.dim();
    while (true) {
        out.push_back(cur);
        int i = length - 1;
        for (; i >= 0; --i) {
            if (++cur[static_cast<std::size_t>(i)] < d) break;
            cur[static_cast<std::size_t>(i)] = 0;
        }
        if (i < 0) break;
    }
    return out;
}

std::vector<APlusKey> HopfLab::graded_keys(int arity) const {
    std::vector<APlusKey> out;
    for (int b = 0; b < comp_.dim(arity); ++b)
        for (const auto& w : words(arity)) out.push_back(APlusKey::graded(arity, b, w));
    return out;
}

AlgebraElement HopfLab::element(const APlusKey& k) const { return AlgebraElement::basis(k); }

AlgebraElement HopfLab::pure_product(const std::vector<Rational>& mu, const APlusKey& x,
                                     const APlusKey& y) const {
    const auto& star = comp_.presentation().star_coeffs;
    if (x.is_unit() && y.is_unit()) {
        // defined only for multiples of the distinguished element
        std::size_t g0 = 0;
        while (star[g0].is_zero()) ++g0;
        const Rational t = mu[g0] / star[g0];
        for (std::size_t g = 0; g < star.size(); ++g)
            if (mu[g] != t * star[g])
                throw UndefinedComposite(
                    "operation is undefined on two copies of the unit");
        return AlgebraElement::unit_element(t);
    }
    if (x.is_unit()) {
        AlgebraElement e;
        e.add(y, unit_eval(ua_, mu, UnitSide::LeftUnit));
        return e;
    }
    if (y.is_unit()) {
        AlgebraElement e;
        e.add(x, unit_eval(ua_, mu, UnitSide::RightUnit));
        return e;
    }
    AlgebraElement e;
    if (x.arity + y.arity > comp_.max_arity()) {
        e.overflow = true;
        return e;
    }
    const int sum = x.arity + y.arity;
    std::vector<int> word = x.word;
    word.insert(word.end(), y.word.begin(), y.word.end());
    for (std::size_t g = 0; g < mu.size(); ++g) {
        if (mu[g].is_zero()) continue;
        const auto& coords =
            comp_.binary_compose(static_cast<int>(g), x.arity, x.basis, y.arity, y.basis);
        for (std::size_t idx = 0; idx < coords.size(); ++idx)
            if (!coords[idx].is_zero())
                e.add(APlusKey::graded(sum, static_cast<int>(idx), word), mu[g] * coords[idx]);
    }
    return e;
}

AlgebraElement HopfLab::product(const std::vector<Rational>& mu, const AlgebraElement& x,
                                const AlgebraElement& y) const {
    AlgebraElement out;
    out.overflow = x.overflow || y.overflow;
    if (!x.unit.is_zero()) {
        if (!y.unit.is_zero())
            acc_algebra(out, pure_product(mu, APlusKey::unit(), APlusKey::unit()),
                        x.unit * y.unit);
        for (const auto& [ky, cy] : y.terms)
            acc_algebra(out, pure_product(mu, APlusKey::unit(), ky), x.unit * cy);
    }
    for (const auto& [kx, cx] : x.terms) {
        if (!y.unit.is_zero())
            acc_algebra(out, pure_product(mu, kx, APlusKey::unit()), cx * y.unit);
        for (const auto& [ky, cy] : y.terms) acc_algebra(out, pure_product(mu, kx, ky), cx * cy);
    }
    return out;
}

AlgebraElement HopfLab::star_product(const AlgebraElement& x, const AlgebraElement& y) const {
    return product(comp_.presentation().star_coeffs, x, y);
}

std::vector<std::tuple<APlusKey, APlusKey, Rational>> HopfLab::cross(const APlusKey& x,
                                                                     const APlusKey& y) const {
    if (x.is_unit() && y.is_unit()) return {{APlusKey::unit(), APlusKey::unit(), Rational(1)}};
    if (x.is_unit()) return {{y, APlusKey::unit(), Rational(1)}};
    if (y.is_unit()) return {{APlusKey::unit(), x, Rational(1)}};

    std::vector<int> word = x.word;
    word.insert(word.end(), y.word.begin(), y.word.end());
    const auto it = block_lift_.find({x.arity, y.arity});
    TensorVector image;
    if (it != block_lift_.end()) {
        image = it->second.at(word);
    } else {
        image = apply_positive_lift(space_, block_transposition(x.arity, y.arity),
                                    TensorVector::basis(space_.dim(), word));
    }
    std::vector<std::tuple<APlusKey, APlusKey, Rational>> out;
    for (const auto& [w, c] : image.coeffs) {
        std::vector<int> first_word(w.begin(), w.begin() + y.arity);
        std::vector<int> second_word(w.begin() + y.arity, w.end());
        out.emplace_back(APlusKey::graded(y.arity, y.basis, std::move(first_word)),
                         APlusKey::graded(x.arity, x.basis, std::move(second_word)), c);
    }
    return out;
}

TensorElement HopfLab::tensor_pair(const AlgebraElement& a, const AlgebraElement& b) const {
    TensorElement t;
    t.factors = 2;
    t.overflow = a.overflow || b.overflow;
    if (!a.unit.is_zero()) {
        if (!b.unit.is_zero()) t.add({APlusKey::unit(), APlusKey::unit()}, a.unit * b.unit);
        for (const auto& [kb, cb] : b.terms) t.add({APlusKey::unit(), kb}, a.unit * cb);
    }
    for (const auto& [ka, ca] : a.terms) {
        if (!b.unit.is_zero()) t.add({ka, APlusKey::unit()}, ca * b.unit);
        for (const auto& [kb, cb] : b.terms) t.add({ka, kb}, ca * cb);
    }
    return t;
}

TensorElement HopfLab::boxtimes_pure(const std::vector<Rational>& mu, const APlusKey& x1,
                                     const APlusKey& y1, const APlusKey& x2,
                                     const APlusKey& y2) const {
    if (y1.is_unit() && y2.is_unit()) {
        const AlgebraElement z = product(mu, element(x1), element(x2));
        return tensor_pair(z, AlgebraElement::unit_element());
    }
    TensorElement out;
    out.factors = 2;
    for (const auto& [x2p, y1p, s] : cross(y1, x2)) {
        const AlgebraElement zl = star_product(element(x1), element(x2p));
        const AlgebraElement zr = product(mu, element(y1p), element(y2));
        acc_tensor(out, tensor_pair(zl, zr), s);
    }
    return out;
}

TensorElement HopfLab::boxtimes(const std::vector<Rational>& mu, const TensorElement& left,
                                const TensorElement& right) const {
    if (left.factors != 2 || right.factors != 2)
        throw DimMismatch("twisted product needs two-factor tensors");
    TensorElement out;
    out.factors = 2;
    out.overflow = left.overflow || right.overflow;
    for (const auto& [kl, cl] : left.terms)
        for (const auto& [kr, cr] : right.terms)
            acc_tensor(out, boxtimes_pure(mu, kl[0], kl[1], kr[0], kr[1]), cl * cr);
    return out;
}

const TensorElement& HopfLab::delta_key(const APlusKey& k) const {
    return coproduct_of_tree(comp_.representative(k.arity, k.basis), k.word);
}

TensorElement HopfLab::coproduct(const AlgebraElement& e) const {
    TensorElement out;
    out.factors = 2;
    out.overflow = e.overflow;
    if (!e.unit.is_zero()) out.add({APlusKey::unit(), APlusKey::unit()}, e.unit);
    for (const auto& [k, c] : e.terms) acc_tensor(out, delta_key(k), c);
    return out;
}

const TensorElement& HopfLab::coproduct_of_tree(const LabeledTree& t,
                                                const std::vector<int>& word) const {
    if (static_cast<int>(word.size()) != t.leaf_count())
        throw DegreeMismatch("word length differs from leaf count");
    const auto memo_key = std::make_pair(t.code(), word);
    const auto it = delta_memo_.find(memo_key);
    if (it != delta_memo_.end()) return it->second;

    TensorElement result;
    if (t.is_leaf()) {
        result.factors = 2;
        const APlusKey k = APlusKey::graded(1, 0, word);
        result.add({k, APlusKey::unit()}, Rational(1));
        result.add({APlusKey::unit(), k}, Rational(1));
    } else {
        const int split = t.left().leaf_count();
        const std::vector<int> wl(word.begin(), word.begin() + split);
        const std::vector<int> wr(word.begin() + split, word.end());
        const TensorElement dl = coproduct_of_tree(t.left(), wl);
        const TensorElement dr = coproduct_of_tree(t.right(), wr);
        result = boxtimes(gen_vec_[static_cast<std::size_t>(t.label())], dl, dr);
    }
    return delta_memo_.emplace(memo_key, std::move(result)).first->second;
}

const AlgebraElement& HopfLab::antipode_key(const APlusKey& k) const {
    const auto it = antipode_memo_.find(k);
    if (it != antipode_memo_.end()) return it->second;

    const TensorElement& d = delta_key(k);
    Rational self_coeff, unit_side_coeff;
    std::vector<std::pair<std::vector<APlusKey>, Rational>> middle;
    for (const auto& [keys, c] : d.terms) {
        const APlusKey& a = keys[0];
        const APlusKey& b = keys[1];
        if (b.is_unit()) {
            if (!(a == k))
                throw Error("coproduct is not connected graded; antipode recursion undefined");
            self_coeff = c;
        } else if (a.is_unit()) {
            if (!(b == k))
                throw Error("coproduct is not connected graded; antipode recursion undefined");
            unit_side_coeff = c;
        } else {
            middle.emplace_back(keys, c);
        }
    }
    if (self_coeff.is_zero())
        throw Error("coproduct drops the primitive part; antipode recursion undefined");

    // self_coeff * S(k) + unit_side_coeff * k + sum c * S(a) star b = 0
    AlgebraElement rhs;
    rhs.add(k, unit_side_coeff);
    for (const auto& [keys, c] : middle) {
        if (keys[0].arity >= k.arity)
            throw Error("coproduct is not connected graded; antipode recursion undefined");
        acc_algebra(rhs, star_product(antipode_key(keys[0]), element(keys[1])), c);
    }
    AlgebraElement s;
    acc_algebra(s, rhs, Rational(-1) / self_coeff);
    return antipode_memo_.emplace(k, std::move(s)).first->second;
}

AlgebraElement HopfLab::antipode(const AlgebraElement& e) const {
    AlgebraElement out;
    out.overflow = e.overflow;
    out.unit = e.unit; // the antipode fixes the unit
    for (const auto& [k, c] : e.terms) acc_algebra(out, antipode_key(k), c);
    return out;
}

TensorElement HopfLab::braid_at(const TensorElement& t, int pos) const {
    if (pos < 1 || pos >= t.factors) throw IndexOutOfRange("braid position out of range");
    TensorElement out;
    out.factors = t.factors;
    out.overflow = t.overflow;
    const auto p = static_cast<std::size_t>(pos - 1);
    for (const auto& [keys, c] : t.terms) {
        for (const auto& [first, second, cc] : cross(keys[p], keys[p + 1])) {
            std::vector<APlusKey> nk = keys;
            nk[p] = first;
            nk[p + 1] = second;
            out.add(std::move(nk), c * cc);
        }
    }
    return out;
}

TensorElement HopfLab::product_at(const TensorElement& t, const std::vector<Rational>& mu,
                                  int pos) const {
    if (pos < 1 || pos >= t.factors) throw IndexOutOfRange("product position out of range");
    TensorElement out;
    out.factors = t.factors - 1;
    out.overflow = t.overflow;
    const auto p = static_cast<std::size_t>(pos - 1);
    for (const auto& [keys, c] : t.terms) {
        const AlgebraElement z = product(mu, element(keys[p]), element(keys[p + 1]));
        out.overflow = out.overflow || z.overflow;
        std::vector<APlusKey> base = keys;
        base.erase(base.begin() + static_cast<std::ptrdiff_t>(p) + 1);
        if (!z.unit.is_zero()) {
            base[p] = APlusKey::unit();
            out.add(base, c * z.unit);
        }
        for (const auto& [kz, cz] : z.terms) {
            base[p] = kz;
            out.add(base, c * cz);
        }
    }
    return out;
}

TensorElement HopfLab::delta_at(const TensorElement& t, int pos) const {
    if (pos < 1 || pos > t.factors) throw IndexOutOfRange("coproduct position out of range");
    TensorElement out;
    out.factors = t.factors + 1;
    out.overflow = t.overflow;
    const auto p = static_cast<std::size_t>(pos - 1);
    for (const auto& [keys, c] : t.terms) {
        if (keys[p].is_unit()) {
            out.add(spliced(keys, p, {APlusKey::unit(), APlusKey::unit()}), c);
            continue;
        }
        const TensorElement& d = delta_key(keys[p]);
        out.overflow = out.overflow || d.overflow;
        for (const auto& [dk, dc] : d.terms) out.add(spliced(keys, p, {dk[0], dk[1]}), c * dc);
    }
    return out;
}

TensorElement HopfLab::counit_at(const TensorElement& t, int pos) const {
    if (pos < 1 || pos > t.factors) throw IndexOutOfRange("counit position out of range");
    TensorElement out;
    out.factors = t.factors - 1;
    out.overflow = t.overflow;
    const auto p = static_cast<std::size_t>(pos - 1);
    for (const auto& [keys, c] : t.terms) {
        if (!keys[p].is_unit()) continue;
        out.add(spliced(keys, p, {}), c);
    }
    return out;
}

TensorElement HopfLab::antipode_at(const TensorElement& t, int pos) const {
    if (pos < 1 || pos > t.factors) throw IndexOutOfRange("antipode position out of range");
    TensorElement out;
    out.factors = t.factors;
    out.overflow = t.overflow;
    const auto p = static_cast<std::size_t>(pos - 1);
    for (const auto& [keys, c] : t.terms) {
        const AlgebraElement z =
            keys[p].is_unit() ? AlgebraElement::unit_element() : antipode_key(keys[p]);
        std::vector<APlusKey> base = keys;
        if (!z.unit.is_zero()) {
            base[p] = APlusKey::unit();
            out.add(base, c * z.unit);
        }
        for (const auto& [kz, cz] : z.terms) {
            base[p] = kz;
            out.add(base, c * cz);
        }
    }
    return out;
}

std::string HopfLab::key_str(const APlusKey& k) const {
    if (k.is_unit()) return "1";
    std::ostringstream os;
    os << comp_.representative(k.arity, k.basis).str(comp_.presentation().generator_names)
       << ":";
    for (int x : k.word) os << x;
    return os.str();
}

// ---------------------------------------------------------------------------
// exhaustive verification

namespace {

struct ItemBuilder {
    HopfReport::Item item;
    explicit ItemBuilder(std::string name) { item.name = std::move(name); }
    void fail(std::string witness) {
        if (item.verdict == HopfReport::Verdict::Fail) return;
        item.verdict = HopfReport::Verdict::Fail;
        item.witness = std::move(witness);
    }
    void inconclusive(std::string why) {
        if (item.verdict != HopfReport::Verdict::Pass) return;
        item.verdict = HopfReport::Verdict::Inconclusive;
        item.witness = std::move(why);
    }
};

} // namespace

HopfReport HopfLab::verify_axioms(bool include_antipode) const {
    HopfReport rep;
    const int K = truncation();
    const auto& pres = comp_.presentation();
    const auto& star = pres.star_coeffs;

    std::vector<std::vector<APlusKey>> pool(static_cast<std::size_t>(K) + 1);
    pool[0] = {APlusKey::unit()};
    for (int k = 1; k <= K; ++k) pool[static_cast<std::size_t>(k)] = graded_keys(k);

    const auto keys_str = [&](std::initializer_list<const APlusKey*> ks) {
        std::string s;
        for (const APlusKey* k : ks) {
            if (!s.empty()) s += " (x) ";
            s += key_str(*k);
        }
        return s;
    };

    const auto compare = [&](ItemBuilder& ib, const TensorElement& lhs, const TensorElement& rhs,
                             const std::string& where) {
        if (lhs.overflow || rhs.overflow) {
            ib.inconclusive("truncation overflow at " + where);
            return;
        }
        if (!(lhs == rhs)) ib.fail(where);
    };

    // every relation instance evaluates to zero on the graded part
    {
        ItemBuilder ib("relations");
        for (std::size_t r = 0; r < pres.relations.size() && ib.item.witness.empty(); ++r) {
            const QuadraticRelation& rel = pres.relations[r];
            for (int i = 1; i <= K - 2; ++i) {
                for (int j = 1; i + j <= K - 1; ++j) {
                    for (int k = 1; i + j + k <= K; ++k) {
                        for (const APlusKey& a : pool[static_cast<std::size_t>(i)]) {
                            for (const APlusKey& b : pool[static_cast<std::size_t>(j)]) {
                                for (const APlusKey& c : pool[static_cast<std::size_t>(k)]) {
                                    AlgebraElement acc;
                                    for (const auto& t : rel.left) {
                                        const AlgebraElement inner = product(
                                            gen_vec_[static_cast<std::size_t>(t.inner)],
                                            element(a), element(b));
                                        acc_algebra(acc,
                                                    product(gen_vec_[static_cast<std::size_t>(
                                                                t.outer)],
                                                            inner, element(c)),
                                                    t.coeff);
                                    }
                                    for (const auto& t : rel.right) {
                                        const AlgebraElement inner = product(
                                            gen_vec_[static_cast<std::size_t>(t.inner)],
                                            element(b), element(c));
                                        acc_algebra(acc,
                                                    product(gen_vec_[static_cast<std::size_t>(
                                                                t.outer)],
                                                            element(a), inner),
                                                    -t.coeff);
                                    }
                                    if (!acc.is_zero())
                                        ib.fail("relation " + std::to_string(r + 1) + " on " +
                                                keys_str({&a, &b, &c}));
                                }
                            }
                        }
                    }
                }
            }
        }
        rep.items.push_back(ib.item);
    }

    // braided-algebra equations for a product mu over triples
    const auto braided_product_check = [&](ItemBuilder& ib, const std::vector<Rational>& mu,
                                           bool include_units) {
        const int lo = include_units ? 0 : 1;
        for (int i = lo; i <= K; ++i) {
            for (int j = lo; i + j <= K; ++j) {
                for (int k = lo; i + j + k <= K; ++k) {
                    for (const APlusKey& a : pool[static_cast<std::size_t>(i)]) {
                        for (const APlusKey& b : pool[static_cast<std::size_t>(j)]) {
                            for (const APlusKey& c : pool[static_cast<std::size_t>(k)]) {
                                const TensorElement t = TensorElement::singleton({a, b, c});
                                compare(ib,
                                        product_at(braid_at(braid_at(t, 1), 2), mu, 1),
                                        braid_at(product_at(t, mu, 2), 1),
                                        "first equation on " + keys_str({&a, &b, &c}));
                                compare(ib,
                                        product_at(braid_at(braid_at(t, 2), 1), mu, 2),
                                        braid_at(product_at(t, mu, 1), 1),
                                        "second equation on " + keys_str({&a, &b, &c}));
                                if (ib.item.verdict == HopfReport::Verdict::Fail) return;
                            }
                        }
                    }
                }
            }
        }
    };

    {
        ItemBuilder ib("ba1");
        braided_product_check(ib, star, true);
        rep.items.push_back(ib.item);
    }

    {
        ItemBuilder ib("ba2");
        for (int k = 1; k <= K; ++k) {
            for (const APlusKey& a : pool[static_cast<std::size_t>(k)]) {
                const TensorElement left = braid_at(
                    TensorElement::singleton({a, APlusKey::unit()}), 1);
                const TensorElement right = braid_at(
                    TensorElement::singleton({APlusKey::unit(), a}), 1);
                compare(ib, left, TensorElement::singleton({APlusKey::unit(), a}),
                        "unit on the right of " + key_str(a));
                compare(ib, right, TensorElement::singleton({a, APlusKey::unit()}),
                        "unit on the left of " + key_str(a));
            }
        }
        rep.items.push_back(ib.item);
    }

    // pair loops shared by the coalgebra-side checks
    const auto for_pairs = [&](auto&& fn) {
        for (int i = 0; i <= K; ++i)
            for (int j = 0; i + j <= K; ++j)
                for (const APlusKey& a : pool[static_cast<std::size_t>(i)])
                    for (const APlusKey& b : pool[static_cast<std::size_t>(j)]) fn(a, b);
    };

    {
        ItemBuilder ib("bc1");
        for_pairs([&](const APlusKey& a, const APlusKey& b) {
            if (ib.item.verdict == HopfReport::Verdict::Fail) return;
            const TensorElement t = TensorElement::singleton({a, b});
            compare(ib, braid_at(braid_at(delta_at(t, 1), 2), 1), delta_at(braid_at(t, 1), 2),
                    "first equation on " + keys_str({&a, &b}));
            compare(ib, braid_at(braid_at(delta_at(t, 2), 1), 2), delta_at(braid_at(t, 1), 1),
                    "second equation on " + keys_str({&a, &b}));
        });
        rep.items.push_back(ib.item);
    }

    {
        ItemBuilder ib("bc2");
        for_pairs([&](const APlusKey& a, const APlusKey& b) {
            if (ib.item.verdict == HopfReport::Verdict::Fail) return;
            const TensorElement t = TensorElement::singleton({a, b});
            compare(ib, counit_at(braid_at(t, 1), 1), counit_at(t, 2),
                    "counit of the first output on " + keys_str({&a, &b}));
            compare(ib, counit_at(braid_at(t, 1), 2), counit_at(t, 1),
                    "counit of the second output on " + keys_str({&a, &b}));
        });
        rep.items.push_back(ib.item);
    }

    {
        ItemBuilder counit_ib("counit");
        ItemBuilder coass_ib("coassociativity");
        ItemBuilder grading_ib("grading");
        for (int k = 0; k <= K; ++k) {
            for (const APlusKey& a : pool[static_cast<std::size_t>(k)]) {
                const TensorElement t = TensorElement::singleton({a});
                const TensorElement d = delta_at(t, 1);
                compare(counit_ib, counit_at(d, 1), t, "left counit law on " + key_str(a));
                compare(counit_ib, counit_at(d, 2), t, "right counit law on " + key_str(a));
                compare(coass_ib, delta_at(d, 1), delta_at(d, 2),
                        "coassociativity on " + key_str(a));
                for (const auto& [keys, c] : d.terms) {
                    if (keys[0].arity + keys[1].arity != k)
                        grading_ib.fail("coproduct of " + key_str(a) +
                                        " leaves the graded component");
                }
            }
        }
        rep.items.push_back(counit_ib.item);
        rep.items.push_back(coass_ib.item);
        rep.items.push_back(grading_ib.item);
    }

    {
        ItemBuilder ib("compatibility");
        for_pairs([&](const APlusKey& a, const APlusKey& b) {
            if (ib.item.verdict == HopfReport::Verdict::Fail) return;
            const AlgebraElement prod = star_product(element(a), element(b));
            const TensorElement lhs = coproduct(prod);
            const TensorElement t = TensorElement::singleton({a, b});
            const TensorElement rhs =
                product_at(product_at(braid_at(delta_at(delta_at(t, 1), 3), 2), star, 1), star, 2);
            compare(ib, lhs, rhs, "product pair " + keys_str({&a, &b}));
        });
        rep.items.push_back(ib.item);
    }

    for (int g = 0; g < comp_.generator_count(); ++g) {
        ItemBuilder ib("compat(" + pres.generator_names[static_cast<std::size_t>(g)] + ")");
        braided_product_check(ib, gen_vec_[static_cast<std::size_t>(g)], false);
        rep.items.push_back(ib.item);
    }

    {
        ItemBuilder ib("antipode");
        if (!include_antipode) {
            ib.inconclusive("not requested");
        } else {
            for (int k = 0; k <= K; ++k) {
                for (const APlusKey& a : pool[static_cast<std::size_t>(k)]) {
                    const TensorElement t = TensorElement::singleton({a});
                    const TensorElement d = delta_at(t, 1);
                    TensorElement expect;
                    expect.factors = 1;
                    if (a.is_unit()) expect.add({APlusKey::unit()}, Rational(1));
                    compare(ib, product_at(antipode_at(d, 1), star, 1), expect,
                            "left convolution on " + key_str(a));
                    compare(ib, product_at(antipode_at(d, 2), star, 1), expect,
                            "right convolution on " + key_str(a));
                }
            }
        }
        rep.items.push_back(ib.item);
    }

    {
        ItemBuilder ib("well-definedness");
        for (int m = 3; m <= std::min(K, 4); ++m) {
            for (const LabeledTree& tree : comp_.free_trees(m)) {
                const auto reduced = comp_.reduce_tree(tree);
                for (const auto& w : words(m)) {
                    const TensorElement direct = coproduct_of_tree(tree, w);
                    TensorElement via;
                    via.factors = 2;
                    for (std::size_t b = 0; b < reduced.size(); ++b) {
                        if (reduced[b].is_zero()) continue;
                        acc_tensor(via,
                                   delta_key(APlusKey::graded(m, static_cast<int>(b), w)),
                                   reduced[b]);
                    }
                    if (!(direct == via)) {
                        std::ostringstream os;
                        os << "tree " << tree.str(pres.generator_names) << " with letters ";
                        for (int x : w) os << x;
                        ib.fail(os.str());
                    }
                }
                if (ib.item.verdict == HopfReport::Verdict::Fail) break;
            }
            if (ib.item.verdict == HopfReport::Verdict::Fail) break;
        }
        rep.items.push_back(ib.item);
    }

    {
        ItemBuilder ib("twisted-implication");
        const TwistedCocommutativity tw = check_twisted_cocommutativity();
        std::ostringstream os;
        os << "braiding is an algebra morphism: " << (tw.morphism_holds ? "yes" : "no")
           << "; coproduct braiding-invariant: " << (tw.cocomm_holds ? "yes" : "no");
        if (tw.morphism_holds && !tw.cocomm_holds)
            ib.fail(os.str() + "; " + tw.cocomm_witness);
        else
            ib.item.witness = os.str();
        rep.items.push_back(ib.item);
    }

    return rep;
}

TwistedCocommutativity HopfLab::check_twisted_cocommutativity() const {
    TwistedCocommutativity out;
    const int K = truncation();

    std::vector<std::vector<APlusKey>> pool(static_cast<std::size_t>(K) + 1);
    pool[0] = {APlusKey::unit()};
    for (int k = 1; k <= K; ++k) pool[static_cast<std::size_t>(k)] = graded_keys(k);

    // invertibility of every block lift on the truncation
    bool invertible = true;
    for (const auto& [arities, table] : block_lift_) {
        std::vector<std::vector<Rational>> rows;
        for (const auto& [w, image] : table) {
            std::vector<Rational> row;
            for (const auto& [w2, unused] : table) {
                (void)unused;
                const auto it = image.coeffs.find(w2);
                row.push_back(it == image.coeffs.end() ? Rational(0) : it->second);
            }
            rows.push_back(std::move(row));
        }
        if (rank_of(rows) != rows.size()) {
            invertible = false;
            out.morphism_witness = "block swap of arities (" + std::to_string(arities.first) +
                                   ", " + std::to_string(arities.second) +
                                   ") is singular on the truncation";
            break;
        }
    }

    bool equations = true;
    for (int g = 0; g < comp_.generator_count() && equations; ++g) {
        const auto& mu = gen_vec_[static_cast<std::size_t>(g)];
        for (int i1 = 0; i1 <= K && equations; ++i1)
         for (int j1 = 0; i1 + j1 <= K && equations; ++j1)
          for (int i2 = 0; i1 + j1 + i2 <= K && equations; ++i2)
           for (int j2 = 0; i1 + j1 + i2 + j2 <= K && equations; ++j2) {
            if (i1 + j1 == 0 || i2 + j2 == 0) continue; // outside the twisted square
            for (const APlusKey& x1 : pool[static_cast<std::size_t>(i1)]) {
             for (const APlusKey& y1 : pool[static_cast<std::size_t>(j1)]) {
              for (const APlusKey& x2 : pool[static_cast<std::size_t>(i2)]) {
               for (const APlusKey& y2 : pool[static_cast<std::size_t>(j2)]) {
                const TensorElement lhs = braid_at(boxtimes_pure(mu, x1, y1, x2, y2), 1);
                const TensorElement u = braid_at(TensorElement::singleton({x1, y1}), 1);
                const TensorElement v = braid_at(TensorElement::singleton({x2, y2}), 1);
                const TensorElement rhs = boxtimes(mu, u, v);
                if (!(lhs == rhs)) {
                    equations = false;
                    out.morphism_witness =
                        "operation " +
                        comp_.presentation().generator_names[static_cast<std::size_t>(g)] +
                        " on (" + key_str(x1) + " (x) " + key_str(y1) + ", " + key_str(x2) +
                        " (x) " + key_str(y2) + ")";
                }
                if (!equations) break;
               }
               if (!equations) break;
              }
              if (!equations) break;
             }
             if (!equations) break;
            }
           }
    }
    out.morphism_holds = invertible && equations;

    out.cocomm_holds = true;
    for (int k = 0; k <= K && out.cocomm_holds; ++k) {
        for (const APlusKey& a : pool[static_cast<std::size_t>(k)]) {
            const TensorElement d = delta_at(TensorElement::singleton({a}), 1);
            if (!(braid_at(d, 1) == d)) {
                out.cocomm_holds = false;
                out.cocomm_witness = "coproduct of " + key_str(a) + " moves under the braiding";
                break;
            }
        }
    }
    return out;
}

} // namespace braidops
