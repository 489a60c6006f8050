#include "braidops/operad.hpp"

#include <algorithm>
#include <string>

#include "braidops/errors.hpp"

namespace braidops {

int OperadPresentation::generator_index(const std::string& name) const {
    for (int i = 0; i < generator_count(); ++i)
        if (generator_names[static_cast<std::size_t>(i)] == name) return i;
    throw UnknownGenerator("unknown generator '" + name + "'");
}

bool PElement::is_zero() const {
    return std::all_of(coords.begin(), coords.end(),
                       [](const Rational& c) { return c.is_zero(); });
}

PElement p_identity() { return PElement{1, {Rational(1)}}; }

std::vector<FreeVector> relation_vectors(const OperadPresentation& p) {
    const auto trees3 = enumerate_trees(3, p.generator_count());
    std::map<std::vector<int>, int> index;
    for (std::size_t i = 0; i < trees3.size(); ++i)
        index.emplace(trees3[i].code(), static_cast<int>(i));

    std::vector<FreeVector> out;
    for (const QuadraticRelation& rel : p.relations) {
        FreeVector v(trees3.size());
        const auto check = [&](int g) {
            if (g < 0 || g >= p.generator_count())
                throw UnknownGenerator("generator index " + std::to_string(g) + " out of range");
        };
        for (const auto& t : rel.left) {
            check(t.inner);
            check(t.outer);
            v[static_cast<std::size_t>(index.at(left_comb(t.outer, t.inner).code()))] += t.coeff;
        }
        for (const auto& t : rel.right) {
            check(t.inner);
            check(t.outer);
            v[static_cast<std::size_t>(index.at(right_comb(t.outer, t.inner).code()))] -= t.coeff;
        }
        out.push_back(std::move(v));
    }
    return out;
}

const OperadComponents::Graded& OperadComponents::graded(int arity) const {
    if (arity < 1 || arity > max_arity_)
        throw IndexOutOfRange("arity " + std::to_string(arity) + " outside 1.." +
                              std::to_string(max_arity_));
    return by_arity_[static_cast<std::size_t>(arity)];
}

int OperadComponents::dim(int arity) const {
    return static_cast<int>(graded(arity).basis_cols.size());
}

const std::vector<LabeledTree>& OperadComponents::free_trees(int arity) const {
    return graded(arity).trees;
}

int OperadComponents::tree_index(int arity, const LabeledTree& t) const {
    const auto& g = graded(arity);
    const auto it = g.index.find(t.code());
    if (it == g.index.end()) throw Error("tree is not in the free basis of this arity");
    return it->second;
}

const LabeledTree& OperadComponents::representative(int arity, int basis_index) const {
    const auto& g = graded(arity);
    return g.trees[static_cast<std::size_t>(g.basis_cols[static_cast<std::size_t>(basis_index)])];
}

const std::vector<std::vector<Rational>>& OperadComponents::ideal_rows(int arity) const {
    return graded(arity).ideal;
}

std::vector<Rational> OperadComponents::reduce(int arity, const FreeVector& v) const {
    const auto& g = graded(arity);
    if (v.size() != g.trees.size()) throw DimMismatch("free vector has wrong length");
    FreeVector w = v;
    for (std::size_t r = 0; r < g.ideal.size(); ++r) {
        const Rational c = w[g.pivots[r]];
        if (c.is_zero()) continue;
        const auto& row = g.ideal[r];
        for (std::size_t j = g.pivots[r]; j < w.size(); ++j)
            if (!row[j].is_zero()) w[j] -= c * row[j];
    }
    std::vector<Rational> coords(g.basis_cols.size());
    for (std::size_t b = 0; b < g.basis_cols.size(); ++b)
        coords[b] = w[static_cast<std::size_t>(g.basis_cols[b])];
    return coords;
}

std::vector<Rational> OperadComponents::reduce_tree(const LabeledTree& t) const {
    const int arity = t.leaf_count();
    FreeVector v(graded(arity).trees.size());
    v[static_cast<std::size_t>(tree_index(arity, t))] = 1;
    return reduce(arity, v);
}

FreeVector OperadComponents::lift(const PElement& e) const {
    const auto& g = graded(e.arity);
    if (e.coords.size() != g.basis_cols.size()) throw DimMismatch("coordinate length mismatch");
    FreeVector v(g.trees.size());
    for (std::size_t b = 0; b < e.coords.size(); ++b)
        v[static_cast<std::size_t>(g.basis_cols[b])] = e.coords[b];
    return v;
}

PElement OperadComponents::generator(int g) const {
    if (g < 0 || g >= generator_count()) throw UnknownGenerator("generator index out of range");
    std::vector<Rational> coords(static_cast<std::size_t>(dim(2)));
    coords[static_cast<std::size_t>(g)] = 1;
    return PElement{2, std::move(coords)};
}

const std::vector<Rational>& OperadComponents::binary_compose(int g, int a, int ai, int b,
                                                              int bi) const {
    if (a + b > max_arity_) throw ArityOverflow("binary composite exceeds truncation arity");
    return tables_[static_cast<std::size_t>(g)][static_cast<std::size_t>(a)]
                  [static_cast<std::size_t>(b)]
                  [static_cast<std::size_t>(ai * dim(b) + bi)];
}

namespace {

// Row-reduce a spanning set; returns reduced nonzero rows plus pivot columns.
void reduce_span(std::vector<FreeVector> rows, std::size_t width,
                 std::vector<std::vector<Rational>>& out_rows,
                 std::vector<std::size_t>& out_pivots) {
    out_rows.clear();
    out_pivots.clear();
    if (rows.empty()) return;
    Matrix m(rows.size(), width);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < width; ++j) m.at(i, j) = rows[i][j];
    const RrefResult rr = rref(m);
    for (std::size_t r = 0; r < rr.rank; ++r) {
        out_rows.push_back(rr.reduced.row(r));
        out_pivots.push_back(rr.pivot_cols[r]);
    }
}

} // namespace

OperadComponents build_components(const OperadPresentation& p, int max_arity) {
    if (max_arity < 2) throw Error("truncation arity must be >= 2");
    if (p.generator_count() < 1) throw Error("presentation needs at least one generator");
    if (p.star_coeffs.size() != static_cast<std::size_t>(p.generator_count()))
        throw DimMismatch("distinguished element has wrong coordinate length");
    if (std::all_of(p.star_coeffs.begin(), p.star_coeffs.end(),
                    [](const Rational& c) { return c.is_zero(); }))
        throw Error("distinguished element must be nonzero");

    OperadComponents c;
    c.pres_ = p;
    c.max_arity_ = max_arity;
    c.by_arity_.resize(static_cast<std::size_t>(max_arity) + 1);

    const int n = p.generator_count();
    for (int k = 1; k <= max_arity; ++k) {
        auto& g = c.by_arity_[static_cast<std::size_t>(k)];
        g.trees = enumerate_trees(k, n);
        for (std::size_t i = 0; i < g.trees.size(); ++i)
            g.index.emplace(g.trees[i].code(), static_cast<int>(i));
    }

    for (int k = 1; k <= max_arity; ++k) {
        auto& g = c.by_arity_[static_cast<std::size_t>(k)];
        std::vector<FreeVector> span;

        if (k == 3) {
            const auto rel = relation_vectors(p);
            for (std::size_t i = 0; i < rel.size(); ++i) {
                const bool zero = std::all_of(rel[i].begin(), rel[i].end(),
                                              [](const Rational& x) { return x.is_zero(); });
                if (zero) {
                    c.warnings_.push_back("relation " + std::to_string(i + 1) +
                                          " is identically zero after normalization; skipped");
                    continue;
                }
                span.push_back(rel[i]);
            }
        } else if (k > 3) {
            // composites with an ideal element under a binary root
            for (int a = 1; a < k; ++a) {
                const int b = k - a;
                const auto& ga = c.by_arity_[static_cast<std::size_t>(a)];
                const auto& gb = c.by_arity_[static_cast<std::size_t>(b)];
                for (int gen = 0; gen < n; ++gen) {
                    for (const auto& row : ga.ideal) {
                        for (const LabeledTree& t : gb.trees) {
                            FreeVector v(g.trees.size());
                            for (std::size_t u = 0; u < row.size(); ++u) {
                                if (row[u].is_zero()) continue;
                                const LabeledTree composite =
                                    LabeledTree::node(gen, ga.trees[u], t);
                                v[static_cast<std::size_t>(g.index.at(composite.code()))] +=
                                    row[u];
                            }
                            span.push_back(std::move(v));
                        }
                    }
                    for (const LabeledTree& t : ga.trees) {
                        for (const auto& row : gb.ideal) {
                            FreeVector v(g.trees.size());
                            for (std::size_t u = 0; u < row.size(); ++u) {
                                if (row[u].is_zero()) continue;
                                const LabeledTree composite =
                                    LabeledTree::node(gen, t, gb.trees[u]);
                                v[static_cast<std::size_t>(g.index.at(composite.code()))] +=
                                    row[u];
                            }
                            span.push_back(std::move(v));
                        }
                    }
                }
            }
            // ideal elements with one generator substituted into a slot
            const auto& prev = c.by_arity_[static_cast<std::size_t>(k - 1)];
            for (const auto& row : prev.ideal) {
                for (int pos = 0; pos < k - 1; ++pos) {
                    for (int gen = 0; gen < n; ++gen) {
                        FreeVector v(g.trees.size());
                        for (std::size_t u = 0; u < row.size(); ++u) {
                            if (row[u].is_zero()) continue;
                            const LabeledTree composite =
                                graft(prev.trees[u], pos, generator_tree(gen));
                            v[static_cast<std::size_t>(g.index.at(composite.code()))] += row[u];
                        }
                        span.push_back(std::move(v));
                    }
                }
            }
        }

        reduce_span(std::move(span), g.trees.size(), g.ideal, g.pivots);

        std::vector<bool> is_pivot(g.trees.size(), false);
        for (std::size_t pv : g.pivots) is_pivot[pv] = true;
        for (std::size_t col = 0; col < g.trees.size(); ++col)
            if (!is_pivot[col]) g.basis_cols.push_back(static_cast<int>(col));
    }

    // binary composition tables
    c.tables_.assign(static_cast<std::size_t>(n), {});
    for (int gen = 0; gen < n; ++gen) {
        auto& per_a = c.tables_[static_cast<std::size_t>(gen)];
        per_a.resize(static_cast<std::size_t>(max_arity) + 1);
        for (int a = 1; a < max_arity; ++a) {
            auto& per_b = per_a[static_cast<std::size_t>(a)];
            per_b.resize(static_cast<std::size_t>(max_arity) + 1);
            for (int b = 1; a + b <= max_arity; ++b) {
                auto& cell = per_b[static_cast<std::size_t>(b)];
                cell.resize(static_cast<std::size_t>(c.dim(a)) *
                            static_cast<std::size_t>(c.dim(b)));
                for (int ai = 0; ai < c.dim(a); ++ai) {
                    for (int bi = 0; bi < c.dim(b); ++bi) {
                        const LabeledTree t = LabeledTree::node(gen, c.representative(a, ai),
                                                                c.representative(b, bi));
                        cell[static_cast<std::size_t>(ai * c.dim(b) + bi)] = c.reduce_tree(t);
                    }
                }
            }
        }
    }
    return c;
}

PElement compose(const OperadComponents& c, const PElement& root,
                 const std::vector<PElement>& args) {
    if (static_cast<std::size_t>(root.arity) != args.size())
        throw DimMismatch("argument count differs from root arity");
    int result_arity = 0;
    for (const PElement& a : args) result_arity += a.arity;
    if (result_arity > c.max_arity())
        throw ArityOverflow("composite of arity " + std::to_string(result_arity) +
                            " exceeds truncation " + std::to_string(c.max_arity()));

    FreeVector acc(c.free_trees(result_arity).size());
    const std::size_t m = args.size();

    std::vector<int> idx(m, 0);
    for (int rb = 0; rb < c.dim(root.arity); ++rb) {
        const Rational& cr = root.coords[static_cast<std::size_t>(rb)];
        if (cr.is_zero()) continue;
        const LabeledTree& root_tree = c.representative(root.arity, rb);

        const auto walk = [&](auto&& self, std::size_t slot, const Rational& coeff) -> void {
            if (slot == m) {
                LabeledTree t = root_tree;
                for (std::size_t s = m; s-- > 0;)
                    t = graft(t, static_cast<int>(s),
                              c.representative(args[s].arity, idx[s]));
                acc[static_cast<std::size_t>(c.tree_index(result_arity, t))] += coeff;
                return;
            }
            for (int i = 0; i < c.dim(args[slot].arity); ++i) {
                const Rational& ca = args[slot].coords[static_cast<std::size_t>(i)];
                if (ca.is_zero()) continue;
                idx[slot] = i;
                self(self, slot + 1, coeff * ca);
            }
        };
        walk(walk, 0, cr);
    }
    return PElement{result_arity, c.reduce(result_arity, acc)};
}

StarTower star_tower(const OperadComponents& c) {
    const OperadPresentation& p = c.presentation();
    const int K = c.max_arity();
    StarTower t;
    t.star.resize(static_cast<std::size_t>(K) + 1);
    t.star[1] = p_identity();

    const PElement star2{2, p.star_coeffs};
    t.star[2] = star2;

    const PElement lhs = compose(c, star2, {star2, p_identity()});
    const PElement rhs = compose(c, star2, {p_identity(), star2});
    t.associative = (lhs == rhs);
    if (!t.associative) {
        t.assoc_difference.resize(lhs.coords.size());
        for (std::size_t i = 0; i < lhs.coords.size(); ++i)
            t.assoc_difference[i] = lhs.coords[i] - rhs.coords[i];
        return t;
    }

    for (int k = 3; k <= K; ++k)
        t.star[static_cast<std::size_t>(k)] =
            compose(c, star2, {t.star[static_cast<std::size_t>(k - 1)], p_identity()});

    t.splits_ok = true;
    for (int nn = 2; nn <= K && t.splits_ok; ++nn) {
        for (int i = 1; i < nn; ++i) {
            const PElement split = compose(c, star2,
                                           {t.star[static_cast<std::size_t>(i)],
                                            t.star[static_cast<std::size_t>(nn - i)]});
            if (!(split == t.star[static_cast<std::size_t>(nn)])) {
                t.splits_ok = false;
                t.splits_witness = "split (" + std::to_string(i) + ", " +
                                   std::to_string(nn - i) + ") of arity " + std::to_string(nn);
                break;
            }
        }
    }
    return t;
}

} // namespace braidops
