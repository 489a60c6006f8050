#include "braidops/tree.hpp"

#include <string>

#include "braidops/errors.hpp"

namespace braidops {

LabeledTree LabeledTree::node(int label, LabeledTree left, LabeledTree right) {
    LabeledTree t;
    t.label_ = label;
    t.kids_.reserve(2);
    t.kids_.push_back(std::move(left));
    t.kids_.push_back(std::move(right));
    return t;
}

int LabeledTree::leaf_count() const {
    if (is_leaf()) return 1;
    return kids_[0].leaf_count() + kids_[1].leaf_count();
}

std::vector<int> LabeledTree::code() const {
    std::vector<int> out;
    const auto walk = [&](auto&& self, const LabeledTree& t) -> void {
        if (t.is_leaf()) {
            out.push_back(-1);
            return;
        }
        out.push_back(t.label_);
        self(self, t.kids_[0]);
        self(self, t.kids_[1]);
    };
    walk(walk, *this);
    return out;
}

std::string LabeledTree::str(const std::vector<std::string>& generator_names) const {
    if (is_leaf()) return "|";
    return "(" + kids_[0].str(generator_names) + " " +
           generator_names[static_cast<std::size_t>(label_)] + " " +
           kids_[1].str(generator_names) + ")";
}

bool operator==(const LabeledTree& a, const LabeledTree& b) {
    if (a.label_ != b.label_ || a.kids_.size() != b.kids_.size()) return false;
    for (std::size_t i = 0; i < a.kids_.size(); ++i)
        if (!(a.kids_[i] == b.kids_[i])) return false;
    return true;
}

std::strong_ordering operator<=>(const LabeledTree& a, const LabeledTree& b) {
    if (auto c = a.label_ <=> b.label_; c != 0) return c;
    if (auto c = a.kids_.size() <=> b.kids_.size(); c != 0) return c;
    for (std::size_t i = 0; i < a.kids_.size(); ++i)
        if (auto c = a.kids_[i] <=> b.kids_[i]; c != 0) return c;
    return std::strong_ordering::equal;
}

namespace {

std::vector<LabeledTree> enumerate_shapes(int arity) {
    if (arity == 1) return {LabeledTree::leaf()};
    std::vector<LabeledTree> out;
    for (int l = arity - 1; l >= 1; --l) {
        for (const LabeledTree& left : enumerate_shapes(l))
            for (const LabeledTree& right : enumerate_shapes(arity - l))
                out.push_back(LabeledTree::node(0, left, right));
    }
    return out;
}

LabeledTree with_labels(const LabeledTree& shape, const std::vector<int>& labels,
                        std::size_t& pos) {
    if (shape.is_leaf()) return LabeledTree::leaf();
    const int label = labels[pos++];
    LabeledTree l = with_labels(shape.left(), labels, pos);
    LabeledTree r = with_labels(shape.right(), labels, pos);
    return LabeledTree::node(label, std::move(l), std::move(r));
}

} // namespace

std::vector<LabeledTree> enumerate_trees(int arity, int generator_count) {
    if (arity < 1) throw Error("arity must be >= 1");
    if (generator_count < 1) throw Error("need at least one generator");
    std::vector<LabeledTree> out;
    const int label_slots = arity - 1;
    for (const LabeledTree& shape : enumerate_shapes(arity)) {
        std::vector<int> labels(static_cast<std::size_t>(label_slots), 0);
        while (true) {
            std::size_t pos = 0;
            out.push_back(with_labels(shape, labels, pos));
            int i = label_slots - 1;
            for (; i >= 0; --i) {
                if (++labels[static_cast<std::size_t>(i)] < generator_count) break;
                labels[static_cast<std::size_t>(i)] = 0;
            }
            if (i < 0) break;
        }
    }
    return out;
}

LabeledTree graft(const LabeledTree& outer, int leaf_index, const LabeledTree& inner) {
    if (outer.is_leaf()) {
        if (leaf_index != 0)
            throw IndexOutOfRange("leaf index " + std::to_string(leaf_index) + " out of range");
        return inner;
    }
    const int left_leaves = outer.left().leaf_count();
    if (leaf_index < left_leaves)
        return LabeledTree::node(outer.label(), graft(outer.left(), leaf_index, inner),
                                 outer.right());
    return LabeledTree::node(outer.label(), outer.left(),
                             graft(outer.right(), leaf_index - left_leaves, inner));
}

LabeledTree generator_tree(int label) {
    return LabeledTree::node(label, LabeledTree::leaf(), LabeledTree::leaf());
}

LabeledTree left_comb(int outer, int inner) {
    return LabeledTree::node(outer, generator_tree(inner), LabeledTree::leaf());
}

LabeledTree right_comb(int outer, int inner) {
    return LabeledTree::node(outer, LabeledTree::leaf(), generator_tree(inner));
}

} // namespace braidops
