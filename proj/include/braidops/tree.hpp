#pragma once

#include <compare>
#include <string>
#include <vector>

namespace braidops {

/// Planar binary tree with one generator label per internal vertex.
/// Leaves carry no label; a bare leaf is the composition identity.
class LabeledTree {
public:
    LabeledTree() = default; // leaf

    static LabeledTree leaf() { return LabeledTree(); }
    static LabeledTree node(int label, LabeledTree left, LabeledTree right);

    bool is_leaf() const { return kids_.empty(); }
    int label() const { return label_; }
    const LabeledTree& left() const { return kids_[0]; }
    const LabeledTree& right() const { return kids_[1]; }

    int leaf_count() const;
    int internal_count() const { return leaf_count() - 1; }

    /// Preorder encoding; -1 marks a leaf. Unique per tree.
    std::vector<int> code() const;
    std::string str(const std::vector<std::string>& generator_names) const;

    friend bool operator==(const LabeledTree& a, const LabeledTree& b);
    friend std::strong_ordering operator<=>(const LabeledTree& a, const LabeledTree& b);

private:
    int label_ = -1;
    std::vector<LabeledTree> kids_; // empty or exactly two
};

/// All labeled trees of the given arity over `generator_count` labels, in a
/// fixed deterministic order: shapes by descending left-subtree size
/// (recursively), labels lexicographic over the preorder label sequence.
std::vector<LabeledTree> enumerate_trees(int arity, int generator_count);

/// Substitute `inner` at the leaf with the given zero-based index.
LabeledTree graft(const LabeledTree& outer, int leaf_index, const LabeledTree& inner);

LabeledTree generator_tree(int label); // two leaves under one labeled vertex
LabeledTree left_comb(int outer, int inner);
LabeledTree right_comb(int outer, int inner);

} // namespace braidops
