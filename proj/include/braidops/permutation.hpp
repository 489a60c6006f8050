#pragma once

#include <compare>
#include <span>
#include <vector>

namespace braidops {

/// Permutation of {1..n}; images[i-1] = w(i).
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int n);
    static Permutation transposition(int n, int i); // swaps i, i+1 (1-based)

    int size() const { return static_cast<int>(img_.size()); }
    int operator()(int k) const { return img_[k - 1]; } // 1-based
    const std::vector<int>& images() const { return img_; }

    bool is_identity() const;
    Permutation inverse() const;
    /// Composite applying *this first, then `next`.
    Permutation then(const Permutation& next) const;
    int inversions() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> img_;
};

/// Canonical reduced word for w. Letters are adjacent-transposition indices
/// in {1..n-1}, listed in application order: the first letter acts first.
/// The canonical word repeatedly walks the largest displaced value rightward
/// to its home, so the output is deterministic.
std::vector<int> reduced_word(const Permutation& w);

/// Composite of adjacent transpositions; letters act in list order
/// (the first letter is applied first). Inverse of reduced_word.
Permutation permutation_from_word(std::span<const int> letters, int n);

/// All reduced words of w, in application order (test oracle for word
/// independence of braid lifts).
std::vector<std::vector<int>> all_reduced_words(const Permutation& w);

/// The permutation of {1..i+j} moving the first i entries past the last j:
/// k -> j+k for k <= i, k -> k-i otherwise.
Permutation block_transposition(int i, int j);

/// The unshuffle of {1..2n} sending 2i-1 -> i and 2i -> n+i.
Permutation interleave(int n);

std::vector<Permutation> all_permutations(int n);

} // namespace braidops
