#include "braidops/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "braidops/errors.hpp"

namespace braidops {

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size(), false);
    for (int v : img_) {
        if (v < 1 || v > static_cast<int>(img_.size()) || seen[v - 1])
            throw Error("not a permutation");
        seen[v - 1] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 1);
    return Permutation(std::move(img));
}

Permutation Permutation::transposition(int n, int i) {
    if (i < 1 || i >= n) throw IndexOutOfRange("transposition index " + std::to_string(i));
    Permutation w = identity(n);
    std::swap(w.img_[i - 1], w.img_[i]);
    return w;
}

bool Permutation::is_identity() const {
    for (int i = 0; i < size(); ++i)
        if (img_[i] != i + 1) return false;
    return true;
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(img_.size());
    for (int i = 0; i < size(); ++i) inv[img_[i] - 1] = i + 1;
    return Permutation(std::move(inv));
}

Permutation Permutation::then(const Permutation& next) const {
    if (next.size() != size()) throw DimMismatch("permutation sizes differ");
    std::vector<int> img(img_.size());
    for (int i = 0; i < size(); ++i) img[i] = next.img_[img_[i] - 1];
    return Permutation(std::move(img));
}

int Permutation::inversions() const {
    int count = 0;
    for (int i = 0; i < size(); ++i)
        for (int j = i + 1; j < size(); ++j)
            if (img_[i] > img_[j]) ++count;
    return count;
}

std::vector<int> reduced_word(const Permutation& w) {
    std::vector<int> seq = w.images();
    std::vector<int> word;
    const int n = w.size();
    for (int target = n; target >= 2; --target) {
        int p = 0;
        while (seq[p] != target) ++p;
        for (; p + 1 < target; ++p) {
            std::swap(seq[p], seq[p + 1]);
            word.push_back(p + 1);
        }
    }
    return word;
}

Permutation permutation_from_word(std::span<const int> letters, int n) {
    Permutation w = Permutation::identity(n);
    for (int l : letters) w = w.then(Permutation::transposition(n, l));
    return w;
}

std::vector<std::vector<int>> all_reduced_words(const Permutation& w) {
    if (w.is_identity()) return {{}};
    std::vector<std::vector<int>> out;
    const int n = w.size();
    for (int i = 1; i < n; ++i) {
        if (w(i) <= w(i + 1)) continue; // first letter must be a descent
        std::vector<int> img = w.images();
        std::swap(img[i - 1], img[i]);
        for (auto& tail : all_reduced_words(Permutation(std::move(img)))) {
            std::vector<int> word;
            word.reserve(tail.size() + 1);
            word.push_back(i);
            word.insert(word.end(), tail.begin(), tail.end());
            out.push_back(std::move(word));
        }
    }
    return out;
}

Permutation block_transposition(int i, int j) {
    if (i < 0 || j < 0 || i + j < 1) throw Error("block sizes must be nonnegative, total >= 1");
    std::vector<int> img(i + j);
    for (int k = 1; k <= i; ++k) img[k - 1] = j + k;
    for (int k = i + 1; k <= i + j; ++k) img[k - 1] = k - i;
    return Permutation(std::move(img));
}

Permutation interleave(int n) {
    if (n < 1) throw Error("interleave needs n >= 1");
    std::vector<int> img(2 * n);
    for (int i = 1; i <= n; ++i) {
        img[2 * i - 2] = i;
        img[2 * i - 1] = n + i;
    }
    return Permutation(std::move(img));
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 1);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation(img));
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

} // namespace braidops
