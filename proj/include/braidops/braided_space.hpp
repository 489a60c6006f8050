#pragma once

#include <map>
#include <vector>

#include "braidops/matrix.hpp"
#include "braidops/permutation.hpp"
#include "braidops/rational.hpp"

namespace braidops {

/// Sparse element of the n-fold tensor power of a d-dimensional space.
/// Keys are basis words over {0..d-1}; zero coefficients are never stored.
struct TensorVector {
    int degree = 0;
    int dim = 0;
    std::map<std::vector<int>, Rational> coeffs;

    static TensorVector basis(int dim, std::vector<int> word);
    void add(std::vector<int> word, const Rational& c);
    bool is_zero() const { return coeffs.empty(); }

    friend bool operator==(const TensorVector&, const TensorVector&) = default;
};

/// A vector space of dimension d with an operator on its tensor square,
/// stored as a d^2 x d^2 matrix. Rows index output pairs and columns input
/// pairs under the flattening (i, j) -> i*d + j, zero-based.
class BraidedSpace {
public:
    BraidedSpace(int dim, Matrix sigma);

    int dim() const { return dim_; }
    const Matrix& sigma() const { return sigma_; }

    /// Operator applied to tensor factors (pos, pos+1), pos 1-based.
    TensorVector apply_at(int pos, const TensorVector& t) const;

private:
    int dim_;
    Matrix sigma_;
};

TensorVector permute_tensor(const Permutation& w, const TensorVector& t);

/// Positive braid lift of w acting on a degree-n tensor: the letters of the
/// canonical reduced word act in order, the first letter first. Independent
/// of the chosen reduced word whenever the space passes check_yang_baxter.
TensorVector apply_positive_lift(const BraidedSpace& V, const Permutation& w,
                                 const TensorVector& t);
TensorVector apply_word(const BraidedSpace& V, std::span<const int> letters,
                        const TensorVector& t);

struct YbeCheck {
    bool ok = true;
    std::vector<int> witness; // first basis word where the two sides differ
};

/// Exhaustive hexagon check on all d^3 basis words.
YbeCheck check_yang_baxter(const BraidedSpace& V);

bool check_involutive(const BraidedSpace& V);

bool is_invertible(const BraidedSpace& V);

/// (f (x) f) sigma_V == sigma_W (f (x) f) on all basis pairs; f maps V to W.
bool check_braided_morphism(const Matrix& f, const BraidedSpace& V, const BraidedSpace& W);

BraidedSpace flip_braiding(int dim);
BraidedSpace identity_braiding(int dim);
/// sigma(e_i (x) e_j) = q[i][j] e_j (x) e_i
BraidedSpace diagonal_braiding(const std::vector<std::vector<Rational>>& q);

} // namespace braidops
