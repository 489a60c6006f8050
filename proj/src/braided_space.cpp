#include "braidops/braided_space.hpp"

#include <string>

#include "braidops/errors.hpp"

namespace braidops {

TensorVector TensorVector::basis(int dim, std::vector<int> word) {
    TensorVector t;
    t.degree = static_cast<int>(word.size());
    t.dim = dim;
    t.coeffs.emplace(std::move(word), Rational(1));
    return t;
}

void TensorVector::add(std::vector<int> word, const Rational& c) {
    if (c.is_zero()) return;
    auto it = coeffs.find(word);
    if (it == coeffs.end()) {
        coeffs.emplace(std::move(word), c);
    } else {
        it->second += c;
        if (it->second.is_zero()) coeffs.erase(it);
    }
}

BraidedSpace::BraidedSpace(int dim, Matrix sigma) : dim_(dim), sigma_(std::move(sigma)) {
    if (dim < 1) throw Error("braided space dimension must be >= 1");
    const std::size_t d2 = static_cast<std::size_t>(dim) * dim;
    if (sigma_.rows() != d2 || sigma_.cols() != d2)
        throw DimMismatch("operator matrix must be d^2 x d^2");
}

TensorVector BraidedSpace::apply_at(int pos, const TensorVector& t) const {
    if (t.dim != dim_) throw DimMismatch("tensor dimension differs from space dimension");
    if (pos < 1 || pos >= t.degree)
        throw IndexOutOfRange("tensor position " + std::to_string(pos));
    TensorVector out;
    out.degree = t.degree;
    out.dim = dim_;
    for (const auto& [word, c] : t.coeffs) {
        const int col = word[pos - 1] * dim_ + word[pos];
        for (int k = 0; k < dim_; ++k) {
            for (int l = 0; l < dim_; ++l) {
                const Rational& entry = sigma_.at(static_cast<std::size_t>(k * dim_ + l),
                                                  static_cast<std::size_t>(col));
                if (entry.is_zero()) continue;
                std::vector<int> w = word;
                w[pos - 1] = k;
                w[pos] = l;
                out.add(std::move(w), c * entry);
            }
        }
    }
    return out;
}

TensorVector permute_tensor(const Permutation& w, const TensorVector& t) {
    if (w.size() != t.degree) throw DegreeMismatch("permutation size differs from tensor degree");
    const Permutation winv = w.inverse();
    TensorVector out;
    out.degree = t.degree;
    out.dim = t.dim;
    for (const auto& [word, c] : t.coeffs) {
        std::vector<int> moved(word.size());
        for (int i = 1; i <= t.degree; ++i) moved[i - 1] = word[winv(i) - 1];
        out.add(std::move(moved), c);
    }
    return out;
}

TensorVector apply_word(const BraidedSpace& V, std::span<const int> letters,
                        const TensorVector& t) {
    TensorVector cur = t;
    for (int l : letters) cur = V.apply_at(l, cur);
    return cur;
}

TensorVector apply_positive_lift(const BraidedSpace& V, const Permutation& w,
                                 const TensorVector& t) {
    if (w.size() != t.degree) throw DegreeMismatch("permutation size differs from tensor degree");
    return apply_word(V, reduced_word(w), t);
}

YbeCheck check_yang_baxter(const BraidedSpace& V) {
    const int d = V.dim();
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            for (int k = 0; k < d; ++k) {
                const TensorVector e = TensorVector::basis(d, {i, j, k});
                const TensorVector lhs = V.apply_at(1, V.apply_at(2, V.apply_at(1, e)));
                const TensorVector rhs = V.apply_at(2, V.apply_at(1, V.apply_at(2, e)));
                if (!(lhs == rhs)) return {false, {i, j, k}};
            }
        }
    }
    return {};
}

bool check_involutive(const BraidedSpace& V) {
    const int d = V.dim();
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            const TensorVector e = TensorVector::basis(d, {i, j});
            if (!(V.apply_at(1, V.apply_at(1, e)) == e)) return false;
        }
    }
    return true;
}

bool is_invertible(const BraidedSpace& V) {
    return rref(V.sigma()).rank == V.sigma().rows();
}

bool check_braided_morphism(const Matrix& f, const BraidedSpace& V, const BraidedSpace& W) {
    if (f.cols() != static_cast<std::size_t>(V.dim()) ||
        f.rows() != static_cast<std::size_t>(W.dim()))
        throw DimMismatch("map shape does not match the two spaces");

    // (f (x) f) applied to a V-tensor of degree 2
    const auto map_pair = [&](const TensorVector& t) {
        TensorVector out;
        out.degree = 2;
        out.dim = W.dim();
        for (const auto& [word, c] : t.coeffs) {
            for (int a = 0; a < W.dim(); ++a) {
                const Rational& fa = f.at(a, word[0]);
                if (fa.is_zero()) continue;
                for (int b = 0; b < W.dim(); ++b) {
                    const Rational& fb = f.at(b, word[1]);
                    if (fb.is_zero()) continue;
                    out.add({a, b}, c * fa * fb);
                }
            }
        }
        return out;
    };

    for (int i = 0; i < V.dim(); ++i) {
        for (int j = 0; j < V.dim(); ++j) {
            const TensorVector e = TensorVector::basis(V.dim(), {i, j});
            const TensorVector lhs = map_pair(V.apply_at(1, e));
            const TensorVector rhs = W.apply_at(1, map_pair(e));
            if (!(lhs == rhs)) return false;
        }
    }
    return true;
}

BraidedSpace flip_braiding(int dim) {
    Matrix m(static_cast<std::size_t>(dim) * dim, static_cast<std::size_t>(dim) * dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            m.at(static_cast<std::size_t>(j * dim + i), static_cast<std::size_t>(i * dim + j)) = 1;
    return BraidedSpace(dim, std::move(m));
}

BraidedSpace identity_braiding(int dim) {
    return BraidedSpace(dim, Matrix::identity(static_cast<std::size_t>(dim) * dim));
}

BraidedSpace diagonal_braiding(const std::vector<std::vector<Rational>>& q) {
    const int dim = static_cast<int>(q.size());
    Matrix m(static_cast<std::size_t>(dim) * dim, static_cast<std::size_t>(dim) * dim);
    for (int i = 0; i < dim; ++i) {
        if (q[i].size() != q.size()) throw DimMismatch("parameter grid must be square");
        for (int j = 0; j < dim; ++j)
            m.at(static_cast<std::size_t>(j * dim + i), static_cast<std::size_t>(i * dim + j)) =
                q[i][j];
    }
    return BraidedSpace(dim, std::move(m));
}

} // namespace braidops
