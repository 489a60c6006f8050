#include "braidops/matrix.hpp"

#include <algorithm>

#include "braidops/errors.hpp"

namespace braidops {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
    if (rows.empty()) return Matrix();
    Matrix m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols()) throw DimMismatch("ragged rows");
        for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

std::vector<Rational> Matrix::row(std::size_t i) const {
    std::vector<Rational> r(cols_);
    for (std::size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
    return r;
}

void Matrix::swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

RrefResult rref(const Matrix& m) {
    Matrix r = m;
    std::vector<std::size_t> pivots;
    std::size_t pr = 0;
    for (std::size_t pc = 0; pc < r.cols() && pr < r.rows(); ++pc) {
        std::size_t sel = r.rows();
        for (std::size_t i = pr; i < r.rows(); ++i)
            if (!r.at(i, pc).is_zero()) { sel = i; break; }
        if (sel == r.rows()) continue;
        r.swap_rows(pr, sel);
        const Rational inv = Rational(1) / r.at(pr, pc);
        for (std::size_t j = pc; j < r.cols(); ++j) r.at(pr, j) *= inv;
        for (std::size_t i = 0; i < r.rows(); ++i) {
            if (i == pr || r.at(i, pc).is_zero()) continue;
            const Rational f = r.at(i, pc);
            for (std::size_t j = pc; j < r.cols(); ++j) r.at(i, j) -= f * r.at(pr, j);
        }
        pivots.push_back(pc);
        ++pr;
    }
    return {pivots.size(), std::move(r), std::move(pivots)};
}

std::vector<std::vector<Rational>> nullspace(const Matrix& m) {
    const RrefResult rr = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : rr.pivot_cols) is_pivot[p] = true;

    std::vector<std::vector<Rational>> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> v(m.cols());
        v[f] = 1;
        for (std::size_t i = 0; i < rr.pivot_cols.size(); ++i)
            v[rr.pivot_cols[i]] = -rr.reduced.at(i, f);
        // scale so the first nonzero coordinate is 1
        for (const Rational& c : v) {
            if (!c.is_zero()) {
                if (!c.is_one()) {
                    const Rational scale = c;
                    for (Rational& x : v) x /= scale;
                }
                break;
            }
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<AffineSolutionSet> solve_affine(const Matrix& m, const std::vector<Rational>& b) {
    if (b.size() != m.rows()) throw DimMismatch("rhs size does not match row count");
    Matrix aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = b[i];
    }
    const RrefResult rr = rref(aug);
    for (std::size_t p : rr.pivot_cols)
        if (p == m.cols()) return std::nullopt;

    AffineSolutionSet s;
    s.particular.assign(m.cols(), Rational(0));
    for (std::size_t i = 0; i < rr.pivot_cols.size(); ++i)
        s.particular[rr.pivot_cols[i]] = rr.reduced.at(i, m.cols());
    s.directions = nullspace(m);
    return s;
}

std::size_t rank_of(const std::vector<std::vector<Rational>>& vectors) {
    if (vectors.empty()) return 0;
    return rref(Matrix::from_rows(vectors)).rank;
}

bool subspace_contains(const std::vector<std::vector<Rational>>& span,
                       const std::vector<Rational>& v) {
    for (const auto& s : span)
        if (s.size() != v.size()) throw DimMismatch("span/vector dimension mismatch");
    auto extended = span;
    extended.push_back(v);
    return rank_of(span) == rank_of(extended);
}

std::vector<Rational> mat_vec(const Matrix& m, const std::vector<Rational>& x) {
    if (x.size() != m.cols()) throw DimMismatch("vector size does not match column count");
    std::vector<Rational> y(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m.at(i, j).is_zero() && !x[j].is_zero()) y[i] += m.at(i, j) * x[j];
    return y;
}

} // namespace braidops
