#include "exact_linalg.hpp"

#include <utility>

namespace futaki::linalg {

namespace {

// Gaussian elimination to row echelon form; returns pivot columns and the
// sign flips from row swaps.
struct Echelon {
    std::vector<std::size_t> pivots;
    int swaps = 0;
};

Echelon eliminate(Matrix& a) {
    Echelon out;
    const std::size_t rows = a.size();
    const std::size_t cols = rows == 0 ? 0 : a[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && a[pivot][c].is_zero()) ++pivot;
        if (pivot == rows) continue;
        if (pivot != r) {
            std::swap(a[pivot], a[r]);
            ++out.swaps;
        }
        const Rational inv = a[r][c].inverse();
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (a[i][c].is_zero()) continue;
            const Rational factor = a[i][c] * inv;
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= factor * a[r][j];
        }
        out.pivots.push_back(c);
        ++r;
    }
    return out;
}

}  // namespace

std::optional<Vector> solve(Matrix a, Vector b) {
    const std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i) a[i].push_back(b[i]);
    const Echelon e = eliminate(a);
    if (e.pivots.size() < n || e.pivots.back() >= n) return std::nullopt;
    Vector y(n);
    for (std::size_t i = n; i-- > 0;) {
        Rational acc = a[i][n];
        for (std::size_t j = i + 1; j < n; ++j) acc -= a[i][j] * y[j];
        y[i] = acc / a[i][i];
    }
    return y;
}

int rank(Matrix a) { return static_cast<int>(eliminate(a).pivots.size()); }

std::optional<Vector> kernel_vector(Matrix a) {
    if (a.empty()) return std::nullopt;
    const std::size_t n = a[0].size();
    const Echelon e = eliminate(a);
    if (e.pivots.size() + 1 != n) return std::nullopt;
    std::size_t free_col = 0;
    for (std::size_t k = 0; k < e.pivots.size() && e.pivots[k] == free_col; ++k) ++free_col;
    Vector v(n);
    v[free_col] = Rational(1);
    for (std::size_t i = e.pivots.size(); i-- > 0;) {
        const std::size_t c = e.pivots[i];
        Rational acc;
        for (std::size_t j = c + 1; j < n; ++j) acc -= a[i][j] * v[j];
        v[c] = acc / a[i][c];
    }
    return v;
}

Rational determinant(Matrix a) {
    const std::size_t n = a.size();
    const Echelon e = eliminate(a);
    if (e.pivots.size() < n) return Rational(0);
    Rational det(e.swaps % 2 == 0 ? 1 : -1);
    for (std::size_t i = 0; i < n; ++i) det *= a[i][i];
    return det;
}

int affine_rank(const std::vector<const Vector*>& points) {
    if (points.size() < 2) return 0;
    Matrix diffs;
    diffs.reserve(points.size() - 1);
    for (std::size_t i = 1; i < points.size(); ++i) {
        Vector d(points[0]->size());
        for (std::size_t j = 0; j < d.size(); ++j) d[j] = (*points[i])[j] - (*points[0])[j];
        diffs.push_back(std::move(d));
    }
    return rank(std::move(diffs));
}

Rational dot(const Vector& a, const Vector& b) {
    Rational acc;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

}  // namespace futaki::linalg
