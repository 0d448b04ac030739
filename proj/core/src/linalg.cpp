#include "kn/linalg.hpp"

namespace kn {

namespace {

// Row echelon elimination on the augmented system [A | b]; returns the pivot
// column of each pivot row.
std::vector<std::size_t> eliminate(QiMatrix& A, std::vector<GaussianRational>* b) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < A.cols() && row < A.rows(); ++col) {
        std::size_t pivot = row;
        while (pivot < A.rows() && A(pivot, col).is_zero()) ++pivot;
        if (pivot == A.rows()) continue;
        if (pivot != row) {
            for (std::size_t c = col; c < A.cols(); ++c) std::swap(A(row, c), A(pivot, c));
            if (b) std::swap((*b)[row], (*b)[pivot]);
        }
        GaussianRational inv = A(row, col).inverse();
        for (std::size_t c = col; c < A.cols(); ++c) A(row, c) *= inv;
        if (b) (*b)[row] *= inv;
        for (std::size_t r = 0; r < A.rows(); ++r) {
            if (r == row || A(r, col).is_zero()) continue;
            GaussianRational factor = A(r, col);
            for (std::size_t c = col; c < A.cols(); ++c) A(r, c) -= factor * A(row, c);
            if (b) (*b)[r] -= factor * (*b)[row];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

std::optional<std::vector<GaussianRational>> solve_linear(QiMatrix A,
                                                          std::vector<GaussianRational> b) {
    if (b.size() != A.rows()) throw domain_error("right-hand side size mismatch");
    std::vector<std::size_t> pivots = eliminate(A, &b);
    // Inconsistency: a zero row with nonzero rhs.
    for (std::size_t r = pivots.size(); r < A.rows(); ++r)
        if (!b[r].is_zero()) return std::nullopt;
    std::vector<GaussianRational> x(A.cols());
    for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = b[k];
    return x;
}

GaussianRational determinant(QiMatrix A) {
    if (A.rows() != A.cols()) throw domain_error("determinant of a non-square matrix");
    GaussianRational det(1);
    std::size_t n = A.rows();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && A(pivot, col).is_zero()) ++pivot;
        if (pivot == n) return GaussianRational(0);
        if (pivot != col) {
            for (std::size_t c = 0; c < n; ++c) std::swap(A(col, c), A(pivot, c));
            det = -det;
        }
        det *= A(col, col);
        GaussianRational inv = A(col, col).inverse();
        for (std::size_t r = col + 1; r < n; ++r) {
            if (A(r, col).is_zero()) continue;
            GaussianRational factor = A(r, col) * inv;
            for (std::size_t c = col; c < n; ++c) A(r, c) -= factor * A(col, c);
        }
    }
    return det;
}

std::size_t rank(QiMatrix A) {
    return eliminate(A, nullptr).size();
}

std::vector<std::vector<GaussianRational>> nullspace(QiMatrix A) {
    std::size_t cols = A.cols();
    std::vector<std::size_t> pivots = eliminate(A, nullptr);
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::vector<std::vector<GaussianRational>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<GaussianRational> v(cols);
        v[free] = GaussianRational(1);
        // Reduced echelon form: pivot rows read off the dependent entries.
        for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -A(k, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace kn
