#include "acat/matrix.hpp"

namespace acat {

Matrix Matrix::identity(int n) {
    Matrix I(n, n);
    for (int i = 0; i < n; ++i) I.at(i, i) = 1;
    return I;
}

bool Matrix::is_zero() const {
    for (const Rational& x : a_)
        if (x != 0) return false;
    return true;
}

Matrix multiply(const Matrix& A, const Matrix& B) {
    if (A.cols() != B.rows()) throw std::invalid_argument("matrix dimension mismatch");
    Matrix C(A.rows(), B.cols());
    for (int i = 0; i < A.rows(); ++i)
        for (int k = 0; k < A.cols(); ++k) {
            const Rational& a = A.at(i, k);
            if (a == 0) continue;
            for (int j = 0; j < B.cols(); ++j) {
                const Rational& b = B.at(k, j);
                if (b == 0) continue;
                C.at(i, j) += a * b;
            }
        }
    return C;
}

Rational trace(const Matrix& A) {
    if (A.rows() != A.cols()) throw std::invalid_argument("trace of a non-square matrix");
    Rational t = 0;
    for (int i = 0; i < A.rows(); ++i) t += A.at(i, i);
    return t;
}

RrefResult rref(Matrix A) {
    RrefResult out;
    const int rows = A.rows(), cols = A.cols();
    int lead = 0;
    for (int col = 0; col < cols && lead < rows; ++col) {
        int pivot = -1;
        for (int r = lead; r < rows; ++r)
            if (A.at(r, col) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != lead)
            for (int c = col; c < cols; ++c) std::swap(A.at(pivot, c), A.at(lead, c));

        const Rational inv = Rational(1) / A.at(lead, col);
        if (inv != 1)
            for (int c = col; c < cols; ++c)
                if (A.at(lead, c) != 0) A.at(lead, c) *= inv;

        for (int r = 0; r < rows; ++r) {
            if (r == lead) continue;
            const Rational factor = A.at(r, col);
            if (factor == 0) continue;
            for (int c = col; c < cols; ++c) {
                const Rational& p = A.at(lead, c);
                if (p != 0) A.at(r, c) -= factor * p;
            }
        }
        out.pivot_cols.push_back(col);
        ++lead;
    }
    out.rank = static_cast<int>(out.pivot_cols.size());
    out.reduced = std::move(A);
    return out;
}

int rank(const Matrix& A) { return rref(A).rank; }

std::vector<std::vector<Rational>> kernel_basis(const Matrix& A) {
    const RrefResult r = rref(A);
    const int cols = A.cols();
    std::vector<bool> is_pivot(static_cast<size_t>(cols), false);
    for (int c : r.pivot_cols) is_pivot[static_cast<size_t>(c)] = true;

    std::vector<std::vector<Rational>> basis;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[static_cast<size_t>(free)]) continue;
        std::vector<Rational> v(static_cast<size_t>(cols));
        v[static_cast<size_t>(free)] = 1;
        for (int i = 0; i < r.rank; ++i)
            v[static_cast<size_t>(r.pivot_cols[static_cast<size_t>(i)])] =
                -r.reduced.at(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<Rational> solve(const Matrix& A, const std::vector<Rational>& b) {
    if (b.size() != static_cast<size_t>(A.rows()))
        throw std::invalid_argument("right-hand side has wrong length");
    Matrix aug(A.rows(), A.cols() + 1);
    for (int i = 0; i < A.rows(); ++i) {
        for (int j = 0; j < A.cols(); ++j) aug.at(i, j) = A.at(i, j);
        aug.at(i, A.cols()) = b[static_cast<size_t>(i)];
    }
    const RrefResult r = rref(std::move(aug));
    for (int i = 0; i < r.rank; ++i)
        if (r.pivot_cols[static_cast<size_t>(i)] == A.cols())
            fail(errc::inconsistent_system, "linear system has no solution");

    std::vector<Rational> x(static_cast<size_t>(A.cols()));
    for (int i = 0; i < r.rank; ++i)
        x[static_cast<size_t>(r.pivot_cols[static_cast<size_t>(i)])] = r.reduced.at(i, A.cols());
    return x;
}

} // namespace acat
