#pragma once

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "acat/error.hpp"

namespace acat {

// Exact rational scalar; all linear algebra in this project is exact.
using Rational = boost::multiprecision::cpp_rational;

// Dense matrix over Rational. Sizes here are desk scale; the elimination
// routines skip zero entries, which is what matters for the sparse boundary
// matrices this project produces.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

    static Matrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    const Rational& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

    bool is_zero() const;

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rational> a_;
};

Matrix multiply(const Matrix& A, const Matrix& B);
Rational trace(const Matrix& A);

struct RrefResult {
    Matrix reduced;
    std::vector<int> pivot_cols; // ascending
    int rank = 0;
};

// Reduced row echelon form with deterministic pivoting: columns scanned left
// to right, pivot is the first row (lowest index) with a nonzero entry.
RrefResult rref(Matrix A);

int rank(const Matrix& A);

// Basis of the right null space, one column vector per basis element.
std::vector<std::vector<Rational>> kernel_basis(const Matrix& A);

// Solves A x = b exactly; throws InconsistentSystem when no solution exists.
// Free variables are set to zero.
std::vector<Rational> solve(const Matrix& A, const std::vector<Rational>& b);

} // namespace acat
