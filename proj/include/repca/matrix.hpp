#ifndef REPCA_MATRIX_HPP
#define REPCA_MATRIX_HPP

#include <vector>

#include "repca/rational.hpp"

namespace repca {

using Vec = std::vector<Rational>;

// Dense matrix over Q, row-major. Zero-row / zero-column shapes are legal;
// they show up as hom spaces between quiver reps with zero vertex dimensions.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols);
    static Matrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int i, int j) { return e_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Rational& at(int i, int j) const { return e_[static_cast<std::size_t>(i) * cols_ + j]; }

    bool is_square() const { return rows_ == cols_; }
    bool is_zero() const;
    Rational trace() const;
    Matrix transpose() const;
    Matrix pow(unsigned k) const;

    Matrix operator-() const;
    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Rational& c, Matrix a);
    friend bool operator==(const Matrix& a, const Matrix& b);
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

private:
    int rows_, cols_;
    std::vector<Rational> e_;
};

// Exact basis of the right kernel {v : M v = 0}; one vector per free column,
// rank + kernel dimension = cols. Forward elimination is fraction-free
// (Bareiss) on denominator-cleared integer rows.
std::vector<Vec> kernel_basis(const Matrix& m);

int rank(const Matrix& m);

// Throws PreconditionError("singular_matrix") when not invertible.
Matrix inverse(const Matrix& m);

// Incremental reduced-row-echelon span of row vectors over Q. Two RowSpaces
// are equal iff they span the same subspace (RREF is canonical).
class RowSpace {
public:
    explicit RowSpace(int ncols) : ncols_(ncols) {}

    // Returns true when v enlarges the span.
    bool insert(Vec v);
    bool contains(Vec v) const;
    void insert_all(const std::vector<Vec>& vs);

    int dim() const { return static_cast<int>(rows_.size()); }
    int ncols() const { return ncols_; }
    const std::vector<Vec>& basis() const { return rows_; }

    friend bool operator==(const RowSpace& a, const RowSpace& b) {
        return a.ncols_ == b.ncols_ && a.rows_ == b.rows_;
    }

private:
    // Reduces v by the stored rows; returns pivot column or -1 if v became 0.
    int reduce(Vec& v) const;

    int ncols_;
    std::vector<Vec> rows_;    // RREF rows ordered by pivot column
    std::vector<int> pivots_;
};

} // namespace repca

#endif
