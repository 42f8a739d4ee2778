#include "repca/matrix.hpp"

#include <algorithm>
#include <utility>

#include "repca/errors.hpp"

namespace repca {

Matrix::Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0)
        throw ValidationError("matrix with negative shape");
    e_.assign(static_cast<std::size_t>(rows) * cols, Rational());
}

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
}

bool Matrix::is_zero() const {
    for (const auto& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

Rational Matrix::trace() const {
    if (!is_square())
        throw PreconditionError("dimension_mismatch", "trace of a non-square matrix");
    Rational t;
    for (int i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

Matrix Matrix::pow(unsigned k) const {
    if (!is_square())
        throw PreconditionError("dimension_mismatch", "power of a non-square matrix");
    Matrix acc = Matrix::identity(rows_);
    for (unsigned i = 0; i < k; ++i) acc = acc * *this;
    return acc;
}

Matrix Matrix::operator-() const {
    Matrix r(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = -e_[i];
    return r;
}

Matrix& Matrix::operator+=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw PreconditionError("dimension_mismatch", "matrix addition shape mismatch");
    for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw PreconditionError("dimension_mismatch", "matrix subtraction shape mismatch");
    for (std::size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_)
        throw PreconditionError("dimension_mismatch", "matrix product shape mismatch");
    Matrix r(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            const Rational& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < b.cols_; ++j) {
                const Rational& bkj = b.at(k, j);
                if (!bkj.is_zero()) r.at(i, j) += aik * bkj;
            }
        }
    return r;
}

Matrix operator*(const Rational& c, Matrix a) {
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) a.at(i, j) *= c;
    return a;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
}

namespace {

// Row echelon form over Z via Bareiss one-step elimination. Rows are the
// denominator-cleared rows of the input; divisions by the previous pivot are
// exact (Sylvester identity). Returns echelon rows and their pivot columns.
struct IntEchelon {
    std::vector<std::vector<mpz_class>> rows;
    std::vector<int> pivot_cols;
};

IntEchelon fraction_free_echelon(const Matrix& m) {
    const int nr = m.rows(), nc = m.cols();
    std::vector<std::vector<mpz_class>> rows(nr, std::vector<mpz_class>(nc));
    for (int i = 0; i < nr; ++i) {
        mpz_class l(1);
        for (int j = 0; j < nc; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).den().get_mpz_t());
        for (int j = 0; j < nc; ++j) rows[i][j] = m.at(i, j).num() * (l / m.at(i, j).den());
    }

    IntEchelon ech;
    ech.rows.reserve(std::min(nr, nc));
    mpz_class prev(1);
    int r = 0;
    for (int c = 0; c < nc && r < nr; ++c) {
        int p = -1;
        for (int i = r; i < nr; ++i)
            if (rows[i][c] != 0) { p = i; break; }
        if (p < 0) continue;
        std::swap(rows[r], rows[p]);
        for (int i = r + 1; i < nr; ++i) {
            for (int j = c + 1; j < nc; ++j) {
                mpz_class t = rows[r][c] * rows[i][j] - rows[i][c] * rows[r][j];
                mpz_divexact(rows[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            rows[i][c] = 0;
        }
        prev = rows[r][c];
        ech.pivot_cols.push_back(c);
        ++r;
    }
    rows.resize(static_cast<std::size_t>(r));
    ech.rows = std::move(rows);
    return ech;
}

} // namespace

std::vector<Vec> kernel_basis(const Matrix& m) {
    const int nc = m.cols();
    IntEchelon ech = fraction_free_echelon(m);
    const int nr = static_cast<int>(ech.rows.size());

    std::vector<bool> is_pivot(nc, false);
    for (int c : ech.pivot_cols) is_pivot[c] = true;

    std::vector<Vec> basis;
    for (int f = 0; f < nc; ++f) {
        if (is_pivot[f]) continue;
        Vec v(nc, Rational());
        v[f] = Rational(1);
        for (int i = nr - 1; i >= 0; --i) {
            const int pc = ech.pivot_cols[i];
            Rational s;
            for (int j = pc + 1; j < nc; ++j) {
                if (v[j].is_zero() || ech.rows[i][j] == 0) continue;
                s += Rational(ech.rows[i][j]) * v[j];
            }
            v[pc] = -s / Rational(ech.rows[i][pc]);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

int rank(const Matrix& m) {
    return static_cast<int>(fraction_free_echelon(m).pivot_cols.size());
}

Matrix inverse(const Matrix& m) {
    if (!m.is_square())
        throw PreconditionError("singular_matrix", "inverse of a non-square matrix");
    const int n = m.rows();
    Matrix a = m;
    Matrix inv = Matrix::identity(n);
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int i = c; i < n; ++i)
            if (!a.at(i, c).is_zero()) { p = i; break; }
        if (p < 0) throw PreconditionError("singular_matrix", "matrix is singular");
        if (p != c)
            for (int j = 0; j < n; ++j) {
                std::swap(a.at(p, j), a.at(c, j));
                std::swap(inv.at(p, j), inv.at(c, j));
            }
        Rational piv = a.at(c, c);
        for (int j = 0; j < n; ++j) {
            a.at(c, j) /= piv;
            inv.at(c, j) /= piv;
        }
        for (int i = 0; i < n; ++i) {
            if (i == c || a.at(i, c).is_zero()) continue;
            Rational f = a.at(i, c);
            for (int j = 0; j < n; ++j) {
                a.at(i, j) -= f * a.at(c, j);
                inv.at(i, j) -= f * inv.at(c, j);
            }
        }
    }
    return inv;
}

int RowSpace::reduce(Vec& v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Rational& c = v[pivots_[i]];
        if (c.is_zero()) continue;
        Rational f = c;
        for (int j = pivots_[i]; j < ncols_; ++j) v[j] -= f * rows_[i][j];
    }
    for (int j = 0; j < ncols_; ++j)
        if (!v[j].is_zero()) return j;
    return -1;
}

bool RowSpace::insert(Vec v) {
    if (static_cast<int>(v.size()) != ncols_)
        throw PreconditionError("dimension_mismatch", "row length mismatch in RowSpace");
    int p = reduce(v);
    if (p < 0) return false;
    Rational lead = v[p];
    for (int j = p; j < ncols_; ++j) v[j] /= lead;
    // back-substitute into existing rows, keep rows sorted by pivot
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        Rational f = rows_[i][p];
        if (f.is_zero()) continue;
        for (int j = p; j < ncols_; ++j) rows_[i][j] -= f * v[j];
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p);
    std::size_t idx = static_cast<std::size_t>(pos - pivots_.begin());
    pivots_.insert(pos, p);
    rows_.insert(rows_.begin() + idx, std::move(v));
    return true;
}

bool RowSpace::contains(Vec v) const {
    if (static_cast<int>(v.size()) != ncols_)
        throw PreconditionError("dimension_mismatch", "row length mismatch in RowSpace");
    return reduce(v) < 0;
}

void RowSpace::insert_all(const std::vector<Vec>& vs) {
    for (const auto& v : vs) insert(v);
}

} // namespace repca
