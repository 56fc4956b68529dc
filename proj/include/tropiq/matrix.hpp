#ifndef TROPIQ_MATRIX_HPP
#define TROPIQ_MATRIX_HPP

#include "tropiq/rational.hpp"

#include <cstddef>
#include <vector>

namespace tropiq {

/// Dense matrix over the rationals, row-major.
class QMatrix {
  public:
    QMatrix() : rows_(0), cols_(0) {}
    QMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    static QMatrix identity(std::size_t n);
    static QMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    std::vector<Rational> row(std::size_t r) const;
    void set_row(std::size_t r, const std::vector<Rational>& v);

    QMatrix transposed() const;
    QMatrix operator*(const QMatrix& other) const;
    bool operator==(const QMatrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && a_ == other.a_;
    }
    bool is_zero() const;

  private:
    std::size_t rows_, cols_;
    std::vector<Rational> a_;
};

/// Rank over Q, computed by fraction-free (Bareiss) elimination on the
/// integer matrix obtained after clearing row denominators.
std::size_t rank_exact(const QMatrix& m);

/// cols - rank.
std::size_t kernel_dim(const QMatrix& m);

/// Reduced row echelon form; `pivots` receives the pivot column of each
/// nonzero row. Zero rows are dropped.
QMatrix rref(const QMatrix& m, std::vector<std::size_t>* pivots = nullptr);

/// Basis of { x : m x = 0 }, one kernel vector per row.
QMatrix kernel_basis(const QMatrix& m);

/// Solve a x = b for a single right-hand side; returns false when inconsistent.
bool solve_linear(const QMatrix& a, const std::vector<Rational>& b, std::vector<Rational>& x);

/// Coordinates of each row of `vecs` in the span of the rows of `basis`.
/// Returns false if some row lies outside the span.
bool coordinates_in_rowspan(const QMatrix& basis, const QMatrix& vecs, QMatrix& coords);

/// Determinant of a square rational matrix.
Rational determinant(const QMatrix& m);

} // namespace tropiq

#endif
