#ifndef MDET_MATRIX_HPP
#define MDET_MATRIX_HPP

#include "mdet/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace mdet {

/// Dense matrix over the rationals, row-major. Values are immutable in
/// spirit: the linear-algebra routines below never modify their inputs.
class QMat {
  public:
    QMat() : rows_(0), cols_(0) {}
    QMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}
    QMat(std::size_t rows, std::size_t cols, std::vector<Rat> entries);
    QMat(std::initializer_list<std::initializer_list<int>> rows);

    static QMat identity(std::size_t n);
    static QMat from_strings(const std::vector<std::vector<std::string>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Rat& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
    Rat& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }

    QMat transpose() const;
    QMat operator*(const QMat& other) const;
    bool operator==(const QMat& other) const = default;
    bool is_zero() const;

    std::vector<Rat> col(std::size_t j) const;
    std::vector<Rat> row(std::size_t i) const;
    QMat select_cols(const std::vector<int>& idx) const;
    QMat hstack(const QMat& other) const;

  private:
    std::size_t rows_, cols_;
    std::vector<Rat> e_;
};

/// Dense matrix over the integers, row-major.
class ZMat {
  public:
    ZMat() : rows_(0), cols_(0) {}
    ZMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}
    ZMat(std::initializer_list<std::initializer_list<int>> rows);

    static ZMat identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Int& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
    Int& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }

    ZMat transpose() const;
    ZMat operator*(const ZMat& other) const;
    bool operator==(const ZMat& other) const = default;

    QMat to_rational() const;

  private:
    std::size_t rows_, cols_;
    std::vector<Int> e_;
};

std::vector<Rat> mat_vec(const QMat& m, const std::vector<Rat>& v);
Rat dot(const std::vector<Rat>& a, const std::vector<Rat>& b);

/// Rank over Q via fraction-free (Bareiss) elimination on the
/// denominator-cleared integer matrix.
std::size_t rank(const QMat& m);
std::size_t rank(const ZMat& m);

/// Exact determinant of a square matrix (Bareiss).
Rat determinant(const QMat& m);
Int determinant(const ZMat& m);

/// Reduced row echelon form; pivot columns reported in order.
QMat rref(const QMat& m, std::vector<std::size_t>* pivot_cols = nullptr);

/// Basis of the right kernel, as columns, in reduced column echelon form
/// with pivots normalized to 1 (canonical, hence deterministic). A trivial
/// kernel yields a matrix with zero columns.
QMat kernel_basis(const QMat& m);

/// Reduced column echelon form of the column span (unique for a given
/// span); zero columns are dropped.
QMat reduced_column_echelon(const QMat& m);

/// Solves m * x = rhs exactly. Returns false when inconsistent; if the
/// system is underdetermined, free variables are set to zero.
bool solve(const QMat& m, const std::vector<Rat>& rhs, std::vector<Rat>& x);

}  // namespace mdet

#endif
