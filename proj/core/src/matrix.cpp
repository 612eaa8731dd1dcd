#include "mdet/matrix.hpp"

#include "mdet/errors.hpp"

#include <algorithm>

namespace mdet {

QMat::QMat(std::size_t rows, std::size_t cols, std::vector<Rat> entries)
    : rows_(rows), cols_(cols), e_(std::move(entries)) {
    if (rows_ * cols_ != e_.size()) throw Error("matrix shape does not match entry count");
}

QMat::QMat(std::initializer_list<std::initializer_list<int>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    e_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw Error("ragged initializer");
        for (int v : r) e_.emplace_back(v);
    }
}

QMat QMat::identity(std::size_t n) {
    QMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

QMat QMat::from_strings(const std::vector<std::vector<std::string>>& rows) {
    std::size_t r = rows.size();
    std::size_t c = r ? rows[0].size() : 0;
    QMat m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw ParseError("ragged matrix input");
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = parse_rational(rows[i][j]);
    }
    return m;
}

QMat QMat::transpose() const {
    QMat t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

QMat QMat::operator*(const QMat& other) const {
    if (cols_ != other.rows_) throw Error("matrix product shape mismatch");
    QMat p(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rat& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < other.cols_; ++j) p.at(i, j) += a * other.at(k, j);
        }
    return p;
}

bool QMat::is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](const Rat& x) { return x == 0; });
}

std::vector<Rat> QMat::col(std::size_t j) const {
    std::vector<Rat> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
}

std::vector<Rat> QMat::row(std::size_t i) const {
    std::vector<Rat> v(cols_);
    for (std::size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
    return v;
}

QMat QMat::select_cols(const std::vector<int>& idx) const {
    QMat m(rows_, idx.size());
    for (std::size_t j = 0; j < idx.size(); ++j)
        for (std::size_t i = 0; i < rows_; ++i) m.at(i, j) = at(i, idx[j]);
    return m;
}

QMat QMat::hstack(const QMat& other) const {
    if (rows_ != other.rows_) throw Error("hstack row mismatch");
    QMat m(rows_, cols_ + other.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
        for (std::size_t j = 0; j < other.cols_; ++j) m.at(i, cols_ + j) = other.at(i, j);
    }
    return m;
}

ZMat::ZMat(std::initializer_list<std::initializer_list<int>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    e_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw Error("ragged initializer");
        for (int v : r) e_.emplace_back(v);
    }
}

ZMat ZMat::identity(std::size_t n) {
    ZMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

ZMat ZMat::transpose() const {
    ZMat t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

ZMat ZMat::operator*(const ZMat& other) const {
    if (cols_ != other.rows_) throw Error("matrix product shape mismatch");
    ZMat p(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < other.cols_; ++j) p.at(i, j) += a * other.at(k, j);
        }
    return p;
}

QMat ZMat::to_rational() const {
    QMat m(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = Rat(at(i, j));
    return m;
}

std::vector<Rat> mat_vec(const QMat& m, const std::vector<Rat>& v) {
    if (m.cols() != v.size()) throw Error("mat_vec shape mismatch");
    std::vector<Rat> out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m.at(i, j) * v[j];
    return out;
}

Rat dot(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    if (a.size() != b.size()) throw Error("dot length mismatch");
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

namespace {

// Clears denominators row by row; scaling rows preserves rank.
ZMat clear_denominators(const QMat& m) {
    ZMat z(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Int lcm = 1;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            Int d = denominator(m.at(i, j));
            lcm = boost::multiprecision::lcm(lcm, d);
        }
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Rat& q = m.at(i, j);
            z.at(i, j) = numerator(q) * (lcm / denominator(q));
        }
    }
    return z;
}

// Fraction-free Bareiss elimination. Returns rank; when `det` is non-null
// the matrix must be square and *det receives the exact determinant.
std::size_t bareiss(ZMat a, Int* det) {
    const std::size_t r = a.rows(), c = a.cols();
    Int prev = 1;
    int sign = 1;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < c && rank < r; ++col) {
        std::size_t piv = rank;
        while (piv < r && a.at(piv, col) == 0) ++piv;
        if (piv == r) continue;
        if (piv != rank) {
            for (std::size_t j = 0; j < c; ++j) std::swap(a.at(piv, j), a.at(rank, j));
            sign = -sign;
        }
        for (std::size_t i = rank + 1; i < r; ++i) {
            for (std::size_t j = col + 1; j < c; ++j) {
                Int t = a.at(rank, col) * a.at(i, j) - a.at(i, col) * a.at(rank, j);
                a.at(i, j) = t / prev;  // exact division (Bareiss invariant)
            }
            a.at(i, col) = 0;
        }
        prev = a.at(rank, col);
        ++rank;
    }
    if (det) {
        if (r != c) throw Error("determinant of non-square matrix");
        *det = (rank == r) ? Int(sign) * prev : Int(0);
    }
    return rank;
}

}  // namespace

std::size_t rank(const QMat& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    return bareiss(clear_denominators(m), nullptr);
}

std::size_t rank(const ZMat& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    return bareiss(m, nullptr);
}

Rat determinant(const QMat& m) {
    if (m.rows() != m.cols()) throw Error("determinant of non-square matrix");
    if (m.rows() == 0) return 1;
    // Track the row scalings introduced by denominator clearing.
    Rat scale = 1;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Int lcm = 1;
        for (std::size_t j = 0; j < m.cols(); ++j)
            lcm = boost::multiprecision::lcm(lcm, denominator(m.at(i, j)));
        scale *= Rat(lcm);
    }
    Int d;
    bareiss(clear_denominators(m), &d);
    return Rat(d) / scale;
}

Int determinant(const ZMat& m) {
    if (m.rows() != m.cols()) throw Error("determinant of non-square matrix");
    if (m.rows() == 0) return 1;
    Int d;
    bareiss(m, &d);
    return d;
}

QMat rref(const QMat& m, std::vector<std::size_t>* pivot_cols) {
    QMat a = m;
    const std::size_t r = a.rows(), c = a.cols();
    std::size_t lead = 0;
    if (pivot_cols) pivot_cols->clear();
    for (std::size_t col = 0; col < c && lead < r; ++col) {
        std::size_t piv = lead;
        while (piv < r && a.at(piv, col) == 0) ++piv;
        if (piv == r) continue;
        if (piv != lead)
            for (std::size_t j = 0; j < c; ++j) std::swap(a.at(piv, j), a.at(lead, j));
        Rat inv = Rat(1) / a.at(lead, col);
        for (std::size_t j = col; j < c; ++j) a.at(lead, j) *= inv;
        for (std::size_t i = 0; i < r; ++i) {
            if (i == lead || a.at(i, col) == 0) continue;
            Rat f = a.at(i, col);
            for (std::size_t j = col; j < c; ++j) a.at(i, j) -= f * a.at(lead, j);
        }
        if (pivot_cols) pivot_cols->push_back(col);
        ++lead;
    }
    return a;
}

QMat reduced_column_echelon(const QMat& m) {
    std::vector<std::size_t> pivots;
    QMat r = rref(m.transpose(), &pivots).transpose();
    // Drop zero columns (rows of the RREF beyond its rank).
    QMat out(m.rows(), pivots.size());
    for (std::size_t j = 0; j < pivots.size(); ++j)
        for (std::size_t i = 0; i < m.rows(); ++i) out.at(i, j) = r.at(i, j);
    return out;
}

QMat kernel_basis(const QMat& m) {
    const std::size_t c = m.cols();
    std::vector<std::size_t> pivots;
    QMat r = rref(m, &pivots);
    std::vector<bool> is_pivot(c, false);
    for (std::size_t p : pivots) is_pivot[p] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0; j < c; ++j)
        if (!is_pivot[j]) free_cols.push_back(j);
    QMat k(c, free_cols.size());
    for (std::size_t fj = 0; fj < free_cols.size(); ++fj) {
        std::size_t f = free_cols[fj];
        k.at(f, fj) = 1;
        for (std::size_t pi = 0; pi < pivots.size(); ++pi) k.at(pivots[pi], fj) = -r.at(pi, f);
    }
    return reduced_column_echelon(k);
}

bool solve(const QMat& m, const std::vector<Rat>& rhs, std::vector<Rat>& x) {
    if (m.rows() != rhs.size()) throw Error("solve shape mismatch");
    QMat aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = rhs[i];
    }
    std::vector<std::size_t> pivots;
    QMat r = rref(aug, &pivots);
    x.assign(m.cols(), Rat(0));
    for (std::size_t pi = 0; pi < pivots.size(); ++pi) {
        if (pivots[pi] == m.cols()) return false;  // pivot in RHS column
        x[pivots[pi]] = r.at(pi, m.cols());
    }
    return true;
}

LoopError::LoopError(std::vector<int> which)
    : Error([&] {
          std::string msg = "loops (zero columns) at indices:";
          for (int i : which) msg += " " + std::to_string(i);
          return msg;
      }()),
      loops(std::move(which)) {}

}  // namespace mdet
