#include "mdet/smith.hpp"

#include "mdet/errors.hpp"

#include <algorithm>

namespace mdet {

namespace {

using boost::multiprecision::abs;

void swap_rows(ZMat& m, std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}
void swap_cols(ZMat& m, std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
}
// row a -= q * row b
void add_row(ZMat& m, std::size_t a, std::size_t b, const Int& q) {
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(a, j) -= q * m.at(b, j);
}
void add_col(ZMat& m, std::size_t a, std::size_t b, const Int& q) {
    for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, a) -= q * m.at(i, b);
}
void negate_row(ZMat& m, std::size_t a) {
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(a, j) = -m.at(a, j);
}

}  // namespace

SmithForm smith_normal_form(const ZMat& m) {
    SmithForm f{ZMat::identity(m.rows()), m, ZMat::identity(m.cols())};
    ZMat& d = f.d;
    const std::size_t r = d.rows(), c = d.cols();
    std::size_t t = 0;
    while (t < r && t < c) {
        // Find a nonzero pivot in the trailing block.
        std::size_t pi = r, pj = c;
        for (std::size_t i = t; i < r && pi == r; ++i)
            for (std::size_t j = t; j < c; ++j)
                if (d.at(i, j) != 0) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi == r) break;  // trailing block is zero
        if (pi != t) {
            swap_rows(d, pi, t);
            swap_rows(f.u, pi, t);
        }
        if (pj != t) {
            swap_cols(d, pj, t);
            swap_cols(f.v, pj, t);
        }
        bool again = true;
        while (again) {
            again = false;
            // Kill column t below the pivot.
            for (std::size_t i = t + 1; i < r; ++i) {
                if (d.at(i, t) == 0) continue;
                Int q = d.at(i, t) / d.at(t, t);
                add_row(d, i, t, q);
                add_row(f.u, i, t, q);
                if (d.at(i, t) != 0) {  // remainder smaller than pivot: swap up
                    swap_rows(d, i, t);
                    swap_rows(f.u, i, t);
                    again = true;
                }
            }
            // Kill row t to the right of the pivot.
            for (std::size_t j = t + 1; j < c; ++j) {
                if (d.at(t, j) == 0) continue;
                Int q = d.at(t, j) / d.at(t, t);
                add_col(d, j, t, q);
                add_col(f.v, j, t, q);
                if (d.at(t, j) != 0) {
                    swap_cols(d, j, t);
                    swap_cols(f.v, j, t);
                    again = true;
                }
            }
        }
        // Enforce divisibility: if pivot does not divide a trailing entry,
        // fold that entry into the pivot column and restart the block.
        bool restart = false;
        for (std::size_t i = t + 1; i < r && !restart; ++i)
            for (std::size_t j = t + 1; j < c; ++j)
                if (d.at(i, j) % d.at(t, t) != 0) {
                    add_col(d, t, j, Int(-1));  // col t += col j
                    add_col(f.v, t, j, Int(-1));
                    restart = true;
                    break;
                }
        if (restart) continue;
        if (d.at(t, t) < 0) {
            negate_row(d, t);
            negate_row(f.u, t);
        }
        ++t;
    }
    return f;
}

ZMat unimodular_inverse(const ZMat& u) {
    if (u.rows() != u.cols()) throw Error("unimodular_inverse: non-square");
    const std::size_t n = u.rows();
    QMat q = u.to_rational();
    QMat aug = q.hstack(QMat::identity(n));
    std::vector<std::size_t> pivots;
    QMat r = rref(aug, &pivots);
    if (pivots.size() != n) throw Error("unimodular_inverse: singular input");
    ZMat inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Rat& x = r.at(i, n + j);
            if (!is_integer(x)) throw Error("unimodular_inverse: input not unimodular");
            inv.at(i, j) = numerator(x);
        }
    return inv;
}

ZMat lattice_basis(const ZMat& gens) {
    SmithForm f = smith_normal_form(gens);
    ZMat uinv = unimodular_inverse(f.u);
    std::size_t k = 0;
    while (k < std::min(f.d.rows(), f.d.cols()) && f.d.at(k, k) != 0) ++k;
    // lattice(gens) = lattice(U^{-1} D): basis vectors d_i * (col i of U^{-1}).
    ZMat basis(gens.rows(), k);
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 0; i < gens.rows(); ++i)
            basis.at(i, j) = f.d.at(j, j) * uinv.at(i, j);
    return basis;
}

ZMat saturate_lattice(const ZMat& gens) {
    SmithForm f = smith_normal_form(gens);
    ZMat uinv = unimodular_inverse(f.u);
    std::size_t k = 0;
    while (k < std::min(f.d.rows(), f.d.cols()) && f.d.at(k, k) != 0) ++k;
    ZMat basis(gens.rows(), k);
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 0; i < gens.rows(); ++i) basis.at(i, j) = uinv.at(i, j);
    return basis;
}

Int lattice_index(const ZMat& sub, const ZMat& ambient) {
    ZMat bs = lattice_basis(sub);
    ZMat ba = lattice_basis(ambient);
    if (bs.cols() != ba.cols())
        throw Error("lattice_index: rational spans differ (rank mismatch)");
    const std::size_t k = ba.cols();
    if (k == 0) return 1;
    // Express each sub basis vector in the ambient basis; spans must agree.
    QMat amb = ba.to_rational();
    QMat x(k, k);
    for (std::size_t j = 0; j < k; ++j) {
        std::vector<Rat> coeff;
        std::vector<Rat> rhs(bs.rows());
        for (std::size_t i = 0; i < bs.rows(); ++i) rhs[i] = Rat(bs.at(i, j));
        if (!solve(amb, rhs, coeff))
            throw Error("lattice_index: rational spans differ");
        for (std::size_t i = 0; i < k; ++i) {
            if (!is_integer(coeff[i]))
                throw Error("lattice_index: sub is not a sublattice of ambient");
            x.at(i, j) = coeff[i];
        }
    }
    Rat det = determinant(x);
    if (det == 0) throw Error("lattice_index: degenerate coordinates");
    Int idx = numerator(det);
    return idx < 0 ? Int(-idx) : idx;
}

}  // namespace mdet
