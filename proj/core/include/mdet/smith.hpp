#ifndef MDET_SMITH_HPP
#define MDET_SMITH_HPP

#include "mdet/matrix.hpp"

namespace mdet {

struct SmithForm {
    ZMat u;  // unimodular, rows x rows
    ZMat d;  // diagonal, same shape as input, d[i][i] | d[i+1][i+1]
    ZMat v;  // unimodular, cols x cols
};

/// Smith normal form: u * m * v = d with nonnegative diagonal entries in a
/// divisibility chain.
SmithForm smith_normal_form(const ZMat& m);

/// Exact inverse of a unimodular integer matrix.
ZMat unimodular_inverse(const ZMat& u);

/// A lattice basis (as columns) for the subgroup of Z^N generated by the
/// columns of `gens`.
ZMat lattice_basis(const ZMat& gens);

/// Basis of the saturation span_Q(gens) ∩ Z^N, as columns. This is the
/// lattice generated by all lattice points of the rational span, hence of
/// any rational cone spanning the same subspace.
ZMat saturate_lattice(const ZMat& gens);

/// Index of the lattice generated by the columns of `sub` inside the
/// lattice generated by the columns of `ambient`. Errors if the rational
/// column spans differ (index undefined or infinite) or if sub is not
/// contained in ambient.
Int lattice_index(const ZMat& sub, const ZMat& ambient);

}  // namespace mdet

#endif
