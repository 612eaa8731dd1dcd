#ifndef MDET_RECIPROCAL_HPP
#define MDET_RECIPROCAL_HPP

#include "mdet/matroid.hpp"
#include "mdet/poly.hpp"

namespace mdet {

/// The circuit polynomial sum_{i in C} v_i prod_{j in C\{i}} x_j obtained
/// by clearing denominators in sum_{i in C} v_i / x_i = 0. Homogeneous of
/// degree |C|-1, multilinear, supported on the circuit's variables.
SparsePoly circuit_polynomial(const Circuit& c, unsigned nvars);

/// One circuit polynomial per circuit of M. Together these cut out the
/// reciprocal linear space on the torus; a superset of a minimal
/// generating set is fine for every use in this library.
std::vector<SparsePoly> reciprocal_ideal_generators(const Matroid& m);

/// The coordinatewise reciprocal (1/l_0(t), ..., 1/l_n(t)) of the point of
/// L with row-coordinates t. Errors if some l_i(t) = 0.
std::vector<Rat> reciprocal_point(const QMat& a, const std::vector<Rat>& t);

}  // namespace mdet

#endif
