#ifndef MDET_TROPICAL_HPP
#define MDET_TROPICAL_HPP

#include "mdet/matroid.hpp"
#include "mdet/smith.hpp"

#include <vector>

namespace mdet {

/// A rational polyhedral cone in Z^{n+1}/Z*1. Representatives are pinned
/// to last coordinate zero, which identifies the quotient lattice with
/// Z^n and keeps all lattice indices unambiguous.
struct Cone {
    ZMat generators;  // (n+1) x k, last row zero

    std::size_t ambient() const { return generators.rows(); }
    std::size_t dim() const;
};

struct WeightedFan {
    int ambient = 0;    // n+1
    int dimension = 0;  // dimension of the maximal cones
    std::vector<std::pair<Cone, Int>> cones;
};

/// Representative with last coordinate zero of a vector in Z^{n+1}/Z*1.
std::vector<Int> pin_vector(std::vector<Int> v);
/// Pinned 0/1 indicator vector of a subset of {0..n}.
std::vector<Int> indicator_pinned(Subset f, int n1);

Cone make_cone(int n1, const std::vector<std::vector<Int>>& gens);

/// Fine (flag) fan structure on the tropical linear space: one maximal
/// cone per complete flag of nonempty proper flats, generated by the
/// pinned flat indicators, every weight 1.
WeightedFan bergman_flag_fan(const Matroid& m);

/// Coarse structure for the uniform matroid: cones pos(e_j : j in J) over
/// all k-subsets J of {0..n}, weight 1.
WeightedFan uniform_bergman_cones(int n, int k);

/// Weight carried by every maximal cone of the tropicalized square:
/// 2^(d - c + 1).
Int weight_l2(const Matroid& m);

/// Is w in the cone spanned by the columns of gens? Exact feasibility.
bool cone_contains(const ZMat& gens, const std::vector<Int>& w);
bool cone_contains(const ZMat& gens, const std::vector<Rat>& w);

/// Stable-intersection weight of a cone sigma of dimension n-1 inside the
/// Minkowski sum of the two fans:
///   (1/delta) * sum over pairs with sigma inside coneL + conePerp of
///   weight_L * weight_Perp * [N_sigma : N_L + N_Perp].
/// Raises NonIntegralWeight if delta does not divide the sum.
Int minkowski_weight(const Cone& sigma, const WeightedFan& fan_l, const WeightedFan& fan_perp,
                     const Int& delta = Int(1));

struct UniformDegree {
    Int computed;     // explicit pair enumeration with lattice indices
    Int closed_form;  // 2^d * C(n-1, d)
};

/// Degree of the uniform matroid discriminant by enumerating, for a fixed
/// (n-1)-subset, all splittings into a d-set and an (n-d-1)-set and
/// summing weight * lattice index.
UniformDegree uniform_discriminant_degree(int n, int d);

/// Is w in Trop(L) + Trop(L-perp)? Decided by exhaustive pair enumeration
/// over the two flag fans with exact feasibility. Ground sets above 10
/// elements are rejected (pair count).
bool sum_membership(const std::vector<Int>& w, const Matroid& m);

}  // namespace mdet

#endif
