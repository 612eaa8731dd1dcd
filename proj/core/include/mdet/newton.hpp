#ifndef MDET_NEWTON_HPP
#define MDET_NEWTON_HPP

#include "mdet/discriminant.hpp"
#include "mdet/matroid.hpp"

#include <vector>

namespace mdet {

/// A Minkowski sum of dilated coordinate simplices: sum of c_F * Delta_F
/// over flats F, with Delta_F = Conv(e_i : i in F).
struct SimplexSum {
    int n = 0;  // coordinates are indexed 0..n
    std::vector<std::pair<Subset, Int>> summands;  // (flat, positive coefficient)

    Int total_degree() const;
};

struct LatticePolytope {
    int n = 0;
    std::vector<std::vector<Int>> vertices;  // pairwise distinct, lex-sorted
};

/// Builds the Newton polytope summand list from a factorization
/// descriptor: one summand (F, m_F * deg_F) per non-defective flat.
/// Defective flats contribute nothing; missing degrees or multiplicities
/// on contributing flats raise MissingData naming the flats.
SimplexSum build_newton_el(const Matroid& m, const FactorizationDescriptor& descriptor);

/// Vertex enumeration: one candidate per total coordinate order, taking
/// each summand at the order-largest element of its flat; deduplicated.
/// Ground sets above 9 elements are rejected ((n+1)! orders).
LatticePolytope vertices(const SimplexSum& s);

/// Support function: sum of c_F * max_{i in F} w_i.
Rat support_function(const SimplexSum& s, const std::vector<Rat>& w);

/// Submodularity of z(S) = max over vertices of the coordinate sum on S,
/// for all pairs of subsets. Ground sets above 9 elements are rejected.
bool is_generalized_permutohedron(const LatticePolytope& p);

/// True when the vertex set is tau + c*e_i over some support (a translated
/// dilated standard simplex).
bool is_dilated_simplex(const LatticePolytope& p);

}  // namespace mdet

#endif
