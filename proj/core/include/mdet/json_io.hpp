#ifndef MDET_JSON_IO_HPP
#define MDET_JSON_IO_HPP

#include "mdet/discriminant.hpp"
#include "mdet/matrix.hpp"
#include "mdet/newton.hpp"
#include "mdet/poly.hpp"
#include "mdet/tropical.hpp"
#include "mdet/weyl.hpp"

#include <optional>
#include <string>

namespace mdet {

// Rationals are serialized as strings everywhere to keep exactness.

/// {"rows": r, "cols": c, "entries": [["p/q", ...], ...]}
std::string matrix_to_json(const QMat& m);
QMat matrix_from_json(const std::string& text);
/// Lines of comma-separated rational strings.
QMat matrix_from_csv(const std::string& text);
/// Sniffs JSON ('{' first) vs CSV.
QMat matrix_from_text(const std::string& text);
QMat matrix_from_file(const std::string& path);

/// {"nvars": n, "terms": [{"exp": [..], "coef": "p/q"}, ...]} in graded
/// lexicographic order.
std::string poly_to_json(const SparsePoly& p);
SparsePoly poly_from_json(const std::string& text);
SparsePoly poly_from_file(const std::string& path);

/// {"dimension": d, "cones": [{"generators": [[..], ...], "weight": w}]}
std::string fan_to_json(const WeightedFan& fan);

/// {"n": n, "degree": D, "vertices": [[..], ...]} sorted lexicographically.
std::string polytope_to_json(const LatticePolytope& p, const Int& degree);

/// {"n": n+1, "terms": [{"coef": "p/q", "zExp": [..], "dExp": [..]}]}
std::string weyl_op_to_json(const WeylOp& op);

/// {"base": ["..."], "distinguished": 0, "terms": [{"shift": [..], "coef": "p/q"}]}
std::string series_to_json(const GenSeries& g);

/// {"multiplicities": [{"flat": [0,1,3], "m": 2}, ...]}
MultiplicityMap multiplicities_from_json(const std::string& text);
MultiplicityMap multiplicities_from_file(const std::string& path);

/// Rows {flat, rank, connected, defective, degree, multiplicity,
/// conjectural} plus the degree-sum consistency check.
std::string descriptor_to_json(const FactorizationDescriptor& d);

std::string harness_report_to_json(const HarnessReport& rep);

/// The aggregated analysis report (matroid summary, degree table,
/// factorization descriptor).
std::string analysis_to_json(const Matroid& m, const FactorizationDescriptor& descriptor);

std::string read_file(const std::string& path);

}  // namespace mdet

#endif
