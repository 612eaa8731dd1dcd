#ifndef MDET_SIMPLEX_LP_HPP
#define MDET_SIMPLEX_LP_HPP

#include "mdet/matrix.hpp"

namespace mdet {

/// Decides, exactly, whether g * x = w has a solution with x >= 0
/// (phase-one simplex over Q with Bland's rule, so it terminates).
bool nonneg_solve_exists(const QMat& g, const std::vector<Rat>& w);

}  // namespace mdet

#endif
