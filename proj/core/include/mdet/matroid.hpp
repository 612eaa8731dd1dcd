#ifndef MDET_MATROID_HPP
#define MDET_MATROID_HPP

#include "mdet/matrix.hpp"
#include "mdet/poly.hpp"
#include "mdet/subset.hpp"

#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

namespace mdet {

struct Circuit {
    Subset support = 0;
    /// Exact dependency: sum of dependency[i] * column_i over the support
    /// is zero. Normalized so the lowest-index entry equals 1.
    std::vector<Rat> dependency;
};

struct FlatLattice {
    std::vector<Subset> flats;  // includes the empty flat and the full set
    std::vector<int> ranks;     // parallel to flats
    /// Covering pairs (lower index, upper index) into `flats`.
    std::vector<std::pair<int, int>> covers;

    int index_of(Subset f) const;
};

/// Matroid of the columns of a rational matrix. The realization has no
/// loops: a zero column raises LoopError at construction. Immutable apart
/// from an internal rank memo, so values are safe to share across threads.
class Matroid {
  public:
    explicit Matroid(QMat realization);

    const QMat& realization() const { return a_; }
    int n_elements() const { return static_cast<int>(a_.cols()); }
    Subset ground_set() const { return full_set(n_elements()); }
    int full_rank() const { return rank_of(ground_set()); }
    int d() const { return full_rank() - 1; }

    int rank_of(Subset s) const;
    bool is_independent(Subset s) const { return rank_of(s) == popcount(s); }

    Subset closure(Subset s) const;
    FlatLattice flats() const;
    std::vector<Circuit> circuits() const;

    /// Connected components: classes of "lie in a common circuit".
    /// Elements in no circuit (coloops) are singleton components.
    std::vector<Subset> components() const;
    int n_components() const { return static_cast<int>(components().size()); }
    bool is_connected() const { return n_components() == 1; }

    Subset coloops() const;

    /// Whitney rank sum chi(q) = sum_S (-1)^|S| q^(r(E)-r(S)).
    SparsePoly characteristic_polynomial() const;
    /// mu = |chi(0)|.
    Int mobius_invariant() const;
    /// Crapo beta = (-1)^r(E) sum_S (-1)^|S| r(S).
    Int beta_invariant() const;

    Matroid restriction(Subset f) const;
    std::vector<Subset> connected_flats() const;

    bool is_uniform() const;

  private:
    // The memo is pure (idempotent writes), so copies of the same matroid
    // may share it; the mutex makes sharing across threads safe.
    struct RankCache {
        std::mutex mutex;
        std::unordered_map<Subset, int> map;
    };

    QMat a_;
    std::shared_ptr<RankCache> cache_;

    template <typename Fn>
    void for_each_subset_rank(Fn&& fn) const;  // exact DFS enumeration
};

/// Convenience: a matrix realizing the uniform matroid U_{d+1,n+1}
/// (Vandermonde columns at distinct nodes).
QMat uniform_realization(int n, int d);

/// Block-diagonal stack realizing the direct sum of two matroids.
QMat direct_sum(const QMat& a, const QMat& b);

}  // namespace mdet

#endif
