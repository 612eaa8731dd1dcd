#ifndef MDET_DISCRIMINANT_HPP
#define MDET_DISCRIMINANT_HPP

#include "mdet/matroid.hpp"
#include "mdet/rng.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace mdet {

/// One point of the parametrization z_j = l_j(t)^2 (b_j . u) of the dual
/// of the reciprocal linear space.
struct HKSample {
    std::vector<Rat> t;
    std::vector<Rat> u;
    std::vector<Rat> z;
};

/// Requires A * B = 0 exactly (GaleMismatch otherwise) and l_i(t) != 0 for
/// all i (OnArrangement otherwise).
HKSample horn_kapranov(const QMat& a, const QMat& b, const std::vector<Rat>& t,
                       const std::vector<Rat>& u);

/// The block matrix ( diag(Bu) A^T | diag(A^T t) B ). Its kernel always
/// contains (t, -u); full rank n at one sample certifies that the dual is
/// a hypersurface.
QMat jacobian_jl(const QMat& a, const QMat& b, const std::vector<Rat>& t,
                 const std::vector<Rat>& u);

enum class Defectivity { Hypersurface, ProbablyDefective };

struct DefectivityResult {
    Defectivity verdict;
    std::vector<Rat> witness_t, witness_u;  // set when verdict == Hypersurface
    int samples_used = 0;
};

/// Seeded random search for a rank-n witness. A witness proves the dual is
/// a hypersurface; failure after `samples` generic draws is strong (but
/// probabilistic) evidence of defectivity. Requires a loopless, coloopless
/// realization: reduce coloops first.
DefectivityResult is_dual_defective(const QMat& a, int samples, std::uint64_t seed);

/// Drops coloop columns (zero rows of the Gale dual). The verdict for the
/// reduced matrix transfers: with coloops present the dual is never a
/// hypersurface in the original ambient space.
struct ColoopReduction {
    QMat reduced;
    Subset removed;
};
ColoopReduction reduce_coloops(const QMat& a);

/// deg L^k = k^(d-c+1) for k > 0 and (-k)^(d-c+1) mu for k < 0.
Int degree_lk(const Matroid& m, int k);

/// deg E_L = (d+1) 2^(d-c+1) mu.
Int degree_el(const Matroid& m);

struct PredictedDegree {
    Int degree;        // 2^d beta
    bool conjectural;  // proven for uniform matroids, conjectural otherwise
};
/// Requires a connected matroid (DisconnectedError otherwise).
PredictedDegree predicted_discriminant_degree(const Matroid& m);

struct FlatRow {
    Subset flat = 0;
    int rank = 0;
    bool connected = false;
    std::optional<bool> defective;     // unset = could not be decided
    bool defective_certain = false;    // witness or coloop argument
    std::optional<Int> degree;         // 1 for singletons, 0 when defective
    std::optional<Int> multiplicity;   // user data; never computed
    bool conjectural = false;          // predicted degree not proven
};

struct FactorizationDescriptor {
    std::vector<FlatRow> rows;  // one per nonempty flat
    std::optional<Int> degree_sum;      // sum m_F deg_F when all known
    std::optional<bool> sum_matches;    // compared against deg E_L
    Int expected_degree;                // deg E_L
};

using MultiplicityMap = std::vector<std::pair<Subset, Int>>;

/// Per-flat factorization data. Defectivity of each restriction is decided
/// by coloop reduction or seeded sampling; multiplicities are copied from
/// the optional input (the library never invents them).
FactorizationDescriptor factorization_descriptor(
    const Matroid& m, const std::optional<MultiplicityMap>& multiplicities = std::nullopt,
    int samples = 32, std::uint64_t seed = 0);

/// Characteristic-cycle multiplicities (m_0, ..., m_{n-1}) of the banana
/// family, solved exactly from the Euler-characteristic recursion
/// 2^(n-p) = m_0 + sum_{q=1..p} C(p,q) (-1)^q m_q with m_0 = 2^n - 1,
/// then checked against the closed form m_p = 2^(n-p) - 1.
std::vector<Int> banana_multiplicities(int n);

/// chi = chi~ - beta.
Int chi_from_chi_tilde(const Int& chi_tilde, const Matroid& m);

/// The banana realization (-e_1-...-e_n | e_1 | ... | e_n), an n x (n+1)
/// matrix.
QMat banana_matrix(int n);

struct HarnessRow {
    std::string kind;  // "generic", "block-diagonal", or "probe"
    int components = 0;
    bool connected = false;
    bool has_coloops = false;
    std::string verdict;  // "hypersurface", "probably-defective", "defective-coloops"
    bool agrees = false;  // with: defective iff disconnected
    bool candidate = false;  // connected yet no witness found after recheck
};

struct HarnessReport {
    int n = 0, d = 0, trials = 0;
    std::uint64_t seed = 0;
    std::vector<HarnessRow> rows;
    int agreements = 0;
    int candidates = 0;
    bool conjectural = true;  // the harness reports, it never asserts
};

/// Seeded experiment comparing matroid connectivity against dual
/// defectivity. Includes deliberately disconnected block-diagonal
/// instances and a fixed probe from a known dual-defective family.
/// Counterexample candidates are re-checked with four times the samples.
HarnessReport conjecture_harness(int n, int d, int trials, std::uint64_t seed,
                                 int samples = 32);

}  // namespace mdet

#endif
