#include "mdet/discriminant.hpp"

#include "mdet/errors.hpp"

#include <algorithm>

namespace mdet {

HKSample horn_kapranov(const QMat& a, const QMat& b, const std::vector<Rat>& t,
                       const std::vector<Rat>& u) {
    if (t.size() != a.rows() || u.size() != b.cols() || a.cols() != b.rows())
        throw Error("horn_kapranov: shape mismatch");
    if (!(a * b).is_zero()) throw GaleMismatch("A * B != 0");
    std::vector<Rat> ell = mat_vec(a.transpose(), t);
    for (std::size_t j = 0; j < ell.size(); ++j)
        if (ell[j] == 0) throw OnArrangement("l_" + std::to_string(j) + "(t) = 0");
    std::vector<Rat> bu = mat_vec(b, u);
    HKSample s{t, u, std::vector<Rat>(ell.size())};
    bool all_zero = true;
    for (std::size_t j = 0; j < ell.size(); ++j) {
        s.z[j] = ell[j] * ell[j] * bu[j];
        if (s.z[j] != 0) all_zero = false;
    }
    if (all_zero) throw Error("horn_kapranov: image point is identically zero");
    return s;
}

QMat jacobian_jl(const QMat& a, const QMat& b, const std::vector<Rat>& t,
                 const std::vector<Rat>& u) {
    if (t.size() != a.rows() || u.size() != b.cols() || a.cols() != b.rows())
        throw Error("jacobian_jl: shape mismatch");
    std::vector<Rat> bu = mat_vec(b, u);
    std::vector<Rat> att = mat_vec(a.transpose(), t);
    const std::size_t n1 = a.cols();
    QMat left(n1, a.rows());
    for (std::size_t i = 0; i < n1; ++i)
        for (std::size_t j = 0; j < a.rows(); ++j) left.at(i, j) = bu[i] * a.at(j, i);
    QMat right(n1, b.cols());
    for (std::size_t i = 0; i < n1; ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) right.at(i, j) = att[i] * b.at(i, j);
    return left.hstack(right);
}

ColoopReduction reduce_coloops(const QMat& a) {
    QMat kb = kernel_basis(a);
    Subset removed = 0;
    std::vector<int> keep;
    for (std::size_t i = 0; i < a.cols(); ++i) {
        bool zero_row = true;
        for (std::size_t j = 0; j < kb.cols() && zero_row; ++j)
            if (kb.at(i, j) != 0) zero_row = false;
        if (zero_row)
            removed = with(removed, static_cast<int>(i));
        else
            keep.push_back(static_cast<int>(i));
    }
    return {a.select_cols(keep), removed};
}

DefectivityResult is_dual_defective(const QMat& a, int samples, std::uint64_t seed) {
    const std::size_t n1 = a.cols();
    {
        std::vector<int> loops;
        for (std::size_t j = 0; j < n1; ++j) {
            bool zero = true;
            for (std::size_t i = 0; i < a.rows() && zero; ++i)
                if (a.at(i, j) != 0) zero = false;
            if (zero) loops.push_back(static_cast<int>(j));
        }
        if (!loops.empty()) throw LoopError(loops);
    }
    QMat b = kernel_basis(a);
    for (std::size_t i = 0; i < n1; ++i) {
        bool zero_row = true;
        for (std::size_t j = 0; j < b.cols() && zero_row; ++j)
            if (b.at(i, j) != 0) zero_row = false;
        if (zero_row) throw Error("is_dual_defective: coloops present, reduce first");
    }
    const std::size_t target = n1 - 1;  // rank n certifies a hypersurface
    Rng rng(seed);
    DefectivityResult res{Defectivity::ProbablyDefective, {}, {}, 0};
    int attempts_left = samples * 1000;  // guards against pathological redraw loops
    for (int s = 0; s < samples; ++s) {
        std::vector<Rat> t, u;
        // Redraw samples that land on the arrangement or give u = 0.
        while (true) {
            if (--attempts_left < 0) throw Error("is_dual_defective: too many degenerate draws");
            t = rng.next_vector(a.rows(), -100, 100);
            u = rng.next_vector(b.cols(), -100, 100);
            bool ok = std::any_of(u.begin(), u.end(), [](const Rat& x) { return x != 0; });
            if (ok) {
                std::vector<Rat> ell = mat_vec(a.transpose(), t);
                ok = std::all_of(ell.begin(), ell.end(), [](const Rat& x) { return x != 0; });
            }
            if (ok) break;
        }
        ++res.samples_used;
        if (rank(jacobian_jl(a, b, t, u)) == target) {
            res.verdict = Defectivity::Hypersurface;
            res.witness_t = std::move(t);
            res.witness_u = std::move(u);
            return res;
        }
    }
    return res;
}

Int degree_lk(const Matroid& m, int k) {
    if (k == 0) throw Error("degree_lk: k must be nonzero");
    const int e = m.d() - m.n_components() + 1;
    if (e < 0) throw Error("degree_lk: negative exponent d - c + 1");
    if (k > 0) return int_pow(Int(k), static_cast<unsigned>(e));
    return int_pow(Int(-k), static_cast<unsigned>(e)) * m.mobius_invariant();
}

Int degree_el(const Matroid& m) {
    const int e = m.d() - m.n_components() + 1;
    if (e < 0) throw Error("degree_el: negative exponent d - c + 1");
    return Int(m.d() + 1) * int_pow(Int(2), static_cast<unsigned>(e)) * m.mobius_invariant();
}

PredictedDegree predicted_discriminant_degree(const Matroid& m) {
    if (!m.is_connected()) throw DisconnectedError("predicted degree needs a connected matroid");
    Int deg = int_pow(Int(2), static_cast<unsigned>(m.d())) * m.beta_invariant();
    return {deg, !m.is_uniform()};
}

FactorizationDescriptor factorization_descriptor(
    const Matroid& m, const std::optional<MultiplicityMap>& multiplicities, int samples,
    std::uint64_t seed) {
    FactorizationDescriptor out;
    out.expected_degree = degree_el(m);
    auto lookup_mult = [&](Subset f) -> std::optional<Int> {
        if (!multiplicities) return std::nullopt;
        for (const auto& [flat, mult] : *multiplicities)
            if (flat == f) return mult;
        return std::nullopt;
    };
    FlatLattice lat = m.flats();
    std::uint64_t flat_index = 0;
    for (std::size_t i = 0; i < lat.flats.size(); ++i) {
        Subset f = lat.flats[i];
        if (f == 0) continue;
        FlatRow row;
        row.flat = f;
        row.rank = lat.ranks[i];
        row.multiplicity = lookup_mult(f);
        if (popcount(f) == 1) {
            // Singleton flats contribute the coordinate z_i itself.
            row.connected = true;
            row.defective = false;
            row.defective_certain = true;
            row.degree = Int(1);
        } else {
            Matroid mf = m.restriction(f);
            row.connected = mf.is_connected();
            ColoopReduction red = reduce_coloops(mf.realization());
            if (red.removed != 0) {
                row.defective = true;
                row.defective_certain = true;  // dual lives in a coordinate subspace
            } else {
                DefectivityResult dr =
                    is_dual_defective(mf.realization(), samples,
                                      Rng::substream(seed, flat_index).next());
                row.defective = (dr.verdict == Defectivity::ProbablyDefective);
                row.defective_certain = (dr.verdict == Defectivity::Hypersurface);
            }
            if (*row.defective) {
                row.degree = Int(0);  // the discriminant is the constant 1
            } else if (row.connected) {
                PredictedDegree pd = predicted_discriminant_degree(mf);
                row.degree = pd.degree;
                row.conjectural = pd.conjectural;
            }
        }
        out.rows.push_back(std::move(row));
        ++flat_index;
    }
    bool all_known = true;
    Int sum = 0;
    for (const FlatRow& row : out.rows) {
        if (row.defective.has_value() && *row.defective) continue;  // contributes 0
        if (!row.degree.has_value() || !row.multiplicity.has_value()) {
            all_known = false;
            break;
        }
        sum += *row.degree * *row.multiplicity;
    }
    if (all_known) {
        out.degree_sum = sum;
        out.sum_matches = (sum == out.expected_degree);
    }
    return out;
}

std::vector<Int> banana_multiplicities(int n) {
    if (n < 2) throw Error("banana_multiplicities needs n >= 2");
    std::vector<Int> m(n);
    m[0] = int_pow(Int(2), static_cast<unsigned>(n)) - 1;
    for (int p = 1; p < n; ++p) {
        // 2^(n-p) = m_0 + sum_{q=1..p} C(p,q) (-1)^q m_q, solved for m_p.
        Int rhs = int_pow(Int(2), static_cast<unsigned>(n - p)) - m[0];
        for (int q = 1; q < p; ++q) {
            Int term = binomial(p, q) * m[q];
            rhs -= (q % 2 == 0) ? term : -term;
        }
        // Coefficient of m_p is (-1)^p * C(p,p) = (-1)^p.
        m[p] = (p % 2 == 0) ? rhs : -rhs;
    }
    for (int p = 0; p < n; ++p) {
        Int closed = int_pow(Int(2), static_cast<unsigned>(n - p)) - 1;
        if (m[p] != closed) throw Error("banana multiplicity recursion mismatch at p=" +
                                        std::to_string(p));
    }
    return m;
}

Int chi_from_chi_tilde(const Int& chi_tilde, const Matroid& m) {
    return chi_tilde - m.beta_invariant();
}

QMat banana_matrix(int n) {
    if (n < 1) throw Error("banana_matrix needs n >= 1");
    QMat a(n, n + 1);
    for (int i = 0; i < n; ++i) {
        a.at(i, 0) = -1;
        a.at(i, i + 1) = 1;
    }
    return a;
}

namespace {

// The known dual-defective instance with a connected-looking 3x6 shape:
// A = (I | M) with M = ((1,3,0),(2,1,0),(0,0,1)). Its matroid has no
// coloops; connectivity is computed, never assumed.
QMat defective_probe() {
    return QMat{{1, 0, 0, 1, 3, 0}, {0, 1, 0, 2, 1, 0}, {0, 0, 1, 0, 0, 1}};
}

QMat random_matrix_no_zero_column(Rng& rng, int rows, int cols, int span) {
    while (true) {
        QMat a(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) a.at(i, j) = rng.next_rational(-span, span);
        bool ok = true;
        for (int j = 0; j < cols && ok; ++j) {
            bool zero = true;
            for (int i = 0; i < rows && zero; ++i)
                if (a.at(i, j) != 0) zero = false;
            if (zero) ok = false;
        }
        if (ok) return a;
    }
}

HarnessRow evaluate_instance(const QMat& a, const std::string& kind, std::uint64_t seed,
                             int samples) {
    HarnessRow row;
    row.kind = kind;
    Matroid m(a);
    row.components = m.n_components();
    row.connected = (row.components == 1);
    ColoopReduction red = reduce_coloops(a);
    row.has_coloops = (red.removed != 0);
    if (row.has_coloops) {
        row.verdict = "defective-coloops";
        row.agrees = !row.connected;  // coloops force both disconnection and defectivity
        return row;
    }
    DefectivityResult dr = is_dual_defective(a, samples, seed);
    if (dr.verdict == Defectivity::Hypersurface) {
        row.verdict = "hypersurface";
        row.agrees = row.connected;
        return row;
    }
    // No witness. If the matroid is connected this is a counterexample
    // candidate: re-check with four times the samples before reporting.
    if (row.connected) {
        DefectivityResult recheck = is_dual_defective(a, samples * 4, seed + 1);
        if (recheck.verdict == Defectivity::Hypersurface) {
            row.verdict = "hypersurface";
            row.agrees = true;
            return row;
        }
        row.verdict = "probably-defective";
        row.agrees = false;
        row.candidate = true;
        return row;
    }
    row.verdict = "probably-defective";
    row.agrees = true;
    return row;
}

}  // namespace

HarnessReport conjecture_harness(int n, int d, int trials, std::uint64_t seed, int samples) {
    if (d < 1 || d >= n) throw Error("conjecture_harness needs 1 <= d < n");
    HarnessReport rep;
    rep.n = n;
    rep.d = d;
    rep.trials = trials;
    rep.seed = seed;
    std::uint64_t stream = 0;
    for (int trial = 0; trial < trials; ++trial) {
        Rng rng = Rng::substream(seed, stream++);
        QMat a = random_matrix_no_zero_column(rng, d + 1, n + 1, 20);
        rep.rows.push_back(evaluate_instance(a, "generic", rng.next(), samples));
    }
    // Deliberately disconnected direct sums (when a feasible split exists).
    int blocks = trials == 0 ? 0 : std::max(1, trials / 10);
    for (int trial = 0; trial < blocks; ++trial) {
        Rng rng = Rng::substream(seed, stream++);
        int c1 = 2 + static_cast<int>(rng.next_in(0, std::max(0LL, (long long)n - 3)));
        int c2 = (n + 1) - c1;
        int r1 = std::min(c1 - 1, std::max(1, (d + 1) / 2));
        int r2 = (d + 1) - r1;
        if (c2 < 2 || r2 < 1 || r2 >= c2 || r1 >= c1) continue;
        QMat a = direct_sum(random_matrix_no_zero_column(rng, r1, c1, 20),
                            random_matrix_no_zero_column(rng, r2, c2, 20));
        rep.rows.push_back(evaluate_instance(a, "block-diagonal", rng.next(), samples));
    }
    rep.rows.push_back(
        evaluate_instance(defective_probe(), "probe", Rng::substream(seed, stream++).next(),
                          samples));
    for (const HarnessRow& row : rep.rows) {
        if (row.agrees) ++rep.agreements;
        if (row.candidate) ++rep.candidates;
    }
    return rep;
}

}  // namespace mdet
