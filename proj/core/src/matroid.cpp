#include "mdet/matroid.hpp"

#include "mdet/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>

namespace mdet {

namespace {
constexpr int kMaxGroundSet = 24;  // subset enumeration bound
}

Matroid::Matroid(QMat realization)
    : a_(std::move(realization)), cache_(std::make_shared<RankCache>()) {
    if (a_.rows() == 0 || a_.cols() == 0) throw Error("matroid needs a nonzero matrix");
    if (a_.cols() > kMaxGroundSet)
        throw GroundSetTooLarge("ground set larger than " + std::to_string(kMaxGroundSet));
    std::vector<int> loops;
    for (std::size_t j = 0; j < a_.cols(); ++j) {
        bool zero = true;
        for (std::size_t i = 0; i < a_.rows() && zero; ++i)
            if (a_.at(i, j) != 0) zero = false;
        if (zero) loops.push_back(static_cast<int>(j));
    }
    if (!loops.empty()) throw LoopError(loops);
}

int Matroid::rank_of(Subset s) const {
    {
        std::lock_guard<std::mutex> lock(cache_->mutex);
        auto it = cache_->map.find(s);
        if (it != cache_->map.end()) return it->second;
    }
    int r = static_cast<int>(rank(a_.select_cols(subset_to_list(s))));
    std::lock_guard<std::mutex> lock(cache_->mutex);
    cache_->map.emplace(s, r);
    return r;
}

Subset Matroid::closure(Subset s) const {
    int r = rank_of(s);
    Subset cl = s;
    for (int e = 0; e < n_elements(); ++e) {
        if (contains(s, e)) continue;
        if (rank_of(with(s, e)) == r) cl = with(cl, e);
    }
    return cl;
}

int FlatLattice::index_of(Subset f) const {
    auto it = std::find(flats.begin(), flats.end(), f);
    return it == flats.end() ? -1 : static_cast<int>(it - flats.begin());
}

FlatLattice Matroid::flats() const {
    // Breadth-first closure generation: covers of F are closure(F + e).
    std::map<Subset, int> rank_by_flat;
    std::set<std::pair<Subset, Subset>> cover_pairs;
    Subset bottom = closure(0);  // empty with no loops
    rank_by_flat[bottom] = rank_of(bottom);
    std::queue<Subset> todo;
    todo.push(bottom);
    while (!todo.empty()) {
        Subset f = todo.front();
        todo.pop();
        for (int e = 0; e < n_elements(); ++e) {
            if (contains(f, e)) continue;
            Subset g = closure(with(f, e));
            cover_pairs.emplace(f, g);
            if (rank_by_flat.emplace(g, rank_of(g)).second) todo.push(g);
        }
    }
    FlatLattice lat;
    for (const auto& [f, r] : rank_by_flat) lat.flats.push_back(f);
    std::sort(lat.flats.begin(), lat.flats.end(), [&](Subset a, Subset b) {
        int ra = rank_by_flat.at(a), rb = rank_by_flat.at(b);
        if (ra != rb) return ra < rb;
        return a < b;
    });
    lat.ranks.reserve(lat.flats.size());
    for (Subset f : lat.flats) lat.ranks.push_back(rank_by_flat.at(f));
    for (const auto& [lo, hi] : cover_pairs)
        lat.covers.emplace_back(lat.index_of(lo), lat.index_of(hi));
    std::sort(lat.covers.begin(), lat.covers.end());
    return lat;
}

std::vector<Circuit> Matroid::circuits() const {
    std::vector<Circuit> out;
    const int n1 = n_elements();
    const int max_size = std::min(d() + 2, n1);
    for (int k = 2; k <= max_size; ++k) {
        for (Subset s : k_subsets(n1, k)) {
            if (rank_of(s) == k) continue;  // independent
            bool minimal = true;
            for (int e = 0; e < n1 && minimal; ++e)
                if (contains(s, e) && rank_of(without(s, e)) != k - 1) minimal = false;
            if (!minimal) continue;
            Circuit c;
            c.support = s;
            auto cols = subset_to_list(s);
            QMat kb = kernel_basis(a_.select_cols(cols));
            if (kb.cols() != 1) throw Error("circuit with nullity != 1");
            c.dependency.assign(n1, Rat(0));
            for (std::size_t i = 0; i < cols.size(); ++i) c.dependency[cols[i]] = kb.at(i, 0);
            out.push_back(std::move(c));
        }
    }
    return out;
}

std::vector<Subset> Matroid::components() const {
    const int n1 = n_elements();
    std::vector<int> parent(n1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const Circuit& c : circuits()) {
        auto elems = subset_to_list(c.support);
        for (std::size_t i = 1; i < elems.size(); ++i) {
            int a = find(elems[0]), b = find(elems[i]);
            if (a != b) parent[b] = a;
        }
    }
    std::map<int, Subset> classes;
    for (int e = 0; e < n1; ++e) classes[find(e)] = with(classes[find(e)], e);
    std::vector<Subset> out;
    for (const auto& [rep, s] : classes) out.push_back(s);
    return out;
}

Subset Matroid::coloops() const {
    QMat kb = kernel_basis(a_);
    Subset out = 0;
    for (std::size_t i = 0; i < kb.rows(); ++i) {
        bool zero = true;
        for (std::size_t j = 0; j < kb.cols() && zero; ++j)
            if (kb.at(i, j) != 0) zero = false;
        if (zero) out = with(out, static_cast<int>(i));
    }
    return out;
}

template <typename Fn>
void Matroid::for_each_subset_rank(Fn&& fn) const {
    const int n1 = n_elements();
    const std::size_t m = a_.rows();
    // Echelon basis of the columns chosen so far (forward-reduced rows of
    // column vectors, each with a recorded pivot position).
    std::vector<std::pair<std::size_t, std::vector<Rat>>> basis;

    auto reduce = [&](std::vector<Rat> v) {
        for (const auto& [p, row] : basis) {
            if (v[p] == 0) continue;
            Rat f = v[p] / row[p];
            for (std::size_t i = 0; i < m; ++i) v[i] -= f * row[i];
        }
        return v;
    };

    auto rec = [&](auto&& self, int e, Subset s) -> void {
        if (e == n1) {
            fn(s, static_cast<int>(basis.size()));
            return;
        }
        self(self, e + 1, s);
        std::vector<Rat> v = reduce(a_.col(e));
        std::size_t pivot = 0;
        while (pivot < m && v[pivot] == 0) ++pivot;
        if (pivot == m) {
            self(self, e + 1, with(s, e));
        } else {
            basis.emplace_back(pivot, std::move(v));
            self(self, e + 1, with(s, e));
            basis.pop_back();
        }
    };
    rec(rec, 0, 0);
}

SparsePoly Matroid::characteristic_polynomial() const {
    const int re = full_rank();
    std::vector<Int> acc(re + 1, Int(0));
    for_each_subset_rank([&](Subset s, int r) {
        if (popcount(s) % 2 == 0)
            acc[re - r] += 1;
        else
            acc[re - r] -= 1;
    });
    SparsePoly chi(1);
    for (int e = 0; e <= re; ++e)
        if (acc[e] != 0) chi.add_term({static_cast<unsigned>(e)}, Rat(acc[e]));
    return chi;
}

Int Matroid::mobius_invariant() const {
    Rat c0 = characteristic_polynomial().coeff({0});
    Int v = numerator(c0);
    return v < 0 ? Int(-v) : v;
}

Int Matroid::beta_invariant() const {
    Int sum = 0;
    for_each_subset_rank([&](Subset s, int r) {
        if (popcount(s) % 2 == 0)
            sum += r;
        else
            sum -= r;
    });
    if (full_rank() % 2 != 0) sum = -sum;
    return sum;
}

Matroid Matroid::restriction(Subset f) const {
    if (f == 0) throw Error("restriction to the empty set");
    return Matroid(a_.select_cols(subset_to_list(f)));
}

std::vector<Subset> Matroid::connected_flats() const {
    std::vector<Subset> out;
    for (Subset f : flats().flats) {
        if (f == 0) continue;
        if (restriction(f).is_connected()) out.push_back(f);
    }
    return out;
}

bool Matroid::is_uniform() const {
    const int r = full_rank();
    for (Subset s : k_subsets(n_elements(), r))
        if (rank_of(s) != r) return false;
    return true;
}

QMat uniform_realization(int n, int d) {
    if (d < 0 || d >= n) throw Error("uniform_realization needs 0 <= d < n");
    QMat a(d + 1, n + 1);
    for (int j = 0; j <= n; ++j) {
        Rat x(j + 1), p(1);
        for (int i = 0; i <= d; ++i) {
            a.at(i, j) = p;
            p *= x;
        }
    }
    return a;
}

QMat direct_sum(const QMat& a, const QMat& b) {
    QMat m(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) m.at(a.rows() + i, a.cols() + j) = b.at(i, j);
    return m;
}

}  // namespace mdet
