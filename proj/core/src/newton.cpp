#include "mdet/newton.hpp"

#include "mdet/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace mdet {

Int SimplexSum::total_degree() const {
    Int d = 0;
    for (const auto& [f, c] : summands) d += c;
    return d;
}

SimplexSum build_newton_el(const Matroid& m, const FactorizationDescriptor& descriptor) {
    SimplexSum s;
    s.n = m.n_elements() - 1;
    std::vector<Subset> missing;
    for (const FlatRow& row : descriptor.rows) {
        if (row.defective.has_value() && *row.defective) continue;  // Delta = 1
        if (!row.defective.has_value() || !row.degree.has_value() ||
            !row.multiplicity.has_value()) {
            missing.push_back(row.flat);
            continue;
        }
        Int c = *row.degree * *row.multiplicity;
        if (c == 0) continue;
        if (c < 0) throw Error("negative simplex coefficient");
        s.summands.emplace_back(row.flat, c);
    }
    if (!missing.empty()) {
        std::string msg = "flats with unknown factorization data:";
        for (Subset f : missing) {
            msg += " {";
            auto e = subset_to_list(f);
            for (std::size_t i = 0; i < e.size(); ++i)
                msg += (i ? "," : "") + std::to_string(e[i]);
            msg += "}";
        }
        throw MissingData(msg);
    }
    return s;
}

LatticePolytope vertices(const SimplexSum& s) {
    const int n1 = s.n + 1;
    if (n1 > 9) throw GroundSetTooLarge("vertex enumeration limited to 9 coordinates");
    std::vector<int> order(n1);
    std::iota(order.begin(), order.end(), 0);
    // position[e] = rank of e in the order; the argmax of a flat is its
    // element of largest position.
    std::set<std::vector<Int>> seen;
    do {
        std::vector<int> position(n1);
        for (int i = 0; i < n1; ++i) position[order[i]] = i;
        std::vector<Int> v(n1, Int(0));
        for (const auto& [f, c] : s.summands) {
            int best = -1;
            for (int e : subset_to_list(f))
                if (best == -1 || position[e] > position[best]) best = e;
            if (best < 0) throw Error("empty flat in simplex sum");
            v[best] += c;
        }
        seen.insert(std::move(v));
    } while (std::next_permutation(order.begin(), order.end()));
    LatticePolytope p;
    p.n = s.n;
    p.vertices.assign(seen.begin(), seen.end());
    return p;
}

Rat support_function(const SimplexSum& s, const std::vector<Rat>& w) {
    if (w.size() != static_cast<std::size_t>(s.n + 1)) throw Error("support_function arity");
    Rat total = 0;
    for (const auto& [f, c] : s.summands) {
        bool first = true;
        Rat best;
        for (int e : subset_to_list(f)) {
            if (first || w[e] > best) best = w[e];
            first = false;
        }
        total += Rat(c) * best;
    }
    return total;
}

bool is_generalized_permutohedron(const LatticePolytope& p) {
    const int n1 = p.n + 1;
    if (n1 > 9) throw GroundSetTooLarge("submodularity check limited to 9 coordinates");
    if (p.vertices.empty()) return true;
    const Subset all = full_set(n1);
    std::vector<Int> z(all + 1);
    for (Subset s = 0; s <= all; ++s) {
        bool first = true;
        Int best = 0;
        for (const auto& v : p.vertices) {
            Int sum = 0;
            for (int e : subset_to_list(s)) sum += v[e];
            if (first || sum > best) best = sum;
            first = false;
        }
        z[s] = best;
    }
    for (Subset s = 0; s <= all; ++s)
        for (Subset t = s; t <= all; ++t)
            if (z[s] + z[t] < z[s | t] + z[s & t]) return false;
    return true;
}

bool is_dilated_simplex(const LatticePolytope& p) {
    if (p.vertices.empty()) return false;
    const int n1 = p.n + 1;
    std::vector<Int> tau(n1);
    for (int j = 0; j < n1; ++j) {
        tau[j] = p.vertices[0][j];
        for (const auto& v : p.vertices) tau[j] = std::min(tau[j], v[j]);
    }
    Int c = 0;
    std::set<int> support;
    for (const auto& v : p.vertices) {
        int nonzero = -1;
        for (int j = 0; j < n1; ++j) {
            Int r = v[j] - tau[j];
            if (r == 0) continue;
            if (nonzero != -1) return false;  // more than one raised coordinate
            nonzero = j;
            if (c == 0)
                c = r;
            else if (c != r)
                return false;
        }
        if (nonzero == -1) return false;  // a vertex equal to tau
        if (!support.insert(nonzero).second) return false;
    }
    return support.size() == p.vertices.size();
}

}  // namespace mdet
