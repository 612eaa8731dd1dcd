#ifndef MDET_SUBSET_HPP
#define MDET_SUBSET_HPP

#include <bit>
#include <cstdint>
#include <vector>

namespace mdet {

// Subsets of a ground set {0..n} with n+1 <= 32 are bitmasks.
using Subset = std::uint32_t;

inline int popcount(Subset s) { return std::popcount(s); }
inline bool contains(Subset s, int e) { return (s >> e) & 1u; }
inline Subset with(Subset s, int e) { return s | (Subset(1) << e); }
inline Subset without(Subset s, int e) { return s & ~(Subset(1) << e); }
inline Subset full_set(int n_elems) {
    return n_elems >= 32 ? ~Subset(0) : (Subset(1) << n_elems) - 1;
}

std::vector<int> subset_to_list(Subset s);
Subset subset_from_list(const std::vector<int>& elems);

/// All k-element subsets of {0..n_elems-1} in increasing bitmask order.
std::vector<Subset> k_subsets(int n_elems, int k);

}  // namespace mdet

#endif
