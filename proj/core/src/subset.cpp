#include "mdet/subset.hpp"

namespace mdet {

std::vector<int> subset_to_list(Subset s) {
    std::vector<int> out;
    for (int e = 0; s; ++e, s >>= 1)
        if (s & 1u) out.push_back(e);
    return out;
}

Subset subset_from_list(const std::vector<int>& elems) {
    Subset s = 0;
    for (int e : elems) s |= (Subset(1) << e);
    return s;
}

std::vector<Subset> k_subsets(int n_elems, int k) {
    std::vector<Subset> out;
    if (k < 0 || k > n_elems) return out;
    if (k == 0) {
        out.push_back(0);
        return out;
    }
    Subset s = (Subset(1) << k) - 1;
    Subset limit = Subset(1) << n_elems;
    while (s < limit) {
        out.push_back(s);
        // Gosper's hack: next k-subset in increasing order.
        Subset c = s & -s;
        Subset r = s + c;
        s = (((r ^ s) >> 2) / c) | r;
    }
    return out;
}

}  // namespace mdet
