#include "mdet/rng.hpp"

namespace mdet {

std::uint64_t Rng::next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

long long Rng::next_in(long long lo, long long hi) {
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long long>(next() % span);
}

Rat Rng::next_rational(long long lo, long long hi) { return Rat(next_in(lo, hi)); }

std::vector<Rat> Rng::next_vector(std::size_t len, long long lo, long long hi) {
    std::vector<Rat> v(len);
    for (auto& x : v) x = next_rational(lo, hi);
    return v;
}

Rng Rng::substream(std::uint64_t seed, std::uint64_t index) {
    Rng mix(seed);
    std::uint64_t a = mix.next();
    Rng mix2(index + 0x632be59bd9b4e019ULL);
    return Rng(a ^ mix2.next());
}

}  // namespace mdet
