#include "mdet/tropical.hpp"

#include "mdet/errors.hpp"
#include "mdet/simplex_lp.hpp"

#include <algorithm>

namespace mdet {

namespace {

// The pinned chart drops the last coordinate; classes of integer vectors
// correspond exactly to integer vectors of the chart.
ZMat chart(const ZMat& pinned) {
    ZMat c(pinned.rows() - 1, pinned.cols());
    for (std::size_t i = 0; i + 1 < pinned.rows(); ++i)
        for (std::size_t j = 0; j < pinned.cols(); ++j) c.at(i, j) = pinned.at(i, j);
    return c;
}

}  // namespace

std::size_t Cone::dim() const { return rank(generators); }

std::vector<Int> pin_vector(std::vector<Int> v) {
    if (v.empty()) return v;
    Int last = v.back();
    if (last != 0)
        for (auto& x : v) x -= last;
    return v;
}

std::vector<Int> indicator_pinned(Subset f, int n1) {
    std::vector<Int> v(n1, Int(0));
    for (int e = 0; e < n1; ++e)
        if (contains(f, e)) v[e] = 1;
    return pin_vector(std::move(v));
}

Cone make_cone(int n1, const std::vector<std::vector<Int>>& gens) {
    Cone c;
    c.generators = ZMat(n1, gens.size());
    for (std::size_t j = 0; j < gens.size(); ++j) {
        if (gens[j].size() != static_cast<std::size_t>(n1)) throw Error("cone generator arity");
        std::vector<Int> p = pin_vector(gens[j]);
        for (int i = 0; i < n1; ++i) c.generators.at(i, j) = p[i];
    }
    return c;
}

WeightedFan bergman_flag_fan(const Matroid& m) {
    const int n1 = m.n_elements();
    const int d = m.d();
    FlatLattice lat = m.flats();
    WeightedFan fan;
    fan.ambient = n1;
    fan.dimension = d;
    // Flags F_1 < F_2 < ... < F_d of nonempty proper flats with rank(F_r)=r.
    std::vector<int> chain;
    auto rec = [&](auto&& self, int below_rank, Subset below) -> void {
        if (below_rank == d) {
            std::vector<std::vector<Int>> gens;
            for (int idx : chain) gens.push_back(indicator_pinned(lat.flats[idx], n1));
            fan.cones.emplace_back(make_cone(n1, gens), Int(1));
            return;
        }
        for (std::size_t i = 0; i < lat.flats.size(); ++i) {
            if (lat.ranks[i] != below_rank + 1) continue;
            if ((below & lat.flats[i]) != below) continue;  // must contain the previous flat
            chain.push_back(static_cast<int>(i));
            self(self, below_rank + 1, lat.flats[i]);
            chain.pop_back();
        }
    };
    rec(rec, 0, 0);
    return fan;
}

WeightedFan uniform_bergman_cones(int n, int k) {
    if (k < 0 || k > n) throw Error("uniform_bergman_cones: need 0 <= k <= n");
    WeightedFan fan;
    fan.ambient = n + 1;
    fan.dimension = k;
    for (Subset j : k_subsets(n + 1, k)) {
        std::vector<std::vector<Int>> gens;
        for (int e : subset_to_list(j)) {
            std::vector<Int> v(n + 1, Int(0));
            v[e] = 1;
            gens.push_back(pin_vector(std::move(v)));
        }
        fan.cones.emplace_back(make_cone(n + 1, gens), Int(1));
    }
    return fan;
}

Int weight_l2(const Matroid& m) {
    const int e = m.d() - m.n_components() + 1;
    if (e < 0) throw Error("weight_l2: negative exponent");
    return int_pow(Int(2), static_cast<unsigned>(e));
}

bool cone_contains(const ZMat& gens, const std::vector<Int>& w) {
    std::vector<Rat> wq(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) wq[i] = Rat(w[i]);
    return cone_contains(gens, wq);
}

bool cone_contains(const ZMat& gens, const std::vector<Rat>& w) {
    if (gens.rows() != w.size()) throw Error("cone_contains: arity mismatch");
    return nonneg_solve_exists(gens.to_rational(), w);
}

namespace {

ZMat concat_cols(const ZMat& a, const ZMat& b) {
    ZMat m(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) m.at(i, a.cols() + j) = b.at(i, j);
    }
    return m;
}

bool pair_covers(const ZMat& pair_gens, const ZMat& sigma_gens) {
    for (std::size_t j = 0; j < sigma_gens.cols(); ++j) {
        std::vector<Rat> w(sigma_gens.rows());
        for (std::size_t i = 0; i < sigma_gens.rows(); ++i) w[i] = Rat(sigma_gens.at(i, j));
        if (!nonneg_solve_exists(pair_gens.to_rational(), w)) return false;
    }
    return true;
}

}  // namespace

Int minkowski_weight(const Cone& sigma, const WeightedFan& fan_l, const WeightedFan& fan_perp,
                     const Int& delta) {
    ZMat sigma_chart = chart(sigma.generators);
    ZMat n_sigma = saturate_lattice(sigma_chart);
    Int sum = 0;
    for (const auto& [cl, wl] : fan_l.cones) {
        for (const auto& [cp, wp] : fan_perp.cones) {
            ZMat pair_gens = concat_cols(cl.generators, cp.generators);
            if (!pair_covers(pair_gens, sigma.generators)) continue;
            // Lattice of the pair: sum of the two saturations (not
            // re-saturated), compared inside the saturation of sigma.
            ZMat nl = saturate_lattice(chart(cl.generators));
            ZMat np = saturate_lattice(chart(cp.generators));
            Int index = lattice_index(concat_cols(nl, np), n_sigma);
            sum += wl * wp * index;
        }
    }
    if (delta == 0) throw Error("minkowski_weight: delta = 0");
    if (sum % delta != 0)
        throw NonIntegralWeight("minkowski weight " + to_string(sum) + " not divisible by " +
                                to_string(delta));
    return sum / delta;
}

UniformDegree uniform_discriminant_degree(int n, int d) {
    if (d < 1 || d >= n) throw Error("uniform_discriminant_degree: need 1 <= d < n");
    UniformDegree out;
    out.closed_form = int_pow(Int(2), static_cast<unsigned>(d)) * binomial(n - 1, d);
    // Fix the (n-1)-subset {0..n-2}; its cone is a maximal cone of the
    // Minkowski sum. Enumerate the splittings J (size d) and K = rest.
    Subset lambda = full_set(n - 1);
    std::vector<std::vector<Int>> sigma_gens;
    for (int e : subset_to_list(lambda)) {
        std::vector<Int> v(n + 1, Int(0));
        v[e] = 1;
        sigma_gens.push_back(pin_vector(std::move(v)));
    }
    Cone sigma = make_cone(n + 1, sigma_gens);
    ZMat n_sigma = saturate_lattice(chart(sigma.generators));
    const Int wl = int_pow(Int(2), static_cast<unsigned>(d));  // connected: c = 1
    Int sum = 0;
    for (Subset j : k_subsets(n - 1, d)) {
        Subset jj = 0, kk = 0;
        {
            auto all = subset_to_list(lambda);
            for (std::size_t b = 0; b < all.size(); ++b) {
                if (contains(j, static_cast<int>(b)))
                    jj = with(jj, all[b]);
                else
                    kk = with(kk, all[b]);
            }
        }
        auto basis_of = [&](Subset s) {
            std::vector<std::vector<Int>> gens;
            for (int e : subset_to_list(s)) {
                std::vector<Int> v(n + 1, Int(0));
                v[e] = 1;
                gens.push_back(pin_vector(std::move(v)));
            }
            return make_cone(n + 1, gens);
        };
        Cone cj = basis_of(jj), ck = basis_of(kk);
        ZMat nj = saturate_lattice(chart(cj.generators));
        ZMat nk = saturate_lattice(chart(ck.generators));
        Int index = lattice_index(concat_cols(nj, nk), n_sigma);
        sum += wl * Int(1) * index;
    }
    out.computed = sum;
    return out;
}

bool sum_membership(const std::vector<Int>& w, const Matroid& m) {
    const int n1 = m.n_elements();
    if (n1 > 10) throw GroundSetTooLarge("sum_membership limited to 10 elements");
    if (w.size() != static_cast<std::size_t>(n1)) throw Error("sum_membership: arity");
    std::vector<Int> wp = pin_vector(w);
    std::vector<Rat> wq(wp.size());
    for (std::size_t i = 0; i < wp.size(); ++i) wq[i] = Rat(wp[i]);
    WeightedFan fan_l = bergman_flag_fan(m);
    Matroid dual(kernel_basis(m.realization()).transpose());
    WeightedFan fan_p = bergman_flag_fan(dual);
    for (const auto& [cl, wl] : fan_l.cones)
        for (const auto& [cp, wperp] : fan_p.cones) {
            ZMat pair_gens = concat_cols(cl.generators, cp.generators);
            if (nonneg_solve_exists(pair_gens.to_rational(), wq)) return true;
        }
    return false;
}

}  // namespace mdet
