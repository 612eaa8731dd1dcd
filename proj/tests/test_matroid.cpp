#include "mdet/errors.hpp"
#include "mdet/matroid.hpp"
#include "mdet/rng.hpp"

#include "test_helpers.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

using namespace mdet;
using mdet::testing::banana;
using mdet::testing::braid;

namespace {

// Independent oracle for the characteristic polynomial: Mobius recursion
// over the flat lattice, chi(q) = sum_F mu(0,F) q^(r(E)-r(F)).
SparsePoly chi_via_mobius(const Matroid& m) {
    FlatLattice lat = m.flats();
    const std::size_t k = lat.flats.size();
    std::vector<Int> mu(k, Int(0));
    for (std::size_t i = 0; i < k; ++i) {
        Int s = (i == 0) ? Int(1) : Int(0);
        for (std::size_t j = 0; j < i; ++j)
            if ((lat.flats[j] & lat.flats[i]) == lat.flats[j] && lat.flats[j] != lat.flats[i])
                s -= mu[j];
        mu[i] = s;
    }
    const int re = m.full_rank();
    SparsePoly chi(1);
    for (std::size_t i = 0; i < k; ++i)
        chi.add_term({static_cast<unsigned>(re - lat.ranks[i])}, Rat(mu[i]));
    return chi;
}

// Brute-force flats: fixed points of closure over all subsets.
std::set<Subset> flats_by_scan(const Matroid& m) {
    std::set<Subset> out;
    Subset all = m.ground_set();
    for (Subset s = 0; s <= all; ++s) {
        if (m.closure(s) == s) out.insert(s);
        if (s == all) break;
    }
    return out;
}

QMat random_no_zero_col(Rng& rng, int r, int c) {
    while (true) {
        QMat a(r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) a.at(i, j) = rng.next_rational(-4, 4);
        bool ok = true;
        for (int j = 0; j < c && ok; ++j) {
            bool zero = true;
            for (int i = 0; i < r && zero; ++i)
                if (a.at(i, j) != 0) zero = false;
            if (zero) ok = false;
        }
        if (ok) return a;
    }
}

}  // namespace

TEST_CASE("ground sets are capped for subset enumeration") {
    QMat wide(2, 25);
    for (int j = 0; j < 25; ++j) wide.at(j % 2, j) = 1;
    CHECK_THROWS_AS(Matroid{wide}, GroundSetTooLarge);
}

TEST_CASE("construction recognizes named matroids") {
    Matroid b(banana());
    CHECK(b.d() == 2);
    CHECK(b.is_uniform());
    Matroid k4(braid());
    CHECK(k4.d() == 2);
    CHECK_FALSE(k4.is_uniform());
    QMat zero_col{{1, 0}, {0, 0}};
    CHECK_THROWS_AS(Matroid{zero_col}, LoopError);
}

TEST_CASE("closure") {
    Matroid b(banana());
    CHECK(b.closure(subset_from_list({1, 2})) == subset_from_list({1, 2}));
    CHECK(b.closure(b.ground_set()) == b.ground_set());
    Matroid k4(braid());
    CHECK(k4.closure(subset_from_list({0, 1})) == subset_from_list({0, 1, 3}));
}

TEST_CASE("braid flats are the fifteen known ones") {
    Matroid k4(braid());
    FlatLattice lat = k4.flats();
    std::set<Subset> got(lat.flats.begin(), lat.flats.end());
    std::set<Subset> expect = {
        0,
        subset_from_list({0}), subset_from_list({1}), subset_from_list({2}),
        subset_from_list({3}), subset_from_list({4}), subset_from_list({5}),
        subset_from_list({0, 5}), subset_from_list({1, 4}), subset_from_list({2, 3}),
        subset_from_list({0, 1, 3}), subset_from_list({0, 2, 4}),
        subset_from_list({1, 2, 5}), subset_from_list({3, 4, 5}),
        subset_from_list({0, 1, 2, 3, 4, 5})};
    CHECK(got == expect);
    int rank1 = 0, rank2 = 0, rank3 = 0;
    for (std::size_t i = 0; i < lat.flats.size(); ++i) {
        if (lat.ranks[i] == 1) ++rank1;
        if (lat.ranks[i] == 2) ++rank2;
        if (lat.ranks[i] == 3) ++rank3;
    }
    CHECK(rank1 == 6);
    CHECK(rank2 == 7);
    CHECK(rank3 == 1);
}

TEST_CASE("banana flats") {
    // Count check: the empty flat, 4 singletons, 6 pairs and the full set.
    // (Eleven nonempty flats in total.)
    Matroid b(banana());
    FlatLattice lat = b.flats();
    CHECK(lat.flats.size() == 12);
    CHECK(flats_by_scan(b) == std::set<Subset>(lat.flats.begin(), lat.flats.end()));
}

TEST_CASE("rank-1 matroid has two flats") {
    Matroid m(QMat{{1}});
    FlatLattice lat = m.flats();
    REQUIRE(lat.flats.size() == 2);
    CHECK(lat.flats[0] == 0);
    CHECK(lat.flats[1] == 1);
}

TEST_CASE("circuits of the banana and braid") {
    Matroid b(banana());
    auto cb = b.circuits();
    REQUIRE(cb.size() == 1);
    CHECK(cb[0].support == subset_from_list({0, 1, 2, 3}));
    for (int e = 0; e < 4; ++e) CHECK(cb[0].dependency[e] == 1);

    Matroid k4(braid());
    auto ck = k4.circuits();
    CHECK(ck.size() == 7);
    std::set<Subset> size3;
    int size4 = 0;
    for (const Circuit& c : ck) {
        if (popcount(c.support) == 3) size3.insert(c.support);
        if (popcount(c.support) == 4) ++size4;
        // Exact dependency: sum v_i a_i = 0.
        std::vector<Rat> combo(k4.realization().rows(), Rat(0));
        for (int e : subset_to_list(c.support))
            for (std::size_t i = 0; i < combo.size(); ++i)
                combo[i] += c.dependency[e] * k4.realization().at(i, e);
        for (const Rat& x : combo) CHECK(x == 0);
        // Normalization: lowest-index entry is 1.
        CHECK(c.dependency[subset_to_list(c.support)[0]] == 1);
    }
    CHECK(size3 == std::set<Subset>{subset_from_list({0, 1, 3}), subset_from_list({0, 2, 4}),
                                    subset_from_list({1, 2, 5}), subset_from_list({3, 4, 5})});
    CHECK(size4 == 3);

    Matroid indep(QMat::identity(3));
    CHECK(indep.circuits().empty());
}

TEST_CASE("components and coloops") {
    Matroid b(banana());
    CHECK(b.n_components() == 1);
    CHECK(b.coloops() == 0);
    Matroid k4(braid());
    CHECK(k4.n_components() == 1);
    CHECK(k4.coloops() == 0);
    Matroid two(direct_sum(banana(), banana()));
    CHECK(two.n_components() == 2);
    Matroid idm(QMat::identity(3));
    CHECK(idm.n_components() == 3);
    CHECK(idm.coloops() == full_set(3));
}

TEST_CASE("characteristic polynomial, mu, beta") {
    Matroid b(banana());
    SparsePoly chi = b.characteristic_polynomial();
    CHECK(chi.coeff({3}) == 1);
    CHECK(chi.coeff({2}) == -4);
    CHECK(chi.coeff({1}) == 6);
    CHECK(chi.coeff({0}) == -3);
    CHECK(b.mobius_invariant() == 3);
    CHECK(b.beta_invariant() == 1);

    Matroid k4(braid());
    SparsePoly chik = k4.characteristic_polynomial();
    CHECK(chik.coeff({3}) == 1);
    CHECK(chik.coeff({2}) == -6);
    CHECK(chik.coeff({1}) == 11);
    CHECK(chik.coeff({0}) == -6);
    CHECK(k4.mobius_invariant() == 6);
    CHECK(k4.beta_invariant() == 2);

    Matroid free1(QMat{{1}});
    SparsePoly chif = free1.characteristic_polynomial();
    CHECK(chif.coeff({1}) == 1);
    CHECK(chif.coeff({0}) == -1);
    CHECK(free1.mobius_invariant() == 1);

    Matroid two(direct_sum(banana(), banana()));
    CHECK(two.beta_invariant() == 0);  // beta vanishes on direct sums
}

TEST_CASE("beta of uniform matroids is a binomial") {
    for (int n = 2; n <= 7; ++n)
        for (int d = 1; d < n; ++d) {
            Matroid u(uniform_realization(n, d));
            CHECK(u.beta_invariant() == binomial(n - 1, d));
        }
}

TEST_CASE("whitney sum agrees with the mobius oracle") {
    Rng rng(3);
    CHECK(Matroid(banana()).characteristic_polynomial() == chi_via_mobius(Matroid(banana())));
    CHECK(Matroid(braid()).characteristic_polynomial() == chi_via_mobius(Matroid(braid())));
    for (int trial = 0; trial < 10; ++trial) {
        Matroid m(random_no_zero_col(rng, 2 + rng.next_in(0, 1), 4 + rng.next_in(0, 2)));
        CHECK(m.characteristic_polynomial() == chi_via_mobius(m));
        CHECK(m.characteristic_polynomial().evaluate({Rat(1)}) == 0);
    }
}

TEST_CASE("restriction") {
    Matroid k4(braid());
    Matroid r = k4.restriction(subset_from_list({0, 1, 3}));
    CHECK(r.full_rank() == 2);
    CHECK(r.n_elements() == 3);
    CHECK(r.circuits().size() == 1);
    Matroid full = k4.restriction(k4.ground_set());
    CHECK(full.flats().flats.size() == k4.flats().flats.size());
    Matroid single = k4.restriction(subset_from_list({2}));
    CHECK(single.full_rank() == 1);
}

TEST_CASE("connected flats form the minimal building set") {
    Matroid b(banana());
    std::vector<Subset> cf = b.connected_flats();
    // 4 singletons plus the full set; the pairs are disconnected.
    CHECK(cf.size() == 5);
    Matroid k4(braid());
    std::vector<Subset> ck = k4.connected_flats();
    // 6 singletons, 4 triple flats, the full set.
    CHECK(ck.size() == 11);
    Matroid free1(QMat{{1}});
    CHECK(free1.is_connected());
    Matroid free2(QMat::identity(2));
    CHECK_FALSE(free2.is_connected());
}

TEST_CASE("rank axioms hold on random instances") {
    Rng rng(5);
    for (int trial = 0; trial < 8; ++trial) {
        Matroid m(random_no_zero_col(rng, 3, 6));
        Subset all = m.ground_set();
        for (int probe = 0; probe < 60; ++probe) {
            Subset s = static_cast<Subset>(rng.next()) & all;
            Subset t = static_cast<Subset>(rng.next()) & all;
            int rs = m.rank_of(s), rt = m.rank_of(t);
            CHECK(rs >= 0);
            CHECK(rs <= popcount(s));
            if ((s & t) == s) CHECK(rs <= rt);  // monotone
            CHECK(m.rank_of(s | t) + m.rank_of(s & t) <= rs + rt);  // submodular
            Subset cl = m.closure(s);
            CHECK((cl & s) == s);                // extensive
            CHECK(m.closure(cl) == cl);          // idempotent
            CHECK(m.rank_of(cl) == rs);
        }
        // Flats from BFS equal fixed points of closure.
        FlatLattice lat = m.flats();
        CHECK(flats_by_scan(m) == std::set<Subset>(lat.flats.begin(), lat.flats.end()));
    }
}

TEST_CASE("beta is zero exactly for disconnected matroids (experiment)") {
    Rng rng(17);
    int checked = 0;
    for (int trial = 0; trial < 30; ++trial) {
        Matroid m(random_no_zero_col(rng, 2, 4 + rng.next_in(0, 1)));
        if (m.n_elements() < 2) continue;
        ++checked;
        CHECK((m.beta_invariant() == 0) == !m.is_connected());
    }
    CHECK(checked > 0);
}

TEST_CASE("circuit minimality on random instances") {
    Rng rng(23);
    for (int trial = 0; trial < 6; ++trial) {
        Matroid m(random_no_zero_col(rng, 3, 6));
        for (const Circuit& c : m.circuits()) {
            CHECK(m.rank_of(c.support) == popcount(c.support) - 1);
            for (int e : subset_to_list(c.support))
                CHECK(m.is_independent(without(c.support, e)));
        }
    }
}
