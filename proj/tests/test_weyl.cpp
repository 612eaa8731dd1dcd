#include "mdet/discriminant.hpp"
#include "mdet/errors.hpp"
#include "mdet/matrix.hpp"
#include "mdet/rng.hpp"
#include "mdet/weyl.hpp"

#include "test_helpers.hpp"

#include <doctest.h>

using namespace mdet;

namespace {

Parameters reference_params3() {
    return parameters_from_u({Rat(1) / 2, Rat(1) / 3, Rat(1) / 5, Rat(1) / 7}, 2);
}

std::vector<WeylOp> all_ops(const MatroidSystem& sys) {
    std::vector<WeylOp> ops;
    ops.push_back(sys.euler);
    for (const WeylOp& p : sys.toral) ops.push_back(p);
    for (const WeylOp& q : sys.circuit) ops.push_back(q);
    return ops;
}

// The five known operators of the three-edge banana system, hand-built.
MatroidSystem banana3_reference(const Parameters& prm) {
    const unsigned n1 = 4;
    const std::vector<unsigned> zero(n1, 0);
    MatroidSystem sys;
    sys.euler = WeylOp(n1);
    for (unsigned j = 0; j < n1; ++j) {
        std::vector<unsigned> e(n1, 0);
        e[j] = 1;
        sys.euler.add_term(Rat(1), e, e);
    }
    sys.euler.add_term(prm.s, zero, zero);
    for (unsigned i = 1; i < n1; ++i) {
        WeylOp p(n1);
        std::vector<unsigned> z0(n1, 0), d0(n1, 0), zi(n1, 0), di(n1, 0);
        z0[0] = 1;
        d0[0] = 2;
        zi[i] = 1;
        di[i] = 2;
        p.add_term(Rat(-1), z0, d0);
        p.add_term(Rat(1), zi, di);
        std::vector<unsigned> d0one(n1, 0), dione(n1, 0);
        d0one[0] = 1;
        dione[i] = 1;
        p.add_term(prm.u[0], zero, d0one);
        p.add_term(-prm.u[i], zero, dione);
        sys.toral.push_back(p);
    }
    WeylOp q(n1);
    for (unsigned skip = 0; skip < n1; ++skip) {
        std::vector<unsigned> d(n1, 1);
        d[skip] = 0;
        q.add_term(Rat(1), zero, d);
    }
    sys.circuit.push_back(q);
    return sys;
}

}  // namespace

TEST_CASE("parameters and homogeneity") {
    Parameters prm = reference_params3();
    CHECK(prm.s == -(Rat(1) / 2 + Rat(1) / 3 + Rat(1) / 5 + Rat(1) / 7) - 3);
    CHECK_NOTHROW(check_homogeneity(prm, 2));
    Parameters bad = prm;
    bad.s += 1;
    CHECK_THROWS_AS(check_homogeneity(bad, 2), HomogeneityError);
    CHECK_THROWS_AS(build_system(Matroid(banana_matrix(3)), bad), HomogeneityError);
}

TEST_CASE("banana system matches the reference operators term-for-term") {
    Parameters prm = reference_params3();
    MatroidSystem sys = build_system(Matroid(banana_matrix(3)), prm);
    MatroidSystem ref = banana3_reference(prm);
    CHECK(sys.euler == ref.euler);
    REQUIRE(sys.toral.size() == 3);
    for (int i = 0; i < 3; ++i) CHECK(sys.toral[i] == ref.toral[i]);
    REQUIRE(sys.circuit.size() == 1);
    CHECK(sys.circuit[0] == ref.circuit[0]);
}

TEST_CASE("one-dimensional system") {
    // d = 0, two parallel columns.
    QMat a{{1, 1}};
    Parameters prm = parameters_from_u({Rat(1) / 2, Rat(1) / 3}, 0);
    MatroidSystem sys = build_system(Matroid(a), prm);
    REQUIRE(sys.toral.size() == 1);
    WeylOp want(2);
    want.add_term(Rat(1), {1, 0}, {2, 0});
    want.add_term(Rat(1), {0, 1}, {0, 2});
    want.add_term(-prm.u[0], {0, 0}, {1, 0});
    want.add_term(-prm.u[1], {0, 0}, {0, 1});
    CHECK(sys.toral[0] == want);
    REQUIRE(sys.circuit.size() == 1);
    WeylOp q(2);
    q.add_term(Rat(1), {0, 0}, {0, 1});
    q.add_term(Rat(-1), {0, 0}, {1, 0});
    CHECK(sys.circuit[0] == q);
}

TEST_CASE("operator text format") {
    WeylOp op(2);
    op.add_term(Rat(-1), {1, 0}, {2, 0});
    op.add_term(Rat(1) / 2, {0, 0}, {1, 0});
    std::string s = op.to_string();
    CHECK(s.find("z0 dz0^2") != std::string::npos);
    CHECK(s.find("1/2 dz0") != std::string::npos);
}

TEST_CASE("apply: euler operator kills homogeneous terms exactly") {
    Parameters prm = reference_params3();
    MatroidSystem sys = build_system(Matroid(banana_matrix(3)), prm);
    GenSeries g = lauricella_series(3, prm, 5);
    CHECK(apply_op(sys.euler, g).is_zero());
}

TEST_CASE("apply: single derivative") {
    std::vector<Rat> base = {Rat(-7) / 2, Rat(0)};
    GenSeries g(base, 0);
    g.add_term({0, 0}, Rat(1));
    WeylOp d0(2);
    d0.add_term(Rat(1), {0, 0}, {1, 0});
    GenSeries r = apply_op(d0, g);
    REQUIRE(r.terms().size() == 1);
    CHECK(r.coeff({-1, 0}) == Rat(-7) / 2);
}

TEST_CASE("apply: first toral operator on the order-zero truncation seeds the recurrence") {
    Parameters prm = reference_params3();
    MatroidSystem sys = build_system(Matroid(banana_matrix(3)), prm);
    GenSeries g0 = lauricella_series(3, prm, 0);
    GenSeries r = apply_op(sys.toral[0], g0);
    // Single boundary term -s (1+s+u0) z0^(-s-1): exactly the right-hand
    // side of the first coefficient recurrence.
    REQUIRE(r.terms().size() == 1);
    CHECK(r.coeff({-1, 0, 0, 0}) == -prm.s * (1 + prm.s + prm.u[0]));
}

TEST_CASE("apply is bilinear on random instances") {
    Rng rng(41);
    std::vector<Rat> base = {Rat(-5) / 3, Rat(0), Rat(0)};
    for (int trial = 0; trial < 20; ++trial) {
        WeylOp op1(3), op2(3);
        GenSeries g1(base, 0), g2(base, 0);
        for (int t = 0; t < 4; ++t) {
            std::vector<unsigned> ze(3), de(3);
            for (int j = 0; j < 3; ++j) {
                ze[j] = static_cast<unsigned>(rng.next_in(0, 1));
                de[j] = static_cast<unsigned>(rng.next_in(0, 2));
            }
            op1.add_term(rng.next_rational(-3, 3), ze, de);
            op2.add_term(rng.next_rational(-3, 3), de, ze);
            std::vector<int> sh(3);
            for (int j = 0; j < 3; ++j) sh[j] = static_cast<int>(rng.next_in(0, 3));
            g1.add_term(sh, rng.next_rational(-3, 3));
            g2.add_term(sh, rng.next_rational(-3, 3));
        }
        // (op1 + op2) g = op1 g + op2 g
        WeylOp sum = op1;
        for (const WeylTerm& t : op2.terms()) sum.add_term(t.coef, t.z_exp, t.d_exp);
        GenSeries lhs = apply_op(sum, g1);
        GenSeries r1 = apply_op(op1, g1), r2 = apply_op(op2, g1);
        GenSeries rhs(base, 0);
        for (const auto& [sh, c] : r1.terms()) rhs.add_term(sh, c);
        for (const auto& [sh, c] : r2.terms()) rhs.add_term(sh, c);
        CHECK(lhs == rhs);
        // op (g1 + g2) = op g1 + op g2
        GenSeries gsum(base, 0);
        for (const auto& [sh, c] : g1.terms()) gsum.add_term(sh, c);
        for (const auto& [sh, c] : g2.terms()) gsum.add_term(sh, c);
        GenSeries lhs2 = apply_op(op1, gsum);
        GenSeries ra = apply_op(op1, g1), rb = apply_op(op1, g2);
        GenSeries rhs2(base, 0);
        for (const auto& [sh, c] : ra.terms()) rhs2.add_term(sh, c);
        for (const auto& [sh, c] : rb.terms()) rhs2.add_term(sh, c);
        CHECK(lhs2 == rhs2);
    }
}

TEST_CASE("lauricella coefficients") {
    Parameters prm = reference_params3();
    GenSeries g0 = lauricella_series(3, prm, 0);
    REQUIRE(g0.terms().size() == 1);
    CHECK(g0.coeff({0, 0, 0, 0}) == 1);

    GenSeries g2 = lauricella_series(3, prm, 2);
    // c_(1,0,0) = s (1+s+u0) / (-u1).
    Rat want = prm.s * (1 + prm.s + prm.u[0]) / (-prm.u[1]);
    CHECK(g2.coeff({-1, 1, 0, 0}) == want);

    Parameters degenerate = parameters_from_u({Rat(1), Rat(1) / 3, Rat(1) / 5, Rat(1) / 7}, 2);
    CHECK_THROWS_AS(lauricella_series(3, degenerate, 2), ParameterDegenerate);
}

TEST_CASE("sign convention: the positive-ratio expansion cancels") {
    Parameters prm = reference_params3();
    CHECK(resolve_sign_convention(3, prm, 6) == SignConvention::PlusRatio);
}

TEST_CASE("annihilation at the reference parameters") {
    Parameters prm = reference_params3();
    MatroidSystem sys = build_system(Matroid(banana_matrix(3)), prm);
    std::vector<WeylOp> ops = all_ops(sys);
    GenSeries g = lauricella_series(3, prm, 8);
    AnnihilationReport rep = annihilation_check(ops, g, 8);
    CHECK(rep.min_verified_order >= 4);
    for (const OpCheck& oc : rep.ops) CHECK(oc.verified_order >= 4);

    // n = 2 at order >= 6.
    Parameters prm2 = parameters_from_u({Rat(1) / 2, Rat(1) / 3, Rat(1) / 5}, 1);
    MatroidSystem sys2 = build_system(Matroid(banana_matrix(2)), prm2);
    GenSeries g2 = lauricella_series(2, prm2, 8);
    AnnihilationReport rep2 = annihilation_check(all_ops(sys2), g2, 8);
    CHECK(rep2.min_verified_order >= 6);
}

TEST_CASE("annihilation holds at random admissible parameters") {
    Rng rng(53);
    for (int trial = 0; trial < 3; ++trial) {
        std::vector<Rat> u(4);
        for (int i = 0; i < 4; ++i)
            u[i] = Rat(rng.next_in(-3, 3)) + Rat(1) / Rat(2 + rng.next_in(0, 5));
        Parameters prm = parameters_from_u(u, 2);
        MatroidSystem sys = build_system(Matroid(banana_matrix(3)), prm);
        GenSeries g = lauricella_series(3, prm, 6);
        CHECK_NOTHROW(annihilation_check(all_ops(sys), g, 6));
    }
}

TEST_CASE("mutation: corrupting any retained coefficient is detected") {
    Parameters prm = reference_params3();
    MatroidSystem sys = build_system(Matroid(banana_matrix(3)), prm);
    std::vector<WeylOp> ops = all_ops(sys);
    const int order = 6;
    GenSeries g = lauricella_series(3, prm, order);
    // Coefficients up to order-1; corner coefficients at the truncation
    // order itself are beyond every trusted equation.
    for (const auto& [shift, coef] : g.terms()) {
        if (g.order_of(shift) > order - 1) continue;
        GenSeries mutated = g;
        mutated.add_term(shift, Rat(1));
        CHECK_THROWS_AS(annihilation_check(ops, mutated, order), AnnihilationFailure);
    }
    // The named example: c_(1,0,0) + 1 trips an equation at order <= 1.
    GenSeries mutated = g;
    mutated.add_term({-1, 1, 0, 0}, Rat(1));
    try {
        annihilation_check(ops, mutated, order);
        FAIL("corruption not detected");
    } catch (const AnnihilationFailure& e) {
        CHECK(std::string(e.what()).find("order") != std::string::npos);
    }
}

TEST_CASE("recurrence oracle equals the closed form") {
    // n = 3.
    Parameters prm = reference_params3();
    MatroidSystem sys = build_system(Matroid(banana_matrix(3)), prm);
    std::vector<Rat> base(4, Rat(0));
    base[0] = -prm.s;
    GenSeries solved = recurrence_solve(sys.toral, base, 4);
    GenSeries closed = lauricella_series(3, prm, 4);
    CHECK(solved == closed);
    // n = 2.
    Parameters prm2 = parameters_from_u({Rat(1) / 2, Rat(1) / 3, Rat(1) / 5}, 1);
    MatroidSystem sys2 = build_system(Matroid(banana_matrix(2)), prm2);
    std::vector<Rat> base2(3, Rat(0));
    base2[0] = -prm2.s;
    CHECK(recurrence_solve(sys2.toral, base2, 4) == lauricella_series(2, prm2, 4));
    // Order zero pins c_0 alone.
    GenSeries g0 = recurrence_solve(sys.toral, base, 0);
    REQUIRE(g0.terms().size() == 1);
    CHECK(g0.coeff({0, 0, 0, 0}) == 1);
}

TEST_CASE("row-equivalent realizations span the same toral operators") {
    Parameters prm = reference_params3();
    Matroid m(banana_matrix(3));
    MatroidSystem sys = build_system(m, prm);
    // G * A for an invertible G.
    QMat g{{1, 1, 0}, {0, 1, 0}, {2, 0, 1}};
    Matroid m2(g * banana_matrix(3));
    MatroidSystem sys2 = build_system(m2, prm);
    // Each primed operator solves exactly as a combination of the originals
    // on coefficient vectors indexed by (z_exp, d_exp).
    std::map<std::pair<std::vector<unsigned>, std::vector<unsigned>>, std::size_t> index;
    auto note = [&](const WeylOp& op) {
        for (const WeylTerm& t : op.terms()) index.emplace(std::make_pair(t.z_exp, t.d_exp),
                                                           index.size());
    };
    for (const WeylOp& op : sys.toral) note(op);
    for (const WeylOp& op : sys2.toral) note(op);
    QMat basis(index.size(), sys.toral.size());
    for (std::size_t k = 0; k < sys.toral.size(); ++k)
        for (const WeylTerm& t : sys.toral[k].terms())
            basis.at(index.at({t.z_exp, t.d_exp}), k) = t.coef;
    for (const WeylOp& primed : sys2.toral) {
        std::vector<Rat> rhs(index.size(), Rat(0));
        for (const WeylTerm& t : primed.terms()) rhs[index.at({t.z_exp, t.d_exp})] = t.coef;
        std::vector<Rat> x;
        CHECK(solve(basis, rhs, x));
    }
}
