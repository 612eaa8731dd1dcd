#include "mdet/weyl.hpp"

#include "mdet/discriminant.hpp"
#include "mdet/errors.hpp"
#include "mdet/reciprocal.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace mdet {

namespace {

// Graded order, larger terms first; ties broken lexicographically with z0
// leading, so displays read like "-1 z0 dz0^2 + 1 z1 dz1^2 + ... - 1/3 dz1".
bool term_before(const WeylTerm& a, const WeylTerm& b) {
    unsigned da = std::accumulate(a.z_exp.begin(), a.z_exp.end(), 0u) +
                  std::accumulate(a.d_exp.begin(), a.d_exp.end(), 0u);
    unsigned db = std::accumulate(b.z_exp.begin(), b.z_exp.end(), 0u) +
                  std::accumulate(b.d_exp.begin(), b.d_exp.end(), 0u);
    if (da != db) return da > db;
    return std::tie(a.z_exp, a.d_exp) > std::tie(b.z_exp, b.d_exp);
}

}  // namespace

void WeylOp::add_term(const Rat& c, const std::vector<unsigned>& z_exp,
                      const std::vector<unsigned>& d_exp) {
    if (z_exp.size() != nvars_ || d_exp.size() != nvars_) throw Error("weyl term arity");
    if (c == 0) return;
    WeylTerm probe{Rat(0), z_exp, d_exp};
    auto it = std::lower_bound(terms_.begin(), terms_.end(), probe, term_before);
    if (it != terms_.end() && it->z_exp == z_exp && it->d_exp == d_exp) {
        it->coef += c;
        if (it->coef == 0) terms_.erase(it);
    } else {
        terms_.insert(it, WeylTerm{c, z_exp, d_exp});
    }
}

unsigned WeylOp::max_shift() const {
    unsigned m = 0;
    for (const WeylTerm& t : terms_)
        m = std::max(m, std::accumulate(t.d_exp.begin(), t.d_exp.end(), 0u));
    return m;
}

std::string WeylOp::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const WeylTerm& t : terms_) {
        Rat a = t.coef;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        os << a;
        for (unsigned v = 0; v < nvars_; ++v) {
            if (t.z_exp[v] == 0) continue;
            os << " z" << v;
            if (t.z_exp[v] > 1) os << "^" << t.z_exp[v];
        }
        for (unsigned v = 0; v < nvars_; ++v) {
            if (t.d_exp[v] == 0) continue;
            os << " dz" << v;
            if (t.d_exp[v] > 1) os << "^" << t.d_exp[v];
        }
    }
    return os.str();
}

Parameters parameters_from_u(const std::vector<Rat>& u, int d) {
    Parameters p;
    p.u = u;
    Rat sum = 0;
    for (const Rat& x : u) sum += x;
    p.s = -Rat(d + 1) - sum;
    return p;
}

void check_homogeneity(const Parameters& p, int d) {
    Rat total = p.s + Rat(d + 1);
    for (const Rat& x : p.u) total += x;
    if (total != 0)
        throw HomogeneityError("s + d + 1 + sum(u) = " + to_string(total) + ", expected 0");
}

MatroidSystem build_system(const Matroid& m, const Parameters& params) {
    const unsigned n1 = static_cast<unsigned>(m.n_elements());
    if (params.u.size() != n1) throw Error("build_system: u length must be n+1");
    check_homogeneity(params, m.d());
    MatroidSystem sys;
    const std::vector<unsigned> zero(n1, 0);

    sys.euler = WeylOp(n1);
    for (unsigned j = 0; j < n1; ++j) {
        std::vector<unsigned> e(n1, 0);
        e[j] = 1;
        sys.euler.add_term(Rat(1), e, e);
    }
    sys.euler.add_term(params.s, zero, zero);

    const QMat& a = m.realization();
    for (std::size_t i = 0; i < a.rows(); ++i) {
        WeylOp p(n1);
        for (unsigned j = 0; j < n1; ++j) {
            const Rat& aij = a.at(i, j);
            if (aij == 0) continue;
            std::vector<unsigned> ez(n1, 0), ed(n1, 0);
            ez[j] = 1;
            ed[j] = 2;
            p.add_term(aij, ez, ed);
            ed[j] = 1;
            p.add_term(-aij * params.u[j], zero, ed);
        }
        sys.toral.push_back(std::move(p));
    }

    for (const SparsePoly& h : reciprocal_ideal_generators(m)) {
        WeylOp q(n1);
        for (const auto& [e, c] : h.terms()) q.add_term(c, zero, e);
        sys.circuit.push_back(std::move(q));
    }
    return sys;
}

void GenSeries::add_term(const std::vector<int>& shift, const Rat& c) {
    if (shift.size() != nvars_) throw Error("series term arity");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(shift, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Rat GenSeries::coeff(const std::vector<int>& shift) const {
    auto it = terms_.find(shift);
    return it == terms_.end() ? Rat(0) : it->second;
}

int GenSeries::order_of(const std::vector<int>& shift) const {
    int o = 0;
    for (unsigned j = 0; j < nvars_; ++j)
        if (static_cast<int>(j) != distinguished_) o += shift[j];
    return o;
}

std::vector<Rat> GenSeries::exponent_of(const std::vector<int>& shift) const {
    std::vector<Rat> e(base_);
    for (unsigned j = 0; j < nvars_; ++j) e[j] += shift[j];
    return e;
}

GenSeries apply_op(const WeylOp& op, const GenSeries& g) {
    if (op.nvars() != g.nvars()) throw Error("apply_op arity mismatch");
    GenSeries out(g.base(), g.distinguished());
    const unsigned n1 = g.nvars();
    for (const auto& [shift, coef] : g.terms()) {
        std::vector<Rat> e = g.exponent_of(shift);
        for (const WeylTerm& t : op.terms()) {
            // d^b z^e = (falling factorials) z^(e-b); then z^a shifts up.
            Rat c = t.coef * coef;
            for (unsigned j = 0; j < n1 && c != 0; ++j)
                for (unsigned k = 0; k < t.d_exp[j] && c != 0; ++k) c *= (e[j] - k);
            if (c == 0) continue;
            std::vector<int> ns(shift);
            for (unsigned j = 0; j < n1; ++j)
                ns[j] += static_cast<int>(t.z_exp[j]) - static_cast<int>(t.d_exp[j]);
            out.add_term(ns, c);
        }
    }
    return out;
}

namespace {

Rat pochhammer(const Rat& a, int m) {
    Rat r = 1;
    for (int k = 0; k < m; ++k) r *= (a + k);
    return r;
}

Int factorial(int m) {
    Int r = 1;
    for (int k = 2; k <= m; ++k) r *= k;
    return r;
}

// Multi-indices m >= 0 with |m| <= order, lexicographically.
std::vector<std::vector<int>> multi_indices(int n, int order) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(n, 0);
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == n) {
            out.push_back(cur);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            cur[pos] = v;
            self(self, pos + 1, left - v);
        }
        cur[pos] = 0;
    };
    rec(rec, 0, order);
    return out;
}

}  // namespace

GenSeries lauricella_series(int n, const Parameters& params, int order, SignConvention sign) {
    if (params.u.size() != static_cast<std::size_t>(n + 1))
        throw Error("lauricella_series: u length must be n+1");
    for (const Rat& ui : params.u)
        if (is_integer(ui))
            throw ParameterDegenerate("u_i = " + to_string(ui) +
                                      " is an integer; Pochhammer denominators vanish");
    const Rat& s = params.s;
    const Rat b = Rat(1) + s + params.u[0];
    std::vector<Rat> base(n + 1, Rat(0));
    base[0] = -s;
    GenSeries g(base, 0);
    for (const auto& m : multi_indices(n, order)) {
        int total = std::accumulate(m.begin(), m.end(), 0);
        Rat c = pochhammer(s, total) * pochhammer(b, total);
        for (int i = 0; i < n; ++i) {
            Rat den = pochhammer(-params.u[i + 1], m[i]) * Rat(factorial(m[i]));
            c /= den;
        }
        if (sign == SignConvention::MinusRatio && total % 2 != 0) c = -c;
        std::vector<int> shift(n + 1);
        shift[0] = -total;
        for (int i = 0; i < n; ++i) shift[i + 1] = m[i];
        g.add_term(shift, c);
    }
    return g;
}

AnnihilationReport annihilation_check(const std::vector<WeylOp>& ops, const GenSeries& g,
                                      int order) {
    AnnihilationReport rep;
    rep.min_verified_order = order;
    for (std::size_t i = 0; i < ops.size(); ++i) {
        OpCheck check;
        check.label = "op" + std::to_string(i);
        check.max_shift = ops[i].max_shift();
        check.verified_order = order - static_cast<int>(check.max_shift);
        GenSeries r = apply_op(ops[i], g);
        for (const auto& [shift, coef] : r.terms()) {
            int o = r.order_of(shift);
            if (o <= check.verified_order) {
                // Trustworthy region: the truncated tail cannot reach it.
                std::ostringstream os;
                os << "operator " << i << " leaves coefficient " << coef << " at order " << o;
                throw AnnihilationFailure(os.str());
            }
            ++check.residual_terms;
        }
        // Certified zeros: candidate result monomials (images of the
        // retained terms) inside the trustworthy window; none survived.
        std::set<std::vector<int>> candidates;
        for (const auto& [shift, coef] : g.terms()) {
            for (const WeylTerm& t : ops[i].terms()) {
                std::vector<int> ns(shift);
                for (unsigned j = 0; j < g.nvars(); ++j)
                    ns[j] += static_cast<int>(t.z_exp[j]) - static_cast<int>(t.d_exp[j]);
                if (r.order_of(ns) <= check.verified_order) candidates.insert(std::move(ns));
            }
        }
        check.trustworthy_zero = candidates.size();
        rep.min_verified_order = std::min(rep.min_verified_order, check.verified_order);
        rep.ops.push_back(std::move(check));
    }
    return rep;
}

GenSeries recurrence_solve(const std::vector<WeylOp>& ops, const std::vector<Rat>& base,
                           int order) {
    if (ops.empty()) throw Error("recurrence_solve: no operators");
    const int n = static_cast<int>(base.size()) - 1;
    unsigned reach = 0;
    for (const WeylOp& op : ops) reach = std::max(reach, op.max_shift());
    const int work = order + static_cast<int>(reach);

    // Unknowns: coefficients c_m for |m| <= work on the homogeneity
    // lattice shift = (-|m|, m).
    std::vector<std::vector<int>> ms = multi_indices(n, work);
    std::map<std::vector<int>, std::size_t> unknown_index;
    std::vector<std::vector<int>> shifts;
    for (const auto& m : ms) {
        std::vector<int> shift(n + 1);
        shift[0] = -std::accumulate(m.begin(), m.end(), 0);
        for (int i = 0; i < n; ++i) shift[i + 1] = m[i];
        unknown_index.emplace(shift, shifts.size());
        shifts.push_back(shift);
    }
    const std::size_t nu = shifts.size();

    // Equations: for each operator, coefficients of the result monomials
    // whose order is out of reach of the truncated tail.
    std::vector<std::vector<Rat>> rows;
    for (const WeylOp& op : ops) {
        const int trusted = work - static_cast<int>(op.max_shift());
        std::map<std::vector<int>, std::vector<Rat>> buckets;
        for (std::size_t uidx = 0; uidx < nu; ++uidx) {
            GenSeries unit(base, 0);
            unit.add_term(shifts[uidx], Rat(1));
            GenSeries r = apply_op(op, unit);
            for (const auto& [shift, coef] : r.terms()) {
                if (r.order_of(shift) > trusted) continue;
                auto [it, fresh] = buckets.emplace(shift, std::vector<Rat>());
                if (fresh) it->second.assign(nu, Rat(0));
                it->second[uidx] += coef;
            }
        }
        for (auto& [shift, row] : buckets) rows.push_back(std::move(row));
    }

    // Pin c_0 = 1 and solve; every unknown up to `order` must come out
    // uniquely determined.
    std::vector<int> origin(n + 1, 0);
    std::size_t c0 = unknown_index.at(origin);
    // Column map: unknowns except c_0, which is pinned to 1 and moved to
    // the right-hand side.
    std::vector<std::size_t> colmap;
    for (std::size_t j = 0; j < nu; ++j)
        if (j != c0) colmap.push_back(j);
    QMat aug(rows.size(), nu);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t cj = 0; cj + 1 < nu; ++cj) aug.at(r, cj) = rows[r][colmap[cj]];
        aug.at(r, nu - 1) = -rows[r][c0];
    }
    std::vector<std::size_t> pivots;
    QMat red = rref(aug, &pivots);
    std::vector<bool> is_pivot(nu - 1, false);
    std::vector<Rat> value(nu, Rat(0));
    value[c0] = 1;
    for (std::size_t pi = 0; pi < pivots.size(); ++pi) {
        if (pivots[pi] == nu - 1) throw DegenerateRecurrence("inconsistent recurrence system");
        is_pivot[pivots[pi]] = true;
    }
    for (std::size_t pi = 0; pi < pivots.size(); ++pi) {
        std::size_t col = pivots[pi];
        // Unique iff the pivot row has no free-variable coefficients.
        for (std::size_t j = 0; j + 1 < nu; ++j) {
            if (j == col || is_pivot[j]) continue;
            if (red.at(pi, j) != 0) {
                GenSeries probe(base, 0);
                if (probe.order_of(shifts[colmap[col]]) <= order)
                    throw DegenerateRecurrence("coefficient not determined uniquely");
            }
        }
        value[colmap[col]] = red.at(pi, nu - 1);
    }
    for (std::size_t j = 0; j + 1 < nu; ++j) {
        if (is_pivot[j]) continue;
        GenSeries probe(base, 0);
        if (probe.order_of(shifts[colmap[j]]) <= order)
            throw DegenerateRecurrence("free coefficient below the requested order");
    }

    GenSeries g(base, 0);
    for (std::size_t j = 0; j < nu; ++j) {
        GenSeries probe(base, 0);
        if (probe.order_of(shifts[j]) <= order) g.add_term(shifts[j], value[j]);
    }
    return g;
}

SignConvention resolve_sign_convention(int n, const Parameters& params, int order) {
    Matroid m(banana_matrix(n));
    MatroidSystem sys = build_system(m, params);
    std::vector<WeylOp> ops;
    ops.push_back(sys.euler);
    for (const WeylOp& p : sys.toral) ops.push_back(p);
    for (const WeylOp& q : sys.circuit) ops.push_back(q);
    bool plus_ok = true, minus_ok = true;
    try {
        annihilation_check(ops, lauricella_series(n, params, order, SignConvention::PlusRatio),
                           order);
    } catch (const AnnihilationFailure&) {
        plus_ok = false;
    }
    try {
        annihilation_check(ops, lauricella_series(n, params, order, SignConvention::MinusRatio),
                           order);
    } catch (const AnnihilationFailure&) {
        minus_ok = false;
    }
    if (plus_ok == minus_ok)
        throw Error(plus_ok ? "both sign conventions cancel" : "neither sign convention cancels");
    return plus_ok ? SignConvention::PlusRatio : SignConvention::MinusRatio;
}

}  // namespace mdet
