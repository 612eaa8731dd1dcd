#ifndef MDET_WEYL_HPP
#define MDET_WEYL_HPP

#include "mdet/matroid.hpp"
#include "mdet/poly.hpp"

#include <map>
#include <string>
#include <vector>

namespace mdet {

/// Normally ordered operator term c * z^a * d^b.
struct WeylTerm {
    Rat coef;
    std::vector<unsigned> z_exp;
    std::vector<unsigned> d_exp;

    auto operator<=>(const WeylTerm&) const = default;
};

/// Normally ordered differential operator: all z's left of all d's, terms
/// with equal (z_exp, d_exp) merged, zero coefficients dropped, terms in a
/// fixed canonical order. Equality is therefore term-for-term.
class WeylOp {
  public:
    WeylOp() : nvars_(0) {}
    explicit WeylOp(unsigned nvars) : nvars_(nvars) {}

    unsigned nvars() const { return nvars_; }
    const std::vector<WeylTerm>& terms() const { return terms_; }

    void add_term(const Rat& c, const std::vector<unsigned>& z_exp,
                  const std::vector<unsigned>& d_exp);

    bool operator==(const WeylOp& o) const = default;

    /// Largest total d-order over the terms (the truncation reach).
    unsigned max_shift() const;

    /// Like "-1 z0 dz0^2 + 1 z1 dz1^2 + 1/2 dz0".
    std::string to_string() const;

  private:
    unsigned nvars_;
    std::vector<WeylTerm> terms_;  // kept sorted, merged, zero-free
};

/// Exponent parameters (u, s) with the homogeneity constraint
/// s + d + 1 + sum(u) = 0.
struct Parameters {
    std::vector<Rat> u;
    Rat s;
};

Parameters parameters_from_u(const std::vector<Rat>& u, int d);
void check_homogeneity(const Parameters& p, int d);

struct MatroidSystem {
    WeylOp euler;                 // H = sum z_j d_j + s
    std::vector<WeylOp> toral;    // P_i, one per row of the realization
    std::vector<WeylOp> circuit;  // Q_h, one per circuit generator
};

/// The operators H, P_i, Q_h for the matroid of A and parameters (u, s).
/// HomogeneityError when s + d + 1 + sum(u) != 0.
MatroidSystem build_system(const Matroid& m, const Parameters& params);

/// Finite combination of monomials z^e with rational exponents that all
/// differ from `base` by integer shifts. The distinguished coordinate is
/// the one whose exponent is determined by homogeneity; a term's order is
/// the sum of its non-distinguished shifts.
class GenSeries {
  public:
    GenSeries() : nvars_(0), distinguished_(0) {}
    GenSeries(std::vector<Rat> base, int distinguished = 0)
        : nvars_(static_cast<unsigned>(base.size())),
          distinguished_(distinguished),
          base_(std::move(base)) {}

    unsigned nvars() const { return nvars_; }
    int distinguished() const { return distinguished_; }
    const std::vector<Rat>& base() const { return base_; }
    const std::map<std::vector<int>, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const std::vector<int>& shift, const Rat& c);
    Rat coeff(const std::vector<int>& shift) const;
    int order_of(const std::vector<int>& shift) const;
    std::vector<Rat> exponent_of(const std::vector<int>& shift) const;

    bool operator==(const GenSeries& o) const = default;

  private:
    unsigned nvars_;
    int distinguished_;
    std::vector<Rat> base_;
    std::map<std::vector<int>, Rat> terms_;
};

/// Exact normally ordered action: d_j z^e = e_j z^(e - eps_j),
/// z_j z^e = z^(e + eps_j).
GenSeries apply_op(const WeylOp& op, const GenSeries& g);

enum class SignConvention { PlusRatio, MinusRatio };

/// Truncated hypergeometric series sum c_m sigma^|m| z_0^(-s-|m|) z^m with
/// Pochhammer coefficients
///   c_m = (s)_|m| (1+s+u_0)_|m| / ( prod (-u_i)_{m_i} m_i! ),
/// truncated at |m| <= N. ParameterDegenerate when some u_i is an integer
/// (the denominators must not vanish).
GenSeries lauricella_series(int n, const Parameters& params, int order,
                            SignConvention sign = SignConvention::PlusRatio);

struct OpCheck {
    std::string label;
    unsigned max_shift = 0;
    int verified_order = 0;       // order - max_shift
    std::size_t trustworthy_zero = 0;
    std::size_t residual_terms = 0;  // boundary terms beyond the verified order
};

struct AnnihilationReport {
    std::vector<OpCheck> ops;
    int min_verified_order = 0;
};

/// Applies each operator to the truncated series and asserts that every
/// trustworthy coefficient (order at most N - max_shift(op), hence out of
/// reach of the truncated tail) is exactly zero. Boundary terms are
/// reported, not asserted. Throws AnnihilationFailure naming the operator
/// and the first offending exact coefficient.
AnnihilationReport annihilation_check(const std::vector<WeylOp>& ops, const GenSeries& g,
                                      int order);

/// Independent oracle: impose the linear recurrences the operators force
/// on the coefficients of the series ansatz over the lattice of `base`,
/// seed c_0 = 1, and solve exactly. DegenerateRecurrence when the system
/// fails to determine every coefficient up to `order` uniquely.
GenSeries recurrence_solve(const std::vector<WeylOp>& ops, const std::vector<Rat>& base,
                           int order);

/// Runs the check under both sign conventions; exactly one must pass.
SignConvention resolve_sign_convention(int n, const Parameters& params, int order);

}  // namespace mdet

#endif
