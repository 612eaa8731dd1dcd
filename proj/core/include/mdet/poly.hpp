#ifndef MDET_POLY_HPP
#define MDET_POLY_HPP

#include "mdet/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace mdet {

using Exponent = std::vector<unsigned>;

/// Graded lexicographic order, larger terms first: higher total degree
/// wins, ties broken lexicographically. This fixes the serialization
/// order of polynomials.
struct GrlexGreater {
    bool operator()(const Exponent& a, const Exponent& b) const;
};

/// Multivariate polynomial over Q with natural-number exponents. Zero
/// coefficients are never stored.
class SparsePoly {
  public:
    using TermMap = std::map<Exponent, Rat, GrlexGreater>;

    SparsePoly() : nvars_(0) {}
    explicit SparsePoly(unsigned nvars) : nvars_(nvars) {}

    static SparsePoly monomial(unsigned nvars, const Exponent& e, const Rat& c);
    static SparsePoly constant(unsigned nvars, const Rat& c);

    unsigned nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t num_terms() const { return terms_.size(); }

    void add_term(const Exponent& e, const Rat& c);
    Rat coeff(const Exponent& e) const;

    SparsePoly operator+(const SparsePoly& o) const;
    SparsePoly operator-(const SparsePoly& o) const;
    SparsePoly operator*(const SparsePoly& o) const;
    SparsePoly scaled(const Rat& c) const;
    bool operator==(const SparsePoly& o) const = default;

    Rat evaluate(const std::vector<Rat>& x) const;

    int total_degree() const;            // -1 for the zero polynomial
    int partial_degree(unsigned v) const;
    bool is_homogeneous() const;

    /// Display like "x0^2 x1 - 2 x2^3"; `var` selects the letter.
    std::string to_string(const std::string& var = "x") const;

  private:
    unsigned nvars_;
    TermMap terms_;
};

}  // namespace mdet

#endif
