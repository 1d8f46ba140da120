#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "jumploci/scalar.hpp"

namespace jumploci {

using Exponents = std::vector<int>;

/// Graded lexicographic order on exponent vectors (total degree first, then
/// lex). Works for Laurent exponents too; only determinism matters there.
struct GradedLex {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Exact multivariate (Laurent) polynomial: a map from exponent vectors to
/// nonzero Scalar coefficients. Negative exponents are permitted throughout;
/// evaluation at a point with a zero coordinate under a negative exponent
/// throws. Two polynomials are equal iff their term maps are equal.
class MultiPoly {
public:
    MultiPoly() : nvars_(0) {} // zero polynomial of arity 0 (neutral element)
    explicit MultiPoly(int nvars) : nvars_(nvars) {}

    static MultiPoly zero(int nvars) { return MultiPoly(nvars); }
    static MultiPoly constant(int nvars, Scalar c);
    static MultiPoly variable(int nvars, int index);
    static MultiPoly monomial(int nvars, Exponents e, Scalar c);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Exponents, Scalar, GradedLex>& terms() const { return terms_; }
    bool has_negative_exponents() const;
    Scalar coefficient(const Exponents& e) const;
    void add_term(const Exponents& e, const Scalar& c);

    MultiPoly operator-() const;
    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator*(const Scalar& c) const;
    MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
    MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

    bool operator==(const MultiPoly& o) const;
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    Scalar eval(std::span<const Scalar> point) const;

    /// Shift exponents so each variable's minimum over the support is zero;
    /// the canonical representative of the monomial-unit orbit.
    MultiPoly unit_normalized() const;

    /// Exact quotient by f; throws std::logic_error if f does not divide.
    MultiPoly divided_by(const MultiPoly& f) const;

    /// True iff g is a multiple of f, up to monomial units when either side
    /// has Laurent terms. f must be nonzero.
    static bool divides(const MultiPoly& f, const MultiPoly& g);

    /// Canonical rendering, leading (graded-lex greatest) term first. Variable
    /// i prints as e.g. "t3" for prefix "t".
    std::string str(const std::string& var_prefix) const;

    /// Parses +, -, *, ^ (integer, possibly negative), parentheses, rational
    /// literals, radical literals (√2 / sqrt2), and variables named
    /// <letters><index> with 1-based index <= nvars. A bare one-letter name
    /// with no index is accepted when nvars == 1. Juxtaposition multiplies.
    static MultiPoly parse(std::string_view text, int nvars);

private:
    void check_arity(const MultiPoly& o) const;

    int nvars_;
    std::map<Exponents, Scalar, GradedLex> terms_;
};

} // namespace jumploci
