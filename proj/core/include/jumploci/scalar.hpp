#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>
#include <vector>

#include "jumploci/errors.hpp"

namespace jumploci {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Exact element a + b*sqrt(d) of Q or of a quadratic extension Q(sqrt(d)),
/// with d a squarefree integer, d != 0, 1 (d may be negative). Pure rationals
/// carry d == 0 and b == 0. All arithmetic is exact; mixing two distinct
/// nonzero extensions throws input_error. Values are immutable in spirit:
/// every operation returns a fresh canonical value.
class Scalar {
public:
    Scalar() : ext_(0) {}
    Scalar(long long v) : rat_(v), ext_(0) {} // NOLINT: implicit by design
    Scalar(Rational a) : rat_(std::move(a)), ext_(0) {}
    Scalar(Rational a, Rational b, long long d);

    static Scalar sqrt_of(long long d) { return Scalar(Rational(0), Rational(1), d); }

    const Rational& rational_part() const { return rat_; }
    const Rational& radical_part() const { return irr_; }
    long long extension() const { return ext_; }

    bool is_zero() const { return rat_ == 0 && irr_ == 0; }
    bool is_one() const { return irr_ == 0 && rat_ == 1; }
    bool is_rational() const { return irr_ == 0; }
    /// True for elements of Z[sqrt(d)] (integer coordinates).
    bool is_integral() const;

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    Scalar inverse() const;
    /// this^e for integer e (negative exponents invert; 0^0 == 1, 0^neg throws).
    Scalar pow(long long e) const;

    bool operator==(const Scalar& o) const { return rat_ == o.rat_ && irr_ == o.irr_ && ext_ == o.ext_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// Deterministic total order used only for canonical sorting of outputs;
    /// coincides with the numeric order on rationals.
    static int compare_key(const Scalar& x, const Scalar& y);

    std::string str() const;
    /// Accepts "p", "p/q", "a+b√d", "b√d", "√d", "a-√d", ... ("sqrt" and the
    /// UTF-8 radical sign are both understood, as is the U+2212 minus).
    static Scalar parse(std::string_view text);

private:
    void normalize();

    Rational rat_;  // rational coordinate
    Rational irr_;  // coefficient of sqrt(ext_)
    long long ext_; // squarefree d, or 0 for pure rationals
};

/// The common extension of two scalars; input_error if they disagree.
long long merge_extension(long long a, long long b);

/// Squarefree and != 1 test for extension discriminants.
bool is_valid_extension(long long d);

std::string rational_str(const Rational& r);
Rational parse_rational(std::string_view text);

} // namespace jumploci
