#pragma once

#include <string>
#include <vector>

#include "jumploci/matrix.hpp"
#include "jumploci/multipoly.hpp"

namespace jumploci {

/// One letter of a free-group word: generator index and exponent +-1.
struct Letter {
    int gen;
    int exp;
    bool operator==(const Letter&) const = default;
};

/// Freely reduced word in a free group. The empty word is the identity.
class GroupWord {
public:
    GroupWord() = default;
    static GroupWord from_letters(std::vector<Letter> letters); // reduces

    const std::vector<Letter>& letters() const { return letters_; }
    std::size_t length() const { return letters_.size(); }
    bool is_identity() const { return letters_.empty(); }

    GroupWord inverse() const;
    GroupWord operator*(const GroupWord& o) const;
    GroupWord pow(long long e) const;

    /// Exponent-sum (abelianization) vector over n generators.
    std::vector<long long> exponent_sums(int n) const;

    bool operator==(const GroupWord&) const = default;

    /// Canonical rendering over the given generator names, runs compressed:
    /// "x1^2*x3^-1". The empty word prints as "1".
    std::string str(const std::vector<std::string>& names) const;

private:
    std::vector<Letter> letters_;
};

/// Word grammar: juxtaposition is the product, `g^k` integer powers,
/// `(u,v)` the commutator u v u^-1 v^-1 (u, v themselves words); whitespace
/// and '*' are ignored. Generator names must lex as identifiers.
GroupWord parse_word(std::string_view text, const std::vector<std::string>& generators);

struct Presentation {
    std::vector<std::string> generators;
    std::vector<GroupWord> relators;

    int rank() const { return static_cast<int>(generators.size()); }

    static Presentation make(std::vector<std::string> generators,
                             const std::vector<std::string>& relator_words);
    void validate() const;
};

/// Abelianized Fox derivative of w with respect to generator var (0-based),
/// as a Laurent polynomial in t_1..t_n. Satisfies the product rule
/// D(uv) = D(u) + ab(u) * D(v).
MultiPoly fox_derivative_ab(const GroupWord& w, int var, int n);

/// Degree <= 2 truncation of the Magnus expansion x_i -> 1 + X_i,
/// x_i^-1 -> 1 - X_i + X_i^2 of w, in n noncommuting variables.
struct MagnusQuad {
    std::vector<long long> eps; // degree-1 coefficients = exponent sums
    Matrix<Scalar> c;           // c(i,j) = coefficient of X_i X_j
    bool eps_zero() const;
};

MagnusQuad magnus_degree2(const GroupWord& w, int n);

} // namespace jumploci
