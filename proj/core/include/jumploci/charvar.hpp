#pragma once

#include <vector>

#include "jumploci/words.hpp"

namespace jumploci {

/// Point of the character torus: one nonzero scalar per generator image.
struct Character {
    std::vector<Scalar> t;

    static Character make(std::vector<Scalar> coords);
    static Character trivial(int n);
    int rank() const { return static_cast<int>(t.size()); }
    bool is_trivial() const;
    /// Value on a word (product of coordinate powers).
    Scalar operator()(const GroupWord& w) const;
};

/// Matrix of abelianized Fox derivatives of the relators, evaluated at rho;
/// entry (j, i) is D_i(w_j)(rho).
Matrix<Scalar> fox_jacobian(const Presentation& p, const Character& rho);

/// First twisted Betti number dim ker d1(rho) - rank d2(rho). Requires rho to
/// vanish on the relators (i.e. to define a character of the presented group).
int twisted_b1(const Presentation& p, const Character& rho);

bool charvar_member(const Presentation& p, const Character& rho, int k);

/// The r x n matrix of abelianized Fox derivatives as Laurent polynomials.
Matrix<MultiPoly> alexander_matrix(const Presentation& p);

/// All (n-k) x (n-k) minors of the Alexander matrix; away from the trivial
/// character, their simultaneous vanishing detects twisted_b1 >= k.
std::vector<MultiPoly> charvar_minors(const Presentation& p, int k);

} // namespace jumploci
