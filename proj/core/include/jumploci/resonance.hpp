#pragma once

#include <span>
#include <vector>

#include "jumploci/cupdata.hpp"

namespace jumploci {

/// Linear subspace of an ambient coordinate space, stored as the unique
/// reduced-echelon basis. The zero subspace has an empty basis.
class Subspace {
public:
    explicit Subspace(int ambient) : ambient_(ambient) {}
    static Subspace span(int ambient, const std::vector<std::vector<Scalar>>& vectors);
    /// Solution set of a homogeneous constraint matrix (rows are functionals).
    static Subspace kernel_of(int ambient, const std::vector<std::vector<Scalar>>& constraints);

    int ambient() const { return ambient_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<std::vector<Scalar>>& basis() const { return basis_; }

    bool contains(std::span<const Scalar> v) const;
    bool contains(const Subspace& other) const;
    Subspace intersect(const Subspace& other) const;
    bool is_rational() const;

    bool operator==(const Subspace&) const = default;
    /// Deterministic total order: ambient, then dim descending, then basis.
    static int compare(const Subspace& a, const Subspace& b);

private:
    int ambient_;
    std::vector<std::vector<Scalar>> basis_;
};

/// dim H^1 of the length-three Aomoto complex (C -> H^1 -> H^2) at z:
/// dim ker(mu_z) - rank(d^0), with rank(d^0) = 1 iff z != 0.
int aomoto_h1_dim(const CupData& c, std::span<const Scalar> z);

bool resonance_member(const CupData& c, std::span<const Scalar> z, int k);

/// Certificate that the whole subspace lies in the depth-k resonance variety:
/// the multiplication matrix, restricted to the parametrized subspace, has
/// rank < n - k identically (equivalently, all (n-k)-minors vanish as
/// polynomials in the parameters), and the origin belongs (k <= n).
bool resonance_contains_subspace(const CupData& c, const Subspace& L, int k);

/// All (n-k) x (n-k) minors of the symbolic multiplication matrix; their
/// common zero locus away from the origin is the depth-k resonance variety.
std::vector<MultiPoly> resonance_minors(const CupData& c, int k);

/// Whether x (an n x dim(b) coordinate matrix) squares to zero in the graded
/// Lie algebra: sum_{i,j,a,b} x(i,a) x(j,b) mu(i,j)_k s(a,b)_c == 0 for all
/// k, c.
bool quadratic_cone_member(const CupData& c, const LieRepData& rep, const Matrix<Scalar>& x);

/// dim H^1 of the Aomoto complex with coefficients in the representation,
/// at a point x of the quadratic cone (throws input_error off the cone).
int relative_aomoto_h1(const CupData& c, const LieRepData& rep, const Matrix<Scalar>& x);

} // namespace jumploci
