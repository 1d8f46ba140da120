#pragma once

#include <span>
#include <vector>

#include "jumploci/graph.hpp"
#include "jumploci/linalg.hpp"
#include "jumploci/words.hpp"

namespace jumploci {

/// The degree-two cup-product data of a space or group: n = dim H^1,
/// m = dim of the H^2 target, and the coefficients of the antisymmetric map
/// mu : H^1 ^ H^1 -> H^2. Only pairs i < j are stored.
class CupData {
public:
    CupData(int n, int m);

    int h1_dim() const { return n_; }
    int h2_dim() const { return m_; }

    /// Coefficient vector of mu(e_i ^ e_j) for i < j.
    const std::vector<Scalar>& mu_pair(int i, int j) const;
    void set_mu(int i, int j, std::vector<Scalar> coeffs);
    /// Signed coefficient mu(e_i ^ e_j)_k for any i != j.
    Scalar mu_coeff(int i, int j, int k) const;

    /// The m x n matrix of y -> mu(z ^ y) at a numeric point z.
    Matrix<Scalar> multiplication_matrix(std::span<const Scalar> z) const;
    /// Same matrix with z symbolic: entries linear in x_1..x_n.
    Matrix<MultiPoly> multiplication_matrix_symbolic() const;
    /// Same matrix along the parametrized line z = sum_p s_p * basis[p];
    /// entries linear in the s parameters.
    Matrix<MultiPoly> multiplication_matrix_parametrized(
        const std::vector<std::vector<Scalar>>& basis) const;

    bool operator==(const CupData&) const = default;

private:
    std::size_t pair_index(int i, int j) const; // i < j

    int n_, m_;
    std::vector<std::vector<Scalar>> mu_;
};

/// Cup data of a commutator-relator presentation: one H^2 generator per
/// relator, with mu dual to the degree-2 Magnus class of each relator.
/// Throws input_error if some relator has a nonzero exponent sum.
CupData cup_from_presentation(const Presentation& p);

/// Orientable surface of the given genus with the given number of punctures.
CupData cup_surface(int genus, int punctures);

/// Right-angled Artin group of a graph; edge {v,w} oriented from the smaller
/// vertex index.
CupData cup_raag(const Graph& g);

/// Wedge: block sum with zero mixed products.
CupData cup_wedge(const CupData& u, const CupData& v);

/// Product: H^2 gains U^1 (x) V^1 and mixed pairs map to u (x) v.
CupData cup_product_join(const CupData& u, const CupData& v);

/// Configuration space of `points` ordered points on a genus-1 surface:
/// Lambda^2 of the 2n torus classes modulo the diagonal classes
/// (a_i - a_j)(b_i - b_j). Basis order a_1, b_1, ..., a_n, b_n.
CupData cup_config_torus(int points);

/// Presentation matrix delta_3 + id (x) mu-dual from Lambda^3 X (+) Y to
/// Lambda^2 X over Q[x_1..x_n]; rows are pairs (i<j) lex, columns are triples
/// (i<j<k) lex followed by the m relator columns.
Matrix<MultiPoly> infinitesimal_alexander_matrix(const CupData& c);

/// A finite-dimensional Lie algebra with structure constants s[a][b] (the
/// coordinates of [z_a, z_b]) together with a representation on V given by
/// one matrix per basis element. Validated for antisymmetry, the Jacobi
/// identity, and the homomorphism property.
class LieRepData {
public:
    static LieRepData make(int dim_b, std::vector<std::vector<std::vector<Scalar>>> structure,
                           int dim_v, std::vector<Matrix<Scalar>> theta);
    /// gl_1 acting on a line by the identity.
    static LieRepData abelian_line();

    int dim_b() const { return dim_b_; }
    int dim_v() const { return dim_v_; }
    const std::vector<Scalar>& bracket(int a, int b) const { return structure_[a][b]; }
    const Matrix<Scalar>& theta(int a) const { return theta_[a]; }

private:
    int dim_b_ = 0, dim_v_ = 0;
    std::vector<std::vector<std::vector<Scalar>>> structure_;
    std::vector<Matrix<Scalar>> theta_;
};

} // namespace jumploci
