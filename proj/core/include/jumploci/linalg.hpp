#pragma once

#include <vector>

#include "jumploci/matrix.hpp"
#include "jumploci/multipoly.hpp"
#include "jumploci/scalar.hpp"

namespace jumploci {

struct RankKernel {
    std::size_t rank = 0;
    std::vector<std::vector<Scalar>> kernel; // canonical reduced-echelon basis rows
};

/// Exact rank and right-kernel basis. Forward elimination is fraction-free
/// (Bareiss) on denominator-cleared rows; the kernel basis is returned in
/// reduced echelon form, so it is unique per subspace.
RankKernel rank_and_kernel(const Matrix<Scalar>& m);

std::size_t rank_of(const Matrix<Scalar>& m);

/// Reduced row echelon form; pivot column indices appended to *pivots if given.
Matrix<Scalar> rref(Matrix<Scalar> m, std::vector<std::size_t>* pivots = nullptr);

/// Rank over the fraction field of the polynomial ring: the generic rank.
/// All specializations of the matrix have rank <= this value, with equality
/// off a proper closed subset.
std::size_t poly_rank(Matrix<MultiPoly> m);

/// Determinant by cofactor expansion (rows are expanded along the sparsest
/// row). Intended for the desk-scale symbolic minors below.
MultiPoly poly_det(const Matrix<MultiPoly>& m);

/// All size x size minors in lexicographic order of (row subset, column
/// subset). Throws input_error when size exceeds either dimension.
std::vector<MultiPoly> minors(const Matrix<MultiPoly>& m, std::size_t size);

/// Lexicographic enumeration of all k-subsets of {0..n-1}.
std::vector<std::vector<std::size_t>> index_subsets(std::size_t n, std::size_t k);

} // namespace jumploci
