#include "jumploci/cupdata.hpp"

#include <algorithm>
#include <string>

namespace jumploci {

CupData::CupData(int n, int m) : n_(n), m_(m) {
    if (n < 0 || m < 0) throw input_error("negative cup data dimensions");
    mu_.assign(static_cast<std::size_t>(n) * (n > 0 ? static_cast<std::size_t>(n - 1) : 0) / 2,
               std::vector<Scalar>(static_cast<std::size_t>(m), Scalar(0)));
}

std::size_t CupData::pair_index(int i, int j) const {
    // pairs (i<j) in lex order
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) -
           static_cast<std::size_t>(i) * (static_cast<std::size_t>(i) + 1) / 2 +
           static_cast<std::size_t>(j - i - 1);
}

const std::vector<Scalar>& CupData::mu_pair(int i, int j) const {
    if (!(0 <= i && i < j && j < n_)) throw input_error("cup pair index out of range");
    return mu_[pair_index(i, j)];
}

void CupData::set_mu(int i, int j, std::vector<Scalar> coeffs) {
    if (!(0 <= i && i < j && j < n_)) throw input_error("cup pair index out of range");
    if (static_cast<int>(coeffs.size()) != m_) throw input_error("cup coefficient arity mismatch");
    mu_[pair_index(i, j)] = std::move(coeffs);
}

Scalar CupData::mu_coeff(int i, int j, int k) const {
    if (i == j) return Scalar(0);
    if (i < j) return mu_pair(i, j)[static_cast<std::size_t>(k)];
    return -mu_pair(j, i)[static_cast<std::size_t>(k)];
}

Matrix<Scalar> CupData::multiplication_matrix(std::span<const Scalar> z) const {
    if (static_cast<int>(z.size()) != n_) throw input_error("point dimension mismatch");
    Matrix<Scalar> m(static_cast<std::size_t>(m_), static_cast<std::size_t>(n_), Scalar(0));
    for (int i = 0; i < n_; ++i) {
        if (z[static_cast<std::size_t>(i)].is_zero()) continue;
        for (int j = 0; j < n_; ++j) {
            if (j == i) continue;
            for (int k = 0; k < m_; ++k)
                m(static_cast<std::size_t>(k), static_cast<std::size_t>(j)) +=
                    z[static_cast<std::size_t>(i)] * mu_coeff(i, j, k);
        }
    }
    return m;
}

Matrix<MultiPoly> CupData::multiplication_matrix_symbolic() const {
    Matrix<MultiPoly> m(static_cast<std::size_t>(m_), static_cast<std::size_t>(n_),
                        MultiPoly(n_));
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            if (j == i) continue;
            for (int k = 0; k < m_; ++k) {
                Scalar c = mu_coeff(i, j, k);
                if (c.is_zero()) continue;
                m(static_cast<std::size_t>(k), static_cast<std::size_t>(j)) +=
                    MultiPoly::variable(n_, i) * c;
            }
        }
    return m;
}

Matrix<MultiPoly> CupData::multiplication_matrix_parametrized(
    const std::vector<std::vector<Scalar>>& basis) const {
    int d = static_cast<int>(basis.size());
    for (const auto& v : basis)
        if (static_cast<int>(v.size()) != n_) throw input_error("basis vector dimension mismatch");
    Matrix<MultiPoly> m(static_cast<std::size_t>(m_), static_cast<std::size_t>(n_), MultiPoly(d));
    for (int p = 0; p < d; ++p) {
        MultiPoly sp = MultiPoly::variable(d, p);
        for (int i = 0; i < n_; ++i) {
            const Scalar& zi = basis[static_cast<std::size_t>(p)][static_cast<std::size_t>(i)];
            if (zi.is_zero()) continue;
            for (int j = 0; j < n_; ++j) {
                if (j == i) continue;
                for (int k = 0; k < m_; ++k) {
                    Scalar c = mu_coeff(i, j, k);
                    if (c.is_zero()) continue;
                    m(static_cast<std::size_t>(k), static_cast<std::size_t>(j)) += sp * (zi * c);
                }
            }
        }
    }
    return m;
}

CupData cup_from_presentation(const Presentation& p) {
    int n = p.rank();
    int m = static_cast<int>(p.relators.size());
    CupData c(n, m);
    std::vector<Matrix<Scalar>> classes;
    for (std::size_t k = 0; k < p.relators.size(); ++k) {
        MagnusQuad q = magnus_degree2(p.relators[k], n);
        if (!q.eps_zero())
            throw input_error("not a commutator-relator presentation: relator " +
                              std::to_string(k + 1) + " has a nonzero exponent sum");
        classes.push_back(std::move(q.c));
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            std::vector<Scalar> coeffs;
            coeffs.reserve(static_cast<std::size_t>(m));
            for (int k = 0; k < m; ++k)
                coeffs.push_back(classes[static_cast<std::size_t>(k)](static_cast<std::size_t>(i),
                                                                      static_cast<std::size_t>(j)));
            c.set_mu(i, j, std::move(coeffs));
        }
    return c;
}

CupData cup_surface(int genus, int punctures) {
    if (genus < 0 || punctures < 0) throw input_error("negative surface parameters");
    if (punctures > 0) {
        int n = 2 * genus + punctures - 1;
        return CupData(n, 0);
    }
    if (genus == 0) throw input_error("the sphere has trivial degree-one data");
    CupData c(2 * genus, 1);
    for (int g = 0; g < genus; ++g) c.set_mu(2 * g, 2 * g + 1, {Scalar(1)});
    return c;
}

CupData cup_raag(const Graph& g) {
    int n = g.vertex_count();
    int m = static_cast<int>(g.edges().size());
    CupData c(n, m);
    for (int e = 0; e < m; ++e) {
        auto [a, b] = g.edges()[static_cast<std::size_t>(e)];
        std::vector<Scalar> coeffs(static_cast<std::size_t>(m), Scalar(0));
        coeffs[static_cast<std::size_t>(e)] = Scalar(1);
        c.set_mu(a, b, std::move(coeffs));
    }
    return c;
}

CupData cup_wedge(const CupData& u, const CupData& v) {
    int n = u.h1_dim() + v.h1_dim();
    int m = u.h2_dim() + v.h2_dim();
    CupData c(n, m);
    auto pad = [&](const std::vector<Scalar>& src, int offset) {
        std::vector<Scalar> out(static_cast<std::size_t>(m), Scalar(0));
        for (std::size_t k = 0; k < src.size(); ++k) out[static_cast<std::size_t>(offset) + k] = src[k];
        return out;
    };
    for (int i = 0; i < u.h1_dim(); ++i)
        for (int j = i + 1; j < u.h1_dim(); ++j) c.set_mu(i, j, pad(u.mu_pair(i, j), 0));
    for (int i = 0; i < v.h1_dim(); ++i)
        for (int j = i + 1; j < v.h1_dim(); ++j)
            c.set_mu(u.h1_dim() + i, u.h1_dim() + j, pad(v.mu_pair(i, j), u.h2_dim()));
    return c;
}

CupData cup_product_join(const CupData& u, const CupData& v) {
    int nu = u.h1_dim(), nv = v.h1_dim();
    int m = u.h2_dim() + v.h2_dim() + nu * nv;
    CupData c(nu + nv, m);
    auto pad = [&](const std::vector<Scalar>& src, int offset) {
        std::vector<Scalar> out(static_cast<std::size_t>(m), Scalar(0));
        for (std::size_t k = 0; k < src.size(); ++k) out[static_cast<std::size_t>(offset) + k] = src[k];
        return out;
    };
    for (int i = 0; i < nu; ++i)
        for (int j = i + 1; j < nu; ++j) c.set_mu(i, j, pad(u.mu_pair(i, j), 0));
    for (int i = 0; i < nv; ++i)
        for (int j = i + 1; j < nv; ++j) c.set_mu(nu + i, nu + j, pad(v.mu_pair(i, j), u.h2_dim()));
    for (int i = 0; i < nu; ++i)
        for (int j = 0; j < nv; ++j) {
            std::vector<Scalar> coeffs(static_cast<std::size_t>(m), Scalar(0));
            coeffs[static_cast<std::size_t>(u.h2_dim() + v.h2_dim() + i * nv + j)] = Scalar(1);
            c.set_mu(i, nu + j, std::move(coeffs));
        }
    return c;
}

CupData cup_config_torus(int points) {
    if (points < 1) throw input_error("need at least one point");
    int n = points;
    int dim1 = 2 * n; // a_1, b_1, ..., a_n, b_n
    auto pair_pos = [dim1](int p, int q) { // p < q, lex pair index in Lambda^2
        return static_cast<std::size_t>(p) * static_cast<std::size_t>(dim1) -
               static_cast<std::size_t>(p) * (static_cast<std::size_t>(p) + 1) / 2 +
               static_cast<std::size_t>(q - p - 1);
    };
    std::size_t lambda2 = static_cast<std::size_t>(dim1) * static_cast<std::size_t>(dim1 - 1) / 2;

    // Diagonal classes (a_i - a_j)(b_i - b_j), expanded in the pair basis.
    std::vector<std::vector<Scalar>> diag;
    auto wedge_coord = [&](std::vector<Scalar>& row, int p, int q, long long sgn) {
        if (p < q)
            row[pair_pos(p, q)] += Scalar(sgn);
        else
            row[pair_pos(q, p)] -= Scalar(sgn);
    };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            std::vector<Scalar> row(lambda2, Scalar(0));
            int ai = 2 * i, bi = 2 * i + 1, aj = 2 * j, bj = 2 * j + 1;
            wedge_coord(row, ai, bi, 1);
            wedge_coord(row, ai, bj, -1);
            wedge_coord(row, aj, bi, -1);
            wedge_coord(row, aj, bj, 1);
            diag.push_back(std::move(row));
        }

    std::size_t ndiag = diag.size();
    std::vector<std::size_t> pivots;
    Matrix<Scalar> dm(ndiag, lambda2, Scalar(0));
    for (std::size_t i = 0; i < ndiag; ++i)
        for (std::size_t j = 0; j < lambda2; ++j) dm(i, j) = diag[i][j];
    Matrix<Scalar> red = rref(std::move(dm), &pivots);
    if (pivots.size() != ndiag)
        throw std::logic_error("diagonal classes are linearly dependent at n = " +
                               std::to_string(points));

    std::vector<bool> is_pivot(lambda2, false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::vector<std::size_t> quotient_pos(lambda2, 0);
    int m = 0;
    for (std::size_t w = 0; w < lambda2; ++w)
        if (!is_pivot[w]) quotient_pos[w] = static_cast<std::size_t>(m++);

    // proj(e_w): itself for a free column, minus the RREF tail for a pivot.
    auto project = [&](std::size_t w) {
        std::vector<Scalar> out(static_cast<std::size_t>(m), Scalar(0));
        if (!is_pivot[w]) {
            out[quotient_pos[w]] = Scalar(1);
            return out;
        }
        std::size_t k = static_cast<std::size_t>(
            std::find(pivots.begin(), pivots.end(), w) - pivots.begin());
        for (std::size_t f = 0; f < lambda2; ++f)
            if (!is_pivot[f] && !red(k, f).is_zero()) out[quotient_pos[f]] = -red(k, f);
        return out;
    };

    CupData c(dim1, m);
    for (int p = 0; p < dim1; ++p)
        for (int q = p + 1; q < dim1; ++q) c.set_mu(p, q, project(pair_pos(p, q)));
    return c;
}

Matrix<MultiPoly> infinitesimal_alexander_matrix(const CupData& c) {
    int n = c.h1_dim();
    int m = c.h2_dim();
    auto pair_pos = [n](int i, int j) {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(n) -
               static_cast<std::size_t>(i) * (static_cast<std::size_t>(i) + 1) / 2 +
               static_cast<std::size_t>(j - i - 1);
    };
    std::size_t rows = static_cast<std::size_t>(n) * (n > 0 ? static_cast<std::size_t>(n - 1) : 0) / 2;
    std::size_t triples = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) ++triples;
    Matrix<MultiPoly> nabla(rows, triples + static_cast<std::size_t>(m), MultiPoly(n));

    std::size_t col = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                nabla(pair_pos(j, k), col) += MultiPoly::variable(n, i);
                nabla(pair_pos(i, k), col) -= MultiPoly::variable(n, j);
                nabla(pair_pos(i, j), col) += MultiPoly::variable(n, k);
                ++col;
            }
    for (int r = 0; r < m; ++r) {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                Scalar coeff = c.mu_pair(i, j)[static_cast<std::size_t>(r)];
                if (!coeff.is_zero())
                    nabla(pair_pos(i, j), col) += MultiPoly::constant(n, coeff);
            }
        ++col;
    }
    return nabla;
}

LieRepData LieRepData::make(int dim_b, std::vector<std::vector<std::vector<Scalar>>> structure,
                            int dim_v, std::vector<Matrix<Scalar>> theta) {
    if (dim_b < 1 || dim_v < 1) throw input_error("Lie data dimensions must be positive");
    if (static_cast<int>(structure.size()) != dim_b ||
        static_cast<int>(theta.size()) != dim_b)
        throw input_error("Lie data arity mismatch");
    for (const auto& row : structure) {
        if (static_cast<int>(row.size()) != dim_b) throw input_error("Lie data arity mismatch");
        for (const auto& v : row)
            if (static_cast<int>(v.size()) != dim_b) throw input_error("Lie data arity mismatch");
    }
    for (const auto& t : theta)
        if (t.rows() != static_cast<std::size_t>(dim_v) || t.cols() != static_cast<std::size_t>(dim_v))
            throw input_error("representation matrix dimension mismatch");

    auto s = [&](int a, int b, int cc) { return structure[static_cast<std::size_t>(a)]
                                                         [static_cast<std::size_t>(b)]
                                                         [static_cast<std::size_t>(cc)]; };
    for (int a = 0; a < dim_b; ++a)
        for (int b = 0; b < dim_b; ++b)
            for (int cc = 0; cc < dim_b; ++cc)
                if (s(a, b, cc) != -s(b, a, cc))
                    throw input_error("structure constants are not antisymmetric");
    // Jacobi: cyclic sum of [z_a,[z_b,z_c]] vanishes.
    for (int a = 0; a < dim_b; ++a)
        for (int b = 0; b < dim_b; ++b)
            for (int cc = 0; cc < dim_b; ++cc)
                for (int f = 0; f < dim_b; ++f) {
                    Scalar acc(0);
                    for (int e = 0; e < dim_b; ++e) {
                        acc += s(b, cc, e) * s(a, e, f);
                        acc += s(cc, a, e) * s(b, e, f);
                        acc += s(a, b, e) * s(cc, e, f);
                    }
                    if (!acc.is_zero()) throw input_error("structure constants violate Jacobi");
                }
    // theta is a Lie homomorphism on basis pairs.
    for (int a = 0; a < dim_b; ++a)
        for (int b = 0; b < dim_b; ++b) {
            Matrix<Scalar> lhs = matmul(theta[static_cast<std::size_t>(a)],
                                        theta[static_cast<std::size_t>(b)], Scalar(0));
            Matrix<Scalar> rhs = matmul(theta[static_cast<std::size_t>(b)],
                                        theta[static_cast<std::size_t>(a)], Scalar(0));
            for (std::size_t i = 0; i < lhs.rows(); ++i)
                for (std::size_t j = 0; j < lhs.cols(); ++j) {
                    Scalar want(0);
                    for (int cc = 0; cc < dim_b; ++cc)
                        want += s(a, b, cc) * theta[static_cast<std::size_t>(cc)](i, j);
                    if (lhs(i, j) - rhs(i, j) != want)
                        throw input_error("representation is not a Lie homomorphism");
                }
        }

    LieRepData d;
    d.dim_b_ = dim_b;
    d.dim_v_ = dim_v;
    d.structure_ = std::move(structure);
    d.theta_ = std::move(theta);
    return d;
}

LieRepData LieRepData::abelian_line() {
    Matrix<Scalar> id(1, 1, Scalar(1));
    return make(1, {{{Scalar(0)}}}, 1, {id});
}

} // namespace jumploci
