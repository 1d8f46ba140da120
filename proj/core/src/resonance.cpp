#include "jumploci/resonance.hpp"

#include <algorithm>

#include "jumploci/linalg.hpp"

namespace jumploci {

Subspace Subspace::span(int ambient, const std::vector<std::vector<Scalar>>& vectors) {
    Subspace s(ambient);
    if (vectors.empty()) return s;
    Matrix<Scalar> m(vectors.size(), static_cast<std::size_t>(ambient), Scalar(0));
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        if (static_cast<int>(vectors[i].size()) != ambient)
            throw input_error("spanning vector dimension mismatch");
        for (std::size_t j = 0; j < static_cast<std::size_t>(ambient); ++j) m(i, j) = vectors[i][j];
    }
    std::vector<std::size_t> pivots;
    Matrix<Scalar> r = rref(std::move(m), &pivots);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        std::vector<Scalar> row(static_cast<std::size_t>(ambient));
        for (std::size_t j = 0; j < row.size(); ++j) row[j] = r(i, j);
        s.basis_.push_back(std::move(row));
    }
    return s;
}

Subspace Subspace::kernel_of(int ambient, const std::vector<std::vector<Scalar>>& constraints) {
    if (constraints.empty()) {
        // whole space
        std::vector<std::vector<Scalar>> id;
        for (int i = 0; i < ambient; ++i) {
            std::vector<Scalar> v(static_cast<std::size_t>(ambient), Scalar(0));
            v[static_cast<std::size_t>(i)] = Scalar(1);
            id.push_back(std::move(v));
        }
        return span(ambient, id);
    }
    Matrix<Scalar> m(constraints.size(), static_cast<std::size_t>(ambient), Scalar(0));
    for (std::size_t i = 0; i < constraints.size(); ++i) {
        if (static_cast<int>(constraints[i].size()) != ambient)
            throw input_error("constraint dimension mismatch");
        for (std::size_t j = 0; j < static_cast<std::size_t>(ambient); ++j) m(i, j) = constraints[i][j];
    }
    Subspace s(ambient);
    s.basis_ = rank_and_kernel(m).kernel;
    return s;
}

bool Subspace::contains(std::span<const Scalar> v) const {
    if (static_cast<int>(v.size()) != ambient_) throw input_error("vector dimension mismatch");
    // reduce v against the echelon basis
    std::vector<Scalar> r(v.begin(), v.end());
    for (const auto& row : basis_) {
        std::size_t lead = 0;
        while (lead < row.size() && row[lead].is_zero()) ++lead;
        if (lead == row.size()) continue;
        if (r[lead].is_zero()) continue;
        Scalar f = r[lead] / row[lead];
        for (std::size_t j = lead; j < r.size(); ++j) r[j] -= f * row[j];
    }
    return std::all_of(r.begin(), r.end(), [](const Scalar& x) { return x.is_zero(); });
}

bool Subspace::contains(const Subspace& other) const {
    if (ambient_ != other.ambient_) throw input_error("ambient dimension mismatch");
    for (const auto& v : other.basis_)
        if (!contains(v)) return false;
    return true;
}

Subspace Subspace::intersect(const Subspace& other) const {
    if (ambient_ != other.ambient_) throw input_error("ambient dimension mismatch");
    if (dim() == 0 || other.dim() == 0) return Subspace(ambient_);
    // Solve A s = B t: kernel of [A^T | -B^T] gives the coefficient pairs.
    std::size_t a = basis_.size(), b = other.basis_.size();
    Matrix<Scalar> m(static_cast<std::size_t>(ambient_), a + b, Scalar(0));
    for (std::size_t i = 0; i < a; ++i)
        for (std::size_t r = 0; r < static_cast<std::size_t>(ambient_); ++r) m(r, i) = basis_[i][r];
    for (std::size_t i = 0; i < b; ++i)
        for (std::size_t r = 0; r < static_cast<std::size_t>(ambient_); ++r)
            m(r, a + i) = -other.basis_[i][r];
    RankKernel rk = rank_and_kernel(m);
    std::vector<std::vector<Scalar>> vecs;
    for (const auto& coeff : rk.kernel) {
        std::vector<Scalar> v(static_cast<std::size_t>(ambient_), Scalar(0));
        for (std::size_t i = 0; i < a; ++i)
            for (std::size_t r = 0; r < v.size(); ++r) v[r] += coeff[i] * basis_[i][r];
        vecs.push_back(std::move(v));
    }
    return span(ambient_, vecs);
}

bool Subspace::is_rational() const {
    for (const auto& row : basis_)
        for (const Scalar& x : row)
            if (!x.is_rational()) return false;
    return true;
}

int Subspace::compare(const Subspace& a, const Subspace& b) {
    if (a.ambient_ != b.ambient_) return a.ambient_ < b.ambient_ ? -1 : 1;
    if (a.dim() != b.dim()) return a.dim() > b.dim() ? -1 : 1; // larger first
    for (std::size_t i = 0; i < a.basis_.size(); ++i)
        for (std::size_t j = 0; j < a.basis_[i].size(); ++j) {
            int c = Scalar::compare_key(a.basis_[i][j], b.basis_[i][j]);
            if (c != 0) return c;
        }
    return 0;
}

int aomoto_h1_dim(const CupData& c, std::span<const Scalar> z) {
    Matrix<Scalar> m = c.multiplication_matrix(z);
    bool zero = std::all_of(z.begin(), z.end(), [](const Scalar& x) { return x.is_zero(); });
    int ker = c.h1_dim() - static_cast<int>(rank_of(m));
    return ker - (zero ? 0 : 1);
}

bool resonance_member(const CupData& c, std::span<const Scalar> z, int k) {
    if (k < 1) throw input_error("resonance depth must be >= 1");
    return aomoto_h1_dim(c, z) >= k;
}

bool resonance_contains_subspace(const CupData& c, const Subspace& L, int k) {
    if (k < 1) throw input_error("resonance depth must be >= 1");
    if (L.ambient() != c.h1_dim()) throw input_error("ambient dimension mismatch");
    int n = c.h1_dim();
    if (k > n) return false; // R_k is empty
    if (L.dim() == 0) return true; // the origin lies in R_k whenever k <= n
    Matrix<MultiPoly> m = c.multiplication_matrix_parametrized(L.basis());
    // Generic rank bounds the rank at every point, so the identical-vanishing
    // condition on the (n-k)-minors is exactly generic rank <= n - k - 1.
    return static_cast<int>(poly_rank(std::move(m))) <= n - k - 1;
}

std::vector<MultiPoly> resonance_minors(const CupData& c, int k) {
    int n = c.h1_dim();
    if (k < 1 || k > n - 1) throw input_error("resonance depth out of range 1..n-1");
    std::size_t size = static_cast<std::size_t>(n - k);
    Matrix<MultiPoly> m = c.multiplication_matrix_symbolic();
    if (size > m.rows()) return {};
    return minors(m, size);
}

bool quadratic_cone_member(const CupData& c, const LieRepData& rep, const Matrix<Scalar>& x) {
    int n = c.h1_dim();
    if (x.rows() != static_cast<std::size_t>(n) ||
        x.cols() != static_cast<std::size_t>(rep.dim_b()))
        throw input_error("cone point dimension mismatch");
    for (int k = 0; k < c.h2_dim(); ++k)
        for (int cc = 0; cc < rep.dim_b(); ++cc) {
            Scalar acc(0);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    if (i == j) continue;
                    Scalar mu = c.mu_coeff(i, j, k);
                    if (mu.is_zero()) continue;
                    for (int a = 0; a < rep.dim_b(); ++a) {
                        const Scalar& xa = x(static_cast<std::size_t>(i), static_cast<std::size_t>(a));
                        if (xa.is_zero()) continue;
                        for (int b = 0; b < rep.dim_b(); ++b) {
                            const Scalar& sc = rep.bracket(a, b)[static_cast<std::size_t>(cc)];
                            if (sc.is_zero()) continue;
                            acc += xa * x(static_cast<std::size_t>(j), static_cast<std::size_t>(b)) *
                                   mu * sc;
                        }
                    }
                }
            if (!acc.is_zero()) return false;
        }
    return true;
}

int relative_aomoto_h1(const CupData& c, const LieRepData& rep, const Matrix<Scalar>& x) {
    if (!quadratic_cone_member(c, rep, x))
        throw input_error("point lies outside the quadratic cone");
    int n = c.h1_dim();
    int m = c.h2_dim();
    int dv = rep.dim_v();

    // Theta_i = sum_a x(i,a) theta_a acts on V.
    std::vector<Matrix<Scalar>> big_theta;
    for (int i = 0; i < n; ++i) {
        Matrix<Scalar> t(static_cast<std::size_t>(dv), static_cast<std::size_t>(dv), Scalar(0));
        for (int a = 0; a < rep.dim_b(); ++a) {
            const Scalar& xa = x(static_cast<std::size_t>(i), static_cast<std::size_t>(a));
            if (xa.is_zero()) continue;
            for (std::size_t r = 0; r < t.rows(); ++r)
                for (std::size_t s = 0; s < t.cols(); ++s) t(r, s) += rep.theta(a)(r, s) * xa;
        }
        big_theta.push_back(std::move(t));
    }

    // d0 : V -> H^1 (x) V, block i equals Theta_i.
    Matrix<Scalar> d0(static_cast<std::size_t>(n * dv), static_cast<std::size_t>(dv), Scalar(0));
    for (int i = 0; i < n; ++i)
        for (int r = 0; r < dv; ++r)
            for (int s = 0; s < dv; ++s)
                d0(static_cast<std::size_t>(i * dv + r), static_cast<std::size_t>(s)) =
                    big_theta[static_cast<std::size_t>(i)](static_cast<std::size_t>(r),
                                                           static_cast<std::size_t>(s));

    // d1 : H^1 (x) V -> H^2 (x) V, block (k, j) equals sum_i mu(i,j)_k Theta_i.
    Matrix<Scalar> d1(static_cast<std::size_t>(m * dv), static_cast<std::size_t>(n * dv), Scalar(0));
    for (int k = 0; k < m; ++k)
        for (int j = 0; j < n; ++j) {
            Matrix<Scalar> block(static_cast<std::size_t>(dv), static_cast<std::size_t>(dv), Scalar(0));
            for (int i = 0; i < n; ++i) {
                if (i == j) continue;
                Scalar mu = c.mu_coeff(i, j, k);
                if (mu.is_zero()) continue;
                for (int r = 0; r < dv; ++r)
                    for (int s = 0; s < dv; ++s)
                        block(static_cast<std::size_t>(r), static_cast<std::size_t>(s)) +=
                            big_theta[static_cast<std::size_t>(i)](static_cast<std::size_t>(r),
                                                                   static_cast<std::size_t>(s)) *
                            mu;
            }
            for (int r = 0; r < dv; ++r)
                for (int s = 0; s < dv; ++s)
                    d1(static_cast<std::size_t>(k * dv + r), static_cast<std::size_t>(j * dv + s)) =
                        block(static_cast<std::size_t>(r), static_cast<std::size_t>(s));
        }

    // Chain check on the cone.
    Matrix<Scalar> comp = matmul(d1, d0, Scalar(0));
    for (std::size_t i = 0; i < comp.rows(); ++i)
        for (std::size_t j = 0; j < comp.cols(); ++j)
            if (!comp(i, j).is_zero()) throw std::logic_error("Aomoto differentials do not compose to zero");

    int ker_d1 = n * dv - static_cast<int>(rank_of(d1));
    return ker_d1 - static_cast<int>(rank_of(d0));
}

} // namespace jumploci
