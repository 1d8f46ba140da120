#include "jumploci/linalg.hpp"

#include <algorithm>
#include <numeric>

namespace jumploci {

namespace {

// Scale each row to integral entries (lcm of coordinate denominators) so the
// Bareiss recurrence stays in Z[sqrt(d)] and intermediate growth is bounded.
void clear_denominators(Matrix<Scalar>& a) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::gcd;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        BigInt l = 1;
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Scalar& s = a(i, j);
            for (const Rational* r : {&s.rational_part(), &s.radical_part()}) {
                BigInt d = denominator(*r);
                l = l / gcd(l, d) * d;
            }
        }
        if (l == 1) continue;
        Scalar f{Rational(l)};
        for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) *= f;
    }
}

bool all_rational(const Matrix<Scalar>& a) {
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (!a(i, j).is_rational()) return false;
    return true;
}

// Exact quotient in Z; Bareiss guarantees divisibility.
BigInt exact_div(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    boost::multiprecision::divide_qr(a, b, q, r);
    if (r != 0) throw std::logic_error("inexact division in fraction-free elimination");
    return q;
}

struct IntEchelon {
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_cols;
    std::vector<std::vector<BigInt>> m;
};

// One-step fraction-free elimination over Z, avoiding the per-operation
// normalisation cost of rational arithmetic. With jordan set, rows above the
// pivot are updated too; the final pivot entries then all equal the last
// pivot, so dividing by it yields the reduced echelon form.
IntEchelon bareiss_int(const Matrix<Scalar>& a, bool jordan) {
    IntEchelon out;
    out.m.assign(a.rows(), std::vector<BigInt>(a.cols()));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out.m[i][j] = boost::multiprecision::numerator(a(i, j).rational_part());
    auto& b = out.m;
    BigInt prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t pr = r;
        while (pr < a.rows() && b[pr][c] == 0) ++pr;
        if (pr == a.rows()) continue;
        std::swap(b[r], b[pr]);
        // the jordan sweep must cover columns left of c too: entries in
        // earlier pivot columns rescale from the old pivot to the new one
        for (std::size_t i = jordan ? 0 : r + 1; i < a.rows(); ++i) {
            if (i == r) continue;
            for (std::size_t j = jordan ? 0 : c + 1; j < a.cols(); ++j) {
                if (j == c) continue;
                b[i][j] = exact_div(b[i][j] * b[r][c] - b[i][c] * b[r][j], prev);
            }
            b[i][c] = 0;
        }
        prev = b[r][c];
        out.pivot_cols.push_back(c);
        ++r;
    }
    out.rank = r;
    return out;
}

struct Echelon {
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_cols;
    Matrix<Scalar> m;
};

Echelon bareiss_echelon(Matrix<Scalar> a) {
    clear_denominators(a);
    Echelon out;
    Scalar prev(1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t pr = r;
        while (pr < a.rows() && a(pr, c).is_zero()) ++pr;
        if (pr == a.rows()) continue;
        a.swap_rows(r, pr);
        for (std::size_t i = r + 1; i < a.rows(); ++i) {
            for (std::size_t j = c + 1; j < a.cols(); ++j)
                a(i, j) = (a(i, j) * a(r, c) - a(i, c) * a(r, j)) / prev;
            a(i, c) = Scalar(0);
        }
        prev = a(r, c);
        out.pivot_cols.push_back(c);
        ++r;
    }
    out.rank = r;
    out.m = std::move(a);
    return out;
}

} // namespace

std::size_t rank_of(const Matrix<Scalar>& m) {
    if (all_rational(m)) {
        Matrix<Scalar> cleared = m;
        clear_denominators(cleared);
        return bareiss_int(cleared, false).rank;
    }
    return bareiss_echelon(m).rank;
}

Matrix<Scalar> rref(Matrix<Scalar> m, std::vector<std::size_t>* pivots) {
    if (all_rational(m)) {
        clear_denominators(m);
        IntEchelon e = bareiss_int(m, true);
        Matrix<Scalar> out(m.rows(), m.cols(), Scalar(0));
        // every pivot entry equals the final pivot; one rational division
        // per entry recovers the reduced form (denominator kept positive)
        BigInt d = e.rank > 0 ? e.m[e.rank - 1][e.pivot_cols[e.rank - 1]] : BigInt(1);
        BigInt sign = d < 0 ? BigInt(-1) : BigInt(1);
        for (std::size_t i = 0; i < e.rank; ++i)
            for (std::size_t j = 0; j < m.cols(); ++j)
                if (e.m[i][j] != 0) out(i, j) = Scalar(Rational(sign * e.m[i][j], sign * d));
        if (pivots) *pivots = e.pivot_cols;
        return out;
    }
    Echelon e = bareiss_echelon(std::move(m));
    Matrix<Scalar>& a = e.m;
    for (std::size_t k = e.rank; k-- > 0;) {
        std::size_t pc = e.pivot_cols[k];
        Scalar inv = a(k, pc).inverse();
        for (std::size_t j = pc; j < a.cols(); ++j) a(k, j) *= inv;
        for (std::size_t i = 0; i < k; ++i) {
            Scalar f = a(i, pc);
            if (f.is_zero()) continue;
            for (std::size_t j = pc; j < a.cols(); ++j) a(i, j) -= f * a(k, j);
        }
    }
    if (pivots) *pivots = e.pivot_cols;
    return a;
}

RankKernel rank_and_kernel(const Matrix<Scalar>& m) {
    std::vector<std::size_t> pivots;
    Matrix<Scalar> r = rref(m, &pivots);
    RankKernel out;
    out.rank = pivots.size();

    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Scalar>> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<Scalar> v(m.cols(), Scalar(0));
        v[f] = Scalar(1);
        for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r(k, f);
        basis.push_back(std::move(v));
    }
    if (!basis.empty()) {
        Matrix<Scalar> kb(basis.size(), m.cols());
        for (std::size_t i = 0; i < basis.size(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) kb(i, j) = basis[i][j];
        Matrix<Scalar> kr = rref(std::move(kb));
        for (std::size_t i = 0; i < basis.size(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) basis[i][j] = kr(i, j);
    }
    out.kernel = std::move(basis);
    return out;
}

std::size_t poly_rank(Matrix<MultiPoly> a) {
    int nv = 0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) nv = std::max(nv, a(i, j).nvars());
    MultiPoly prev = MultiPoly::constant(std::max(nv, 0), Scalar(1));
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t pr = r;
        while (pr < a.rows() && a(pr, c).is_zero()) ++pr;
        if (pr == a.rows()) continue;
        a.swap_rows(r, pr);
        for (std::size_t i = r + 1; i < a.rows(); ++i) {
            for (std::size_t j = c + 1; j < a.cols(); ++j)
                a(i, j) = (a(i, j) * a(r, c) - a(i, c) * a(r, j)).divided_by(prev);
            a(i, c) = MultiPoly(nv);
        }
        prev = a(r, c);
        ++r;
    }
    return r;
}

MultiPoly poly_det(const Matrix<MultiPoly>& m) {
    if (m.rows() != m.cols()) throw input_error("determinant of a non-square matrix");
    int nv = 0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) nv = std::max(nv, m(i, j).nvars());
    std::vector<std::size_t> rows(m.rows()), cols(m.cols());
    std::iota(rows.begin(), rows.end(), 0);
    std::iota(cols.begin(), cols.end(), 0);

    auto rec = [&](auto&& self, std::vector<std::size_t>& rs, std::vector<std::size_t>& cs) -> MultiPoly {
        if (rs.empty()) return MultiPoly::constant(nv, Scalar(1));
        if (rs.size() == 1) return m(rs[0], cs[0]);
        // expand along the sparsest remaining row
        std::size_t best = 0, best_nonzero = cs.size() + 1;
        for (std::size_t i = 0; i < rs.size(); ++i) {
            std::size_t nz = 0;
            for (std::size_t c : cs) nz += m(rs[i], c).is_zero() ? 0u : 1u;
            if (nz < best_nonzero) {
                best_nonzero = nz;
                best = i;
            }
        }
        MultiPoly acc(nv);
        std::vector<std::size_t> rs2 = rs;
        rs2.erase(rs2.begin() + static_cast<std::ptrdiff_t>(best));
        for (std::size_t jc = 0; jc < cs.size(); ++jc) {
            const MultiPoly& entry = m(rs[best], cs[jc]);
            if (entry.is_zero()) continue;
            std::vector<std::size_t> cs2 = cs;
            cs2.erase(cs2.begin() + static_cast<std::ptrdiff_t>(jc));
            MultiPoly sub = self(self, rs2, cs2);
            MultiPoly term = entry * sub;
            if ((best + jc) % 2 == 1) term = -term;
            acc += term;
        }
        return acc;
    };
    return rec(rec, rows, cols);
}

std::vector<std::vector<std::size_t>> index_subsets(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    if (k > n) return out;
    std::vector<std::size_t> cur(k);
    std::iota(cur.begin(), cur.end(), 0);
    while (true) {
        out.push_back(cur);
        // advance to the lexicographically next k-subset
        std::size_t i = k;
        while (i-- > 0) {
            if (cur[i] != i + n - k) {
                ++cur[i];
                for (std::size_t j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
                break;
            }
            if (i == 0) return out;
        }
        if (k == 0) return out;
    }
}

std::vector<MultiPoly> minors(const Matrix<MultiPoly>& m, std::size_t size) {
    if (size > m.rows() || size > m.cols())
        throw input_error("minor size exceeds matrix dimensions");
    int nv = 0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) nv = std::max(nv, m(i, j).nvars());
    std::vector<MultiPoly> out;
    for (const auto& rs : index_subsets(m.rows(), size))
        for (const auto& cs : index_subsets(m.cols(), size)) {
            Matrix<MultiPoly> sub = m.submatrix(rs, cs);
            for (std::size_t i = 0; i < sub.rows(); ++i)
                for (std::size_t j = 0; j < sub.cols(); ++j)
                    if (sub(i, j).nvars() == 0) sub(i, j) = MultiPoly(nv);
            out.push_back(poly_det(sub));
        }
    return out;
}

} // namespace jumploci
