#include "jumploci/charvar.hpp"

#include <algorithm>
#include <string>

#include "jumploci/linalg.hpp"

namespace jumploci {

Character Character::make(std::vector<Scalar> coords) {
    for (const Scalar& c : coords)
        if (c.is_zero()) throw input_error("character coordinates must be nonzero");
    return Character{std::move(coords)};
}

Character Character::trivial(int n) {
    return Character{std::vector<Scalar>(static_cast<std::size_t>(n), Scalar(1))};
}

bool Character::is_trivial() const {
    return std::all_of(t.begin(), t.end(), [](const Scalar& c) { return c.is_one(); });
}

Scalar Character::operator()(const GroupWord& w) const {
    Scalar v(1);
    for (const Letter& l : w.letters()) {
        if (l.gen < 0 || l.gen >= rank()) throw input_error("generator index out of range");
        v *= l.exp == 1 ? t[static_cast<std::size_t>(l.gen)]
                        : t[static_cast<std::size_t>(l.gen)].inverse();
    }
    return v;
}

Matrix<Scalar> fox_jacobian(const Presentation& p, const Character& rho) {
    int n = p.rank();
    if (rho.rank() != n) throw input_error("character rank mismatch");
    Matrix<Scalar> m(p.relators.size(), static_cast<std::size_t>(n), Scalar(0));
    for (std::size_t j = 0; j < p.relators.size(); ++j)
        for (int i = 0; i < n; ++i)
            m(j, static_cast<std::size_t>(i)) =
                fox_derivative_ab(p.relators[j], i, n).eval(rho.t);
    return m;
}

int twisted_b1(const Presentation& p, const Character& rho) {
    int n = p.rank();
    if (rho.rank() != n) throw input_error("character rank mismatch");
    for (std::size_t j = 0; j < p.relators.size(); ++j)
        if (!rho(p.relators[j]).is_one())
            throw input_error("character does not vanish on relator " + std::to_string(j + 1));
    int ker_d1 = n - (rho.is_trivial() ? 0 : 1);
    Matrix<Scalar> d2 = fox_jacobian(p, rho).transpose();
    return ker_d1 - static_cast<int>(rank_of(d2));
}

bool charvar_member(const Presentation& p, const Character& rho, int k) {
    if (k < 1) throw input_error("jump depth must be >= 1");
    return twisted_b1(p, rho) >= k;
}

Matrix<MultiPoly> alexander_matrix(const Presentation& p) {
    int n = p.rank();
    Matrix<MultiPoly> m(p.relators.size(), static_cast<std::size_t>(n), MultiPoly(n));
    for (std::size_t j = 0; j < p.relators.size(); ++j)
        for (int i = 0; i < n; ++i)
            m(j, static_cast<std::size_t>(i)) = fox_derivative_ab(p.relators[j], i, n);
    return m;
}

std::vector<MultiPoly> charvar_minors(const Presentation& p, int k) {
    int n = p.rank();
    if (k < 1 || k > n - 1) throw input_error("jump depth out of range 1..n-1");
    std::size_t size = static_cast<std::size_t>(n - k);
    Matrix<MultiPoly> m = alexander_matrix(p);
    if (size > m.rows()) return {};
    return minors(m, size);
}

} // namespace jumploci
