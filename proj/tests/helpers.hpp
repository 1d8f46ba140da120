#pragma once

#include <random>
#include <vector>

#include "jumploci/cupdata.hpp"
#include "jumploci/resonance.hpp"
#include "jumploci/words.hpp"

namespace testutil {

using namespace jumploci;

inline Rational random_rational(std::mt19937_64& rng, int num_bound = 9, int den_bound = 4) {
    std::uniform_int_distribution<int> num(-num_bound, num_bound);
    std::uniform_int_distribution<int> den(1, den_bound);
    return Rational(num(rng), den(rng));
}

inline Scalar random_scalar(std::mt19937_64& rng) { return Scalar(random_rational(rng)); }

inline Scalar random_nonzero_scalar(std::mt19937_64& rng) {
    Scalar s = random_scalar(rng);
    while (s.is_zero()) s = random_scalar(rng);
    return s;
}

inline std::vector<Scalar> random_vector(std::mt19937_64& rng, int n) {
    std::vector<Scalar> v(static_cast<std::size_t>(n));
    for (auto& c : v) c = random_scalar(rng);
    return v;
}

inline std::vector<Scalar> random_nonzero_vector(std::mt19937_64& rng, int n) {
    auto v = random_vector(rng, n);
    bool nz = false;
    for (auto& c : v) nz = nz || !c.is_zero();
    if (!nz) v[static_cast<std::size_t>(rng() % static_cast<std::uint64_t>(n))] = Scalar(1);
    return v;
}

inline GroupWord random_word(std::mt19937_64& rng, int ngens, int len) {
    std::vector<Letter> letters;
    std::uniform_int_distribution<int> gen(0, ngens - 1);
    std::uniform_int_distribution<int> sgn(0, 1);
    for (int i = 0; i < len; ++i) letters.push_back({gen(rng), sgn(rng) ? 1 : -1});
    return GroupWord::from_letters(std::move(letters));
}

/// Words with zero exponent sums: products of commutators of random words.
inline GroupWord random_commutator_word(std::mt19937_64& rng, int ngens, int pieces = 2) {
    GroupWord w;
    for (int p = 0; p < pieces; ++p) {
        GroupWord u = random_word(rng, ngens, 3);
        GroupWord v = random_word(rng, ngens, 3);
        w = w * (u * v * u.inverse() * v.inverse());
    }
    return w;
}

/// A small pool of cup data from the builder families.
inline std::vector<CupData> builder_pool() {
    std::vector<CupData> pool;
    pool.push_back(cup_surface(1, 0));
    pool.push_back(cup_surface(2, 0));
    pool.push_back(cup_surface(0, 3));
    pool.push_back(cup_surface(1, 2));
    pool.push_back(cup_wedge(cup_surface(1, 0), cup_surface(0, 3)));
    pool.push_back(cup_product_join(cup_surface(0, 3), cup_surface(0, 3)));
    pool.push_back(cup_config_torus(2));
    return pool;
}

inline Matrix<Scalar> eval_poly_matrix(const Matrix<MultiPoly>& m, std::span<const Scalar> z) {
    Matrix<Scalar> out(m.rows(), m.cols(), Scalar(0));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out(i, j) = m(i, j).nvars() == 0 ? Scalar(0) : m(i, j).eval(z);
    return out;
}

/// sl(2): basis h, e, f with [h,e] = 2e, [h,f] = -2f, [e,f] = h, acting on
/// column vectors of C^2.
inline LieRepData sl2_standard() {
    auto vec = [](long long a, long long b, long long c) {
        return std::vector<Scalar>{Scalar(a), Scalar(b), Scalar(c)};
    };
    std::vector<std::vector<std::vector<Scalar>>> s(3,
        std::vector<std::vector<Scalar>>(3, vec(0, 0, 0)));
    s[0][1] = vec(0, 2, 0);
    s[1][0] = vec(0, -2, 0);
    s[0][2] = vec(0, 0, -2);
    s[2][0] = vec(0, 0, 2);
    s[1][2] = vec(1, 0, 0);
    s[2][1] = vec(-1, 0, 0);
    Matrix<Scalar> h(2, 2, Scalar(0)), e(2, 2, Scalar(0)), f(2, 2, Scalar(0));
    h(0, 0) = Scalar(1);
    h(1, 1) = Scalar(-1);
    e(0, 1) = Scalar(1);
    f(1, 0) = Scalar(1);
    return LieRepData::make(3, std::move(s), 2, {h, e, f});
}

} // namespace testutil
