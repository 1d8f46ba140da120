#include "jumploci/tangentcone.hpp"

#include <algorithm>
#include <random>

#include "jumploci/charvar.hpp"
#include "jumploci/linalg.hpp"

namespace jumploci {

SubspaceArrangement SubspaceArrangement::from_parts(int ambient, std::vector<Subspace> parts) {
    for (const Subspace& s : parts)
        if (s.ambient() != ambient) throw input_error("ambient dimension mismatch");
    // drop subspaces contained in another (keeping the first of equal pairs)
    std::vector<Subspace> kept;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < parts.size() && !redundant; ++j) {
            if (i == j) continue;
            if (parts[j].contains(parts[i]) && !(parts[i].contains(parts[j]) && i < j))
                redundant = true;
        }
        if (!redundant) kept.push_back(parts[i]);
    }
    std::sort(kept.begin(), kept.end(),
              [](const Subspace& a, const Subspace& b) { return Subspace::compare(a, b) < 0; });
    kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
    SubspaceArrangement arr(ambient);
    arr.parts_ = std::move(kept);
    return arr;
}

SubspaceArrangement SubspaceArrangement::whole_space(int ambient) {
    std::vector<std::vector<Scalar>> id;
    for (int i = 0; i < ambient; ++i) {
        std::vector<Scalar> v(static_cast<std::size_t>(ambient), Scalar(0));
        v[static_cast<std::size_t>(i)] = Scalar(1);
        id.push_back(std::move(v));
    }
    return from_parts(ambient, {Subspace::span(ambient, id)});
}

bool SubspaceArrangement::contains_point(std::span<const Scalar> z) const {
    return std::any_of(parts_.begin(), parts_.end(),
                       [&](const Subspace& s) { return s.contains(z); });
}

SubspaceArrangement SubspaceArrangement::intersect(const SubspaceArrangement& other) const {
    if (ambient_ != other.ambient_) throw input_error("ambient dimension mismatch");
    std::vector<Subspace> parts;
    for (const Subspace& a : parts_)
        for (const Subspace& b : other.parts_) parts.push_back(a.intersect(b));
    return from_parts(ambient_, std::move(parts));
}

SubspaceArrangement tau1_single(const MultiPoly& f, int support_bound) {
    int n = f.nvars();
    if (f.is_zero()) return SubspaceArrangement::whole_space(n);
    std::vector<Exponents> support;
    std::vector<Scalar> coeff;
    for (const auto& [e, c] : f.terms()) {
        support.push_back(e);
        coeff.push_back(c);
    }
    int sz = static_cast<int>(support.size());
    if (sz > support_bound)
        throw resource_error("support size " + std::to_string(sz) + " exceeds the bound " +
                             std::to_string(support_bound));

    std::vector<Subspace> parts;
    std::vector<int> assign(static_cast<std::size_t>(sz), -1);
    std::vector<Scalar> block_sum;

    // Restricted-growth enumeration of set partitions. A block whose running
    // sum is nonzero still needs elements, so open deficits bound the search.
    auto rec = [&](auto&& self, int idx, int blocks) -> void {
        if (idx == sz) {
            for (const Scalar& s : block_sum)
                if (!s.is_zero()) return;
            std::vector<std::vector<Scalar>> constraints;
            for (int b = 0; b < blocks; ++b) {
                const Exponents* first = nullptr;
                for (int i = 0; i < sz; ++i) {
                    if (assign[static_cast<std::size_t>(i)] != b) continue;
                    if (!first) {
                        first = &support[static_cast<std::size_t>(i)];
                        continue;
                    }
                    std::vector<Scalar> row(static_cast<std::size_t>(n), Scalar(0));
                    for (int v = 0; v < n; ++v)
                        row[static_cast<std::size_t>(v)] =
                            Scalar((*first)[static_cast<std::size_t>(v)] -
                                   support[static_cast<std::size_t>(i)][static_cast<std::size_t>(v)]);
                    constraints.push_back(std::move(row));
                }
            }
            parts.push_back(Subspace::kernel_of(n, constraints));
            return;
        }
        int open = 0;
        for (int b = 0; b < blocks; ++b)
            if (!block_sum[static_cast<std::size_t>(b)].is_zero()) ++open;
        int remaining = sz - idx;
        if (open > remaining) return;
        for (int b = 0; b <= blocks && b < sz; ++b) {
            bool fresh = b == blocks;
            assign[static_cast<std::size_t>(idx)] = b;
            if (fresh) block_sum.push_back(coeff[static_cast<std::size_t>(idx)]);
            else block_sum[static_cast<std::size_t>(b)] += coeff[static_cast<std::size_t>(idx)];
            self(self, idx + 1, fresh ? blocks + 1 : blocks);
            if (fresh) block_sum.pop_back();
            else block_sum[static_cast<std::size_t>(b)] -= coeff[static_cast<std::size_t>(idx)];
            assign[static_cast<std::size_t>(idx)] = -1;
        }
    };
    rec(rec, 0, 0);
    return SubspaceArrangement::from_parts(n, std::move(parts));
}

SubspaceArrangement tau1_ideal(std::span<const MultiPoly> polys, int ambient, int support_bound) {
    SubspaceArrangement acc = SubspaceArrangement::whole_space(ambient);
    for (const MultiPoly& f : polys) {
        if (f.nvars() != ambient && !(f.is_zero() && f.nvars() == 0))
            throw input_error("polynomial arity differs from the ambient dimension");
        acc = acc.intersect(tau1_single(f.nvars() == ambient ? f : MultiPoly(ambient),
                                        support_bound));
        if (acc.empty()) break;
    }
    return acc;
}

namespace {

Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 4);
    return Rational(num(rng), den(rng));
}

std::vector<Scalar> random_point(std::mt19937_64& rng, int n) {
    std::vector<Scalar> z(static_cast<std::size_t>(n));
    bool nonzero = false;
    for (auto& c : z) {
        c = Scalar(random_rational(rng));
        nonzero = nonzero || !c.is_zero();
    }
    if (!nonzero && n > 0) z[0] = Scalar(1);
    return z;
}

std::vector<Scalar> random_combination(std::mt19937_64& rng,
                                       const std::vector<std::vector<Scalar>>& basis, int n) {
    std::vector<Scalar> z(static_cast<std::size_t>(n), Scalar(0));
    for (const auto& v : basis) {
        Scalar c{random_rational(rng)};
        for (std::size_t i = 0; i < z.size(); ++i) z[i] += c * v[i];
    }
    return z;
}

} // namespace

ConeCompareReport tangent_cone_compare(std::span<const MultiPoly> char_minors, const CupData& c,
                                       int k, int samples, std::uint64_t seed, int support_bound) {
    int n = c.h1_dim();
    ConeCompareReport report;
    report.k = k;
    report.tangent_cone = tau1_ideal(char_minors, n, support_bound);

    for (std::size_t i = 0; i < report.tangent_cone.parts().size(); ++i) {
        if (!resonance_contains_subspace(c, report.tangent_cone.parts()[i], k)) {
            report.verdict = ConeCompareVerdict::incomparable;
            report.uncontained_component = i;
            return report;
        }
    }

    std::mt19937_64 rng(seed);
    auto consider = [&](const std::vector<Scalar>& z) {
        bool zero = std::all_of(z.begin(), z.end(), [](const Scalar& s) { return s.is_zero(); });
        if (zero) return;
        if (resonance_member(c, z, k) && !report.tangent_cone.contains_point(z))
            report.extra_points.push_back(z);
    };
    for (int s = 0; s < samples; ++s) consider(random_point(rng, n));
    const auto& parts = report.tangent_cone.parts();
    for (std::size_t a = 0; a < parts.size(); ++a)
        for (std::size_t b = a + 1; b < parts.size(); ++b) {
            std::vector<std::vector<Scalar>> joint = parts[a].basis();
            joint.insert(joint.end(), parts[b].basis().begin(), parts[b].basis().end());
            for (int s = 0; s < samples; ++s) consider(random_combination(rng, joint, n));
        }

    report.verdict = report.extra_points.empty() ? ConeCompareVerdict::equal
                                                 : ConeCompareVerdict::strictly_contained;
    return report;
}

ConeCompareReport tangent_cone_compare(const Presentation& p, const CupData& c, int k, int samples,
                                       std::uint64_t seed, int support_bound) {
    std::vector<MultiPoly> ms = charvar_minors(p, k);
    if (p.rank() != c.h1_dim())
        throw input_error("presentation rank differs from the cup data dimension");
    return tangent_cone_compare(ms, c, k, samples, seed, support_bound);
}

const char* to_string(ConeCompareVerdict v) {
    switch (v) {
    case ConeCompareVerdict::equal: return "equal";
    case ConeCompareVerdict::strictly_contained: return "strictly_contained";
    case ConeCompareVerdict::incomparable: return "incomparable";
    }
    return "?";
}

} // namespace jumploci
