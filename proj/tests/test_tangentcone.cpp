#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "jumploci/fixtures.hpp"
#include "jumploci/tangentcone.hpp"

using namespace jumploci;

namespace {

// Independent enumeration: all set partitions by simple recursion, no
// pruning, kernels assembled through rank_and_kernel.
void all_partitions(std::size_t n, std::vector<std::vector<std::size_t>>& current,
                    std::vector<std::vector<std::vector<std::size_t>>>& out) {
    std::size_t next = 0;
    for (const auto& block : current) next += block.size();
    if (next == n) {
        out.push_back(current);
        return;
    }
    std::size_t nblocks = current.size();
    for (std::size_t b = 0; b < nblocks; ++b) {
        current[b].push_back(next);
        all_partitions(n, current, out);
        current[b].pop_back();
    }
    current.push_back({next});
    all_partitions(n, current, out);
    current.pop_back();
}

SubspaceArrangement tau1_oracle(const MultiPoly& f) {
    int n = f.nvars();
    std::vector<Exponents> support;
    std::vector<Scalar> coeff;
    for (const auto& [e, c] : f.terms()) {
        support.push_back(e);
        coeff.push_back(c);
    }
    std::vector<std::vector<std::vector<std::size_t>>> partitions;
    std::vector<std::vector<std::size_t>> current;
    all_partitions(support.size(), current, partitions);
    std::vector<Subspace> parts;
    for (const auto& partition : partitions) {
        bool good = true;
        for (const auto& block : partition) {
            Scalar sum(0);
            for (std::size_t i : block) sum += coeff[i];
            if (!sum.is_zero()) good = false;
        }
        if (!good) continue;
        std::vector<std::vector<Scalar>> constraints;
        for (const auto& block : partition)
            for (std::size_t i = 1; i < block.size(); ++i) {
                std::vector<Scalar> row(static_cast<std::size_t>(n), Scalar(0));
                for (int v = 0; v < n; ++v)
                    row[static_cast<std::size_t>(v)] =
                        Scalar(support[block[0]][static_cast<std::size_t>(v)] -
                               support[block[i]][static_cast<std::size_t>(v)]);
                constraints.push_back(std::move(row));
            }
        parts.push_back(Subspace::kernel_of(n, constraints));
    }
    return SubspaceArrangement::from_parts(n, std::move(parts));
}

MultiPoly P(const std::string& s, int n) { return MultiPoly::parse(s, n); }

} // namespace

TEST_CASE("single-polynomial cones on pinned inputs") {
    SubspaceArrangement a = tau1_single(P("t-1", 1));
    REQUIRE(a.parts().size() == 1);
    CHECK(a.parts()[0].dim() == 0); // the origin

    SubspaceArrangement b = tau1_single(P("t1*t2-1", 2));
    REQUIRE(b.parts().size() == 1);
    CHECK(b.parts()[0].dim() == 1);
    CHECK(b.parts()[0].contains(std::vector<Scalar>{Scalar(1), Scalar(-1)}));

    CHECK(tau1_single(P("t^2-t+1", 1)).empty());

    SubspaceArrangement d = tau1_single(P("(t1-1)*(t2-1)", 2));
    REQUIRE(d.parts().size() == 2);
    CHECK(d.parts()[0].dim() == 1);
    CHECK(d.parts()[1].dim() == 1);

    // support bound is a hard resource error
    MultiPoly big(1);
    for (int i = 0; i < 6; ++i) big.add_term({i}, Scalar(i % 2 == 0 ? 1 : -1));
    CHECK_THROWS_AS(tau1_single(big, 5), resource_error);
}

TEST_CASE("ideal cones intersect the single cones") {
    std::vector<MultiPoly> two{P("t1-1", 2), P("t2-1", 2)};
    SubspaceArrangement a = tau1_ideal(two, 2);
    REQUIRE(a.parts().size() == 1);
    CHECK(a.parts()[0].dim() == 0);

    std::vector<MultiPoly> none;
    CHECK(tau1_ideal(none, 3) == SubspaceArrangement::whole_space(3));

    std::vector<MultiPoly> mixed{P("(t1-1)*(t2-1)", 2), P("t1-1", 2)};
    SubspaceArrangement m = tau1_ideal(mixed, 2);
    REQUIRE(m.parts().size() == 1);
    CHECK(m.parts()[0].contains(std::vector<Scalar>{Scalar(0), Scalar(5)}));
}

TEST_CASE("agreement with the naive partition oracle") {
    std::mt19937_64 rng(71);
    std::uniform_int_distribution<int> e(-2, 2);
    std::uniform_int_distribution<int> nterms(2, 6);
    std::uniform_int_distribution<int> cval(-3, 3);
    for (int it = 0; it < 40; ++it) {
        MultiPoly f(2);
        int terms = nterms(rng);
        for (int t = 0; t < terms; ++t) {
            int cv = cval(rng);
            if (cv == 0) cv = 1;
            f.add_term({e(rng), e(rng)}, Scalar(cv));
        }
        if (f.is_zero()) continue;
        CHECK(tau1_single(f) == tau1_oracle(f));
    }
}

TEST_CASE("cones of products contain the union") {
    std::mt19937_64 rng(72);
    std::uniform_int_distribution<int> e(0, 2);
    std::uniform_int_distribution<int> cval(-2, 2);
    auto small = [&] {
        MultiPoly f(2);
        for (int t = 0; t < 3; ++t) {
            int cv = cval(rng);
            if (cv == 0) cv = 1;
            f.add_term({e(rng), e(rng)}, Scalar(cv));
        }
        return f;
    };
    for (int it = 0; it < 15; ++it) {
        MultiPoly f = small(), g = small();
        if (f.is_zero() || g.is_zero()) continue;
        if (f.term_count() * g.term_count() > 9) continue;
        SubspaceArrangement prod = tau1_single(f * g);
        SubspaceArrangement af = tau1_single(f);
        SubspaceArrangement ag = tau1_single(g);
        for (const SubspaceArrangement* a : {&af, &ag})
            for (const Subspace& s : a->parts()) {
                bool covered = false;
                for (const Subspace& t : prod.parts()) covered = covered || t.contains(s);
                CHECK(covered);
            }
    }
}

TEST_CASE("cone subspaces are rationally defined") {
    std::mt19937_64 rng(73);
    std::uniform_int_distribution<int> e(-2, 2);
    for (int it = 0; it < 20; ++it) {
        MultiPoly f(3);
        for (int t = 0; t < 5; ++t) f.add_term({e(rng), e(rng), e(rng)}, testutil::random_scalar(rng));
        if (f.is_zero()) continue;
        SubspaceArrangement arr = tau1_single(f);
        for (const Subspace& s : arr.parts()) CHECK(s.is_rational());
    }
}

TEST_CASE("comparator fixtures") {
    // Z^2: both sides are the origin
    Presentation z2 = fixtures::free_abelian(2);
    CupData cz2 = cup_from_presentation(z2);
    ConeCompareReport r = tangent_cone_compare(z2, cz2, 1);
    CHECK(r.verdict == ConeCompareVerdict::equal);
    REQUIRE(r.tangent_cone.parts().size() == 1);
    CHECK(r.tangent_cone.parts()[0].dim() == 0);

    // free groups: both sides are everything
    Presentation f2 = fixtures::free_group(2);
    CupData cf2 = cup_from_presentation(f2);
    ConeCompareReport rf = tangent_cone_compare(f2, cf2, 1);
    CHECK(rf.verdict == ConeCompareVerdict::equal);
    CHECK(rf.tangent_cone == SubspaceArrangement::whole_space(2));

    // circle bundle over a genus-2 curve: cone strictly inside resonance
    ConeCompareReport rs = tangent_cone_compare(fixtures::circle_bundle_minors(2),
                                                fixtures::circle_bundle_cup(2), 3);
    CHECK(rs.verdict == ConeCompareVerdict::strictly_contained);
    CHECK_FALSE(rs.extra_points.empty());

    // synthetic incomparable case: the cone of t1 - 1 is a hyperplane, but
    // the resonance variety of Z^2 is just the origin
    std::vector<MultiPoly> fake{P("t1-1", 2)};
    ConeCompareReport ri = tangent_cone_compare(fake, cz2, 1);
    CHECK(ri.verdict == ConeCompareVerdict::incomparable);
    CHECK(ri.uncontained_component.has_value());
}
