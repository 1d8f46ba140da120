#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "jumploci/resonance.hpp"

namespace jumploci {

/// Finite union of linear subspaces, stored with no subspace contained in
/// another and in a canonical deterministic order. The empty arrangement is
/// the empty set (distinct from the arrangement {0}).
class SubspaceArrangement {
public:
    explicit SubspaceArrangement(int ambient) : ambient_(ambient) {}
    static SubspaceArrangement from_parts(int ambient, std::vector<Subspace> parts);
    static SubspaceArrangement whole_space(int ambient);

    int ambient() const { return ambient_; }
    const std::vector<Subspace>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }

    bool contains_point(std::span<const Scalar> z) const;
    /// Pairwise intersections, pruned: tau1 of an intersection of zero sets.
    SubspaceArrangement intersect(const SubspaceArrangement& other) const;

    bool operator==(const SubspaceArrangement&) const = default;

private:
    int ambient_;
    std::vector<Subspace> parts_;
};

/// Exponential tangent cone at the identity of the zero set of a Laurent
/// polynomial: the union of L(p) over all partitions p of the support into
/// blocks with vanishing coefficient sums, where L(p) cuts out equality of
/// the pairing <u, z> across each block. Throws resource_error when the
/// support exceeds the bound.
SubspaceArrangement tau1_single(const MultiPoly& f, int support_bound = 12);

/// Tangent cone of a finite intersection of zero sets: the intersection of
/// the single-polynomial cones. An empty ideal yields the whole space.
SubspaceArrangement tau1_ideal(std::span<const MultiPoly> polys, int ambient,
                               int support_bound = 12);

enum class ConeCompareVerdict { equal, strictly_contained, incomparable };

struct ConeCompareReport {
    ConeCompareVerdict verdict = ConeCompareVerdict::equal;
    int k = 1;
    SubspaceArrangement tangent_cone{0};
    /// Index of a cone component that failed the resonance certificate
    /// (verdict incomparable), if any.
    std::optional<std::size_t> uncontained_component;
    /// Sampled points in the resonance variety missing from the cone
    /// (verdict strictly_contained).
    std::vector<std::vector<Scalar>> extra_points;
};

/// Compares the exponential tangent cone of the depth-k characteristic
/// variety (from the given defining Laurent polynomials) with the depth-k
/// resonance variety of the cup data. Containment cone <= resonance is
/// certified symbolically; the reverse direction is sampled at seeded
/// rational points (ambient points plus pairwise spans of cone components).
ConeCompareReport tangent_cone_compare(std::span<const MultiPoly> char_minors, const CupData& c,
                                       int k, int samples = 25, std::uint64_t seed = 1,
                                       int support_bound = 12);

/// Same, with the defining polynomials taken from the Fox-derivative minors
/// of a presentation.
ConeCompareReport tangent_cone_compare(const Presentation& p, const CupData& c, int k,
                                       int samples = 25, std::uint64_t seed = 1,
                                       int support_bound = 12);

const char* to_string(ConeCompareVerdict v);

} // namespace jumploci
