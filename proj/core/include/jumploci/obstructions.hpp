#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "jumploci/resonance.hpp"

namespace jumploci {

enum class Isotropy { p0, p1, none };

struct IsotropyResult {
    Isotropy cls = Isotropy::none;
    int image_dim = 0;
};

/// Restriction of the cup product to a nonzero subspace: p0 when the image is
/// zero, p1 when it is a line and the induced skew form is non-degenerate,
/// none otherwise.
IsotropyResult isotropicity_classify(const CupData& c, const Subspace& L);

enum class Verdict { pass, fail, not_applicable };

struct ObstructionWitness {
    std::string test;            // "rational_linearity" | "isotropicity" | ...
    int component_a = -1;        // component index, when relevant
    int component_b = -1;        // second component for pairwise failures
    int k = -1;                  // depth for filtration failures
    std::vector<Scalar> point;   // witness point or intersection vector
    std::string note;
};

struct ObstructionReport {
    Verdict rational_linearity = Verdict::not_applicable;
    Verdict isotropicity = Verdict::not_applicable;
    Verdict pairwise_intersection = Verdict::not_applicable;
    Verdict filtration_by_dimension = Verdict::not_applicable;
    bool free_quotient_expected = false;
    std::vector<ObstructionWitness> witnesses;

    bool all_pass() const {
        return rational_linearity != Verdict::fail && isotropicity != Verdict::fail &&
               pairwise_intersection != Verdict::fail && filtration_by_dimension != Verdict::fail;
    }
};

/// Runs the position/resonance obstruction battery on the claimed irreducible
/// components of the depth-one resonance variety. Components must certify via
/// resonance_contains_subspace at depth 1 (input_error otherwise). Checks:
/// components rational; each positive-dimensional component p-isotropic of
/// dimension >= 2p+2; pairwise intersections zero; and, pointwise on seeded
/// samples, the depth filtration dim R > k + p. A nonzero component flags the
/// rank >= 2 free-quotient expectation.
ObstructionReport serre_battery(const CupData& c, const std::vector<Subspace>& components,
                                int kmax, int samples_per_component = 25,
                                std::uint64_t seed = 1);

const char* to_string(Verdict v);
const char* to_string(Isotropy i);

} // namespace jumploci
