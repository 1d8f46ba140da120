#include "jumploci/obstructions.hpp"

#include <random>
#include <string>

#include "jumploci/linalg.hpp"

namespace jumploci {

IsotropyResult isotropicity_classify(const CupData& c, const Subspace& L) {
    if (L.dim() == 0) throw input_error("isotropicity of the zero subspace is undefined");
    if (L.ambient() != c.h1_dim()) throw input_error("ambient dimension mismatch");
    int d = L.dim();
    int m = c.h2_dim();
    const auto& basis = L.basis();

    // mu(v_a ^ v_b) for a < b, via bilinearity.
    std::vector<std::vector<Scalar>> images;
    for (int a = 0; a < d; ++a)
        for (int b = a + 1; b < d; ++b) {
            std::vector<Scalar> w(static_cast<std::size_t>(m), Scalar(0));
            for (int i = 0; i < c.h1_dim(); ++i) {
                const Scalar& vi = basis[static_cast<std::size_t>(a)][static_cast<std::size_t>(i)];
                if (vi.is_zero()) continue;
                for (int j = 0; j < c.h1_dim(); ++j) {
                    if (j == i) continue;
                    const Scalar& wj = basis[static_cast<std::size_t>(b)][static_cast<std::size_t>(j)];
                    if (wj.is_zero()) continue;
                    for (int k = 0; k < m; ++k) {
                        Scalar mu = c.mu_coeff(i, j, k);
                        if (!mu.is_zero()) w[static_cast<std::size_t>(k)] += vi * wj * mu;
                    }
                }
            }
            images.push_back(std::move(w));
        }

    IsotropyResult out;
    if (images.empty()) { // 1-dimensional subspace: the restriction is trivially zero
        out.cls = Isotropy::p0;
        out.image_dim = 0;
        return out;
    }
    Matrix<Scalar> im(images.size(), static_cast<std::size_t>(m), Scalar(0));
    for (std::size_t i = 0; i < images.size(); ++i)
        for (std::size_t j = 0; j < static_cast<std::size_t>(m); ++j) im(i, j) = images[i][j];
    out.image_dim = static_cast<int>(rank_of(im));
    if (out.image_dim == 0) {
        out.cls = Isotropy::p0;
        return out;
    }
    if (out.image_dim > 1) {
        out.cls = Isotropy::none;
        return out;
    }
    // Rank-one image: extract the skew form mu(v_a ^ v_b) = phi(a,b) * w and
    // test non-degeneracy.
    std::size_t gen = 0;
    while (gen < images.size() &&
           std::all_of(images[gen].begin(), images[gen].end(),
                       [](const Scalar& s) { return s.is_zero(); }))
        ++gen;
    std::size_t coord = 0;
    while (images[gen][coord].is_zero()) ++coord;
    Matrix<Scalar> phi(static_cast<std::size_t>(d), static_cast<std::size_t>(d), Scalar(0));
    std::size_t idx = 0;
    for (int a = 0; a < d; ++a)
        for (int b = a + 1; b < d; ++b, ++idx) {
            Scalar f = images[idx][coord] / images[gen][coord];
            phi(static_cast<std::size_t>(a), static_cast<std::size_t>(b)) = f;
            phi(static_cast<std::size_t>(b), static_cast<std::size_t>(a)) = -f;
        }
    out.cls = static_cast<int>(rank_of(phi)) == d ? Isotropy::p1 : Isotropy::none;
    return out;
}

namespace {

Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 4);
    return Rational(num(rng), den(rng));
}

std::vector<Scalar> sample_on(std::mt19937_64& rng, const Subspace& L) {
    std::vector<Scalar> z(static_cast<std::size_t>(L.ambient()), Scalar(0));
    bool nonzero = false;
    for (const auto& v : L.basis()) {
        Scalar c{random_rational(rng)};
        if (!c.is_zero()) nonzero = true;
        for (std::size_t i = 0; i < z.size(); ++i) z[i] += c * v[i];
    }
    if (!nonzero && L.dim() > 0)
        for (std::size_t i = 0; i < z.size(); ++i) z[i] = L.basis()[0][i];
    return z;
}

} // namespace

ObstructionReport serre_battery(const CupData& c, const std::vector<Subspace>& components,
                                int kmax, int samples_per_component, std::uint64_t seed) {
    if (kmax < 1) throw input_error("kmax must be >= 1");
    for (std::size_t i = 0; i < components.size(); ++i)
        if (!resonance_contains_subspace(c, components[i], 1))
            throw input_error("component " + std::to_string(i + 1) +
                              " is not certified inside the resonance variety");

    ObstructionReport rep;
    rep.free_quotient_expected =
        std::any_of(components.begin(), components.end(),
                    [](const Subspace& s) { return s.dim() >= 1; });

    // (0) rationality of every component
    if (!components.empty()) {
        rep.rational_linearity = Verdict::pass;
        for (std::size_t i = 0; i < components.size(); ++i) {
            if (!components[i].is_rational()) {
                rep.rational_linearity = Verdict::fail;
                ObstructionWitness w;
                w.test = "rational_linearity";
                w.component_a = static_cast<int>(i);
                w.note = "component has an irrational echelon basis";
                rep.witnesses.push_back(std::move(w));
            }
        }
    }

    // (1) isotropicity and dimension
    std::vector<Isotropy> cls(components.size(), Isotropy::none);
    bool any_positive = false;
    for (std::size_t i = 0; i < components.size(); ++i) {
        if (components[i].dim() == 0) continue;
        any_positive = true;
        IsotropyResult r = isotropicity_classify(c, components[i]);
        cls[i] = r.cls;
        bool ok = false;
        if (r.cls == Isotropy::p0) ok = components[i].dim() >= 2;
        if (r.cls == Isotropy::p1) ok = components[i].dim() >= 4;
        if (rep.isotropicity == Verdict::not_applicable) rep.isotropicity = Verdict::pass;
        if (!ok) {
            rep.isotropicity = Verdict::fail;
            ObstructionWitness w;
            w.test = "isotropicity";
            w.component_a = static_cast<int>(i);
            w.note = r.cls == Isotropy::none
                         ? "restriction of the cup product is neither 0- nor 1-isotropic"
                         : "isotropic component of dimension below the bound";
            rep.witnesses.push_back(std::move(w));
        }
    }
    if (!any_positive) rep.isotropicity = Verdict::not_applicable;

    // (2) pairwise intersections must be zero
    if (components.size() >= 2) {
        rep.pairwise_intersection = Verdict::pass;
        for (std::size_t a = 0; a < components.size(); ++a)
            for (std::size_t b = a + 1; b < components.size(); ++b) {
                Subspace inter = components[a].intersect(components[b]);
                if (inter.dim() > 0) {
                    rep.pairwise_intersection = Verdict::fail;
                    ObstructionWitness w;
                    w.test = "pairwise_intersection";
                    w.component_a = static_cast<int>(a);
                    w.component_b = static_cast<int>(b);
                    w.point = inter.basis()[0];
                    w.note = "intersection has dimension " + std::to_string(inter.dim());
                    rep.witnesses.push_back(std::move(w));
                }
            }
    }

    // (4) depth filtration, pointwise on seeded generic samples: membership in
    // R_k must match dim > k + p. Components that failed classification are
    // tested with p = 0, the weakest assumption.
    std::mt19937_64 rng(seed);
    if (any_positive) {
        rep.filtration_by_dimension = Verdict::pass;
        for (std::size_t i = 0; i < components.size(); ++i) {
            if (components[i].dim() == 0) continue;
            int p = cls[i] == Isotropy::p1 ? 1 : 0;
            for (int s = 0; s < samples_per_component; ++s) {
                std::vector<Scalar> z = sample_on(rng, components[i]);
                for (int k = 1; k <= kmax; ++k) {
                    bool predicted = components[i].dim() > k + p;
                    bool actual = resonance_member(c, z, k);
                    if (predicted != actual) {
                        rep.filtration_by_dimension = Verdict::fail;
                        ObstructionWitness w;
                        w.test = "filtration_by_dimension";
                        w.component_a = static_cast<int>(i);
                        w.k = k;
                        w.point = z;
                        w.note = predicted ? "predicted member, sample is not"
                                           : "sample is a member beyond the predicted depth";
                        rep.witnesses.push_back(std::move(w));
                        s = samples_per_component; // one witness per component suffices
                        break;
                    }
                }
            }
        }
    }
    return rep;
}

const char* to_string(Verdict v) {
    switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::not_applicable: return "not_applicable";
    }
    return "?";
}

const char* to_string(Isotropy i) {
    switch (i) {
    case Isotropy::p0: return "p0";
    case Isotropy::p1: return "p1";
    case Isotropy::none: return "none";
    }
    return "?";
}

} // namespace jumploci
