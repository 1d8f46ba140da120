#include "jumploci/jobs.hpp"

#include <functional>

#include "jumploci/fixtures.hpp"

namespace jumploci {

namespace {

void check_extension(const Json& doc, long long d) {
    // Every scalar string in the document must live in Q or Q(sqrt d).
    if (doc.is_string()) {
        std::string s = doc.get<std::string>();
        long long ext = 0;
        try {
            ext = Scalar::parse(s).extension();
        } catch (const input_error&) {
            return; // not a scalar literal (a word, a polynomial, a name)
        }
        merge_extension(ext, d);
        return;
    }
    if (doc.is_array() || doc.is_object())
        for (const Json& e : doc) check_extension(e, d);
}

CupData cup_argument(const Job& job) {
    const Json& in = job.input;
    if (in.contains("cup")) return cup_from_json(in.at("cup"));
    if (in.contains("presentation")) return cup_from_presentation(presentation_from_json(in.at("presentation")));
    if (in.contains("n") && in.contains("m")) return cup_from_json(in);
    throw input_error("expected a 'cup' document or a 'presentation'");
}

Presentation presentation_argument(const Job& job) {
    const Json& in = job.input;
    if (in.contains("presentation")) return presentation_from_json(in.at("presentation"));
    if (in.contains("generators")) return presentation_from_json(in);
    throw input_error("expected a 'presentation' document");
}

JobResult boolean_result(Json doc, bool verdict) {
    return JobResult{std::move(doc), verdict ? 0 : 1};
}

JobResult dispatch(const Job& job) {
    const std::string& cmd = job.command;
    const Json& in = job.input;

    if (cmd == "cup") {
        return {cup_to_json(cup_from_presentation(presentation_argument(job))), 0};
    }

    if (cmd == "res-member") {
        CupData c = cup_argument(job);
        std::vector<Scalar> z = scalar_vector_from_json(require_field(in, "z"));
        if (static_cast<int>(z.size()) != c.h1_dim()) throw input_error("'z' has the wrong length");
        int h1 = aomoto_h1_dim(c, z);
        bool member = h1 >= job.k;
        return boolean_result(Json{{"member", member}, {"h1", h1}, {"k", job.k}}, member);
    }

    if (cmd == "res-contains") {
        CupData c = cup_argument(job);
        Subspace L = subspace_from_json(c.h1_dim(), require_field(in, "subspace"));
        bool contained = resonance_contains_subspace(c, L, job.k);
        return boolean_result(
            Json{{"contained", contained}, {"k", job.k}, {"subspace", subspace_to_json(L)}},
            contained);
    }

    if (cmd == "res-minors") {
        CupData c = cup_argument(job);
        return {Json{{"k", job.k},
                     {"minors", polys_to_json(resonance_minors(c, job.k), c.h1_dim(), "x")}},
                0};
    }

    if (cmd == "char-member") {
        Presentation p = presentation_argument(job);
        Character rho = character_from_json(require_field(in, "character"));
        int b1 = twisted_b1(p, rho);
        bool member = b1 >= job.k;
        return boolean_result(Json{{"member", member}, {"b1", b1}, {"k", job.k}}, member);
    }

    if (cmd == "alex-matrix") {
        Presentation p = presentation_argument(job);
        return {poly_matrix_to_json(alexander_matrix(p), "t"), 0};
    }

    if (cmd == "char-minors") {
        Presentation p = presentation_argument(job);
        return {Json{{"k", job.k},
                     {"minors", polys_to_json(charvar_minors(p, job.k), p.rank(), "t")}},
                0};
    }

    if (cmd == "tau1") {
        auto [n, polys] = polys_from_json(in);
        return {arrangement_to_json(tau1_ideal(polys, n, job.support_bound)), 0};
    }

    if (cmd == "tc-compare") {
        CupData c = cup_argument(job);
        ConeCompareReport rep;
        if (in.contains("minors")) {
            auto [n, polys] = polys_from_json(in.at("minors"));
            if (n != c.h1_dim()) throw input_error("minor variables differ from the cup dimension");
            rep = tangent_cone_compare(polys, c, job.k, job.samples, job.seed, job.support_bound);
        } else {
            rep = tangent_cone_compare(presentation_argument(job), c, job.k, job.samples, job.seed,
                                       job.support_bound);
        }
        return {cone_compare_report_to_json(rep), 0};
    }

    if (cmd == "battery") {
        CupData c = cup_argument(job);
        std::vector<Subspace> comps;
        for (const Json& s : require_field(in, "components"))
            comps.push_back(subspace_from_json(c.h1_dim(), s));
        int kmax = job.kmax > 0 ? job.kmax : std::max(1, c.h1_dim() - 1);
        ObstructionReport rep = serre_battery(c, comps, kmax, job.samples, job.seed);
        return boolean_result(obstruction_report_to_json(rep), rep.all_pass());
    }

    if (cmd == "raag") {
        if (job.args.empty()) throw input_error("raag needs a subcommand: resonance | subtori | verdict");
        Graph g = graph_from_json(in);
        const std::string& sub = job.args[0];
        if (sub == "resonance")
            return {arrangement_to_json(raag_resonance(g, job.vertex_bound)), 0};
        if (sub == "subtori") {
            Json tori = Json::array();
            for (const auto& set : raag_charvar_subtori(g, job.vertex_bound)) {
                Json t = Json::array();
                for (int v : set) t.push_back(g.vertices()[static_cast<std::size_t>(v)]);
                tori.push_back(t);
            }
            return {Json{{"subtori", tori}}, 0};
        }
        if (sub == "verdict") {
            RaagSerreVerdict v = raag_serre_verdict(g);
            Json doc = multipartite_to_json(v.structure, g);
            doc["quasi_kahler"] = v.quasi_kahler;
            doc["kahler"] = v.kahler;
            return boolean_result(std::move(doc), v.quasi_kahler);
        }
        throw input_error("unknown raag subcommand '" + sub + "'");
    }

    if (cmd == "artin-verdict") {
        LabeledGraph g = labeled_graph_from_json(in);
        ArtinMalcevVerdict v = artin_malcev_verdict(g);
        Json doc = multipartite_to_json(v.structure, v.contraction);
        doc["verdict"] = v.verdict;
        doc["contraction"] = graph_to_json(v.contraction);
        return boolean_result(std::move(doc), v.verdict);
    }

    if (cmd == "fixtures") {
        Json corpus = fixtures::corpus();
        if (!job.args.empty()) {
            const std::string& name = job.args[0];
            if (!corpus.contains(name)) throw input_error("unknown fixture '" + name + "'");
            return {corpus.at(name), 0};
        }
        return {corpus, 0};
    }

    throw input_error("unknown command '" + cmd + "'");
}

} // namespace

JobResult run_job(const Job& job) {
    try {
        if (job.k < 1) throw input_error("k must be >= 1");
        if (job.sqrt_d) {
            if (!is_valid_extension(*job.sqrt_d))
                throw input_error("--sqrt wants a squarefree integer != 0, 1");
            check_extension(job.input, *job.sqrt_d);
        }
        return dispatch(job);
    } catch (const resource_error& e) {
        return {Json{{"error", e.what()}, {"kind", "resource"}}, 3};
    } catch (const input_error& e) {
        return {Json{{"error", e.what()}, {"kind", "input"}}, 2};
    } catch (const Json::exception& e) {
        return {Json{{"error", e.what()}, {"kind", "input"}}, 2};
    }
}

} // namespace jumploci
