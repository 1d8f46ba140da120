#include <doctest.h>

#include "helpers.hpp"
#include "jumploci/fixtures.hpp"
#include "jumploci/jobs.hpp"

using namespace jumploci;

namespace {

Job make_job(const std::string& cmd, Json input) {
    Job j;
    j.command = cmd;
    j.input = std::move(input);
    return j;
}

} // namespace

TEST_CASE("document round trips") {
    Presentation p = fixtures::a2134();
    CHECK(presentation_from_json(presentation_to_json(p)).relators == p.relators);

    CupData c = cup_from_presentation(p);
    CHECK(cup_from_json(cup_to_json(c)) == c);

    Character rho = Character::make({Scalar(2), Scalar(Rational(1, 3))});
    CHECK(character_from_json(character_to_json(rho)).t == rho.t);

    Subspace s = Subspace::span(3, {{Scalar(1), Scalar::sqrt_of(2), Scalar(0)}});
    CHECK(subspace_from_json(3, subspace_to_json(s)) == s);

    SubspaceArrangement arr = tau1_single(MultiPoly::parse("(t1-1)*(t2-1)", 2));
    CHECK(arrangement_from_json(arrangement_to_json(arr)) == arr);

    Graph g = fixtures::cycle_graph(4);
    CHECK(graph_from_json(graph_to_json(g)) == g);

    LabeledGraph lg = fixtures::braid_labeled_graph(4);
    LabeledGraph lg2 = labeled_graph_from_json(labeled_graph_to_json(lg));
    CHECK(lg2.graph == lg.graph);
    CHECK(lg2.labels == lg.labels);

    auto [n, polys] = polys_from_json(polys_to_json(fixtures::circle_bundle_minors(2), 4, "t"));
    CHECK(n == 4);
    CHECK(polys == fixtures::circle_bundle_minors(2));
}

TEST_CASE("membership commands encode verdicts in the exit code") {
    Json cup = cup_to_json(cup_from_presentation(fixtures::irrational_quadric()));
    Job member = make_job("res-member", Json{{"cup", cup}, {"z", {"0", "0", "1", "0"}}});
    JobResult r = run_job(member);
    CHECK(r.exit_code == 0);
    CHECK(r.doc.at("member") == true);
    CHECK(r.doc.at("h1") == 1);

    member.input["z"] = {"1", "1", "0", "0"};
    r = run_job(member);
    CHECK(r.exit_code == 1);
    CHECK(r.doc.at("member") == false);

    Job contains = make_job("res-contains",
                            Json{{"cup", cup}, {"subspace", Json::parse(R"([["0","0","1","0"],["0","0","0","1"]])")}});
    CHECK(run_job(contains).exit_code == 0);
}

TEST_CASE("input and resource errors") {
    Job missing = make_job("res-member", Json{{"z", {"1"}}});
    JobResult r = run_job(missing);
    CHECK(r.exit_code == 2);
    CHECK(r.doc.contains("error"));

    Job malformed = make_job("cup", Json{{"generators", {"x", "x"}}, {"relators", Json::array()}});
    CHECK(run_job(malformed).exit_code == 2);

    // a polynomial with a large support exhausts the partition bound
    std::string big = "t1^9+t1^8+t1^7+t1^6+t1^5+t1^4+t1^3+t1^2+t1+1-10*t2";
    Job tau = make_job("tau1", Json{{"n", 2}, {"polys", {big}}});
    tau.support_bound = 8;
    JobResult rt = run_job(tau);
    CHECK(rt.exit_code == 3);
    CHECK(rt.doc.at("kind") == "resource");

    Job unknown = make_job("no-such-command", Json::object());
    CHECK(run_job(unknown).exit_code == 2);

    Job badsqrt = make_job("tau1", Json{{"n", 1}, {"polys", {"t-1"}}});
    badsqrt.sqrt_d = 8; // not squarefree
    CHECK(run_job(badsqrt).exit_code == 2);
}

TEST_CASE("verdict commands") {
    Json c4 = graph_to_json(fixtures::cycle_graph(4));
    Job verdict = make_job("raag", c4);
    verdict.args = {"verdict"};
    JobResult r = run_job(verdict);
    CHECK(r.exit_code == 0);
    CHECK(r.doc.at("quasi_kahler") == true);
    CHECK(r.doc.at("kahler") == false);

    Json p4 = graph_to_json(fixtures::path_graph(4));
    Job bad = make_job("raag", p4);
    bad.args = {"verdict"};
    CHECK(run_job(bad).exit_code == 1);

    Json corpus = fixtures::corpus();
    Job battery = make_job("battery", Json{{"cup", corpus.at("a2134_battery").at("cup")},
                                           {"components", corpus.at("a2134_battery").at("components")}});
    battery.kmax = 3;
    JobResult rb = run_job(battery);
    CHECK(rb.exit_code == 1);
    CHECK(rb.doc.at("verdicts").at("rational_linearity") == "pass");
    CHECK(rb.doc.at("verdicts").at("isotropicity") == "fail");

    Job artin = make_job("artin-verdict",
                         labeled_graph_to_json(fixtures::braid_labeled_graph(4)));
    CHECK(run_job(artin).exit_code == 0);
}

TEST_CASE("extension restriction flag") {
    Json cup = cup_to_json(cup_from_presentation(fixtures::irrational_quadric()));
    Json sub = Json::parse(u8R"([["\u221a2","1","0","0"],["0","0","1","0"],["0","0","0","1"]])");
    Job contains = make_job("res-contains", Json{{"cup", cup}, {"subspace", sub}});
    contains.sqrt_d = 2;
    CHECK(run_job(contains).exit_code == 0); // matches the declared extension
    contains.sqrt_d = 3;
    CHECK(run_job(contains).exit_code == 2); // sqrt2 literals clash with Q(sqrt3)
}

TEST_CASE("tau1 command matches the library") {
    Job tau = make_job("tau1", Json{{"n", 2}, {"polys", {"(t1-1)*(t2-1)"}}});
    JobResult r = run_job(tau);
    CHECK(r.exit_code == 0);
    CHECK(arrangement_from_json(r.doc) == tau1_single(MultiPoly::parse("(t1-1)*(t2-1)", 2)));
}

TEST_CASE("deterministic output") {
    Json corpus = fixtures::corpus();
    Job cmp = make_job("tc-compare", Json{{"cup", corpus.at("circle_bundle_g2").at("cup")},
                                          {"minors", corpus.at("circle_bundle_g2").at("minors")}});
    cmp.k = 3;
    cmp.seed = 42;
    std::string a = run_job(cmp).doc.dump();
    std::string b = run_job(cmp).doc.dump();
    CHECK(a == b);
}

TEST_CASE("alexander matrix command") {
    Job alex = make_job("alex-matrix", presentation_to_json(fixtures::free_abelian(2)));
    JobResult r = run_job(alex);
    CHECK(r.exit_code == 0);
    CHECK(r.doc.at("rows") == 1);
    CHECK(r.doc.at("entries")[0][0] == "-t2 + 1");
}

TEST_CASE("fixture corpus is complete and well formed") {
    Json corpus = fixtures::corpus();
    for (const char* name : {"irrational_quadric", "a2134", "heisenberg", "trefoil", "z2", "z3",
                             "f2", "f3", "surface_g1", "surface_g2", "sphere_3punct",
                             "config_torus_2", "config_torus_3", "c4", "p3", "p4", "k3", "k4",
                             "k5", "braid3", "braid4", "braid5", "braid6", "a2134_battery",
                             "circle_bundle_g2"})
        CHECK(corpus.contains(name));
    // every presentation fixture re-parses
    for (auto it = corpus.begin(); it != corpus.end(); ++it)
        if (it.value().at("kind") == "presentation")
            CHECK_NOTHROW(presentation_from_json(it.value().at("presentation")));
}
