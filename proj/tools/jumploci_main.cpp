#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "jumploci/jobs.hpp"

namespace {

jumploci::Json read_input(const std::string& path) {
    std::string text;
    if (path.empty() || path == "-") {
        std::stringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    } else {
        std::ifstream f(path);
        if (!f) throw jumploci::input_error("cannot open input file '" + path + "'");
        std::stringstream ss;
        ss << f.rdbuf();
        text = ss.str();
    }
    if (text.empty()) return jumploci::Json::object();
    return jumploci::Json::parse(text);
}

void write_output(const jumploci::Json& doc, const std::string& path) {
    std::string text = doc.dump(2) + "\n";
    if (path.empty() || path == "-") {
        std::cout << text;
    } else {
        std::ofstream f(path);
        if (!f) throw jumploci::input_error("cannot open output file '" + path + "'");
        f << text;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computation of degree-one cohomology jump loci: resonance and "
                 "characteristic varieties, exponential tangent cones, isotropicity "
                 "obstructions, and Artin-group verdicts"};
    app.require_subcommand(1);
    app.fallthrough();

    jumploci::Job job;
    std::string in_path, out_path;
    long long sqrt_d = 0;
    app.add_option("--in", in_path, "input JSON file (default: stdin)");
    app.add_option("--out", out_path, "output JSON file (default: stdout)");
    app.add_option("--k", job.k, "jump depth k (default 1)");
    app.add_option("--kmax", job.kmax, "maximal depth for the obstruction battery");
    app.add_option("--samples", job.samples, "sample count for pointwise checks (default 25)");
    app.add_option("--seed", job.seed, "seed for deterministic sampling");
    app.add_option("--support-bound", job.support_bound,
                   "partition enumeration support bound (default 12)");
    app.add_option("--vertex-bound", job.vertex_bound, "graph enumeration bound (default 16)");
    app.add_option("--sqrt", sqrt_d, "restrict scalars to Q(sqrt d)");

    const std::pair<const char*, const char*> needs_input[] = {
        {"cup", "cup-product data of a commutator-relator presentation"},
        {"res-member", "resonance membership of a point at depth k"},
        {"res-contains", "symbolic certificate that a subspace lies in depth-k resonance"},
        {"res-minors", "defining minors of the depth-k resonance variety"},
        {"char-member", "characteristic-variety membership of a character at depth k"},
        {"alex-matrix", "Fox-derivative matrix of a presentation"},
        {"char-minors", "defining minors of the depth-k characteristic variety"},
        {"tau1", "exponential tangent cone of a Laurent zero set"},
        {"tc-compare", "compare the exponential tangent cone with resonance"},
        {"battery", "isotropicity/position obstruction battery"},
        {"artin-verdict", "Malcev-level verdict for a labeled Artin graph"}};
    for (auto [name, desc] : needs_input) app.add_subcommand(name, desc);
    CLI::App* raag = app.add_subcommand("raag", "right-angled Artin group pipeline");
    raag->require_subcommand(1);
    raag->add_subcommand("resonance", "irreducible components of depth-one resonance");
    raag->add_subcommand("subtori", "irreducible components of the character variety");
    raag->add_subcommand("verdict", "quasi-Kähler and Kähler decision");
    CLI::App* fixtures = app.add_subcommand("fixtures", "emit the built-in example corpus");
    std::string fixture_name;
    fixtures->add_option("name", fixture_name, "emit a single fixture");

    CLI11_PARSE(app, argc, argv);

    try {
        CLI::App* sub = app.get_subcommands().front();
        job.command = sub->get_name();
        if (job.command == "raag")
            job.args.push_back(sub->get_subcommands().front()->get_name());
        if (job.command == "fixtures" && !fixture_name.empty()) job.args.push_back(fixture_name);
        if (sqrt_d != 0) job.sqrt_d = sqrt_d;
        if (job.command != "fixtures") job.input = read_input(in_path);

        jumploci::JobResult result = jumploci::run_job(job);
        write_output(result.doc, out_path);
        return result.exit_code;
    } catch (const jumploci::Json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const jumploci::input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const jumploci::resource_error& e) {
        std::cerr << "resource bound: " << e.what() << "\n";
        return 3;
    }
}
