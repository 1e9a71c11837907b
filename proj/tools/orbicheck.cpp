// orbicheck: decide whether suborbifold charts are images of orbifold embeddings.
#include "orbicheck/errors.hpp"
#include "orbicheck/scenario.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace orbicheck;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string render(const std::vector<ScenarioReport>& reports, const std::string& format,
                   bool witness) {
    if (format == "md") return render_md(reports, witness);
    if (format == "tsv") return render_tsv(reports);
    return render_json(reports);
}

/** Prints expectation differences; true when every pinned expectation held. */
bool report_expectations(const ScenarioReport& rep) {
    bool ok = true;
    for (const ItemReport& it : rep.items)
        for (const std::string& d : it.expect_diffs) {
            std::cerr << "expectation failed in " << rep.name << "/" << it.name << ": " << d
                      << "\n";
            ok = false;
        }
    return ok;
}

/** Re-checks saturation verdicts with the randomized point oracle. */
bool cross_check(const Scenario& scn, const ScenarioReport& rep, int trials, std::uint64_t seed) {
    bool ok = true;
    for (const SubchartItem& item : scn.subcharts) {
        const ItemReport* found = nullptr;
        for (const ItemReport& it : rep.items)
            if (it.kind == "subchart" && it.name == item.sub.name) found = &it;
        if (!found || !found->verdict) continue;
        OracleReport oracle = sampling_oracle(item.sub, trials, seed);
        bool symbolic = found->verdict->saturation.saturated;
        if (oracle.saturated != symbolic) {
            std::cerr << "oracle disagreement in " << rep.name << "/" << item.sub.name
                      << ": symbolic says " << (symbolic ? "saturated" : "not saturated")
                      << ", sampling (" << oracle.points_checked << " points) says "
                      << (oracle.saturated ? "saturated" : "not saturated");
            if (oracle.counterexample)
                std::cerr << "; counterexample gamma = " << oracle.counterexample->gamma_str
                          << ", point = " << oracle.counterexample->point_str;
            std::cerr << "\n";
            ok = false;
        }
    }
    return ok;
}

int cmd_check(const std::string& file, const std::string& format, bool witness, int trials,
              std::uint64_t seed) {
    Scenario scn = parse_scenario(read_file(file));
    ScenarioReport rep = evaluate_scenario(scn);
    std::cout << render({rep}, format, witness);
    bool ok = report_expectations(rep);
    if (trials > 0 && !cross_check(scn, rep, trials, seed)) ok = false;
    return ok ? 0 : 1;
}

int cmd_examples(const std::string& format, bool witness) {
    std::vector<ScenarioReport> reports = run_examples();
    std::cout << render(reports, format, witness);
    bool ok = true;
    for (const ScenarioReport& rep : reports)
        if (!report_expectations(rep)) ok = false;
    return ok ? 0 : 1;
}

void print_hom_matrices(const std::string& label, const GroupHom& hom,
                        const std::vector<int>& lambda_elems, const MatrixGroup& group) {
    std::cout << label << "\n";
    for (int q = 0; q < hom.src_n; ++q) {
        int parent = lambda_elems[size_t(hom.map[size_t(q)])];
        std::cout << "  class " << q << " -> " << group.matrix(parent).str() << "\n";
    }
}

int cmd_explain(const std::string& file, const std::string& name) {
    Scenario scn = parse_scenario(read_file(file));
    const SubchartItem* item = nullptr;
    for (const SubchartItem& it : scn.subcharts)
        if (it.sub.name == name) item = &it;
    if (!item) throw ValidationError("no subchart named '" + name + "' in this scenario");
    const Subchart& sub = item->sub;
    Verdict v = embeddability(sub);

    std::cout << "subchart " << sub.name << " in chart " << sub.chart.name << " (dim "
              << sub.chart.dim << ", |Gamma| = " << sub.chart.group.order() << ")\n";
    std::cout << "shape: " << shape_str(sub.shape) << "\n";
    std::cout << "lambda (order " << sub.lambda.size() << "):\n";
    for (int e : sub.lambda.elems) std::cout << "  " << sub.chart.group.matrix(e).str() << "\n";
    const IsotropyData& iso = v.isotropy;
    std::cout << "isotropy sequence 1 -> Omega -> Lambda -> Gamma_P -> 1: " << iso.omega_name
              << " (order " << iso.omega.size() << ") -> " << iso.lambda_name << " (order "
              << iso.lambda.size() << ") -> " << iso.gamma_p_name << " (order " << iso.gamma_p.n
              << ")\n";
    std::cout << "full: " << (v.full ? "yes" : "no") << "\n";
    std::cout << "saturated: " << (v.saturation.saturated ? "yes" : "no") << "\n";
    if (!v.saturation.saturated && v.saturation.witness) {
        const SaturationWitness& w = *v.saturation.witness;
        std::cout << "  witness gamma = " << w.gamma_str << "\n";
        if (w.point) std::cout << "  witness point = " << vec_str(*w.point) << "\n";
        if (w.graph_param) std::cout << "  witness parameter t = " << rat_str(*w.graph_param) << "\n";
        std::cout << "  " << w.detail << "\n";
    }
    std::cout << "split: " << (v.split.split ? "yes" : "no") << "\n";
    if (v.split.split && v.split.section) {
        print_hom_matrices("  section Gamma_P -> Lambda:", *v.split.section, iso.lambda.elems,
                           sub.chart.group);
    } else {
        std::cout << "  no complement of the kernel among the " << v.split.subgroups_examined
                  << " subgroups of lambda\n";
    }
    std::cout << "embeddable as suborbifold: " << (v.embeddable_topologically ? "yes" : "no")
              << "\n";
    std::cout << "image of a complete orbifold embedding: "
              << (v.embeddable_completely ? "yes" : "no") << "\n";
    if (v.embedding) {
        std::cout << "embedding Theta on local classes:\n";
        for (int q = 0; q < v.embedding->theta.src_n; ++q)
            std::cout << "  class " << q << " -> "
                      << sub.chart.group.matrix(v.embedding->theta.map[size_t(q)]).str() << "\n";
        if (!v.embedding->lift_basis.empty()) {
            std::cout << "lift basis:\n";
            for (const CycVector& b : v.embedding->lift_basis)
                std::cout << "  " << vec_str(b) << "\n";
        }
        if (v.embedding->lift_graph)
            std::cout << "lift curve: y = "
                      << poly_str<Rational>(
                             *v.embedding->lift_graph,
                             [](const Rational& q) { return rat_str(q); }, "t")
                      << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"decide full / saturated / split for suborbifold charts of finite linear "
                 "quotients, and construct the resulting orbifold embeddings"};
    app.require_subcommand(1);

    std::string file, format = "md", subchart_name;
    bool witness = false;
    int trials = 0;
    std::uint64_t seed = 1;

    CLI::App* check = app.add_subcommand("check", "evaluate one scenario file");
    check->add_option("file", file, "scenario JSON file")->required();
    check->add_option("--format", format, "md, tsv, or json")
        ->check(CLI::IsMember({"md", "tsv", "json"}));
    check->add_flag("--witness", witness, "print counterexample witnesses");
    check->add_option("--trials", trials, "re-check saturation with N sampled points per element");
    check->add_option("--seed", seed, "seed for the sampling oracle");

    CLI::App* examples = app.add_subcommand("examples", "evaluate the built-in example corpus");
    examples->add_option("--format", format, "md, tsv, or json")
        ->check(CLI::IsMember({"md", "tsv", "json"}));
    examples->add_flag("--witness", witness, "print counterexample witnesses");

    CLI::App* explain = app.add_subcommand("explain", "show the full derivation for one subchart");
    explain->add_option("file", file, "scenario JSON file")->required();
    explain->add_option("--subchart", subchart_name, "subchart name")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (check->parsed()) return cmd_check(file, format, witness, trials, seed);
        if (examples->parsed()) return cmd_examples(format, witness);
        return cmd_explain(file, subchart_name);
    } catch (const orbicheck::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const orbicheck::ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 2;
    } catch (const orbicheck::CapExceeded& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 70;
    }
}
