// pseudoctx: command-line front end. All work happens in pseudoctx/cli.hpp;
// this file only binds flags.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pseudoctx/cli.hpp"

namespace cli = pseudoctx::cli;

int main(int argc, char** argv)
{
    CLI::App app{"Hypergraph, two-valued state, pseudocontext and orthogonal-representation workbench"};
    app.require_subcommand(1);

    cli::global_options g;
    app.add_flag("--json", g.json_only, "Emit the JSON report only");
    app.add_flag("--timings", g.timings, "Include wall-clock timings (JSON) or print them to stderr");
    std::optional<double> eps_flag;
    app.add_option("--eps", eps_flag, "Orthogonality tolerance (default 1e-10, or PSEUDOCTX_EPS)")
        ->check(CLI::Range(1e-300, 0.5));

    // states
    cli::states_options so;
    auto* states = app.add_subcommand("states", "Two-valued states of a hypergraph");
    states->add_option("graph", so.graph, "Fixture name or graph file")->required();
    states->add_flag("--dump", so.dump, "List every state");
    states->add_flag("--separating", so.separating, "Check that the states separate all atoms");
    states->add_flag("--partition", so.partition, "Emit the set representation");

    // pseudo
    cli::pseudo_options po;
    std::vector<std::string> pair;
    auto* pseudo = app.add_subcommand("pseudo", "Find or certify pseudocontext pairs");
    pseudo->add_option("graph", po.graph, "Fixture name or graph file")->required();
    pseudo->add_option("--k", po.k, "Size of the sets to search")->check(CLI::Range(2, 16));
    pseudo->add_option("--pair", pair, "Two comma-separated atom sets, e.g. 1,6,11 5,10,15")->expected(2);
    pseudo->add_flag("--coverings", po.coverings, "List exact coverings avoiding each set");
    pseudo->add_flag("--bounds", po.bounds, "Classical bounds of both set sums");
    pseudo->add_option("--limit", po.coverings_limit, "Maximum coverings listed per set (0 = all)");

    // for
    cli::for_options fo;
    auto* forcmd = app.add_subcommand("for", "Faithful orthogonal representations");
    forcmd->require_subcommand(1);
    std::string sense = "ccw";
    auto* construct = forcmd->add_subcommand("construct", "Analytic construction");
    construct->add_option("--variant", fo.variant, "small or combo")->check(CLI::IsMember({"small", "combo"}));
    construct->add_option("--alpha", fo.alpha, "Rotation angle between the spine contexts")->required();
    construct->add_option("--sense", sense, "Rotation of the second combo half: ccw or cw")
        ->check(CLI::IsMember({"ccw", "cw"}));
    construct->add_option("--output", fo.output, "Also write the vectors to this file");
    auto* verify = forcmd->add_subcommand("verify", "Check a labeling against a hypergraph");
    verify->add_option("labeling", fo.labeling, "Fixture name or vector file")->required();
    verify->add_option("--graph", fo.graph, "Fixture name or graph file (defaults to the fixture's graph)");
    auto* infer = forcmd->add_subcommand("infer", "Hypergraph of maximal orthogonality cliques");
    infer->add_option("labeling", fo.labeling, "Fixture name or vector file")->required();
    auto* bounds = forcmd->add_subcommand("bounds", "Projector sum, eigenvalues and quantum interval");
    bounds->add_option("labeling", fo.labeling, "Fixture name or vector file")->required();
    bounds->add_option("--set", fo.set, "Comma-separated atoms")->required();
    bounds->add_option("--compare", fo.compare, "Second set whose projector sum is compared");

    // table
    cli::table_options to;
    auto* table = app.add_subcommand("table", "Numeric tables");
    table->require_subcommand(1);
    auto* curve = table->add_subcommand("beta-curve", "CSV of alpha, beta(alpha) and aperture(alpha)");
    curve->add_option("--steps", to.steps, "Number of intervals over [0, 2 arctan 3]")->check(CLI::PositiveNumber);
    table->add_subcommand("alpha0", "The degenerate parameter of the gadget construction");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : cli::exit_input;
    }

    try {
        g.epsilon = eps_flag ? *eps_flag : cli::epsilon_from_environment();
    } catch (const std::exception& e) {
        std::cerr << "pseudoctx: " << e.what() << "\n";
        return cli::exit_input;
    }

    cli::report r;
    if (states->parsed()) {
        r = cli::cmd_states(so);
    } else if (pseudo->parsed()) {
        if (!pair.empty())
            po.pair = std::pair{pair[0], pair[1]};
        r = cli::cmd_pseudo(po);
    } else if (forcmd->parsed()) {
        fo.epsilon = g.epsilon;
        fo.sense = sense == "cw" ? pseudoctx::rotation_sense::clockwise : pseudoctx::rotation_sense::counterclockwise;
        for (auto* sub : {construct, verify, infer, bounds})
            if (sub->parsed())
                fo.action = sub->get_name();
        r = cli::cmd_for(fo);
    } else {
        to.what = curve->parsed() ? "beta-curve" : "alpha0";
        r = cli::cmd_table(to);
    }

    std::cout << cli::render(r, g);
    if (!r.error.empty() && !g.json_only)
        std::cerr << "pseudoctx: " << r.error << "\n";
    if (g.timings && !g.json_only)
        std::cerr << "time: " << pseudoctx::format_double(r.timings.value("seconds", 0.0)) << " s\n";
    return r.exit_code;
}
