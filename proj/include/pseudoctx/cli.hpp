#ifndef PSEUDOCTX_CLI_HPP
#define PSEUDOCTX_CLI_HPP

// Command implementations behind tools/pseudoctx. Each command returns a
// report instead of printing, so the tests can drive them directly.
//
// Exit codes: 0 success, 1 negative verdict (no certificate, failed
// verification, degenerate parameter), 2 unusable input.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "pseudoctx/construction.hpp"
#include "pseudoctx/fixtures.hpp"
#include "pseudoctx/geometry.hpp"
#include "pseudoctx/io.hpp"
#include "pseudoctx/pseudocontext.hpp"
#include "pseudoctx/states.hpp"

namespace pseudoctx::cli
{

enum exit_status : int
{
    exit_ok = 0,
    exit_negative = 1,
    exit_input = 2
};

struct report
{
    std::string command;
    json inputs = json::object();
    json results = json::object();
    json timings = json::object();
    int exit_code = exit_ok;
    std::string text;  ///< human summary (or CSV) for stdout
    std::string error; ///< input-error diagnostic for stderr
};

struct global_options
{
    bool json_only = false;
    bool timings = false;
    double epsilon = vector_labeling::default_epsilon;
};

/// Verification tolerance: PSEUDOCTX_EPS if set and valid, else the library default.
inline double epsilon_from_environment()
{
    if (const char* s = std::getenv("PSEUDOCTX_EPS")) {
        char* end = nullptr;
        const double eps = std::strtod(s, &end);
        if (end != s && *end == '\0' && eps > 0 && eps < 0.5)
            return eps;
        throw precondition_error(std::string("PSEUDOCTX_EPS=\"") + s + "\" is not a tolerance in (0, 0.5)");
    }
    return vector_labeling::default_epsilon;
}

/// Text or JSON rendering of a finished report.
inline std::string render(const report& r, const global_options& g)
{
    if (!g.json_only)
        return r.text;
    json j{{"command", r.command}, {"inputs", r.inputs}, {"results", r.results}, {"exit_code", r.exit_code}};
    if (!r.error.empty())
        j["error"] = r.error;
    if (g.timings)
        j["timings"] = r.timings;
    return dump_json(j) + "\n";
}

class integrity_failure : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Cross-checks the embedded fixtures once per process.
inline void ensure_fixture_integrity()
{
    static const fixtures::integrity_report r = fixtures::check_integrity();
    if (!r.ok)
        throw integrity_failure("embedded fixtures are inconsistent: " + r.detail);
}

/// Fixture name (small-graph, combo-graph, or a partition fixture) or path to a graph file.
inline hypergraph resolve_graph(const std::string& arg)
{
    if (auto id = fixtures::from_name(arg)) {
        ensure_fixture_integrity();
        switch (*id) {
        case fixtures::fixture_id::small_graph:
        case fixtures::fixture_id::small_partition:
        case fixtures::fixture_id::small_for_heuristic: return fixtures::small_graph();
        default: return fixtures::combo_graph();
        }
    }
    return read_hypergraph(read_file(arg));
}

inline bool is_labeling_fixture(const std::string& arg)
{
    auto id = fixtures::from_name(arg);
    return id && (*id == fixtures::fixture_id::small_for_heuristic || *id == fixtures::fixture_id::combo_for_alpha_pi3 ||
                  *id == fixtures::fixture_id::combo_for_alpha_pi2);
}

/// Vector fixture name or path to a vector file.
inline vector_labeling resolve_labeling(const std::string& arg, double eps)
{
    if (is_labeling_fixture(arg)) {
        ensure_fixture_integrity();
        const vector_labeling& l = *fixtures::from_name(arg) == fixtures::fixture_id::small_for_heuristic
                                       ? fixtures::small_heuristic_for()
                                   : *fixtures::from_name(arg) == fixtures::fixture_id::combo_for_alpha_pi3
                                       ? fixtures::combo_for_alpha_pi3()
                                       : fixtures::combo_for_alpha_pi2();
        return vector_labeling(l.labels(), eps);
    }
    return read_labeling(read_file(arg), eps);
}

/// Runs `body`, mapping input errors to exit 2 and recording wall time.
inline report guarded(std::string command, json inputs, const std::function<void(report&)>& body)
{
    report r;
    r.command = std::move(command);
    r.inputs = std::move(inputs);
    const auto start = std::chrono::steady_clock::now();
    try {
        body(r);
    } catch (const integrity_failure& e) {
        r = report{r.command, r.inputs, json::object(), json::object(), exit_input, "", e.what()};
    } catch (const parse_error& e) {
        r = report{r.command, r.inputs, json::object(), json::object(), exit_input, "", std::string("parse error: ") + e.what()};
    } catch (const validation_error& e) {
        r = report{r.command, r.inputs, json::object(), json::object(), exit_input, "", std::string("invalid input: ") + e.what()};
    } catch (const precondition_error& e) {
        r = report{r.command, r.inputs, json::object(), json::object(), exit_input, "", std::string("invalid input: ") + e.what()};
    } catch (const json::exception& e) {
        r = report{r.command, r.inputs, json::object(), json::object(), exit_input, "", std::string("invalid input: ") + e.what()};
    }
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    r.timings["seconds"] = elapsed.count();
    return r;
}

namespace detail
{

inline json pairs_to_json(const std::vector<vertex_pair>& ps)
{
    json j = json::array();
    for (const auto& [u, v] : ps)
        j.push_back({u, v});
    return j;
}

inline std::string pairs_to_text(const std::vector<vertex_pair>& ps)
{
    std::string s;
    for (std::size_t i = 0; i < ps.size(); ++i)
        s += (i == 0 ? "" : ", ") + std::string("(") + std::to_string(ps[i].first) + "," + std::to_string(ps[i].second) + ")";
    return s;
}

inline std::string edge_text(const hyperedge& e)
{
    return "{" + std::to_string(e[0]) + "," + std::to_string(e[1]) + "," + std::to_string(e[2]) + "}";
}

inline std::string rational_text(const rational& r) { return r.str(); }

inline std::string vector_text(const vec3& v)
{
    return "(" + format_double(v[0]) + ", " + format_double(v[1]) + ", " + format_double(v[2]) + ")";
}

} // namespace detail

// --- states ----------------------------------------------------------------

struct states_options
{
    std::string graph;
    bool dump = false;
    bool separating = false;
    bool partition = false;
};

inline report cmd_states(const states_options& o)
{
    json inputs{{"graph", o.graph}, {"dump", o.dump}, {"separating", o.separating}, {"partition", o.partition}};
    return guarded("states", std::move(inputs), [&](report& r) {
        const hypergraph h = resolve_graph(o.graph);
        const state_set s = enumerate_two_valued_states(h);
        std::ostringstream text;
        text << s.size() << "\n";
        r.results["count"] = s.size();
        if (o.separating) {
            const auto sep = is_separating(s, h);
            r.results["separating"] = sep.separating;
            if (sep.separating) {
                text << "separating: yes\n";
            } else {
                r.results["unseparated"] = {sep.unseparated->first, sep.unseparated->second};
                text << "separating: no (atoms " << sep.unseparated->first << " and " << sep.unseparated->second
                     << " take equal values on every state)\n";
            }
        }
        if (o.partition && !s.empty()) {
            const auto p = partition_representation_of(s);
            r.results["partition"] = partition_to_json(p);
            for (vertex_id v = 1; v <= p.vertex_count(); ++v) {
                text << "b" << v << " = {";
                for (std::size_t i = 0; i < p.of(v).size(); ++i)
                    text << (i == 0 ? "" : ",") << p.of(v)[i];
                text << "}\n";
            }
        }
        if (o.dump) {
            json states = json::array();
            for (const auto& st : s)
                states.push_back(st.to_string());
            r.results["states"] = std::move(states);
            text << write_states(s);
        }
        r.text = text.str();
    });
}

// --- pseudo ----------------------------------------------------------------

struct pseudo_options
{
    std::string graph;
    int k = 3;
    std::optional<std::pair<std::string, std::string>> pair = std::nullopt;
    bool coverings = false;
    bool bounds = false;
    std::size_t coverings_limit = 100;
};

inline report cmd_pseudo(const pseudo_options& o)
{
    json inputs{{"graph", o.graph}, {"k", o.k}};
    if (o.pair)
        inputs["pair"] = {o.pair->first, o.pair->second};
    inputs["coverings"] = o.coverings;
    inputs["bounds"] = o.bounds;
    inputs["coverings_limit"] = o.coverings_limit;
    return guarded("pseudo", std::move(inputs), [&](report& r) {
        const hypergraph h = resolve_graph(o.graph);
        std::ostringstream text;

        if (!o.pair) {
            const auto pairs = find_pseudocontext_pairs(h, o.k);
            json list = json::array();
            text << pairs.size() << " certified pair" << (pairs.size() == 1 ? "" : "s") << " of size " << o.k << "\n";
            for (const auto& [a, b] : pairs) {
                list.push_back({a.members(), b.members()});
                text << format_subset(a) << " " << format_subset(b) << "\n";
            }
            r.results["pairs"] = std::move(list);
            r.text = text.str();
            return;
        }

        const vertex_subset a = parse_subset(o.pair->first);
        const vertex_subset b = parse_subset(o.pair->second);
        const auto cert = verify_pseudocontext_pair(h, a, b);
        if (!cert) {
            r.results["certificate"] = nullptr;
            text << "no certificate for " << format_subset(a) << " " << format_subset(b) << "\n";
            r.exit_code = exit_negative;
        } else {
            r.results["certificate"] = certificate_to_json(*cert);
            text << "certificate for " << format_subset(a) << " " << format_subset(b) << ":\n";
            for (const auto& [e, c] : cert->lambda)
                text << "  lambda" << detail::edge_text(e) << " = " << detail::rational_text(c) << "\n";
        }

        if (o.coverings) {
            json all = json::object();
            for (const auto& [label, excluded] : {std::pair{"avoiding_B", b}, std::pair{"avoiding_A", a}}) {
                const auto cs = find_coverings(h, excluded, o.coverings_limit);
                json list = json::array();
                text << "coverings of the atoms outside " << format_subset(excluded) << ": " << cs.size()
                     << (o.coverings_limit != 0 && cs.size() == o.coverings_limit ? " (limit reached)" : "") << "\n";
                for (const auto& c : cs) {
                    list.push_back(covering_to_json(c));
                    text << "  " << c.edges.size() << " edges:";
                    for (const auto& e : c.edges)
                        text << " " << detail::edge_text(e);
                    text << "\n";
                }
                all[label] = std::move(list);
            }
            r.results["coverings"] = std::move(all);
        }

        if (o.bounds) {
            const state_set s = enumerate_two_valued_states(h);
            const auto ba = classical_bounds(s, a);
            const auto bb = classical_bounds(s, b);
            r.results["classical_bounds"] = {{"A", {ba.lo, ba.hi}}, {"B", {bb.lo, bb.hi}}};
            text << "classical bounds on " << format_subset(a) << ": [" << ba.lo << ", " << ba.hi << "]\n";
            text << "classical bounds on " << format_subset(b) << ": [" << bb.lo << ", " << bb.hi << "]\n";
        }
        r.text = text.str();
    });
}

// --- for -------------------------------------------------------------------

struct for_options
{
    std::string action; ///< construct | verify | infer | bounds
    // construct
    std::string variant = "small";
    double alpha = 0.0;
    rotation_sense sense = rotation_sense::counterclockwise;
    std::string output;
    // verify / infer / bounds
    std::string labeling;
    std::string graph;
    std::string set;
    std::string compare;
    double epsilon = vector_labeling::default_epsilon;
};

namespace detail
{

inline void construct(report& r, const for_options& o)
{
    std::ostringstream text;
    try {
        vector_labeling l;
        if (o.variant == "small") {
            l = construct_small_for(o.alpha);
            r.results["alpha"] = o.alpha;
            text << "alpha = " << format_double(o.alpha) << "\n";
        } else if (o.variant == "combo") {
            auto c = construct_combo_for(o.alpha, o.sense);
            r.results["alpha"] = c.alpha;
            r.results["beta"] = c.beta;
            r.results["aperture"] = c.aperture;
            text << "alpha = " << format_double(c.alpha) << "\nbeta = " << format_double(c.beta)
                 << "\naperture = " << format_double(c.aperture) << "\n";
            l = std::move(c.labeling);
        } else {
            throw precondition_error("variant must be small or combo");
        }
        r.results["vectors"] = labeling_to_json(l);
        for (vertex_id v = 1; v <= l.vertex_count(); ++v)
            text << "v" << v << " = " << vector_text(l(v).components()) << "\n";
        if (!o.output.empty())
            write_file(o.output, write_labeling(l));
    } catch (const degenerate_construction& e) {
        r.exit_code = exit_negative;
        r.results["degenerate"] = to_string(e.kind());
        r.results["pairs"] = pairs_to_json(e.pairs());
        text << e.what() << "\n";
        if (!e.cube().empty()) {
            json cube = json::array();
            text << "limit configuration (cube edges and face diagonals):\n";
            for (const auto& v : e.cube()) {
                cube.push_back({v[0], v[1], v[2]});
                text << "  " << vector_text(v) << "\n";
            }
            r.results["cube_representation"] = std::move(cube);
        }
    }
    r.text = text.str();
}

inline hypergraph graph_for_labeling(const for_options& o)
{
    if (!o.graph.empty())
        return resolve_graph(o.graph);
    if (is_labeling_fixture(o.labeling))
        return resolve_graph(o.labeling);
    throw precondition_error("--graph is required for a labeling read from a file");
}

inline void verify(report& r, const for_options& o)
{
    const hypergraph h = graph_for_labeling(o);
    const vector_labeling l = resolve_labeling(o.labeling, o.epsilon);
    const for_report fr = verify_for(h, l);
    r.results["missing_orthogonality"] = pairs_to_json(fr.missing_orthogonality);
    r.results["extra_orthogonality"] = pairs_to_json(fr.extra_orthogonality);
    r.results["duplicates"] = pairs_to_json(fr.duplicates);
    r.results["clean"] = fr.clean();
    std::ostringstream text;
    if (fr.clean()) {
        text << "faithful: all " << h.edge_count() << " contexts orthogonal, no extra orthogonality, no duplicates\n";
    } else {
        r.exit_code = exit_negative;
        if (!fr.missing_orthogonality.empty())
            text << "missing orthogonality: " << pairs_to_text(fr.missing_orthogonality) << "\n";
        if (!fr.extra_orthogonality.empty())
            text << "extra orthogonality: " << pairs_to_text(fr.extra_orthogonality) << "\n";
        if (!fr.duplicates.empty())
            text << "duplicates: " << pairs_to_text(fr.duplicates) << "\n";
    }
    r.text = text.str();
}

inline void infer(report& r, const for_options& o)
{
    const vector_labeling l = resolve_labeling(o.labeling, o.epsilon);
    try {
        const hypergraph h = infer_hypergraph_from_labels(l);
        r.results["hypergraph"] = hypergraph_to_json(h);
        r.text = serialize_hypergraph(h);
    } catch (const validation_error& e) {
        // The file was fine; the vectors just do not form a conformal 3-uniform diagram.
        r.exit_code = exit_negative;
        r.results["hypergraph"] = nullptr;
        r.results["reason"] = e.what();
        r.text = std::string("no hypergraph: ") + e.what() + "\n";
    }
}

inline void bounds(report& r, const for_options& o)
{
    if (o.set.empty())
        throw precondition_error("--set is required");
    const vector_labeling l = resolve_labeling(o.labeling, o.epsilon);
    const vertex_subset a = parse_subset(o.set);
    for (vertex_id v : a)
        if (v > l.vertex_count())
            throw precondition_error("vertex " + std::to_string(v) + " has no label");

    std::ostringstream text;
    auto matrix_json = [](const sym_matrix3& m) {
        json rows = json::array();
        for (std::size_t i = 0; i < 3; ++i)
            rows.push_back({m(i, 0), m(i, 1), m(i, 2)});
        return rows;
    };
    const sym_matrix3 m = projector_sum(l, a);
    const auto d = eigen_sym3(m);
    const auto overlaps = pairwise_overlaps(l, a);
    r.results["set"] = a.members();
    r.results["projector_sum"] = matrix_json(m);
    r.results["eigenvalues"] = {d.values[0], d.values[1], d.values[2]};
    json vecs = json::array();
    for (const auto& u : d.vectors)
        vecs.push_back({u.x(), u.y(), u.z()});
    r.results["eigenvectors"] = std::move(vecs);
    r.results["quantum_interval"] = {d.values[0], d.values[2]};
    r.results["pairwise_overlaps"] = overlaps;

    text << "projector sum over " << format_subset(a) << ":\n";
    for (std::size_t i = 0; i < 3; ++i)
        text << "  " << format_double(m(i, 0)) << " " << format_double(m(i, 1)) << " " << format_double(m(i, 2)) << "\n";
    text << "eigenvalues:";
    for (double x : d.values)
        text << " " << format_double(x);
    text << "\n";
    for (std::size_t i = 0; i < 3; ++i)
        text << "  eigenvector " << i + 1 << ": " << vector_text(d.vectors[i].components()) << "\n";
    text << "quantum interval: [" << format_double(d.values[0]) << ", " << format_double(d.values[2]) << "]\n";
    text << "pairwise overlaps:";
    for (double x : overlaps)
        text << " " << format_double(x);
    text << "\n";

    if (!o.compare.empty()) {
        const vertex_subset b = parse_subset(o.compare);
        for (vertex_id v : b)
            if (v > l.vertex_count())
                throw precondition_error("vertex " + std::to_string(v) + " has no label");
        const double diff = m.max_abs_diff(projector_sum(l, b));
        r.results["compare"] = {{"set", b.members()}, {"max_abs_difference", diff}, {"equal", diff <= 1e-9}};
        text << "max |P(" << format_subset(a) << ") - P(" << format_subset(b) << ")| = " << format_double(diff)
             << (diff <= 1e-9 ? " (equal)" : " (different)") << "\n";
    }
    r.text = text.str();
}

} // namespace detail

inline report cmd_for(const for_options& o)
{
    json inputs{{"action", o.action}};
    if (o.action == "construct") {
        inputs["variant"] = o.variant;
        inputs["alpha"] = o.alpha;
        if (o.variant == "combo")
            inputs["sense"] = o.sense == rotation_sense::counterclockwise ? "ccw" : "cw";
    } else {
        inputs["labeling"] = o.labeling;
        if (!o.graph.empty())
            inputs["graph"] = o.graph;
        if (!o.set.empty())
            inputs["set"] = o.set;
        if (!o.compare.empty())
            inputs["compare"] = o.compare;
        inputs["epsilon"] = o.epsilon;
    }
    return guarded("for " + o.action, std::move(inputs), [&](report& r) {
        if (o.action == "construct")
            detail::construct(r, o);
        else if (o.action == "verify")
            detail::verify(r, o);
        else if (o.action == "infer")
            detail::infer(r, o);
        else if (o.action == "bounds")
            detail::bounds(r, o);
        else
            throw precondition_error("unknown action " + o.action);
    });
}

// --- table -----------------------------------------------------------------

struct table_options
{
    std::string what; ///< beta-curve | alpha0
    int steps = 100;
};

inline report cmd_table(const table_options& o)
{
    json inputs{{"what", o.what}};
    if (o.what == "beta-curve")
        inputs["steps"] = o.steps;
    return guarded("table " + o.what, std::move(inputs), [&](report& r) {
        std::ostringstream text;
        if (o.what == "beta-curve") {
            if (o.steps < 1)
                throw precondition_error("--steps must be at least 1");
            json rows = json::array();
            text << "alpha,beta,aperture\n";
            for (int i = 0; i <= o.steps; ++i) {
                // Hit the endpoint exactly rather than through accumulated rounding.
                const double alpha = i == o.steps ? alpha_max : alpha_max * i / o.steps;
                const double beta = beta_of_alpha(alpha);
                const double aperture = combo_aperture(alpha);
                rows.push_back({alpha, beta, aperture});
                text << format_double(alpha) << "," << format_double(beta) << "," << format_double(aperture) << "\n";
            }
            r.results["columns"] = {"alpha", "beta", "aperture"};
            r.results["rows"] = std::move(rows);
        } else if (o.what == "alpha0") {
            const double a0 = degenerate_alpha();
            const auto v = small_construction_raw(a0);
            r.results["alpha0"] = a0;
            r.results["residual"] = dot(v[4], v[10]);
            text << format_double(a0) << "\n";
        } else {
            throw precondition_error("table must be beta-curve or alpha0");
        }
        r.text = text.str();
    });
}

} // namespace pseudoctx::cli

#endif // PSEUDOCTX_CLI_HPP
