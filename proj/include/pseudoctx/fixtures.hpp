#ifndef PSEUDOCTX_FIXTURES_HPP
#define PSEUDOCTX_FIXTURES_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pseudoctx/fixture_data.hpp"
#include "pseudoctx/geometry.hpp"
#include "pseudoctx/hypergraph.hpp"
#include "pseudoctx/states.hpp"

namespace pseudoctx::fixtures
{

enum class fixture_id
{
    small_graph,
    combo_graph,
    small_for_heuristic,
    combo_for_alpha_pi3,
    combo_for_alpha_pi2,
    small_partition,
    combo_partition
};

inline constexpr std::string_view name_of(fixture_id id)
{
    switch (id) {
    case fixture_id::small_graph: return "small-graph";
    case fixture_id::combo_graph: return "combo-graph";
    case fixture_id::small_for_heuristic: return "small-for-heuristic";
    case fixture_id::combo_for_alpha_pi3: return "combo-for-alpha-pi3";
    case fixture_id::combo_for_alpha_pi2: return "combo-for-alpha-pi2";
    case fixture_id::small_partition: return "small-partition";
    case fixture_id::combo_partition: return "combo-partition";
    }
    return "";
}

inline std::optional<fixture_id> from_name(std::string_view name)
{
    for (auto id : {fixture_id::small_graph, fixture_id::combo_graph, fixture_id::small_for_heuristic,
                    fixture_id::combo_for_alpha_pi3, fixture_id::combo_for_alpha_pi2, fixture_id::small_partition,
                    fixture_id::combo_partition})
        if (name_of(id) == name)
            return id;
    return std::nullopt;
}

namespace detail
{

inline partition_representation to_partition(const std::vector<std::vector<int>>& sets)
{
    int states = 0;
    for (const auto& s : sets)
        for (int i : s)
            states = std::max(states, i);
    return {states, sets};
}

} // namespace detail

inline const partition_representation& small_partition()
{
    static const partition_representation p = detail::to_partition(fixture_data::small_partition_sets());
    return p;
}

inline const partition_representation& combo_partition()
{
    static const partition_representation p = detail::to_partition(fixture_data::combo_partition_sets());
    return p;
}

inline const vector_labeling& small_heuristic_for()
{
    static const vector_labeling l = vector_labeling::from_components(fixture_data::small_heuristic_vectors());
    return l;
}

inline const vector_labeling& combo_for_alpha_pi3()
{
    static const vector_labeling l = vector_labeling::from_components(fixture_data::combo_alpha_pi3_vectors());
    return l;
}

inline const vector_labeling& combo_for_alpha_pi2()
{
    static const vector_labeling l = vector_labeling::from_components(fixture_data::combo_alpha_pi2_vectors());
    return l;
}

/// The 15-atom, 8-context gadget, reconstructed from its set representation.
inline const hypergraph& small_graph()
{
    static const hypergraph h =
        make_hypergraph(small_partition().vertex_count(), edges_from_partition(small_partition()));
    return h;
}

/// The 36-atom, 22-context combo, reconstructed from its set representation.
inline const hypergraph& combo_graph()
{
    static const hypergraph h =
        make_hypergraph(combo_partition().vertex_count(), edges_from_partition(combo_partition()));
    return h;
}

struct integrity_report
{
    bool ok = true;
    std::string detail;
};

/// Cross-checks the two independent graph reconstructions: index sets that
/// partition the state range vs. maximal orthogonality cliques of the vectors.
inline integrity_report check_integrity()
{
    integrity_report r;
    auto compare = [&](std::string_view what, const partition_representation& p, const vector_labeling& l) {
        const hypergraph from_sets(p.vertex_count(), edges_from_partition(p));
        hypergraph from_vectors;
        try {
            from_vectors = infer_hypergraph_from_labels(l);
        } catch (const std::exception& e) {
            r.ok = false;
            r.detail += std::string(what) + ": " + e.what() + "; ";
            return;
        }
        if (!(from_sets == from_vectors)) {
            r.ok = false;
            r.detail += std::string(what) + ": reconstructions disagree; ";
        }
    };
    compare("small", small_partition(), small_heuristic_for());
    compare("combo (alpha = pi/3)", combo_partition(), combo_for_alpha_pi3());
    compare("combo (alpha = pi/2)", combo_partition(), combo_for_alpha_pi2());
    return r;
}

} // namespace pseudoctx::fixtures

#endif // PSEUDOCTX_FIXTURES_HPP
