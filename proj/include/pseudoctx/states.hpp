#ifndef PSEUDOCTX_STATES_HPP
#define PSEUDOCTX_STATES_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "pseudoctx/error.hpp"
#include "pseudoctx/hypergraph.hpp"

namespace pseudoctx
{

/// A 0/1 valuation of the atoms. Valid iff every edge holds exactly one 1.
class two_valued_state
{
public:
    two_valued_state() = default;
    explicit two_valued_state(std::vector<std::uint8_t> values) : values_(std::move(values)) {}

    /// From a 0/1 string, vertex 1 first.
    static two_valued_state from_string(std::string_view bits)
    {
        std::vector<std::uint8_t> v;
        v.reserve(bits.size());
        for (char c : bits) {
            if (c != '0' && c != '1')
                throw precondition_error("state strings may contain only 0 and 1");
            v.push_back(c == '1' ? 1 : 0);
        }
        return two_valued_state(std::move(v));
    }

    int vertex_count() const noexcept { return static_cast<int>(values_.size()); }
    bool operator()(vertex_id v) const { return values_.at(static_cast<std::size_t>(v - 1)) != 0; }
    const std::vector<std::uint8_t>& values() const noexcept { return values_; }

    int sum_over(const vertex_subset& s) const
    {
        int total = 0;
        for (vertex_id v : s)
            total += (*this)(v) ? 1 : 0;
        return total;
    }

    bool satisfies(const hypergraph& h) const
    {
        if (vertex_count() != h.vertex_count())
            return false;
        return std::all_of(h.edges().begin(), h.edges().end(), [&](const hyperedge& e) {
            return (*this)(e[0]) + (*this)(e[1]) + (*this)(e[2]) == 1;
        });
    }

    std::string to_string() const
    {
        std::string s;
        s.reserve(values_.size());
        for (auto b : values_)
            s.push_back(b ? '1' : '0');
        return s;
    }

    friend bool operator==(const two_valued_state&, const two_valued_state&) = default;

    /// Canonical order: lexicographically descending bit strings, vertex 1 most
    /// significant, so that 100 precedes 010 precedes 001.
    friend bool canonical_before(const two_valued_state& a, const two_valued_state& b)
    {
        return a.values_ > b.values_;
    }

private:
    std::vector<std::uint8_t> values_;
};

/// All two-valued states of a hypergraph, duplicate-free, in canonical order.
struct state_set
{
    int vertex_count = 0;
    std::vector<two_valued_state> states;

    std::size_t size() const noexcept { return states.size(); }
    bool empty() const noexcept { return states.empty(); }
    const two_valued_state& operator[](std::size_t i) const { return states[i]; }
    auto begin() const noexcept { return states.begin(); }
    auto end() const noexcept { return states.end(); }

    bool contains(const two_valued_state& s) const
    {
        return std::binary_search(states.begin(), states.end(), s, [](const auto& a, const auto& b) {
            return canonical_before(a, b);
        });
    }
};

/// Exhaustive depth-first enumeration over vertices in ascending order.
///
/// Each edge tracks how many members carry a 1 and how many are still free;
/// a branch dies as soon as an edge would get a second 1 or end up with none.
/// Trying 1 before 0 emits the states directly in canonical order.
inline state_set enumerate_two_valued_states(const hypergraph& h)
{
    const int n = h.vertex_count();
    const auto inc = h.incidence();
    std::vector<int> ones(h.edge_count(), 0);
    std::vector<int> free_count(h.edge_count(), 3);
    std::vector<std::uint8_t> current(static_cast<std::size_t>(n), 0);
    state_set out{n, {}};

    auto recurse = [&](auto&& self, int v) -> void {
        if (v > n) {
            out.states.emplace_back(current);
            return;
        }
        const auto& edges_of_v = inc[static_cast<std::size_t>(v)];

        bool can_be_one = std::none_of(edges_of_v.begin(), edges_of_v.end(), [&](std::size_t e) { return ones[e] > 0; });
        if (can_be_one) {
            current[static_cast<std::size_t>(v - 1)] = 1;
            for (std::size_t e : edges_of_v) {
                ++ones[e];
                --free_count[e];
            }
            self(self, v + 1);
            for (std::size_t e : edges_of_v) {
                --ones[e];
                ++free_count[e];
            }
        }

        bool can_be_zero = std::none_of(edges_of_v.begin(), edges_of_v.end(),
                                        [&](std::size_t e) { return ones[e] == 0 && free_count[e] == 1; });
        if (can_be_zero) {
            current[static_cast<std::size_t>(v - 1)] = 0;
            for (std::size_t e : edges_of_v)
                --free_count[e];
            self(self, v + 1);
            for (std::size_t e : edges_of_v)
                ++free_count[e];
        }
    };
    recurse(recurse, 1);
    return out;
}

struct separation_result
{
    bool separating = true;
    std::optional<std::pair<vertex_id, vertex_id>> unseparated;
};

/// Kochen-Specker separation: every pair of distinct atoms differs on some state.
inline separation_result is_separating(const state_set& s, const hypergraph& h)
{
    const int n = h.vertex_count();
    if (s.vertex_count != n)
        throw precondition_error("state set and hypergraph disagree on the vertex count");
    // Column of each vertex across states; two vertices are separated iff the columns differ.
    std::vector<boost::dynamic_bitset<>> column(static_cast<std::size_t>(n) + 1, boost::dynamic_bitset<>(s.size()));
    for (std::size_t i = 0; i < s.size(); ++i)
        for (vertex_id v = 1; v <= n; ++v)
            if (s[i](v))
                column[static_cast<std::size_t>(v)].set(i);
    for (vertex_id u = 1; u <= n; ++u)
        for (vertex_id v = u + 1; v <= n; ++v)
            if (column[static_cast<std::size_t>(u)] == column[static_cast<std::size_t>(v)])
                return {false, std::pair{u, v}};
    return {};
}

/// Boolean set representation: for every atom the 1-based positions of the states that assign it 1.
struct partition_representation
{
    int state_count = 0;
    std::vector<std::vector<int>> sets; // sets[v - 1]

    int vertex_count() const noexcept { return static_cast<int>(sets.size()); }
    const std::vector<int>& of(vertex_id v) const { return sets.at(static_cast<std::size_t>(v - 1)); }

    /// True iff the three sets of every edge are pairwise disjoint and cover 1..state_count.
    bool partitions_every_edge(const hypergraph& h) const
    {
        return std::all_of(h.edges().begin(), h.edges().end(), [&](const hyperedge& e) {
            boost::dynamic_bitset<> seen(static_cast<std::size_t>(state_count));
            for (vertex_id v : e)
                for (int idx : of(v)) {
                    auto i = static_cast<std::size_t>(idx - 1);
                    if (seen.test(i))
                        return false;
                    seen.set(i);
                }
            return seen.all();
        });
    }
};

inline partition_representation partition_representation_of(const state_set& s)
{
    if (s.empty())
        throw precondition_error("partition representation needs at least one state");
    partition_representation p{static_cast<int>(s.size()), std::vector<std::vector<int>>(static_cast<std::size_t>(s.vertex_count))};
    for (std::size_t i = 0; i < s.size(); ++i)
        for (vertex_id v = 1; v <= s.vertex_count; ++v)
            if (s[i](v))
                p.sets[static_cast<std::size_t>(v - 1)].push_back(static_cast<int>(i) + 1);
    return p;
}

/// Every atom triple whose index sets partition 1..N. Exhaustive over all C(n,3) triples.
inline std::vector<hyperedge> edges_from_partition(const partition_representation& p)
{
    const int n = p.vertex_count();
    const auto big_n = static_cast<std::size_t>(p.state_count);
    std::vector<boost::dynamic_bitset<>> bits(static_cast<std::size_t>(n), boost::dynamic_bitset<>(big_n));
    for (int v = 0; v < n; ++v)
        for (int idx : p.sets[static_cast<std::size_t>(v)]) {
            if (idx < 1 || static_cast<std::size_t>(idx) > big_n)
                throw precondition_error("state index out of range in partition representation");
            bits[static_cast<std::size_t>(v)].set(static_cast<std::size_t>(idx - 1));
        }

    std::vector<hyperedge> out;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            const auto& ba = bits[static_cast<std::size_t>(a)];
            const auto& bb = bits[static_cast<std::size_t>(b)];
            if (ba.intersects(bb))
                continue;
            const auto ab = ba | bb;
            for (int c = b + 1; c < n; ++c) {
                const auto& bc = bits[static_cast<std::size_t>(c)];
                if (ab.count() + bc.count() == big_n && !ab.intersects(bc))
                    out.emplace_back(a + 1, b + 1, c + 1);
            }
        }
    return out;
}

/// Colors 1..3 per atom (index v - 1).
struct coloring
{
    std::vector<int> colors;

    int operator()(vertex_id v) const { return colors.at(static_cast<std::size_t>(v - 1)); }

    bool rainbow_on(const std::array<vertex_id, 3>& t) const
    {
        const int a = (*this)(t[0]), b = (*this)(t[1]), c = (*this)(t[2]);
        return a != b && a != c && b != c;
    }

    bool rainbow_on(const hypergraph& h) const
    {
        if (static_cast<int>(colors.size()) != h.vertex_count())
            return false;
        return std::all_of(h.edges().begin(), h.edges().end(),
                           [&](const hyperedge& e) { return rainbow_on(e.members()); });
    }
};

/// Backtracking 3-coloring with every edge (and every triple in `also_rainbow`) carrying all three
/// colors. Vertices go in ascending order and colors are tried 1, 2, 3, so the result is the
/// lexicographically first such coloring.
inline std::optional<coloring> find_rainbow_coloring(const hypergraph& h,
                                                     const std::vector<std::array<vertex_id, 3>>& also_rainbow = {})
{
    const int n = h.vertex_count();
    std::vector<std::array<vertex_id, 3>> triples;
    for (const auto& e : h.edges())
        triples.push_back(e.members());
    triples.insert(triples.end(), also_rainbow.begin(), also_rainbow.end());

    std::vector<std::vector<std::size_t>> inc(static_cast<std::size_t>(n) + 1);
    for (std::size_t i = 0; i < triples.size(); ++i)
        for (vertex_id v : triples[i]) {
            if (v < 1 || v > n)
                throw precondition_error("rainbow triple refers to an unknown vertex");
            inc[static_cast<std::size_t>(v)].push_back(i);
        }

    std::vector<int> colors(static_cast<std::size_t>(n), 0);
    auto clashes = [&](vertex_id v, int color) {
        for (std::size_t t : inc[static_cast<std::size_t>(v)])
            for (vertex_id w : triples[t])
                if (w != v && colors[static_cast<std::size_t>(w - 1)] == color)
                    return true;
        return false;
    };
    auto recurse = [&](auto&& self, vertex_id v) -> bool {
        if (v > n)
            return true;
        for (int color = 1; color <= 3; ++color) {
            if (clashes(v, color))
                continue;
            colors[static_cast<std::size_t>(v - 1)] = color;
            if (self(self, v + 1))
                return true;
        }
        colors[static_cast<std::size_t>(v - 1)] = 0;
        return false;
    };
    if (!recurse(recurse, 1))
        return std::nullopt;
    return coloring{colors};
}

/// The state that is 1 exactly on the atoms of `chosen_color`.
inline two_valued_state state_from_coloring(const coloring& c, int chosen_color, const hypergraph& h)
{
    if (chosen_color < 1 || chosen_color > 3)
        throw precondition_error("chosen color must be 1, 2 or 3");
    if (!c.rainbow_on(h))
        throw precondition_error("coloring is not rainbow on every edge");
    std::vector<std::uint8_t> v;
    v.reserve(c.colors.size());
    for (int col : c.colors)
        v.push_back(col == chosen_color ? 1 : 0);
    return two_valued_state(std::move(v));
}

} // namespace pseudoctx

#endif // PSEUDOCTX_STATES_HPP
