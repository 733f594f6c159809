#ifndef PSEUDOCTX_HYPERGRAPH_HPP
#define PSEUDOCTX_HYPERGRAPH_HPP

#include <algorithm>
#include <array>
#include <cctype>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pseudoctx/error.hpp"

namespace pseudoctx
{

/// 1-based atom label. Within one hypergraph the labels are exactly 1..n.
using vertex_id = int;

/// A context: three distinct atoms, stored sorted so that equality ignores input order.
class hyperedge
{
public:
    hyperedge(vertex_id a, vertex_id b, vertex_id c) : members_{a, b, c}
    {
        std::sort(members_.begin(), members_.end());
        if (members_[0] == members_[1] || members_[1] == members_[2])
            throw validation_error("hyperedge members must be distinct");
        if (members_[0] < 1)
            throw validation_error("vertex ids must be positive");
    }

    const std::array<vertex_id, 3>& members() const noexcept { return members_; }
    vertex_id operator[](std::size_t i) const noexcept { return members_[i]; }
    auto begin() const noexcept { return members_.begin(); }
    auto end() const noexcept { return members_.end(); }

    bool contains(vertex_id v) const noexcept
    {
        return members_[0] == v || members_[1] == v || members_[2] == v;
    }

    std::size_t shared_with(const hyperedge& other) const noexcept
    {
        std::size_t k = 0;
        for (vertex_id v : members_)
            k += other.contains(v) ? 1 : 0;
        return k;
    }

    friend auto operator<=>(const hyperedge&, const hyperedge&) = default;
    friend bool operator==(const hyperedge&, const hyperedge&) = default;

private:
    std::array<vertex_id, 3> members_;
};

/// Sorted, duplicate-free set of atoms.
class vertex_subset
{
public:
    vertex_subset() = default;
    vertex_subset(std::initializer_list<vertex_id> ids) : members_(ids) { canonicalize(); }
    explicit vertex_subset(std::vector<vertex_id> ids) : members_(std::move(ids)) { canonicalize(); }

    const std::vector<vertex_id>& members() const noexcept { return members_; }
    std::size_t size() const noexcept { return members_.size(); }
    bool empty() const noexcept { return members_.empty(); }
    auto begin() const noexcept { return members_.begin(); }
    auto end() const noexcept { return members_.end(); }

    bool contains(vertex_id v) const { return std::binary_search(members_.begin(), members_.end(), v); }

    bool intersects(const vertex_subset& other) const
    {
        return std::any_of(members_.begin(), members_.end(), [&](vertex_id v) { return other.contains(v); });
    }

    bool inside(const hyperedge& e) const
    {
        return std::all_of(members_.begin(), members_.end(), [&](vertex_id v) { return e.contains(v); });
    }

    friend auto operator<=>(const vertex_subset&, const vertex_subset&) = default;
    friend bool operator==(const vertex_subset&, const vertex_subset&) = default;

private:
    void canonicalize()
    {
        std::sort(members_.begin(), members_.end());
        members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    }

    std::vector<vertex_id> members_;
};

/// A 3-uniform hypergraph on atoms 1..n.
///
/// Construction does not validate; use `validate` for diagnostics or
/// `make_hypergraph` / `parse_hypergraph` to obtain a checked instance.
/// Edges are kept sorted; duplicates survive only so that `validate` can report them.
class hypergraph
{
public:
    hypergraph() = default;
    hypergraph(int n, std::vector<hyperedge> edges) : n_(n), edges_(std::move(edges))
    {
        std::sort(edges_.begin(), edges_.end());
    }

    int vertex_count() const noexcept { return n_; }
    const std::vector<hyperedge>& edges() const noexcept { return edges_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    bool has_edge(const hyperedge& e) const { return std::binary_search(edges_.begin(), edges_.end(), e); }

    /// True if u and v lie in a common edge.
    bool adjacent(vertex_id u, vertex_id v) const
    {
        return std::any_of(edges_.begin(), edges_.end(), [&](const hyperedge& e) { return e.contains(u) && e.contains(v); });
    }

    /// True if every member of s lies in one edge.
    bool inside_some_edge(const vertex_subset& s) const
    {
        return std::any_of(edges_.begin(), edges_.end(), [&](const hyperedge& e) { return s.inside(e); });
    }

    /// Indices into edges() of the edges incident to each vertex (index 0 unused).
    std::vector<std::vector<std::size_t>> incidence() const
    {
        std::vector<std::vector<std::size_t>> inc(static_cast<std::size_t>(n_) + 1);
        for (std::size_t i = 0; i < edges_.size(); ++i)
            for (vertex_id v : edges_[i])
                if (v >= 1 && v <= n_)
                    inc[static_cast<std::size_t>(v)].push_back(i);
        return inc;
    }

    friend bool operator==(const hypergraph&, const hypergraph&) = default;

private:
    int n_ = 0;
    std::vector<hyperedge> edges_;
};

struct diagnostic
{
    enum class kind
    {
        isolated_vertex,
        duplicate_edge,
        shared_pair,
        vertex_out_of_range
    };

    kind what;
    std::vector<vertex_id> vertices;

    std::string message() const
    {
        std::ostringstream os;
        switch (what) {
        case kind::isolated_vertex: os << "isolated vertex " << vertices.at(0); break;
        case kind::duplicate_edge: os << "duplicate edge"; break;
        case kind::shared_pair: os << "edges share the pair"; break;
        case kind::vertex_out_of_range: os << "vertex out of range"; break;
        }
        if (what != kind::isolated_vertex)
            for (std::size_t i = 0; i < vertices.size(); ++i)
                os << (i == 0 ? " " : ",") << vertices[i];
        return os.str();
    }

    friend bool operator==(const diagnostic&, const diagnostic&) = default;
};

/// One diagnostic per violated structural invariant; empty iff the hypergraph is valid.
inline std::vector<diagnostic> validate(const hypergraph& h)
{
    std::vector<diagnostic> out;
    const auto& edges = h.edges();

    for (const auto& e : edges)
        for (vertex_id v : e)
            if (v > h.vertex_count())
                out.push_back({diagnostic::kind::vertex_out_of_range, {v}});

    for (std::size_t i = 1; i < edges.size(); ++i)
        if (edges[i] == edges[i - 1])
            out.push_back({diagnostic::kind::duplicate_edge, {edges[i][0], edges[i][1], edges[i][2]}});

    // A pair of atoms may co-occur in at most one context.
    std::map<std::pair<vertex_id, vertex_id>, int> pair_count;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (i > 0 && edges[i] == edges[i - 1])
            continue;
        const auto& m = edges[i].members();
        for (auto [a, b] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}})
            if (++pair_count[{m[a], m[b]}] == 2)
                out.push_back({diagnostic::kind::shared_pair, {m[a], m[b]}});
    }

    std::vector<bool> seen(static_cast<std::size_t>(h.vertex_count()) + 1, false);
    for (const auto& e : edges)
        for (vertex_id v : e)
            if (v <= h.vertex_count())
                seen[static_cast<std::size_t>(v)] = true;
    for (vertex_id v = 1; v <= h.vertex_count(); ++v)
        if (!seen[static_cast<std::size_t>(v)])
            out.push_back({diagnostic::kind::isolated_vertex, {v}});
    return out;
}

/// Builds a hypergraph and throws validation_error listing every violated invariant.
inline hypergraph make_hypergraph(int n, std::vector<hyperedge> edges)
{
    hypergraph h(n, std::move(edges));
    auto diags = validate(h);
    if (!diags.empty()) {
        std::string msg = "invalid hypergraph:";
        for (const auto& d : diags)
            msg += " " + d.message() + ";";
        throw validation_error(msg);
    }
    return h;
}

/// Degree of every vertex, indexed by vertex id (index 0 unused and zero).
inline std::vector<int> vertex_degrees(const hypergraph& h)
{
    std::vector<int> deg(static_cast<std::size_t>(h.vertex_count()) + 1, 0);
    for (const auto& e : h.edges())
        for (vertex_id v : e)
            ++deg.at(static_cast<std::size_t>(v));
    return deg;
}

namespace detail
{

inline hypergraph finish_parsed(std::vector<hyperedge> edges, std::vector<std::pair<int, int>> positions)
{
    int n = 0;
    for (const auto& e : edges)
        n = std::max(n, e[2]);
    hypergraph h(n, edges);
    auto diags = validate(h);
    if (diags.empty())
        return h;

    // Report the first problem against the line that introduced it.
    auto line_of = [&](const std::vector<vertex_id>& vs) {
        for (std::size_t i = 0; i < edges.size(); ++i) {
            if (vs.size() == 3 && hyperedge(vs[0], vs[1], vs[2]) == edges[i]) {
                for (std::size_t j = i + 1; j < edges.size(); ++j)
                    if (edges[j] == edges[i])
                        return positions[j];
            }
            if (vs.size() == 2) {
                for (std::size_t j = i + 1; j < edges.size(); ++j)
                    if (edges[i].contains(vs[0]) && edges[i].contains(vs[1]) && edges[j].contains(vs[0]) &&
                        edges[j].contains(vs[1]))
                        return positions[j];
            }
        }
        return std::pair{1, 1};
    };

    const auto& d = diags.front();
    switch (d.what) {
    case diagnostic::kind::duplicate_edge: {
        auto [l, c] = line_of(d.vertices);
        throw parse_error("duplicate edge", l, c);
    }
    case diagnostic::kind::shared_pair: {
        auto [l, c] = line_of(d.vertices);
        throw parse_error("edges share two vertices " + std::to_string(d.vertices[0]) + " and " +
                              std::to_string(d.vertices[1]),
                          l, c);
    }
    case diagnostic::kind::isolated_vertex:
        throw parse_error("gap in vertex numbering: vertex " + std::to_string(d.vertices[0]) + " never appears",
                          1, 1);
    default:
        throw parse_error(d.message(), 1, 1);
    }
}

} // namespace detail

/// Parses the line-oriented format: one edge per line, three positive integers,
/// `#` comments, blank lines ignored. The vertex count is the largest id seen.
inline hypergraph parse_hypergraph(std::string_view text)
{
    std::vector<hyperedge> edges;
    std::vector<std::pair<int, int>> positions;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos)
            eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);

        std::vector<vertex_id> ids;
        int first_col = 0;
        std::size_t i = 0;
        while (i < line.size()) {
            unsigned char ch = static_cast<unsigned char>(line[i]);
            if (std::isspace(ch)) {
                ++i;
                continue;
            }
            const int col = static_cast<int>(i) + 1;
            if (!std::isdigit(ch))
                throw parse_error(std::string("unexpected character '") + line[i] + "'", line_no, col);
            long long value = 0;
            while (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i]))) {
                value = value * 10 + (line[i] - '0');
                if (value > 1'000'000)
                    throw parse_error("vertex id too large", line_no, col);
                ++i;
            }
            if (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])))
                throw parse_error(std::string("unexpected character '") + line[i] + "'", line_no,
                                  static_cast<int>(i) + 1);
            if (value == 0)
                throw parse_error("vertex ids are 1-based", line_no, col);
            if (ids.empty())
                first_col = col;
            ids.push_back(static_cast<vertex_id>(value));
        }
        if (!ids.empty()) {
            if (ids.size() != 3)
                throw parse_error("edge has " + std::to_string(ids.size()) + " members, expected 3", line_no,
                                  first_col);
            if (ids[0] == ids[1] || ids[0] == ids[2] || ids[1] == ids[2])
                throw parse_error("edge members must be distinct", line_no, first_col);
            edges.emplace_back(ids[0], ids[1], ids[2]);
            positions.emplace_back(line_no, first_col);
        }
        pos = eol + 1;
    }
    if (edges.empty())
        throw parse_error("no edges", line_no, 1);

    // positions must follow the sorted edge order used by hypergraph.
    std::vector<std::size_t> order(edges.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return edges[a] < edges[b]; });
    std::vector<hyperedge> sorted_edges;
    std::vector<std::pair<int, int>> sorted_pos;
    for (std::size_t i : order) {
        sorted_edges.push_back(edges[i]);
        sorted_pos.push_back(positions[i]);
    }
    return detail::finish_parsed(std::move(sorted_edges), std::move(sorted_pos));
}

/// Inverse of parse_hypergraph: one sorted edge per line.
inline std::string serialize_hypergraph(const hypergraph& h)
{
    std::ostringstream os;
    for (const auto& e : h.edges())
        os << e[0] << ' ' << e[1] << ' ' << e[2] << '\n';
    return os.str();
}

} // namespace pseudoctx

#endif // PSEUDOCTX_HYPERGRAPH_HPP
