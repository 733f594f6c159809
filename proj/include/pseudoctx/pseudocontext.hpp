#ifndef PSEUDOCTX_PSEUDOCONTEXT_HPP
#define PSEUDOCTX_PSEUDOCONTEXT_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pseudoctx/error.hpp"
#include "pseudoctx/hypergraph.hpp"
#include "pseudoctx/rational.hpp"
#include "pseudoctx/states.hpp"

namespace pseudoctx
{

/// Exact proof that two atom sets carry the same probability sum under every
/// assignment with unit sum per context:
///
///     chi_A - chi_B = sum_e lambda_e chi_e   and   sum_e lambda_e = 0.
///
/// `lambda` lists the edges with nonzero coefficient, in edge order.
struct pseudocontext_certificate
{
    vertex_subset a;
    vertex_subset b;
    std::vector<std::pair<hyperedge, rational>> lambda;

    /// Re-checks both identities coordinatewise in exact arithmetic.
    bool holds_for(const hypergraph& h) const
    {
        std::vector<rational> lhs(static_cast<std::size_t>(h.vertex_count()) + 1);
        rational total = 0;
        for (const auto& [e, coeff] : lambda) {
            if (!h.has_edge(e))
                return false;
            total += coeff;
            for (vertex_id v : e)
                lhs[static_cast<std::size_t>(v)] += coeff;
        }
        if (total != 0)
            return false;
        for (vertex_id v = 1; v <= h.vertex_count(); ++v) {
            const int expected = (a.contains(v) ? 1 : 0) - (b.contains(v) ? 1 : 0);
            if (lhs[static_cast<std::size_t>(v)] != expected)
                return false;
        }
        return true;
    }
};

namespace detail
{

inline void check_subset_in_range(const hypergraph& h, const vertex_subset& s, const char* name)
{
    if (s.empty())
        throw precondition_error(std::string(name) + " is empty");
    if (s.members().front() < 1 || s.members().back() > h.vertex_count())
        throw precondition_error(std::string(name) + " refers to an unknown vertex");
}

inline void check_pair_preconditions(const hypergraph& h, const vertex_subset& a, const vertex_subset& b)
{
    check_subset_in_range(h, a, "A");
    check_subset_in_range(h, b, "B");
    if (a.intersects(b))
        throw precondition_error("A and B must be disjoint");
    if (h.inside_some_edge(a))
        throw precondition_error("A lies inside a context");
    if (h.inside_some_edge(b))
        throw precondition_error("B lies inside a context");
}

} // namespace detail

/// Solves for the edge coefficients by exact Gaussian elimination on the
/// vertex-edge incidence matrix augmented with the zero-sum row.
/// Returns nullopt when no such combination exists.
inline std::optional<pseudocontext_certificate> verify_pseudocontext_pair(const hypergraph& h, const vertex_subset& a,
                                                                          const vertex_subset& b)
{
    detail::check_pair_preconditions(h, a, b);
    const std::size_t n = static_cast<std::size_t>(h.vertex_count());
    const std::size_t m = h.edge_count();
    rational_matrix sys(n + 1, m + 1);
    for (std::size_t j = 0; j < m; ++j) {
        for (vertex_id v : h.edges()[j])
            sys(static_cast<std::size_t>(v - 1), j) = 1;
        sys(n, j) = 1;
    }
    for (vertex_id v : a)
        sys(static_cast<std::size_t>(v - 1), m) += 1;
    for (vertex_id v : b)
        sys(static_cast<std::size_t>(v - 1), m) -= 1;

    auto x = solve_augmented(std::move(sys));
    if (!x)
        return std::nullopt;
    pseudocontext_certificate cert{a, b, {}};
    for (std::size_t j = 0; j < m; ++j)
        if ((*x)[j] != 0)
            cert.lambda.emplace_back(h.edges()[j], (*x)[j]);
    return cert;
}

/// A set of edges covering every atom outside `excluded` exactly once and no atom of `excluded`.
struct covering
{
    std::vector<hyperedge> edges;
    vertex_subset excluded;
};

/// All exact covers of V \ excluded by edges that avoid `excluded`.
/// Branches on the uncovered atom with the fewest usable edges. `limit` = 0 means no cap.
inline std::vector<covering> find_coverings(const hypergraph& h, const vertex_subset& excluded, std::size_t limit = 0)
{
    const int n = h.vertex_count();
    std::vector<hyperedge> usable;
    for (const auto& e : h.edges())
        if (!excluded.contains(e[0]) && !excluded.contains(e[1]) && !excluded.contains(e[2]))
            usable.push_back(e);

    std::vector<std::vector<std::size_t>> inc(static_cast<std::size_t>(n) + 1);
    for (std::size_t i = 0; i < usable.size(); ++i)
        for (vertex_id v : usable[i])
            inc[static_cast<std::size_t>(v)].push_back(i);

    std::vector<bool> covered(static_cast<std::size_t>(n) + 1, false);
    for (vertex_id v : excluded)
        if (v >= 1 && v <= n)
            covered[static_cast<std::size_t>(v)] = true;

    std::vector<covering> out;
    std::vector<hyperedge> chosen;
    auto fits = [&](std::size_t e) {
        return !covered[static_cast<std::size_t>(usable[e][0])] && !covered[static_cast<std::size_t>(usable[e][1])] &&
               !covered[static_cast<std::size_t>(usable[e][2])];
    };
    auto recurse = [&](auto&& self) -> void {
        if (limit != 0 && out.size() >= limit)
            return;
        vertex_id best = 0;
        std::size_t best_options = 0;
        for (vertex_id v = 1; v <= n; ++v) {
            if (covered[static_cast<std::size_t>(v)])
                continue;
            std::size_t options = 0;
            for (std::size_t e : inc[static_cast<std::size_t>(v)])
                options += fits(e) ? 1 : 0;
            if (best == 0 || options < best_options) {
                best = v;
                best_options = options;
            }
            if (options == 0)
                return;
        }
        if (best == 0) {
            auto edges = chosen;
            std::sort(edges.begin(), edges.end());
            out.push_back({std::move(edges), excluded});
            return;
        }
        for (std::size_t e : inc[static_cast<std::size_t>(best)]) {
            if (!fits(e))
                continue;
            for (vertex_id v : usable[e])
                covered[static_cast<std::size_t>(v)] = true;
            chosen.push_back(usable[e]);
            self(self);
            chosen.pop_back();
            for (vertex_id v : usable[e])
                covered[static_cast<std::size_t>(v)] = false;
        }
    };
    recurse(recurse);
    return out;
}

/// Certificate read off two coverings: +1 on the covering that leaves out B,
/// -1 on the covering that leaves out A (shared edges cancel).
inline pseudocontext_certificate certificate_from_coverings(const covering& leaves_out_b, const covering& leaves_out_a)
{
    if (leaves_out_b.edges.size() != leaves_out_a.edges.size())
        throw precondition_error("coverings of different size do not give a zero-sum certificate");
    std::map<hyperedge, rational> coeff;
    for (const auto& e : leaves_out_b.edges)
        coeff[e] += 1;
    for (const auto& e : leaves_out_a.edges)
        coeff[e] -= 1;
    pseudocontext_certificate cert{leaves_out_a.excluded, leaves_out_b.excluded, {}};
    for (auto& [e, c] : coeff)
        if (c != 0)
            cert.lambda.emplace_back(e, c);
    return cert;
}

/// Normal form of vertex indicators modulo the zero-sum edge span
/// W = { sum_e lambda_e chi_e : sum_e lambda_e = 0 }.
///
/// chi_A - chi_B lies in W iff signature(A) == signature(B), which turns the
/// pair search into hashing subset signatures.
class edge_span_signatures
{
public:
    explicit edge_span_signatures(const hypergraph& h) : n_(static_cast<std::size_t>(h.vertex_count()))
    {
        // W is spanned by chi_e - chi_{e0} for every edge e != e0.
        const auto& edges = h.edges();
        const std::size_t rows = edges.empty() ? 0 : edges.size() - 1;
        rational_matrix basis(std::max<std::size_t>(rows, 1), n_);
        for (std::size_t i = 1; i < edges.size(); ++i) {
            for (vertex_id v : edges[i])
                basis(i - 1, static_cast<std::size_t>(v - 1)) += 1;
            for (vertex_id v : edges[0])
                basis(i - 1, static_cast<std::size_t>(v - 1)) -= 1;
        }
        pivots_ = basis.reduce(n_);
        rows_.reserve(pivots_.size());
        for (std::size_t r = 0; r < pivots_.size(); ++r) {
            std::vector<rational> row(n_);
            for (std::size_t c = 0; c < n_; ++c)
                row[c] = basis(r, c);
            rows_.push_back(std::move(row));
        }
        per_vertex_.reserve(n_);
        for (std::size_t v = 0; v < n_; ++v) {
            std::vector<rational> x(n_);
            x[v] = 1;
            per_vertex_.push_back(reduce(std::move(x)));
        }
    }

    std::size_t span_dimension() const noexcept { return pivots_.size(); }

    std::vector<rational> of(const vertex_subset& s) const
    {
        std::vector<rational> sig(n_);
        for (vertex_id v : s) {
            const auto& pv = per_vertex_.at(static_cast<std::size_t>(v - 1));
            for (std::size_t c = 0; c < n_; ++c)
                sig[c] += pv[c];
        }
        return sig;
    }

private:
    std::vector<rational> reduce(std::vector<rational> x) const
    {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const rational f = x[pivots_[r]];
            if (f == 0)
                continue;
            for (std::size_t c = 0; c < n_; ++c)
                x[c] -= f * rows_[r][c];
        }
        return x;
    }

    std::size_t n_;
    std::vector<std::size_t> pivots_;
    std::vector<std::vector<rational>> rows_;
    std::vector<std::vector<rational>> per_vertex_;
};

using subset_pair = std::pair<vertex_subset, vertex_subset>;

/// All unordered pairs of disjoint k-subsets, neither inside a context, that admit a certificate.
/// Each pair is reported once with first < second; the list is sorted.
inline std::vector<subset_pair> find_pseudocontext_pairs(const hypergraph& h, int k = 3)
{
    if (k < 2)
        throw precondition_error("pseudocontext size must be at least 2");
    const int n = h.vertex_count();
    edge_span_signatures sig(h);

    std::map<std::vector<rational>, std::vector<vertex_subset>> classes;
    std::vector<vertex_id> pick;
    auto recurse = [&](auto&& self, vertex_id next) -> void {
        if (static_cast<int>(pick.size()) == k) {
            vertex_subset s(pick);
            if (!h.inside_some_edge(s))
                classes[sig.of(s)].push_back(std::move(s));
            return;
        }
        for (vertex_id v = next; v <= n - (k - static_cast<int>(pick.size())) + 1; ++v) {
            pick.push_back(v);
            self(self, v + 1);
            pick.pop_back();
        }
    };
    recurse(recurse, 1);

    std::vector<subset_pair> out;
    for (const auto& [key, members] : classes)
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = i + 1; j < members.size(); ++j)
                if (!members[i].intersects(members[j]))
                    out.emplace_back(std::min(members[i], members[j]), std::max(members[i], members[j]));
    std::sort(out.begin(), out.end());
    return out;
}

/// Extremes of sum_{v in A} s(v) over the two-valued states. Because classical
/// probabilities are convex mixtures of these states, the same numbers bound
/// the classical probability sum.
struct classical_bounds_t
{
    int lo = 0;
    int hi = 0;
    friend bool operator==(const classical_bounds_t&, const classical_bounds_t&) = default;
};

inline classical_bounds_t classical_bounds(const state_set& s, const vertex_subset& a)
{
    if (s.empty())
        throw precondition_error("classical bounds need at least one state");
    classical_bounds_t b{static_cast<int>(a.size()), 0};
    for (const auto& st : s) {
        const int sum = st.sum_over(a);
        b.lo = std::min(b.lo, sum);
        b.hi = std::max(b.hi, sum);
    }
    return b;
}

/// Joint behaviour of the two set sums across all two-valued states.
struct gadget_report
{
    /// joint[{sa, sb}] = number of states with sum sa on A and sb on B.
    std::map<std::pair<int, int>, int> joint;
    /// Every state vanishing on A vanishes on B.
    bool false_implies_false = false;
    /// Every state vanishing on B vanishes on A.
    bool false_implies_false_reverse = false;
    /// The joint distribution is invariant under A <-> B.
    bool symmetric = false;
    /// Levels m >= 1 attained on A such that every state with sum m on A has sum m on B.
    std::vector<int> true_implies_true_levels;
    /// Largest sum attained on A.
    int max_level = 0;

    bool true_implies_true_at(int m) const
    {
        return std::find(true_implies_true_levels.begin(), true_implies_true_levels.end(), m) !=
               true_implies_true_levels.end();
    }
};

inline gadget_report classify_gadget(const state_set& s, const vertex_subset& a, const vertex_subset& b)
{
    if (a.empty() || b.empty() || a.intersects(b))
        throw precondition_error("gadget classification needs two nonempty disjoint sets");
    gadget_report r;
    for (const auto& st : s)
        ++r.joint[{st.sum_over(a), st.sum_over(b)}];

    r.false_implies_false = true;
    r.false_implies_false_reverse = true;
    r.symmetric = true;
    std::map<int, bool> level_forces;
    for (const auto& [sums, count] : r.joint) {
        const auto [sa, sb] = sums;
        if (sa == 0 && sb != 0)
            r.false_implies_false = false;
        if (sb == 0 && sa != 0)
            r.false_implies_false_reverse = false;
        auto mirrored = r.joint.find({sb, sa});
        if (mirrored == r.joint.end() || mirrored->second != count)
            r.symmetric = false;
        r.max_level = std::max(r.max_level, sa);
        if (sa >= 1) {
            auto [it, fresh] = level_forces.try_emplace(sa, sa == sb);
            if (!fresh)
                it->second = it->second && sa == sb;
        }
    }
    for (const auto& [level, forced] : level_forces)
        if (forced)
            r.true_implies_true_levels.push_back(level);
    return r;
}

} // namespace pseudoctx

#endif // PSEUDOCTX_PSEUDOCONTEXT_HPP
