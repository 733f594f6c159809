#ifndef PSEUDOCTX_GEOMETRY_HPP
#define PSEUDOCTX_GEOMETRY_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "pseudoctx/error.hpp"
#include "pseudoctx/hypergraph.hpp"
#include "pseudoctx/vec3.hpp"

namespace pseudoctx
{

/// A direction in R^3, normalized at construction to within 1e-12.
class unit_vector3
{
public:
    static constexpr double norm_tolerance = 1e-12;

    explicit unit_vector3(const vec3& v) : v_(v)
    {
        if (!(std::abs(norm(v) - 1.0) <= norm_tolerance))
            throw precondition_error("vector is not of unit length");
    }

    /// Scales v to unit length; v must be nonzero.
    static unit_vector3 normalized(const vec3& v)
    {
        const double len = norm(v);
        if (!(len > 0.0) || !std::isfinite(len))
            throw precondition_error("cannot normalize a zero vector");
        vec3 u = (1.0 / len) * v;
        // One more pass pins the norm to the last ulp.
        u = (1.0 / norm(u)) * u;
        return unit_vector3(u);
    }

    const vec3& components() const noexcept { return v_; }
    double x() const noexcept { return v_[0]; }
    double y() const noexcept { return v_[1]; }
    double z() const noexcept { return v_[2]; }
    double operator[](std::size_t i) const noexcept { return v_[i]; }

private:
    vec3 v_;
};

inline double dot(const unit_vector3& a, const unit_vector3& b) noexcept { return dot(a.components(), b.components()); }

/// Unit-vector label for every atom 1..n, plus the tolerance under which two labels count as orthogonal.
class vector_labeling
{
public:
    static constexpr double default_epsilon = 1e-10;

    vector_labeling() = default;
    explicit vector_labeling(std::vector<unit_vector3> labels, double epsilon = default_epsilon)
        : labels_(std::move(labels)), epsilon_(epsilon)
    {
    }

    /// From raw coordinates, each of which must already be unit length.
    static vector_labeling from_components(const std::vector<vec3>& raw, double epsilon = default_epsilon)
    {
        std::vector<unit_vector3> labels;
        labels.reserve(raw.size());
        for (const auto& v : raw)
            labels.push_back(unit_vector3::normalized(v));
        for (std::size_t i = 0; i < raw.size(); ++i)
            if (std::abs(norm(raw[i]) - 1.0) > 1e-12)
                throw precondition_error("label " + std::to_string(i + 1) + " is not of unit length");
        return vector_labeling(std::move(labels), epsilon);
    }

    int vertex_count() const noexcept { return static_cast<int>(labels_.size()); }
    double epsilon() const noexcept { return epsilon_; }
    const unit_vector3& operator()(vertex_id v) const { return labels_.at(static_cast<std::size_t>(v - 1)); }
    const std::vector<unit_vector3>& labels() const noexcept { return labels_; }

    double overlap(vertex_id u, vertex_id v) const { return std::abs(dot((*this)(u), (*this)(v))); }

private:
    std::vector<unit_vector3> labels_;
    double epsilon_ = default_epsilon;
};

using vertex_pair = std::pair<vertex_id, vertex_id>;

/// Outcome of checking a labeling against a hypergraph.
///
/// The labeling is a faithful (and conformal) orthogonal representation iff all three lists are empty.
struct for_report
{
    std::vector<vertex_pair> missing_orthogonality; ///< same-edge pairs with |<u|v>| > eps
    std::vector<vertex_pair> extra_orthogonality;   ///< non-adjacent pairs with |<u|v>| <= eps
    std::vector<vertex_pair> duplicates;            ///< distinct atoms with |<u|v>| >= 1 - eps

    bool clean() const noexcept
    {
        return missing_orthogonality.empty() && extra_orthogonality.empty() && duplicates.empty();
    }

    bool has_extra(vertex_id u, vertex_id v) const
    {
        return std::find(extra_orthogonality.begin(), extra_orthogonality.end(), vertex_pair{std::min(u, v), std::max(u, v)}) !=
               extra_orthogonality.end();
    }
};

/// Checks all pairs, not only those at distance 4 or more in the diagram.
inline for_report verify_for(const hypergraph& h, const vector_labeling& l)
{
    if (l.vertex_count() < h.vertex_count())
        throw precondition_error("labeling is missing vertex " + std::to_string(l.vertex_count() + 1));
    if (l.vertex_count() > h.vertex_count())
        throw precondition_error("labeling has more vectors than the hypergraph has vertices");
    const int n = h.vertex_count();
    const double eps = l.epsilon();

    std::vector<std::vector<bool>> adj(static_cast<std::size_t>(n) + 1, std::vector<bool>(static_cast<std::size_t>(n) + 1));
    for (const auto& e : h.edges())
        for (vertex_id u : e)
            for (vertex_id v : e)
                adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = true;

    for_report r;
    for (vertex_id u = 1; u <= n; ++u)
        for (vertex_id v = u + 1; v <= n; ++v) {
            const double ov = l.overlap(u, v);
            if (adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]) {
                if (ov > eps)
                    r.missing_orthogonality.emplace_back(u, v);
            } else if (ov <= eps) {
                r.extra_orthogonality.emplace_back(u, v);
            }
            if (ov >= 1.0 - eps)
                r.duplicates.emplace_back(u, v);
        }
    return r;
}

/// Hypergraph whose edges are the maximal cliques of the orthogonality relation.
/// Every maximal clique must be a triple; otherwise the labeling is not the
/// representation of a 3-uniform conformal hypergraph and validation_error is thrown.
inline hypergraph infer_hypergraph_from_labels(const vector_labeling& l)
{
    const int n = l.vertex_count();
    const double eps = l.epsilon();
    std::vector<std::vector<bool>> orth(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const double ov = l.overlap(i + 1, j + 1);
            if (ov >= 1.0 - eps)
                throw validation_error("labels " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                                       " coincide up to sign");
            orth[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = ov <= eps;
            orth[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = ov <= eps;
        }

    // Bron-Kerbosch with pivoting; n is at most a few hundred here.
    std::vector<std::vector<int>> cliques;
    auto bk = [&](auto&& self, std::vector<int> r, std::vector<int> p, std::vector<int> x) -> void {
        if (p.empty() && x.empty()) {
            cliques.push_back(std::move(r));
            return;
        }
        int pivot = p.empty() ? x.front() : p.front();
        std::size_t best = 0;
        for (const auto* set : {&p, &x})
            for (int u : *set) {
                std::size_t deg = 0;
                for (int w : p)
                    deg += orth[static_cast<std::size_t>(u)][static_cast<std::size_t>(w)] ? 1 : 0;
                if (deg > best) {
                    best = deg;
                    pivot = u;
                }
            }
        const auto candidates = p;
        for (int v : candidates) {
            if (orth[static_cast<std::size_t>(pivot)][static_cast<std::size_t>(v)])
                continue;
            std::vector<int> r2 = r, p2, x2;
            r2.push_back(v);
            for (int w : p)
                if (orth[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)])
                    p2.push_back(w);
            for (int w : x)
                if (orth[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)])
                    x2.push_back(w);
            self(self, std::move(r2), std::move(p2), std::move(x2));
            p.erase(std::find(p.begin(), p.end(), v));
            x.push_back(v);
        }
    };
    std::vector<int> all(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        all[static_cast<std::size_t>(i)] = i;
    bk(bk, {}, all, {});

    std::vector<hyperedge> edges;
    for (auto& c : cliques) {
        std::sort(c.begin(), c.end());
        if (c.size() != 3) {
            std::string members;
            for (int v : c)
                members += (members.empty() ? "" : ",") + std::to_string(v + 1);
            throw validation_error("maximal orthogonality clique {" + members + "} has size " +
                                   std::to_string(c.size()) + ", expected 3");
        }
        edges.emplace_back(c[0] + 1, c[1] + 1, c[2] + 1);
    }
    return hypergraph(n, std::move(edges));
}

/// Symmetric 3x3 matrix stored as its upper triangle.
class sym_matrix3
{
public:
    sym_matrix3() = default;
    sym_matrix3(double xx, double yy, double zz, double xy, double xz, double yz) : a_{xx, yy, zz, xy, xz, yz} {}

    static sym_matrix3 identity() { return {1, 1, 1, 0, 0, 0}; }
    static sym_matrix3 diagonal(double a, double b, double c) { return {a, b, c, 0, 0, 0}; }

    double operator()(std::size_t i, std::size_t j) const noexcept
    {
        if (i == j)
            return a_[i];
        if (i > j)
            std::swap(i, j);
        return a_[i + j + 2]; // (0,1)->3, (0,2)->4, (1,2)->5
    }

    /// this += w |v><v|
    void add_outer(const vec3& v, double w = 1.0) noexcept
    {
        a_[0] += w * v[0] * v[0];
        a_[1] += w * v[1] * v[1];
        a_[2] += w * v[2] * v[2];
        a_[3] += w * v[0] * v[1];
        a_[4] += w * v[0] * v[2];
        a_[5] += w * v[1] * v[2];
    }

    double trace() const noexcept { return a_[0] + a_[1] + a_[2]; }

    vec3 apply(const vec3& v) const noexcept
    {
        vec3 out{};
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                out[i] += (*this)(i, j) * v[j];
        return out;
    }

    double max_abs_diff(const sym_matrix3& o) const noexcept
    {
        double m = 0;
        for (std::size_t k = 0; k < 6; ++k)
            m = std::max(m, std::abs(a_[k] - o.a_[k]));
        return m;
    }

    double max_abs() const noexcept { return max_abs_diff(sym_matrix3{}); }

private:
    std::array<double, 6> a_{};
};

struct eigen_decomposition3
{
    std::array<double, 3> values;        ///< ascending
    std::array<unit_vector3, 3> vectors; ///< vectors[i] belongs to values[i]
};

namespace detail
{

/// Cyclic Jacobi rotations; used when eigenvalues are too close for the closed form.
inline eigen_decomposition3 jacobi_sym3(const sym_matrix3& m)
{
    double a[3][3];
    double v[3][3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            a[i][j] = m(i, j);

    for (int sweep = 0; sweep < 64; ++sweep) {
        const double off = a[0][1] * a[0][1] + a[0][2] * a[0][2] + a[1][2] * a[1][2];
        if (off == 0.0)
            break;
        for (int p = 0; p < 2; ++p)
            for (int q = p + 1; q < 3; ++q) {
                if (a[p][q] == 0.0)
                    continue;
                const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (int k = 0; k < 3; ++k) {
                    const double akp = a[k][p], akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (int k = 0; k < 3; ++k) {
                    const double apk = a[p][k], aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
                for (int k = 0; k < 3; ++k) {
                    const double vkp = v[k][p], vkq = v[k][q];
                    v[k][p] = c * vkp - s * vkq;
                    v[k][q] = s * vkp + c * vkq;
                }
            }
    }
    std::array<int, 3> order{0, 1, 2};
    std::sort(order.begin(), order.end(), [&](int i, int j) { return a[i][i] < a[j][j]; });
    auto column = [&](int k) { return unit_vector3::normalized({v[0][k], v[1][k], v[2][k]}); };
    return {{a[order[0]][order[0]], a[order[1]][order[1]], a[order[2]][order[2]]},
            {column(order[0]), column(order[1]), column(order[2])}};
}

inline double eigen_residual(const sym_matrix3& m, const eigen_decomposition3& d)
{
    double worst = 0;
    for (std::size_t i = 0; i < 3; ++i) {
        const vec3 r = m.apply(d.vectors[i].components()) - d.values[i] * d.vectors[i].components();
        worst = std::max(worst, norm(r));
        for (std::size_t j = i + 1; j < 3; ++j)
            worst = std::max(worst, std::abs(dot(d.vectors[i], d.vectors[j])));
    }
    return worst;
}

} // namespace detail

/// Eigenvalues from the trigonometric solution of the characteristic cubic,
/// eigenvectors from cross products of rows of (M - lambda I). Falls back to
/// Jacobi iteration when two eigenvalues nearly coincide or the closed form
/// leaves a residual above 1e-12 (relative to the matrix scale).
inline eigen_decomposition3 eigen_sym3(const sym_matrix3& m)
{
    const double scale = std::max(1.0, m.max_abs());
    const double p1 = m(0, 1) * m(0, 1) + m(0, 2) * m(0, 2) + m(1, 2) * m(1, 2);
    const double q = m.trace() / 3.0;
    const double p2 = (m(0, 0) - q) * (m(0, 0) - q) + (m(1, 1) - q) * (m(1, 1) - q) + (m(2, 2) - q) * (m(2, 2) - q) + 2.0 * p1;
    const double p = std::sqrt(p2 / 6.0);
    if (p1 == 0.0 || p <= 1e-300)
        return detail::jacobi_sym3(m);

    const double b00 = (m(0, 0) - q) / p, b11 = (m(1, 1) - q) / p, b22 = (m(2, 2) - q) / p;
    const double b01 = m(0, 1) / p, b02 = m(0, 2) / p, b12 = m(1, 2) / p;
    const double det = b00 * (b11 * b22 - b12 * b12) - b01 * (b01 * b22 - b12 * b02) + b02 * (b01 * b12 - b11 * b02);
    const double r = std::clamp(det / 2.0, -1.0, 1.0);
    const double phi = std::acos(r) / 3.0;
    const double hi = q + 2.0 * p * std::cos(phi);
    const double lo = q + 2.0 * p * std::cos(phi + 2.0 * std::numbers::pi / 3.0);
    const double mid = 3.0 * q - hi - lo;
    const std::array<double, 3> values{lo, mid, hi};

    if (mid - lo < 1e-6 * scale || hi - mid < 1e-6 * scale)
        return detail::jacobi_sym3(m);

    auto vector_for = [&](double lambda) {
        const vec3 r0{m(0, 0) - lambda, m(0, 1), m(0, 2)};
        const vec3 r1{m(1, 0), m(1, 1) - lambda, m(1, 2)};
        const vec3 r2{m(2, 0), m(2, 1), m(2, 2) - lambda};
        vec3 best = cross(r0, r1);
        for (const vec3& c : {cross(r0, r2), cross(r1, r2)})
            if (norm(c) > norm(best))
                best = c;
        return unit_vector3::normalized(best);
    };
    eigen_decomposition3 d{values, {vector_for(lo), vector_for(mid), vector_for(hi)}};
    if (detail::eigen_residual(m, d) > 1e-12 * scale)
        return detail::jacobi_sym3(m);
    return d;
}

/// sum over A of |v><v|
inline sym_matrix3 projector_sum(const vector_labeling& l, const vertex_subset& a)
{
    sym_matrix3 s;
    for (vertex_id v : a)
        s.add_outer(l(v).components());
    return s;
}

struct quantum_interval
{
    double lo;
    double hi;
};

/// Range of sum_{v in A} |<v|psi>|^2 over unit psi: the extreme eigenvalues of the projector sum.
inline quantum_interval quantum_bounds(const vector_labeling& l, const vertex_subset& a)
{
    const auto d = eigen_sym3(projector_sum(l, a));
    return {d.values[0], d.values[2]};
}

/// p(v) = <v|psi>^2 for every atom (index v - 1).
inline std::vector<double> born_probabilities(const vector_labeling& l, const unit_vector3& psi)
{
    std::vector<double> p;
    p.reserve(l.labels().size());
    for (const auto& v : l.labels()) {
        const double a = dot(v, psi);
        p.push_back(a * a);
    }
    return p;
}

/// Equality of |<v_i|v_j>| for every pair; the comparison is blind to global
/// rotations, reflections and per-label sign flips.
inline bool gram_equivalent(const vector_labeling& l1, const vector_labeling& l2, double tolerance = 1e-8)
{
    if (l1.vertex_count() != l2.vertex_count())
        return false;
    const int n = l1.vertex_count();
    for (vertex_id i = 1; i <= n; ++i)
        for (vertex_id j = i + 1; j <= n; ++j)
            if (std::abs(l1.overlap(i, j) - l2.overlap(i, j)) > tolerance)
                return false;
    return true;
}

/// |<v_i|v_j>| for all unordered pairs of A, in lexicographic pair order.
inline std::vector<double> pairwise_overlaps(const vector_labeling& l, const vertex_subset& a)
{
    std::vector<double> out;
    const auto& m = a.members();
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = i + 1; j < m.size(); ++j)
            out.push_back(l.overlap(m[i], m[j]));
    return out;
}

} // namespace pseudoctx

#endif // PSEUDOCTX_GEOMETRY_HPP
