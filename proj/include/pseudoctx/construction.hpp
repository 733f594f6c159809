#ifndef PSEUDOCTX_CONSTRUCTION_HPP
#define PSEUDOCTX_CONSTRUCTION_HPP

// Analytic orthogonal representations of the 15-atom gadget and the 36-atom combo.
//
// Gadget: the spine contexts {4,9,14} and {2,7,12} sit on the cone z = 1/sqrt(3)
// around the z-axis. Vertex 4 is (sqrt(2/3), 0, 1/sqrt(3)); 9 and 14 follow at
// azimuth 2pi/3 and 4pi/3. {2,7,12} is {4,9,14} turned by alpha about z. All
// other atoms are normalized cross products of the two atoms they must be
// orthogonal to.
//
// Combo: two copies of the gadget, the second turned about z by beta(alpha) so
// that the six pairs of gadget pseudocontext atoms facing each other become
// orthogonal. The six stitching atoms {4,16,28} and {10,22,34} are the cross
// products of those pairs.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "pseudoctx/error.hpp"
#include "pseudoctx/fixtures.hpp"
#include "pseudoctx/geometry.hpp"
#include "pseudoctx/vec3.hpp"

namespace pseudoctx
{

/// Upper end of the combo parameter range: pi - arccos(4/5) = 2 arctan 3.
inline const double alpha_max = std::numbers::pi - std::acos(0.8);

/// Parameter values closer than this to a degenerate value are treated as that value.
inline constexpr double alpha_tolerance = 1e-9;

/// Rotation angle between the two halves of the combo as a function of alpha, on [0, alpha_max].
inline double beta_of_alpha(double alpha)
{
    if (!(alpha >= -alpha_tolerance && alpha <= alpha_max + alpha_tolerance))
        throw precondition_error("beta(alpha) is defined only for alpha in [0, pi - arccos(4/5)]");
    const double c = std::cos(alpha);
    return std::acos(std::clamp((c - 1.0) / (5.0 + 4.0 * c), -1.0, 1.0));
}

/// Unchecked gadget vectors (index v - 1). Degenerate alpha gives zero-length
/// cross products, which are returned as the zero vector.
inline std::vector<vec3> small_construction_raw(double alpha)
{
    const double rho = std::sqrt(2.0 / 3.0);
    const double h = 1.0 / std::sqrt(3.0);
    auto cone = [&](double phi) { return vec3{rho * std::cos(phi), rho * std::sin(phi), h}; };
    auto unit_cross = [](const vec3& a, const vec3& b) {
        const vec3 c = cross(a, b);
        const double len = norm(c);
        return len < 1e-14 ? vec3{0, 0, 0} : (1.0 / len) * c;
    };
    constexpr double third = 2.0 * std::numbers::pi / 3.0;

    std::vector<vec3> v(15);
    auto at = [&](int i) -> vec3& { return v[static_cast<std::size_t>(i - 1)]; };
    at(4) = cone(0.0);
    at(9) = cone(third);
    at(14) = cone(2.0 * third);
    at(2) = cone(alpha);
    at(7) = cone(third + alpha);
    at(12) = cone(2.0 * third + alpha);
    // Each connector (3, 8, 13) joins a spine atom to its rotated partner.
    at(3) = unit_cross(at(2), at(4));
    at(8) = unit_cross(at(7), at(9));
    at(13) = unit_cross(at(12), at(14));
    at(1) = unit_cross(at(2), at(3));
    at(5) = unit_cross(at(3), at(4));
    at(6) = unit_cross(at(7), at(8));
    at(10) = unit_cross(at(8), at(9));
    at(11) = unit_cross(at(12), at(13));
    at(15) = unit_cross(at(13), at(14));
    return v;
}

/// The limit alpha -> 0 of the gadget: nine distinct directions, congruent to
/// the edges and face diagonals of a cube.
inline std::vector<vec3> cube_representation()
{
    const double rho = std::sqrt(2.0 / 3.0);
    const double h = 1.0 / std::sqrt(3.0);
    std::vector<vec3> out;
    for (int k = 0; k < 3; ++k) {
        const double phi = 2.0 * std::numbers::pi * k / 3.0;
        const vec3 spine{rho * std::cos(phi), rho * std::sin(phi), h};
        const vec3 tangent{-std::sin(phi), std::cos(phi), 0.0};
        const vec3 connector = unit_vector3::normalized(cross(tangent, spine)).components();
        const vec3 outer = unit_vector3::normalized(cross(spine, connector)).components();
        out.insert(out.end(), {spine, connector, outer});
    }
    return out;
}

/// Root of <v5|v11> = 0 in the gadget construction below 2pi/3 (bracketing + bisection).
inline double find_degenerate_alpha()
{
    auto f = [](double alpha) {
        const auto v = small_construction_raw(alpha);
        return dot(v[4], v[10]);
    };
    const double lo_end = 0.05;
    const double hi_end = 2.0 * std::numbers::pi / 3.0 - 0.05;
    constexpr int samples = 256;
    double a = lo_end;
    double fa = f(a);
    for (int i = 1; i <= samples; ++i) {
        double b = lo_end + (hi_end - lo_end) * i / samples;
        const double fb = f(b);
        if ((fa < 0) != (fb < 0)) {
            for (int it = 0; it < 200 && b - a > 1e-16; ++it) {
                const double m = 0.5 * (a + b);
                if (m == a || m == b)
                    break;
                const double fm = f(m);
                if (fm == 0.0)
                    return m;
                if ((fa < 0) != (fm < 0))
                    b = m;
                else {
                    a = m;
                    fa = fm;
                }
            }
            return 0.5 * (a + b);
        }
        a = b;
        fa = fb;
    }
    throw std::logic_error("no sign change of <v5|v11> below 2pi/3");
}

/// The degenerate gadget parameter, computed once.
inline double degenerate_alpha()
{
    static const double value = find_degenerate_alpha();
    return value;
}

enum class degeneracy
{
    duplicate_halves,    ///< alpha = 0: both halves of the gadget coincide
    duplicate_triple,    ///< alpha = 2pi/3: the spine contexts coincide
    duplicate_vectors,   ///< some other coincidence of labels
    extra_orthogonality, ///< non-adjacent atoms became orthogonal
    broken_orthogonality ///< a required orthogonality failed
};

inline std::string to_string(degeneracy d)
{
    switch (d) {
    case degeneracy::duplicate_halves: return "duplicate halves";
    case degeneracy::duplicate_triple: return "duplicate triple";
    case degeneracy::duplicate_vectors: return "duplicate vectors";
    case degeneracy::extra_orthogonality: return "extra orthogonality";
    case degeneracy::broken_orthogonality: return "broken orthogonality";
    }
    return "";
}

/// A construction parameter hit a singular configuration.
class degenerate_construction : public std::runtime_error
{
public:
    degenerate_construction(degeneracy kind, std::vector<vertex_pair> pairs, std::vector<vec3> cube = {})
        : std::runtime_error(describe(kind, pairs)), kind_(kind), pairs_(std::move(pairs)), cube_(std::move(cube))
    {
    }

    degeneracy kind() const noexcept { return kind_; }
    /// Offending atom pairs (extra orthogonalities, coincidences, ...).
    const std::vector<vertex_pair>& pairs() const noexcept { return pairs_; }
    /// Only for duplicate_halves: the nine vectors the construction collapses to.
    const std::vector<vec3>& cube() const noexcept { return cube_; }

private:
    static std::string describe(degeneracy kind, const std::vector<vertex_pair>& pairs)
    {
        std::string s = "degenerate: " + to_string(kind);
        for (std::size_t i = 0; i < pairs.size(); ++i)
            s += (i == 0 ? " " : ", ") + std::string("(") + std::to_string(pairs[i].first) + "," +
                 std::to_string(pairs[i].second) + ")";
        return s;
    }

    degeneracy kind_;
    std::vector<vertex_pair> pairs_;
    std::vector<vec3> cube_;
};

namespace detail
{

inline vector_labeling checked_labeling(const std::vector<vec3>& raw, const hypergraph& h)
{
    std::vector<unit_vector3> labels;
    labels.reserve(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) {
        if (norm(raw[i]) < 0.5)
            throw degenerate_construction(degeneracy::duplicate_vectors, {});
        labels.push_back(unit_vector3::normalized(raw[i]));
    }
    vector_labeling l(std::move(labels));
    const auto report = verify_for(h, l);
    if (!report.duplicates.empty())
        throw degenerate_construction(degeneracy::duplicate_vectors, report.duplicates);
    if (!report.missing_orthogonality.empty())
        throw degenerate_construction(degeneracy::broken_orthogonality, report.missing_orthogonality);
    if (!report.extra_orthogonality.empty())
        throw degenerate_construction(degeneracy::extra_orthogonality, report.extra_orthogonality);
    return l;
}

/// Classifies the construction at an exactly degenerate parameter, where the
/// floating-point coincidences are only good to about 1e-8.
inline degenerate_construction degeneracy_at(const std::vector<vec3>& raw, const hypergraph& h)
{
    std::vector<unit_vector3> labels;
    for (const auto& v : raw)
        labels.push_back(unit_vector3::normalized(v));
    const auto report = verify_for(h, vector_labeling(std::move(labels), 1e-8));
    if (!report.duplicates.empty())
        return {degeneracy::duplicate_vectors, report.duplicates};
    return {degeneracy::extra_orthogonality, report.extra_orthogonality};
}

inline void reject_known_singularities(double alpha)
{
    if (std::abs(alpha) <= alpha_tolerance)
        throw degenerate_construction(degeneracy::duplicate_halves, {{4, 2}, {9, 7}, {14, 12}}, cube_representation());
    if (std::abs(alpha - 2.0 * std::numbers::pi / 3.0) <= alpha_tolerance)
        throw degenerate_construction(degeneracy::duplicate_triple, {{4, 12}, {9, 2}, {14, 7}});
}

} // namespace detail

/// Gadget representation for alpha in (0, pi] \ {2pi/3, alpha_0}; the result
/// passes verify_for against the 15-atom fixture or degenerate_construction is thrown.
inline vector_labeling construct_small_for(double alpha)
{
    if (!(alpha >= -alpha_tolerance && alpha <= std::numbers::pi + alpha_tolerance))
        throw precondition_error("gadget construction needs alpha in (0, pi]");
    detail::reject_known_singularities(alpha);
    if (std::abs(alpha - degenerate_alpha()) <= alpha_tolerance)
        throw detail::degeneracy_at(small_construction_raw(degenerate_alpha()), fixtures::small_graph());
    return detail::checked_labeling(small_construction_raw(alpha), fixtures::small_graph());
}

enum class rotation_sense
{
    counterclockwise, ///< second half turned by +beta about z
    clockwise         ///< second half turned by -beta about z
};

struct combo_construction
{
    vector_labeling labeling;
    double alpha;
    double beta;
    /// Angle between the z-axis and the pseudocontext atoms.
    double aperture;
};

/// Unchecked combo vectors (index v - 1).
inline std::vector<vec3> combo_construction_raw(double alpha, rotation_sense sense = rotation_sense::counterclockwise)
{
    const auto left = small_construction_raw(alpha);
    const double beta = (sense == rotation_sense::counterclockwise ? 1.0 : -1.0) * beta_of_alpha(alpha);
    auto l = [&](int i) { return left[static_cast<std::size_t>((i - 1) % 15)]; };
    auto r = [&](int i) { return rotate_z(left[static_cast<std::size_t>((i - 1) % 15)], beta); };
    auto unit_cross = [](const vec3& a, const vec3& b) {
        const vec3 c = cross(a, b);
        const double len = norm(c);
        return len < 1e-14 ? vec3{0, 0, 0} : (1.0 / len) * c;
    };

    // The combo is a ring of three 12-atom segments; segment k uses gadget atoms 5k+1 .. 5k+5.
    std::vector<vec3> v(36);
    for (int k = 0; k < 3; ++k) {
        const int o = 12 * k;
        const int g = 5 * k;
        auto at = [&](int i) -> vec3& { return v[static_cast<std::size_t>(o + i - 1)]; };
        at(1) = l(g + 3);
        at(2) = l(g + 2);
        at(3) = l(g + 1);
        at(5) = r(g + 1);
        at(6) = r(g + 2);
        at(7) = r(g + 3);
        at(8) = r(g + 4);
        at(9) = r(g + 5);
        at(11) = l(g + 5);
        at(12) = l(g + 4);
        at(4) = unit_cross(at(3), at(5));
        at(10) = unit_cross(at(9), at(11));
    }
    return v;
}

/// Angle between the z-axis and the stitching atoms {4,16,28}, {10,22,34}
/// (the aperture of the pseudocontext cones). Evaluated on the unchecked
/// construction, so it is defined at the excluded parameters too. At alpha = 0
/// the stitching atom is undefined; the aperture behaves like alpha/3 there and
/// the limit 0 is returned.
inline double combo_aperture(double alpha, rotation_sense sense = rotation_sense::counterclockwise)
{
    if (std::abs(alpha) <= alpha_tolerance)
        return 0.0;
    const vec3 v4 = combo_construction_raw(alpha, sense)[3];
    if (norm(v4) < 0.5)
        return std::numeric_limits<double>::quiet_NaN();
    return std::acos(std::min(1.0, std::abs(v4[2])));
}

/// Combo representation for alpha in (0, 2 arctan 3] \ {2pi/3, alpha_0}. Any
/// further accidental orthogonality or coincidence is reported as degenerate_construction.
inline combo_construction construct_combo_for(double alpha, rotation_sense sense = rotation_sense::counterclockwise)
{
    if (!(alpha >= -alpha_tolerance && alpha <= alpha_max + alpha_tolerance))
        throw precondition_error("combo construction needs alpha in (0, 2 arctan 3]");
    detail::reject_known_singularities(alpha);
    if (std::abs(alpha - degenerate_alpha()) <= alpha_tolerance)
        throw detail::degeneracy_at(combo_construction_raw(degenerate_alpha(), sense), fixtures::combo_graph());
    const auto raw = combo_construction_raw(alpha, sense);
    auto labeling = detail::checked_labeling(raw, fixtures::combo_graph());
    const double aperture = std::acos(std::min(1.0, std::abs(labeling(4).z())));
    return {std::move(labeling), alpha, beta_of_alpha(alpha), aperture};
}

} // namespace pseudoctx

#endif // PSEUDOCTX_CONSTRUCTION_HPP
