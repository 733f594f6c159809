#ifndef PSEUDOCTX_IO_HPP
#define PSEUDOCTX_IO_HPP

// File formats and JSON encodings. Doubles are always written with 17
// significant digits so that output is both round-trippable and byte-stable.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "pseudoctx/error.hpp"
#include "pseudoctx/geometry.hpp"
#include "pseudoctx/hypergraph.hpp"
#include "pseudoctx/pseudocontext.hpp"
#include "pseudoctx/states.hpp"

namespace pseudoctx
{

using json = nlohmann::ordered_json;

inline std::string format_double(double x)
{
    if (std::isnan(x))
        return "nan";
    if (std::isinf(x))
        return x > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x == 0.0 ? 0.0 : x); // no "-0"
    return buf;
}

namespace detail
{

inline void dump_to(std::string& out, const json& j, int indent, int depth)
{
    auto newline = [&](int d) {
        if (indent < 0)
            return;
        out += '\n';
        out.append(static_cast<std::size_t>(indent * d), ' ');
    };
    switch (j.type()) {
    case json::value_t::object: {
        if (j.empty()) {
            out += "{}";
            return;
        }
        out += '{';
        bool first = true;
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (!first)
                out += ',';
            first = false;
            newline(depth + 1);
            out += json(it.key()).dump();
            out += indent < 0 ? ":" : ": ";
            dump_to(out, it.value(), indent, depth + 1);
        }
        newline(depth);
        out += '}';
        return;
    }
    case json::value_t::array: {
        if (j.empty()) {
            out += "[]";
            return;
        }
        // Short numeric arrays (vectors, edges, index lists) stay on one line.
        const bool flat = std::all_of(j.begin(), j.end(), [](const json& e) { return e.is_primitive(); });
        out += '[';
        for (std::size_t i = 0; i < j.size(); ++i) {
            if (i > 0)
                out += flat && indent >= 0 ? ", " : ",";
            if (!flat)
                newline(depth + 1);
            dump_to(out, j[i], indent, depth + 1);
        }
        if (!flat)
            newline(depth);
        out += ']';
        return;
    }
    case json::value_t::number_float: {
        const double x = j.get<double>();
        // JSON has no nan/inf; null is the conventional stand-in.
        out += std::isfinite(x) ? format_double(x) : "null";
        return;
    }
    default: out += j.dump(); return;
    }
}

} // namespace detail

/// Like json::dump, but with 17-significant-digit floats.
inline std::string dump_json(const json& j, int indent = 2)
{
    std::string out;
    detail::dump_to(out, j, indent, 0);
    return out;
}

inline std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw precondition_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_file(const std::string& path, const std::string& content)
{
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << content))
        throw precondition_error("cannot write " + path);
}

namespace detail
{

inline bool looks_like_json(std::string_view text)
{
    const auto pos = text.find_first_not_of(" \t\r\n");
    return pos != std::string_view::npos && text[pos] == '{';
}

inline json parse_json(std::string_view text)
{
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        // nlohmann reports a byte offset; translate it to line and column.
        const std::size_t at = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
        int line = 1, column = 1;
        for (std::size_t i = 0; i < at; ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        throw parse_error("malformed JSON", line, column);
    }
}

inline int as_int(const json& j, const char* what)
{
    if (!j.is_number_integer())
        throw validation_error(std::string(what) + " must be an integer");
    return j.get<int>();
}

} // namespace detail

// --- hypergraphs -----------------------------------------------------------

inline json hypergraph_to_json(const hypergraph& h)
{
    json edges = json::array();
    for (const auto& e : h.edges())
        edges.push_back({e[0], e[1], e[2]});
    return json{{"n", h.vertex_count()}, {"edges", std::move(edges)}};
}

/// {"n": int, "edges": [[u,v,w], ...]}; n may exceed the largest id only if
/// the extra vertices are isolated, which validation then rejects.
inline hypergraph hypergraph_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("n") || !j.contains("edges") || !j["edges"].is_array())
        throw validation_error("hypergraph JSON needs \"n\" and \"edges\"");
    const int n = detail::as_int(j["n"], "n");
    std::vector<hyperedge> edges;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 3)
            throw validation_error("every edge must list exactly three vertices");
        edges.emplace_back(detail::as_int(e[0], "vertex"), detail::as_int(e[1], "vertex"), detail::as_int(e[2], "vertex"));
    }
    return make_hypergraph(n, std::move(edges));
}

/// Either the line format or its JSON mirror, told apart by a leading '{'.
inline hypergraph read_hypergraph(std::string_view text)
{
    if (detail::looks_like_json(text))
        return hypergraph_from_json(detail::parse_json(text));
    return parse_hypergraph(text);
}

// --- vector labelings ------------------------------------------------------

inline json labeling_to_json(const vector_labeling& l)
{
    json vs = json::array();
    for (const auto& u : l.labels())
        vs.push_back({u.x(), u.y(), u.z()});
    return json{{"n", l.vertex_count()}, {"vectors", std::move(vs)}};
}

inline std::string write_labeling(const vector_labeling& l) { return dump_json(labeling_to_json(l)) + "\n"; }

/// {"n": int, "vectors": [[x,y,z], ...]}. Vectors are renormalized; a norm
/// further than 1e-6 from 1 is taken as a transcription error.
inline vector_labeling labeling_from_json(const json& j, double epsilon = vector_labeling::default_epsilon)
{
    if (!j.is_object() || !j.contains("n") || !j.contains("vectors") || !j["vectors"].is_array())
        throw validation_error("vector file needs \"n\" and \"vectors\"");
    const int n = detail::as_int(j["n"], "n");
    if (n != static_cast<int>(j["vectors"].size()))
        throw validation_error("\"n\" is " + std::to_string(n) + " but " + std::to_string(j["vectors"].size()) +
                               " vectors are listed");
    std::vector<unit_vector3> labels;
    int index = 0;
    for (const auto& v : j["vectors"]) {
        ++index;
        if (!v.is_array() || v.size() != 3 || !v[0].is_number() || !v[1].is_number() || !v[2].is_number())
            throw validation_error("vector " + std::to_string(index) + " must have three numeric components");
        const vec3 c{v[0].get<double>(), v[1].get<double>(), v[2].get<double>()};
        if (!(std::abs(norm(c) - 1.0) <= 1e-6))
            throw validation_error("vector " + std::to_string(index) + " has norm " + format_double(norm(c)));
        labels.push_back(unit_vector3::normalized(c));
    }
    return vector_labeling(std::move(labels), epsilon);
}

inline vector_labeling read_labeling(std::string_view text, double epsilon = vector_labeling::default_epsilon)
{
    return labeling_from_json(detail::parse_json(text), epsilon);
}

// --- states, partitions, certificates --------------------------------------

/// One n-character 0/1 line per state, canonical order.
inline std::string write_states(const state_set& s)
{
    std::string out;
    for (const auto& st : s)
        out += st.to_string() + '\n';
    return out;
}

/// {"1": [...], "2": [...], ...}: state indices per vertex.
inline json partition_to_json(const partition_representation& p)
{
    json j = json::object();
    for (vertex_id v = 1; v <= p.vertex_count(); ++v)
        j[std::to_string(v)] = p.of(v);
    return j;
}

inline partition_representation partition_from_json(const json& j)
{
    if (!j.is_object())
        throw validation_error("partition JSON must be an object keyed by vertex");
    partition_representation p;
    p.sets.resize(j.size());
    for (auto it = j.begin(); it != j.end(); ++it) {
        int v = 0;
        try {
            v = std::stoi(it.key());
        } catch (const std::exception&) {
            throw validation_error("partition key \"" + it.key() + "\" is not a vertex id");
        }
        if (v < 1 || v > static_cast<int>(j.size()))
            throw validation_error("partition key " + it.key() + " out of range");
        auto& set = p.sets[static_cast<std::size_t>(v - 1)];
        for (const auto& idx : it.value()) {
            set.push_back(detail::as_int(idx, "state index"));
            p.state_count = std::max(p.state_count, set.back());
        }
    }
    return p;
}

inline json rational_to_json(const rational& r)
{
    const big_int num = boost::multiprecision::numerator(r);
    const big_int den = boost::multiprecision::denominator(r);
    auto encode = [](const big_int& x) -> json {
        if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
            return x.convert_to<long long>();
        return x.str();
    };
    return json{{"num", encode(num)}, {"den", encode(den)}};
}

inline json certificate_to_json(const pseudocontext_certificate& c)
{
    json lambda = json::array();
    for (const auto& [e, coeff] : c.lambda) {
        json entry{{"edge", {e[0], e[1], e[2]}}};
        entry.update(rational_to_json(coeff));
        lambda.push_back(std::move(entry));
    }
    return json{{"A", c.a.members()}, {"B", c.b.members()}, {"lambda", std::move(lambda)}};
}

/// A covering is exported as its list of edges.
inline json covering_to_json(const covering& c)
{
    json edges = json::array();
    for (const auto& e : c.edges)
        edges.push_back({e[0], e[1], e[2]});
    return edges;
}

/// Comma-separated vertex list such as "1,6,11".
inline vertex_subset parse_subset(std::string_view text)
{
    std::vector<vertex_id> ids;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t end = std::min(text.find(',', pos), text.size());
        const std::string token(text.substr(pos, end - pos));
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(token, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (token.empty() || used != token.size() || v < 1)
            throw precondition_error("\"" + std::string(text) + "\" is not a comma-separated list of vertex ids");
        ids.push_back(v);
        pos = end + 1;
    }
    vertex_subset s(ids);
    if (s.size() != ids.size())
        throw precondition_error("\"" + std::string(text) + "\" repeats a vertex");
    return s;
}

inline std::string format_subset(const vertex_subset& s)
{
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i)
        out += (i == 0 ? "" : ",") + std::to_string(s.members()[i]);
    return out + "}";
}

} // namespace pseudoctx

#endif // PSEUDOCTX_IO_HPP
