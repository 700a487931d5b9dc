#ifndef HOMNERVE_IO_HPP
#define HOMNERVE_IO_HPP

#include <cstddef>
#include <istream>
#include <limits>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "chain.hpp"
#include "error.hpp"
#include "homology.hpp"
#include "simplicial.hpp"
#include "theorems.hpp"

namespace homnerve {

/// Insertion-ordered JSON: member order in a cover file is significant and
/// report fields print in a stable order.
using Json = nlohmann::ordered_json;

// File formats.
//
//   complex:  {"facets": [[0,1,2], [2,3]]}
//   cover:    {"ambient_facets": [...], "members": {"A1": [[...]], "A2": [...]}}
//   colored:  {"facets": [...], "colors": {"0": 1, "1": 2}, "num_colors": 2}
//
// Members are indexed 1..m in file order. "num_colors" is optional and
// defaults to the largest color used. Unknown keys are ignored.

inline Json read_json(std::istream& in) {
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
}

namespace detail {

inline Vertex parse_vertex(const Json& v) {
    if (!v.is_number_integer() || v.get<long long>() < 0 ||
        v.get<long long>() > std::numeric_limits<Vertex>::max())
        throw ParseError("vertex ids must be non-negative integers, got " + v.dump());
    return static_cast<Vertex>(v.get<long long>());
}

inline std::vector<std::vector<Vertex>> parse_facets(const Json& facets, const std::string& where) {
    if (!facets.is_array()) throw ParseError("'" + where + "' must be an array of vertex lists");
    std::vector<std::vector<Vertex>> out;
    for (const auto& f : facets) {
        if (!f.is_array()) throw ParseError("'" + where + "' entries must be arrays");
        std::vector<Vertex> facet;
        for (const auto& v : f) facet.push_back(parse_vertex(v));
        out.push_back(std::move(facet));
    }
    return out;
}

inline SimplicialComplex build(const std::vector<std::vector<Vertex>>& facets) {
    try {
        return SimplicialComplex::from_facets(facets);
    } catch (const InvalidInput& e) {
        throw ParseError(e.what());
    }
}

inline const Json& require(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing key '") + key + "'");
    return j.at(key);
}

}  // namespace detail

inline SimplicialComplex complex_from_json(const Json& j) {
    return detail::build(detail::parse_facets(detail::require(j, "facets"), "facets"));
}

inline Json facets_to_json(const SimplicialComplex& k) {
    Json facets = Json::array();
    for (const auto& f : k.facets()) facets.push_back(f);
    return facets;
}

inline Json complex_to_json(const SimplicialComplex& k) {
    Json j;
    j["facets"] = facets_to_json(k);
    return j;
}

inline Cover cover_from_json(const Json& j) {
    auto ambient = detail::build(detail::parse_facets(detail::require(j, "ambient_facets"), "ambient_facets"));
    const auto& members = detail::require(j, "members");
    if (!members.is_object()) throw ParseError("'members' must be an object of name -> facets");
    std::vector<Cover::Member> parsed;
    for (const auto& [name, facets] : members.items())
        parsed.push_back({name, detail::build(detail::parse_facets(facets, "members." + name))});
    try {
        return Cover(std::move(ambient), std::move(parsed));
    } catch (const InvalidInput& e) {
        throw ParseError(e.what());
    }
}

inline Json cover_to_json(const Cover& c) {
    Json j;
    j["ambient_facets"] = facets_to_json(c.ambient());
    Json members = Json::object();
    for (const auto& m : c.members()) members[m.name] = facets_to_json(m.complex);
    j["members"] = std::move(members);
    return j;
}

inline ColoredComplex colored_from_json(const Json& j) {
    auto k = complex_from_json(j);
    const auto& colors = detail::require(j, "colors");
    if (!colors.is_object()) throw ParseError("'colors' must be an object of vertex -> color");
    std::map<Vertex, int> map;
    for (const auto& [key, value] : colors.items()) {
        Vertex v = 0;
        try {
            std::size_t used = 0;
            const auto parsed = std::stoll(key, &used);
            if (used != key.size() || parsed < 0) throw std::invalid_argument(key);
            v = static_cast<Vertex>(parsed);
        } catch (const std::exception&) {
            throw ParseError("color key '" + key + "' is not a vertex id");
        }
        if (!value.is_number_integer() || value.get<long long>() < 1 ||
            value.get<long long>() > std::numeric_limits<int>::max())
            throw ParseError("colors must be positive integers");
        map[v] = static_cast<int>(value.get<long long>());
    }
    try {
        if (j.contains("num_colors")) {
            if (!j["num_colors"].is_number_integer()) throw ParseError("'num_colors' must be an integer");
            return ColoredComplex(std::move(k), std::move(map), j["num_colors"].get<int>());
        }
        return ColoredComplex(std::move(k), std::move(map));
    } catch (const InvalidInput& e) {
        throw ParseError(e.what());
    }
}

inline Json colored_to_json(const ColoredComplex& k) {
    Json j;
    j["facets"] = facets_to_json(k.complex());
    Json colors = Json::object();
    for (const auto& [v, c] : k.colors()) colors[std::to_string(v)] = c;
    j["colors"] = std::move(colors);
    j["num_colors"] = k.num_colors();
    return j;
}

// Reports.

inline Json to_json(const BettiProfile& b) {
    Json j;
    j["field"] = b.field().name();
    Json values = Json::object();
    for (int d = -1; d <= b.stored_top(); ++d) values[std::to_string(d)] = b[d];
    j["betti"] = std::move(values);
    return j;
}

inline Json to_json(const Violation& v) {
    Json j;
    j["indices"] = v.indices;
    j["labels"] = v.labels;
    j["required_degrees"] = v.required_degrees;
    Json off = Json::array();
    for (const auto& [d, b] : v.offending) off.push_back({{"degree", d}, {"betti", b}});
    j["offending"] = std::move(off);
    return j;
}

inline Json to_json(const HypothesisReport& r) {
    Json j;
    j["kind"] = to_string(r.kind);
    j[parameter_name(r.kind)] = r.parameter;
    j["field"] = r.field.name();
    j["passed"] = r.passed;
    Json v = Json::array();
    for (const auto& x : r.violations) v.push_back(to_json(x));
    j["violations"] = std::move(v);
    return j;
}

inline Json to_json(const ConclusionReport& r) {
    Json j;
    j["mode"] = r.mode == ConclusionMode::T1 ? "T1" : "HNT";
    j["k"] = r.k;
    j["field"] = r.field.name();
    j["rank_N_k1"] = r.rank_N_k1;
    j["rank_X_k1"] = r.rank_X_k1;
    j["rank_X_k"] = r.rank_X_k;
    j["rank_N_k"] = r.rank_N_k;
    j["ineq1_holds"] = r.ineq1_holds;
    j["ineq2_holds"] = r.ineq2_holds;
    if (r.mode == ConclusionMode::HNT) {
        Json t = Json::array();
        for (const auto& row : r.table)
            t.push_back({{"degree", row.degree}, {"rank_N", row.rank_nerve},
                         {"rank_X", row.rank_ambient}, {"equal", row.equal}});
        j["rank_table"] = std::move(t);
    }
    j["holds"] = r.holds();
    j["nerve_betti"] = to_json(r.nerve_betti)["betti"];
    j["ambient_betti"] = to_json(r.ambient_betti)["betti"];
    return j;
}

inline Json to_json(const HellyReport& r) {
    Json j;
    j["d"] = r.d;
    j["m"] = r.m;
    j["field"] = r.field.name();
    j["hypothesis"] = to_json(r.hypothesis);
    j["ambient_ok"] = r.ambient_ok;
    j["predicted_nonempty"] = r.predicted_nonempty;
    j["actual_intersection_nonempty"] = r.actual_intersection_nonempty;
    return j;
}

inline Json to_json(const RainbowReport& r) {
    Json j;
    j["m"] = r.m;
    j["field"] = r.field.name();
    j["hypothesis"] = to_json(r.hypothesis);
    j["predicted_rainbow"] = r.predicted_rainbow;
    j["witness"] = r.witness ? Json(*r.witness) : Json(nullptr);
    return j;
}

/// [{"degree": d, "boundary": {"generator-name": "coeff", ...}}, ...];
/// names are resolved against the complex after attachment, whose earlier
/// generators keep their positions.
template <class F>
Json attachment_log_to_json(const AugmentedChainComplex<F>& after, const std::vector<Cell<F>>& log) {
    Json out = Json::array();
    for (const auto& cell : log) {
        Json boundary = Json::object();
        if (cell.degree > 0) {
            const auto& names = after.generator_names(cell.degree - 1);
            for (std::size_t i = 0; i < cell.boundary_chain.size(); ++i)
                if (!after.field().is_zero(cell.boundary_chain[i]))
                    boundary[names.at(i)] = after.field().to_string(cell.boundary_chain[i]);
        }
        out.push_back({{"degree", cell.degree}, {"boundary", std::move(boundary)}});
    }
    return out;
}

// Text rendering. Same numbers as the JSON forms.

inline std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
    return out;
}

inline std::string to_text(const HypothesisReport& r) {
    std::ostringstream out;
    out << "hypothesis " << to_string(r.kind) << " (" << parameter_name(r.kind) << "=" << r.parameter
        << ") over " << r.field.name() << ": " << (r.passed ? "passed" : "FAILED") << "\n";
    for (const auto& v : r.violations) {
        std::vector<std::string> req, off;
        for (int d : v.required_degrees) req.push_back(std::to_string(d));
        for (const auto& [d, b] : v.offending) off.push_back("degree " + std::to_string(d) + " has rank " + std::to_string(b));
        out << "  violation at {" << join(v.labels, ", ") << "}: needs zero reduced homology in degrees {"
            << join(req, ",") << "}; " << join(off, ", ") << "\n";
    }
    return out.str();
}

inline std::string to_text(const ConclusionReport& r) {
    std::ostringstream out;
    const int k = r.k;
    out << "conclusions " << (r.mode == ConclusionMode::T1 ? "T1" : "HNT") << " (k=" << k << ") over "
        << r.field.name() << ": " << (r.holds() ? "hold" : "VIOLATED") << "\n";
    out << "  nerve:   " << r.nerve_betti.to_string() << "\n";
    out << "  ambient: " << r.ambient_betti.to_string() << "\n";
    out << "  (1) rank H" << k + 1 << "(N)=" << r.rank_N_k1 << " <= rank H" << k + 1 << "(X)=" << r.rank_X_k1
        << ": " << (r.ineq1_holds ? "yes" : "no") << "\n";
    out << "  (2) rank H" << k << "(X)=" << r.rank_X_k << " <= rank H" << k << "(N)=" << r.rank_N_k << ": "
        << (r.ineq2_holds ? "yes" : "no") << "\n";
    for (const auto& row : r.table)
        out << "  degree " << row.degree << ": rank N=" << row.rank_nerve << " rank X=" << row.rank_ambient
            << (row.equal ? " equal" : " DIFFERENT") << "\n";
    return out.str();
}

inline std::string to_text(const HellyReport& r) {
    std::ostringstream out;
    out << "helly d=" << r.d << " m=" << r.m << " field=" << r.field.name() << "\n";
    out << to_text(r.hypothesis);
    out << "ambient vanishing in degrees >= " << r.d << ": " << (r.ambient_ok ? "yes" : "no") << "\n";
    out << "predicted nonempty: " << (r.predicted_nonempty ? "yes" : "no (no prediction)") << "\n";
    out << "actual intersection nonempty: " << (r.actual_intersection_nonempty ? "yes" : "no") << "\n";
    return out.str();
}

inline std::string to_text(const RainbowReport& r) {
    std::ostringstream out;
    out << "rainbow m=" << r.m << " field=" << r.field.name() << "\n";
    out << to_text(r.hypothesis);
    out << "predicted rainbow: " << (r.predicted_rainbow ? "yes" : "no (no prediction)") << "\n";
    out << "witness: " << (r.witness ? to_string(*r.witness) : std::string("none")) << "\n";
    return out.str();
}

}  // namespace homnerve

#endif
