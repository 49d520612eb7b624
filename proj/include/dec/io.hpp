#pragma once

#include "dec/complex.hpp"
#include "dec/maps.hpp"

#include <nlohmann/json.hpp>

#include <map>
#include <string>
#include <vector>

namespace dec {

/// A complex together with its string labels. Vertex ids are indices into
/// the declared label list, so declaration order is the canonical vertex
/// order.
struct LabeledComplex {
    SimplicialComplex complex;
    std::vector<std::string> labels;
    std::map<std::string, VertexId> ids;

    VertexId id_of(const std::string& label) const;
    const std::string& label_of(VertexId v) const;
};

/// Parses {"vertices": [...], "top_simplices": [[...], ...]}. Throws
/// ParseError on malformed structure, domain errors on invalid content.
LabeledComplex load_complex(const nlohmann::json& doc);

/// Parses {"degree": k, "values": {"[a,b]": "p/q", ...}}. Keys may use any
/// vertex ordering; values are re-keyed to canonical form with parity
/// folded in. Every keyed simplex must exist in the complex.
Cochain load_cochain(const nlohmann::json& doc, const LabeledComplex& lc);

/// Parses {"vertex_map": {"u": "v", ...}} and validates the simplicial map.
SimplicialMap load_map(const nlohmann::json& doc, const LabeledComplex& source,
                       const LabeledComplex& target);

/// Serializes a cochain on canonical (ascending-id) keys, values as "p" or
/// "p/q" strings, keys in deterministic order.
nlohmann::ordered_json serialize_cochain(const Cochain& a, const LabeledComplex& lc);

nlohmann::json load_json_file(const std::string& path);

/// Bracketed label list "[a,b,c]" -> vertex ids.
Simplex parse_simplex_key(const std::string& key, const LabeledComplex& lc);

std::string simplex_key(const Simplex& s, const LabeledComplex& lc);

}  // namespace dec
