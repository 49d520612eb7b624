#include "dec/io.hpp"

#include "dec/rational.hpp"

#include <fstream>
#include <sstream>

namespace dec {

using nlohmann::json;
using nlohmann::ordered_json;

VertexId LabeledComplex::id_of(const std::string& label) const {
    auto it = ids.find(label);
    if (it == ids.end()) throw ParseError("unknown vertex label '" + label + "'");
    return it->second;
}

const std::string& LabeledComplex::label_of(VertexId v) const {
    if (v < 0 || v >= static_cast<int>(labels.size()))
        throw Error("vertex id out of range");
    return labels[static_cast<size_t>(v)];
}

LabeledComplex load_complex(const json& doc) {
    if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("top_simplices"))
        throw ParseError("complex document needs 'vertices' and 'top_simplices'");
    LabeledComplex lc;
    for (const auto& v : doc.at("vertices")) {
        if (!v.is_string()) throw ParseError("vertex labels must be strings");
        std::string label = v.get<std::string>();
        if (lc.ids.count(label)) throw ParseError("duplicate vertex label '" + label + "'");
        lc.ids[label] = static_cast<VertexId>(lc.labels.size());
        lc.labels.push_back(label);
    }
    std::vector<Simplex> tops;
    for (const auto& s : doc.at("top_simplices")) {
        if (!s.is_array() || s.empty()) throw ParseError("top simplices must be nonempty arrays");
        Simplex simplex;
        for (const auto& v : s) {
            if (!v.is_string()) throw ParseError("vertex labels must be strings");
            simplex.push_back(lc.id_of(v.get<std::string>()));
        }
        sort_parity(simplex);  // rejects duplicate vertices
        tops.push_back(std::move(simplex));
    }
    lc.complex = SimplicialComplex::closure(tops);
    return lc;
}

Simplex parse_simplex_key(const std::string& key, const LabeledComplex& lc) {
    if (key.size() < 2 || key.front() != '[' || key.back() != ']')
        throw ParseError("simplex key must look like '[a,b]': got '" + key + "'");
    Simplex out;
    std::stringstream body(key.substr(1, key.size() - 2));
    std::string label;
    while (std::getline(body, label, ',')) {
        size_t begin = label.find_first_not_of(" \t");
        size_t end = label.find_last_not_of(" \t");
        if (begin == std::string::npos) throw ParseError("empty label in key '" + key + "'");
        out.push_back(lc.id_of(label.substr(begin, end - begin + 1)));
    }
    if (out.empty()) throw ParseError("empty simplex key '" + key + "'");
    return out;
}

std::string simplex_key(const Simplex& s, const LabeledComplex& lc) {
    std::string out = "[";
    for (size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += lc.label_of(s[i]);
    }
    return out + "]";
}

Cochain load_cochain(const json& doc, const LabeledComplex& lc) {
    if (!doc.is_object() || !doc.contains("degree") || !doc.contains("values"))
        throw ParseError("cochain document needs 'degree' and 'values'");
    if (!doc.at("degree").is_number_integer() || doc.at("degree").get<int>() < 0)
        throw ParseError("cochain degree must be a non-negative integer");
    int degree = doc.at("degree").get<int>();
    Cochain out(degree);
    for (const auto& [key, value] : doc.at("values").items()) {
        Simplex s = parse_simplex_key(key, lc);
        if (static_cast<int>(s.size()) != degree + 1)
            throw DegreeMismatchError("key '" + key + "' does not match degree " +
                                      std::to_string(degree));
        auto [canon, sign] = canonicalize(s);
        (void)sign;
        if (!lc.complex.contains(canon))
            throw SimplexNotInComplexError("keyed simplex '" + key + "' is not in the complex");
        if (!value.is_string()) throw ParseError("cochain values must be strings");
        out.add(s, parse_rational(value.get<std::string>()));
    }
    return out;
}

SimplicialMap load_map(const json& doc, const LabeledComplex& source, const LabeledComplex& target) {
    if (!doc.is_object() || !doc.contains("vertex_map"))
        throw ParseError("map document needs 'vertex_map'");
    std::map<VertexId, VertexId> vm;
    for (const auto& [from, to] : doc.at("vertex_map").items()) {
        if (!to.is_string()) throw ParseError("vertex map targets must be strings");
        vm[source.id_of(from)] = target.id_of(to.get<std::string>());
    }
    return SimplicialMap(source.complex, target.complex, std::move(vm));
}

ordered_json serialize_cochain(const Cochain& a, const LabeledComplex& lc) {
    ordered_json values = ordered_json::object();
    for (const auto& [s, v] : a.values()) values[simplex_key(s, lc)] = to_string(v);
    ordered_json out;
    out["degree"] = a.degree();
    out["values"] = values;
    return out;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file '" + path + "'");
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw ParseError("invalid JSON in '" + path + "': " + e.what());
    }
    return doc;
}

}  // namespace dec
