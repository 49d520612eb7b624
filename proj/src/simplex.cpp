#include "dec/simplex.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace dec {

std::string simplex_str(const Simplex& s) {
    std::ostringstream out;
    out << '[';
    for (size_t i = 0; i < s.size(); ++i) {
        if (i) out << ',';
        out << s[i];
    }
    out << ']';
    return out.str();
}

namespace {

int parity_of_index_sequence(std::vector<int> idx) {
    // Inversion count; quadratic is fine at simplex sizes.
    int inversions = 0;
    for (size_t i = 0; i < idx.size(); ++i)
        for (size_t j = i + 1; j < idx.size(); ++j)
            if (idx[i] > idx[j]) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace

int sort_parity(const Simplex& vertices) {
    for (size_t i = 0; i < vertices.size(); ++i)
        for (size_t j = i + 1; j < vertices.size(); ++j)
            if (vertices[i] == vertices[j])
                throw DuplicateVertexError("repeated vertex in simplex " + simplex_str(vertices));
    std::vector<int> idx(vertices.begin(), vertices.end());
    return parity_of_index_sequence(std::move(idx));
}

std::pair<Simplex, int> canonicalize(const Simplex& vertices) {
    int sign = sort_parity(vertices);
    Simplex sorted = vertices;
    std::sort(sorted.begin(), sorted.end());
    return {std::move(sorted), sign};
}

int relative_parity(const Simplex& ordering, const Simplex& reference) {
    if (ordering.size() != reference.size())
        throw VertexMismatchError("orderings differ in size");
    std::map<VertexId, int> pos;
    for (size_t i = 0; i < reference.size(); ++i) {
        if (!pos.emplace(reference[i], static_cast<int>(i)).second)
            throw DuplicateVertexError("repeated vertex in simplex " + simplex_str(reference));
    }
    std::vector<int> idx;
    idx.reserve(ordering.size());
    for (VertexId v : ordering) {
        auto it = pos.find(v);
        if (it == pos.end())
            throw VertexMismatchError("orderings are not of the same vertex set");
        idx.push_back(it->second);
    }
    return sort_parity(Simplex(idx.begin(), idx.end()));
}

}  // namespace dec
