#include "dec/maps.hpp"

#include <algorithm>
#include <set>

namespace dec {

SimplicialMap::SimplicialMap(const SimplicialComplex& source, const SimplicialComplex& target,
                             std::map<VertexId, VertexId> vertex_map)
    : source_(&source), target_(&target), vertex_map_(std::move(vertex_map)) {
    for (VertexId v : source.vertices())
        if (!vertex_map_.count(v))
            throw MissingVertexImageError("vertex " + std::to_string(v) + " has no image");
    for (int k = 0; k <= source.dimension(); ++k) {
        for (const auto& [canon, chosen] : source.simplices(k)) {
            (void)chosen;
            std::set<VertexId> image;
            for (VertexId v : canon) image.insert(vertex_map_.at(v));
            Simplex image_simplex(image.begin(), image.end());
            if (!target.contains(image_simplex))
                throw SpanningViolationError("image of " + simplex_str(canon) +
                                                 " does not span a target simplex",
                                             canon);
        }
    }
}

VertexId SimplicialMap::apply(VertexId v) const {
    auto it = vertex_map_.find(v);
    if (it == vertex_map_.end())
        throw MissingVertexImageError("vertex " + std::to_string(v) + " has no image");
    return it->second;
}

SimplicialMap SimplicialMap::then(const SimplicialMap& g) const {
    std::map<VertexId, VertexId> composed;
    for (const auto& [u, v] : vertex_map_) composed[u] = g.apply(v);
    return SimplicialMap(*source_, g.target(), std::move(composed));
}

Chain pushforward(const SimplicialMap& f, const Simplex& oriented) {
    Chain out(static_cast<int>(oriented.size()) - 1);
    Simplex image;
    for (VertexId v : oriented) image.push_back(f.apply(v));
    std::set<VertexId> distinct(image.begin(), image.end());
    if (distinct.size() == image.size()) out.add(image, 1);
    return out;
}

Chain pushforward(const SimplicialMap& f, const Chain& chain) {
    Chain out(chain.degree());
    for (const auto& [s, c] : chain.coefficients()) {
        Chain part = pushforward(f, s);
        for (const auto& [t, tc] : part.coefficients()) out.add(t, c * tc);
    }
    return out;
}

Cochain pullback(const SimplicialMap& f, const Cochain& a) {
    Cochain out(a.degree());
    int k = a.degree();
    for (const auto& [canon, chosen] : f.source().simplices(k)) {
        (void)chosen;
        Rational v = a.eval(pushforward(f, canon));
        if (v != 0) out.set(canon, v);
    }
    return out;
}

SimplicialMap identity_map(const SimplicialComplex& complex) {
    std::map<VertexId, VertexId> m;
    for (VertexId v : complex.vertices()) m[v] = v;
    return SimplicialMap(complex, complex, std::move(m));
}

}  // namespace dec
