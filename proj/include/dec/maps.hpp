#pragma once

#include "dec/complex.hpp"

#include <map>

namespace dec {

struct MissingVertexImageError : Error {
    using Error::Error;
};

/// Raised when a source simplex's image does not span a target simplex.
struct SpanningViolationError : Error {
    SpanningViolationError(std::string msg, Simplex violating)
        : Error(std::move(msg)), simplex(std::move(violating)) {}
    Simplex simplex;
};

/// A vertex map between complexes whose induced set map sends simplices to
/// simplices. Validated eagerly at construction; immutable afterwards.
class SimplicialMap {
public:
    /// Checks totality of the vertex map and the spanning property over
    /// every source simplex; throws on the first violation.
    SimplicialMap(const SimplicialComplex& source, const SimplicialComplex& target,
                  std::map<VertexId, VertexId> vertex_map);

    const SimplicialComplex& source() const { return *source_; }
    const SimplicialComplex& target() const { return *target_; }
    const std::map<VertexId, VertexId>& vertex_map() const { return vertex_map_; }

    VertexId apply(VertexId v) const;

    /// Composition g after f (this map applied first).
    SimplicialMap then(const SimplicialMap& g) const;

private:
    const SimplicialComplex* source_;
    const SimplicialComplex* target_;
    std::map<VertexId, VertexId> vertex_map_;
};

/// Induced chain homomorphism: image simplex in mapped order when images are
/// distinct, zero on collapsed simplices.
Chain pushforward(const SimplicialMap& f, const Simplex& oriented);
Chain pushforward(const SimplicialMap& f, const Chain& chain);

/// Cochain pullback: (f*a)(c) = a(pushforward(f, c)).
Cochain pullback(const SimplicialMap& f, const Cochain& a);

/// Identity map on a complex.
SimplicialMap identity_map(const SimplicialComplex& complex);

}  // namespace dec
