#pragma once

#include "dec/rational.hpp"

#include <utility>
#include <vector>

namespace dec {

/// Vertices are interned non-negative integers; string labels live only at
/// the I/O boundary. The integer order is the canonical vertex order.
using VertexId = int;

/// An oriented simplex is an ordered list of distinct vertices. The sorted
/// list is the canonical representative; the parity of the sorting
/// permutation is the orientation sign relative to it.
using Simplex = std::vector<VertexId>;

struct DuplicateVertexError : Error {
    using Error::Error;
};
struct VertexMismatchError : Error {
    using Error::Error;
};

std::string simplex_str(const Simplex& s);

/// Sign of the permutation sorting `vertices` ascending: +1 even, -1 odd.
/// Throws DuplicateVertexError on repeats.
int sort_parity(const Simplex& vertices);

/// Returns (sorted vertices, parity of the sorting permutation).
std::pair<Simplex, int> canonicalize(const Simplex& vertices);

/// Sign of the permutation carrying `reference` to `ordering`. Both must be
/// orderings of the same vertex set.
int relative_parity(const Simplex& ordering, const Simplex& reference);

}  // namespace dec
