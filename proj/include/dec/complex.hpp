#pragma once

#include "dec/simplex.hpp"

#include <map>
#include <vector>

namespace dec {

struct SimplexNotInComplexError : Error {
    using Error::Error;
};
struct DegreeMismatchError : Error {
    using Error::Error;
};

/// Formal rational combination of canonical k-simplices. Zero coefficients
/// are pruned; orientation signs are folded in when terms are added.
class Chain {
public:
    explicit Chain(int degree) : degree_(degree) {}

    int degree() const { return degree_; }
    const std::map<Simplex, Rational>& coefficients() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    /// Adds coeff * [oriented simplex]; canonicalizes the key.
    void add(const Simplex& oriented, const Rational& coeff);

    Chain& operator+=(const Chain& other);
    bool operator==(const Chain& other) const = default;

private:
    int degree_;
    std::map<Simplex, Rational> coeffs_;
};

/// Face-closed set of canonical simplices, one dimension at a time, each
/// with a chosen orientation representative. Built only through closure().
class SimplicialComplex {
public:
    /// Closure of the listed top simplices. Listed vertex order is recorded
    /// as the chosen orientation; generated faces get ascending order.
    static SimplicialComplex closure(const std::vector<Simplex>& top_simplices);

    /// Max dimension with a nonempty simplex set; -1 for the empty complex.
    int dimension() const { return static_cast<int>(by_dim_.size()) - 1; }

    bool contains(const Simplex& canonical) const;

    /// Canonical k-simplices with their chosen orientation representatives.
    const std::map<Simplex, Simplex>& simplices(int k) const;

    /// Chosen orientation representative of a canonical simplex.
    const Simplex& chosen_orientation(const Simplex& canonical) const;

    std::vector<VertexId> vertices() const;

    long euler_characteristic() const;

private:
    // by_dim_[k]: canonical k-simplex -> chosen orientation ordering
    std::vector<std::map<Simplex, Simplex>> by_dim_;
};

/// Linear functional on k-chains, stored as values on canonical simplices.
/// Missing simplices evaluate to zero.
class Cochain {
public:
    explicit Cochain(int degree) : degree_(degree) {}

    int degree() const { return degree_; }
    const std::map<Simplex, Rational>& values() const { return vals_; }
    bool is_zero() const { return vals_.empty(); }

    /// Sets the value on an oriented simplex; stored on the canonical form
    /// with the orientation parity folded into the value.
    void set(const Simplex& oriented, const Rational& value);

    /// Adds to the value on an oriented simplex.
    void add(const Simplex& oriented, const Rational& value);

    Rational eval(const Simplex& oriented) const;
    Rational eval(const Chain& chain) const;

    Cochain operator+(const Cochain& other) const;
    Cochain operator*(const Rational& scalar) const;
    bool operator==(const Cochain& other) const = default;

private:
    int degree_;
    std::map<Simplex, Rational> vals_;
};

/// The signed face sum of an oriented simplex, as a (k-1)-chain. The simplex
/// must belong to the complex.
Chain boundary(const SimplicialComplex& complex, const Simplex& oriented);

/// Linear extension of the boundary to chains.
Chain boundary(const SimplicialComplex& complex, const Chain& chain);

/// Constant-one 0-cochain on every vertex of the complex.
Cochain ones_cochain(const SimplicialComplex& complex);

}  // namespace dec
