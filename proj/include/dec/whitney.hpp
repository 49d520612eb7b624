#pragma once

#include "dec/complex.hpp"

#include <map>
#include <vector>

namespace dec {

struct FaceNotInAmbientError : Error {
    using Error::Error;
};
struct AmbientMismatchError : Error {
    using Error::Error;
};
struct NotSpanningError : Error {
    using Error::Error;
};
struct OverlapTooLargeError : Error {
    using Error::Error;
};

/// Polynomial differential form on a reference n-simplex, written in
/// barycentric coordinates lambda_0..lambda_n with dlambda_0 eliminated via
/// sum dlambda_i = 0. Terms are keyed by (monomial exponents, sorted index
/// subset of {1..n} naming the dlambda wedge factors).
class PolyForm {
public:
    using Monomial = std::vector<int>;   // exponent of lambda_i, length n+1
    using CovectorSet = std::vector<int>;  // strictly increasing, subset of 1..n

    PolyForm(int num_vertices, int form_degree)
        : num_vertices_(num_vertices), degree_(form_degree) {}

    int num_vertices() const { return num_vertices_; }
    int form_degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<std::pair<Monomial, CovectorSet>, Rational>& terms() const { return terms_; }

    void add_term(const Monomial& exps, const CovectorSet& covectors, const Rational& coeff);

    PolyForm operator+(const PolyForm& other) const;
    PolyForm operator*(const Rational& scalar) const;
    bool operator==(const PolyForm& other) const = default;

private:
    int num_vertices_;
    int degree_;
    std::map<std::pair<Monomial, CovectorSet>, Rational> terms_;
};

/// Whitney form of an oriented face of the reference simplex with n+1 =
/// num_vertices local vertices 0..n:
///   W[i_0..i_k] = k! sum_j (-1)^j lambda_{i_j} dl_{i_0} ^ ... ^ (omit j) ... ^ dl_{i_k}
/// with dlambda_0 substituted by -(dlambda_1 + ... + dlambda_n).
PolyForm whitney(const Simplex& face_local_indices, int num_vertices);

/// Smooth wedge of polynomial forms on the same ambient simplex.
PolyForm wedge_forms(const PolyForm& p, const PolyForm& q);

/// Exact integral of a top-degree form over the reference simplex in its
/// ascending (positive) orientation, by the Dirichlet monomial formula.
Rational integrate(const PolyForm& p);

/// The sign relating orientations in the spanning-pair integral:
/// sgn(sigma) * sgn(tau) = epsilon * sgn(nu_prime), with sgn(.) the parity
/// sorting each vertex list ascending. sigma and tau must overlap in exactly
/// the junction vertex (last of sigma = first of tau) and concatenate to
/// nu_prime.
int epsilon_sign(const Simplex& sigma, const Simplex& tau, const Simplex& nu_prime);

enum class WilsonPath {
    Symbolic,    // interpolate, wedge, integrate (the oracle)
    ClosedForm,  // epsilon * k! l! / (k+l+1)! per spanning face pair
};

/// Integral of W(first) ^ W(second) over an ambient simplex given by its
/// ascending vertex list; faces are oriented vertex sublists.
Rational whitney_pair_integral(const Simplex& first, const Simplex& second,
                               const Simplex& ambient_ascending);

/// Wilson's cochain product: value on each (k+l)-simplex nu is the integral
/// over nu of the wedge of the Whitney interpolants of a and b.
Cochain wilson_product(const SimplicialComplex& complex, const Cochain& a, const Cochain& b,
                       WilsonPath path = WilsonPath::Symbolic);

}  // namespace dec
