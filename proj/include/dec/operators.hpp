#pragma once

#include "dec/complex.hpp"

namespace dec {

/// The three equivalent evaluation strategies for the discrete wedge.
enum class WedgeMethod {
    PermutationSum,     // normalized signed sum over all vertex orderings
    AverageOuterLeft,   // outer sum over k-faces carrying the left factor
    AverageOuterRight,  // outer sum over l-faces carrying the right factor
};

/// Discrete exterior derivative: (da)(s) = a(boundary s) on every
/// (k+1)-simplex of the complex.
Cochain d(const SimplicialComplex& complex, const Cochain& a);

/// Cup product evaluated on one explicit vertex ordering: front k-face value
/// of `a` times back l-face value of `b`. Not skew; the ordering matters
/// beyond a sign.
Rational cup_eval(const Cochain& a, const Cochain& b, const Simplex& ordered);

/// Cup product stored on the ascending ordering of each (k+l)-simplex.
/// Evaluation on other orderings must go through cup_eval; the stored
/// cochain's parity rule does not apply to the cup product.
Cochain cup(const SimplicialComplex& complex, const Cochain& a, const Cochain& b);

/// Sign of the permutation carrying sigma's given ordering to the ordering
/// (f with v moved last, v, rest). f must contain v and (f, rest) must
/// partition sigma's vertices.
int ordering_parity(const Simplex& f, VertexId v, const Simplex& rest, const Simplex& sigma);

/// Antisymmetrized cup product: 1/(k+l+1)! times the signed sum of cup
/// evaluations over all orderings of each (k+l)-simplex.
Cochain wedge_perm(const SimplicialComplex& complex, const Cochain& a, const Cochain& b);

/// Averaging form of the wedge. Per (k+l)-simplex, the outer factor's value
/// on each face is paired with the average of the other factor over
/// vertex-joined complementary faces, orientations fixed by the even
/// permutation convention.
Cochain wedge_avg(const SimplicialComplex& complex, const Cochain& a, const Cochain& b,
                  WedgeMethod method);

/// Discrete wedge product via the chosen method (default: the cheaper
/// averaging form; all methods agree exactly).
Cochain wedge(const SimplicialComplex& complex, const Cochain& a, const Cochain& b,
              WedgeMethod method = WedgeMethod::AverageOuterLeft);

}  // namespace dec
