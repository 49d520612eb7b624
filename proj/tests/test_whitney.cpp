#include "dec/operators.hpp"
#include "dec/whitney.hpp"

#include "doctest.h"
#include "oracle.hpp"

#include <random>

using namespace dec;

namespace {

Cochain random_cochain(const SimplicialComplex& c, int degree, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-30, 30), den(1, 12);
    Cochain out(degree);
    for (const auto& [s, o] : c.simplices(degree)) out.set(s, Rational(num(rng), den(rng)));
    return out;
}

std::vector<Simplex> faces_of_dim(const Simplex& ambient, int r) {
    std::vector<Simplex> out;
    int n = static_cast<int>(ambient.size());
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) != r + 1) continue;
        Simplex f;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) f.push_back(ambient[i]);
        out.push_back(std::move(f));
    }
    return out;
}

}  // namespace

TEST_CASE("Whitney form of a vertex is its hat function") {
    PolyForm w = whitney({0}, 2);
    PolyForm expected(2, 0);
    expected.add_term({1, 0}, {}, 1);
    CHECK(w == expected);
}

TEST_CASE("Whitney form of an edge after eliminating dlambda_0") {
    // W[0,1] = l0 dl1 - l1 dl0 = (l0 + l1) dl1 on the reference edge
    PolyForm w = whitney({0, 1}, 2);
    PolyForm expected(2, 1);
    expected.add_term({1, 0}, {1}, 1);
    expected.add_term({0, 1}, {1}, 1);
    CHECK(w == expected);
    CHECK(whitney({1, 0}, 2) == w * Rational(-1));
}

TEST_CASE("whitney rejects indices outside the ambient simplex") {
    CHECK_THROWS_AS(whitney({0, 3}, 3), FaceNotInAmbientError);
    CHECK_THROWS_AS(whitney({0, 0}, 3), DuplicateVertexError);
}

TEST_CASE("wedge of polynomial forms") {
    PolyForm p(3, 1), q(3, 1);
    p.add_term({1, 0, 0}, {1}, 1);  // l0 dl1
    q.add_term({0, 1, 0}, {2}, 1);  // l1 dl2
    PolyForm expected(3, 2);
    expected.add_term({1, 1, 0}, {1, 2}, 1);
    CHECK(wedge_forms(p, q) == expected);

    PolyForm r(3, 1);
    r.add_term({0, 0, 0}, {1}, 1);  // dl1
    CHECK(wedge_forms(r, r).is_zero());

    PolyForm s(3, 1);
    s.add_term({0, 0, 0}, {2}, 1);  // dl2
    PolyForm swapped(3, 2);
    swapped.add_term({0, 0, 0}, {1, 2}, -1);
    CHECK(wedge_forms(s, r) == swapped);

    PolyForm other(4, 1);
    other.add_term({0, 0, 0, 0}, {1}, 1);
    CHECK_THROWS_AS(wedge_forms(p, other), AmbientMismatchError);
}

TEST_CASE("integration on the reference simplex") {
    CHECK(integrate(whitney({0, 1}, 2)) == 1);  // the edge integrates its own Whitney form to 1
    CHECK(integrate(PolyForm(2, 1)) == 0);      // zero form
    CHECK_THROWS_AS(integrate(whitney({0}, 2)), DegreeMismatchError);

    // spanning pair on the triangle: sigma=[0,1], tau=[1,2]
    CHECK(whitney_pair_integral({0, 1}, {1, 2}, {0, 1, 2}) == Rational(1, 6));
    CHECK(whitney_pair_integral({0, 2}, {0, 1}, {0, 1, 2}) == Rational(-1, 6));
}

TEST_CASE("the de Rham map inverts Whitney interpolation on top simplices") {
    for (int n = 1; n <= 4; ++n) {
        Simplex top;
        for (int i = 0; i <= n; ++i) top.push_back(i);
        CHECK(integrate(whitney(top, n + 1)) == 1);
    }
}

TEST_CASE("vertex Whitney forms partition unity") {
    for (int n = 1; n <= 4; ++n) {
        PolyForm sum(n + 1, 0);
        for (int i = 0; i <= n; ++i) sum = sum + whitney({i}, n + 1);
        PolyForm one(n + 1, 0);
        for (int i = 0; i <= n; ++i) {
            PolyForm::Monomial m(n + 1, 0);
            m[i] = 1;
            one.add_term(m, {}, 1);
        }
        CHECK(sum == one);  // sum of hats = sum of barycentric coordinates = 1
    }
}

TEST_CASE("epsilon_sign resolves the orientation bookkeeping") {
    CHECK(epsilon_sign({0, 1}, {1, 2}, {0, 1, 2}) == 1);
    // frozen from parity oracles: sgn[0,2]=+1, sgn[2,1]=-1, sgn[0,2,1]=-1
    CHECK(oracle::inversion_parity({2, 1}) == -1);
    CHECK(oracle::inversion_parity({0, 2, 1}) == -1);
    CHECK(epsilon_sign({0, 2}, {2, 1}, {0, 2, 1}) == 1);
    CHECK(epsilon_sign({1, 0}, {0, 2}, {0, 1, 2}) == -1);

    CHECK_THROWS_AS(epsilon_sign({0, 1}, {0, 1, 2}, {0, 1, 2}), OverlapTooLargeError);
    CHECK_THROWS_AS(epsilon_sign({0, 1}, {1, 2}, {0, 1, 2, 3}), NotSpanningError);
    CHECK_THROWS_AS(epsilon_sign({0, 1}, {2, 3}, {0, 1, 2, 3}), NotSpanningError);
}

TEST_CASE("spanning pairs integrate to the signed base value, overlaps to zero") {
    for (int n = 1; n <= 3; ++n) {
        Simplex ambient;
        for (int i = 0; i <= n; ++i) ambient.push_back(i);
        for (int k = 0; k <= n; ++k) {
            int l = n - k;
            Rational base(factorial(k) * factorial(l), factorial(n + 1));
            for (const Simplex& sigma : faces_of_dim(ambient, k))
                for (const Simplex& tau : faces_of_dim(ambient, l)) {
                    std::vector<VertexId> shared;
                    std::set_intersection(sigma.begin(), sigma.end(), tau.begin(), tau.end(),
                                          std::back_inserter(shared));
                    Rational integral = whitney_pair_integral(sigma, tau, ambient);
                    if (shared.size() != 1) {
                        CHECK(integral == 0);
                    } else {
                        CHECK((integral == base || integral == -base));
                    }
                }
        }
    }
}

TEST_CASE("Wilson product equals the permutation-sum wedge") {
    auto tet = SimplicialComplex::closure({{0, 1, 2, 3}});
    std::mt19937_64 rng(31);
    for (int k = 0; k <= 3; ++k)
        for (int l = 0; k + l <= 3; ++l)
            for (int t = 0; t < 4; ++t) {
                Cochain a = random_cochain(tet, k, rng), b = random_cochain(tet, l, rng);
                Cochain ref = wedge_perm(tet, a, b);
                CHECK(wilson_product(tet, a, b, WilsonPath::Symbolic) == ref);
                CHECK(wilson_product(tet, a, b, WilsonPath::ClosedForm) == ref);
            }
}

TEST_CASE("degree-zero Wilson product is pointwise multiplication") {
    auto edge = SimplicialComplex::closure({{0, 1}});
    Cochain a(0), b(0);
    a.set({0}, Rational(3, 2));
    a.set({1}, Rational(5));
    b.set({0}, Rational(-2, 7));
    b.set({1}, Rational(4, 9));
    Cochain p = wilson_product(edge, a, b);
    CHECK(p.eval(Simplex{0}) == Rational(3, 2) * Rational(-2, 7));
    CHECK(p.eval(Simplex{1}) == Rational(5) * Rational(4, 9));
}

TEST_CASE("Wilson product respects the unit") {
    auto tet = SimplicialComplex::closure({{0, 1, 2, 3}});
    Cochain one = ones_cochain(tet);
    std::mt19937_64 rng(37);
    for (int l = 0; l <= 3; ++l) {
        Cochain b = random_cochain(tet, l, rng);
        CHECK(wilson_product(tet, one, b) == b);
    }
}
