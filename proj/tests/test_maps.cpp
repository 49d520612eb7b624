#include "dec/maps.hpp"
#include "dec/operators.hpp"

#include "doctest.h"
#include "oracle.hpp"

#include <random>
#include <set>

using namespace dec;

namespace {

Cochain random_cochain(const SimplicialComplex& c, int degree, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-50, 50), den(1, 20);
    Cochain out(degree);
    for (const auto& [s, o] : c.simplices(degree)) out.set(s, Rational(num(rng), den(rng)));
    return out;
}

// Target built as the closure of the image simplices, so the map validates.
std::pair<SimplicialComplex, std::map<VertexId, VertexId>> image_complex(
    const SimplicialComplex& source, const std::map<VertexId, VertexId>& vm) {
    std::vector<Simplex> tops;
    for (int k = 0; k <= source.dimension(); ++k)
        for (const auto& [s, o] : source.simplices(k)) {
            std::set<VertexId> image;
            for (VertexId v : s) image.insert(vm.at(v));
            tops.emplace_back(image.begin(), image.end());
        }
    return {SimplicialComplex::closure(tops), vm};
}

}  // namespace

TEST_CASE("the triangle boundary does not map simplicially onto the path") {
    auto boundary_tri = SimplicialComplex::closure({{0, 1}, {1, 2}, {0, 2}});
    auto path = SimplicialComplex::closure({{0, 1}, {1, 2}});
    std::map<VertexId, VertexId> vm{{0, 0}, {1, 1}, {2, 2}};
    try {
        SimplicialMap f(boundary_tri, path, vm);
        FAIL("expected a spanning violation");
    } catch (const SpanningViolationError& e) {
        CHECK(e.simplex == Simplex{0, 2});
    }
}

TEST_CASE("collapsing the triangle boundary onto one edge is simplicial") {
    auto boundary_tri = SimplicialComplex::closure({{0, 1}, {1, 2}, {0, 2}});
    auto edge = SimplicialComplex::closure({{0, 1}});
    SimplicialMap f(boundary_tri, edge, {{0, 0}, {1, 1}, {2, 0}});

    CHECK(pushforward(f, Simplex{0, 2}).is_zero());  // collapses
    Chain image = pushforward(f, Simplex{0, 1});
    CHECK(image.coefficients().at({0, 1}) == 1);
    Chain reversed = pushforward(f, Simplex{2, 1});  // [0,1] after mapping
    CHECK(reversed.coefficients().at({0, 1}) == 1);
}

TEST_CASE("identity map validates and acts trivially") {
    auto tet = SimplicialComplex::closure({{0, 1, 2, 3}});
    SimplicialMap id = identity_map(tet);
    std::mt19937_64 rng(2);
    Chain c(1);
    c.add({0, 1}, Rational(5, 3));
    c.add({2, 1}, 2);
    CHECK(pushforward(id, c) == c);
    for (int k = 0; k <= 3; ++k) {
        Cochain a = random_cochain(tet, k, rng);
        CHECK(pullback(id, a) == a);
    }
}

TEST_CASE("a missing vertex image is rejected") {
    auto edge = SimplicialComplex::closure({{0, 1}});
    CHECK_THROWS_AS(SimplicialMap(edge, edge, {{0, 0}}), MissingVertexImageError);
}

TEST_CASE("pullback along the collapse map reproduces the worked values") {
    auto boundary_tri = SimplicialComplex::closure({{0, 1}, {1, 2}, {0, 2}});
    auto edge = SimplicialComplex::closure({{0, 1}});
    SimplicialMap f(boundary_tri, edge, {{0, 0}, {1, 1}, {2, 0}});

    Cochain alpha(0);
    Rational a0(4, 3), a1(-7, 2);
    alpha.set({0}, a0);
    alpha.set({1}, a1);

    Cochain pulled = pullback(f, alpha);
    CHECK(pulled.eval(Simplex{0}) == a0);
    CHECK(pulled.eval(Simplex{1}) == a1);
    CHECK(pulled.eval(Simplex{2}) == a0);

    // f*(d alpha) vanishes on the collapsed edge and d commutes with f*
    Cochain pulled_d = pullback(f, d(edge, alpha));
    CHECK(pulled_d.eval(Simplex{0, 2}) == 0);
    CHECK(pulled_d == d(boundary_tri, pulled));
    CHECK(pulled_d.eval(Simplex{0, 1}) == a1 - a0);
    CHECK(pulled_d.eval(Simplex{1, 2}) == a0 - a1);
}

TEST_CASE("pushforward commutes with the boundary operator") {
    auto source = SimplicialComplex::closure({{0, 1, 2, 3}});
    std::mt19937_64 rng(17);
    std::vector<std::map<VertexId, VertexId>> maps = {
        {{0, 0}, {1, 1}, {2, 2}, {3, 3}},
        {{0, 1}, {1, 0}, {2, 3}, {3, 2}},  // automorphism
        {{0, 0}, {1, 1}, {2, 2}, {3, 0}},  // collapse
        {{0, 5}, {1, 5}, {2, 6}, {3, 7}},  // collapse with relabeling
    };
    for (const auto& vm : maps) {
        auto [target, m] = image_complex(source, vm);
        SimplicialMap f(source, target, m);
        for (int k = 1; k <= 3; ++k)
            for (const auto& [s, o] : source.simplices(k)) {
                Chain lhs = boundary(target, pushforward(f, s));
                Chain rhs = pushforward(f, boundary(source, s));
                CHECK(lhs == rhs);
            }
    }
}

TEST_CASE("d and wedge are natural under pullback, including collapses") {
    auto source = SimplicialComplex::closure({{0, 1, 2, 3}, {2, 3, 4}});
    std::mt19937_64 rng(19);
    std::vector<std::map<VertexId, VertexId>> maps = {
        {{0, 0}, {1, 1}, {2, 2}, {3, 3}, {4, 4}},
        {{0, 4}, {1, 3}, {2, 2}, {3, 1}, {4, 0}},
        {{0, 0}, {1, 1}, {2, 2}, {3, 3}, {4, 2}},  // collapse
        {{0, 0}, {1, 0}, {2, 2}, {3, 3}, {4, 2}},  // double collapse
    };
    for (const auto& vm : maps) {
        auto [target, m] = image_complex(source, vm);
        SimplicialMap f(source, target, m);
        for (int k = 0; k <= target.dimension(); ++k)
            for (int t = 0; t < 5; ++t) {
                Cochain a = random_cochain(target, k, rng);
                CHECK(pullback(f, d(target, a)) == d(source, pullback(f, a)));
                for (int l = 0; k + l <= target.dimension(); ++l) {
                    Cochain b = random_cochain(target, l, rng);
                    CHECK(pullback(f, wedge(target, a, b)) ==
                          wedge(source, pullback(f, a), pullback(f, b)));
                }
            }
    }
}

TEST_CASE("pullback is functorial and linear") {
    auto source = SimplicialComplex::closure({{0, 1, 2}, {1, 2, 3}});
    std::mt19937_64 rng(21);

    auto [mid, m1] = image_complex(source, {{0, 0}, {1, 1}, {2, 2}, {3, 1}});
    SimplicialMap f(source, mid, m1);
    auto [last, m2] = image_complex(mid, {{0, 0}, {1, 0}, {2, 2}});
    SimplicialMap g(mid, last, m2);

    // brute-force composed vertex map as the oracle for then()
    SimplicialMap gf = f.then(g);
    for (VertexId v : source.vertices()) CHECK(gf.apply(v) == g.apply(f.apply(v)));

    for (int k = 0; k <= last.dimension(); ++k)
        for (int t = 0; t < 10; ++t) {
            Cochain a = random_cochain(last, k, rng);
            Cochain a2 = random_cochain(last, k, rng);
            CHECK(pullback(gf, a) == pullback(f, pullback(g, a)));
            CHECK(pullback(gf, a + a2) == pullback(gf, a) + pullback(gf, a2));
        }
}
