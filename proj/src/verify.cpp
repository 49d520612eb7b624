#include "dec/verify.hpp"

#include "dec/maps.hpp"
#include "dec/operators.hpp"
#include "dec/whitney.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <sstream>

namespace dec {

namespace {

using Rng = std::mt19937_64;

Rational random_rational(Rng& rng) {
    std::uniform_int_distribution<int> num(-100, 100);
    std::uniform_int_distribution<int> den(1, 100);
    return Rational(num(rng), den(rng));
}

Cochain random_cochain(const SimplicialComplex& complex, int degree, Rng& rng) {
    Cochain out(degree);
    for (const auto& [s, o] : complex.simplices(degree)) {
        (void)o;
        out.set(s, random_rational(rng));
    }
    return out;
}

std::string cochain_text(const Cochain& a) {
    std::ostringstream out;
    out << "degree " << a.degree() << " {";
    bool first = true;
    for (const auto& [s, v] : a.values()) {
        if (!first) out << ", ";
        first = false;
        out << simplex_str(s) << ": " << to_string(v);
    }
    out << "}";
    return out.str();
}

struct Runner {
    const SimplicialComplex& complex;
    const VerifyOptions& opt;
    std::vector<PropertyResult> results;

    int max_degree() const {
        int d = complex.dimension();
        if (opt.max_degree >= 0) d = std::min(d, opt.max_degree);
        return d;
    }

    // body returns an empty string on success, a witness on failure.
    void run(const std::string& name, bool vacuous, const std::function<std::string()>& body) {
        if (vacuous) {
            results.push_back({name, PropertyStatus::Skip, ""});
            return;
        }
        std::string witness = body();
        results.push_back({name,
                           witness.empty() ? PropertyStatus::Pass : PropertyStatus::Fail,
                           witness});
    }
};

std::string check_scalar_arithmetic(const VerifyOptions& opt) {
    Rng rng(opt.seed ^ 0x5ca1a1u);
    for (int t = 0; t < opt.trials; ++t) {
        Rational a = random_rational(rng), b = random_rational(rng), c = random_rational(rng);
        if ((a + b) + c != a + (b + c) || a * b != b * a || a * (b + c) != a * b + a * c)
            return "scalars a=" + to_string(a) + " b=" + to_string(b) + " c=" + to_string(c);
        if (parse_rational(to_string(a)) != a)
            return "round-trip failed for " + to_string(a);
    }
    return "";
}

std::string check_parity_eval(const SimplicialComplex& complex, const VerifyOptions& opt,
                              int max_degree) {
    Rng rng(opt.seed ^ 0x9a71fdu);
    for (int k = 0; k <= max_degree; ++k) {
        Cochain a = random_cochain(complex, k, rng);
        for (const auto& [s, o] : complex.simplices(k)) {
            (void)o;
            auto [canon, sign] = canonicalize(s);
            if (sign != 1) return "canonicalize not idempotent on " + simplex_str(s);
            Simplex perm = s;
            for (int t = 0; t < 8; ++t) {
                std::shuffle(perm.begin(), perm.end(), rng);
                if (a.eval(perm) != Rational(relative_parity(perm, s)) * a.eval(s))
                    return "eval parity on " + simplex_str(perm) + " of " + cochain_text(a);
            }
        }
    }
    return "";
}

std::string check_boundary_boundary(const SimplicialComplex& complex) {
    for (int k = 2; k <= complex.dimension(); ++k)
        for (const auto& [s, o] : complex.simplices(k)) {
            (void)o;
            if (!boundary(complex, boundary(complex, s)).is_zero())
                return "boundary of boundary nonzero on " + simplex_str(s);
        }
    return "";
}

std::string check_dd_zero(const SimplicialComplex& complex, const VerifyOptions& opt,
                          int max_degree) {
    Rng rng(opt.seed ^ 0xddcc00u);
    for (int k = 0; k + 2 <= complex.dimension() && k <= max_degree; ++k)
        for (int t = 0; t < opt.trials; ++t) {
            Cochain a = random_cochain(complex, k, rng);
            if (!d(complex, d(complex, a)).is_zero())
                return "d(d(a)) nonzero for a = " + cochain_text(a);
        }
    return "";
}

std::string check_method_equivalence(const SimplicialComplex& complex, const VerifyOptions& opt,
                                     int max_degree) {
    Rng rng(opt.seed ^ 0x3e70deu);
    for (int k = 0; k <= max_degree; ++k)
        for (int l = 0; k + l <= complex.dimension() && l <= max_degree; ++l)
            for (int t = 0; t < opt.trials; ++t) {
                Cochain a = random_cochain(complex, k, rng);
                Cochain b = random_cochain(complex, l, rng);
                Cochain ref = wedge_perm(complex, a, b);
                if (opt.corrupt_wedge && k == 0 && l == 0 && t == 0 && !complex.vertices().empty()) {
                    Simplex v{complex.vertices().front()};
                    ref.set(v, ref.eval(v) + 1);
                }
                if (wedge_avg(complex, a, b, WedgeMethod::AverageOuterLeft) != ref ||
                    wedge_avg(complex, a, b, WedgeMethod::AverageOuterRight) != ref)
                    return "degrees (" + std::to_string(k) + "," + std::to_string(l) +
                           ") a = " + cochain_text(a) + " b = " + cochain_text(b);
            }
    return "";
}

std::string check_anticommutativity(const SimplicialComplex& complex, const VerifyOptions& opt,
                                    int max_degree) {
    Rng rng(opt.seed ^ 0xac0317u);
    for (int k = 0; k <= max_degree; ++k)
        for (int l = 0; k + l <= complex.dimension() && l <= max_degree; ++l)
            for (int t = 0; t < opt.trials; ++t) {
                Cochain a = random_cochain(complex, k, rng);
                Cochain b = random_cochain(complex, l, rng);
                Rational sign = (k * l) % 2 == 0 ? 1 : -1;
                if (wedge(complex, a, b) != wedge(complex, b, a) * sign)
                    return "degrees (" + std::to_string(k) + "," + std::to_string(l) +
                           ") a = " + cochain_text(a) + " b = " + cochain_text(b);
            }
    return "";
}

std::string check_leibniz(const SimplicialComplex& complex, const VerifyOptions& opt,
                          int max_degree) {
    Rng rng(opt.seed ^ 0x1e1b12u);
    for (int k = 0; k <= max_degree; ++k)
        for (int l = 0; k + l + 1 <= complex.dimension() && l <= max_degree; ++l)
            for (int t = 0; t < opt.trials; ++t) {
                Cochain a = random_cochain(complex, k, rng);
                Cochain b = random_cochain(complex, l, rng);
                Rational sign = k % 2 == 0 ? 1 : -1;
                Cochain lhs = d(complex, wedge(complex, a, b));
                Cochain rhs = wedge(complex, d(complex, a), b) +
                              wedge(complex, a, d(complex, b)) * sign;
                if (lhs != rhs)
                    return "degrees (" + std::to_string(k) + "," + std::to_string(l) +
                           ") a = " + cochain_text(a) + " b = " + cochain_text(b);
            }
    return "";
}

std::string check_unit(const SimplicialComplex& complex, const VerifyOptions& opt,
                       int max_degree) {
    Rng rng(opt.seed ^ 0x111171u);
    Cochain one = ones_cochain(complex);
    for (int l = 0; l <= max_degree; ++l)
        for (int t = 0; t < opt.trials; ++t) {
            Cochain b = random_cochain(complex, l, rng);
            if (wedge(complex, one, b) != b || wedge(complex, b, one) != b)
                return "degree " + std::to_string(l) + " b = " + cochain_text(b);
        }
    return "";
}

std::string check_bilinearity(const SimplicialComplex& complex, const VerifyOptions& opt,
                              int max_degree) {
    Rng rng(opt.seed ^ 0xb111eau);
    for (int k = 0; k <= max_degree; ++k)
        for (int l = 0; k + l <= complex.dimension() && l <= max_degree; ++l)
            for (int t = 0; t < opt.trials; ++t) {
                Cochain a = random_cochain(complex, k, rng);
                Cochain a2 = random_cochain(complex, k, rng);
                Cochain b = random_cochain(complex, l, rng);
                Rational s = random_rational(rng);
                if (wedge(complex, a + a2, b) != wedge(complex, a, b) + wedge(complex, a2, b) ||
                    wedge(complex, a * s, b) != wedge(complex, a, b) * s ||
                    wedge(complex, a, b * s) != wedge(complex, a, b) * s)
                    return "degrees (" + std::to_string(k) + "," + std::to_string(l) +
                           ") a = " + cochain_text(a) + " a' = " + cochain_text(a2) +
                           " b = " + cochain_text(b) + " s = " + to_string(s);
            }
    return "";
}

std::string check_wilson(const SimplicialComplex& complex, const VerifyOptions& opt,
                         int max_degree) {
    Rng rng(opt.seed ^ 0x3117077u);
    int trials = std::max(1, opt.trials / 5);  // the symbolic path is the slow one
    for (int k = 0; k <= max_degree; ++k)
        for (int l = 0; k + l <= complex.dimension() && l <= max_degree; ++l)
            for (int t = 0; t < trials; ++t) {
                Cochain a = random_cochain(complex, k, rng);
                Cochain b = random_cochain(complex, l, rng);
                Cochain ref = wedge_perm(complex, a, b);
                if (wilson_product(complex, a, b, WilsonPath::Symbolic) != ref ||
                    wilson_product(complex, a, b, WilsonPath::ClosedForm) != ref)
                    return "degrees (" + std::to_string(k) + "," + std::to_string(l) +
                           ") a = " + cochain_text(a) + " b = " + cochain_text(b);
            }
    return "";
}

// Random simplicial maps from the complex onto image complexes, generated by
// arbitrary vertex maps. Valid by construction: the target is the closure of
// the image simplices.
struct RandomMap {
    SimplicialComplex target;
    std::map<VertexId, VertexId> vertex_map;
};

RandomMap random_map_data(const SimplicialComplex& complex, Rng& rng) {
    std::vector<VertexId> verts = complex.vertices();
    // Mix identifications (collapses) with relabelings.
    std::uniform_int_distribution<size_t> pick(0, verts.size() - 1);
    std::map<VertexId, VertexId> vm;
    for (VertexId v : verts) vm[v] = v;
    int collapses = std::uniform_int_distribution<int>(0, 2)(rng);
    for (int c = 0; c < collapses && verts.size() > 1; ++c) {
        VertexId from = verts[pick(rng)], to = verts[pick(rng)];
        for (auto& [u, w] : vm)
            if (w == from) w = to;
    }
    std::vector<Simplex> image_tops;
    for (int k = 0; k <= complex.dimension(); ++k)
        for (const auto& [s, o] : complex.simplices(k)) {
            (void)o;
            std::set<VertexId> image;
            for (VertexId v : s) image.insert(vm.at(v));
            image_tops.emplace_back(image.begin(), image.end());
        }
    return {SimplicialComplex::closure(image_tops), std::move(vm)};
}

std::string check_naturality(const SimplicialComplex& complex, const VerifyOptions& opt,
                             int max_degree) {
    Rng rng(opt.seed ^ 0x4a70a1u);
    for (int m = 0; m < 5; ++m) {
        RandomMap data = random_map_data(complex, rng);
        SimplicialMap f(complex, data.target, data.vertex_map);
        for (int k = 0; k <= max_degree; ++k) {
            for (int t = 0; t < std::max(1, opt.trials / 5); ++t) {
                Cochain a = random_cochain(data.target, k, rng);
                if (pullback(f, d(data.target, a)) != d(complex, pullback(f, a)))
                    return "d-naturality, map " + std::to_string(m) + " a = " + cochain_text(a);
                for (int l = 0; k + l <= complex.dimension() && l <= max_degree; ++l) {
                    Cochain b = random_cochain(data.target, l, rng);
                    if (pullback(f, wedge(data.target, a, b)) !=
                        wedge(complex, pullback(f, a), pullback(f, b)))
                        return "wedge-naturality, map " + std::to_string(m) +
                               " a = " + cochain_text(a) + " b = " + cochain_text(b);
                }
            }
        }
    }
    return "";
}

std::string check_functoriality(const SimplicialComplex& complex, const VerifyOptions& opt,
                                int max_degree) {
    Rng rng(opt.seed ^ 0xf4c707u);
    for (int m = 0; m < 5; ++m) {
        RandomMap first = random_map_data(complex, rng);
        SimplicialMap f(complex, first.target, first.vertex_map);
        RandomMap second = random_map_data(first.target, rng);
        SimplicialMap g(first.target, second.target, second.vertex_map);
        SimplicialMap gf = f.then(g);
        SimplicialMap id = identity_map(complex);
        for (int k = 0; k <= max_degree; ++k)
            for (int t = 0; t < std::max(1, opt.trials / 5); ++t) {
                Cochain a = random_cochain(second.target, k, rng);
                if (pullback(gf, a) != pullback(f, pullback(g, a)))
                    return "composition, map pair " + std::to_string(m) + " a = " + cochain_text(a);
                Cochain a2 = random_cochain(second.target, k, rng);
                if (pullback(gf, a + a2) != pullback(gf, a) + pullback(gf, a2))
                    return "pullback linearity, a = " + cochain_text(a) +
                           " a' = " + cochain_text(a2);
                Cochain c = random_cochain(complex, k, rng);
                if (pullback(id, c) != c)
                    return "identity pullback, c = " + cochain_text(c);
            }
    }
    return "";
}

}  // namespace

std::vector<PropertyResult> run_verification(const SimplicialComplex& complex,
                                             const VerifyOptions& options) {
    Runner r{complex, options, {}};
    int dim = complex.dimension();
    int maxdeg = r.max_degree();
    bool empty = dim < 0;
    bool flat = dim < 1;

    r.run("scalar-arithmetic", false, [&] { return check_scalar_arithmetic(options); });
    r.run("canonicalize-and-eval-parity", empty,
          [&] { return check_parity_eval(complex, options, maxdeg); });
    r.run("boundary-boundary-zero", dim < 2, [&] { return check_boundary_boundary(complex); });
    r.run("d-d-zero", dim < 2, [&] { return check_dd_zero(complex, options, maxdeg); });
    r.run("wedge-method-equivalence", empty,
          [&] { return check_method_equivalence(complex, options, maxdeg); });
    r.run("wedge-anticommutativity", empty,
          [&] { return check_anticommutativity(complex, options, maxdeg); });
    r.run("leibniz-rule", flat, [&] { return check_leibniz(complex, options, maxdeg); });
    r.run("wedge-unit", empty, [&] { return check_unit(complex, options, maxdeg); });
    r.run("wedge-bilinearity", empty, [&] { return check_bilinearity(complex, options, maxdeg); });
    r.run("wilson-product-equivalence", empty,
          [&] { return check_wilson(complex, options, maxdeg); });
    r.run("naturality-d-and-wedge", empty,
          [&] { return check_naturality(complex, options, maxdeg); });
    r.run("pullback-functoriality", empty,
          [&] { return check_functoriality(complex, options, maxdeg); });
    return r.results;
}

}  // namespace dec
