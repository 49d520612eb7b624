#include "dec/complex.hpp"

#include <algorithm>
#include <set>

namespace dec {

void Chain::add(const Simplex& oriented, const Rational& coeff) {
    if (static_cast<int>(oriented.size()) != degree_ + 1)
        throw DegreeMismatchError("chain of degree " + std::to_string(degree_) +
                                  " cannot hold " + simplex_str(oriented));
    auto [canon, sign] = canonicalize(oriented);
    auto it = coeffs_.find(canon);
    Rational next = (it == coeffs_.end() ? Rational(0) : it->second) + coeff * sign;
    if (next == 0) {
        if (it != coeffs_.end()) coeffs_.erase(it);
    } else {
        coeffs_[canon] = next;
    }
}

Chain& Chain::operator+=(const Chain& other) {
    if (other.degree_ != degree_)
        throw DegreeMismatchError("cannot add chains of different degree");
    for (const auto& [s, c] : other.coeffs_) add(s, c);
    return *this;
}

SimplicialComplex SimplicialComplex::closure(const std::vector<Simplex>& top_simplices) {
    SimplicialComplex out;
    // Generate all faces of all listed simplices.
    std::set<Simplex> faces;
    for (const Simplex& top : top_simplices) {
        auto [canon, sign] = canonicalize(top);
        (void)sign;
        int n = static_cast<int>(canon.size());
        for (unsigned mask = 1; mask < (1u << n); ++mask) {
            Simplex face;
            for (int i = 0; i < n; ++i)
                if (mask & (1u << i)) face.push_back(canon[i]);
            faces.insert(std::move(face));
        }
    }
    for (const Simplex& f : faces) {
        int k = static_cast<int>(f.size()) - 1;
        if (k >= static_cast<int>(out.by_dim_.size())) out.by_dim_.resize(k + 1);
        out.by_dim_[k].emplace(f, f);
    }
    // Listed orderings override the ascending default for the top simplices.
    for (const Simplex& top : top_simplices) {
        auto [canon, sign] = canonicalize(top);
        (void)sign;
        out.by_dim_[canon.size() - 1][canon] = top;
    }
    return out;
}

bool SimplicialComplex::contains(const Simplex& canonical) const {
    int k = static_cast<int>(canonical.size()) - 1;
    if (k < 0 || k >= static_cast<int>(by_dim_.size())) return false;
    return by_dim_[k].count(canonical) > 0;
}

const std::map<Simplex, Simplex>& SimplicialComplex::simplices(int k) const {
    static const std::map<Simplex, Simplex> empty;
    if (k < 0 || k >= static_cast<int>(by_dim_.size())) return empty;
    return by_dim_[k];
}

const Simplex& SimplicialComplex::chosen_orientation(const Simplex& canonical) const {
    int k = static_cast<int>(canonical.size()) - 1;
    if (k >= 0 && k < static_cast<int>(by_dim_.size())) {
        auto it = by_dim_[k].find(canonical);
        if (it != by_dim_[k].end()) return it->second;
    }
    throw SimplexNotInComplexError("simplex " + simplex_str(canonical) + " not in complex");
}

std::vector<VertexId> SimplicialComplex::vertices() const {
    std::vector<VertexId> out;
    for (const auto& [s, o] : simplices(0)) out.push_back(s[0]);
    return out;
}

long SimplicialComplex::euler_characteristic() const {
    long chi = 0;
    for (int k = 0; k <= dimension(); ++k)
        chi += (k % 2 == 0 ? 1 : -1) * static_cast<long>(simplices(k).size());
    return chi;
}

void Cochain::set(const Simplex& oriented, const Rational& value) {
    if (static_cast<int>(oriented.size()) != degree_ + 1)
        throw DegreeMismatchError("cochain of degree " + std::to_string(degree_) +
                                  " cannot hold " + simplex_str(oriented));
    auto [canon, sign] = canonicalize(oriented);
    if (value == 0) {
        vals_.erase(canon);
    } else {
        vals_[canon] = value * sign;
    }
}

void Cochain::add(const Simplex& oriented, const Rational& value) {
    auto [canon, sign] = canonicalize(oriented);
    set(canon, eval(canon) + value * sign);
}

Rational Cochain::eval(const Simplex& oriented) const {
    if (static_cast<int>(oriented.size()) != degree_ + 1)
        throw DegreeMismatchError("cochain of degree " + std::to_string(degree_) +
                                  " evaluated on " + simplex_str(oriented));
    auto [canon, sign] = canonicalize(oriented);
    auto it = vals_.find(canon);
    if (it == vals_.end()) return 0;
    return it->second * sign;
}

Rational Cochain::eval(const Chain& chain) const {
    if (chain.degree() != degree_)
        throw DegreeMismatchError("cochain of degree " + std::to_string(degree_) +
                                  " evaluated on chain of degree " + std::to_string(chain.degree()));
    Rational out = 0;
    for (const auto& [s, c] : chain.coefficients()) out += c * eval(s);
    return out;
}

Cochain Cochain::operator+(const Cochain& other) const {
    if (other.degree_ != degree_)
        throw DegreeMismatchError("cannot add cochains of different degree");
    Cochain out = *this;
    for (const auto& [s, v] : other.vals_) out.add(s, v);
    return out;
}

Cochain Cochain::operator*(const Rational& scalar) const {
    Cochain out(degree_);
    if (scalar == 0) return out;
    for (const auto& [s, v] : vals_) out.vals_[s] = v * scalar;
    return out;
}

Chain boundary(const SimplicialComplex& complex, const Simplex& oriented) {
    if (oriented.size() < 2)
        throw DegreeMismatchError("boundary needs dimension >= 1");
    auto [canon, sign] = canonicalize(oriented);
    (void)sign;
    if (!complex.contains(canon))
        throw SimplexNotInComplexError("simplex " + simplex_str(oriented) + " not in complex");
    Chain out(static_cast<int>(oriented.size()) - 2);
    for (size_t i = 0; i < oriented.size(); ++i) {
        Simplex face;
        for (size_t j = 0; j < oriented.size(); ++j)
            if (j != i) face.push_back(oriented[j]);
        out.add(face, i % 2 == 0 ? 1 : -1);
    }
    return out;
}

Chain boundary(const SimplicialComplex& complex, const Chain& chain) {
    Chain out(chain.degree() - 1);
    for (const auto& [s, c] : chain.coefficients()) {
        Chain part = boundary(complex, s);
        for (const auto& [f, fc] : part.coefficients()) out.add(f, c * fc);
    }
    return out;
}

Cochain ones_cochain(const SimplicialComplex& complex) {
    Cochain out(0);
    for (const auto& [s, o] : complex.simplices(0)) out.set(s, 1);
    return out;
}

}  // namespace dec
