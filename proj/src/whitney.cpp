#include "dec/whitney.hpp"

#include <algorithm>
#include <set>

namespace dec {

void PolyForm::add_term(const Monomial& exps, const CovectorSet& covectors, const Rational& coeff) {
    if (static_cast<int>(exps.size()) != num_vertices_)
        throw AmbientMismatchError("monomial exponent list has wrong length");
    if (static_cast<int>(covectors.size()) != degree_)
        throw DegreeMismatchError("covector set size does not match form degree");
    for (size_t i = 0; i < covectors.size(); ++i) {
        bool ok = covectors[i] >= 1 && covectors[i] <= num_vertices_ - 1 &&
                  (i == 0 || covectors[i] > covectors[i - 1]);
        if (!ok) throw AmbientMismatchError("covector indices must be increasing in 1..n");
    }
    if (coeff == 0) return;
    auto key = std::make_pair(exps, covectors);
    Rational next = terms_[key] + coeff;
    if (next == 0) {
        terms_.erase(key);
    } else {
        terms_[key] = next;
    }
}

PolyForm PolyForm::operator+(const PolyForm& other) const {
    if (other.num_vertices_ != num_vertices_ || other.degree_ != degree_)
        throw AmbientMismatchError("cannot add forms of different ambient or degree");
    PolyForm out = *this;
    for (const auto& [key, c] : other.terms_) out.add_term(key.first, key.second, c);
    return out;
}

PolyForm PolyForm::operator*(const Rational& scalar) const {
    PolyForm out(num_vertices_, degree_);
    if (scalar == 0) return out;
    for (const auto& [key, c] : terms_) out.terms_[key] = c * scalar;
    return out;
}

namespace {

// dlambda_i as a combination over the basis dlambda_1..dlambda_n.
std::vector<std::pair<int, int>> covector_expansion(int i, int n) {
    std::vector<std::pair<int, int>> out;
    if (i == 0) {
        for (int j = 1; j <= n; ++j) out.emplace_back(j, -1);
    } else {
        out.emplace_back(i, 1);
    }
    return out;
}

// Expands dl_{idx[0]} ^ ... ^ dl_{idx[p-1]} into sorted basis terms.
void expand_covectors(const std::vector<int>& idx, int n, size_t pos, std::vector<int>& picked,
                      int sign, std::vector<std::pair<std::vector<int>, int>>& out) {
    if (pos == idx.size()) {
        std::vector<int> sorted = picked;
        int inversions = 0;
        for (size_t i = 0; i < sorted.size(); ++i)
            for (size_t j = i + 1; j < sorted.size(); ++j) {
                if (sorted[i] == sorted[j]) return;  // repeated covector
                if (sorted[i] > sorted[j]) ++inversions;
            }
        std::sort(sorted.begin(), sorted.end());
        out.emplace_back(std::move(sorted), inversions % 2 == 0 ? sign : -sign);
        return;
    }
    for (auto [basis, s] : covector_expansion(idx[pos], n)) {
        picked.push_back(basis);
        expand_covectors(idx, n, pos + 1, picked, sign * s, out);
        picked.pop_back();
    }
}

}  // namespace

PolyForm whitney(const Simplex& face_local_indices, int num_vertices) {
    int n = num_vertices - 1;
    int k = static_cast<int>(face_local_indices.size()) - 1;
    for (int i : face_local_indices)
        if (i < 0 || i > n)
            throw FaceNotInAmbientError("face index " + std::to_string(i) +
                                        " outside ambient simplex");
    sort_parity(face_local_indices);  // rejects duplicates
    PolyForm out(num_vertices, k);
    Rational kfact(factorial(k));
    for (int j = 0; j <= k; ++j) {
        std::vector<int> idx;
        for (int i = 0; i <= k; ++i)
            if (i != j) idx.push_back(face_local_indices[i]);
        std::vector<std::pair<std::vector<int>, int>> expanded;
        std::vector<int> picked;
        expand_covectors(idx, n, 0, picked, 1, expanded);
        PolyForm::Monomial exps(num_vertices, 0);
        exps[face_local_indices[j]] = 1;
        for (const auto& [basis, sign] : expanded)
            out.add_term(exps, basis, kfact * sign * (j % 2 == 0 ? 1 : -1));
    }
    return out;
}

PolyForm wedge_forms(const PolyForm& p, const PolyForm& q) {
    if (p.num_vertices() != q.num_vertices())
        throw AmbientMismatchError("forms live on different ambient simplices");
    PolyForm out(p.num_vertices(), p.form_degree() + q.form_degree());
    for (const auto& [pk, pc] : p.terms()) {
        for (const auto& [qk, qc] : q.terms()) {
            // shuffle sign and overlap check for the covector sets
            int sign = 1;
            bool overlap = false;
            for (int x : pk.second)
                for (int y : qk.second) {
                    if (x == y) overlap = true;
                    if (x > y) sign = -sign;
                }
            if (overlap) continue;
            PolyForm::CovectorSet merged;
            std::merge(pk.second.begin(), pk.second.end(), qk.second.begin(), qk.second.end(),
                       std::back_inserter(merged));
            PolyForm::Monomial exps(p.num_vertices());
            for (int i = 0; i < p.num_vertices(); ++i) exps[i] = pk.first[i] + qk.first[i];
            out.add_term(exps, merged, pc * qc * sign);
        }
    }
    return out;
}

Rational integrate(const PolyForm& p) {
    int n = p.num_vertices() - 1;
    if (p.form_degree() != n)
        throw DegreeMismatchError("can only integrate forms of top degree " + std::to_string(n));
    // int over the reference simplex of prod lambda_i^{a_i} dl_1^...^dl_n
    // = prod(a_i!) / (sum(a_i) + n)!   (Dirichlet integral)
    Rational out = 0;
    for (const auto& [key, c] : p.terms()) {
        Integer num = 1;
        int total = 0;
        for (int a : key.first) {
            num *= factorial(a);
            total += a;
        }
        out += c * Rational(num, factorial(total + n));
    }
    return out;
}

int epsilon_sign(const Simplex& sigma, const Simplex& tau, const Simplex& nu_prime) {
    std::set<VertexId> sv(sigma.begin(), sigma.end()), tv(tau.begin(), tau.end());
    std::vector<VertexId> shared;
    std::set_intersection(sv.begin(), sv.end(), tv.begin(), tv.end(), std::back_inserter(shared));
    if (shared.size() > 1)
        throw OverlapTooLargeError("faces " + simplex_str(sigma) + " and " + simplex_str(tau) +
                                   " share more than one vertex");
    std::set<VertexId> joint(sv);
    joint.insert(tv.begin(), tv.end());
    std::set<VertexId> nv(nu_prime.begin(), nu_prime.end());
    if (shared.empty() || joint != nv)
        throw NotSpanningError("faces " + simplex_str(sigma) + " and " + simplex_str(tau) +
                               " do not span " + simplex_str(nu_prime));
    return sort_parity(sigma) * sort_parity(tau) * sort_parity(nu_prime);
}

namespace {

Simplex to_local(const Simplex& face, const Simplex& ambient_ascending) {
    Simplex local;
    for (VertexId v : face) {
        auto it = std::lower_bound(ambient_ascending.begin(), ambient_ascending.end(), v);
        if (it == ambient_ascending.end() || *it != v)
            throw FaceNotInAmbientError("vertex " + std::to_string(v) + " not in ambient simplex");
        local.push_back(static_cast<int>(it - ambient_ascending.begin()));
    }
    return local;
}

std::vector<Simplex> ascending_faces(const Simplex& ascending, int r) {
    std::vector<Simplex> out;
    int n = static_cast<int>(ascending.size());
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) != r + 1) continue;
        Simplex face;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) face.push_back(ascending[i]);
        out.push_back(std::move(face));
    }
    return out;
}

Rational wilson_on_simplex(const Cochain& a, const Cochain& b, const Simplex& nu,
                           WilsonPath path) {
    int k = a.degree(), l = b.degree();
    int num_vertices = static_cast<int>(nu.size());
    if (path == WilsonPath::Symbolic) {
        PolyForm wa(num_vertices, k), wb(num_vertices, l);
        for (const Simplex& f : ascending_faces(nu, k))
            wa = wa + whitney(to_local(f, nu), num_vertices) * a.eval(f);
        for (const Simplex& f : ascending_faces(nu, l))
            wb = wb + whitney(to_local(f, nu), num_vertices) * b.eval(f);
        return integrate(wedge_forms(wa, wb));
    }
    Rational base(factorial(k) * factorial(l), factorial(k + l + 1));
    Rational out = 0;
    for (const Simplex& sigma : ascending_faces(nu, k)) {
        for (const Simplex& tau : ascending_faces(nu, l)) {
            std::vector<VertexId> shared;
            std::set_intersection(sigma.begin(), sigma.end(), tau.begin(), tau.end(),
                                  std::back_inserter(shared));
            if (shared.size() != 1) continue;
            if (sigma.size() + tau.size() != nu.size() + 1) continue;
            VertexId v = shared[0];
            Simplex sigma_rot, tau_rot, nu_prime;
            for (VertexId u : sigma)
                if (u != v) sigma_rot.push_back(u);
            sigma_rot.push_back(v);
            tau_rot.push_back(v);
            for (VertexId u : tau)
                if (u != v) tau_rot.push_back(u);
            nu_prime = sigma_rot;
            nu_prime.insert(nu_prime.end(), tau_rot.begin() + 1, tau_rot.end());
            Rational av = a.eval(sigma);
            if (av == 0) continue;
            Rational bv = b.eval(tau);
            if (bv == 0) continue;
            out += av * bv * epsilon_sign(sigma_rot, tau_rot, nu_prime) * base;
        }
    }
    return out;
}

}  // namespace

Rational whitney_pair_integral(const Simplex& first, const Simplex& second,
                               const Simplex& ambient_ascending) {
    int num_vertices = static_cast<int>(ambient_ascending.size());
    PolyForm wf = whitney(to_local(first, ambient_ascending), num_vertices);
    PolyForm ws = whitney(to_local(second, ambient_ascending), num_vertices);
    return integrate(wedge_forms(wf, ws));
}

Cochain wilson_product(const SimplicialComplex& complex, const Cochain& a, const Cochain& b,
                       WilsonPath path) {
    int n = a.degree() + b.degree();
    Cochain out(n);
    for (const auto& [canon, chosen] : complex.simplices(n)) {
        (void)chosen;
        Rational v = wilson_on_simplex(a, b, canon, path);
        if (v != 0) out.set(canon, v);
    }
    return out;
}

}  // namespace dec
