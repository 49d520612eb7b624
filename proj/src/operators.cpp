#include "dec/operators.hpp"

#include <algorithm>

namespace dec {

Cochain d(const SimplicialComplex& complex, const Cochain& a) {
    int k = a.degree();
    Cochain out(k + 1);
    for (const auto& [canon, chosen] : complex.simplices(k + 1)) {
        (void)chosen;
        Rational v = a.eval(boundary(complex, canon));
        if (v != 0) out.set(canon, v);
    }
    return out;
}

Rational cup_eval(const Cochain& a, const Cochain& b, const Simplex& ordered) {
    int k = a.degree(), l = b.degree();
    if (static_cast<int>(ordered.size()) != k + l + 1)
        throw DegreeMismatchError("cup of degrees (" + std::to_string(k) + "," +
                                  std::to_string(l) + ") needs " + std::to_string(k + l + 1) +
                                  " vertices, got " + simplex_str(ordered));
    Simplex front(ordered.begin(), ordered.begin() + k + 1);
    Simplex back(ordered.begin() + k, ordered.end());
    Rational av = a.eval(front);
    if (av == 0) return 0;
    return av * b.eval(back);
}

Cochain cup(const SimplicialComplex& complex, const Cochain& a, const Cochain& b) {
    int n = a.degree() + b.degree();
    Cochain out(n);
    for (const auto& [canon, chosen] : complex.simplices(n)) {
        (void)chosen;
        Rational v = cup_eval(a, b, canon);
        if (v != 0) out.set(canon, v);
    }
    return out;
}

int ordering_parity(const Simplex& f, VertexId v, const Simplex& rest, const Simplex& sigma) {
    Simplex ordering;
    bool found = false;
    for (VertexId u : f) {
        if (u == v) {
            found = true;
        } else {
            ordering.push_back(u);
        }
    }
    if (!found)
        throw VertexMismatchError("vertex " + std::to_string(v) + " not in face " + simplex_str(f));
    ordering.push_back(v);
    ordering.insert(ordering.end(), rest.begin(), rest.end());
    return relative_parity(ordering, sigma);
}

namespace {

// All (r+1)-subsets of `vertices`, each ascending, with ascending complement.
std::vector<std::pair<Simplex, Simplex>> faces_with_complements(const Simplex& vertices, int r) {
    std::vector<std::pair<Simplex, Simplex>> out;
    int n = static_cast<int>(vertices.size());
    std::vector<int> pick(r + 1);
    for (int i = 0; i <= r; ++i) pick[i] = i;
    while (true) {
        Simplex face, rest;
        int p = 0;
        for (int i = 0; i < n; ++i) {
            if (p <= r && pick[p] == i) {
                face.push_back(vertices[i]);
                ++p;
            } else {
                rest.push_back(vertices[i]);
            }
        }
        out.emplace_back(std::move(face), std::move(rest));
        int i = r;
        while (i >= 0 && pick[i] == n - (r + 1 - i)) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j <= r; ++j) pick[j] = pick[j - 1] + 1;
    }
    return out;
}

Rational wedge_perm_on(const Cochain& a, const Cochain& b, const Simplex& ascending) {
    int n = static_cast<int>(ascending.size());
    Simplex perm = ascending;
    Rational sum = 0;
    do {
        sum += sort_parity(perm) * cup_eval(a, b, perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return sum / Rational(factorial(n));
}

Rational wedge_avg_on(const Cochain& a, const Cochain& b, const Simplex& ascending,
                      WedgeMethod method) {
    int k = a.degree(), l = b.degree();
    bool left = method == WedgeMethod::AverageOuterLeft;
    int outer_deg = left ? k : l;
    Rational total = 0;
    for (const auto& [face, rest] : faces_with_complements(ascending, outer_deg)) {
        Rational inner = 0;
        for (VertexId v : face) {
            Simplex face_rot;  // face with v moved last
            for (VertexId u : face)
                if (u != v) face_rot.push_back(u);
            face_rot.push_back(v);
            Simplex joined;  // v * (sigma \ face)
            joined.push_back(v);
            joined.insert(joined.end(), rest.begin(), rest.end());
            if (left) {
                // combined ordering (face\v, v, rest) must be even
                Simplex ordering = face_rot;
                ordering.insert(ordering.end(), rest.begin(), rest.end());
                inner += relative_parity(ordering, ascending) * a.eval(face_rot) * b.eval(joined);
            } else {
                // combined ordering (rest, v, face\v) must be even
                Simplex ordering = rest;
                ordering.push_back(v);
                ordering.insert(ordering.end(), face_rot.begin(), face_rot.end() - 1);
                Simplex rest_v = rest;  // the left factor sees (sigma \ face) with v last
                rest_v.push_back(v);
                Simplex v_face;  // v * (face \ v)
                v_face.push_back(v);
                v_face.insert(v_face.end(), face_rot.begin(), face_rot.end() - 1);
                inner += relative_parity(ordering, ascending) * a.eval(rest_v) * b.eval(v_face);
            }
        }
        total += inner / (outer_deg + 1);
    }
    return total / Rational(binomial(k + l + 1, outer_deg + 1));
}

}  // namespace

Cochain wedge_perm(const SimplicialComplex& complex, const Cochain& a, const Cochain& b) {
    int n = a.degree() + b.degree();
    Cochain out(n);
    for (const auto& [canon, chosen] : complex.simplices(n)) {
        (void)chosen;
        Rational v = wedge_perm_on(a, b, canon);
        if (v != 0) out.set(canon, v);
    }
    return out;
}

Cochain wedge_avg(const SimplicialComplex& complex, const Cochain& a, const Cochain& b,
                  WedgeMethod method) {
    if (method == WedgeMethod::PermutationSum) return wedge_perm(complex, a, b);
    int n = a.degree() + b.degree();
    Cochain out(n);
    for (const auto& [canon, chosen] : complex.simplices(n)) {
        (void)chosen;
        Rational v = wedge_avg_on(a, b, canon, method);
        if (v != 0) out.set(canon, v);
    }
    return out;
}

Cochain wedge(const SimplicialComplex& complex, const Cochain& a, const Cochain& b,
              WedgeMethod method) {
    return method == WedgeMethod::PermutationSum ? wedge_perm(complex, a, b)
                                                 : wedge_avg(complex, a, b, method);
}

}  // namespace dec
