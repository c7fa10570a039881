#pragma once

#include <algorithm>
#include <deque>
#include <optional>
#include <stdexcept>
#include <vector>

#include "sextic/mpoly.hpp"

namespace sextic {

/// Graded reverse lexicographic order. Returns true when a > b.
inline bool grevlex_greater(const Expo& a, const Expo& b) {
    int da = 0, db = 0;
    for (int x : a) da += x;
    for (int x : b) db += x;
    if (da != db) return da > db;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

inline const Expo* leading_exponent(const MPoly& p) {
    const Expo* best = nullptr;
    for (auto& [e, c] : p.terms())
        if (!best || grevlex_greater(e, *best)) best = &e;
    return best;
}

inline bool divides(const Expo& a, const Expo& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline Expo expo_lcm(const Expo& a, const Expo& b) {
    Expo r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

inline MPoly monomial(const RingPtr& R, const Expo& e, const FElem& c) {
    MPoly m(R);
    m.set_coeff(e, c);
    return m;
}

namespace detail {

struct GrevlexFirst {
    bool operator()(const Expo& a, const Expo& b) const { return grevlex_greater(a, b); }
};

// Working representation during reduction: begin() is the leading term.
using OrdPoly = std::map<Expo, FElem, GrevlexFirst>;

inline OrdPoly to_ordered(const MPoly& p) {
    OrdPoly o;
    for (auto& [e, c] : p.terms()) o.emplace(e, c);
    return o;
}

/// Full normal form with precomputed leading exponents for G.
inline MPoly normal_form_cached(OrdPoly P, const std::vector<MPoly>& G,
                                const std::vector<Expo>& leads, const RingPtr& R) {
    MPoly r(R);
    while (!P.empty()) {
        auto it = P.begin();
        const Expo le = it->first;
        const FElem lc = it->second;
        bool reduced = false;
        for (std::size_t k = 0; k < G.size(); ++k) {
            if (!divides(leads[k], le)) continue;
            Expo q(le);
            for (std::size_t i = 0; i < q.size(); ++i) q[i] -= leads[k][i];
            FElem f = lc / G[k].terms().at(leads[k]);
            for (auto& [e2, c2] : G[k].terms()) {
                Expo t(q);
                for (std::size_t i = 0; i < t.size(); ++i) t[i] += e2[i];
                auto [pos, fresh] = P.emplace(t, FElem(0));
                pos->second = pos->second - f * c2;
                if (pos->second.is_zero()) P.erase(pos);
            }
            reduced = true;
            break;
        }
        if (!reduced) {
            r.set_coeff(le, lc);
            P.erase(P.begin());
        }
    }
    return r;
}

} // namespace detail

/// Full normal form of p modulo the (not necessarily Groebner) basis G.
inline MPoly normal_form(const MPoly& p, const std::vector<MPoly>& G) {
    std::vector<MPoly> nz;
    for (const MPoly& g : G)
        if (!g.is_zero()) nz.push_back(g);
    std::vector<Expo> leads;
    for (const MPoly& g : nz) leads.push_back(*leading_exponent(g));
    return detail::normal_form_cached(detail::to_ordered(p), nz, leads, p.ring());
}

/// Buchberger with grevlex order and deterministic normal pair selection
/// (smallest lcm first). Returns the reduced Groebner basis, normalized.
inline std::vector<MPoly> buchberger(std::vector<MPoly> gens) {
    std::vector<MPoly> G;
    for (auto& g : gens)
        if (!g.is_zero()) G.push_back(g.normalized_content());
    if (G.empty()) return G;
    RingPtr R = G.front().ring();
    std::vector<Expo> leads;
    for (const MPoly& g : G) leads.push_back(*leading_exponent(g));

    struct Pair {
        std::size_t i, j;
        Expo l;
    };
    std::vector<Pair> pairs;
    auto add_pairs = [&](std::size_t k) {
        for (std::size_t i = 0; i < k; ++i)
            pairs.push_back({i, k, expo_lcm(leads[i], leads[k])});
    };
    for (std::size_t k = 0; k < G.size(); ++k) add_pairs(k);

    auto coprime = [](const Expo& a, const Expo& b) {
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] > 0 && b[i] > 0) return false;
        return true;
    };

    while (!pairs.empty()) {
        // normal strategy: minimal lcm under grevlex
        std::size_t best = 0;
        for (std::size_t i = 1; i < pairs.size(); ++i)
            if (grevlex_greater(pairs[best].l, pairs[i].l)) best = i;
        Pair pr = pairs[best];
        pairs.erase(pairs.begin() + long(best));

        const Expo* li = &leads[pr.i];
        const Expo* lj = &leads[pr.j];
        if (coprime(*li, *lj)) continue; // Buchberger's first criterion
        // chain criterion
        bool chained = false;
        for (std::size_t k = 0; k < G.size() && !chained; ++k) {
            if (k == pr.i || k == pr.j) continue;
            const Expo* lk = &leads[k];
            if (!divides(*lk, pr.l)) continue;
            bool pik = false, pjk = false;
            for (auto& q : pairs) {
                if ((q.i == pr.i && q.j == k) || (q.i == k && q.j == pr.i)) pik = true;
                if ((q.i == pr.j && q.j == k) || (q.i == k && q.j == pr.j)) pjk = true;
            }
            if (!pik && !pjk) chained = true;
        }
        if (chained) continue;

        Expo qi(pr.l), qj(pr.l);
        for (std::size_t t = 0; t < qi.size(); ++t) {
            qi[t] -= (*li)[t];
            qj[t] -= (*lj)[t];
        }
        MPoly s = monomial(R, qi, G[pr.j].coeff(*lj)) * G[pr.i] -
                  monomial(R, qj, G[pr.i].coeff(*li)) * G[pr.j];
        MPoly r = detail::normal_form_cached(detail::to_ordered(s), G, leads, R);
        if (!r.is_zero()) {
            G.push_back(r.normalized_content());
            leads.push_back(*leading_exponent(G.back()));
            add_pairs(G.size() - 1);
        }
    }

    // inter-reduce
    std::vector<MPoly> red;
    for (std::size_t i = 0; i < G.size(); ++i) {
        const Expo* li = leading_exponent(G[i]);
        bool redundant = false;
        for (std::size_t j = 0; j < G.size(); ++j) {
            if (i == j) continue;
            const Expo* lj = leading_exponent(G[j]);
            if (divides(*lj, *li) && (j < i || *lj != *li)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) red.push_back(G[i]);
    }
    for (std::size_t i = 0; i < red.size(); ++i) {
        std::vector<MPoly> others;
        for (std::size_t j = 0; j < red.size(); ++j)
            if (i != j) others.push_back(red[j]);
        red[i] = normal_form(red[i], others).normalized_content();
    }
    std::sort(red.begin(), red.end(), [](const MPoly& a, const MPoly& b) {
        return grevlex_greater(*leading_exponent(b), *leading_exponent(a));
    });
    return red;
}

inline bool is_unit_ideal(const std::vector<MPoly>& GB) {
    for (const MPoly& g : GB) {
        const Expo* l = leading_exponent(g);
        if (l && MPoly::total_degree(*l) == 0) return true;
    }
    return false;
}

/// Zero-dimensionality: each variable carries a pure-power leading term.
inline bool is_zero_dimensional(const std::vector<MPoly>& GB, std::string* missing_var = nullptr) {
    if (GB.empty()) return false;
    RingPtr R = GB.front().ring();
    for (std::size_t v = 0; v < R->nvars(); ++v) {
        bool found = false;
        for (const MPoly& g : GB) {
            const Expo* l = leading_exponent(g);
            bool pure = (*l)[v] > 0;
            for (std::size_t w = 0; w < l->size() && pure; ++w)
                if (w != v && (*l)[w] != 0) pure = false;
            if (pure) {
                found = true;
                break;
            }
        }
        if (!found) {
            if (missing_var) *missing_var = R->vars[v];
            return false;
        }
    }
    return true;
}

/// Monomials below the staircase of a zero-dimensional Groebner basis.
inline std::vector<Expo> quotient_basis(const std::vector<MPoly>& GB) {
    RingPtr R = GB.front().ring();
    std::size_t n = R->nvars();
    std::vector<int> cap(n, 0);
    for (std::size_t v = 0; v < n; ++v)
        for (const MPoly& g : GB) {
            const Expo* l = leading_exponent(g);
            bool pure = (*l)[v] > 0;
            for (std::size_t w = 0; w < l->size() && pure; ++w)
                if (w != v && (*l)[w] != 0) pure = false;
            if (pure && (cap[v] == 0 || (*l)[v] < cap[v])) cap[v] = (*l)[v];
        }
    std::vector<const Expo*> leads;
    for (const MPoly& g : GB) leads.push_back(leading_exponent(g));
    std::vector<Expo> basis;
    Expo e(n, 0);
    while (true) {
        bool under = true;
        for (auto* l : leads)
            if (divides(*l, e)) {
                under = false;
                break;
            }
        if (under) basis.push_back(e);
        // odometer
        std::size_t i = 0;
        while (i < n) {
            if (++e[i] < cap[i]) break;
            e[i] = 0;
            ++i;
        }
        if (i == n) break;
    }
    std::sort(basis.begin(), basis.end(),
              [](const Expo& a, const Expo& b) { return grevlex_greater(b, a); });
    return basis;
}

inline std::size_t quotient_dimension(const std::vector<MPoly>& GB) {
    if (is_unit_ideal(GB)) return 0;
    return quotient_basis(GB).size();
}

} // namespace sextic
