#pragma once

// Seeded random members for the six table rows, random weight-preserving
// automorphisms, and random unimodular changes for the local-model oracle.

#include <random>
#include <string>
#include <vector>

#include <sextic/normal_form.hpp>
#include <sextic/wps.hpp>

namespace gen {

using namespace sextic;
using Rng = std::mt19937_64;

inline Rational rand_rational(Rng& rng, int lo = -5, int hi = 5) {
    std::uniform_int_distribution<int> d(lo, hi);
    return Rational(d(rng));
}

inline Rational rand_nonzero(Rng& rng, int lo = -5, int hi = 5) {
    Rational r;
    do
        r = rand_rational(rng, lo, hi);
    while (r == 0);
    return r;
}

/// Random form of the given degree in (x1, y1).
inline MPoly rand_binary(const RingPtr& R, int deg, Rng& rng, bool nonzero = false) {
    MPoly x = MPoly::variable(R, "x1"), y = MPoly::variable(R, "y1");
    MPoly out(R);
    for (int i = 0; i <= deg; ++i)
        out = out + x.pow(i) * y.pow(deg - i) * FElem(rand_rational(rng));
    if (nonzero && out.is_zero()) {
        out = out + x.pow(deg) * FElem(rand_nonzero(rng));
    }
    return out;
}

/// Quadratic form in (x1, y1) of prescribed rank 0, 1, or 2.
inline MPoly rand_quadratic_of_rank(const RingPtr& R, int rank, Rng& rng) {
    MPoly x = MPoly::variable(R, "x1"), y = MPoly::variable(R, "y1");
    if (rank == 0) return MPoly(R);
    if (rank == 1) {
        MPoly l = x * FElem(rand_rational(rng)) + y * FElem(rand_rational(rng));
        while (l.is_zero())
            l = x * FElem(rand_nonzero(rng)) + y * FElem(rand_rational(rng));
        return l * l * FElem(rand_nonzero(rng));
    }
    for (;;) {
        Rational a = rand_rational(rng), b = rand_rational(rng), c = rand_rational(rng);
        if (b * b - 4 * a * c != 0) // rank 2 iff the discriminant is nonzero
            return x * x * FElem(a) + x * y * FElem(b) + y * y * FElem(c);
    }
}

enum class Row { Eq3, Eq2Rk12, Eq2Rk0, Eq1Rk12, Eq1CD, Eq1CE };

struct RowMember {
    MPoly F;
    NormalForm nf;       // the forms the member was assembled from
    int phi2pp_rank = 0; // for the two cA/2 rows, the rank actually drawn
};

/// Build a member in normal-form position for one table row.
inline RowMember member_for_row(Row row, Rng& rng) {
    RingPtr R = wps_ring();
    NormalForm nf;
    nf.phi2 = rand_binary(R, 2, rng);
    nf.phi2p = rand_binary(R, 2, rng);
    nf.phi4 = rand_binary(R, 4, rng);
    nf.phi4p = rand_binary(R, 4, rng);
    nf.phi6 = rand_binary(R, 6, rng);
    nf.forms_available = true;
    std::uniform_int_distribution<int> coin(1, 2);
    RowMember m;
    switch (row) {
    case Row::Eq3:
        nf.tag = CaseTag::Eq3;
        nf.phi2pp = rand_binary(R, 2, rng);
        break;
    case Row::Eq2Rk12:
        nf.tag = CaseTag::Eq2;
        m.phi2pp_rank = coin(rng);
        nf.phi2pp = rand_quadratic_of_rank(R, m.phi2pp_rank, rng);
        break;
    case Row::Eq2Rk0:
        nf.tag = CaseTag::Eq2;
        nf.phi2pp = MPoly(R);
        break;
    case Row::Eq1Rk12:
        nf.tag = CaseTag::Eq1;
        m.phi2pp_rank = coin(rng);
        nf.phi2pp = rand_quadratic_of_rank(R, m.phi2pp_rank, rng);
        break;
    case Row::Eq1CD:
        nf.tag = CaseTag::Eq1;
        nf.phi2pp = MPoly(R);
        nf.phi2p = rand_binary(R, 2, rng, true);
        break;
    case Row::Eq1CE:
        nf.tag = CaseTag::Eq1;
        nf.phi2pp = MPoly(R);
        nf.phi2p = MPoly(R);
        nf.phi4p = rand_binary(R, 4, rng, true);
        break;
    }
    m.F = template_poly(nf);
    m.nf = nf;
    return m;
}

/// Random weight-preserving automorphism of P(1,1,2,2,3) as a Substitution.
/// Weight 1 mixes (x1,y1) by an invertible 2x2 matrix; weight 2 mixes (x2,y2)
/// and absorbs quadratics in (x1,y1); x3 rescales and absorbs weight-3 terms.
inline Substitution rand_automorphism(const RingPtr& R, Rng& rng) {
    MPoly X1 = MPoly::variable(R, "x1"), Y1 = MPoly::variable(R, "y1");
    MPoly X2 = MPoly::variable(R, "x2"), Y2 = MPoly::variable(R, "y2");
    MPoly X3 = MPoly::variable(R, "x3");

    // Shears with unit coefficients and a single translation monomial per
    // variable: the Groebner cost on transformed members grows sharply with
    // coefficient size and term count, and invariance is exercised just as
    // well by the sparse maps.
    std::uniform_int_distribution<int> sign(0, 1), pm1(-1, 1), coin(0, 1);
    auto sgn = [&](int v) { return FElem(v ? 1 : -1); };
    Rational a = sign(rng) ? 1 : -1;

    Substitution sub = Substitution::identity(R);
    sub.fwd["x1"] = X1 * FElem(a) + Y1 * FElem(pm1(rng));
    sub.fwd["y1"] = Y1 * sgn(sign(rng));
    sub.fwd["x2"] = X2 * sgn(sign(rng)) + Y2 * FElem(pm1(rng)) +
                    X1 * Y1 * FElem(pm1(rng));
    sub.fwd["y2"] = Y2 * sgn(sign(rng)) + X1 * X1 * FElem(pm1(rng));
    sub.fwd["x3"] = X3 * sgn(sign(rng)) + Y1 * Y1 * Y1 * FElem(pm1(rng)) +
                    (coin(rng) ? X2 : Y2) * (coin(rng) ? X1 : Y1) * FElem(pm1(rng));
    // The inverse is never applied in the tests; leave it as the identity.
    return sub;
}

/// Random 4x4 unimodular integer matrix as a substitution on (u, v, w, s),
/// built from a few elementary row operations.
inline std::map<std::string, MPoly> rand_unimodular4(const RingPtr& L, Rng& rng) {
    std::vector<std::string> vars = {"u", "v", "w", "s"};
    std::vector<MPoly> img;
    for (auto& v : vars) img.push_back(MPoly::variable(L, v));
    std::uniform_int_distribution<int> pick(0, 3), small(-2, 2);
    for (int step = 0; step < 6; ++step) {
        int i = pick(rng), j = pick(rng);
        if (i == j) continue;
        int k = small(rng);
        img[std::size_t(i)] = img[std::size_t(i)] + img[std::size_t(j)] * FElem(k);
    }
    std::map<std::string, MPoly> out;
    for (std::size_t i = 0; i < vars.size(); ++i) out[vars[i]] = img[i];
    return out;
}

} // namespace gen
