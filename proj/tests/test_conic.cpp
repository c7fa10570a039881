#include <catch2/catch_amalgamated.hpp>

#include <sextic/conic.hpp>
#include <sextic/parse.hpp>

#include "generators.hpp"

using namespace sextic;

TEST_CASE("discriminant of the reference Eq2 member") {
    NormalForm nf;
    RingPtr R = wps_ring();
    nf.tag = CaseTag::Eq2;
    nf.phi2 = nf.phi2p = nf.phi4 = nf.phi4p = MPoly(R);
    nf.phi2pp = parse_polynomial("x1*y1");
    nf.phi6 = parse_polynomial("x1^6 + y1^6");
    nf.forms_available = true;
    DiscriminantCurve c = discriminant(nf);
    RingPtr P = p112_ring();
    CHECK(c.D == parse_polynomial("x1*y1*(x1^6 + y1^6) - 4*x2^4", P));
}

TEST_CASE("discriminant of the fully degenerate Eq3 template") {
    NormalForm nf;
    RingPtr R = wps_ring();
    nf.tag = CaseTag::Eq3;
    nf.phi2 = nf.phi2p = nf.phi2pp = nf.phi4 = nf.phi4p = nf.phi6 = MPoly(R);
    nf.forms_available = true;
    DiscriminantCurve c = discriminant(nf);
    // (x2 + 0)(x2^2*0 + 0) - 4(x2^2 + 0)^2 = -4 x2^4
    CHECK(c.D == parse_polynomial("-4*x2^4", p112_ring()));
}

TEST_CASE("discriminant degree is always 8") {
    gen::Rng rng(606);
    for (gen::Row row : {gen::Row::Eq3, gen::Row::Eq2Rk12, gen::Row::Eq1Rk12}) {
        for (int i = 0; i < 3; ++i) {
            gen::RowMember m = gen::member_for_row(row, rng);
            NormalForm nf = normalize(validate(m.F));
            REQUIRE(nf.forms_available);
            DiscriminantCurve c = discriminant(nf);
            for (auto& [e, coef] : c.D.terms())
                CHECK(e[0] * 1 + e[1] * 1 + e[2] * 2 == 8);
        }
    }
}

TEST_CASE("genus by adjunction on P(1,1,2)") {
    CHECK(curve_genus_adjunction(8, Rational(1, 2), Rational(-4)) == Rational(9));
    CHECK(curve_genus_adjunction(4, Rational(1, 2), Rational(-4)) == Rational(1));
    CHECK(curve_genus_adjunction(6, Rational(1, 2), Rational(-4)) == Rational(4));
}

TEST_CASE("Prym dimension and cover genus") {
    PrymData p = prym_dimension(9);
    CHECK(p.dimension == 8);
    CHECK(p.cover_genus == 17);
    CHECK(prym_dimension(2).dimension == 1);
    CHECK(prym_dimension(5).dimension == 4);
}

TEST_CASE("intersection ledger identities") {
    IntersectionLedger L;
    RingPtr R = ledger_ring();
    MPoly A = MPoly::variable(R, "A"), E = MPoly::variable(R, "E");
    MPoly m = A - E * FElem(Rational(1, 2));
    MPoly t = A * FElem(3) - E * FElem(Rational(1, 2));
    CHECK(ledger_eval(L, m * m * m) == Rational(0));
    CHECK(ledger_eval(L, m * m * t) == Rational(1));
    CHECK(ledger_eval(L, t * t * m) == Rational(4));
    CHECK_THROWS(ledger_eval(L, A * A)); // not a cubic
}

TEST_CASE("ledger evaluation is trilinear") {
    IntersectionLedger L;
    RingPtr R = ledger_ring();
    MPoly A = MPoly::variable(R, "A"), E = MPoly::variable(R, "E");
    gen::Rng rng(13);
    for (int i = 0; i < 5; ++i) {
        Rational a = gen::rand_rational(rng), b = gen::rand_rational(rng);
        MPoly x = A * FElem(a) + E * FElem(b);
        Rational direct = a * a * a * L.A3 + 3 * a * a * b * L.A2E + 3 * a * b * b * L.AE2 +
                          b * b * b * L.E3;
        CHECK(ledger_eval(L, x * x * x) == direct);
    }
}

TEST_CASE("conic-bundle invariants") {
    CHECK(cb_invariants(Rational(1, 2), Rational(-2), Rational(4)) ==
          std::make_pair(Rational(-1), Rational(4)));
    CHECK(cb_invariants(Rational(1), Rational(-3), Rational(0)) ==
          std::make_pair(Rational(-2), Rational(12)));
    CHECK(cb_invariants(Rational(1, 2), Rational(-2), Rational(0)) ==
          std::make_pair(Rational(-1), Rational(8)));
}

TEST_CASE("base-surface catalog") {
    auto cat = surface_catalog();
    REQUIRE(cat.size() == 4);
    CHECK(cat[0].h2 == Rational(1));
    CHECK(cat[1].h2 == Rational(1, 2));
    CHECK(cat[2].h2 == Rational(1, 6));
    CHECK(cat[3].h2 == Rational(1, 5));
}

TEST_CASE("blowup lattice: K^2 = 8 - l") {
    for (int l = 0; l <= 4; ++l) {
        LatticeClass K = canonical_class(l);
        CHECK(K.dot(K) == 8 - l);
    }
}

TEST_CASE("lattice search finds no violations at small bound") {
    for (int l : {0, 2}) {
        LatticeCheckResult r = lattice_check_surf(l, 4);
        CHECK(r.violations.empty());
        CHECK(r.parity_violations.empty());
        CHECK(r.candidates > 0);
    }
}

TEST_CASE("eckardt homogenization round trip") {
    RingPtr C = eckardt_ring();
    MPoly phi = parse_polynomial("x3^2 + x2^3 + x1^3 + 1", C);
    Sextic X = eckardt_homogenize(phi);
    CHECK(X.F == parse_polynomial("x3^2 + x2^3 + x1^3*y1^3 + y1^6"));
    CHECK(eckardt_chart(X) == phi);

    MPoly bare = parse_polynomial("x3^2 + x2^3", C);
    CHECK(eckardt_homogenize(bare).F == parse_polynomial("x3^2 + x2^3"));

    gen::Rng rng(4242);
    std::uniform_int_distribution<int> d(-4, 4);
    for (int trial = 0; trial < 5; ++trial) {
        MPoly f = parse_polynomial("x3^2", C);
        for (const char* mono :
             {"1", "x1", "x1^2", "x1^3", "x2", "y2", "x1*x2", "x1*y2", "x2*y2"})
            f = f + parse_polynomial(mono, C) * FElem(Rational(d(rng)));
        Sextic X2 = eckardt_homogenize(f);
        CHECK(eckardt_chart(X2) == f);
    }
}

TEST_CASE("eckardt members carry the expected singularity profile") {
    RingPtr C = eckardt_ring();
    MPoly phi = parse_polynomial("x3^2 + x1^3 + x2^3 + y2^3 + x1*x2 + y2 + 1", C);
    SingularityProfile p = eckardt_profile(eckardt_homogenize(phi));
    int half = 0, worse = 0;
    for (const auto& r : p.nonGorenstein)
        if (r.cls == SingClass::HalfQuotient) ++half;
    for (const auto& r : p.gorenstein)
        if (r.cls == SingClass::WorseGorenstein) ++worse;
    CHECK(half == 3);
    CHECK(worse == 1);
}
