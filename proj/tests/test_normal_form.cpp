#include <catch2/catch_amalgamated.hpp>

#include <sextic/normal_form.hpp>
#include <sextic/parse.hpp>

#include "generators.hpp"

using namespace sextic;

TEST_CASE("square completion") {
    auto sq = [](const char* s) {
        auto [X, sub] = complete_square(validate(parse_polynomial(s)));
        return X.F;
    };
    CHECK(sq("x3^2 + 2*x1^3*x3 + x2^3") == parse_polynomial("x3^2 + x2^3 - x1^6"));
    CHECK(sq("x3^2 + x2^3") == parse_polynomial("x3^2 + x2^3"));
    CHECK(sq("2*x3^2 + x2^3") == parse_polynomial("x3^2 + 1/2*x2^3"));
    CHECK_THROWS_AS(complete_square(validate(parse_polynomial("x2^3 + y2^3 + x1^6"))),
                    AnalyzerError); // no x3^2 term
}

TEST_CASE("case classification by root pattern of the restricted cubic") {
    auto cls = [](const char* s) {
        return classify_case(validate(parse_polynomial(s)));
    };
    CHECK(cls("x3^2 + x2*y2*(x2+y2) + x1^6") == CaseTag::Eq3);
    CHECK(cls("x3^2 + x2^2*y2 + x1^6") == CaseTag::Eq2);
    CHECK(cls("x3^2 + x2^3 + y2^3 + x1^6") == CaseTag::Eq3); // squarefree, not split
    CHECK(cls("x3^2 + x2^3 + x1^6") == CaseTag::Eq1);
    CHECK_THROWS_AS(cls("x3^2 + x2^2*x1^2 + y2^2*y1^2 + x1^6 + y1^6"), AnalyzerError);
}

TEST_CASE("normalize: already-templated Eq2 member") {
    NormalForm nf = normalize(validate(parse_polynomial("x3^2 + x2^2*y2 + y2^2*x1*y1 + x1^6")));
    CHECK(nf.tag == CaseTag::Eq2);
    REQUIRE(nf.forms_available);
    CHECK(nf.phi2pp == parse_polynomial("x1*y1"));
    CHECK(nf.phi4.is_zero());
    CHECK(nf.phi4p.is_zero());
    CHECK(nf.phi6 == parse_polynomial("x1^6"));
}

TEST_CASE("normalize: already-templated Eq1 member") {
    NormalForm nf = normalize(validate(parse_polynomial("x3^2 + x2^3 + y2^2*x1^2 + y1^6")));
    CHECK(nf.tag == CaseTag::Eq1);
    REQUIRE(nf.forms_available);
    CHECK(nf.phi2pp == parse_polynomial("x1^2"));
    CHECK(nf.phi2p.is_zero());
    CHECK(nf.phi6 == parse_polynomial("y1^6"));
}

TEST_CASE("normalize: Eq3 with shifted rational roots") {
    Sextic X = validate(parse_polynomial("x3^2 + (x2-y2)*(x2-2*y2)*(x2-3*y2) + x1^6"));
    NormalForm nf = normalize(X);
    CHECK(nf.tag == CaseTag::Eq3);
    REQUIRE(nf.forms_available);
    // after the change the cubic slot is exactly x2*y2*(x2+y2)
    CHECK(nf.normalized == template_poly(nf));
}

TEST_CASE("normalize round trip reproduces the input up to one scalar") {
    gen::Rng rng(77);
    for (int i = 0; i < 6; ++i) {
        gen::RowMember m = gen::member_for_row(
            i % 2 ? gen::Row::Eq2Rk12 : gen::Row::Eq3, rng);
        Substitution aut = gen::rand_automorphism(wps_ring(), rng);
        Sextic X = validate(m.F.substitute(aut.fwd));
        auto [Xsq, sub] = complete_square(X);
        NormalForm nf = normalize(Xsq);
        if (!nf.forms_available) continue; // non-split Eq3 cubic: no template
        CHECK(nf.normalized == template_poly(nf));
        // undo the recorded change: must land back on the square-completed input
        MPoly back = nf.change.unapply(nf.normalized);
        CHECK(back == Xsq.F);
    }
}

TEST_CASE("normalize over a quadratic extension") {
    // restricted cubic x2^3 + y2^3: one rational root, one conjugate pair
    NormalForm nf = normalize(validate(parse_polynomial("x3^2 + x2^3 + y2^3 + x1^6 + y1^6")));
    CHECK(nf.tag == CaseTag::Eq3);
    REQUIRE(nf.forms_available);
    REQUIRE(nf.field);
    CHECK(nf.field->degree() == 2);
    CHECK(nf.normalized == template_poly(nf));
}

TEST_CASE("normalize degrades gracefully on a non-split cubic") {
    // x2^3 + x2*y2^2 + y2^3 is irreducible with Galois group S3: a single
    // root field of degree 3 cannot host the full linear change.
    NormalForm nf =
        normalize(validate(parse_polynomial("x3^2 + x2^3 + x2*y2^2 + y2^3 + x1^6 + y1^6")));
    CHECK(nf.tag == CaseTag::Eq3);
    CHECK_FALSE(nf.forms_available);
    CHECK_FALSE(nf.forms_note.empty());
}

TEST_CASE("normalize is idempotent on normalized inputs") {
    gen::Rng rng(31);
    gen::RowMember m = gen::member_for_row(gen::Row::Eq1Rk12, rng);
    NormalForm nf1 = normalize(validate(m.F));
    REQUIRE(nf1.forms_available);
    NormalForm nf2 = normalize(Sextic{nf1.normalized});
    CHECK(nf1.tag == nf2.tag);
    CHECK(nf1.phi2pp == nf2.phi2pp);
    CHECK(nf1.normalized == nf2.normalized);
}

TEST_CASE("case tag is automorphism-invariant") {
    gen::Rng rng(411);
    for (gen::Row row : {gen::Row::Eq3, gen::Row::Eq2Rk0, gen::Row::Eq1CD}) {
        gen::RowMember m = gen::member_for_row(row, rng);
        CaseTag base = classify_case(validate(m.F));
        for (int i = 0; i < 3; ++i) {
            Substitution aut = gen::rand_automorphism(wps_ring(), rng);
            auto [Xsq, sub] = complete_square(validate(m.F.substitute(aut.fwd)));
            CHECK(classify_case(Xsq) == base);
        }
    }
}
