#include <doctest.h>

#include "support.hpp"

using namespace dt;
using dt::test::W;

TEST_SUITE("word") {

TEST_CASE("parse and format round trip") {
    CHECK(format_word(W("a4' b2 a4")) == "a4' b2 a4");
    CHECK(W("1").empty());
    CHECK(W("(a1 b1)^2 a2") == W("a1 b1 a1 b1 a2"));
    CHECK(W("a1^3") == W("a1 a1 a1"));
    CHECK(format_word({}) == "1");
}

TEST_CASE("parse errors") {
    auto kind = [](const char *t) {
        try {
            parse_word(t);
        } catch (const Error &e) {
            return e.kind();
        }
        return ErrorKind::Overflow;
    };
    CHECK(kind("(a1 b1") == ErrorKind::ParseError);
    CHECK(kind("a1 )") == ErrorKind::ParseError);
    CHECK(kind("a1 ^") == ErrorKind::ParseError);
}

TEST_CASE("reduce") {
    CHECK(reduce(W("a4 a4'")).empty());
    CHECK(reduce({}).empty());
    CHECK(reduce(W("a3 a4 a4' b2")) == W("a3 b2"));
    CHECK(reduce(W("a1 b1 b1' a1' a2")) == W("a2"));
}

TEST_CASE("invert") {
    CHECK(invert(W("a1 b1")) == W("b1' a1'"));
    CHECK(invert({}).empty());
    Word w = W("a1 b2' sigma a6");
    CHECK(invert(invert(w)) == w);
    CHECK(reduce(concat(w, invert(w))).empty());
}

TEST_CASE("splice and matching") {
    Word w = W("a1 b1 a2 b2");
    CHECK(matches_at(w, 1, W("b1 a2")));
    CHECK_FALSE(matches_at(w, 3, W("b2 a1")));
    CHECK(splice(w, 1, 2, W("c")) == W("a1 c b2"));
    CHECK(subword(w, 2, 2) == W("a2 b2"));
    CHECK(power(W("a1 b1"), -2) == W("b1' a1' b1' a1'"));
}

TEST_CASE("conjugate definitions") {
    auto beta = ConjugateDefinition::from_expansion("beta", W("a5' a4' b2 a4 a5"));
    CHECK(beta.core == Letter{"b2", 1});
    CHECK(beta.conjugator == W("a5' a4'"));
    DefinitionSet defs{{"beta", beta}};
    CHECK(expand_definitions(W("beta"), defs) == W("a5' a4' b2 a4 a5"));
    CHECK(expand_definitions(W("beta'"), defs) == invert(W("a5' a4' b2 a4 a5")));
    CHECK_THROWS_AS(ConjugateDefinition::from_expansion("x", W("a1 b1 a2")), Error);
}

TEST_CASE("definition errors") {
    DefinitionSet defs{{"p", ConjugateDefinition::from_expansion("p", W("a1 q a1'"))},
                       {"q", ConjugateDefinition::from_expansion("q", W("b1 p b1'"))}};
    try {
        expand_definitions(W("p"), defs);
        FAIL("expected recursion error");
    } catch (const Error &e) {
        CHECK(e.kind() == ErrorKind::RecursiveDefinition);
    }
    auto is_curve = [](const std::string &s) { return s == "a1" || s == "b1"; };
    try {
        expand_definitions(W("a1 zeta"), {}, is_curve);
        FAIL("expected unknown definition");
    } catch (const Error &e) {
        CHECK(e.kind() == ErrorKind::UnknownDefinition);
    }
}

TEST_CASE("beta3 expansion agrees with conjugated transvection") {
    const auto &a = test::shipped_atlas();
    const auto &defs = a.defs("S2_5");
    REQUIRE(defs.count("beta3"));
    CHECK(expand_definitions(W("beta3"), defs).size() == 3);
    IMatrix Ta = transvection(a, "S2_5", "a4", 1);
    IMatrix Tb = transvection(a, "S2_5", "b2", 1);
    IMatrix Tai = transvection(a, "S2_5", "a4", -1);
    CHECK(evaluate_word(W("beta3"), a, "S2_5") == IMatrix(Tai * Tb * Ta));
}

} // TEST_SUITE
