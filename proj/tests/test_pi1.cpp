#include <doctest.h>

#include "support.hpp"

using namespace dt;
using dt::test::W;

TEST_SUITE("pi1") {

TEST_CASE("free words") {
    CHECK(free_reduce({1, 2, -2, -1, 3}) == FreeWord{3});
    CHECK(free_invert({1, -2, 3}) == FreeWord{-3, 2, -1});
}

TEST_CASE("composition order") {
    // f: x1 -> x1 x2, g: x2 -> x2 x1 ; (f g)(x2) = f(x2 x1) = x2 x1 x2
    Automorphism f = Automorphism::identity(2), g = Automorphism::identity(2);
    f.images[0] = {1, 2};
    f.inverse_images[0] = {1, -2};
    g.images[1] = {2, 1};
    g.inverse_images[1] = {2, -1};
    auto h = compose(f, g);
    CHECK(h.apply({2}) == FreeWord{2, 1, 2});
    CHECK(equal_automorphisms(compose(h, h.inverse()), Automorphism::identity(2)));
}

TEST_CASE("shipped tables verify") {
    const auto &a = test::shipped_atlas();
    for (const auto &id : twist_table_ids(a)) {
        auto chk = verify_twist_table(load_twist_table(a, id), a);
        for (const auto &v : chk.violations) INFO(v);
        CHECK(chk.ok());
    }
}

TEST_CASE("identity and single twists") {
    const auto &a = test::shipped_atlas();
    auto t = load_twist_table(a, "S2_1");
    CHECK(equal_automorphisms(apply_word_pi1({}, t), Automorphism::identity(4)));
    CHECK(equal_automorphisms(apply_word_pi1(W("a1 a1'"), t), Automorphism::identity(4)));
    CHECK_FALSE(equal_automorphisms(apply_word_pi1(W("a1"), t), Automorphism::identity(4)));
}

TEST_CASE("chain relation on the free group") {
    const auto &a = test::shipped_atlas();
    auto t = load_twist_table(a, "S2_1");
    auto chain = apply_word_pi1(W("(a1 b1 a2 b2)^10"), t);
    CHECK(equal_automorphisms(chain, apply_word_pi1(W("d1"), t)));
    CHECK(abelianize(chain, t) == IMatrix::Identity(4, 4));
    CHECK(t.abelianization * abelianize(chain, t) == evaluate_word(W("(a1 b1 a2 b2)^10"), a, "S2_1") * t.abelianization);
}

TEST_CASE("one-holed section relation") {
    const auto &a = test::shipped_atlas();
    auto t = load_twist_table(a, "S2_1");
    Word fin = W("((a1 b1 a2)^4 b2 a2 b1 a1 a1 b1 a2 b2)^2");
    CHECK(verify_section_relation_pi1(W("d1"), fin, t));
    CHECK(verify_section_relation_pi1(W("d1"), test::script("s4_1").final_word, t));
    CHECK(verify_section_relation_pi1(W("d1"), W("d1"), t));
    // b1 a1 -> a1 b1 is not a licensed move and changes the class
    Word bad = W("((a1 b1 a2)^4 b2 a2 a1 b1 a1 b1 a2 b2)^2");
    CHECK_FALSE(verify_section_relation_pi1(W("d1"), bad, t));
}

TEST_CASE("two-holed chain relation with an arc") {
    const auto &a = test::shipped_atlas();
    auto t = load_twist_table(a, "S2_2_chain");
    CHECK(t.loops == 5);
    CHECK(t.generators.size() == 6);
    CHECK(verify_section_relation_pi1(W("d1 d2"), W("(c1 c2 c3 c4 c5)^6"), t));
    CHECK_FALSE(verify_section_relation_pi1(W("d1"), W("(c1 c2 c3 c4 c5)^6"), t));
}

TEST_CASE("missing entries") {
    const auto &a = test::shipped_atlas();
    try {
        load_twist_table(a, "S2_5");
        FAIL("expected MissingTableEntry");
    } catch (const Error &e) {
        CHECK(e.kind() == ErrorKind::MissingTableEntry);
    }
    auto t = load_twist_table(a, "S2_1");
    try {
        apply_word_pi1(W("a3"), t);
        FAIL("expected MissingTableEntry");
    } catch (const Error &e) {
        CHECK(e.kind() == ErrorKind::MissingTableEntry);
    }
}

} // TEST_SUITE
