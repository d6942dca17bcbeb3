#include <doctest.h>

#include "support.hpp"

using namespace dt;
using dt::test::W;

namespace {

DerivationStep step(Rule r, std::size_t pos) {
    DerivationStep s;
    s.rule = r;
    s.position = pos;
    return s;
}

ErrorKind rule_error(const Word &w, const DerivationStep &s, const StepContext &ctx) {
    try {
        apply_rule(w, s, ctx);
    } catch (const Error &e) {
        return e.kind();
    }
    return ErrorKind::Overflow;
}

} // namespace

TEST_SUITE("relation") {

TEST_CASE("commute licenses") {
    const auto &a = test::shipped_atlas();
    StepContext c1(a, "S2_1");
    CHECK(apply_rule(W("a1 a2"), step(Rule::Commute, 0), c1) == W("a2 a1"));
    CHECK(apply_rule(W("a1 d1"), step(Rule::Commute, 0), c1) == W("d1 a1"));
    CHECK(rule_error(W("a1 b1"), step(Rule::Commute, 0), c1) == ErrorKind::IllegalLicense);
    StepContext c7(a, "S2_7");
    CHECK(rule_error(W("sigma5 a10"), step(Rule::Commute, 0), c7) == ErrorKind::IllegalLicense);
    // missing pair fails closed
    CHECK(rule_error(W("a3 a4"), step(Rule::Commute, 0), c1) == ErrorKind::IllegalLicense);
}

TEST_CASE("defined letters commute through their support") {
    const auto &a = test::shipped_atlas();
    StepContext c(a, "S2_7");
    CHECK(apply_rule(W("tbeta a10"), step(Rule::Commute, 0), c) == W("a10 tbeta"));
    CHECK(rule_error(W("tbeta a1"), step(Rule::Commute, 0), c) == ErrorKind::IllegalLicense);
}

TEST_CASE("braid forms") {
    const auto &a = test::shipped_atlas();
    StepContext c(a, "S2_1");
    CHECK(apply_rule(W("a1 b1 a1"), step(Rule::Braid, 0), c) == W("b1 a1 b1"));
    CHECK(apply_rule(W("a1' b1' a1'"), step(Rule::Braid, 0), c) == W("b1' a1' b1'"));
    CHECK(apply_rule(W("a1 b1 a1'"), step(Rule::Braid, 0), c) == W("b1' a1 b1"));
    CHECK(apply_rule(W("b1' a1 b1"), step(Rule::Braid, 0), c) == W("a1 b1 a1'"));
    CHECK(rule_error(W("a1 a2 a1"), step(Rule::Braid, 0), c) == ErrorKind::IllegalLicense);
    CHECK(rule_error(W("a1 b1 b1"), step(Rule::Braid, 0), c) == ErrorKind::IllegalLicense);
    auto s = step(Rule::Braid, 0);
    s.form = BraidForm::Conj;
    CHECK(rule_error(W("a1 b1 a1"), s, c) == ErrorKind::IllegalLicense);
}

TEST_CASE("cancel, insert, positions") {
    const auto &a = test::shipped_atlas();
    StepContext c(a, "S2_1");
    CHECK(apply_rule(W("a1 a1' b1"), step(Rule::Cancel, 0), c) == W("b1"));
    CHECK(rule_error(W("a1 a1 b1"), step(Rule::Cancel, 0), c) == ErrorKind::IllegalLicense);
    auto ins = step(Rule::InsertPair, 1);
    ins.letter = {"a3", -1};
    CHECK(apply_rule(W("a1 b1"), ins, c) == W("a1 a3' a3 b1"));
    ins.letter = {"nope", 1};
    CHECK(rule_error(W("a1"), ins, c) == ErrorKind::UnknownCurve);
    CHECK(rule_error(W("a1 b1"), step(Rule::Commute, 1), c) == ErrorKind::PositionOutOfRange);
}

TEST_CASE("substitution in all four directions") {
    const auto &a = test::shipped_atlas();
    StepContext c(a, "S2_1");
    auto s = step(Rule::SubstituteRelation, 1);
    s.relation = "torus2";
    s.direction = Direction::Backward;
    CHECK(apply_rule(W("b2 a3 a4 b2"), s, c) == W("b2 (a1 b1 a2)^4 b2"));
    s.direction = Direction::Forward;
    CHECK(apply_rule(W("b2 (a1 b1 a2)^4"), s, c) == W("b2 a3 a4"));
    s.direction = Direction::BackwardInverse;
    s.position = 0;
    CHECK(apply_rule(W("a4' a3'"), s, c) == invert(W("(a1 b1 a2)^4")));
    s.direction = Direction::ForwardInverse;
    CHECK(apply_rule(invert(W("(a1 b1 a2)^4")), s, c) == W("a4' a3'"));
    CHECK(rule_error(W("(a1 b1 a2)^4"), s, c) == ErrorKind::IllegalLicense);
    CHECK(rule_error(W("a3 a3"), s, c) == ErrorKind::PositionOutOfRange);
}

TEST_CASE("expand, fold and rotation") {
    const auto &a = test::shipped_atlas();
    StepContext c(a, "S2_3");
    auto e = step(Rule::ExpandDef, 1);
    e.name = "beta";
    CHECK(apply_rule(W("a3 beta a3"), e, c) == W("a3 a5' a4' b2 a4 a5 a3"));
    auto f = step(Rule::FoldDef, 1);
    f.name = "beta";
    CHECK(apply_rule(W("a3 a5' a4' b2 a4 a5 a3"), f, c) == W("a3 beta a3"));
    auto r = step(Rule::CentralRotate, 0);
    r.shift = 2;
    CHECK(apply_rule(W("a1 a2 a3 b1"), r, c) == W("a3 b1 a1 a2"));
    StepContext nc(a, "S2_3", {}, false);
    CHECK(rule_error(W("a1 a2"), r, nc) == ErrorKind::IllegalLicense);
}

TEST_CASE("shipped scripts") {
    const auto &a = test::shipped_atlas();
    REQUIRE(test::shipped_scripts().size() == 8);
    for (const auto &s : test::shipped_scripts()) {
        auto rep = check_script(s, a);
        INFO(s.id << ": " << rep.reason);
        CHECK(rep.accepted);
        CHECK(rep.final_length == 20);
        CHECK(rep.all_positive);
        CHECK(rep.no_boundary_parallel);
    }
    CHECK(test::script("s4_1").final_word == W("(a3 a4 b2 a2 b1 a1 a1 b1 a2 b2)^2"));
    CHECK(test::script("s4_2").final_word ==
          W("b2 a2 b1 a1 a1 b1 a2 b2 a3 a4 (b2 a2 b1 a1 a1 b1 a2 b2) sigma a5"));
    const auto &s3 = test::script("s4_3");
    CHECK(expand_definitions(s3.final_word, a.defs("S2_3")) ==
          expand_definitions(W("a3 b1 (a1 a2 a3 b1)^2 a3 beta a3 b2 a4 a5 a3 b2 sigma a6"), a.defs("S2_3")));
}

TEST_CASE("tampered script is rejected at the altered step") {
    const auto &a = test::shipped_atlas();
    DerivationScript s = test::script("s4_2");
    s.steps[5].result[0] = {"b1", 1};
    auto rep = check_script(s, a);
    CHECK_FALSE(rep.accepted);
    REQUIRE(rep.failed_step.has_value());
    CHECK(*rep.failed_step == 5);
    CHECK(rep.error == ErrorKind::ResultMismatch);
}

TEST_CASE("script documents round trip") {
    const auto &s = test::script("s5_8");
    auto back = parse_script(script_to_json(s));
    CHECK(script_to_json(back) == script_to_json(s));
    CHECK(check_script(back, test::shipped_atlas()).accepted);
}

TEST_CASE("shipped summary with derived relations") {
    auto sum = verify_shipped_scripts(test::shipped_atlas(), test::shipped_scripts());
    for (const auto &f : sum.relation_failures) INFO(f);
    CHECK(sum.all_passed());
    CHECK(sum.scripts.size() == 8);
}

TEST_CASE("derived relation must match its source") {
    Atlas a = test::shipped_atlas();
    auto &rel = a.relations.at("S2_4").at("sub3");
    rel.rhs.back() = {"a6", 1};
    auto sum = verify_shipped_scripts(a, test::shipped_scripts());
    CHECK_FALSE(sum.relation_failures.empty());
}

TEST_CASE("search") {
    const auto &a = test::shipped_atlas();
    StepContext c(a, "S2_1");
    auto same = search_elementary_path(W("a1 b1"), W("a1 b1"), {}, c);
    CHECK(same.status == SearchStatus::Found);
    CHECK(same.steps.empty());
    auto one = search_elementary_path(W("a1 b1 a1"), W("b1 a1 b1"), {}, c);
    REQUIRE(one.status == SearchStatus::Found);
    REQUIRE(one.steps.size() == 1);
    CHECK(one.steps[0].rule == Rule::Braid);
    auto none = search_elementary_path(W("a1 b1"), W("b1 a1"), {}, c);
    CHECK(none.status == SearchStatus::NotFound);
    auto tight = search_elementary_path(W("(a1 b1 a2 b2)^5"), W("(a1 b1 a2)^4 b2 a2 b1 a1 a1 b1 a2 b2"), {10, 64}, c);
    CHECK(tight.status == SearchStatus::BudgetExhausted);
}

TEST_CASE("search is deterministic") {
    const auto &a = test::shipped_atlas();
    StepContext c(a, "S2_1");
    auto x = search_elementary_path(W("(a1 b1 a2 b2)^5"), W("(a1 b1 a2)^4 b2 a2 b1 a1 a1 b1 a2 b2"), {}, c);
    auto y = search_elementary_path(W("(a1 b1 a2 b2)^5"), W("(a1 b1 a2)^4 b2 a2 b1 a1 a1 b1 a2 b2"), {}, c);
    REQUIRE(x.status == SearchStatus::Found);
    REQUIRE(x.steps.size() == y.steps.size());
    for (std::size_t i = 0; i < x.steps.size(); ++i) CHECK(step_to_json(x.steps[i]) == step_to_json(y.steps[i]));
}

} // TEST_SUITE
