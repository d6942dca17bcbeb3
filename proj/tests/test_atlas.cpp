#include <doctest.h>

#include <set>

#include "support.hpp"

using namespace dt;
using nlohmann::json;
using dt::test::W;

namespace {

// Two-curve torus with one boundary; i(a,b) is a parameter.
json tiny_atlas(int i_ab) {
    return json::parse(R"({
      "atlas_version": 1,
      "models": [{"id": "T", "genus": 1, "boundary": ["d1"]}],
      "curves": {"T": [{"name": "d1", "class": [0, 0], "boundary": true},
                       {"name": "a", "class": [1, 0]}, {"name": "b", "class": [0, 1]}]},
      "definitions": {"T": []},
      "intersections": {"T": [["a", "b", )" + std::to_string(i_ab) + R"(]]},
      "renamings": [],
      "relations": [{"id": "braid", "model": "T", "kind": "braid", "lhs": "a b a", "rhs": "b a b"}]
    })");
}

ErrorKind load_error(const json &doc) {
    try {
        load_atlas(doc);
    } catch (const Error &e) {
        return e.kind();
    }
    return ErrorKind::Overflow;
}

} // namespace

TEST_SUITE("atlas") {

TEST_CASE("shipped one-holed surface curve set") {
    const auto &a = test::shipped_atlas();
    std::set<std::string> names;
    for (const auto &[k, v] : a.curves.at("S2_1")) names.insert(k);
    CHECK(names == std::set<std::string>{"d1", "a1", "b1", "a2", "b2", "a3", "a4"});
    CHECK(a.is_boundary("S2_1", "d1"));
    CHECK_FALSE(a.is_boundary("S2_1", "a3"));
}

TEST_CASE("shipped seven-holed surface records sigma5 meeting a10 twice") {
    CHECK(test::shipped_atlas().intersection("S2_7", "sigma5", "a10") == 2);
    CHECK(test::shipped_atlas().intersection("S2_7", "a10", "sigma5") == 2);
}

TEST_CASE("shipped atlas validates") {
    auto rep = validate_atlas(test::shipped_atlas());
    for (const auto &v : rep.violations) INFO(v);
    CHECK(rep.ok());
}

TEST_CASE("dangling relation letter") {
    json doc = tiny_atlas(1);
    doc["relations"][0]["rhs"] = "b a c";
    CHECK(load_error(doc) == ErrorKind::DanglingReference);
}

TEST_CASE("parity violation") {
    auto rep = validate_atlas(load_atlas(tiny_atlas(0)));
    REQUIRE_FALSE(rep.ok());
    bool parity = false;
    for (const auto &v : rep.violations) parity |= v.find("parity") != std::string::npos;
    CHECK(parity);
    CHECK(validate_atlas(load_atlas(tiny_atlas(1))).ok());
}

TEST_CASE("failing relation instance is reported") {
    json doc = tiny_atlas(1);
    doc["relations"][0]["rhs"] = "b a b a";
    auto rep = validate_atlas(load_atlas(doc));
    CHECK_FALSE(rep.ok());
}

TEST_CASE("boundary classes must pair to zero and sum to zero") {
    json doc = tiny_atlas(1);
    doc["curves"]["T"][0]["class"] = json::array({1, 0});
    CHECK_FALSE(validate_atlas(load_atlas(doc)).ok());
}

TEST_CASE("renaming three holes into four") {
    const auto &a = test::shipped_atlas();
    const auto &m = a.renaming("S2_3_to_S2_4");
    Word fin = test::script("s4_3").final_word;
    CHECK(apply_renaming(fin, m) ==
          W("a3 b2 (a5 a4 a3 b2)^2 a3 beta1 a3 b1 a2 a1 a3 b1 sigma1 a7"));
    CHECK(apply_renaming(W("d1 d2 d3"), m) == W("d3 d4 gamma"));
}

TEST_CASE("identity renaming and unmapped curves") {
    RenamingMap id{"id", "S2_1", "S2_1", {{"a1", "a1"}, {"b1", "b1"}}};
    CHECK(apply_renaming(W("a1 b1'"), id) == W("a1 b1'"));
    try {
        apply_renaming(W("a1 sigma2"), id);
        FAIL("expected UnmappedCurve");
    } catch (const Error &e) {
        CHECK(e.kind() == ErrorKind::UnmappedCurve);
    }
}

TEST_CASE("composed renamings") {
    const auto &a = test::shipped_atlas();
    auto m = compose(a.renaming("S2_3_to_S2_4"), a.renaming("S2_4_to_S2_5"));
    CHECK(m.source == "S2_3");
    CHECK(m.target == "S2_5");
    CHECK(apply_renaming(W("a1 a6"), m) == W("a8 a7"));
}

} // TEST_SUITE
