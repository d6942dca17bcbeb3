#pragma once

#include <random>
#include <string>
#include <vector>

#include "dtwist/atlas.hpp"
#include "dtwist/fibration.hpp"
#include "dtwist/homology.hpp"
#include "dtwist/pi1.hpp"
#include "dtwist/relation.hpp"

namespace dt::test {

inline const std::string data_dir = DTWIST_DATA_DIR;

inline const Atlas &shipped_atlas() {
    static const Atlas a = load_atlas_file(data_dir + "/atlas.json");
    return a;
}

inline const std::vector<DerivationScript> &shipped_scripts() {
    static const auto s = load_scripts_dir(data_dir + "/scripts");
    return s;
}

inline const std::map<std::string, Factorization> &shipped_fibrations() {
    static const auto f = load_fibrations(read_json_file(data_dir + "/fibrations.json"), shipped_atlas(), shipped_scripts());
    return f;
}

inline const DerivationScript &script(const std::string &id) {
    for (const auto &s : shipped_scripts())
        if (s.id == id) return s;
    fail(ErrorKind::DanglingReference, "no shipped script " + id);
}

inline Word W(const char *text) { return parse_word(text); }

// Random words for the property suites; one fixed seed per suite.
class WordGen {
public:
    WordGen(std::vector<std::string> alphabet, std::uint64_t seed) : alphabet_(std::move(alphabet)), rng_(seed) {}

    Word word(std::size_t max_len) {
        std::uniform_int_distribution<std::size_t> len(0, max_len), pick(0, alphabet_.size() - 1);
        std::bernoulli_distribution neg(0.4);
        Word w;
        for (std::size_t n = len(rng_); n > 0; --n) w.push_back({alphabet_[pick(rng_)], neg(rng_) ? -1 : 1});
        return w;
    }
    Letter letter() {
        Word w;
        while (w.empty()) w = word(1);
        return w[0];
    }
    std::size_t index(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }
    std::mt19937_64 &rng() { return rng_; }

private:
    std::vector<std::string> alphabet_;
    std::mt19937_64 rng_;
};

inline constexpr int property_cases = 1000;

// Each returns the number of failing cases out of property_cases.

inline int prop_reduce_idempotent() {
    WordGen g({"a1", "b1", "a2", "b2", "a3"}, 101);
    int bad = 0;
    for (int i = 0; i < property_cases; ++i) {
        Word w = g.word(24), r = reduce(w);
        bool adjacent = false;
        for (std::size_t k = 0; k + 1 < r.size(); ++k) adjacent |= r[k] == r[k + 1].inverse();
        bad += !(reduce(r) == r) || adjacent;
    }
    return bad;
}

inline int prop_inverse_cancels() {
    WordGen g({"a1", "b1", "a2", "b2", "d1"}, 202);
    int bad = 0;
    for (int i = 0; i < property_cases; ++i) {
        Word w = g.word(20);
        bad += !reduce(concat(w, invert(w))).empty() || !reduce(concat(invert(w), w)).empty() || !(invert(invert(w)) == w);
    }
    return bad;
}

// evaluate(uv) = evaluate(u) evaluate(v) in homology, and pi1(uv) = pi1(u) o pi1(v).
inline int prop_homomorphism() {
    const Atlas &a = shipped_atlas();
    TwistTable t = load_twist_table(a, "S2_2_chain");
    WordGen g({"c1", "c2", "c3", "c4", "c5", "d1", "d2"}, 303);
    int bad = 0;
    for (int i = 0; i < property_cases; ++i) {
        Word u = g.word(8), v = g.word(8);
        bool hom = evaluate_word(concat(u, v), a, "S2_2_chain") ==
                   IMatrix(evaluate_word(u, a, "S2_2_chain") * evaluate_word(v, a, "S2_2_chain"));
        bool pi = equal_automorphisms(apply_word_pi1(concat(u, v), t), compose(apply_word_pi1(u, t), apply_word_pi1(v, t)));
        bool form = preserves_form(evaluate_word(u, a, "S2_2_chain"), intersection_form(a.model("S2_2_chain")));
        bad += !(hom && pi && form);
    }
    return bad;
}

// Abelianizing the free-group action gives the transvection image.
inline int prop_abelianization() {
    const Atlas &a = shipped_atlas();
    int bad = 0;
    struct Case {
        const char *table;
        std::vector<std::string> letters;
        std::uint64_t seed;
    };
    for (const auto &c : {Case{"S2_1", {"a1", "b1", "a2", "b2", "d1"}, 404}, Case{"S2_2_chain", {"c1", "c2", "c3", "c4", "c5", "d1", "d2"}, 405}}) {
        TwistTable t = load_twist_table(a, c.table);
        WordGen g(c.letters, c.seed);
        for (int i = 0; i < property_cases / 2; ++i) {
            Word w = g.word(10);
            IMatrix lhs = t.abelianization * abelianize(apply_word_pi1(w, t), t);
            IMatrix rhs = evaluate_word(w, a, t.model) * t.abelianization;
            bad += !(lhs == rhs);
        }
    }
    return bad;
}

// A random licensed move never changes the homology image.
inline int prop_step_soundness() {
    const Atlas &a = shipped_atlas();
    int bad = 0;
    struct Case {
        const char *model;
        std::vector<std::string> letters;
        std::uint64_t seed;
    };
    for (const auto &c : {Case{"S2_1", {"a1", "b1", "a2", "b2", "d1"}, 505},
                          Case{"S2_6", {"a1", "a2", "a3", "a4", "b1", "b2", "beta3", "sigma1", "d2"}, 506}}) {
        StepContext ctx(a, c.model, {}, true);
        WordGen g(c.letters, c.seed);
        for (int tried = 0; tried < property_cases / 2;) {
            Word w = g.word(12);
            DerivationStep s;
            switch (g.index(4)) {
            case 0: s.rule = Rule::Commute; break;
            case 1: s.rule = Rule::Braid; break;
            case 2: s.rule = Rule::Cancel; break;
            default:
                s.rule = Rule::InsertPair;
                s.letter = g.letter();
            }
            s.position = g.index(w.size() + 1);
            Word out;
            try {
                out = apply_rule(w, s, ctx);
            } catch (const Error &) {
                continue; // unlicensed, not a step
            }
            ++tried;
            bad += !(evaluate_word(w, a, c.model, ctx.defs()) == evaluate_word(out, a, c.model, ctx.defs()));
        }
    }
    // and every step of every shipped script
    for (const auto &sc : shipped_scripts()) {
        DefinitionSet defs = a.defs(sc.model);
        for (const auto &[k, v] : sc.defs) defs.insert_or_assign(k, v);
        IMatrix before = evaluate_word(sc.lhs, a, sc.model, defs);
        for (const auto &st : sc.steps) bad += !(evaluate_word(st.result, a, sc.model, defs) == before);
    }
    return bad;
}

} // namespace dt::test
