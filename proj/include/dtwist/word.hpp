#pragma once

// Twist words: signed curve letters in reading order, rightmost acts first.

#include <compare>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace dt {

struct Letter {
    std::string sym;
    int sign = 1;

    Letter inverse() const { return {sym, -sign}; }
    friend bool operator==(const Letter &, const Letter &) = default;
    friend auto operator<=>(const Letter &, const Letter &) = default;
};

using Word = std::vector<Letter>;

// Token syntax: "a4' b2 a4", with "(...)^k" and "x^k" accepted on input; "1" is the empty word.
Word parse_word(std::string_view text);
std::string format_word(const Word &w);
std::string format_letter(const Letter &l);

Word reduce(const Word &w);
Word invert(const Word &w);
Word concat(const Word &a, const Word &b);
Word power(const Word &w, int k);
Word subword(const Word &w, std::size_t pos, std::size_t len);
Word splice(const Word &w, std::size_t pos, std::size_t len, const Word &repl);
bool matches_at(const Word &w, std::size_t pos, const Word &pattern);

// w · a · w⁻¹
struct ConjugateDefinition {
    std::string name;
    Word conjugator;
    Letter core;

    Word expansion() const;
    // Splits an odd-length word of the form w a w⁻¹.
    static ConjugateDefinition from_expansion(const std::string &name, const Word &e);
};

using DefinitionSet = std::map<std::string, ConjugateDefinition>;

using CurvePredicate = std::function<bool(const std::string &)>;

// Replaces every defined letter by its expansion (inverted for sign -1), recursively.
// With is_curve set, any symbol that is neither a curve nor defined is an UnknownDefinition.
Word expand_definitions(const Word &w, const DefinitionSet &defs, const CurvePredicate &is_curve = {});

} // namespace dt
