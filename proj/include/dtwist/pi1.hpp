#pragma once

// Action of twists on the free fundamental group of a bounded surface.
// Generators are 1-based indices; a negative entry is the inverse generator.

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "dtwist/atlas.hpp"
#include "dtwist/integer.hpp"
#include "dtwist/word.hpp"

namespace dt {

using FreeWord = std::vector<int>;

FreeWord free_reduce(const FreeWord &w);
FreeWord free_invert(const FreeWord &w);

struct Automorphism {
    std::vector<FreeWord> images;         // images[i] for generator i+1
    std::vector<FreeWord> inverse_images;

    static Automorphism identity(std::size_t rank);
    std::size_t rank() const { return images.size(); }
    FreeWord apply(const FreeWord &w) const;
    Automorphism inverse() const { return {inverse_images, images}; }
};

// (f*g)(x) = f(g(x))
Automorphism compose(const Automorphism &f, const Automorphism &g);
bool equal_automorphisms(const Automorphism &f, const Automorphism &g);

struct TwistTable {
    std::string id;
    std::string model;
    std::vector<std::string> generators;
    std::size_t loops = 0;         // generators[0, loops) are loops, the rest are arcs
    std::vector<FreeWord> fixed;   // words every curve twist must fix
    IMatrix abelianization;        // rank x loops: loop generator -> atlas class
    std::map<std::string, Automorphism> twists;
    std::vector<std::pair<Word, Word>> blocks; // rewrites applied before evaluation

    FreeWord parse(const std::string &text) const;
    std::string format(const FreeWord &w) const;
    bool has(const std::string &curve) const { return twists.count(curve) != 0; }
};

TwistTable load_twist_table(const Atlas &atlas, const std::string &id);
std::vector<std::string> twist_table_ids(const Atlas &atlas);

// Replaces every occurrence of a table block (left to right, non-overlapping).
Word substitute_blocks(const Word &w, const TwistTable &t);

// Rightmost letter acts first; defs are expanded, then blocks substituted.
Automorphism apply_word_pi1(const Word &w, const TwistTable &t, const DefinitionSet &defs = {});

// Loop part of an automorphism, abelianized, in the generator basis.
IMatrix abelianize(const Automorphism &f, const TwistTable &t);

struct TableCheck {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

// Inverse pairs, fixed words, and abelianization against transvections.
TableCheck verify_twist_table(const TwistTable &t, const Atlas &atlas);

// Twist word equals the product of the boundary twists in lhs.
bool verify_section_relation_pi1(const Word &lhs, const Word &final_word, const TwistTable &t,
                                 const DefinitionSet &defs = {});

std::string format_automorphism(const Automorphism &f, const TwistTable &t);

} // namespace dt
