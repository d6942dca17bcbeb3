#pragma once

// Genus-2 Lefschetz fibrations over the sphere from positive twist factorizations.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "dtwist/atlas.hpp"
#include "dtwist/relation.hpp"
#include "dtwist/word.hpp"

namespace dt {

struct SectionFamily {
    int count = 0;
    int square = 0;
    friend bool operator==(const SectionFamily &, const SectionFamily &) = default;
};

struct Factorization {
    std::string model;
    Word word;
    DefinitionSet defs;
    std::map<std::string, int> boundary_exponents; // delta -> k from the source relation
    std::vector<SectionFamily> sections;           // disjoint sections known to exist
};

enum class CycleKind { Nonseparating, Separating };
const char *to_string(CycleKind k);

// Rejects negative letters and boundary-parallel letters.
void check_factorization(const Factorization &f, const Atlas &atlas);

// Decided by the class on the closed fiber: nonzero means nonseparating.
std::vector<CycleKind> classify_cycles(const Factorization &f, const Atlas &atlas);

struct Rational {
    long long num = 0;
    long long den = 1;
    bool integral() const { return den == 1; }
    friend bool operator==(const Rational &, const Rational &) = default;
};

Rational make_rational(long long num, long long den);

struct FibInvariants {
    int genus = 2;
    int s = 0;
    int n0 = 0;
    int s1 = 0;
    long long euler = 0;
    Rational signature;
    std::vector<SectionFamily> sections;
};

// chi = 2(2 - 2g) + s; sigma = -(3/5) n0 - (1/5) s1 for g = 2.
FibInvariants invariants(const Factorization &f, const Atlas &atlas);
FibInvariants invariants_from_counts(int n0, int s1, std::vector<SectionFamily> sections = {});

// One section per boundary curve of the left-hand side, square -k for delta^k.
std::vector<SectionFamily> sections_from_relation(const DerivationScript &script);
std::map<std::string, int> boundary_exponents(const DerivationScript &script);
int section_count(const std::vector<SectionFamily> &s);

struct Obstruction {
    bool contradiction = false;
    std::optional<int> bound; // k - 1 when k sections would already contradict
};

// Blowing down m = k disjoint (-1)-sections leaves a genus-2 class of square k in a rank-one lattice.
Obstruction max_sections_obstruction(int m, int k);

struct FiberSum {
    Factorization factorization;
    FibInvariants invariants;
};

// Identity gluing; each sewn section has the sum of the two squares.
FiberSum fiber_sum(const Factorization &f1, const FibInvariants &i1, const Factorization &f2,
                   const FibInvariants &i2, int sewn);

struct ChakirisReport {
    int p = 0, q = 0, r = 0;
    FiberSum sum;
    SectionFamily section;
};

// Sums p copies of A, then q of B, then r of C, sewing as many sections as every summand provides.
ChakirisReport chakiris_section_report(int p, int q, int r, const Factorization &A, const Factorization &B,
                                       const Factorization &C, const Atlas &atlas);

// Known total spaces by (chi, sigma).
std::optional<std::string> total_space_hint(long long euler, const Rational &signature);

nlohmann::json to_json(const FibInvariants &inv);

// Loads the named factorizations of a fibration document.
std::map<std::string, Factorization> load_fibrations(const nlohmann::json &doc, const Atlas &atlas,
                                                     const std::vector<DerivationScript> &scripts);

} // namespace dt
