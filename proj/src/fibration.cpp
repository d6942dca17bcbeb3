#include "dtwist/fibration.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "dtwist/error.hpp"
#include "dtwist/homology.hpp"

namespace dt {

using nlohmann::json;

const char *to_string(CycleKind k) { return k == CycleKind::Nonseparating ? "nonseparating" : "separating"; }

void check_factorization(const Factorization &f, const Atlas &atlas) {
    const auto &m = atlas.model(f.model);
    if (m.genus != 2) fail(ErrorKind::IllegalLicense, "fibration model " + f.model + " is not genus 2");
    for (const auto &l : f.word) {
        if (l.sign != 1) fail(ErrorKind::IllegalLicense, "monodromy letter " + format_letter(l) + " is left-handed");
        if (atlas.is_boundary(f.model, l.sym))
            fail(ErrorKind::IllegalLicense, "monodromy letter " + l.sym + " is boundary-parallel");
    }
}

std::vector<CycleKind> classify_cycles(const Factorization &f, const Atlas &atlas) {
    check_factorization(f, atlas);
    const auto &m = atlas.model(f.model);
    DefinitionSet defs = atlas.defs(f.model);
    for (const auto &[k, v] : f.defs) defs.insert_or_assign(k, v);
    std::vector<CycleKind> out;
    for (const auto &l : f.word) {
        if (!atlas.has_curve(f.model, l.sym) && !defs.count(l.sym)) fail(ErrorKind::UnknownCurve, l.sym);
        IVector c = letter_class(l, atlas, f.model, defs).head(2 * m.genus);
        out.push_back(c.isZero() ? CycleKind::Separating : CycleKind::Nonseparating);
    }
    return out;
}

Rational make_rational(long long num, long long den) {
    if (den == 0) fail(ErrorKind::NonIntegerSignature, "zero denominator");
    if (den < 0) num = -num, den = -den;
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) num /= g, den /= g;
    return {num, den};
}

FibInvariants invariants_from_counts(int n0, int s1, std::vector<SectionFamily> sections) {
    FibInvariants inv;
    inv.n0 = n0;
    inv.s1 = s1;
    inv.s = n0 + s1;
    inv.euler = 2LL * (2 - 2 * inv.genus) + inv.s;
    inv.signature = make_rational(-3LL * n0 - s1, 5);
    inv.sections = std::move(sections);
    return inv;
}

FibInvariants invariants(const Factorization &f, const Atlas &atlas) {
    int n0 = 0, s1 = 0;
    for (auto k : classify_cycles(f, atlas)) (k == CycleKind::Nonseparating ? n0 : s1) += 1;
    FibInvariants inv = invariants_from_counts(n0, s1, f.sections);
    if (!inv.signature.integral() && is_identity(cap_boundaries(f.word, atlas, f.model, f.defs)))
        fail(ErrorKind::NonIntegerSignature,
             "signature " + std::to_string(inv.signature.num) + "/" + std::to_string(inv.signature.den) +
                 " of a word that caps to the identity");
    return inv;
}

std::map<std::string, int> boundary_exponents(const DerivationScript &script) {
    std::map<std::string, int> k;
    for (const auto &l : script.lhs) k[l.sym] += l.sign;
    return k;
}

std::vector<SectionFamily> sections_from_relation(const DerivationScript &script) {
    std::map<int, int> by_square;
    for (const auto &[d, k] : boundary_exponents(script)) by_square[-k] += 1;
    std::vector<SectionFamily> out;
    for (auto it = by_square.rbegin(); it != by_square.rend(); ++it) out.push_back({it->second, it->first});
    return out;
}

int section_count(const std::vector<SectionFamily> &s) {
    int n = 0;
    for (const auto &f : s) n += f.count;
    return n;
}

Obstruction max_sections_obstruction(int m, int k) {
    Obstruction o;
    auto r = static_cast<long long>(std::llround(std::sqrt(static_cast<double>(k))));
    bool square = r * r == k;
    if (!square) o.bound = k - 1;
    o.contradiction = m == k && !square;
    return o;
}

namespace {

// Sewing pairs sections in order of decreasing square.
std::vector<int> squares(const std::vector<SectionFamily> &s) {
    std::vector<int> out;
    for (const auto &f : s)
        for (int i = 0; i < f.count; ++i) out.push_back(f.square);
    return out;
}

} // namespace

FiberSum fiber_sum(const Factorization &f1, const FibInvariants &i1, const Factorization &f2,
                   const FibInvariants &i2, int sewn) {
    if (f1.model != f2.model) fail(ErrorKind::IllegalLicense, "fiber sum of words on different models");
    auto q1 = squares(f1.sections), q2 = squares(f2.sections);
    if (sewn < 0 || static_cast<std::size_t>(sewn) > q1.size() || static_cast<std::size_t>(sewn) > q2.size())
        fail(ErrorKind::InsufficientSections, "cannot sew " + std::to_string(sewn) + " sections: summands have " +
                                                  std::to_string(q1.size()) + " and " + std::to_string(q2.size()));
    FiberSum out;
    out.factorization.model = f1.model;
    out.factorization.word = concat(f1.word, f2.word);
    out.factorization.defs = f1.defs;
    for (const auto &[k, v] : f2.defs) out.factorization.defs.insert_or_assign(k, v);
    std::map<int, int> by_square;
    for (int i = 0; i < sewn; ++i) by_square[q1[static_cast<std::size_t>(i)] + q2[static_cast<std::size_t>(i)]] += 1;
    for (auto it = by_square.rbegin(); it != by_square.rend(); ++it)
        out.factorization.sections.push_back({it->second, it->first});
    FibInvariants &inv = out.invariants;
    inv.genus = i1.genus;
    inv.n0 = i1.n0 + i2.n0;
    inv.s1 = i1.s1 + i2.s1;
    inv.s = i1.s + i2.s;
    inv.euler = i1.euler + i2.euler + 4;
    inv.signature = make_rational(i1.signature.num * i2.signature.den + i2.signature.num * i1.signature.den,
                                  i1.signature.den * i2.signature.den);
    inv.sections = out.factorization.sections;
    return out;
}

ChakirisReport chakiris_section_report(int p, int q, int r, const Factorization &A, const Factorization &B,
                                       const Factorization &C, const Atlas &atlas) {
    if (p < 0 || q < 0 || r < 0) fail(ErrorKind::EmptySum, "negative summand count");
    if (p + q + r == 0) fail(ErrorKind::EmptySum, "no summands");
    std::vector<const Factorization *> parts;
    for (int i = 0; i < p; ++i) parts.push_back(&A);
    for (int i = 0; i < q; ++i) parts.push_back(&B);
    for (int i = 0; i < r; ++i) parts.push_back(&C);
    ChakirisReport rep{p, q, r, {*parts[0], invariants(*parts[0], atlas)}, {}};
    for (std::size_t i = 1; i < parts.size(); ++i) {
        const auto &next = *parts[i];
        int sewn = std::min(section_count(rep.sum.factorization.sections), section_count(next.sections));
        rep.sum = fiber_sum(rep.sum.factorization, rep.sum.invariants, next, invariants(next, atlas), sewn);
    }
    const auto &s = rep.sum.factorization.sections;
    if (s.empty()) fail(ErrorKind::InsufficientSections, "no section survives the sum");
    rep.section = s.front();
    return rep;
}

std::optional<std::string> total_space_hint(long long euler, const Rational &signature) {
    if (!signature.integral()) return std::nullopt;
    if (euler == 16 && signature.num == -12) return "CP2#13(-CP2)";
    if (euler == 26 && signature.num == -18) return "K3#2(-CP2)";
    if (euler == 36 && signature.num == -24) return "Horikawa H";
    return std::nullopt;
}

json to_json(const FibInvariants &inv) {
    json j;
    j["s"] = inv.s;
    j["n0"] = inv.n0;
    j["s1"] = inv.s1;
    j["euler"] = inv.euler;
    if (inv.signature.integral())
        j["signature"] = inv.signature.num;
    else
        j["signature"] = std::to_string(inv.signature.num) + "/" + std::to_string(inv.signature.den);
    j["sections"] = json::array();
    for (const auto &s : inv.sections) j["sections"].push_back({{"count", s.count}, {"square", s.square}});
    auto hint = total_space_hint(inv.euler, inv.signature);
    j["total_space_hint"] = hint ? json(*hint) : json(nullptr);
    return j;
}

std::map<std::string, Factorization> load_fibrations(const json &doc, const Atlas &atlas,
                                                     const std::vector<DerivationScript> &scripts) {
    std::map<std::string, Factorization> out;
    try {
        for (const auto &[name, e] : doc.at("fibrations").items()) {
            Factorization f;
            f.model = e.at("model").get<std::string>();
            f.word = parse_word(e.at("word").get<std::string>());
            check_factorization(f, atlas);
            IMatrix closed = evaluate_word(f.word, atlas, f.model);
            const auto &src = e.at("sections");
            // Sections come from boundary relations whose capped image is the same monodromy.
            for (const auto &sid : src.value("scripts", std::vector<std::string>{})) {
                auto it = std::find_if(scripts.begin(), scripts.end(), [&](const auto &s) { return s.id == sid; });
                if (it == scripts.end()) fail(ErrorKind::DanglingReference, name + ": unknown script " + sid);
                auto rep = check_script(*it, atlas);
                if (!rep.accepted) continue;
                if (!(cap_boundaries(it->final_word, atlas, it->model, it->defs) == closed)) continue;
                auto secs = sections_from_relation(*it);
                if (section_count(secs) > section_count(f.sections)) {
                    f.sections = secs;
                    f.boundary_exponents = boundary_exponents(*it);
                }
            }
            for (const auto &rid : src.value("relations", std::vector<std::string>{})) {
                auto slash = rid.find('/');
                if (slash == std::string::npos) fail(ErrorKind::ParseError, name + ": relation reference " + rid);
                const auto &rel = atlas.relation(rid.substr(0, slash), rid.substr(slash + 1));
                DerivationScript as_script;
                as_script.lhs = rel.lhs;
                bool boundary_lhs = std::all_of(rel.lhs.begin(), rel.lhs.end(), [&](const Letter &l) {
                    return l.sign == 1 && atlas.is_boundary(rel.model, l.sym);
                });
                if (!boundary_lhs || !(cap_boundaries(rel.rhs, atlas, rel.model) == closed)) continue;
                auto secs = sections_from_relation(as_script);
                if (section_count(secs) > section_count(f.sections)) {
                    f.sections = secs;
                    f.boundary_exponents = boundary_exponents(as_script);
                }
            }
            out.emplace(name, std::move(f));
        }
    } catch (const json::exception &e) {
        fail(ErrorKind::ParseError, std::string("fibration document: ") + e.what());
    }
    return out;
}

} // namespace dt
