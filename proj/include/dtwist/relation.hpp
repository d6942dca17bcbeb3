#pragma once

// Derivation calculus: licensed elementary rewrites of the twist-word side of an equation
// whose other side is a product of boundary twists.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "dtwist/atlas.hpp"
#include "dtwist/error.hpp"
#include "dtwist/word.hpp"

namespace dt {

enum class Rule { Commute, Braid, Cancel, InsertPair, SubstituteRelation, ExpandDef, FoldDef, CentralRotate, Rename };

// Substitution directions; the inverse variants rewrite invert(lhs) <-> invert(rhs).
enum class Direction { Forward, Backward, ForwardInverse, BackwardInverse };

// cube: x^e y^e x^e <-> y^e x^e y^e ; conj: x^e y^f x^-e <-> y^-e x^f y^e. Both are involutions.
enum class BraidForm { Cube, Conj };

const char *to_string(Rule r);
const char *to_string(Direction d);
const char *to_string(BraidForm f);

struct DerivationStep {
    Rule rule = Rule::Commute;
    std::size_t position = 0;
    Letter letter;                 // InsertPair
    std::string relation;          // SubstituteRelation
    Direction direction = Direction::Forward;
    std::optional<BraidForm> form; // Braid
    std::string name;              // ExpandDef, FoldDef
    std::size_t shift = 0;         // CentralRotate
    std::string map;               // Rename
    Word result;
};

struct DerivationScript {
    std::string id;
    std::string model;
    Word lhs;
    DefinitionSet defs;
    std::vector<DerivationStep> steps;
    Word final_word;
};

// Everything a step needs to check its license.
class StepContext {
public:
    StepContext(const Atlas &atlas, std::string model, const DefinitionSet &script_defs = {}, bool central = true);

    const Atlas &atlas() const { return *atlas_; }
    const std::string &model() const { return model_; }
    const DefinitionSet &defs() const { return defs_; }
    bool central() const { return central_; }

    bool known_letter(const std::string &sym) const;
    bool boundary(const std::string &sym) const;
    // Curves a letter is built from (itself for a curve).
    const std::vector<std::string> &support(const std::string &sym) const;
    bool commute_licensed(const Letter &x, const Letter &y, std::string *why = nullptr) const;
    bool braid_licensed(const std::string &x, const std::string &y, std::string *why = nullptr) const;

private:
    const Atlas *atlas_;
    std::string model_;
    DefinitionSet defs_;
    bool central_;
    mutable std::map<std::string, std::vector<std::string>> support_;
};

// Applies the rule (ignoring step.result); throws Error on an illegal license or position.
Word apply_rule(const Word &prev, const DerivationStep &step, const StepContext &ctx);

struct StepOutcome {
    bool ok = true;
    ErrorKind error = ErrorKind::ResultMismatch;
    std::string reason;
};

StepOutcome check_step(const Word &prev, const DerivationStep &step, const StepContext &ctx);

struct ScriptReport {
    std::string id;
    bool accepted = false;
    std::optional<std::size_t> failed_step;
    ErrorKind error = ErrorKind::ResultMismatch;
    std::string reason;
    Word final_word;
    std::size_t final_length = 0;
    bool all_positive = false;
    bool no_boundary_parallel = false;
};

ScriptReport check_script(const DerivationScript &script, const Atlas &atlas);

struct SearchBudget {
    std::size_t max_states = 200000;
    std::size_t max_depth = 64;
};

enum class SearchStatus { Found, NotFound, BudgetExhausted };

struct SearchResult {
    SearchStatus status = SearchStatus::NotFound;
    std::vector<DerivationStep> steps;
    std::size_t states = 0;
};

// Deterministic breadth-first search over Commute/Braid moves (plus Cancel when shrinking).
// NotFound only means the move space reachable under the budget holds no path.
SearchResult search_elementary_path(const Word &from, const Word &to, const SearchBudget &budget,
                                    const StepContext &ctx);

// Script documents.
DerivationScript parse_script(const nlohmann::json &doc);
DerivationScript load_script_file(const std::string &path);
nlohmann::json script_to_json(const DerivationScript &s);
nlohmann::json step_to_json(const DerivationStep &s);
DerivationStep parse_step(const nlohmann::json &j);

struct ScriptSummary {
    ScriptReport report;
    std::string model;
    int boundary_count = 0;
    bool homology_identity = false;
    bool capped_identity = false;
    std::vector<std::string> notes;
    bool passed() const;
};

struct ShippedSummary {
    std::vector<ScriptSummary> scripts;
    std::vector<std::string> relation_failures; // derived relations not matching their source script
    bool all_passed() const;
};

// Checks every script, then cross-checks final words in homology and derived relations against sources.
ShippedSummary verify_shipped_scripts(const Atlas &atlas, const std::vector<DerivationScript> &scripts);

std::vector<DerivationScript> load_scripts_dir(const std::string &dir);

} // namespace dt
