#pragma once

// Surface models, named curves, intersection data, renamings and relation instances.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "dtwist/integer.hpp"
#include "dtwist/word.hpp"

namespace dt {

struct SurfaceModel {
    std::string id;
    int genus = 0;
    int boundary_count = 0;
    std::vector<std::string> boundary_curves;

    // 2g + max(n-1, 0)
    int rank() const { return 2 * genus + (boundary_count > 1 ? boundary_count - 1 : 0); }
};

struct CurveRecord {
    std::string name;
    std::string model;
    bool boundary_parallel = false;
    IVector homology;
    std::string pi1_twist; // "table/entry" or empty
};

class IntersectionTable {
public:
    void set(const std::string &a, const std::string &b, int i);
    std::optional<int> get(const std::string &a, const std::string &b) const;
    const std::map<std::pair<std::string, std::string>, int> &pairs() const { return pairs_; }

private:
    static std::pair<std::string, std::string> key(const std::string &a, const std::string &b) {
        return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
    }
    std::map<std::pair<std::string, std::string>, int> pairs_;
};

struct RenamingMap {
    std::string id;
    std::string source;
    std::string target;
    std::map<std::string, std::string> map;
};

struct NamedRelation {
    std::string id;
    std::string model;
    std::string kind;
    Word lhs;
    Word rhs;
    // Relations obtained by renaming the equation of an accepted script.
    std::string derived_script;
    std::string derived_renaming;
};

class Atlas {
public:
    int version = 1;
    std::map<std::string, SurfaceModel> models;
    std::map<std::string, std::map<std::string, CurveRecord>> curves;
    std::map<std::string, IntersectionTable> intersections;
    std::map<std::string, RenamingMap> renamings;
    std::map<std::string, std::map<std::string, NamedRelation>> relations;
    std::map<std::string, DefinitionSet> definitions;
    nlohmann::json pi1_tables = nlohmann::json::object();

    const SurfaceModel &model(const std::string &id) const;
    bool has_curve(const std::string &model, const std::string &name) const;
    const CurveRecord &curve(const std::string &model, const std::string &name) const;
    const NamedRelation &relation(const std::string &model, const std::string &id) const;
    const RenamingMap &renaming(const std::string &id) const;
    const DefinitionSet &defs(const std::string &model) const;
    std::optional<int> intersection(const std::string &model, const std::string &a, const std::string &b) const;
    bool is_boundary(const std::string &model, const std::string &name) const;
    CurvePredicate curve_predicate(const std::string &model) const;
};

Atlas load_atlas(const nlohmann::json &doc);
Atlas load_atlas_file(const std::string &path);
nlohmann::json read_json_file(const std::string &path);

// Letterwise renaming; defined letters may be mapped too.
Word apply_renaming(const Word &w, const RenamingMap &map);
// first, then second
RenamingMap compose(const RenamingMap &first, const RenamingMap &second);

struct ValidationReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

ValidationReport validate_atlas(const Atlas &atlas);

} // namespace dt
