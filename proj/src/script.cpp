#include <algorithm>
#include <filesystem>

#include "dtwist/homology.hpp"
#include "dtwist/relation.hpp"

namespace dt {

using nlohmann::json;

namespace {

Rule rule_from(const std::string &s) {
    for (Rule r : {Rule::Commute, Rule::Braid, Rule::Cancel, Rule::InsertPair, Rule::SubstituteRelation, Rule::ExpandDef,
                   Rule::FoldDef, Rule::CentralRotate, Rule::Rename})
        if (s == to_string(r)) return r;
    fail(ErrorKind::ParseError, "unknown rule \"" + s + "\"");
}

Direction direction_from(const std::string &s) {
    for (Direction d : {Direction::Forward, Direction::Backward, Direction::ForwardInverse, Direction::BackwardInverse})
        if (s == to_string(d)) return d;
    fail(ErrorKind::ParseError, "unknown direction \"" + s + "\"");
}

template <class T>
T get(const json &j, const char *key) {
    if (!j.contains(key)) fail(ErrorKind::ParseError, std::string("step: missing \"") + key + "\"");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception &e) {
        fail(ErrorKind::ParseError, std::string("step field \"") + key + "\": " + e.what());
    }
}

std::size_t index_field(const json &j, const char *key) {
    long long v = get<long long>(j, key);
    if (v < 0) fail(ErrorKind::PositionOutOfRange, std::string(key) + " is negative");
    return static_cast<std::size_t>(v);
}

} // namespace

DerivationStep parse_step(const json &j) {
    DerivationStep s;
    s.rule = rule_from(get<std::string>(j, "rule"));
    switch (s.rule) {
    case Rule::Commute:
    case Rule::Cancel: s.position = index_field(j, "position"); break;
    case Rule::Braid:
        s.position = index_field(j, "position");
        if (j.contains("form")) {
            auto f = get<std::string>(j, "form");
            if (f != "cube" && f != "conj") fail(ErrorKind::ParseError, "braid form \"" + f + "\"");
            s.form = f == "cube" ? BraidForm::Cube : BraidForm::Conj;
        }
        break;
    case Rule::InsertPair: {
        s.position = index_field(j, "position");
        Word l = parse_word(get<std::string>(j, "letter"));
        if (l.size() != 1) fail(ErrorKind::ParseError, "InsertPair takes one letter");
        s.letter = l[0];
        break;
    }
    case Rule::SubstituteRelation:
        s.position = index_field(j, "position");
        s.relation = get<std::string>(j, "relation");
        s.direction = direction_from(get<std::string>(j, "direction"));
        break;
    case Rule::ExpandDef:
    case Rule::FoldDef:
        s.position = index_field(j, "position");
        s.name = get<std::string>(j, "name");
        break;
    case Rule::CentralRotate: s.shift = index_field(j, "shift"); break;
    case Rule::Rename: s.map = get<std::string>(j, "map"); break;
    }
    s.result = parse_word(get<std::string>(j, "result"));
    return s;
}

json step_to_json(const DerivationStep &s) {
    json j;
    j["rule"] = to_string(s.rule);
    switch (s.rule) {
    case Rule::Commute:
    case Rule::Cancel: j["position"] = s.position; break;
    case Rule::Braid:
        j["position"] = s.position;
        if (s.form) j["form"] = to_string(*s.form);
        break;
    case Rule::InsertPair:
        j["position"] = s.position;
        j["letter"] = format_letter(s.letter);
        break;
    case Rule::SubstituteRelation:
        j["relation"] = s.relation;
        j["position"] = s.position;
        j["direction"] = to_string(s.direction);
        break;
    case Rule::ExpandDef:
    case Rule::FoldDef:
        j["name"] = s.name;
        j["position"] = s.position;
        break;
    case Rule::CentralRotate: j["shift"] = s.shift; break;
    case Rule::Rename: j["map"] = s.map; break;
    }
    j["result"] = format_word(s.result);
    return j;
}

DerivationScript parse_script(const json &doc) {
    DerivationScript s;
    if (!doc.is_object()) fail(ErrorKind::ParseError, "script must be a JSON object");
    for (const char *k : {"model", "lhs", "defs", "steps", "final"})
        if (!doc.contains(k)) fail(ErrorKind::ParseError, std::string("script: missing \"") + k + "\"");
    s.id = doc.value("id", std::string());
    s.model = doc.at("model").get<std::string>();
    s.lhs = parse_word(doc.at("lhs").get<std::string>());
    for (const auto &d : doc.at("defs")) {
        auto name = d.at("name").get<std::string>();
        s.defs.emplace(name, ConjugateDefinition::from_expansion(name, parse_word(d.at("expansion").get<std::string>())));
    }
    for (const auto &st : doc.at("steps")) s.steps.push_back(parse_step(st));
    s.final_word = parse_word(doc.at("final").get<std::string>());
    return s;
}

DerivationScript load_script_file(const std::string &path) {
    auto s = parse_script(read_json_file(path));
    if (s.id.empty()) {
        auto stem = std::filesystem::path(path).filename().string();
        s.id = stem.substr(0, stem.find('.'));
    }
    return s;
}

json script_to_json(const DerivationScript &s) {
    json j;
    j["id"] = s.id;
    j["model"] = s.model;
    j["lhs"] = format_word(s.lhs);
    j["defs"] = json::array();
    for (const auto &[name, d] : s.defs) j["defs"].push_back({{"name", name}, {"expansion", format_word(d.expansion())}});
    j["steps"] = json::array();
    for (const auto &st : s.steps) j["steps"].push_back(step_to_json(st));
    j["final"] = format_word(s.final_word);
    return j;
}

std::vector<DerivationScript> load_scripts_dir(const std::string &dir) {
    std::vector<std::string> paths;
    for (const auto &e : std::filesystem::directory_iterator(dir)) {
        auto name = e.path().filename().string();
        if (name.size() > 12 && name.ends_with(".script.json")) paths.push_back(e.path().string());
    }
    std::sort(paths.begin(), paths.end());
    std::vector<DerivationScript> out;
    for (const auto &p : paths) out.push_back(load_script_file(p));
    return out;
}

bool ScriptSummary::passed() const {
    return report.accepted && report.final_length == 20 && report.all_positive && report.no_boundary_parallel &&
           homology_identity && capped_identity;
}

bool ShippedSummary::all_passed() const {
    return relation_failures.empty() &&
           std::all_of(scripts.begin(), scripts.end(), [](const ScriptSummary &s) { return s.passed(); });
}

ShippedSummary verify_shipped_scripts(const Atlas &atlas, const std::vector<DerivationScript> &scripts) {
    ShippedSummary out;
    std::map<std::string, const DerivationScript *> accepted;
    for (const auto &s : scripts) {
        ScriptSummary sum;
        sum.model = s.model;
        sum.report = check_script(s, atlas);
        if (atlas.models.count(s.model)) sum.boundary_count = atlas.model(s.model).boundary_count;
        if (sum.report.accepted) {
            accepted[s.id] = &s;
            try {
                sum.homology_identity = is_identity(evaluate_word(s.final_word, atlas, s.model, s.defs));
                sum.capped_identity = is_identity(cap_boundaries(s.final_word, atlas, s.model, s.defs));
            } catch (const Error &e) {
                sum.notes.push_back(e.what());
            }
        }
        out.scripts.push_back(std::move(sum));
    }
    // A derived relation is established only by renaming the equation of an accepted script.
    for (const auto &[mid, rels] : atlas.relations)
        for (const auto &[id, rel] : rels) {
            if (rel.derived_script.empty()) continue;
            std::string tag = mid + "/" + id;
            auto it = accepted.find(rel.derived_script);
            if (it == accepted.end()) {
                out.relation_failures.push_back(tag + ": source script " + rel.derived_script + " not accepted");
                continue;
            }
            const auto &map = atlas.renaming(rel.derived_renaming);
            try {
                if (map.source != it->second->model || map.target != mid)
                    out.relation_failures.push_back(tag + ": renaming " + map.id + " does not connect the models");
                else if (!(apply_renaming(it->second->lhs, map) == rel.lhs) ||
                         !(apply_renaming(it->second->final_word, map) == rel.rhs))
                    out.relation_failures.push_back(tag + ": differs from the renamed equation of " + rel.derived_script);
            } catch (const Error &e) {
                out.relation_failures.push_back(tag + ": " + e.what());
            }
            for (const auto &[dname, def] : it->second->defs) {
                auto mt = map.map.find(dname);
                if (mt == map.map.end()) continue;
                const auto &td = atlas.defs(mid);
                auto dt = td.find(mt->second);
                if (dt == td.end() || !(apply_renaming(def.expansion(), map) == dt->second.expansion()))
                    out.relation_failures.push_back(tag + ": definition " + dname + " does not rename onto " + mt->second);
            }
        }
    for (auto &s : out.scripts)
        for (const auto &f : out.relation_failures) s.notes.push_back(f);
    return out;
}

} // namespace dt
