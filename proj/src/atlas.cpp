#include "dtwist/atlas.hpp"

#include <fstream>
#include <sstream>

#include "dtwist/error.hpp"

namespace dt {

using nlohmann::json;

void IntersectionTable::set(const std::string &a, const std::string &b, int i) { pairs_[key(a, b)] = i; }

std::optional<int> IntersectionTable::get(const std::string &a, const std::string &b) const {
    auto it = pairs_.find(key(a, b));
    if (it == pairs_.end()) return std::nullopt;
    return it->second;
}

const SurfaceModel &Atlas::model(const std::string &id) const {
    auto it = models.find(id);
    if (it == models.end()) fail(ErrorKind::DanglingReference, "model " + id);
    return it->second;
}

bool Atlas::has_curve(const std::string &m, const std::string &name) const {
    auto it = curves.find(m);
    return it != curves.end() && it->second.count(name);
}

const CurveRecord &Atlas::curve(const std::string &m, const std::string &name) const {
    auto it = curves.find(m);
    if (it == curves.end()) fail(ErrorKind::UnknownCurve, m + "/" + name);
    auto jt = it->second.find(name);
    if (jt == it->second.end()) fail(ErrorKind::UnknownCurve, m + "/" + name);
    return jt->second;
}

const NamedRelation &Atlas::relation(const std::string &m, const std::string &id) const {
    auto it = relations.find(m);
    if (it != relations.end()) {
        auto jt = it->second.find(id);
        if (jt != it->second.end()) return jt->second;
    }
    fail(ErrorKind::DanglingReference, "relation " + m + "/" + id);
}

const RenamingMap &Atlas::renaming(const std::string &id) const {
    auto it = renamings.find(id);
    if (it == renamings.end()) fail(ErrorKind::DanglingReference, "renaming " + id);
    return it->second;
}

const DefinitionSet &Atlas::defs(const std::string &m) const {
    static const DefinitionSet empty;
    auto it = definitions.find(m);
    return it == definitions.end() ? empty : it->second;
}

std::optional<int> Atlas::intersection(const std::string &m, const std::string &a, const std::string &b) const {
    auto it = intersections.find(m);
    if (it == intersections.end()) return std::nullopt;
    return it->second.get(a, b);
}

bool Atlas::is_boundary(const std::string &m, const std::string &name) const {
    return has_curve(m, name) && curve(m, name).boundary_parallel;
}

CurvePredicate Atlas::curve_predicate(const std::string &m) const {
    return [this, m](const std::string &s) { return has_curve(m, s); };
}

json read_json_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::ParseError, "cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::exception &e) {
        fail(ErrorKind::ParseError, path + ": " + e.what());
    }
}

namespace {

template <class T>
T field(const json &j, const char *key, const std::string &where) {
    if (!j.is_object() || !j.contains(key)) fail(ErrorKind::ParseError, where + ": missing \"" + key + "\"");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception &e) {
        fail(ErrorKind::ParseError, where + ": field \"" + key + "\": " + e.what());
    }
}

Word word_field(const json &j, const char *key, const std::string &where) {
    return parse_word(field<std::string>(j, key, where));
}

void require_curves(const Atlas &a, const std::string &model, const Word &w, const std::string &where) {
    const auto &defs = a.defs(model);
    for (const auto &l : w)
        if (!a.has_curve(model, l.sym) && !defs.count(l.sym))
            fail(ErrorKind::DanglingReference, where + ": unknown curve " + model + "/" + l.sym);
}

} // namespace

Atlas load_atlas(const json &doc) {
    Atlas a;
    if (!doc.is_object()) fail(ErrorKind::ParseError, "atlas must be a JSON object");
    a.version = field<int>(doc, "atlas_version", "atlas");
    if (a.version != 1) fail(ErrorKind::ParseError, "unsupported atlas_version " + std::to_string(a.version));
    for (const char *k : {"models", "curves", "intersections", "renamings", "relations"})
        if (!doc.contains(k)) fail(ErrorKind::ParseError, std::string("atlas: missing \"") + k + "\"");

    for (const auto &m : doc.at("models")) {
        SurfaceModel s;
        s.id = field<std::string>(m, "id", "model");
        s.genus = field<int>(m, "genus", s.id);
        s.boundary_curves = field<std::vector<std::string>>(m, "boundary", s.id);
        s.boundary_count = static_cast<int>(s.boundary_curves.size());
        if (s.genus < 0) fail(ErrorKind::ParseError, s.id + ": negative genus");
        if (!a.models.emplace(s.id, s).second) fail(ErrorKind::ParseError, "duplicate model " + s.id);
    }

    for (const auto &[mid, list] : doc.at("curves").items()) {
        const SurfaceModel &m = a.model(mid);
        auto &dst = a.curves[mid];
        for (const auto &c : list) {
            CurveRecord r;
            r.model = mid;
            r.name = field<std::string>(c, "name", mid);
            r.boundary_parallel = c.value("boundary", false);
            auto cls = field<std::vector<long long>>(c, "class", mid + "/" + r.name);
            if (static_cast<int>(cls.size()) != m.rank())
                fail(ErrorKind::ParseError, mid + "/" + r.name + ": class length " + std::to_string(cls.size()) +
                                                ", rank " + std::to_string(m.rank()));
            r.homology = IVector(m.rank());
            for (int i = 0; i < m.rank(); ++i) r.homology(i) = cls[static_cast<std::size_t>(i)];
            r.pi1_twist = c.value("pi1", std::string());
            if (!dst.emplace(r.name, r).second) fail(ErrorKind::ParseError, "duplicate curve " + mid + "/" + r.name);
        }
    }
    for (const auto &[id, m] : a.models)
        for (const auto &d : m.boundary_curves)
            if (!a.has_curve(id, d)) fail(ErrorKind::DanglingReference, "boundary curve " + id + "/" + d);

    if (doc.contains("definitions")) {
        for (const auto &[mid, list] : doc.at("definitions").items()) {
            a.model(mid);
            for (const auto &d : list) {
                auto name = field<std::string>(d, "name", mid);
                if (a.has_curve(mid, name)) fail(ErrorKind::ParseError, "definition " + name + " collides with a curve");
                auto def = ConjugateDefinition::from_expansion(name, word_field(d, "expansion", mid + "/" + name));
                a.definitions[mid].emplace(name, def);
            }
        }
        for (const auto &[mid, defs] : a.definitions)
            for (const auto &[name, def] : defs) require_curves(a, mid, def.expansion(), "definition " + name);
    }

    for (const auto &[mid, list] : doc.at("intersections").items()) {
        a.model(mid);
        auto &t = a.intersections[mid];
        for (const auto &e : list) {
            if (!e.is_array() || e.size() != 3) fail(ErrorKind::ParseError, mid + ": intersection entries are [a, b, i]");
            auto x = e[0].get<std::string>(), y = e[1].get<std::string>();
            int i = e[2].get<int>();
            for (const auto &s : {x, y})
                if (!a.has_curve(mid, s) && !a.defs(mid).count(s))
                    fail(ErrorKind::DanglingReference, "intersection " + mid + "/" + s);
            if (t.get(x, y)) fail(ErrorKind::ParseError, "duplicate intersection " + mid + " " + x + " " + y);
            t.set(x, y, i);
        }
    }

    for (const auto &r : doc.at("renamings")) {
        RenamingMap m;
        m.id = field<std::string>(r, "id", "renaming");
        m.source = field<std::string>(r, "source", m.id);
        m.target = field<std::string>(r, "target", m.id);
        m.map = field<std::map<std::string, std::string>>(r, "map", m.id);
        a.model(m.source);
        a.model(m.target);
        if (!a.renamings.emplace(m.id, m).second) fail(ErrorKind::ParseError, "duplicate renaming " + m.id);
    }

    for (const auto &r : doc.at("relations")) {
        NamedRelation rel;
        rel.id = field<std::string>(r, "id", "relation");
        rel.model = field<std::string>(r, "model", rel.id);
        rel.kind = r.value("kind", std::string());
        a.model(rel.model);
        rel.lhs = word_field(r, "lhs", rel.id);
        rel.rhs = word_field(r, "rhs", rel.id);
        require_curves(a, rel.model, rel.lhs, "relation " + rel.id);
        require_curves(a, rel.model, rel.rhs, "relation " + rel.id);
        if (r.contains("derived_from")) {
            rel.derived_script = field<std::string>(r.at("derived_from"), "script", rel.id);
            rel.derived_renaming = field<std::string>(r.at("derived_from"), "renaming", rel.id);
            a.renaming(rel.derived_renaming);
        }
        if (!a.relations[rel.model].emplace(rel.id, rel).second)
            fail(ErrorKind::ParseError, "duplicate relation " + rel.model + "/" + rel.id);
    }

    if (doc.contains("pi1_tables")) a.pi1_tables = doc.at("pi1_tables");
    for (const auto &[mid, cs] : a.curves)
        for (const auto &[name, c] : cs) {
            if (c.pi1_twist.empty()) continue;
            auto slash = c.pi1_twist.find('/');
            if (slash == std::string::npos) fail(ErrorKind::ParseError, mid + "/" + name + ": pi1 reference needs table/entry");
            auto table = c.pi1_twist.substr(0, slash), entry = c.pi1_twist.substr(slash + 1);
            if (!a.pi1_tables.contains(table) || !a.pi1_tables[table]["twists"].contains(entry))
                fail(ErrorKind::DanglingReference, mid + "/" + name + ": pi1 entry " + c.pi1_twist);
        }
    return a;
}

Atlas load_atlas_file(const std::string &path) { return load_atlas(read_json_file(path)); }

Word apply_renaming(const Word &w, const RenamingMap &map) {
    Word out;
    out.reserve(w.size());
    for (const auto &l : w) {
        auto it = map.map.find(l.sym);
        if (it == map.map.end()) fail(ErrorKind::UnmappedCurve, l.sym + " under " + map.id);
        out.push_back({it->second, l.sign});
    }
    return out;
}

RenamingMap compose(const RenamingMap &first, const RenamingMap &second) {
    RenamingMap out;
    out.id = first.id + "+" + second.id;
    out.source = first.source;
    out.target = second.target;
    for (const auto &[k, v] : first.map) {
        auto it = second.map.find(v);
        if (it != second.map.end()) out.map[k] = it->second;
    }
    return out;
}

} // namespace dt
