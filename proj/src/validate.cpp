#include <set>
#include <sstream>

#include "dtwist/atlas.hpp"
#include "dtwist/error.hpp"
#include "dtwist/homology.hpp"

namespace dt {

namespace {

std::string vec_str(const IVector &v) {
    std::ostringstream os;
    os << '[';
    for (Eigen::Index i = 0; i < v.size(); ++i) os << (i ? "," : "") << v(i);
    os << ']';
    return os.str();
}

void check_model(const Atlas &a, const SurfaceModel &m, std::vector<std::string> &out) {
    IMatrix J = intersection_form(m);
    IVector sum = IVector::Zero(m.rank());
    std::set<std::string> bset(m.boundary_curves.begin(), m.boundary_curves.end());
    for (const auto &d : m.boundary_curves) {
        const auto &c = a.curve(m.id, d);
        if (!c.boundary_parallel) out.push_back("boundary-flag: " + m.id + "/" + d + " is not flagged boundary-parallel");
        sum += c.homology;
    }
    if (!sum.isZero()) out.push_back("delta-sum: " + m.id + " boundary classes sum to " + vec_str(sum));
    auto it = a.curves.find(m.id);
    if (it == a.curves.end()) return;
    for (const auto &[name, c] : it->second) {
        if (c.boundary_parallel && !bset.count(name))
            out.push_back("boundary-flag: " + m.id + "/" + name + " flagged but not a boundary curve of the model");
        if (c.boundary_parallel && !(J * c.homology).isZero())
            out.push_back("boundary-pairing: " + m.id + "/" + name + " pairs nontrivially");
    }
}

void check_intersections(const Atlas &a, const std::string &mid, const IntersectionTable &t,
                         std::vector<std::string> &out) {
    const auto &m = a.model(mid);
    IMatrix J = intersection_form(m);
    const auto &defs = a.defs(mid);
    for (const auto &[k, i] : t.pairs()) {
        std::string tag = mid + " (" + k.first + "," + k.second + ")";
        if (k.first == k.second && i != 0) out.push_back("self-intersection: " + tag + " must be 0");
        if (i < 0) out.push_back("negative: " + tag);
        IVector x = letter_class({k.first, 1}, a, mid, defs);
        IVector y = letter_class({k.second, 1}, a, mid, defs);
        long long p = pairing<Int>(x, y, J).value();
        long long ap = p < 0 ? -p : p;
        if (ap > i) out.push_back("bound: " + tag + " |<a,b>| = " + std::to_string(ap) + " > i = " + std::to_string(i));
        if ((ap - i) % 2 != 0)
            out.push_back("parity: " + tag + " <a,b> = " + std::to_string(p) + " but i = " + std::to_string(i));
    }
}

void check_renaming(const Atlas &a, const RenamingMap &r, std::vector<std::string> &out) {
    std::set<std::string> images;
    auto known = [&](const std::string &model, const std::string &s) {
        return a.has_curve(model, s) || a.defs(model).count(s);
    };
    for (const auto &[k, v] : r.map) {
        if (!known(r.source, k)) out.push_back("renaming " + r.id + ": unknown source curve " + k);
        if (!known(r.target, v)) out.push_back("renaming " + r.id + ": unknown target curve " + v);
        if (!images.insert(v).second) out.push_back("renaming " + r.id + ": not injective at " + v);
        if (a.is_boundary(r.source, k) && !a.has_curve(r.target, v))
            out.push_back("renaming " + r.id + ": boundary " + k + " must map to a curve");
    }
    for (const auto &[k1, v1] : r.map)
        for (const auto &[k2, v2] : r.map) {
            if (!(k1 < k2)) continue;
            auto s = a.intersection(r.source, k1, k2), t = a.intersection(r.target, v1, v2);
            if (s && t && *s != *t)
                out.push_back("renaming " + r.id + ": i(" + k1 + "," + k2 + ") = " + std::to_string(*s) + " but i(" + v1 +
                              "," + v2 + ") = " + std::to_string(*t));
        }
    auto sd = a.defs(r.source);
    for (const auto &[name, def] : sd) {
        auto it = r.map.find(name);
        if (it == r.map.end()) continue;
        const auto &td = a.defs(r.target);
        auto jt = td.find(it->second);
        if (jt == td.end()) continue;
        bool mapped = true;
        for (const auto &l : def.expansion())
            if (!r.map.count(l.sym)) mapped = false;
        if (mapped && !(apply_renaming(def.expansion(), r) == jt->second.expansion()))
            out.push_back("renaming " + r.id + ": definition " + name + " does not map onto " + it->second);
    }
}

} // namespace

ValidationReport validate_atlas(const Atlas &atlas) {
    ValidationReport rep;
    for (const auto &[id, m] : atlas.models) check_model(atlas, m, rep.violations);
    for (const auto &[mid, t] : atlas.intersections) check_intersections(atlas, mid, t, rep.violations);
    for (const auto &[id, r] : atlas.renamings) check_renaming(atlas, r, rep.violations);
    for (const auto &[mid, rels] : atlas.relations)
        for (const auto &[id, rel] : rels) {
            try {
                if (!check_relation_homology(rel, atlas))
                    rep.violations.push_back("relation: " + mid + "/" + id + " fails under transvections");
            } catch (const Error &e) {
                rep.violations.push_back("relation: " + mid + "/" + id + ": " + e.what());
            }
        }
    return rep;
}

} // namespace dt
