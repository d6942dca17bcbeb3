#include "dtwist/relation.hpp"

#include <algorithm>
#include <set>

namespace dt {

const char *to_string(Rule r) {
    switch (r) {
    case Rule::Commute: return "Commute";
    case Rule::Braid: return "Braid";
    case Rule::Cancel: return "Cancel";
    case Rule::InsertPair: return "InsertPair";
    case Rule::SubstituteRelation: return "SubstituteRelation";
    case Rule::ExpandDef: return "ExpandDef";
    case Rule::FoldDef: return "FoldDef";
    case Rule::CentralRotate: return "CentralRotate";
    case Rule::Rename: return "Rename";
    }
    return "?";
}

const char *to_string(Direction d) {
    switch (d) {
    case Direction::Forward: return "forward";
    case Direction::Backward: return "backward";
    case Direction::ForwardInverse: return "forward-inverse";
    case Direction::BackwardInverse: return "backward-inverse";
    }
    return "?";
}

const char *to_string(BraidForm f) { return f == BraidForm::Cube ? "cube" : "conj"; }

StepContext::StepContext(const Atlas &atlas, std::string model, const DefinitionSet &script_defs, bool central)
    : atlas_(&atlas), model_(std::move(model)), defs_(atlas.defs(model_)), central_(central) {
    atlas.model(model_);
    for (const auto &[k, v] : script_defs) defs_.insert_or_assign(k, v);
}

bool StepContext::known_letter(const std::string &sym) const {
    return atlas_->has_curve(model_, sym) || defs_.count(sym);
}

bool StepContext::boundary(const std::string &sym) const { return atlas_->is_boundary(model_, sym); }

const std::vector<std::string> &StepContext::support(const std::string &sym) const {
    auto it = support_.find(sym);
    if (it != support_.end()) return it->second;
    std::vector<std::string> out;
    if (defs_.count(sym)) {
        Word e = expand_definitions({{sym, 1}}, defs_);
        std::set<std::string> s;
        for (const auto &l : e) s.insert(l.sym);
        out.assign(s.begin(), s.end());
    } else {
        out.push_back(sym);
    }
    return support_.emplace(sym, std::move(out)).first->second;
}

bool StepContext::commute_licensed(const Letter &x, const Letter &y, std::string *why) const {
    if (x.sym == y.sym) return true;
    if (boundary(x.sym) || boundary(y.sym)) return true;
    if (auto i = atlas_->intersection(model_, x.sym, y.sym)) {
        if (*i == 0) return true;
        if (why) *why = "i(" + x.sym + "," + y.sym + ") = " + std::to_string(*i);
        return false;
    }
    bool dx = defs_.count(x.sym), dy = defs_.count(y.sym);
    if (!dx && !dy) {
        if (why) *why = "no intersection recorded for (" + x.sym + "," + y.sym + ")";
        return false;
    }
    for (const auto &u : support(x.sym))
        for (const auto &v : support(y.sym)) {
            if (u == v) {
                if (why) *why = x.sym + " and " + y.sym + " share the curve " + u;
                return false;
            }
            if (boundary(u) || boundary(v)) continue;
            auto i = atlas_->intersection(model_, u, v);
            if (!i || *i != 0) {
                if (why)
                    *why = "(" + x.sym + "," + y.sym + ") needs i(" + u + "," + v + ") = 0, " +
                           (i ? "recorded " + std::to_string(*i) : std::string("not recorded"));
                return false;
            }
        }
    return true;
}

bool StepContext::braid_licensed(const std::string &x, const std::string &y, std::string *why) const {
    auto i = atlas_->intersection(model_, x, y);
    if (i && *i == 1) return true;
    if (why) *why = "braid needs i(" + x + "," + y + ") = 1, " + (i ? "recorded " + std::to_string(*i) : "not recorded");
    return false;
}

namespace {

void need(bool cond, ErrorKind k, const std::string &msg) {
    if (!cond) fail(k, msg);
}

void need_range(const Word &w, std::size_t pos, std::size_t len) {
    need(pos <= w.size() && len <= w.size() - pos, ErrorKind::PositionOutOfRange,
         "window " + std::to_string(pos) + "+" + std::to_string(len) + " in word of length " + std::to_string(w.size()));
}

std::optional<BraidForm> braid_form(const Letter &a, const Letter &b, const Letter &c) {
    if (a.sym != c.sym || a.sym == b.sym) return std::nullopt;
    if (a.sign == c.sign && b.sign == a.sign) return BraidForm::Cube;
    if (a.sign == -c.sign) return BraidForm::Conj;
    return std::nullopt;
}

Word braid_window(const Letter &x, const Letter &y, BraidForm f) {
    if (f == BraidForm::Cube) return {y, x, y};
    int e = x.sign;
    return {{y.sym, -e}, {x.sym, y.sign}, {y.sym, e}};
}

} // namespace

Word apply_rule(const Word &w, const DerivationStep &s, const StepContext &ctx) {
    const std::size_t p = s.position;
    switch (s.rule) {
    case Rule::Commute: {
        need_range(w, p, 2);
        std::string why;
        bool ok = ctx.commute_licensed(w[p], w[p + 1], &why);
        need(ok, ErrorKind::IllegalLicense, "commute: " + why);
        Word out = w;
        std::swap(out[p], out[p + 1]);
        return out;
    }
    case Rule::Braid: {
        need_range(w, p, 3);
        auto f = braid_form(w[p], w[p + 1], w[p + 2]);
        need(f.has_value(), ErrorKind::IllegalLicense, "braid: window is not x y x or x y x'");
        need(!s.form || *s.form == *f, ErrorKind::IllegalLicense, std::string("braid: window has form ") + to_string(*f));
        std::string why;
        bool ok = ctx.braid_licensed(w[p].sym, w[p + 1].sym, &why);
        need(ok, ErrorKind::IllegalLicense, why);
        return splice(w, p, 3, braid_window(w[p], w[p + 1], *f));
    }
    case Rule::Cancel: {
        need_range(w, p, 2);
        need(w[p].sym == w[p + 1].sym && w[p].sign == -w[p + 1].sign, ErrorKind::IllegalLicense,
             "cancel: not an inverse pair");
        return splice(w, p, 2, {});
    }
    case Rule::InsertPair: {
        need_range(w, p, 0);
        need(ctx.known_letter(s.letter.sym), ErrorKind::UnknownCurve, s.letter.sym);
        return splice(w, p, 0, {s.letter, s.letter.inverse()});
    }
    case Rule::SubstituteRelation: {
        const auto &rel = ctx.atlas().relation(ctx.model(), s.relation);
        Word from, to;
        switch (s.direction) {
        case Direction::Forward: from = rel.lhs, to = rel.rhs; break;
        case Direction::Backward: from = rel.rhs, to = rel.lhs; break;
        case Direction::ForwardInverse: from = invert(rel.lhs), to = invert(rel.rhs); break;
        case Direction::BackwardInverse: from = invert(rel.rhs), to = invert(rel.lhs); break;
        }
        need_range(w, p, from.size());
        need(matches_at(w, p, from), ErrorKind::IllegalLicense,
             "relation " + s.relation + " (" + to_string(s.direction) + ") does not match at " + std::to_string(p));
        return splice(w, p, from.size(), to);
    }
    case Rule::ExpandDef: {
        need_range(w, p, 1);
        auto it = ctx.defs().find(s.name);
        need(it != ctx.defs().end(), ErrorKind::UnknownDefinition, s.name);
        need(w[p].sym == s.name, ErrorKind::IllegalLicense, "expand: letter at " + std::to_string(p) + " is not " + s.name);
        Word e = it->second.expansion();
        return splice(w, p, 1, w[p].sign > 0 ? e : invert(e));
    }
    case Rule::FoldDef: {
        auto it = ctx.defs().find(s.name);
        need(it != ctx.defs().end(), ErrorKind::UnknownDefinition, s.name);
        Word e = it->second.expansion();
        need_range(w, p, e.size());
        if (matches_at(w, p, e)) return splice(w, p, e.size(), {{s.name, 1}});
        need(matches_at(w, p, invert(e)), ErrorKind::IllegalLicense, "fold: expansion of " + s.name + " not at " + std::to_string(p));
        return splice(w, p, e.size(), {{s.name, -1}});
    }
    case Rule::CentralRotate: {
        need(ctx.central(), ErrorKind::IllegalLicense, "rotation needs a central left-hand side");
        need(s.shift <= w.size(), ErrorKind::PositionOutOfRange, "rotation shift " + std::to_string(s.shift));
        Word out(w.begin() + static_cast<std::ptrdiff_t>(s.shift), w.end());
        out.insert(out.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(s.shift));
        return out;
    }
    case Rule::Rename: {
        const auto &m = ctx.atlas().renaming(s.map);
        need(m.source == ctx.model() && m.target == ctx.model(), ErrorKind::IllegalLicense,
             "rename inside a derivation needs a map from " + ctx.model() + " to itself");
        for (const auto &[k, v] : m.map) {
            bool same = ctx.atlas().has_curve(ctx.model(), k) && ctx.atlas().has_curve(ctx.model(), v) &&
                        ctx.atlas().curve(ctx.model(), k).homology == ctx.atlas().curve(ctx.model(), v).homology;
            need(same || k == v, ErrorKind::IllegalLicense, "rename: " + k + " -> " + v + " is not a synonym");
        }
        RenamingMap total = m;
        for (const auto &l : w) total.map.emplace(l.sym, l.sym);
        return apply_renaming(w, total);
    }
    }
    fail(ErrorKind::IllegalLicense, "unknown rule");
}

StepOutcome check_step(const Word &prev, const DerivationStep &step, const StepContext &ctx) {
    StepOutcome out;
    try {
        Word got = apply_rule(prev, step, ctx);
        if (!(got == step.result)) {
            out.ok = false;
            out.error = ErrorKind::ResultMismatch;
            out.reason = "expected \"" + format_word(got) + "\", script has \"" + format_word(step.result) + "\"";
        }
    } catch (const Error &e) {
        out.ok = false;
        out.error = e.kind();
        out.reason = e.what();
    }
    return out;
}

ScriptReport check_script(const DerivationScript &script, const Atlas &atlas) {
    ScriptReport rep;
    rep.id = script.id;
    auto reject = [&](std::optional<std::size_t> idx, ErrorKind k, const std::string &why) {
        rep.accepted = false;
        rep.failed_step = idx;
        rep.error = k;
        rep.reason = why;
        return rep;
    };
    try {
        const auto &m = atlas.model(script.model);
        std::multiset<std::string> want(m.boundary_curves.begin(), m.boundary_curves.end()), got;
        for (const auto &l : script.lhs) {
            if (l.sign != 1) return reject(std::nullopt, ErrorKind::IllegalLicense, "left-hand side must be positive");
            got.insert(l.sym);
        }
        if (want != got)
            return reject(std::nullopt, ErrorKind::IllegalLicense, "left-hand side must be the boundary multitwist");
        for (const auto &[name, def] : script.defs) {
            const auto &base = atlas.defs(script.model);
            auto it = base.find(name);
            if (it != base.end() && !(it->second.expansion() == def.expansion()))
                return reject(std::nullopt, ErrorKind::UnknownDefinition, "definition " + name + " conflicts with the atlas");
        }
        StepContext ctx(atlas, script.model, script.defs, true);
        Word cur = script.lhs;
        for (std::size_t i = 0; i < script.steps.size(); ++i) {
            auto o = check_step(cur, script.steps[i], ctx);
            if (!o.ok) return reject(i, o.error, o.reason);
            cur = script.steps[i].result;
        }
        if (!(cur == script.final_word))
            return reject(std::nullopt, ErrorKind::ResultMismatch,
                          "final word differs from last result \"" + format_word(cur) + "\"");
        rep.accepted = true;
        rep.final_word = cur;
        rep.final_length = cur.size();
        rep.all_positive = std::all_of(cur.begin(), cur.end(), [](const Letter &l) { return l.sign == 1; });
        rep.no_boundary_parallel =
            std::none_of(cur.begin(), cur.end(), [&](const Letter &l) { return ctx.boundary(l.sym); });
    } catch (const Error &e) {
        return reject(std::nullopt, e.kind(), e.what());
    }
    return rep;
}

} // namespace dt
