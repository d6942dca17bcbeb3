#include "dtwist/pi1.hpp"

#include <algorithm>
#include <sstream>

#include "dtwist/error.hpp"
#include "dtwist/homology.hpp"

namespace dt {

using nlohmann::json;

FreeWord free_reduce(const FreeWord &w) {
    FreeWord out;
    out.reserve(w.size());
    for (int g : w) {
        if (!out.empty() && out.back() == -g)
            out.pop_back();
        else
            out.push_back(g);
    }
    return out;
}

FreeWord free_invert(const FreeWord &w) {
    FreeWord out(w.rbegin(), w.rend());
    for (int &g : out) g = -g;
    return out;
}

Automorphism Automorphism::identity(std::size_t rank) {
    Automorphism f;
    for (std::size_t i = 0; i < rank; ++i) f.images.push_back({static_cast<int>(i + 1)});
    f.inverse_images = f.images;
    return f;
}

namespace {

FreeWord substitute(const std::vector<FreeWord> &img, const FreeWord &w) {
    FreeWord out;
    for (int g : w) {
        std::size_t i = static_cast<std::size_t>(g > 0 ? g : -g) - 1;
        if (i >= img.size()) fail(ErrorKind::MissingTableEntry, "generator index " + std::to_string(i + 1));
        if (g > 0)
            out.insert(out.end(), img[i].begin(), img[i].end());
        else {
            auto inv = free_invert(img[i]);
            out.insert(out.end(), inv.begin(), inv.end());
        }
    }
    return free_reduce(out);
}

} // namespace

FreeWord Automorphism::apply(const FreeWord &w) const { return substitute(images, w); }

Automorphism compose(const Automorphism &f, const Automorphism &g) {
    if (f.rank() != g.rank()) fail(ErrorKind::MissingTableEntry, "composing automorphisms of different rank");
    Automorphism h;
    for (const auto &x : g.images) h.images.push_back(substitute(f.images, x));
    // (f g)^-1 = g^-1 f^-1
    for (const auto &x : f.inverse_images) h.inverse_images.push_back(substitute(g.inverse_images, x));
    return h;
}

bool equal_automorphisms(const Automorphism &f, const Automorphism &g) { return f.images == g.images; }

FreeWord TwistTable::parse(const std::string &text) const {
    FreeWord out;
    std::istringstream is(text);
    std::string tok;
    while (is >> tok) {
        if (tok == "1") continue;
        int sign = 1;
        while (!tok.empty() && tok.back() == '\'') {
            sign = -sign;
            tok.pop_back();
        }
        auto it = std::find(generators.begin(), generators.end(), tok);
        if (it == generators.end()) fail(ErrorKind::ParseError, "table " + id + ": unknown generator \"" + tok + "\"");
        out.push_back(sign * static_cast<int>(it - generators.begin() + 1));
    }
    return free_reduce(out);
}

std::string TwistTable::format(const FreeWord &w) const {
    if (w.empty()) return "1";
    std::string s;
    for (int g : w) {
        if (!s.empty()) s += ' ';
        s += generators.at(static_cast<std::size_t>(g > 0 ? g : -g) - 1);
        if (g < 0) s += '\'';
    }
    return s;
}

namespace {

std::vector<FreeWord> parse_images(const TwistTable &t, const json &lines, const std::string &where) {
    std::vector<FreeWord> img;
    for (std::size_t i = 0; i < t.generators.size(); ++i) img.push_back({static_cast<int>(i + 1)});
    for (const auto &l : lines) {
        auto s = l.get<std::string>();
        auto arrow = s.find("->");
        if (arrow == std::string::npos) fail(ErrorKind::ParseError, where + ": expected \"x -> w\", got \"" + s + "\"");
        FreeWord lhs = t.parse(s.substr(0, arrow));
        if (lhs.size() != 1 || lhs[0] < 0) fail(ErrorKind::ParseError, where + ": left of -> must be one generator");
        img[static_cast<std::size_t>(lhs[0]) - 1] = t.parse(s.substr(arrow + 2));
    }
    return img;
}

} // namespace

std::vector<std::string> twist_table_ids(const Atlas &atlas) {
    std::vector<std::string> ids;
    for (const auto &[k, v] : atlas.pi1_tables.items()) ids.push_back(k);
    return ids;
}

TwistTable load_twist_table(const Atlas &atlas, const std::string &id) {
    if (!atlas.pi1_tables.contains(id)) fail(ErrorKind::MissingTableEntry, "no pi1 table " + id);
    const json &j = atlas.pi1_tables.at(id);
    TwistTable t;
    t.id = id;
    try {
        t.model = j.at("model").get<std::string>();
        const auto &m = atlas.model(t.model);
        t.generators = j.at("generators").get<std::vector<std::string>>();
        t.loops = t.generators.size();
        for (const auto &a : j.value("arcs", std::vector<std::string>{})) t.generators.push_back(a);
        for (const auto &f : j.value("fixed", std::vector<std::string>{})) t.fixed.push_back(t.parse(f));
        t.abelianization = IMatrix::Zero(m.rank(), static_cast<Eigen::Index>(t.loops));
        for (std::size_t i = 0; i < t.loops; ++i) {
            auto v = j.at("abelianization").at(t.generators[i]).get<std::vector<long long>>();
            if (v.size() != static_cast<std::size_t>(m.rank()))
                fail(ErrorKind::ParseError, "table " + id + ": abelianization of " + t.generators[i] + " has wrong length");
            for (std::size_t r = 0; r < v.size(); ++r)
                t.abelianization(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(i)) = Int(v[r]);
        }
        for (const auto &b : j.value("blocks", json::array()))
            t.blocks.emplace_back(parse_word(b.at("from").get<std::string>()), parse_word(b.at("to").get<std::string>()));
        for (const auto &[name, e] : j.at("twists").items()) {
            if (!atlas.has_curve(t.model, name)) fail(ErrorKind::DanglingReference, "table " + id + ": unknown curve " + name);
            Automorphism f;
            f.images = parse_images(t, e.at("images"), id + "/" + name);
            f.inverse_images = parse_images(t, e.at("inverse"), id + "/" + name);
            t.twists.emplace(name, std::move(f));
        }
    } catch (const json::exception &e) {
        fail(ErrorKind::ParseError, "table " + id + ": " + e.what());
    }
    return t;
}

Word substitute_blocks(const Word &w, const TwistTable &t) {
    Word cur = w;
    for (const auto &[from, to] : t.blocks) {
        if (from.empty()) continue;
        Word out;
        for (std::size_t i = 0; i < cur.size();) {
            if (matches_at(cur, i, from)) {
                out.insert(out.end(), to.begin(), to.end());
                i += from.size();
            } else if (matches_at(cur, i, invert(from))) {
                auto inv = invert(to);
                out.insert(out.end(), inv.begin(), inv.end());
                i += from.size();
            } else {
                out.push_back(cur[i++]);
            }
        }
        cur = std::move(out);
    }
    return cur;
}

Automorphism apply_word_pi1(const Word &w, const TwistTable &t, const DefinitionSet &defs) {
    Word e = substitute_blocks(expand_definitions(w, defs), t);
    Automorphism f = Automorphism::identity(t.generators.size());
    for (const auto &l : e) {
        auto it = t.twists.find(l.sym);
        if (it == t.twists.end()) fail(ErrorKind::MissingTableEntry, "no pi1 entry for " + l.sym + " in table " + t.id);
        f = compose(f, l.sign > 0 ? it->second : it->second.inverse());
    }
    return f;
}

IMatrix abelianize(const Automorphism &f, const TwistTable &t) {
    auto k = static_cast<Eigen::Index>(t.loops);
    IMatrix M = IMatrix::Zero(k, k);
    for (Eigen::Index c = 0; c < k; ++c)
        for (int g : f.images[static_cast<std::size_t>(c)]) {
            auto r = static_cast<Eigen::Index>(g > 0 ? g : -g) - 1;
            if (r >= k) fail(ErrorKind::MissingTableEntry, "loop image runs through an arc generator");
            M(r, c) += Int(g > 0 ? 1 : -1);
        }
    return M;
}

TableCheck verify_twist_table(const TwistTable &t, const Atlas &atlas) {
    TableCheck out;
    const auto id = Automorphism::identity(t.generators.size());
    for (const auto &[name, f] : t.twists) {
        std::string tag = t.id + "/" + name;
        if (!equal_automorphisms(compose(f, f.inverse()), id) || !equal_automorphisms(compose(f.inverse(), f), id))
            out.violations.push_back(tag + ": declared inverse is not inverse");
        if (!atlas.is_boundary(t.model, name))
            for (const auto &w : t.fixed)
                if (f.apply(w) != w) out.violations.push_back(tag + ": moves " + t.format(w));
        try {
            IMatrix T = transvection(atlas, t.model, name, 1);
            if (!(t.abelianization * abelianize(f, t) == T * t.abelianization))
                out.violations.push_back(tag + ": abelianization differs from the transvection");
        } catch (const Error &e) {
            out.violations.push_back(tag + ": " + e.what());
        }
    }
    return out;
}

bool verify_section_relation_pi1(const Word &lhs, const Word &final_word, const TwistTable &t, const DefinitionSet &defs) {
    return equal_automorphisms(apply_word_pi1(lhs, t, defs), apply_word_pi1(final_word, t, defs));
}

std::string format_automorphism(const Automorphism &f, const TwistTable &t) {
    std::string s;
    for (std::size_t i = 0; i < f.images.size(); ++i)
        s += t.generators[i] + " -> " + t.format(f.images[i]) + "\n";
    return s;
}

} // namespace dt
