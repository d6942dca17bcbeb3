// Command-line front end: atlas validation, script checking, representations, fibration invariants.

#include <filesystem>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "dtwist/fibration.hpp"
#include "dtwist/homology.hpp"
#include "dtwist/pi1.hpp"
#include "dtwist/relation.hpp"

#ifndef DTWIST_DATA_DIR
#define DTWIST_DATA_DIR "data"
#endif

using nlohmann::json;
using namespace dt;

namespace {

struct Config {
    std::string atlas = std::string(DTWIST_DATA_DIR) + "/atlas.json";
    std::string scripts = std::string(DTWIST_DATA_DIR) + "/scripts";
    std::string fibrations = std::string(DTWIST_DATA_DIR) + "/fibrations.json";
    std::size_t budget_states = SearchBudget{}.max_states;
    std::size_t budget_depth = SearchBudget{}.max_depth;
    std::string format = "text";
    std::string model;
    bool cap = false;
};

bool as_json(const Config &c) { return c.format == "json"; }

void emit(const Config &c, const json &j, const std::string &text) {
    if (as_json(c))
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

json matrix_json(const IMatrix &M) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < M.rows(); ++i) {
        json r = json::array();
        for (Eigen::Index j = 0; j < M.cols(); ++j) r.push_back(M(i, j).value());
        rows.push_back(r);
    }
    return rows;
}

json report_json(const ScriptReport &r) {
    json j{{"id", r.id}, {"accepted", r.accepted}};
    if (r.accepted) {
        j["final"] = format_word(r.final_word);
        j["length"] = r.final_length;
        j["all_positive"] = r.all_positive;
        j["no_boundary_parallel"] = r.no_boundary_parallel;
    } else {
        j["failed_step"] = r.failed_step ? json(*r.failed_step) : json(nullptr);
        j["error"] = to_string(r.error);
        j["reason"] = r.reason;
    }
    return j;
}

std::string report_text(const ScriptReport &r) {
    std::ostringstream os;
    if (r.accepted)
        os << r.id << ": accepted, " << r.final_length << " letters, "
           << (r.all_positive ? "all right-handed" : "has left-handed letters") << ", "
           << (r.no_boundary_parallel ? "no boundary-parallel curves" : "has boundary-parallel curves") << "\n"
           << "  " << format_word(r.final_word) << "\n";
    else
        os << r.id << ": rejected" << (r.failed_step ? " at step " + std::to_string(*r.failed_step) : std::string())
           << " [" << to_string(r.error) << "] " << r.reason << "\n";
    return os.str();
}

std::string default_model(const Config &c, const std::string &fallback) { return c.model.empty() ? fallback : c.model; }

int cmd_validate(const Config &c) {
    Atlas a = load_atlas_file(c.atlas);
    auto rep = validate_atlas(a);
    std::vector<std::string> v = rep.violations;
    for (const auto &id : twist_table_ids(a)) {
        auto t = load_twist_table(a, id);
        for (const auto &x : verify_twist_table(t, a).violations) v.push_back("pi1: " + x);
        for (const auto &[mid, rels] : a.relations)
            for (const auto &[rid, rel] : rels) {
                if (mid != t.model) continue;
                bool covered = true;
                for (const auto &w : {rel.lhs, rel.rhs})
                    for (const auto &l : substitute_blocks(expand_definitions(w, a.defs(mid)), t))
                        if (!t.has(l.sym)) covered = false;
                if (covered && !verify_section_relation_pi1(rel.lhs, rel.rhs, t, a.defs(mid)))
                    v.push_back("pi1: relation " + mid + "/" + rid + " fails on the free group");
            }
    }
    std::size_t n_rel = 0;
    for (const auto &[m, r] : a.relations) n_rel += r.size();
    json j{{"ok", v.empty()}, {"violations", v}, {"models", a.models.size()}, {"relations", n_rel}};
    std::ostringstream os;
    os << "atlas: " << a.models.size() << " models, " << n_rel << " relations\n";
    for (const auto &x : v) os << "  violation: " << x << "\n";
    os << (v.empty() ? "ok\n" : "FAILED\n");
    emit(c, j, os.str());
    return v.empty() ? 0 : 1;
}

int cmd_check(const Config &c, const std::string &path) {
    Atlas a = load_atlas_file(c.atlas);
    auto s = load_script_file(path);
    auto r = check_script(s, a);
    emit(c, report_json(r), report_text(r));
    return r.accepted ? 0 : 1;
}

int cmd_check_all(const Config &c) {
    Atlas a = load_atlas_file(c.atlas);
    auto scripts = load_scripts_dir(c.scripts);
    auto sum = verify_shipped_scripts(a, scripts);
    json j{{"all_passed", sum.all_passed()}, {"scripts", json::array()}, {"relation_failures", sum.relation_failures}};
    std::ostringstream os;
    std::size_t accepted = 0;
    for (const auto &s : sum.scripts) {
        accepted += s.report.accepted;
        json e = report_json(s.report);
        e["model"] = s.model;
        e["sections"] = s.boundary_count;
        e["homology_identity"] = s.homology_identity;
        e["capped_identity"] = s.capped_identity;
        e["passed"] = s.passed();
        j["scripts"].push_back(e);
        os << report_text(s.report);
        if (s.report.accepted)
            os << "  homology " << (s.homology_identity ? "identity" : "NOT identity") << ", capped "
               << (s.capped_identity ? "I4" : "NOT I4") << "\n";
    }
    for (const auto &f : sum.relation_failures) os << "relation failure: " << f << "\n";
    os << accepted << "/" << sum.scripts.size() << " accepted" << (sum.all_passed() ? "" : ", FAILED") << "\n";
    j["accepted"] = accepted;
    emit(c, j, os.str());
    return sum.all_passed() ? 0 : 1;
}

int cmd_search(const Config &c, const std::string &from, const std::string &to) {
    Atlas a = load_atlas_file(c.atlas);
    StepContext ctx(a, default_model(c, "S2_1"));
    auto res = search_elementary_path(parse_word(from), parse_word(to), {c.budget_states, c.budget_depth}, ctx);
    const char *status = res.status == SearchStatus::Found ? "found"
                         : res.status == SearchStatus::NotFound ? "not-found"
                                                                : "budget-exhausted";
    json j{{"status", status}, {"states", res.states}, {"steps", json::array()}};
    std::ostringstream os;
    os << status << " (" << res.states << " states, " << res.steps.size() << " steps)\n";
    for (const auto &s : res.steps) {
        j["steps"].push_back(step_to_json(s));
        os << "  " << to_string(s.rule) << " @" << s.position << ": " << format_word(s.result) << "\n";
    }
    emit(c, j, os.str());
    return res.status == SearchStatus::Found ? 0 : 1;
}

int cmd_homology(const Config &c, const std::string &word) {
    Atlas a = load_atlas_file(c.atlas);
    auto mid = default_model(c, "S2");
    Word w = parse_word(word);
    IMatrix M = c.cap ? cap_boundaries(w, a, mid) : evaluate_word(w, a, mid);
    json j{{"model", mid}, {"capped", c.cap}, {"identity", is_identity(M)}, {"matrix", matrix_json(M)}};
    emit(c, j, format_matrix(M));
    return 0;
}

int cmd_pi1(const Config &c, const std::string &path) {
    Atlas a = load_atlas_file(c.atlas);
    auto s = load_script_file(path);
    auto r = check_script(s, a);
    std::string table;
    for (const auto &id : twist_table_ids(a))
        if (load_twist_table(a, id).model == s.model) table = id;
    if (table.empty()) fail(ErrorKind::MissingTableEntry, "no pi1 table for model " + s.model);
    auto t = load_twist_table(a, table);
    DefinitionSet defs = a.defs(s.model);
    for (const auto &[k, v] : s.defs) defs.insert_or_assign(k, v);
    bool ok = verify_section_relation_pi1(s.lhs, s.final_word, t, defs);
    json j{{"id", s.id}, {"table", table}, {"accepted", r.accepted}, {"equal", ok}};
    std::ostringstream os;
    os << s.id << ": " << format_word(s.lhs) << " "
       << (ok ? "equals" : "differs from") << " the final word on the free group (table " << table << ")\n";
    emit(c, j, os.str());
    return ok ? 0 : 1;
}

std::string rational_text(const Rational &r) {
    return r.integral() ? std::to_string(r.num) : std::to_string(r.num) + "/" + std::to_string(r.den);
}

int cmd_invariants(const Config &c, const std::string &word) {
    Atlas a = load_atlas_file(c.atlas);
    Factorization f;
    f.model = default_model(c, "S2");
    f.word = parse_word(word);
    auto inv = invariants(f, a);
    json j = to_json(inv);
    std::ostringstream os;
    os << "s=" << inv.s << " n0=" << inv.n0 << " s1=" << inv.s1 << " euler=" << inv.euler << " signature="
       << rational_text(inv.signature);
    auto hint = total_space_hint(inv.euler, inv.signature);
    os << " total_space=" << (hint ? *hint : std::string("unknown")) << "\n";
    emit(c, j, os.str());
    return 0;
}

int cmd_fibersum(const Config &c, int p, int q, int r) {
    Atlas a = load_atlas_file(c.atlas);
    auto scripts = load_scripts_dir(c.scripts);
    auto fibs = load_fibrations(read_json_file(c.fibrations), a, scripts);
    for (const char *k : {"A", "B", "C"})
        if (!fibs.count(k)) fail(ErrorKind::DanglingReference, std::string("fibration ") + k + " missing");
    auto rep = chakiris_section_report(p, q, r, fibs.at("A"), fibs.at("B"), fibs.at("C"), a);
    json j = to_json(rep.sum.invariants);
    j["p"] = p;
    j["q"] = q;
    j["r"] = r;
    j["section"] = {{"count", rep.section.count}, {"square", rep.section.square}};
    std::ostringstream os;
    os << "p=" << p << " q=" << q << " r=" << r << ": euler=" << rep.sum.invariants.euler
       << " signature=" << rational_text(rep.sum.invariants.signature)
       << " sections=" << rep.section.count << " of square " << rep.section.square << "\n";
    emit(c, j, os.str());
    return 0;
}

int exit_code(ErrorKind k) {
    switch (k) {
    case ErrorKind::ParseError:
    case ErrorKind::DanglingReference:
    case ErrorKind::UnknownCurve:
    case ErrorKind::UnknownDefinition:
    case ErrorKind::RecursiveDefinition:
    case ErrorKind::UnmappedCurve:
    case ErrorKind::EmptySum:
    case ErrorKind::MissingTableEntry: return 2;
    default: return 1;
    }
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Dehn twist relation checker for genus-2 surfaces with boundary"};
    app.require_subcommand(1);
    Config c;
    app.add_option("--atlas", c.atlas, "atlas document")->check(CLI::ExistingFile);
    app.add_option("--scripts", c.scripts, "directory of *.script.json")->check(CLI::ExistingDirectory);
    app.add_option("--fibrations", c.fibrations, "fibration document")->check(CLI::ExistingFile);
    app.add_option("--budget-states", c.budget_states, "search state limit")->check(CLI::PositiveNumber);
    app.add_option("--budget-depth", c.budget_depth, "search depth limit")->check(CLI::PositiveNumber);
    app.add_option("--format", c.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--model", c.model, "surface model id");

    std::string a1, a2;
    int p = 0, q = 0, r = 0;
    auto *validate = app.add_subcommand("validate-atlas", "validate the atlas and pi1 tables");
    auto *check = app.add_subcommand("check", "check one derivation script");
    check->add_option("script", a1)->required()->check(CLI::ExistingFile);
    auto *check_all = app.add_subcommand("check-all", "check every shipped script");
    auto *search = app.add_subcommand("search", "commute/braid path between two words");
    search->add_option("from", a1)->required();
    search->add_option("to", a2)->required();
    auto *hom = app.add_subcommand("homology", "transvection image of a word");
    hom->add_option("word", a1)->required();
    hom->add_flag("--cap", c.cap, "project to the closed surface");
    auto *pi1 = app.add_subcommand("pi1-verify", "compare a script's two sides on the free group");
    pi1->add_option("script", a1)->required()->check(CLI::ExistingFile);
    auto *inv = app.add_subcommand("invariants", "Euler characteristic and signature of a monodromy word");
    inv->add_option("word", a1)->required();
    auto *fs = app.add_subcommand("fibersum", "sections of a fiber sum of p A's, q B's, r C's");
    fs->add_option("p", p)->required()->check(CLI::NonNegativeNumber);
    fs->add_option("q", q)->required()->check(CLI::NonNegativeNumber);
    fs->add_option("r", r)->required()->check(CLI::NonNegativeNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return 2;
    }
    try {
        if (*validate) return cmd_validate(c);
        if (*check) return cmd_check(c, a1);
        if (*check_all) return cmd_check_all(c);
        if (*search) return cmd_search(c, a1, a2);
        if (*hom) return cmd_homology(c, a1);
        if (*pi1) return cmd_pi1(c, a1);
        if (*inv) return cmd_invariants(c, a1);
        if (*fs) return cmd_fibersum(c, p, q, r);
    } catch (const Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code(e.kind());
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
