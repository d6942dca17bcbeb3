// Expands a derivation sketch into a fully explicit script.
//
// Sketch lines (# starts a comment):
//   id <id> | model <model> | lhs <word> | def <name> = <expansion> | budget <states> <depth>
//   commute i | braid i | cancel i | insert i <letter> | subst <relation> i <direction>
//   expand <name> i | fold <name> i | rotate k | move i j | reduce
//   goal <word>                  search the whole word
//   goalw i len <word>           search inside a window
//   expect <word>
//
// usage: dtwist_author [--atlas path] sketch out.script.json

#include <fstream>
#include <iostream>
#include <sstream>

#include "dtwist/relation.hpp"

using namespace dt;

namespace {

std::string rest_of(std::istringstream &is) {
    std::string s;
    std::getline(is, s);
    auto b = s.find_first_not_of(" \t");
    return b == std::string::npos ? std::string() : s.substr(b);
}

Direction direction(const std::string &s) {
    for (auto d : {Direction::Forward, Direction::Backward, Direction::ForwardInverse, Direction::BackwardInverse})
        if (s == to_string(d)) return d;
    fail(ErrorKind::ParseError, "direction " + s);
}

struct Author {
    const Atlas &atlas;
    DerivationScript script;
    std::unique_ptr<StepContext> ctx;
    Word cur;
    SearchBudget budget{4000000, 64};

    void push(DerivationStep s) {
        s.result = apply_rule(cur, s, *ctx);
        cur = s.result;
        script.steps.push_back(std::move(s));
    }

    void ready() {
        if (!ctx) {
            ctx = std::make_unique<StepContext>(atlas, script.model, script.defs, true);
            cur = script.lhs;
        }
    }

    void search(std::size_t pos, std::size_t len, const Word &target) {
        Word from = subword(cur, pos, len);
        auto res = search_elementary_path(from, target, budget, *ctx);
        if (res.status != SearchStatus::Found)
            fail(ErrorKind::BudgetExhausted, std::string("no path (") +
                                                 (res.status == SearchStatus::NotFound ? "exhausted" : "budget") +
                                                 ", " + std::to_string(res.states) + " states) from " +
                                                 format_word(from) + " to " + format_word(target));
        std::cerr << "    search: " << res.steps.size() << " steps, " << res.states << " states\n";
        for (auto s : res.steps) {
            s.position += pos;
            push(s);
        }
    }

    void line(const std::string &text) {
        std::istringstream is(text);
        std::string op;
        is >> op;
        if (op.empty() || op[0] == '#') return;
        std::size_t i = 0, j = 0;
        DerivationStep s;
        if (op == "id") {
            is >> script.id;
        } else if (op == "model") {
            is >> script.model;
        } else if (op == "lhs") {
            script.lhs = parse_word(rest_of(is));
        } else if (op == "def") {
            std::string name, eq;
            is >> name >> eq;
            script.defs.emplace(name, ConjugateDefinition::from_expansion(name, parse_word(rest_of(is))));
        } else if (op == "budget") {
            is >> budget.max_states >> budget.max_depth;
        } else {
            ready();
            if (op == "commute" || op == "cancel" || op == "braid") {
                is >> s.position;
                s.rule = op == "commute" ? Rule::Commute : op == "cancel" ? Rule::Cancel : Rule::Braid;
                push(s);
            } else if (op == "insert") {
                std::string l;
                is >> s.position >> l;
                s.rule = Rule::InsertPair;
                s.letter = parse_word(l).at(0);
                push(s);
            } else if (op == "subst") {
                std::string d;
                is >> s.relation >> s.position >> d;
                s.rule = Rule::SubstituteRelation;
                s.direction = direction(d);
                push(s);
            } else if (op == "expand" || op == "fold") {
                is >> s.name >> s.position;
                s.rule = op == "expand" ? Rule::ExpandDef : Rule::FoldDef;
                push(s);
            } else if (op == "rotate") {
                is >> s.shift;
                s.rule = Rule::CentralRotate;
                push(s);
            } else if (op == "move") {
                is >> i >> j;
                for (; i < j; ++i) push({Rule::Commute, i});
                for (; i > j; --i) push({Rule::Commute, i - 1});
            } else if (op == "reduce") {
                for (bool again = true; again;) {
                    again = false;
                    for (std::size_t p = 0; p + 1 < cur.size(); ++p)
                        if (cur[p].sym == cur[p + 1].sym && cur[p].sign == -cur[p + 1].sign) {
                            push({Rule::Cancel, p});
                            again = true;
                            break;
                        }
                }
            } else if (op == "goal") {
                search(0, cur.size(), parse_word(rest_of(is)));
            } else if (op == "goalw") {
                is >> i >> j;
                search(i, j, parse_word(rest_of(is)));
            } else if (op == "expect") {
                Word w = parse_word(rest_of(is));
                if (!(w == cur)) fail(ErrorKind::ResultMismatch, "expected " + format_word(w));
            } else {
                fail(ErrorKind::ParseError, "unknown sketch op " + op);
            }
        }
    }
};

void show(const Word &w) {
    for (std::size_t i = 0; i < w.size(); ++i) std::cerr << " " << i << ":" << format_letter(w[i]);
    std::cerr << "\n";
}

} // namespace

int main(int argc, char **argv) {
    std::string atlas_path = std::string(DTWIST_DATA_DIR) + "/atlas.json";
    std::vector<std::string> args(argv + 1, argv + argc);
    if (args.size() >= 2 && args[0] == "--atlas") {
        atlas_path = args[1];
        args.erase(args.begin(), args.begin() + 2);
    }
    if (args.size() != 2) {
        std::cerr << "usage: dtwist_author [--atlas path] sketch out.script.json\n";
        return 2;
    }
    Atlas atlas = load_atlas_file(atlas_path);
    Author a{atlas, {}, nullptr, {}};
    std::ifstream in(args[0]);
    if (!in) {
        std::cerr << "cannot read " << args[0] << "\n";
        return 2;
    }
    std::string text;
    int n = 0;
    while (std::getline(in, text)) {
        ++n;
        try {
            std::size_t before = a.script.steps.size();
            a.line(text);
            if (a.ctx && a.script.steps.size() != before) {
                std::cerr << n << ": " << text << "\n   ";
                show(a.cur);
            }
        } catch (const Error &e) {
            std::cerr << n << ": " << text << "\n  error: " << e.what() << "\n  word:";
            show(a.cur);
            return 1;
        }
    }
    a.ready();
    a.script.final_word = a.cur;
    auto rep = check_script(a.script, atlas);
    std::ofstream(args[1]) << script_to_json(a.script).dump(1) << "\n";
    std::cerr << a.script.steps.size() << " steps, " << (rep.accepted ? "accepted" : "REJECTED: " + rep.reason)
              << ", final " << format_word(a.cur) << " (" << a.cur.size() << ")\n";
    return rep.accepted ? 0 : 1;
}
