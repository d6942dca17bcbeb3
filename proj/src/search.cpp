#include <unordered_map>

#include "dtwist/relation.hpp"

namespace dt {

namespace {

struct Node {
    std::string parent;
    DerivationStep step; // applied to parent, yields this node
    std::size_t depth = 0;
};

std::string key_of(const Word &w) { return format_word(w); }

// Moves in rule order, then position ascending.
std::vector<DerivationStep> moves(const Word &w, bool allow_cancel, const StepContext &ctx) {
    std::vector<DerivationStep> out;
    for (std::size_t p = 0; p + 1 < w.size(); ++p) {
        if (w[p] == w[p + 1]) continue;
        if (w[p].sym == w[p + 1].sym) continue; // inverse pairs: cancel, not commute
        if (!ctx.commute_licensed(w[p], w[p + 1])) continue;
        DerivationStep s;
        s.rule = Rule::Commute;
        s.position = p;
        s.result = w;
        std::swap(s.result[p], s.result[p + 1]);
        out.push_back(std::move(s));
    }
    for (std::size_t p = 0; p + 2 < w.size(); ++p) {
        const auto &a = w[p], &b = w[p + 1], &c = w[p + 2];
        if (a.sym != c.sym || a.sym == b.sym) continue;
        bool cube = a.sign == c.sign && b.sign == a.sign;
        bool conj = a.sign == -c.sign;
        if (!cube && !conj) continue;
        if (ctx.support(a.sym).size() != 1 || ctx.support(b.sym).size() != 1) continue;
        if (!ctx.braid_licensed(a.sym, b.sym)) continue;
        DerivationStep s;
        s.rule = Rule::Braid;
        s.position = p;
        s.form = cube ? BraidForm::Cube : BraidForm::Conj;
        s.result = apply_rule(w, s, ctx);
        out.push_back(std::move(s));
    }
    if (allow_cancel)
        for (std::size_t p = 0; p + 1 < w.size(); ++p) {
            if (w[p].sym != w[p + 1].sym || w[p].sign != -w[p + 1].sign) continue;
            DerivationStep s;
            s.rule = Rule::Cancel;
            s.position = p;
            s.result = splice(w, p, 2, {});
            out.push_back(std::move(s));
        }
    return out;
}

std::vector<DerivationStep> chain_back(const std::unordered_map<std::string, Node> &tree, const std::string &start,
                                       const std::string &root) {
    std::vector<DerivationStep> rev;
    for (std::string k = start; k != root;) {
        const Node &n = tree.at(k);
        rev.push_back(n.step);
        k = n.parent;
    }
    return {rev.rbegin(), rev.rend()};
}

void replay(const Word &from, const std::vector<DerivationStep> &steps, const StepContext &ctx) {
    Word cur = from;
    for (const auto &s : steps) {
        auto o = check_step(cur, s, ctx);
        if (!o.ok) fail(o.error, "search produced an unsound step: " + o.reason);
        cur = s.result;
    }
}

SearchResult bidirectional(const Word &from, const Word &to, const SearchBudget &budget, const StepContext &ctx) {
    SearchResult res;
    const std::string kf = key_of(from), kt = key_of(to);
    std::unordered_map<std::string, Node> fwd, bwd;
    std::unordered_map<std::string, Word> words;
    fwd[kf] = {};
    bwd[kt] = {};
    words[kf] = from;
    words[kt] = to;
    std::vector<std::string> ff{kf}, fb{kt};
    std::size_t df = 0, db = 0;
    while (!ff.empty() && !fb.empty()) {
        if (df + db >= budget.max_depth) {
            res.status = SearchStatus::BudgetExhausted;
            break;
        }
        bool forward = ff.size() <= fb.size();
        auto &tree = forward ? fwd : bwd;
        auto &other = forward ? bwd : fwd;
        auto &frontier = forward ? ff : fb;
        std::vector<std::string> next;
        for (const auto &k : frontier) {
            Word w = words.at(k);
            for (auto &s : moves(w, false, ctx)) {
                std::string kv = key_of(s.result);
                if (tree.count(kv)) continue;
                Node n{k, s, tree.at(k).depth + 1};
                words.emplace(kv, s.result);
                tree.emplace(kv, std::move(n));
                if (other.count(kv)) {
                    res.status = SearchStatus::Found;
                    res.steps = chain_back(fwd, kv, kf);
                    // Walk the backward tree; every move is an involution on its window.
                    for (std::string k2 = kv; k2 != kt;) {
                        const Node &bn = bwd.at(k2);
                        DerivationStep s2 = bn.step;
                        s2.result = words.at(bn.parent);
                        res.steps.push_back(s2);
                        k2 = bn.parent;
                    }
                    res.states = fwd.size() + bwd.size();
                    replay(from, res.steps, ctx);
                    return res;
                }
                next.push_back(kv);
                if (fwd.size() + bwd.size() > budget.max_states) {
                    res.status = SearchStatus::BudgetExhausted;
                    res.states = fwd.size() + bwd.size();
                    return res;
                }
            }
        }
        frontier = std::move(next);
        (forward ? df : db) += 1;
    }
    if (res.status != SearchStatus::BudgetExhausted) res.status = SearchStatus::NotFound;
    res.states = fwd.size() + bwd.size();
    return res;
}

SearchResult forward_only(const Word &from, const Word &to, const SearchBudget &budget, const StepContext &ctx) {
    SearchResult res;
    const std::string kf = key_of(from), kt = key_of(to);
    std::unordered_map<std::string, Node> tree;
    std::unordered_map<std::string, Word> words;
    tree[kf] = {};
    words[kf] = from;
    std::vector<std::string> frontier{kf};
    std::size_t depth = 0;
    while (!frontier.empty()) {
        if (depth >= budget.max_depth) {
            res.status = SearchStatus::BudgetExhausted;
            break;
        }
        std::vector<std::string> next;
        for (const auto &k : frontier) {
            Word w = words.at(k);
            for (auto &s : moves(w, true, ctx)) {
                if (s.result.size() < to.size()) continue;
                std::string kv = key_of(s.result);
                if (tree.count(kv)) continue;
                words.emplace(kv, s.result);
                tree.emplace(kv, Node{k, s, depth + 1});
                if (kv == kt) {
                    res.status = SearchStatus::Found;
                    res.steps = chain_back(tree, kv, kf);
                    res.states = tree.size();
                    replay(from, res.steps, ctx);
                    return res;
                }
                next.push_back(kv);
                if (tree.size() > budget.max_states) {
                    res.status = SearchStatus::BudgetExhausted;
                    res.states = tree.size();
                    return res;
                }
            }
        }
        frontier = std::move(next);
        ++depth;
    }
    if (res.status != SearchStatus::BudgetExhausted) res.status = SearchStatus::NotFound;
    res.states = tree.size();
    return res;
}

} // namespace

SearchResult search_elementary_path(const Word &from, const Word &to, const SearchBudget &budget,
                                    const StepContext &ctx) {
    for (const auto &w : {from, to})
        for (const auto &l : w)
            if (!ctx.known_letter(l.sym)) fail(ErrorKind::UnknownCurve, l.sym);
    if (from == to) return {SearchStatus::Found, {}, 1};
    if (from.size() == to.size()) return bidirectional(from, to, budget, ctx);
    if (from.size() > to.size()) return forward_only(from, to, budget, ctx);
    return {SearchStatus::NotFound, {}, 0};
}

} // namespace dt
