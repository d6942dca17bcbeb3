#include "dtwist/word.hpp"

#include <cctype>
#include <set>

#include "dtwist/error.hpp"

namespace dt {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    Word parse() {
        Word w = sequence();
        skip();
        if (i_ != s_.size()) error("unexpected '" + std::string(1, s_[i_]) + "'");
        return w;
    }

private:
    Word sequence() {
        Word out;
        for (;;) {
            skip();
            if (i_ >= s_.size() || s_[i_] == ')') return out;
            Word item = atom();
            item = exponent(item);
            out.insert(out.end(), item.begin(), item.end());
        }
    }

    Word atom() {
        char c = s_[i_];
        if (c == '(') {
            ++i_;
            Word inner = sequence();
            if (i_ >= s_.size() || s_[i_] != ')') error("missing ')'");
            ++i_;
            return inner;
        }
        if (c == '1' && (i_ + 1 == s_.size() || !ident_char(s_[i_ + 1]))) {
            ++i_;
            return {};
        }
        if (!ident_start(c)) error("bad token start '" + std::string(1, c) + "'");
        std::size_t b = i_;
        while (i_ < s_.size() && ident_char(s_[i_])) ++i_;
        Letter l{std::string(s_.substr(b, i_ - b)), 1};
        while (i_ < s_.size() && s_[i_] == '\'') {
            l.sign = -l.sign;
            ++i_;
        }
        return {l};
    }

    Word exponent(const Word &base) {
        if (i_ >= s_.size() || s_[i_] != '^') return base;
        ++i_;
        std::size_t b = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        if (b == i_) error("exponent must be a nonnegative integer");
        int k = std::stoi(std::string(s_.substr(b, i_ - b)));
        return power(base, k);
    }

    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }

    [[noreturn]] void error(const std::string &msg) {
        fail(ErrorKind::ParseError, "word \"" + std::string(s_) + "\" at " + std::to_string(i_) + ": " + msg);
    }

    std::string_view s_;
    std::size_t i_ = 0;
};

} // namespace

Word parse_word(std::string_view text) { return Parser(text).parse(); }

std::string format_letter(const Letter &l) { return l.sign > 0 ? l.sym : l.sym + "'"; }

std::string format_word(const Word &w) {
    std::string out;
    for (const auto &l : w) {
        if (!out.empty()) out += ' ';
        out += format_letter(l);
    }
    return out.empty() ? "1" : out;
}

Word reduce(const Word &w) {
    Word out;
    out.reserve(w.size());
    for (const auto &l : w) {
        if (!out.empty() && out.back().sym == l.sym && out.back().sign == -l.sign)
            out.pop_back();
        else
            out.push_back(l);
    }
    return out;
}

Word invert(const Word &w) {
    Word out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->inverse());
    return out;
}

Word concat(const Word &a, const Word &b) {
    Word out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

Word power(const Word &w, int k) {
    if (k < 0) return power(invert(w), -k);
    Word out;
    out.reserve(w.size() * static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) out.insert(out.end(), w.begin(), w.end());
    return out;
}

Word subword(const Word &w, std::size_t pos, std::size_t len) {
    return Word(w.begin() + pos, w.begin() + pos + len);
}

Word splice(const Word &w, std::size_t pos, std::size_t len, const Word &repl) {
    Word out(w.begin(), w.begin() + pos);
    out.insert(out.end(), repl.begin(), repl.end());
    out.insert(out.end(), w.begin() + pos + len, w.end());
    return out;
}

bool matches_at(const Word &w, std::size_t pos, const Word &pattern) {
    if (pos > w.size() || pattern.size() > w.size() - pos) return false;
    for (std::size_t i = 0; i < pattern.size(); ++i)
        if (!(w[pos + i] == pattern[i])) return false;
    return true;
}

Word ConjugateDefinition::expansion() const {
    Word out = conjugator;
    out.push_back(core);
    Word tail = invert(conjugator);
    out.insert(out.end(), tail.begin(), tail.end());
    return out;
}

ConjugateDefinition ConjugateDefinition::from_expansion(const std::string &name, const Word &e) {
    if (e.size() % 2 == 0)
        fail(ErrorKind::ParseError, "definition " + name + " must have odd length");
    std::size_t h = e.size() / 2;
    Word head = subword(e, 0, h);
    if (!(subword(e, h + 1, h) == invert(head)))
        fail(ErrorKind::ParseError, "definition " + name + " is not of the form w a w^-1");
    return {name, head, e[h]};
}

namespace {

void expand_into(const Letter &l, const DefinitionSet &defs, const CurvePredicate &is_curve,
                 std::set<std::string> &active, Word &out) {
    auto it = defs.find(l.sym);
    if (it == defs.end()) {
        if (is_curve && !is_curve(l.sym)) fail(ErrorKind::UnknownDefinition, l.sym);
        out.push_back(l);
        return;
    }
    if (!active.insert(l.sym).second) fail(ErrorKind::RecursiveDefinition, l.sym);
    Word e = it->second.expansion();
    if (l.sign < 0) e = invert(e);
    for (const auto &x : e) expand_into(x, defs, is_curve, active, out);
    active.erase(l.sym);
}

} // namespace

Word expand_definitions(const Word &w, const DefinitionSet &defs, const CurvePredicate &is_curve) {
    Word out;
    std::set<std::string> active;
    for (const auto &l : w) expand_into(l, defs, is_curve, active, out);
    return out;
}

} // namespace dt
