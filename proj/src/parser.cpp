#include "lpmln/parser.hpp"

#include <cctype>
#include <cstdint>
#include <optional>
#include <sstream>
#include <vector>

#include "lpmln/errors.hpp"

namespace lpmln {

namespace {

enum class Tok { Ident, Not, Bot, Top, And, Or, Arrow, Larrow, LParen, RParen, End };

struct Token {
    Tok kind;
    std::string text;
    int line;
    int col;
};

class Lexer {
public:
    Lexer(const std::string& text, int line0, int col0)
        : text_(text), line_(line0), col_(col0) {}

    Token next() {
        skip_ws();
        int line = line_, col = col_;
        if (pos_ >= text_.size()) return {Tok::End, "", line, col};
        char c = text_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string word;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                    text_[pos_] == '_')) {
                word += text_[pos_];
                advance();
            }
            if (word == "not") return {Tok::Not, word, line, col};
            if (word == "bot" || word == "false") return {Tok::Bot, word, line, col};
            if (word == "top" || word == "true") return {Tok::Top, word, line, col};
            if (!std::islower(static_cast<unsigned char>(word[0])))
                throw ParseError(line, col, "atom names must start with a lowercase letter");
            return {Tok::Ident, word, line, col};
        }
        if (c == '&') { advance(); return {Tok::And, "&", line, col}; }
        if (c == '|') { advance(); return {Tok::Or, "|", line, col}; }
        if (c == '(') { advance(); return {Tok::LParen, "(", line, col}; }
        if (c == ')') { advance(); return {Tok::RParen, ")", line, col}; }
        if (c == '-' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
            advance(); advance();
            return {Tok::Arrow, "->", line, col};
        }
        if (c == '<' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '-') {
            advance(); advance();
            return {Tok::Larrow, "<-", line, col};
        }
        throw ParseError(line, col, std::string("unexpected character '") + c + "'");
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_])))
            advance();
    }
    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    const std::string& text_;
    size_t pos_ = 0;
    int line_;
    int col_;
};

class FormulaParser {
public:
    FormulaParser(const std::string& text, int line0, int col0) : lex_(text, line0, col0) {
        shift();
    }

    FormulaRef parse() {
        FormulaRef f = implication();
        expect(Tok::End, "end of formula");
        return f;
    }

private:
    FormulaRef implication() {
        if (cur_.kind == Tok::Larrow) {
            // `<- F` is the constraint F -> bot
            shift();
            return Formula::implies(disjunction(), Formula::bottom());
        }
        FormulaRef lhs = disjunction();
        if (cur_.kind == Tok::Arrow) {
            shift();
            return Formula::implies(std::move(lhs), implication());
        }
        while (cur_.kind == Tok::Larrow) {
            shift();
            lhs = Formula::implies(disjunction(), std::move(lhs));
        }
        return lhs;
    }

    FormulaRef disjunction() {
        FormulaRef f = conjunction();
        while (cur_.kind == Tok::Or) {
            shift();
            f = Formula::disj(std::move(f), conjunction());
        }
        return f;
    }

    FormulaRef conjunction() {
        FormulaRef f = unary();
        while (cur_.kind == Tok::And) {
            shift();
            f = Formula::conj(std::move(f), unary());
        }
        return f;
    }

    FormulaRef unary() {
        switch (cur_.kind) {
            case Tok::Not:
                shift();
                return Formula::negate(unary());
            case Tok::Bot:
                shift();
                return Formula::bottom();
            case Tok::Top:
                shift();
                return Formula::top();
            case Tok::Ident: {
                FormulaRef f = Formula::atom(cur_.text);
                shift();
                return f;
            }
            case Tok::LParen: {
                shift();
                FormulaRef f = implication();
                expect(Tok::RParen, "')'");
                return f;
            }
            default:
                throw ParseError(cur_.line, cur_.col,
                                 "expected a formula, got '" + describe(cur_) + "'");
        }
    }

    void expect(Tok kind, const std::string& what) {
        if (cur_.kind != kind)
            throw ParseError(cur_.line, cur_.col,
                             "expected " + what + ", got '" + describe(cur_) + "'");
        if (kind != Tok::End) shift();
    }

    static std::string describe(const Token& t) {
        return t.kind == Tok::End ? "end of input" : t.text;
    }

    void shift() { cur_ = lex_.next(); }

    Lexer lex_;
    Token cur_{Tok::End, "", 0, 0};
};

Rational parse_rational(const std::string& text, int line, int col) {
    size_t i = 0;
    bool neg = false;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        neg = text[i] == '-';
        ++i;
    }
    auto digits = [&](std::int64_t& out) {
        size_t start = i;
        out = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            out = out * 10 + (text[i] - '0');
            ++i;
        }
        return i > start;
    };
    std::int64_t whole = 0;
    if (!digits(whole))
        throw ParseError(line, col, "expected a rational weight, got '" + text + "'");
    Rational value(whole);
    if (i < text.size() && text[i] == '.') {
        ++i;
        size_t start = i;
        std::int64_t frac = 0;
        if (!digits(frac))
            throw ParseError(line, col, "non-rational numeric literal '" + text + "'");
        std::int64_t scale = 1;
        for (size_t k = start; k < i; ++k) scale *= 10;
        value = value + Rational(frac, scale);
    } else if (i < text.size() && text[i] == '/') {
        ++i;
        std::int64_t den = 0;
        if (!digits(den) || den == 0)
            throw ParseError(line, col, "non-rational numeric literal '" + text + "'");
        value = Rational(whole, den);
    }
    if (i != text.size())
        throw ParseError(line, col, "non-rational numeric literal '" + text + "'");
    return neg ? -value : value;
}

std::string strip(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

}  // namespace

FormulaRef parse_formula(const std::string& text) {
    return FormulaParser(text, 1, 1).parse();
}

WeightedProgram parse_program(const std::string& text) {
    std::vector<std::pair<Weight, FormulaRef>> rules;
    std::vector<std::string> declared;
    bool seen_signature = false;

    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw;
        if (size_t p = line.find('%'); p != std::string::npos) line = line.substr(0, p);
        if (strip(line).empty()) continue;

        size_t first = line.find_first_not_of(" \t");
        if (line.compare(first, 10, "#signature") == 0) {
            if (seen_signature)
                throw ParseError(lineno, static_cast<int>(first) + 1,
                                 "duplicate #signature declaration");
            seen_signature = true;
            std::string rest = strip(line.substr(first + 10));
            if (rest.empty() || rest.back() != '.')
                throw ParseError(lineno, static_cast<int>(line.size()),
                                 "#signature must end with '.'");
            rest.pop_back();
            std::istringstream atoms_in(rest);
            std::string name;
            while (std::getline(atoms_in, name, ',')) {
                name = strip(name);
                if (name.empty() || !std::islower(static_cast<unsigned char>(name[0])))
                    throw ParseError(lineno, 1,
                                     "bad atom name in #signature: '" + name + "'");
                declared.push_back(name);
            }
            continue;
        }

        size_t colon = line.find(':');
        if (colon == std::string::npos)
            throw ParseError(lineno, static_cast<int>(line.size()),
                             "expected '<weight> : <formula>.'");
        std::string wtext = strip(line.substr(0, colon));
        Weight w = wtext == "alpha"
                       ? Weight::alpha()
                       : Weight::soft(parse_rational(wtext, lineno,
                                                     static_cast<int>(first) + 1));

        std::string ftext = line.substr(colon + 1);
        size_t dot = ftext.find_last_not_of(" \t\r");
        if (dot == std::string::npos || ftext[dot] != '.')
            throw ParseError(lineno, static_cast<int>(line.size()),
                             "rule must end with '.'");
        ftext = ftext.substr(0, dot);
        FormulaRef f =
            FormulaParser(ftext, lineno, static_cast<int>(colon) + 2).parse();
        rules.emplace_back(w, std::move(f));
    }

    return WeightedProgram(std::move(rules), std::move(declared));
}

}  // namespace lpmln
