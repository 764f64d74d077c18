#include "weitz/io.hpp"

#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

namespace weitz {

std::vector<std::string> default_names(int arity) {
    static const char* short_names[] = {"x", "y", "z"};
    std::vector<std::string> names;
    if (arity <= 3) {
        for (int i = 0; i < arity; ++i) names.push_back(short_names[i]);
    } else {
        for (int i = 0; i < arity; ++i) names.push_back("x" + std::to_string(i + 1));
    }
    return names;
}

namespace {

std::string coef_prefix(const Rat& c, bool leading, bool bare) {
    // bare: the coefficient is the whole term (empty word).
    Rat a = c < 0 ? Rat(-c) : c;
    std::string sep = leading ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
    if (bare) return sep + rat_str(a);
    if (a == 1) return sep;
    return sep + rat_str(a) + "*";
}

template <class Terms, class MonoFn>
std::string render_terms(const Terms& terms, MonoFn mono_names) {
    if (terms.empty()) return "0";
    std::ostringstream out;
    bool leading = true;
    for (const auto& [key, c] : terms) {
        std::vector<std::string> parts = mono_names(key);
        out << coef_prefix(c, leading, parts.empty());
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (i) out << "*";
            out << parts[i];
        }
        leading = false;
    }
    return out.str();
}

struct Token {
    enum Kind { Num, Name, Plus, Minus, Star, Slash, Caret, LParen, RParen, End } kind;
    std::string text;
};

class Lexer {
  public:
    explicit Lexer(const std::string& s) : s_(s) { advance(); }
    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

  private:
    void advance() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ >= s_.size()) {
            tok_ = {Token::End, ""};
            return;
        }
        char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            tok_ = {Token::Num, s_.substr(start, pos_ - start)};
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            tok_ = {Token::Name, s_.substr(start, pos_ - start)};
            return;
        }
        ++pos_;
        switch (c) {
            case '+': tok_ = {Token::Plus, "+"}; return;
            case '-': tok_ = {Token::Minus, "-"}; return;
            case '*': tok_ = {Token::Star, "*"}; return;
            case '/': tok_ = {Token::Slash, "/"}; return;
            case '^': tok_ = {Token::Caret, "^"}; return;
            case '(': tok_ = {Token::LParen, "("}; return;
            case ')': tok_ = {Token::RParen, ")"}; return;
            default: throw std::invalid_argument(std::string("bad character in polynomial: ") + c);
        }
    }

    std::string s_;
    std::size_t pos_ = 0;
    Token tok_;
};

// Grammar (a superset of the rendered form, for CLI convenience):
//   expr    := [+|-] term ((+|-) term)*
//   term    := factor ((*|/) factor)*      -- '/' only before a number literal
//   factor  := primary [^ digits]
//   primary := digits | name | ( expr )
class Parser {
  public:
    Parser(const std::string& text, const std::vector<std::string>& names)
        : lex_(text), arity_(static_cast<int>(names.size())) {
        for (std::size_t i = 0; i < names.size(); ++i) index_[names[i]] = static_cast<int>(i);
        // xN aliases for the short-name alphabets, so "x1*x3" parses at rank 3.
        for (std::size_t i = 0; i < names.size(); ++i)
            index_.emplace("x" + std::to_string(i + 1), static_cast<int>(i));
    }

    NCPoly parse() {
        NCPoly r = parse_expr();
        if (lex_.peek().kind != Token::End)
            throw std::invalid_argument("trailing input after polynomial");
        return r;
    }

  private:
    NCPoly parse_expr() {
        NCPoly acc = NCPoly::zero(arity_);
        bool neg = false;
        if (lex_.peek().kind == Token::Minus) {
            lex_.take();
            neg = true;
        } else if (lex_.peek().kind == Token::Plus) {
            lex_.take();
        }
        acc += maybe_neg(parse_term(), neg);
        while (lex_.peek().kind == Token::Plus || lex_.peek().kind == Token::Minus) {
            bool minus = lex_.take().kind == Token::Minus;
            acc += maybe_neg(parse_term(), minus);
        }
        return acc;
    }

    static NCPoly maybe_neg(NCPoly p, bool neg) { return neg ? -p : p; }

    NCPoly parse_term() {
        NCPoly acc = parse_factor();
        while (lex_.peek().kind == Token::Star || lex_.peek().kind == Token::Slash) {
            if (lex_.take().kind == Token::Star) {
                acc = acc * parse_factor();
            } else {
                if (lex_.peek().kind != Token::Num)
                    throw std::invalid_argument("denominator must be an integer");
                Rat d = rat_parse(lex_.take().text);
                if (d == 0) throw std::invalid_argument("division by zero");
                acc = Rat(1 / d) * acc;
            }
        }
        return acc;
    }

    NCPoly parse_factor() {
        NCPoly base = parse_primary();
        if (lex_.peek().kind == Token::Caret) {
            lex_.take();
            if (lex_.peek().kind != Token::Num) throw std::invalid_argument("exponent expected");
            unsigned long e = std::stoul(lex_.take().text);
            NCPoly r = NCPoly::unit(arity_);
            for (unsigned long i = 0; i < e; ++i) r = r * base;
            return r;
        }
        return base;
    }

    NCPoly parse_primary() {
        Token t = lex_.take();
        if (t.kind == Token::Num) return NCPoly::term(arity_, Word{}, rat_parse(t.text));
        if (t.kind == Token::Name) {
            auto it = index_.find(t.text);
            if (it == index_.end()) throw std::invalid_argument("unknown variable: " + t.text);
            return NCPoly::var(arity_, it->second);
        }
        if (t.kind == Token::LParen) {
            NCPoly inner = parse_expr();
            if (lex_.take().kind != Token::RParen) throw std::invalid_argument("missing )");
            return inner;
        }
        throw std::invalid_argument("unexpected token: " + t.text);
    }

    Lexer lex_;
    int arity_;
    std::map<std::string, int> index_;
};

}  // namespace

std::string render(const NCPoly& p, const std::vector<std::string>& names) {
    return render_terms(p.terms(), [&](const Word& w) {
        std::vector<std::string> parts;
        for (int letter : w) parts.push_back(names.at(letter));
        return parts;
    });
}

std::string render(const CPoly& p, const std::vector<std::string>& names) {
    return render_terms(p.terms(), [&](const Monomial& e) {
        std::vector<std::string> parts;
        for (std::size_t j = 0; j < e.size(); ++j)
            for (int k = 0; k < e[j]; ++k) parts.push_back(names.at(j));
        return parts;
    });
}

std::string render_combination(const std::vector<std::pair<std::string, Rat>>& terms) {
    if (terms.empty()) return "0";
    std::ostringstream out;
    bool leading = true;
    for (const auto& [mono, c] : terms) {
        out << coef_prefix(c, leading, mono.empty()) << mono;
        leading = false;
    }
    return out.str();
}

NCPoly parse_nc(const std::string& text, const std::vector<std::string>& names) {
    return Parser(text, names).parse();
}

CPoly parse_c(const std::string& text, const std::vector<std::string>& names) {
    return abelianize(parse_nc(text, names));
}

nlohmann::ordered_json to_json(const NCPoly& p, const std::vector<std::string>& names) {
    nlohmann::ordered_json j;
    j["vars"] = names;
    j["terms"] = nlohmann::ordered_json::array();
    for (const auto& [w, c] : p.terms())
        j["terms"].push_back({{"coef", rat_str(c)}, {"word", w}});
    return j;
}

nlohmann::ordered_json to_json(const CPoly& p, const std::vector<std::string>& names) {
    nlohmann::ordered_json j;
    j["vars"] = names;
    j["terms"] = nlohmann::ordered_json::array();
    for (const auto& [e, c] : p.terms())
        j["terms"].push_back({{"coef", rat_str(c)}, {"mono", e}});
    return j;
}

NCPoly nc_from_json(const nlohmann::json& j) {
    int arity = static_cast<int>(j.at("vars").size());
    NCPoly p(arity);
    for (const auto& t : j.at("terms"))
        p.add_term(t.at("word").get<Word>(), rat_parse(t.at("coef").get<std::string>()));
    return p;
}

CPoly c_from_json(const nlohmann::json& j) {
    int arity = static_cast<int>(j.at("vars").size());
    CPoly p(arity);
    for (const auto& t : j.at("terms"))
        p.add_term(t.at("mono").get<Monomial>(), rat_parse(t.at("coef").get<std::string>()));
    return p;
}

}  // namespace weitz
