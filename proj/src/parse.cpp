#include "lgb/parse.hpp"

#include <cctype>
#include <sstream>

namespace lgb {

namespace {

struct Lexer {
    const std::string& s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool accept(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void error(const std::string& msg) {
        fail(ErrorCode::ParseError, msg + " at position " + std::to_string(pos));
    }
    Integer integer() {
        skip_ws();
        size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        size_t digits = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == digits) error("expected integer");
        return Integer(s.substr(start, pos - start));
    }
    std::string identifier() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) {
            ++pos;
        }
        if (pos == start) error("expected identifier");
        if (std::isdigit(static_cast<unsigned char>(s[start]))) error("identifier starts with digit");
        return s.substr(start, pos - start);
    }
    bool at_identifier() {
        skip_ws();
        return pos < s.size() &&
               (std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_');
    }
    bool at_digit() {
        skip_ws();
        return pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]));
    }
};

struct PolyParser {
    Lexer lex;
    const FieldPtr& ext;
    bool fixed_vars;
    std::vector<std::string> vars;

    PolyParser(const std::string& text, std::optional<std::vector<std::string>> variables,
               const FieldPtr& extension)
        : lex{text}, ext(extension), fixed_vars(variables.has_value()) {
        if (fixed_vars) vars = std::move(*variables);
    }

    size_t var_slot(const std::string& name) {
        for (size_t i = 0; i < vars.size(); ++i)
            if (vars[i] == name) return i;
        if (fixed_vars)
            fail(ErrorCode::UnknownVariable,
                 "variable '" + name + "' at position " + std::to_string(lex.pos));
        vars.push_back(name);
        return vars.size() - 1;
    }

    int exponent() {
        Integer e = lex.integer();
        if (e <= 0) fail(ErrorCode::BadExponent, "exponent must be positive, got " + to_string(e));
        if (e > 1000) fail(ErrorCode::BadExponent, "exponent too large: " + to_string(e));
        return static_cast<int>(e.get_si());
    }

    // scalar factor: int[/posint] or sym[^k]; returns true if consumed
    bool scalar_factor(Scalar& out) {
        if (lex.at_digit() || lex.peek() == '-' || lex.peek() == '+') {
            Integer num = lex.integer();
            Integer den(1);
            if (lex.accept('/')) {
                den = lex.integer();
                if (den <= 0) lex.error("denominator must be positive");
            }
            out = Scalar(make_rational(num, den));
            return true;
        }
        if (lex.at_identifier()) {
            size_t save = lex.pos;
            std::string name = lex.identifier();
            if (ext && name == ext->symbol()) {
                long e = 1;
                if (lex.accept('^')) e = exponent();
                out = Scalar::generator(ext).pow(e);
                return true;
            }
            lex.pos = save;
        }
        return false;
    }

    // term as (coefficient, exponent map); exponents accumulate across factors
    struct RawTerm {
        Scalar coeff{Rational(1)};
        std::vector<std::pair<size_t, int>> exps;
    };

    RawTerm term() {
        RawTerm t;
        bool any = false;
        for (;;) {
            Scalar c;
            if (scalar_factor(c)) {
                t.coeff *= c;
                any = true;
            } else if (lex.at_identifier()) {
                std::string name = lex.identifier();
                int e = 1;
                if (lex.accept('^')) e = exponent();
                t.exps.emplace_back(var_slot(name), e);
                any = true;
            } else {
                lex.error("expected coefficient or variable");
            }
            if (!lex.accept('*')) break;
        }
        if (!any) lex.error("empty term");
        return t;
    }

    Polynomial run() {
        std::vector<std::pair<RawTerm, bool>> raw;  // term, negated
        bool neg = lex.accept('-');
        raw.emplace_back(term(), neg);
        while (!lex.eof()) {
            if (lex.accept('+'))
                raw.emplace_back(term(), false);
            else if (lex.accept('-'))
                raw.emplace_back(term(), true);
            else
                lex.error("expected '+' or '-'");
        }
        Polynomial p(vars);
        for (auto& [t, negated] : raw) {
            Monomial m(vars.size());
            for (auto [slot, e] : t.exps) m[slot] += e;
            p.add_term(m, negated ? -t.coeff : t.coeff);
        }
        return p;
    }
};

}  // namespace

Polynomial parse_polynomial(const std::string& text,
                            std::optional<std::vector<std::string>> variables,
                            const FieldPtr& extension) {
    PolyParser p(text, std::move(variables), extension);
    return p.run();
}

Rational parse_rational(const std::string& text) {
    Lexer lex{text};
    Integer num = lex.integer();
    Integer den(1);
    if (lex.accept('/')) {
        den = lex.integer();
        if (den <= 0) lex.error("denominator must be positive");
    }
    if (!lex.eof()) lex.error("trailing characters in rational");
    return make_rational(num, den);
}

std::vector<std::vector<Rational>> parse_group_generators(const std::string& text) {
    std::vector<std::vector<Rational>> gens;
    std::string chunk;
    std::istringstream stream(text);
    while (std::getline(stream, chunk, ';')) {
        bool blank = true;
        for (char c : chunk)
            if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
        if (blank) continue;
        std::vector<Rational> phases;
        std::istringstream inner(chunk);
        std::string item;
        while (std::getline(inner, item, ',')) phases.push_back(parse_rational(item));
        gens.push_back(std::move(phases));
    }
    return gens;
}

}  // namespace lgb
