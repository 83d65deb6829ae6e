#include "lctlab/parse.hpp"

#include <cctype>

namespace lctlab {

namespace {

class Parser {
  public:
    Parser(const std::string& text, int ambient, const VariableResolver& resolve)
        : s_(text), ambient_(ambient), resolve_(resolve) {}

    Polynomial parse() {
        Polynomial p(ambient_);
        skip_ws();
        int sign = 1;
        if (peek() == '+' || peek() == '-') sign = (get() == '-') ? -1 : 1;
        p = p + parse_term().scaled(Rational(sign));
        skip_ws();
        while (pos_ < s_.size()) {
            char c = get();
            if (c != '+' && c != '-') fail("expected '+' or '-'", pos_ - 1);
            p = (c == '+') ? p + parse_term() : p - parse_term();
            skip_ws();
        }
        return p;
    }

  private:
    [[noreturn]] void fail(const std::string& msg, std::size_t at) const {
        throw parse_error(msg, at);
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    char get() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end of input", pos_);
        return s_[pos_++];
    }

    long parse_integer_digits() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected digits", start);
        if (pos_ - start > 18) fail("integer literal too long", start);
        return std::stol(s_.substr(start, pos_ - start));
    }

    Rational parse_coeff() {
        skip_ws();
        int sign = 1;
        if (peek() == '-') {
            get();
            sign = -1;
        }
        long num = parse_integer_digits();
        long den = 1;
        if (pos_ < s_.size() && peek() == '/') {
            std::size_t at = pos_;
            get();
            den = parse_integer_digits();
            if (den == 0) fail("zero denominator", at + 1);
        }
        return rational_of(sign * num, den);
    }

    Polynomial parse_varpow() {
        skip_ws();
        std::size_t at = pos_;
        char c = get();
        if (c != 'x') fail("expected variable", at);
        long j = parse_integer_digits();
        std::optional<long> level;
        if (pos_ < s_.size() && s_[pos_] == '_') {
            ++pos_;
            level = parse_integer_digits();
        }
        int index = resolve_(j, level, at);
        int power = 1;
        if (peek() == '^') {
            std::size_t pat = pos_;
            get();
            power = static_cast<int>(parse_integer_digits());
            if (power <= 0) fail("exponent must be positive", pat + 1);
        }
        return Polynomial::variable(ambient_, index, power);
    }

    Polynomial parse_term() {
        char c = peek();
        Polynomial p(ambient_);
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '-') {
            p = Polynomial::constant(ambient_, parse_coeff());
        } else if (c == 'x') {
            p = parse_varpow();
        } else {
            fail("expected coefficient or variable", pos_);
        }
        while (peek() == '*') {
            get();
            p = p * parse_varpow();
        }
        return p;
    }

    const std::string& s_;
    int ambient_;
    const VariableResolver& resolve_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, int ambient, const VariableResolver& resolve) {
    return Parser(text, ambient, resolve).parse();
}

Polynomial parse_polynomial(const std::string& text, int ambient) {
    VariableResolver resolve = [ambient](long j, std::optional<long> level, std::size_t offset) -> int {
        if (level) throw parse_error("jet variable outside a jet ring", offset);
        if (j < 0 || j >= ambient) throw parse_error("unknown variable x" + std::to_string(j), offset);
        return static_cast<int>(j);
    };
    return parse_polynomial(text, ambient, resolve);
}

Ideal parse_ideal(const std::string& text, int ambient) {
    Ideal a(ambient);
    std::size_t start = 0;
    bool any = false;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i == text.size() || text[i] == ',') {
            std::string piece = text.substr(start, i - start);
            bool blank = piece.find_first_not_of(" \t\n") == std::string::npos;
            if (!blank) {
                a.push_generator(parse_polynomial(piece, ambient));
                any = true;
            } else if (i != text.size() || any) {
                throw parse_error("empty generator", start);
            }
            start = i + 1;
        }
    }
    return a;
}

std::vector<std::string> default_variable_names(int ambient) {
    std::vector<std::string> names;
    names.reserve(ambient);
    for (int i = 0; i < ambient; ++i) names.push_back("x" + std::to_string(i));
    return names;
}

std::string print_monomial(const Monomial& m, const std::vector<std::string>& names) {
    std::string out;
    for (int i = 0; i < m.nvars(); ++i) {
        if (m[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += names[i];
        if (m[i] > 1) out += "^" + std::to_string(m[i]);
    }
    return out;
}

std::string print_polynomial(const Polynomial& p, const std::vector<std::string>& names) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        bool negative = c < 0;
        Rational mag = negative ? Rational(-c) : c;
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        first = false;
        std::string mono = print_monomial(m, names);
        if (mono.empty())
            out += to_string(mag);
        else if (mag == 1)
            out += mono;
        else
            out += to_string(mag) + "*" + mono;
    }
    return out;
}

std::string print_polynomial(const Polynomial& p) {
    return print_polynomial(p, default_variable_names(p.ambient()));
}

std::string print_ideal(const Ideal& a) {
    std::string out;
    for (std::size_t i = 0; i < a.generators().size(); ++i) {
        if (i) out += ", ";
        out += print_polynomial(a.generators()[i]);
    }
    return out;
}

}  // namespace lctlab
