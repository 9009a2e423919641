#include "freealg/parse.hpp"

#include <cctype>

namespace freealg {

GenTable::GenTable(const std::vector<std::string>& names) {
    for (auto& n : names) intern(n);
}

unsigned GenTable::intern(const std::string& name) {
    auto it = index_.find(name);
    if (it != index_.end()) return it->second;
    if (frozen_)
        throw ParseError("unknown generator '" + name + "'");
    unsigned idx = static_cast<unsigned>(names_.size());
    names_.push_back(name);
    index_.emplace(name, idx);
    return idx;
}

namespace {

bool ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

class Parser {
public:
    Parser(std::string_view text, GenTable& gens, unsigned long characteristic)
        : text_(text), gens_(gens), char_(characteristic) {}

    NcPoly run() {
        NcPoly p = expr();
        skip_ws();
        if (pos_ != text_.size())
            fail("unexpected trailing input");
        return p;
    }

private:
    std::string_view text_;
    GenTable& gens_;
    unsigned long char_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) {
        throw ParseError(what + " at position " + std::to_string(pos_) +
                         " in '" + std::string(text_) + "'");
    }

    void skip_ws() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool eat(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }

    unsigned long read_uint() {
        skip_ws();
        if (pos_ >= text_.size() ||
            !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail("expected number");
        unsigned long v = 0;
        while (pos_ < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            if (v > (1ul << 60)) fail("number too large");
            v = v * 10 + static_cast<unsigned long>(text_[pos_] - '0');
            ++pos_;
        }
        return v;
    }

    NcPoly expr() {
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        NcPoly p = term();
        if (neg) p = -p;
        while (true) {
            if (eat('+'))
                p += term();
            else if (eat('-'))
                p -= term();
            else
                return p;
        }
    }

    NcPoly term() {
        NcPoly p = factor();
        while (true) {
            if (eat('*')) {
                p *= factor();
            } else if (eat('/')) {
                NcPoly d = factor();
                if (d.is_zero()) fail("division by zero");
                if (d.nu_top() != 0) fail("divisor must be a constant");
                p *= d.coeff(Word()).inverse();
            } else {
                return p;
            }
        }
    }

    NcPoly factor() {
        NcPoly p = atom();
        while (eat('^')) {
            unsigned long e = read_uint();
            NcPoly out = NcPoly::constant(Scalar::one(char_));
            for (unsigned long i = 0; i < e; ++i) out *= p;
            p = std::move(out);
        }
        return p;
    }

    NcPoly atom() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            NcPoly p = expr();
            if (!eat(')')) fail("expected ')'");
            return p;
        }
        if (c == '[') {
            ++pos_;
            NcPoly a = expr();
            if (!eat(',')) fail("expected ',' in bracket");
            NcPoly b = expr();
            if (!eat(']')) fail("expected ']'");
            return bracket(a, b);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            unsigned long v = read_uint();
            if (v > static_cast<unsigned long>(
                        std::numeric_limits<long>::max()))
                fail("number too large");
            return NcPoly::constant(
                Scalar::integer(static_cast<long>(v), char_));
        }
        if (ident_start(c)) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
            std::string name(text_.substr(start, pos_ - start));
            return NcPoly::generator(gens_.intern(name), char_);
        }
        fail("expected atom");
    }
};

}  // namespace

NcPoly parse_poly(std::string_view text, GenTable& gens,
                  unsigned long characteristic) {
    return Parser(text, gens, characteristic).run();
}

std::vector<std::string> split_top_level(std::string_view text, char sep) {
    std::vector<std::string> out;
    int depth = 0;
    std::string cur;
    for (char c : text) {
        if (c == '(' || c == '[') ++depth;
        if (c == ')' || c == ']') --depth;
        if (c == sep && depth == 0) {
            out.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(std::move(cur));

    std::vector<std::string> trimmed;
    for (auto& s : out) {
        std::size_t a = s.find_first_not_of(" \t\r\n");
        if (a == std::string::npos) continue;
        std::size_t b = s.find_last_not_of(" \t\r\n");
        trimmed.push_back(s.substr(a, b - a + 1));
    }
    return trimmed;
}

bool is_bare_name(std::string_view text) {
    std::size_t a = text.find_first_not_of(" \t\r\n");
    if (a == std::string_view::npos) return false;
    std::size_t b = text.find_last_not_of(" \t\r\n");
    std::string_view t = text.substr(a, b - a + 1);
    if (!ident_start(t[0])) return false;
    for (char c : t)
        if (!ident_char(c)) return false;
    return true;
}

namespace {

std::string word_to_string(const Word& w, const GenTable& gens) {
    std::string s;
    const auto& ls = w.letters();
    for (std::size_t i = 0; i < ls.size();) {
        std::size_t j = i;
        while (j < ls.size() && ls[j] == ls[i]) ++j;
        if (!s.empty()) s += '*';
        if (ls[i] < gens.size())
            s += gens.name(ls[i]);
        else
            s += "g" + std::to_string(ls[i]);
        if (j - i > 1) s += '^' + std::to_string(j - i);
        i = j;
    }
    return s;
}

}  // namespace

std::string to_string(const NcPoly& p, const GenTable& gens) {
    if (p.is_zero()) return "0";
    std::string s;
    for (auto& [w, c] : p.terms()) {
        std::string cs = c.str();
        bool neg = !cs.empty() && cs[0] == '-';
        if (neg) cs = cs.substr(1);
        if (s.empty()) {
            if (neg) s += '-';
        } else {
            s += neg ? " - " : " + ";
        }
        if (w.empty()) {
            s += cs;
        } else if (cs == "1") {
            s += word_to_string(w, gens);
        } else {
            s += cs + '*' + word_to_string(w, gens);
        }
    }
    return s;
}

}  // namespace freealg
