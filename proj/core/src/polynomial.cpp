#include "modcx/polynomial.hpp"

#include <algorithm>
#include <cctype>

namespace modcx {

Polynomial Polynomial::constant(long long c, std::size_t nvars) {
    Polynomial p;
    p.nvars_ = nvars;
    if (c != 0) p.terms_[Exponents(nvars, 0)] = c;
    return p;
}

Polynomial Polynomial::variable(std::size_t index, std::size_t nvars) {
    Polynomial p;
    p.nvars_ = nvars;
    Exponents e(nvars, 0);
    e[index] = 1;
    p.terms_[e] = 1;
    return p;
}

void Polynomial::add_term(const Exponents& e, long long c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_[e] = c;
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

long long Polynomial::constant_term() const {
    auto it = terms_.find(Exponents(nvars_, 0));
    return it == terms_.end() ? 0 : it->second;
}

int Polynomial::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
        int t = 0;
        for (auto x : e) t += x;
        d = std::max(d, t);
    }
    return d;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    Polynomial r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    Polynomial r;
    r.nvars_ = std::max(nvars_, o.nvars_);
    for (const auto& [e1, c1] : terms_) {
        for (const auto& [e2, c2] : o.terms_) {
            Exponents e(r.nvars_, 0);
            for (std::size_t i = 0; i < e.size(); ++i) {
                unsigned s = (i < e1.size() ? e1[i] : 0u) + (i < e2.size() ? e2[i] : 0u);
                if (s > 255) throw input_error("exponent overflow in polynomial product");
                e[i] = static_cast<std::uint8_t>(s);
            }
            r.add_term(e, c1 * c2);
        }
    }
    return r;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial r = constant(1, nvars_);
    Polynomial base = *this;
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

std::string Polynomial::to_string(const std::vector<std::string>& vars) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
        long long coeff = c;
        if (!out.empty()) {
            out += coeff < 0 ? " - " : " + ";
            if (coeff < 0) coeff = -coeff;
        } else if (coeff < 0) {
            out += "-";
            coeff = -coeff;
        }
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += vars[i];
            if (e[i] > 1) mono += "^" + std::to_string(static_cast<int>(e[i]));
        }
        if (mono.empty()) {
            out += std::to_string(coeff);
        } else {
            if (coeff != 1) out += std::to_string(coeff) + "*";
            out += mono;
        }
    }
    return out;
}

namespace {

struct Parser {
    const std::string& s;
    const std::vector<std::string>& vars;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) { ++pos; return true; }
        return false;
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw input_error("parse error at column " + std::to_string(pos + 1) + ": " + msg +
                          " in \"" + s + "\"");
    }

    Polynomial parse_expr() {
        skip_ws();
        bool negate = false;
        while (eat('-')) negate = !negate;
        Polynomial r = parse_term();
        if (negate) r = Polynomial::constant(0, vars.size()) - r;
        for (;;) {
            skip_ws();
            if (eat('+')) {
                r = r + parse_term();
            } else if (eat('-')) {
                r = r - parse_term();
            } else {
                return r;
            }
        }
    }

    Polynomial parse_term() {
        Polynomial r = parse_factor();
        while (eat('*')) r = r * parse_factor();
        return r;
    }

    Polynomial parse_factor() {
        Polynomial base = parse_atom();
        if (eat('^')) {
            skip_ws();
            if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
                fail("expected integer exponent after '^'");
            unsigned e = 0;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
                e = e * 10 + static_cast<unsigned>(s[pos] - '0');
                if (e > 1000) fail("exponent too large");
                ++pos;
            }
            return base.pow(e);
        }
        return base;
    }

    Polynomial parse_atom() {
        skip_ws();
        if (pos >= s.size()) fail("unexpected end of input");
        char c = s[pos];
        if (c == '(') {
            ++pos;
            Polynomial inner = parse_expr();
            if (!eat(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long long v = 0;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
                v = v * 10 + (s[pos] - '0');
                if (v > (1ll << 40)) fail("integer literal too large");
                ++pos;
            }
            return Polynomial::constant(v, vars.size());
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos;
            while (pos < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
                ++pos;
            std::string name = s.substr(start, pos - start);
            for (std::size_t i = 0; i < vars.size(); ++i)
                if (vars[i] == name) return Polynomial::variable(i, vars.size());
            pos = start;
            fail("unknown variable '" + name + "'");
        }
        fail(std::string("unexpected character '") + c + "'");
    }
};

}  // namespace

Polynomial Polynomial::parse(const std::string& text, const std::vector<std::string>& vars) {
    Parser p{text, vars};
    Polynomial r = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    r.nvars_ = vars.size();
    return r;
}

}  // namespace modcx
