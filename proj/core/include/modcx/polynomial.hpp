// Multivariate integer polynomials and the relation grammar: identifiers,
// integer literals, `+ - * ^` and parentheses. Exponent vectors are indexed
// by the declared variable list.
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "modcx/fp.hpp"

namespace modcx {

using Exponents = std::vector<std::uint8_t>;

class Polynomial {
  public:
    Polynomial() = default;
    static Polynomial constant(long long c, std::size_t nvars);
    static Polynomial variable(std::size_t index, std::size_t nvars);

    // Parses `text` over the declared variables; throws input_error with a
    // column position on malformed input or unknown identifiers.
    static Polynomial parse(const std::string& text, const std::vector<std::string>& vars);

    const std::map<Exponents, long long>& terms() const { return terms_; }
    std::size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    long long constant_term() const;
    int total_degree() const;  // -1 for the zero polynomial

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial pow(unsigned e) const;

    std::string to_string(const std::vector<std::string>& vars) const;

  private:
    void add_term(const Exponents& e, long long c);
    std::size_t nvars_ = 0;
    std::map<Exponents, long long> terms_;  // exponent vector -> coefficient
};

}  // namespace modcx
