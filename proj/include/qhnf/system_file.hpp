#pragma once

#include "qhnf/vectorfield.hpp"

#include <map>
#include <string>
#include <vector>

namespace qhnf {

// Polynomial in x, y and named parameters; exponent vectors are indexed x, y, then parameters.
class ExprPoly {
public:
    using Exponents = std::vector<int>;

    ExprPoly() = default;
    explicit ExprPoly(std::vector<std::string> params) : params_(std::move(params)) {}
    static ExprPoly constant(std::vector<std::string> params, const Rat& c);
    static ExprPoly variable(std::vector<std::string> params, std::size_t index);

    const std::vector<std::string>& params() const { return params_; }
    const std::map<Exponents, Rat>& terms() const { return terms_; }
    bool is_constant() const;
    Rat constant_value() const;

    ExprPoly& operator+=(const ExprPoly& o);
    ExprPoly& operator*=(const ExprPoly& o);
    ExprPoly operator-() const;
    ExprPoly pow(int e) const;
    friend ExprPoly operator+(ExprPoly l, const ExprPoly& r) { return l += r; }
    friend ExprPoly operator*(ExprPoly l, const ExprPoly& r) { return l *= r; }
    friend bool operator==(const ExprPoly& l, const ExprPoly& r) { return l.terms_ == r.terms_; }

    // Substitutes parameter values; every parameter that occurs must be assigned.
    Poly2 instantiate(const std::map<std::string, Rat>& assignment) const;
    std::string str() const;

private:
    void add(const Exponents& e, const Rat& c);
    std::vector<std::string> params_;
    std::map<Exponents, Rat> terms_;
};

// Grammar: sums and products of rational literals, x, y and parameters, '^' with integer exponents,
// parentheses, and division by constants. Errors carry line and column.
ExprPoly parse_expression(const std::string& text, const std::vector<std::string>& params, int line = 1,
                          int column_offset = 0);

struct SystemFile {
    std::vector<std::string> params;
    ExprPoly dx;
    ExprPoly dy;

    PlanarVF instantiate(const std::map<std::string, Rat>& assignment) const;
};

SystemFile parse_system(const std::string& text);
SystemFile read_system_file(const std::string& path);
// "k=v,k=v"
std::map<std::string, Rat> parse_assignment(const std::string& text);

}  // namespace qhnf
