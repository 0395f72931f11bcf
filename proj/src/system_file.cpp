#include "qhnf/system_file.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace qhnf {

ExprPoly ExprPoly::constant(std::vector<std::string> params, const Rat& c) {
    ExprPoly p(std::move(params));
    p.add(Exponents(p.params_.size() + 2, 0), c);
    return p;
}

ExprPoly ExprPoly::variable(std::vector<std::string> params, std::size_t index) {
    ExprPoly p(std::move(params));
    Exponents e(p.params_.size() + 2, 0);
    e[index] = 1;
    p.add(e, Rat(1));
    return p;
}

void ExprPoly::add(const Exponents& e, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

bool ExprPoly::is_constant() const {
    for (const auto& [e, c] : terms_)
        if (std::any_of(e.begin(), e.end(), [](int v) { return v != 0; })) return false;
    return true;
}

Rat ExprPoly::constant_value() const {
    for (const auto& [e, c] : terms_) return c;
    return Rat(0);
}

ExprPoly& ExprPoly::operator+=(const ExprPoly& o) {
    for (const auto& [e, c] : o.terms_) add(e, c);
    return *this;
}

ExprPoly& ExprPoly::operator*=(const ExprPoly& o) {
    ExprPoly out(params_);
    for (const auto& [el, cl] : terms_)
        for (const auto& [er, cr] : o.terms_) {
            Exponents e(el.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = el[i] + er[i];
            out.add(e, Rat(cl * cr));
        }
    terms_ = std::move(out.terms_);
    return *this;
}

ExprPoly ExprPoly::operator-() const {
    ExprPoly out(params_);
    for (const auto& [e, c] : terms_) out.add(e, Rat(-c));
    return out;
}

ExprPoly ExprPoly::pow(int e) const {
    ExprPoly out = constant(params_, Rat(1));
    for (int i = 0; i < e; ++i) out *= *this;
    return out;
}

Poly2 ExprPoly::instantiate(const std::map<std::string, Rat>& assignment) const {
    Poly2 out;
    for (const auto& [e, c] : terms_) {
        Rat coeff = c;
        for (std::size_t i = 0; i < params_.size(); ++i) {
            if (e[i + 2] == 0) continue;
            auto it = assignment.find(params_[i]);
            if (it == assignment.end()) throw Error(ErrorKind::Parse, "parameter '" + params_[i] + "' is unassigned");
            for (int k = 0; k < e[i + 2]; ++k) coeff *= it->second;
        }
        out.add_term({e[0], e[1]}, coeff);
    }
    return out;
}

std::string ExprPoly::str() const {
    if (terms_.empty()) return "0";
    // Order by x, y degree as for Poly2, then by parameter exponents.
    std::vector<std::pair<Exponents, Rat>> ordered(terms_.begin(), terms_.end());
    std::stable_sort(ordered.begin(), ordered.end(), [](const auto& l, const auto& r) {
        Monomial ml{l.first[0], l.first[1]}, mr{r.first[0], r.first[1]};
        if (GradedLexLess{}(ml, mr)) return true;
        if (GradedLexLess{}(mr, ml)) return false;
        return l.first < r.first;
    });
    std::string out;
    bool first = true;
    for (const auto& [e, c] : ordered) {
        std::string factors;
        auto put = [&](const std::string& name, int power) {
            if (power == 0) return;
            if (!factors.empty()) factors += "*";
            factors += power == 1 ? name : name + "^" + std::to_string(power);
        };
        for (std::size_t i = 0; i < params_.size(); ++i) put(params_[i], e[i + 2]);
        put("x", e[0]);
        put("y", e[1]);
        std::string coeff = to_string(c);
        bool negative = coeff[0] == '-';
        if (negative) coeff.erase(0, 1);
        std::string term = factors.empty() ? coeff : coeff == "1" ? factors : coeff + "*" + factors;
        if (first) out += negative ? "-" + term : term;
        else out += negative ? " - " + term : " + " + term;
        first = false;
    }
    return out;
}

namespace {

class Parser {
public:
    Parser(const std::string& text, const std::vector<std::string>& params, int line, int column_offset)
        : text_(text), params_(params), line_(line), offset_(column_offset) {}

    ExprPoly parse() {
        ExprPoly e = expr();
        skip();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw Error(ErrorKind::Parse,
                    "line " + std::to_string(line_) + ", column " + std::to_string(pos_ + 1 + offset_) + ": " + what);
    }
    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    ExprPoly expr() {
        ExprPoly acc = term();
        for (;;) {
            if (eat('+')) acc += term();
            else if (eat('-')) acc += -term();
            else return acc;
        }
    }

    ExprPoly term() {
        ExprPoly acc = unary();
        for (;;) {
            if (eat('*')) {
                acc *= unary();
            } else if (eat('/')) {
                std::size_t at = pos_;
                ExprPoly d = unary();
                if (!d.is_constant() || d.constant_value() == 0) {
                    pos_ = at;
                    fail("division by a non-constant or zero");
                }
                acc *= ExprPoly::constant(all_params(), Rat(1 / d.constant_value()));
            } else {
                return acc;
            }
        }
    }

    ExprPoly unary() {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return power();
    }

    ExprPoly power() {
        ExprPoly base = atom();
        if (eat('^')) {
            skip();
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (start == pos_) fail("expected a non-negative integer exponent");
            if (pos_ - start > 4) fail("exponent too large");
            return base.pow(std::stoi(text_.substr(start, pos_ - start)));
        }
        return base;
    }

    ExprPoly atom() {
        skip();
        if (pos_ >= text_.size()) fail("unexpected end of expression");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            ExprPoly e = expr();
            if (!eat(')')) fail("expected ')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            return ExprPoly::constant(all_params(), Rat(mpz_class(text_.substr(start, pos_ - start))));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            std::string name = text_.substr(start, pos_ - start);
            if (name == "x") return ExprPoly::variable(all_params(), 0);
            if (name == "y") return ExprPoly::variable(all_params(), 1);
            auto it = std::find(params_.begin(), params_.end(), name);
            if (it == params_.end()) {
                pos_ = start;
                fail("unknown identifier '" + name + "'");
            }
            return ExprPoly::variable(all_params(), static_cast<std::size_t>(it - params_.begin()) + 2);
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    const std::vector<std::string>& all_params() const { return params_; }

    const std::string& text_;
    const std::vector<std::string>& params_;
    int line_;
    int offset_;
    std::size_t pos_ = 0;
};

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

}  // namespace

ExprPoly parse_expression(const std::string& text, const std::vector<std::string>& params, int line,
                          int column_offset) {
    return Parser(text, params, line, column_offset).parse();
}

PlanarVF SystemFile::instantiate(const std::map<std::string, Rat>& assignment) const {
    for (const auto& [name, v] : assignment)
        if (std::find(params.begin(), params.end(), name) == params.end())
            throw Error(ErrorKind::Parse, "assignment to unknown parameter '" + name + "'");
    return {dx.instantiate(assignment), dy.instantiate(assignment)};
}

SystemFile parse_system(const std::string& text) {
    SystemFile sys;
    std::istringstream in(text);
    std::string raw;
    int line = 0;
    bool have_dx = false, have_dy = false;
    while (std::getline(in, raw)) {
        ++line;
        std::string code = raw.substr(0, raw.find('#'));
        std::string s = trim(code);
        if (s.empty()) continue;
        if (s.rfind("params", 0) == 0 && (s.size() == 6 || std::isspace(static_cast<unsigned char>(s[6])))) {
            std::istringstream names(s.substr(6));
            std::string name;
            while (names >> name) {
                if (name == "x" || name == "y" || !(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_'))
                    throw Error(ErrorKind::Parse, "line " + std::to_string(line) + ": invalid parameter name '" + name + "'");
                sys.params.push_back(name);
            }
            continue;
        }
        auto eq = s.find('=');
        if (eq == std::string::npos)
            throw Error(ErrorKind::Parse, "line " + std::to_string(line) + ": expected 'dx = ...' or 'dy = ...'");
        std::string lhs = trim(s.substr(0, eq));
        auto raw_eq = code.find('=');
        ExprPoly rhs = parse_expression(code.substr(raw_eq + 1), sys.params, line, static_cast<int>(raw_eq + 1));
        if (lhs == "dx") {
            sys.dx = rhs;
            have_dx = true;
        } else if (lhs == "dy") {
            sys.dy = rhs;
            have_dy = true;
        } else {
            throw Error(ErrorKind::Parse, "line " + std::to_string(line) + ": unknown left-hand side '" + lhs + "'");
        }
    }
    if (!have_dx || !have_dy) throw Error(ErrorKind::Parse, "system needs both dx and dy");
    return sys;
}

SystemFile read_system_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Parse, "cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_system(buf.str());
}

std::map<std::string, Rat> parse_assignment(const std::string& text) {
    std::map<std::string, Rat> out;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        item = trim(item);
        if (item.empty()) continue;
        auto eq = item.find('=');
        if (eq == std::string::npos) throw Error(ErrorKind::Parse, "assignment '" + item + "' lacks '='");
        out[trim(item.substr(0, eq))] = parse_rat(item.substr(eq + 1));
    }
    return out;
}

}  // namespace qhnf
