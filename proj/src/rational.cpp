#include "qhnf/rational.hpp"

#include "qhnf/error.hpp"

#include <cctype>

namespace qhnf {

const char* error_kind_name(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::Algebra: return "AlgebraError";
    case ErrorKind::TypeMismatch: return "TypeMismatch";
    case ErrorKind::UnsupportedShape: return "UnsupportedShape";
    case ErrorKind::UnsupportedRootField: return "UnsupportedRootField";
    case ErrorKind::NonIsolated: return "NonIsolated";
    case ErrorKind::Undecided: return "Undecided";
    case ErrorKind::SmallDivisor: return "SmallDivisor";
    case ErrorKind::InvalidComplement: return "InvalidComplement";
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::Unsupported: return "Unsupported";
    case ErrorKind::Internal: return "InternalError";
    }
    return "Error";
}

Rat parse_rat(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw Error(ErrorKind::Parse, "empty rational literal");
    if (!s.empty() && s.front() == '+') s.erase(0, 1);
    auto slash = s.find('/');
    auto valid_int = [](const std::string& part) {
        std::size_t i = (!part.empty() && part[0] == '-') ? 1 : 0;
        if (i == part.size()) return false;
        for (; i < part.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(part[i]))) return false;
        return true;
    };
    std::string num = slash == std::string::npos ? s : s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den))
        throw Error(ErrorKind::Parse, "malformed rational literal '" + text + "'");
    mpz_class n(num), d(den);
    if (d == 0) throw Error(ErrorKind::Algebra, "zero denominator in '" + text + "'");
    Rat r(n, d);
    r.canonicalize();
    return r;
}

std::string to_string(const Rat& value) { return value.get_str(); }

bool is_zero(const Rat& value) { return sgn(value) == 0; }

bool rational_sqrt(const Rat& value, Rat& root) {
    if (sgn(value) < 0) return false;
    mpz_class n = value.get_num(), d = value.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
    mpz_class rn = sqrt(n), rd = sqrt(d);
    root = Rat(rn, rd);
    root.canonicalize();
    return true;
}

GaussRat& GaussRat::operator+=(const GaussRat& o) {
    re += o.re;
    im += o.im;
    return *this;
}

GaussRat& GaussRat::operator-=(const GaussRat& o) {
    re -= o.re;
    im -= o.im;
    return *this;
}

GaussRat& GaussRat::operator*=(const GaussRat& o) {
    Rat r = re * o.re - im * o.im;
    Rat i = re * o.im + im * o.re;
    re = r;
    im = i;
    return *this;
}

GaussRat& GaussRat::operator/=(const GaussRat& o) {
    Rat norm = o.re * o.re + o.im * o.im;
    if (norm == 0) throw Error(ErrorKind::Algebra, "division by zero in Q(i)");
    *this *= o.conj();
    re /= norm;
    im /= norm;
    return *this;
}

GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }
GaussRat operator-(const GaussRat& a) { return {-a.re, -a.im}; }
bool operator==(const GaussRat& a, const GaussRat& b) { return a.re == b.re && a.im == b.im; }
bool is_zero(const GaussRat& value) { return sgn(value.re) == 0 && sgn(value.im) == 0; }

std::string to_string(const GaussRat& value) {
    if (value.im == 0) return to_string(value.re);
    std::string im_part = value.im == 1 ? "i" : value.im == -1 ? "-i" : to_string(value.im) + "*i";
    if (value.re == 0) return im_part;
    if (im_part[0] != '-') im_part = "+" + im_part;
    return "(" + to_string(value.re) + im_part + ")";
}

std::ostream& operator<<(std::ostream& os, const GaussRat& value) { return os << to_string(value); }

}  // namespace qhnf
