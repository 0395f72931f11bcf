#pragma once

#include <gmpxx.h>

#include <ostream>
#include <string>

namespace qhnf {

// Exact rationals; mpq_class keeps values canonical after every operation.
using Rat = mpq_class;

Rat parse_rat(const std::string& text);
std::string to_string(const Rat& value);
bool is_zero(const Rat& value);
// Returns the rational square root when value is a perfect rational square.
bool rational_sqrt(const Rat& value, Rat& root);

// Elements of Q(i).
struct GaussRat {
    Rat re;
    Rat im;

    GaussRat() = default;
    GaussRat(long v) : re(v), im(0) {}
    GaussRat(Rat r) : re(std::move(r)), im(0) {}
    GaussRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

    bool is_real() const { return im == 0; }
    GaussRat conj() const { return {re, -im}; }

    GaussRat& operator+=(const GaussRat& o);
    GaussRat& operator-=(const GaussRat& o);
    GaussRat& operator*=(const GaussRat& o);
    GaussRat& operator/=(const GaussRat& o);
};

GaussRat operator+(GaussRat a, const GaussRat& b);
GaussRat operator-(GaussRat a, const GaussRat& b);
GaussRat operator*(GaussRat a, const GaussRat& b);
GaussRat operator/(GaussRat a, const GaussRat& b);
GaussRat operator-(const GaussRat& a);
bool operator==(const GaussRat& a, const GaussRat& b);
bool is_zero(const GaussRat& value);
std::string to_string(const GaussRat& value);
std::ostream& operator<<(std::ostream& os, const GaussRat& value);

}  // namespace qhnf
