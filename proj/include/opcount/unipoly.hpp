#pragma once

#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "opcount/exact.hpp"

namespace opcount {

// Univariate polynomial with exact rational coefficients, stored in
// ascending degree order with no trailing zero coefficients. The zero
// polynomial has an empty coefficient vector and degree -1.
class UniPoly {
public:
    UniPoly() = default;

    explicit UniPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { normalize(); }

    UniPoly(std::initializer_list<Rat> coeffs) : c_(coeffs) { normalize(); }

    static UniPoly constant(Rat v) { return UniPoly(std::vector<Rat>{std::move(v)}); }

    static UniPoly monomial(Rat coeff, int deg) {
        std::vector<Rat> c(static_cast<size_t>(deg) + 1, Rat(0));
        c.back() = std::move(coeff);
        return UniPoly(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }

    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    Rat coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return Rat(0);
        return c_[static_cast<size_t>(i)];
    }

    const std::vector<Rat>& coeffs() const { return c_; }

    UniPoly operator+(const UniPoly& o) const {
        std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
        for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
        for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
        return UniPoly(std::move(r));
    }

    UniPoly operator-(const UniPoly& o) const { return *this + o.scaled(Rat(-1)); }

    UniPoly operator*(const UniPoly& o) const {
        if (is_zero() || o.is_zero()) return UniPoly();
        std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
        for (size_t i = 0; i < c_.size(); ++i)
            for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
        return UniPoly(std::move(r));
    }

    UniPoly scaled(const Rat& s) const {
        std::vector<Rat> r(c_);
        for (auto& v : r) v *= s;
        return UniPoly(std::move(r));
    }

    Rat evaluate(const Rat& x) const {
        Rat acc(0);
        for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    Rat evaluate(long x) const { return evaluate(Rat(x)); }

    // P(n + shift) as a polynomial in n.
    UniPoly shifted(long shift) const {
        UniPoly result;
        UniPoly base = UniPoly({Rat(shift), Rat(1)});  // n + shift
        UniPoly pw = UniPoly::constant(Rat(1));
        for (size_t i = 0; i < c_.size(); ++i) {
            result = result + pw.scaled(c_[i]);
            if (i + 1 < c_.size()) pw = pw * base;
        }
        return result;
    }

    bool operator==(const UniPoly& o) const { return c_ == o.c_; }

    // Human-readable form, highest degree first, e.g. "3n^2 - (1/2)n + 4".
    std::string str(const std::string& var = "n") const {
        if (is_zero()) return "0";
        std::ostringstream out;
        bool first = true;
        for (int d = degree(); d >= 0; --d) {
            Rat c = coeff(d);
            if (c == 0) continue;
            bool neg = c < 0;
            Rat a = neg ? Rat(-c) : c;
            if (first) {
                if (neg) out << "-";
                first = false;
            } else {
                out << (neg ? " - " : " + ");
            }
            bool unit = (a == 1);
            if (d == 0 || !unit) {
                if (is_integral(a))
                    out << a.get_num().get_str();
                else
                    out << "(" << a.get_str() << ")";
            }
            if (d >= 1) {
                out << var;
                if (d > 1) out << "^" << d;
            }
        }
        return out.str();
    }

private:
    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Rat> c_;
};

// (a*n + b)(a*n + b + 1)...(a*n + b + count - 1) as a polynomial in n.
inline UniPoly rising_linear(long a, long b, long count) {
    UniPoly r = UniPoly::constant(Rat(1));
    for (long t = 0; t < count; ++t) r = r * UniPoly({Rat(b + t), Rat(a)});
    return r;
}

}  // namespace opcount
