#pragma once
#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "brauer/errors.hpp"

namespace brauer {

class GaussRational {
public:
    GaussRational() = default;
    GaussRational(long v) : re_(v), im_(0) {}
    GaussRational(mpq_class re, mpq_class im = 0);

    static GaussRational i() { return GaussRational(0, 1); }

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }
    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    GaussRational operator-() const { return {-re_, -im_}; }
    GaussRational& operator+=(const GaussRational& o);
    GaussRational& operator-=(const GaussRational& o);
    GaussRational& operator*=(const GaussRational& o);
    GaussRational& operator/=(const GaussRational& o);
    GaussRational inverse() const;
    GaussRational pow(int k) const;
    GaussRational conj() const { return {re_, -im_}; }

    friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
    friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
    friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
    friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }
    friend bool operator==(const GaussRational& a, const GaussRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    std::string str() const;

private:
    mpq_class re_, im_;
};

using VarId = int;

// names are registered once and never removed; ids are stable for the process
VarId var_id(std::string_view name);
const std::string& var_name(VarId id);

// sorted by VarId, no zero exponents
using Monomial = std::vector<std::pair<VarId, int>>;

class LaurentPoly {
public:
    using Terms = std::map<Monomial, GaussRational>;

    LaurentPoly() = default;
    LaurentPoly(long c) : LaurentPoly(GaussRational(c)) {}
    LaurentPoly(const GaussRational& c);

    static LaurentPoly var(std::string_view name, int exp = 1);
    static LaurentPoly var(VarId id, int exp = 1);
    static LaurentPoly monomial(Monomial m, GaussRational c);
    static LaurentPoly parse(std::string_view text);
    // parses a polynomial starting at pos, stops before the first char that can't continue it
    static LaurentPoly parse_prefix(std::string_view text, size_t& pos);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_unit() const; // single nonzero term
    bool is_one() const;
    GaussRational constant_term() const;
    std::vector<VarId> vars() const;
    bool has_negative_exponent() const;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    LaurentPoly& operator*=(const GaussRational& c);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

    // only for units; throws NonInvertibleSubstitution otherwise
    LaurentPoly inverse() const;
    LaurentPoly pow(int k) const;

    std::string str() const;

private:
    void add_term(const Monomial& m, const GaussRational& c);
    Terms terms_;
};

inline LaurentPoly operator/(const LaurentPoly& a, const LaurentPoly& b) { return a * b.inverse(); }

enum class PolyOp { add, sub, mul, neg };
LaurentPoly poly_arith(PolyOp op, const LaurentPoly& p, const LaurentPoly& q = {});

LaurentPoly poly_substitute(const LaurentPoly& p, const std::map<VarId, LaurentPoly>& bindings);
GaussRational poly_eval(const LaurentPoly& p, const std::map<VarId, GaussRational>& point);

// quotient of two polynomials, used when the equations divide by non-units
struct Frac {
    LaurentPoly num;
    LaurentPoly den{1};

    Frac() = default;
    Frac(LaurentPoly n) : num(std::move(n)) {}
    Frac(long c) : num(c) {}
    Frac(LaurentPoly n, LaurentPoly d);

    friend Frac operator+(const Frac& a, const Frac& b);
    friend Frac operator-(const Frac& a, const Frac& b);
    friend Frac operator*(const Frac& a, const Frac& b);
    friend Frac operator/(const Frac& a, const Frac& b);
    Frac operator-() const { return {-num, den}; }
    friend bool operator==(const Frac& a, const Frac& b) { return a.num * b.den == b.num * a.den; }
    bool is_zero() const { return num.is_zero(); }
};

} // namespace brauer
