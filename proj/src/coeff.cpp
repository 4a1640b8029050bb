#include "brauer/coeff.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <mutex>
#include <unordered_map>

namespace brauer {

GaussRational::GaussRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
}

GaussRational& GaussRational::operator+=(const GaussRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussRational& GaussRational::operator-=(const GaussRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussRational& GaussRational::operator*=(const GaussRational& o) {
    if (sgn(im_) == 0 && sgn(o.im_) == 0) {
        re_ *= o.re_;
        return *this;
    }
    mpq_class r = re_ * o.re_ - im_ * o.im_;
    mpq_class i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

GaussRational GaussRational::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    mpq_class n = re_ * re_ + im_ * im_;
    return {re_ / n, -im_ / n};
}

GaussRational& GaussRational::operator/=(const GaussRational& o) { return *this *= o.inverse(); }

GaussRational GaussRational::pow(int k) const {
    GaussRational base = k < 0 ? inverse() : *this;
    GaussRational r(1);
    for (int j = 0; j < std::abs(k); ++j) r *= base;
    return r;
}

std::string GaussRational::str() const {
    if (sgn(im_) == 0) return re_.get_str();
    std::string ims;
    if (im_ == 1) ims = "i";
    else if (im_ == -1) ims = "-i";
    else ims = im_.get_str() + "*i";
    if (sgn(re_) == 0) return ims;
    std::string s = "(" + re_.get_str();
    if (ims[0] == '-') s += " - " + ims.substr(1);
    else s += " + " + ims;
    return s + ")";
}

// ---- variable registry

namespace {

struct Registry {
    std::mutex mu;
    std::deque<std::string> names;
    std::unordered_map<std::string, VarId> ids;

    Registry() {
        for (const char* n : {"lambda", "b", "sigma", "delta", "c", "q", "v", "z", "alpha", "beta",
                              "gamma", "r"})
            add(n);
    }
    VarId add(const std::string& n) {
        auto it = ids.find(n);
        if (it != ids.end()) return it->second;
        VarId id = static_cast<VarId>(names.size());
        names.push_back(n);
        ids.emplace(n, id);
        return id;
    }
};

Registry& registry() {
    static Registry r;
    return r;
}

std::string canonical_name(std::string_view n) {
    static const std::unordered_map<std::string, std::string> alias = {
        {"λ", "lambda"}, {"ς", "sigma"}, {"σ", "sigma"}, {"δ", "delta"}, {"α", "alpha"},
        {"β", "beta"},   {"γ", "gamma"}, {"ρ", "rho"},
    };
    std::string s(n);
    size_t primes = s.find('\'');
    std::string base = primes == std::string::npos ? s : s.substr(0, primes);
    auto it = alias.find(base);
    return it == alias.end() ? s : it->second + s.substr(base.size());
}

} // namespace

VarId var_id(std::string_view name) {
    auto& r = registry();
    std::lock_guard lk(r.mu);
    return r.add(canonical_name(name));
}

const std::string& var_name(VarId id) {
    auto& r = registry();
    std::lock_guard lk(r.mu);
    return r.names.at(static_cast<size_t>(id));
}

// ---- LaurentPoly

namespace {

Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r;
    r.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) r.push_back(a[i++]);
        else if (i == a.size() || b[j].first < a[i].first) r.push_back(b[j++]);
        else {
            int e = a[i].second + b[j].second;
            if (e != 0) r.emplace_back(a[i].first, e);
            ++i, ++j;
        }
    }
    return r;
}

} // namespace

LaurentPoly::LaurentPoly(const GaussRational& c) {
    if (!c.is_zero()) terms_.emplace(Monomial{}, c);
}

LaurentPoly LaurentPoly::var(std::string_view name, int exp) { return var(var_id(name), exp); }

LaurentPoly LaurentPoly::var(VarId id, int exp) {
    if (exp == 0) return LaurentPoly(1);
    return monomial({{id, exp}}, 1);
}

LaurentPoly LaurentPoly::monomial(Monomial m, GaussRational c) {
    LaurentPoly p;
    std::sort(m.begin(), m.end());
    Monomial clean;
    for (auto& [v, e] : m) {
        if (!clean.empty() && clean.back().first == v) clean.back().second += e;
        else clean.emplace_back(v, e);
        if (clean.back().second == 0) clean.pop_back();
    }
    p.add_term(clean, c);
    return p;
}

void LaurentPoly::add_term(const Monomial& m, const GaussRational& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

bool LaurentPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

bool LaurentPoly::is_unit() const { return terms_.size() == 1; }

bool LaurentPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first.empty() && terms_.begin()->second.is_one();
}

GaussRational LaurentPoly::constant_term() const {
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? GaussRational(0) : it->second;
}

std::vector<VarId> LaurentPoly::vars() const {
    std::vector<VarId> r;
    for (auto& [m, c] : terms_)
        for (auto& [v, e] : m) r.push_back(v);
    std::sort(r.begin(), r.end());
    r.erase(std::unique(r.begin(), r.end()), r.end());
    return r;
}

bool LaurentPoly::has_negative_exponent() const {
    for (auto& [m, c] : terms_)
        for (auto& [v, e] : m)
            if (e < 0) return true;
    return false;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (auto& [ma, ca] : a.terms_)
        for (auto& [mb, cb] : b.terms_) r.add_term(mono_mul(ma, mb), ca * cb);
    return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly& LaurentPoly::operator*=(const GaussRational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, x] : terms_) x *= c;
    return *this;
}

LaurentPoly LaurentPoly::inverse() const {
    if (!is_unit()) throw NonInvertibleSubstitution("not a unit: " + str());
    auto& [m, c] = *terms_.begin();
    Monomial inv = m;
    for (auto& [v, e] : inv) e = -e;
    return monomial(inv, c.inverse());
}

LaurentPoly LaurentPoly::pow(int k) const {
    LaurentPoly base = k < 0 ? inverse() : *this;
    LaurentPoly r(1);
    for (int j = 0; j < std::abs(k); ++j) r *= base;
    return r;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    struct Item {
        int deg;
        std::vector<std::pair<std::string, int>> named;
        const GaussRational* c;
    };
    std::vector<Item> items;
    for (auto& [m, c] : terms_) {
        Item it{0, {}, &c};
        for (auto& [v, e] : m) {
            it.deg += e;
            it.named.emplace_back(var_name(v), e);
        }
        std::sort(it.named.begin(), it.named.end());
        items.push_back(std::move(it));
    }
    std::sort(items.begin(), items.end(), [](const Item& x, const Item& y) {
        if (x.deg != y.deg) return x.deg > y.deg;
        return x.named < y.named;
    });
    std::string out;
    for (size_t k = 0; k < items.size(); ++k) {
        auto& it = items[k];
        std::string mono;
        for (auto& [n, e] : it.named) {
            if (!mono.empty()) mono += "*";
            mono += n;
            if (e != 1) mono += "^" + std::to_string(e);
        }
        std::string cs = it.c->str();
        std::string t;
        if (mono.empty()) t = cs;
        else if (it.c->is_one()) t = mono;
        else if (*it.c == GaussRational(-1)) t = "-" + mono;
        else t = cs + "*" + mono;
        if (k == 0) out = t;
        else if (t[0] == '-') out += " - " + t.substr(1);
        else out += " + " + t;
    }
    return out;
}

// ---- parser

namespace {

bool ident_start(unsigned char ch) { return std::isalpha(ch) || ch == '_' || ch >= 0x80; }
bool ident_char(unsigned char ch) { return std::isalnum(ch) || ch == '_' || ch == '\'' || ch >= 0x80; }

struct PolyParser {
    std::string_view s;
    size_t pos;
    bool embedded = false;

    void ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool peek(char ch) {
        ws();
        return pos < s.size() && s[pos] == ch;
    }

    // identifier followed by '(' or '@' belongs to the morphism DSL
    bool atom_ahead(size_t p) {
        while (p < s.size() && std::isspace(static_cast<unsigned char>(s[p]))) ++p;
        if (p >= s.size() || !ident_start(static_cast<unsigned char>(s[p]))) return false;
        while (p < s.size() && ident_char(static_cast<unsigned char>(s[p]))) ++p;
        while (p < s.size() && std::isspace(static_cast<unsigned char>(s[p]))) ++p;
        return p < s.size() && (s[p] == '(' || s[p] == '@');
    }

    mpz_class integer() {
        ws();
        size_t st = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (st == pos) throw SyntaxError(pos, "expected integer");
        return mpz_class(std::string(s.substr(st, pos - st)));
    }

    LaurentPoly sum() {
        ws();
        LaurentPoly r;
        bool neg = false;
        if (peek('-')) {
            ++pos;
            neg = true;
        } else if (peek('+')) {
            ++pos;
        }
        r = term();
        if (neg) r = -r;
        while (true) {
            if (peek('+')) {
                ++pos;
                r += term();
            } else if (peek('-')) {
                ++pos;
                r -= term();
            } else {
                break;
            }
        }
        return r;
    }

    LaurentPoly term() {
        LaurentPoly r = factor();
        while (peek('*') && !atom_ahead(pos + 1)) {
            size_t save = pos++;
            if (!embedded) {
                r *= factor();
                continue;
            }
            // inside a morphism expression the '*' may introduce the morphism itself
            try {
                r *= factor();
            } catch (const SyntaxError&) {
                pos = save;
                break;
            }
        }
        return r;
    }

    LaurentPoly factor() {
        LaurentPoly b = base();
        if (peek('^')) {
            ++pos;
            bool neg = false;
            if (peek('-')) {
                ++pos;
                neg = true;
            } else if (peek('+')) {
                ++pos;
            }
            size_t at = pos;
            mpz_class k = integer();
            if (!k.fits_sint_p() || k > 100000) throw SyntaxError(at, "exponent too large");
            int e = static_cast<int>(k.get_si());
            if (neg) {
                if (!b.is_unit()) throw SyntaxError(at, "negative power of a non-monomial");
                e = -e;
            }
            b = b.pow(e);
        }
        return b;
    }

    LaurentPoly base() {
        ws();
        if (pos >= s.size()) throw SyntaxError(pos, "unexpected end of input");
        unsigned char ch = static_cast<unsigned char>(s[pos]);
        if (std::isdigit(ch)) {
            mpz_class n = integer();
            mpz_class d = 1;
            if (peek('/')) {
                ++pos;
                size_t at = pos;
                d = integer();
                if (d == 0) throw SyntaxError(at, "zero denominator");
            }
            return LaurentPoly(GaussRational(mpq_class(n, d)));
        }
        if (ch == '(') {
            ++pos;
            LaurentPoly r = sum();
            if (!peek(')')) throw SyntaxError(pos, "expected ')'");
            ++pos;
            return r;
        }
        if (ident_start(ch)) {
            if (atom_ahead(pos)) throw SyntaxError(pos, "morphism atom where a coefficient was expected");
            size_t st = pos;
            while (pos < s.size() && ident_char(static_cast<unsigned char>(s[pos]))) ++pos;
            std::string_view name = s.substr(st, pos - st);
            if (name == "i") return LaurentPoly(GaussRational::i());
            return LaurentPoly::var(name);
        }
        throw SyntaxError(pos, std::string("unexpected character '") + s[pos] + "'");
    }
};

} // namespace

LaurentPoly LaurentPoly::parse(std::string_view text) {
    PolyParser p{text, 0};
    LaurentPoly r = p.sum();
    p.ws();
    if (p.pos != text.size()) throw SyntaxError(p.pos, "trailing input");
    return r;
}

LaurentPoly LaurentPoly::parse_prefix(std::string_view text, size_t& pos) {
    PolyParser p{text, pos, true};
    LaurentPoly r = p.term();
    pos = p.pos;
    return r;
}

LaurentPoly poly_arith(PolyOp op, const LaurentPoly& p, const LaurentPoly& q) {
    switch (op) {
    case PolyOp::add: return p + q;
    case PolyOp::sub: return p - q;
    case PolyOp::mul: return p * q;
    case PolyOp::neg: return -p;
    }
    return {};
}

LaurentPoly poly_substitute(const LaurentPoly& p, const std::map<VarId, LaurentPoly>& bindings) {
    LaurentPoly out;
    for (auto& [m, c] : p.terms()) {
        LaurentPoly t(c);
        Monomial rest;
        for (auto& [v, e] : m) {
            auto it = bindings.find(v);
            if (it == bindings.end()) {
                rest.emplace_back(v, e);
                continue;
            }
            if (e < 0 && !it->second.is_unit())
                throw NonInvertibleSubstitution(var_name(v) + " has a negative exponent but is bound to " +
                                                it->second.str());
            t *= it->second.pow(e);
        }
        out += t * LaurentPoly::monomial(rest, 1);
    }
    return out;
}

GaussRational poly_eval(const LaurentPoly& p, const std::map<VarId, GaussRational>& point) {
    GaussRational out;
    for (auto& [m, c] : p.terms()) {
        GaussRational t = c;
        for (auto& [v, e] : m) {
            auto it = point.find(v);
            if (it == point.end()) throw MissingBinding("no value for " + var_name(v));
            if (e < 0 && it->second.is_zero()) throw DivisionByZero(var_name(v) + " = 0 under a negative power");
            t *= it->second.pow(e);
        }
        out += t;
    }
    return out;
}

Frac::Frac(LaurentPoly n, LaurentPoly d) : num(std::move(n)), den(std::move(d)) {
    if (den.is_zero()) throw DivisionByZero("zero denominator");
}

Frac operator+(const Frac& a, const Frac& b) {
    if (a.den == b.den) return {a.num + b.num, a.den};
    return {a.num * b.den + b.num * a.den, a.den * b.den};
}

Frac operator-(const Frac& a, const Frac& b) { return a + (-b); }

Frac operator*(const Frac& a, const Frac& b) { return {a.num * b.num, a.den * b.den}; }

Frac operator/(const Frac& a, const Frac& b) {
    if (b.num.is_zero()) throw DivisionByZero("division by zero fraction");
    return {a.num * b.den, a.den * b.num};
}

} // namespace brauer
