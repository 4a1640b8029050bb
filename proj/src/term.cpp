#include "brauer/term.hpp"

#include <cctype>

namespace brauer {

int propagate_width(int domain, const std::vector<Letter>& letters) {
    if (domain < 0) throw WidthViolation(0, "negative domain width");
    int w = domain;
    for (size_t k = 0; k < letters.size(); ++k) {
        const Letter& g = letters[k];
        const int lvl = static_cast<int>(k);
        if (g.pos < 1) throw WidthViolation(lvl, g.str() + ": position must be >= 1");
        switch (g.kind) {
        case Letter::Kind::Cross:
            if (g.pos > w - 1) throw WidthViolation(lvl, g.str() + " needs pos <= " + std::to_string(w - 1));
            break;
        case Letter::Kind::Cap:
            if (g.pos > w - 1) throw WidthViolation(lvl, g.str() + " needs pos <= " + std::to_string(w - 1));
            w -= 2;
            break;
        case Letter::Kind::Cup:
            if (g.pos > w + 1) throw WidthViolation(lvl, g.str() + " needs pos <= " + std::to_string(w + 1));
            w += 2;
            break;
        }
    }
    return w;
}

int GenWord::codomain() const { return propagate_width(domain, letters); }

GenWord word_new(int domain, std::vector<Letter> letters) {
    propagate_width(domain, letters);
    return GenWord{domain, std::move(letters)};
}

std::string word_str(const GenWord& w) {
    std::string s = "word(" + std::to_string(w.domain) + ", [";
    for (size_t k = 0; k < w.letters.size(); ++k) {
        if (k) s += ", ";
        s += w.letters[k].str();
    }
    return s + "])";
}

ExprPtr MorphismExpr::make_word(GenWord w) {
    auto e = std::make_shared<MorphismExpr>();
    e->kind = Kind::Word;
    e->m = w.domain;
    e->n = w.codomain();
    e->word = std::move(w);
    return e;
}

ExprPtr MorphismExpr::compose(ExprPtr top, ExprPtr bottom) {
    if (top->m != bottom->n)
        throw WidthViolation(0, "compose: upper operand has domain " + std::to_string(top->m) +
                                    " but lower operand has codomain " + std::to_string(bottom->n));
    auto e = std::make_shared<MorphismExpr>();
    e->kind = Kind::Compose;
    e->m = bottom->m;
    e->n = top->n;
    e->kids = {std::move(top), std::move(bottom)};
    return e;
}

ExprPtr MorphismExpr::tensor(ExprPtr left, ExprPtr right) {
    auto e = std::make_shared<MorphismExpr>();
    e->kind = Kind::Tensor;
    e->m = left->m + right->m;
    e->n = left->n + right->n;
    e->kids = {std::move(left), std::move(right)};
    return e;
}

ExprPtr MorphismExpr::scale(LaurentPoly c, ExprPtr x) {
    auto e = std::make_shared<MorphismExpr>();
    e->kind = Kind::Scale;
    e->m = x->m;
    e->n = x->n;
    e->coeff = std::move(c);
    e->kids = {std::move(x)};
    return e;
}

ExprPtr MorphismExpr::sum(std::vector<ExprPtr> xs) {
    if (xs.empty()) throw Error("empty sum");
    for (auto& x : xs)
        if (x->m != xs[0]->m || x->n != xs[0]->n)
            throw WidthViolation(0, "sum terms have different interfaces");
    if (xs.size() == 1) return xs[0];
    auto e = std::make_shared<MorphismExpr>();
    e->kind = Kind::Sum;
    e->m = xs[0]->m;
    e->n = xs[0]->n;
    e->kids = std::move(xs);
    return e;
}

namespace {

struct ExprParser {
    std::string_view s;
    size_t pos = 0;

    void ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool peek(char ch) {
        ws();
        return pos < s.size() && s[pos] == ch;
    }
    bool peek_word(std::string_view w) {
        ws();
        return s.substr(pos, w.size()) == w;
    }
    void expect(char ch) {
        if (!peek(ch)) throw SyntaxError(pos, std::string("expected '") + ch + "'");
        ++pos;
    }
    int integer() {
        ws();
        size_t st = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (st == pos) throw SyntaxError(pos, "expected integer");
        if (pos - st > 6) throw SyntaxError(st, "integer too large");
        return std::stoi(std::string(s.substr(st, pos - st)));
    }

    ExprPtr sum() {
        std::vector<ExprPtr> xs;
        bool neg = false;
        if (peek('-')) {
            ++pos;
            neg = true;
        }
        ExprPtr first = prod();
        xs.push_back(neg ? MorphismExpr::scale(-1, first) : first);
        while (true) {
            if (peek('+')) {
                ++pos;
                xs.push_back(prod());
            } else if (peek('-')) {
                ++pos;
                xs.push_back(MorphismExpr::scale(-1, prod()));
            } else {
                break;
            }
        }
        return MorphismExpr::sum(std::move(xs));
    }

    ExprPtr prod() {
        size_t save = pos;
        try {
            size_t p = pos;
            LaurentPoly c = LaurentPoly::parse_prefix(s, p);
            pos = p;
            if (peek('*')) {
                ++pos;
                return MorphismExpr::scale(std::move(c), comp());
            }
        } catch (const SyntaxError&) {
        }
        pos = save;
        return comp();
    }

    ExprPtr comp() {
        std::vector<ExprPtr> chain{tens()};
        while (peek('.')) {
            ++pos;
            chain.push_back(tens());
        }
        // x . y . z  =  x . (y . z)
        ExprPtr r = chain.back();
        for (size_t k = chain.size() - 1; k-- > 0;) r = MorphismExpr::compose(chain[k], r);
        return r;
    }

    ExprPtr tens() {
        ExprPtr r = atom();
        while (peek('#')) {
            ++pos;
            r = MorphismExpr::tensor(r, atom());
        }
        return r;
    }

    ExprPtr atom() {
        ws();
        if (peek('(')) {
            ++pos;
            ExprPtr e = sum();
            expect(')');
            return e;
        }
        if (peek_word("id")) {
            pos += 2;
            expect('@');
            return MorphismExpr::make_word(GenWord{integer(), {}});
        }
        if (pos < s.size() && (s[pos] == 's' || s[pos] == 'a' || s[pos] == 'u')) {
            char k = s[pos++];
            expect('(');
            int i = integer();
            expect(')');
            expect('@');
            int w = integer();
            Letter g = k == 's' ? Letter::X(i) : k == 'a' ? Letter::A(i) : Letter::C(i);
            return MorphismExpr::make_word(word_new(w, {g}));
        }
        if (pos >= s.size()) throw SyntaxError(pos, "unexpected end of input");
        throw SyntaxError(pos, "expected a morphism atom");
    }
};

} // namespace

ExprPtr parse_expr(std::string_view text) {
    ExprParser p{text};
    ExprPtr e = p.sum();
    p.ws();
    if (p.pos != text.size()) throw SyntaxError(p.pos, "trailing input");
    return e;
}

namespace {

std::string atom_text(Letter g, int w) {
    char k = g.is_cross() ? 's' : g.is_cap() ? 'a' : 'u';
    return std::string(1, k) + "(" + std::to_string(g.pos) + ")@" + std::to_string(w);
}

} // namespace

std::string expr_print(const MorphismExpr& e) {
    using K = MorphismExpr::Kind;
    switch (e.kind) {
    case K::Word: {
        if (e.word.letters.empty()) return "id@" + std::to_string(e.word.domain);
        std::vector<std::string> parts;
        int w = e.word.domain;
        for (auto& g : e.word.letters) {
            parts.push_back(atom_text(g, w));
            w += g.delta();
        }
        std::string s;
        for (size_t k = parts.size(); k-- > 0;) {
            s += parts[k];
            if (k) s += " . ";
        }
        return parts.size() == 1 ? s : "(" + s + ")";
    }
    case K::Compose: return "(" + expr_print(*e.kids[0]) + " . " + expr_print(*e.kids[1]) + ")";
    case K::Tensor: return "(" + expr_print(*e.kids[0]) + " # " + expr_print(*e.kids[1]) + ")";
    case K::Scale: return "(" + e.coeff.str() + ") * " + expr_print(*e.kids[0]);
    case K::Sum: {
        std::string s = "(";
        for (size_t k = 0; k < e.kids.size(); ++k) {
            if (k) s += " + ";
            s += expr_print(*e.kids[k]);
        }
        return s + ")";
    }
    }
    return {};
}

std::vector<WeightedWord> expr_flatten(const MorphismExpr& e) {
    using K = MorphismExpr::Kind;
    std::vector<WeightedWord> out;
    switch (e.kind) {
    case K::Word: out.push_back({LaurentPoly(1), e.word}); break;
    case K::Compose: {
        auto top = expr_flatten(*e.kids[0]);
        auto bot = expr_flatten(*e.kids[1]);
        for (auto& b : bot)
            for (auto& t : top) {
                GenWord w{b.word.domain, b.word.letters};
                w.letters.insert(w.letters.end(), t.word.letters.begin(), t.word.letters.end());
                out.push_back({b.coeff * t.coeff, std::move(w)});
            }
        break;
    }
    case K::Tensor: {
        auto xs = expr_flatten(*e.kids[0]);
        auto ys = expr_flatten(*e.kids[1]);
        const int shift = e.kids[0]->m;
        for (auto& x : xs)
            for (auto& y : ys) {
                GenWord w{shift + y.word.domain, {}};
                for (auto g : y.word.letters) w.letters.push_back({g.kind, g.pos + shift});
                w.letters.insert(w.letters.end(), x.word.letters.begin(), x.word.letters.end());
                out.push_back({x.coeff * y.coeff, std::move(w)});
            }
        break;
    }
    case K::Scale:
        for (auto& x : expr_flatten(*e.kids[0])) out.push_back({e.coeff * x.coeff, std::move(x.word)});
        break;
    case K::Sum:
        for (auto& k : e.kids)
            for (auto& x : expr_flatten(*k)) out.push_back(std::move(x));
        break;
    }
    for (auto& x : out) propagate_width(x.word.domain, x.word.letters);
    return out;
}

} // namespace brauer
