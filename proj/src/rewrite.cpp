#include "brauer/rewrite.hpp"

#include <algorithm>
#include <deque>
#include <functional>

#include "json.hpp"

namespace brauer {

using json = nlohmann::json;

// ---- NormalForm

LaurentPoly NormalForm::coeff(const BrauerDiagram& d) const {
    auto it = terms.find(d);
    return it == terms.end() ? LaurentPoly() : it->second;
}

void NormalForm::add(const BrauerDiagram& d, const LaurentPoly& c) {
    if (d.m != m || d.n != n) throw WidthMismatch("diagram " + d.literal() + " does not fit a normal form on (" +
                                                  std::to_string(m) + "," + std::to_string(n) + ")");
    if (c.is_zero()) return;
    auto [it, fresh] = terms.try_emplace(d, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

NormalForm& NormalForm::operator+=(const NormalForm& o) {
    if (o.m != m || o.n != n) throw WidthMismatch("adding normal forms with different interfaces");
    for (auto& [d, c] : o.terms) add(d, c);
    return *this;
}

NormalForm& NormalForm::operator-=(const NormalForm& o) {
    if (o.m != m || o.n != n) throw WidthMismatch("subtracting normal forms with different interfaces");
    for (auto& [d, c] : o.terms) add(d, -c);
    return *this;
}

NormalForm& NormalForm::operator*=(const LaurentPoly& c) {
    if (c.is_zero()) {
        terms.clear();
        return *this;
    }
    for (auto& [d, x] : terms) x = c * x;
    return *this;
}

std::string NormalForm::str() const {
    if (terms.empty()) return "0";
    std::vector<std::pair<std::string, std::string>> items;
    for (auto& [d, c] : terms) items.emplace_back(d.literal(), c.str());
    std::sort(items.begin(), items.end());
    std::string s;
    for (size_t k = 0; k < items.size(); ++k) {
        std::string c = items[k].second;
        bool compound = c.find(" + ") != std::string::npos || c.find(" - ") != std::string::npos;
        if (compound) c = "(" + c + ")";
        if (k) s += " + ";
        s += c + " · " + items[k].first;
    }
    return s;
}

std::string NormalForm::to_json() const {
    json j;
    j["m"] = m;
    j["n"] = n;
    std::vector<std::pair<std::string, const Terms::value_type*>> items;
    for (auto& t : terms) items.emplace_back(t.first.literal(), &t);
    std::sort(items.begin(), items.end(), [](auto& x, auto& y) { return x.first < y.first; });
    j["terms"] = json::array();
    for (auto& [lit, t] : items) {
        json pairs = json::array();
        for (auto [p, q] : t->first.pairs()) pairs.push_back({p, q});
        j["terms"].push_back({{"pairs", pairs}, {"coeff", t->second.str()}});
    }
    return j.dump(2);
}

NormalForm NormalForm::from_json(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw SyntaxError(e.byte > 0 ? e.byte - 1 : 0, e.what());
    }
    NormalForm nf;
    nf.m = j.at("m").get<int>();
    nf.n = j.at("n").get<int>();
    for (auto& t : j.at("terms")) {
        std::vector<std::pair<int, int>> ps;
        for (auto& pr : t.at("pairs")) ps.emplace_back(pr.at(0).get<int>(), pr.at(1).get<int>());
        nf.add(diagram_new(nf.m, nf.n, ps), LaurentPoly::parse(t.at("coeff").get<std::string>()));
    }
    return nf;
}

NormalForm basis_nf(const BrauerDiagram& d, std::uint64_t fingerprint) {
    NormalForm nf{d.m, d.n, {}, fingerprint};
    nf.terms.emplace(d, LaurentPoly(1));
    return nf;
}

// ---- letter commutation

std::optional<Swap> try_commute(Letter x, Letter y) {
    // footprint of x at its top, of y at its bottom: an interval {i, i+1} or a gap before strand i
    const bool x_gap = x.is_cap(), y_gap = y.is_cup();
    const int i = x.pos, j = y.pos;
    int side = 0; // -1: y left of x, +1: y right of x
    if (!x_gap && !y_gap) side = j + 1 < i ? -1 : j > i + 1 ? 1 : 0;
    else if (!x_gap && y_gap) side = j <= i ? -1 : j >= i + 2 ? 1 : 0;
    else if (x_gap && !y_gap) side = j <= i - 2 ? -1 : j >= i ? 1 : 0;
    else side = j < i ? -1 : j > i ? 1 : 0;
    if (side == 0) return std::nullopt;
    Swap s{y, x, x.odd() && y.odd()};
    if (side < 0) s.upper.pos = x.pos + y.delta();
    else s.lower.pos = y.pos - x.delta();
    return s;
}

// ---- engine

namespace {

void axpy(Terms& out, const LaurentPoly& c, const Terms& t) {
    if (c.is_zero()) return;
    for (auto& [d, x] : t) {
        auto [it, fresh] = out.try_emplace(d, c * x);
        if (!fresh) {
            it->second += c * x;
            if (it->second.is_zero()) out.erase(it);
        } else if (it->second.is_zero()) {
            out.erase(it);
        }
    }
}

void put_letter(std::string& k, Letter g) {
    k.push_back(static_cast<char>(g.kind));
    k.push_back(static_cast<char>(g.pos));
}

std::string word_key(int m, const std::vector<Letter>& w) {
    std::string k;
    k.reserve(2 + 2 * w.size());
    k.push_back(static_cast<char>(m));
    for (auto g : w) put_letter(k, g);
    return k;
}

std::string diagram_key(const BrauerDiagram& d) {
    std::string k;
    k.push_back(static_cast<char>(d.m));
    k.push_back(static_cast<char>(d.n));
    for (int x : d.match) k.push_back(static_cast<char>(x));
    return k;
}

std::vector<Letter> concat(std::initializer_list<const std::vector<Letter>*> parts) {
    std::vector<Letter> r;
    for (auto* p : parts) r.insert(r.end(), p->begin(), p->end());
    return r;
}

std::vector<Letter> slice(const std::vector<Letter>& w, size_t from, size_t to) {
    return std::vector<Letter>(w.begin() + static_cast<long>(from), w.begin() + static_cast<long>(to));
}

std::vector<Letter> crossings(const std::vector<int>& perm) {
    std::vector<Letter> r;
    for (int i : perm) r.push_back(Letter::X(i));
    return r;
}

// X_{q+s} .. X_{q+1} A_q
std::vector<Letter> cap_block(int q, int s) { return cap_block_letters({q, s}); }

std::vector<Letter> caps_letters(const std::vector<Block>& caps) {
    std::vector<Letter> r;
    for (auto& b : caps)
        for (auto l : cap_block_letters(b)) r.push_back(l);
    return r;
}

} // namespace

Engine::Engine(CategoryParams p, bool require_consistent) : p_(std::move(p)) {
    if (require_consistent) {
        auto bad = check_consistency(p_);
        if (!bad.empty()) {
            std::string s;
            for (auto& b : bad) s += (s.empty() ? "" : ", ") + b;
            throw InconsistentParams("parameters violate: " + s);
        }
    }
    fp_ = p_.fingerprint();
    eps_ = LaurentPoly(p_.epsilon);
    e_ = LaurentPoly(p_.e);
    ep_ = LaurentPoly(p_.e_prime);
}

void Engine::tick() {
    if (++steps_ > fuel_) throw FuelExhausted("rewrite step budget of " + std::to_string(fuel_) + " exhausted");
}

template <class F>
NormalForm Engine::guarded(int m, int n, F&& body) {
    steps_ = 0;
    NormalForm nf{m, n, {}, fp_};
    try {
        nf.terms = body();
    } catch (...) {
        active_.clear();
        throw;
    }
    return nf;
}

NormalForm Engine::normalize(int domain, const std::vector<Letter>& letters) {
    int n = propagate_width(domain, letters);
    return guarded(domain, n, [&] { return nfw(domain, letters); });
}

NormalForm Engine::normalize(const GenWord& w) { return normalize(w.domain, w.letters); }

NormalForm Engine::normalize(const MorphismExpr& e) {
    NormalForm out{e.m, e.n, {}, fp_};
    for (auto& ww : expr_flatten(e)) out += ww.coeff * normalize(ww.word);
    return out;
}

NormalForm Engine::push_generator(Letter g, const BrauerDiagram& d) {
    int n = propagate_width(d.n, {g});
    return guarded(d.m, n, [&] { return push(g, d); });
}

NormalForm Engine::compose(const NormalForm& top, const NormalForm& bottom) {
    if (top.m != bottom.n)
        throw WidthMismatch("compose: upper morphism has domain " + std::to_string(top.m) +
                            ", lower has codomain " + std::to_string(bottom.n));
    for (auto* x : {&top, &bottom})
        if (x->params_fingerprint && x->params_fingerprint != fp_)
            throw ParamsMismatch("normal form was computed with different parameters");
    NormalForm out{bottom.m, top.n, {}, fp_};
    for (auto& [dy, cy] : bottom.terms) {
        auto wy = standard_parts(dy).letters;
        for (auto& [dx, cx] : top.terms) {
            auto wx = standard_parts(dx).letters;
            NormalForm part = normalize(bottom.m, concat({&wy, &wx}));
            out += (cy * cx) * part;
        }
    }
    return out;
}

NormalForm Engine::tensor(const NormalForm& x, const NormalForm& y) {
    for (auto* z : {&x, &y})
        if (z->params_fingerprint && z->params_fingerprint != fp_)
            throw ParamsMismatch("normal form was computed with different parameters");
    NormalForm out{x.m + y.m, x.n + y.n, {}, fp_};
    for (auto& [dx, cx] : x.terms) {
        auto wx = standard_parts(dx).letters;
        for (auto& [dy, cy] : y.terms) {
            std::vector<Letter> w;
            for (auto g : standard_parts(dy).letters) w.push_back({g.kind, g.pos + x.m});
            w.insert(w.end(), wx.begin(), wx.end());
            out += (cx * cy) * normalize(x.m + y.m, w);
        }
    }
    return out;
}

NormalForm Engine::under_cross() {
    LaurentPoly ainv, linv;
    try {
        ainv = p_.a.inverse();
        linv = p_.lambda.inverse();
    } catch (const NonInvertibleSubstitution&) {
        throw InconsistentParams("under-cross needs a and lambda to be invertible monomials");
    }
    NormalForm nf{2, 2, {}, fp_};
    nf.add(identity_diagram(2), -(p_.b * ainv));
    nf.add(letter_diagram(Letter::X(1), 2), ainv);
    nf.add(diagram_new(2, 2, {{0, 1}, {2, 3}}), -(p_.c * linv * ainv));
    return nf;
}

Terms Engine::expect_standard(int m, const Word& w) {
    auto comp = word_diagram(m, w);
    if (comp.loops != 0 || standard_parts(comp.result).letters != w)
        throw Error("rewrite engine: expected a standard word, got " + word_str(GenWord{m, w}));
    return Terms{{comp.result, LaurentPoly(1)}};
}

const Terms& Engine::nfw(int m, const Word& w) {
    std::string key = word_key(m, w);
    if (auto it = word_memo_.find(key); it != word_memo_.end()) return it->second;
    tick();
    auto comp = word_diagram(m, w);
    if (comp.loops == 0 && standard_parts(comp.result).letters == w)
        return word_memo_.emplace(key, Terms{{comp.result, LaurentPoly(1)}}).first->second;
    if (!active_.insert(key).second)
        throw FuelExhausted("rewrite cycle through " + word_str(GenWord{m, w}));
    Terms cur{{identity_diagram(m), LaurentPoly(1)}};
    for (auto g : w) {
        Terms next;
        for (auto& [d, c] : cur) axpy(next, c, push(g, d));
        cur = std::move(next);
    }
    active_.erase(key);
    return word_memo_.emplace(key, std::move(cur)).first->second;
}

const Terms& Engine::push(Letter g, const BrauerDiagram& d) {
    std::string key = diagram_key(d);
    put_letter(key, g);
    if (auto it = push_memo_.find(key); it != push_memo_.end()) return it->second;
    tick();
    if (!active_.insert(key).second)
        throw FuelExhausted("rewrite cycle pushing " + g.str() + " onto " + d.literal());

    auto gd = diagram_compose_oracle(letter_diagram(g, d.n), d);
    StdParts sp = standard_parts(d);
    Terms out;
    bool done = false;
    if (gd.loops == 0) {
        Word w = sp.letters;
        w.push_back(g);
        if (standard_parts(gd.result).letters == w) {
            out = Terms{{gd.result, LaurentPoly(1)}};
            done = true;
        }
    }
    if (!done) {
        switch (g.kind) {
        case Letter::Kind::Cup: {
            // the new cup sinks past every cup whose left end lies to its right
            int k = 0;
            for (auto [p, q] : d.pairs())
                if (p >= d.m && p - d.m >= g.pos - 1) ++k;
            out = Terms{{gd.result, eps_.pow(k)}};
            break;
        }
        case Letter::Kind::Cross: out = push_cross(g.pos, d, sp); break;
        case Letter::Kind::Cap: out = push_cap(g.pos, d, sp); break;
        }
    }
    active_.erase(key);
    return push_memo_.emplace(key, std::move(out)).first->second;
}

Terms Engine::extend(int m, const Terms& r, const Word& letters) {
    if (letters.empty()) return r;
    Terms out;
    for (auto& [d, c] : r) {
        Word w = standard_parts(d).letters;
        w.insert(w.end(), letters.begin(), letters.end());
        axpy(out, c, nfw(m, w));
    }
    return out;
}

Terms Engine::push_cross(int r, const BrauerDiagram& d, const StdParts& sp) {
    const Word& W = sp.letters;
    const int m = d.m;
    const size_t iC = sp.caps_len + sp.perm_len;
    size_t k = W.size();
    Word above; // built in reverse, flipped when used
    int mv = r;
    auto ab = [&] { return Word(above.rbegin(), above.rend()); };
    auto combo = [&](std::initializer_list<std::pair<LaurentPoly, Word>> parts) {
        Terms out;
        for (auto& [c, w] : parts)
            if (!c.is_zero()) axpy(out, c, nfw(m, w));
        return out;
    };

    while (k > iC) {
        Letter t = W[k - 1];
        if (auto sw = try_commute(t, Letter::X(mv))) {
            above.push_back(sw->upper);
            mv = sw->lower.pos;
            --k;
            continue;
        }
        Word pre = slice(W, 0, k - 1);
        Word up = ab();
        if (t.is_cross()) {
            if (t.pos == mv) { // twisting
                Word w1 = concat({&pre, &up});
                Word mid{Letter::X(mv)};
                Word w2 = concat({&pre, &mid, &up});
                Word cc{Letter::A(mv), Letter::C(mv)};
                Word w3 = concat({&pre, &cc, &up});
                return combo({{p_.a, w1}, {p_.b, w2}, {p_.c, w3}});
            }
            if (t.pos == mv + 1) {
                Letter u = W[k - 2];
                if (u == Letter::X(mv)) { // braid, keep sinking the upper strand
                    above.push_back(Letter::X(mv + 1));
                    above.push_back(Letter::X(mv));
                    mv = mv + 1;
                    k -= 2;
                    continue;
                }
                if (u == Letter::C(mv)) { // pulling
                    Word pre2 = slice(W, 0, k - 2);
                    Word r1{Letter::C(mv)}, r2{Letter::C(mv), Letter::X(mv + 1)}, r3{Letter::C(mv + 1)};
                    return combo({{p_.D, concat({&pre2, &r1, &up})},
                                  {p_.E, concat({&pre2, &r2, &up})},
                                  {p_.F, concat({&pre2, &r3, &up})}});
                }
                throw Error("rewrite engine: unexpected letter below " + t.str());
            }
            if (t.pos == mv - 1) { // the crossing extends the block
                Word w = slice(W, 0, k);
                w.push_back(Letter::X(mv));
                w.insert(w.end(), up.begin(), up.end());
                return expect_standard(m, w);
            }
        } else if (t.is_cup()) {
            if (t.pos == mv) { // untwisting
                Word mid{t};
                return combo({{p_.lambda, concat({&pre, &mid, &up})}});
            }
            if (t.pos == mv + 1) { // sliding
                Word r1{Letter::C(mv)}, r2{Letter::C(mv), Letter::X(mv + 1)}, r3{Letter::C(mv + 1)};
                return combo({{p_.d, concat({&pre, &r1, &up})},
                              {e_, concat({&pre, &r2, &up})},
                              {p_.f, concat({&pre, &r3, &up})}});
            }
            if (t.pos == mv - 1) {
                Word w = slice(W, 0, k);
                w.push_back(Letter::X(mv));
                w.insert(w.end(), up.begin(), up.end());
                return expect_standard(m, w);
            }
        }
        throw Error("rewrite engine: no rule for X" + std::to_string(mv) + " over " + t.str());
    }

    // reached the permutation part
    Word caps = slice(W, 0, sp.caps_len);
    Word up = ab();
    std::vector<int> perm = sp.perm;
    const int pw = sp.perm_width;
    if (mv < 1 || mv > pw - 1) throw Error("rewrite engine: crossing left the permutation part");
    std::vector<int> at(pw);
    for (int x = 0; x < pw; ++x) at[x] = x;
    for (int i : perm) std::swap(at[i - 1], at[i]);
    perm.push_back(mv);
    std::vector<int> canon = permutation_canonical_word(word_permutation(pw, perm));
    Word cw = crossings(canon);
    if (at[mv - 1] < at[mv]) return expect_standard(m, concat({&caps, &cw, &up}));
    // s_r w is shorter: twisting inside the symmetric group part
    Word w1 = concat({&caps, &cw, &up});
    Word cc{Letter::A(mv), Letter::C(mv)};
    Word w3 = concat({&caps, &cw, &cc, &up});
    Terms out;
    axpy(out, p_.a, nfw(m, w1));
    axpy(out, p_.b, Terms{{d, LaurentPoly(1)}});
    axpy(out, p_.c, p_.c.is_zero() ? Terms{} : nfw(m, w3));
    return out;
}

Terms Engine::push_cap(int q, const BrauerDiagram& d, const StdParts& sp) {
    const Word& W = sp.letters;
    const int m = d.m;
    const size_t iC = sp.caps_len + sp.perm_len;
    size_t k = W.size();
    Word above;
    int odd_swaps = 0;
    auto ab = [&] { return Word(above.rbegin(), above.rend()); };
    auto combo = [&](std::initializer_list<std::pair<LaurentPoly, Word>> parts) {
        Terms out;
        LaurentPoly sg = eps_.pow(odd_swaps);
        for (auto& [c, w] : parts)
            if (!c.is_zero()) axpy(out, sg * c, nfw(m, w));
        return out;
    };

    while (k > iC) {
        Letter t = W[k - 1];
        if (auto sw = try_commute(t, Letter::A(q))) {
            above.push_back(sw->upper);
            if (sw->odd_pair) ++odd_swaps;
            q = sw->lower.pos;
            --k;
            continue;
        }
        Word pre = slice(W, 0, k - 1);
        Word up = ab();
        if (t.is_cross()) {
            if (t.pos == q) { // upside-down untwisting
                Word r{Letter::A(q)};
                return combo({{p_.lambda_prime, concat({&pre, &r, &up})}});
            }
            if (t.pos == q + 1) {
                Letter u = W[k - 2];
                Word pre2 = slice(W, 0, k - 2);
                if (u == Letter::X(q)) { // upside-down pulling
                    Word r1{Letter::A(q)}, r2{Letter::X(q + 1), Letter::A(q)}, r3{Letter::A(q + 1)};
                    return combo({{p_.D_prime, concat({&pre2, &r1, &up})},
                                  {p_.E_prime, concat({&pre2, &r2, &up})},
                                  {p_.F_prime, concat({&pre2, &r3, &up})}});
                }
                if (u == Letter::C(q)) // delooping
                    return combo({{p_.rho, concat({&pre2, &up})}});
                throw Error("rewrite engine: unexpected letter below " + t.str());
            }
            if (t.pos == q - 1) { // upside-down sliding
                Word r1{Letter::A(q - 1)}, r2{Letter::X(q), Letter::A(q - 1)}, r3{Letter::A(q)};
                return combo({{p_.d_prime, concat({&pre, &r1, &up})},
                              {ep_, concat({&pre, &r2, &up})},
                              {p_.f_prime, concat({&pre, &r3, &up})}});
            }
        } else if (t.is_cup()) {
            if (t.pos == q) return combo({{p_.delta, concat({&pre, &up})}});           // looping
            if (t.pos == q + 1) return combo({{p_.sigma, concat({&pre, &up})}});       // straightening
            if (t.pos == q - 1) return combo({{p_.sigma_prime, concat({&pre, &up})}}); // the other snake
        }
        throw Error("rewrite engine: no rule for A" + std::to_string(q) + " over " + t.str());
    }

    const Terms& r = cap_block_perm(m, q, 0, sp.perm, sp.caps);
    Terms out = extend(m, r, ab());
    if (odd_swaps % 2 && p_.epsilon < 0)
        for (auto& [dd, c] : out) c = -c;
    return out;
}

// normal form of  caps . perm . J_s^q  where the cap block sits on the cupless part
const Terms& Engine::cap_block_perm(int m, int q, int s, const std::vector<int>& perm,
                                    const std::vector<Block>& caps) {
    std::string key;
    key.push_back(static_cast<char>(m));
    key.push_back(static_cast<char>(q));
    key.push_back(static_cast<char>(s));
    for (int i : perm) key.push_back(static_cast<char>(i));
    key.push_back('|');
    for (auto& b : caps) {
        key.push_back(static_cast<char>(b.a));
        key.push_back(static_cast<char>(b.s));
    }
    if (auto it = cbp_memo_.find(key); it != cbp_memo_.end()) return it->second;
    tick();
    if (!active_.insert(key).second) throw FuelExhausted("rewrite cycle in cap normalization");

    Terms out;
    const Word cl = caps_letters(caps);
    if (perm.empty()) {
        if (caps.empty() || q < caps.back().a) {
            Word K = cap_block(q, s);
            out = expect_standard(m, concat({&cl, &K}));
        } else {
            Block B = caps.back();
            std::vector<Block> lower(caps.begin(), caps.end() - 1);
            LaurentPoly sg = eps_;
            if (q >= B.a + B.s) {
                out = extend(m, cap_block_perm(m, q + 2, s, {}, lower), cap_block_letters(B));
            } else {
                std::vector<int> pb;
                for (int j = B.s; j >= 1; --j) pb.push_back(B.a + j);
                out = extend(m, cap_block_perm(m, q + 2, s, pb, lower), {Letter::A(B.a)});
            }
            for (auto& [dd, c] : out) c = sg * c;
        }
    } else {
        const int t = perm.back();
        std::vector<int> rest(perm.begin(), perm.end() - 1);
        const Word rw = crossings(rest);
        auto word_with = [&](const Word& tail) { return concat({&cl, &rw, &tail}); };
        if (t <= q - 2) {
            out = extend(m, cap_block_perm(m, q, s, rest, caps), {Letter::X(t)});
        } else if (t >= q + s + 2) {
            out = extend(m, cap_block_perm(m, q, s, rest, caps), {Letter::X(t - 2)});
        } else if (t == q - 1) {
            Word tail;
            for (int j = s; j >= 1; --j) tail.push_back(Letter::X(q + j));
            tail.push_back(Letter::A(q - 1));
            if (!p_.d_prime.is_zero()) axpy(out, p_.d_prime, nfw(m, word_with(tail)));
            axpy(out, ep_, cap_block_perm(m, q - 1, s + 1, rest, caps));
            if (!p_.f_prime.is_zero()) axpy(out, p_.f_prime, cap_block_perm(m, q, s, rest, caps));
        } else if (t == q && s == 0) {
            axpy(out, p_.lambda_prime, cap_block_perm(m, q, s, rest, caps));
        } else if (t == q) {
            Word tail;
            for (int j = s; j >= 2; --j) tail.push_back(Letter::X(q + j));
            tail.push_back(Letter::A(q));
            if (!p_.D_prime.is_zero()) axpy(out, p_.D_prime, nfw(m, word_with(tail)));
            if (!p_.E_prime.is_zero()) axpy(out, p_.E_prime, cap_block_perm(m, q, s, rest, caps));
            axpy(out, p_.F_prime, cap_block_perm(m, q + 1, s - 1, rest, caps));
        } else if (t < q + s) {
            out = extend(m, cap_block_perm(m, q, s, rest, caps), {Letter::X(t - 1)});
        } else if (t == q + s) {
            axpy(out, p_.a, cap_block_perm(m, q, s - 1, rest, caps));
            if (!p_.b.is_zero()) axpy(out, p_.b, cap_block_perm(m, q, s, rest, caps));
            if (!p_.c.is_zero()) {
                Word tail{Letter::A(q + s), Letter::C(q + s)};
                for (int j = s - 1; j >= 1; --j) tail.push_back(Letter::X(q + j));
                tail.push_back(Letter::A(q));
                axpy(out, p_.c, nfw(m, word_with(tail)));
            }
        } else { // t == q + s + 1
            out = cap_block_perm(m, q, s + 1, rest, caps);
        }
    }
    active_.erase(key);
    return cbp_memo_.emplace(key, std::move(out)).first->second;
}

NormalForm normalize(const GenWord& w, const CategoryParams& p) { return Engine(p).normalize(w); }

NormalForm nf_compose(const NormalForm& x, const NormalForm& y, const CategoryParams& p) {
    return Engine(p).compose(x, y);
}

NormalForm nf_tensor(const NormalForm& x, const NormalForm& y, const CategoryParams& p) {
    return Engine(p).tensor(x, y);
}

NormalForm under_cross(const CategoryParams& p) { return Engine(p).under_cross(); }

// ---- local confluence

std::vector<Reduct> one_step_reducts(const GenWord& gw, const CategoryParams& p) {
    using W = std::vector<Letter>;
    const W& w = gw.letters;
    std::vector<Reduct> out;
    const LaurentPoly e(p.e), ep(p.e_prime), eps(p.epsilon);
    auto X = Letter::X;
    auto A = Letter::A;
    auto C = Letter::C;

    auto emit = [&](const std::string& rule, size_t at, size_t len,
                    std::vector<std::pair<LaurentPoly, W>> rhs) {
        Reduct r{rule, at, {}};
        for (auto& [c, repl] : rhs) {
            if (c.is_zero()) continue;
            W nw(w.begin(), w.begin() + static_cast<long>(at));
            nw.insert(nw.end(), repl.begin(), repl.end());
            nw.insert(nw.end(), w.begin() + static_cast<long>(at + len), w.end());
            r.terms.emplace_back(c, std::move(nw));
        }
        out.push_back(std::move(r));
    };

    for (size_t k = 0; k + 1 < w.size(); ++k) {
        Letter x = w[k], y = w[k + 1];
        int i = x.pos;
        if (x == C(i) && y == X(i)) emit("untwisting", k, 2, {{p.lambda, {C(i)}}});
        if (x == X(i) && y == A(i)) emit("upside-down untwisting", k, 2, {{p.lambda_prime, {A(i)}}});
        if (x == C(i) && y == A(i)) emit("looping", k, 2, {{p.delta, {}}});
        if (x.is_cup() && y == A(i - 1)) emit("straightening", k, 2, {{p.sigma, {}}});
        if (x == C(i) && y == A(i + 1)) emit("upside-down straightening", k, 2, {{p.sigma_prime, {}}});
        if (x == X(i) && y == X(i)) emit("twisting", k, 2, {{p.a, {}}, {p.b, {X(i)}}, {p.c, {A(i), C(i)}}});
        if (x.is_cup() && i >= 2 && y == X(i - 1)) {
            int j = i - 1;
            emit("sliding", k, 2, {{p.d, {C(j)}}, {e, {C(j), X(j + 1)}}, {p.f, {C(j + 1)}}});
        }
        if (x == X(i) && y == A(i + 1))
            emit("upside-down sliding", k, 2, {{p.d_prime, {A(i)}}, {ep, {X(i + 1), A(i)}}, {p.f_prime, {A(i + 1)}}});
        if (auto sw = try_commute(x, y))
            emit("commutation", k, 2, {{sw->odd_pair ? eps : LaurentPoly(1), {sw->lower, sw->upper}}});
        if (k + 2 < w.size()) {
            Letter z = w[k + 2];
            if (x == C(i) && y == X(i + 1) && z == A(i)) emit("delooping", k, 3, {{p.rho, {}}});
            if (x == C(i) && y == X(i + 1) && z == X(i))
                emit("pulling", k, 3, {{p.D, {C(i)}}, {p.E, {C(i), X(i + 1)}}, {p.F, {C(i + 1)}}});
            if (x == X(i) && y == X(i + 1) && z == A(i))
                emit("upside-down pulling", k, 3, {{p.D_prime, {A(i)}}, {p.E_prime, {X(i + 1), A(i)}}, {p.F_prime, {A(i + 1)}}});
            if (x == X(i) && y == X(i + 1) && z == X(i)) emit("braid", k, 3, {{1, {X(i + 1), X(i), X(i + 1)}}});
            if (x == X(i) && i >= 2 && y == X(i - 1) && z == X(i)) emit("braid", k, 3, {{1, {X(i - 1), X(i), X(i - 1)}}});
        }
    }
    return out;
}

ConfluenceReport check_local_confluence(const CategoryParams& p, int max_width, int max_letters, size_t max_issues) {
    Engine eng(p, false);
    ConfluenceReport rep;
    std::vector<Letter> w;
    std::function<void(int, int)> rec = [&](int m, int width) {
        if (w.size() >= 2) {
            GenWord gw{m, w};
            auto reducts = one_step_reducts(gw, p);
            if (!reducts.empty()) {
                ++rep.words;
                NormalForm base = eng.normalize(gw);
                for (auto& r : reducts) {
                    ++rep.branches;
                    NormalForm got{base.m, base.n, {}, base.params_fingerprint};
                    for (auto& [c, lw] : r.terms) got += c * eng.normalize(m, lw);
                    if (!(got == base) && rep.issues.size() < max_issues)
                        rep.issues.push_back({gw, r.rule + "@" + std::to_string(r.at), got - base});
                    if (!(got == base)) break;
                }
            }
        }
        if (static_cast<int>(w.size()) == max_letters) return;
        for (int i = 1; i <= width - 1; ++i) {
            w.push_back(Letter::X(i));
            rec(m, width);
            w.pop_back();
            w.push_back(Letter::A(i));
            rec(m, width - 2);
            w.pop_back();
        }
        if (width + 2 <= max_width)
            for (int i = 1; i <= width + 1; ++i) {
                w.push_back(Letter::C(i));
                rec(m, width + 2);
                w.pop_back();
            }
    };
    for (int m = 0; m <= max_width; ++m) rec(m, m);
    return rep;
}

} // namespace brauer
