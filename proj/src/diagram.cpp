#include "brauer/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

namespace brauer {

int BrauerDiagram::caps() const {
    int k = 0;
    for (int i = 0; i < m; ++i)
        if (match[i] < m && match[i] > i) ++k;
    return k;
}

int BrauerDiagram::cups() const {
    int k = 0;
    for (int i = m; i < m + n; ++i)
        if (match[i] >= m && match[i] > i) ++k;
    return k;
}

std::vector<std::pair<int, int>> BrauerDiagram::pairs() const {
    std::vector<std::pair<int, int>> r;
    for (int i = 0; i < m + n; ++i)
        if (match[i] > i) r.emplace_back(i, match[i]);
    return r;
}

std::string BrauerDiagram::literal() const {
    std::string s = "B[" + std::to_string(m) + "," + std::to_string(n) + " |";
    auto ps = pairs();
    if (ps.empty()) s += " ";
    else s += " ";
    for (auto [p, q] : ps) s += "(" + std::to_string(p) + "," + std::to_string(q) + ")";
    return s + "]";
}

BrauerDiagram BrauerDiagram::parse(std::string_view t) {
    size_t pos = 0;
    auto ws = [&] {
        while (pos < t.size() && std::isspace(static_cast<unsigned char>(t[pos]))) ++pos;
    };
    auto expect = [&](char ch) {
        ws();
        if (pos >= t.size() || t[pos] != ch) throw SyntaxError(pos, std::string("expected '") + ch + "'");
        ++pos;
    };
    auto num = [&] {
        ws();
        size_t st = pos;
        while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) ++pos;
        if (st == pos) throw SyntaxError(pos, "expected integer");
        return std::stoi(std::string(t.substr(st, pos - st)));
    };
    expect('B');
    expect('[');
    int m = num();
    expect(',');
    int n = num();
    expect('|');
    std::vector<std::pair<int, int>> ps;
    while (true) {
        ws();
        if (pos < t.size() && t[pos] == ',') {
            ++pos;
            continue;
        }
        if (pos < t.size() && t[pos] == '(') {
            ++pos;
            int p = num();
            expect(',');
            int q = num();
            expect(')');
            ps.emplace_back(p, q);
            continue;
        }
        break;
    }
    expect(']');
    ws();
    if (pos != t.size()) throw SyntaxError(pos, "trailing input");
    return diagram_new(m, n, ps);
}

BrauerDiagram diagram_new(int m, int n, const std::vector<std::pair<int, int>>& pairs) {
    if (m < 0 || n < 0) throw NotAMatching("negative dot count");
    if ((m + n) % 2) throw ParityError("m+n = " + std::to_string(m + n) + " is odd");
    BrauerDiagram d{m, n, std::vector<int>(m + n, -1)};
    for (auto [p, q] : pairs) {
        if (p < 0 || q < 0 || p >= m + n || q >= m + n || p == q)
            throw NotAMatching("bad pair (" + std::to_string(p) + "," + std::to_string(q) + ")");
        if (d.match[p] != -1 || d.match[q] != -1)
            throw NotAMatching("dot used twice in (" + std::to_string(p) + "," + std::to_string(q) + ")");
        d.match[p] = q;
        d.match[q] = p;
    }
    for (int i = 0; i < m + n; ++i)
        if (d.match[i] == -1) throw NotAMatching("dot " + std::to_string(i) + " is unmatched");
    return d;
}

BrauerDiagram identity_diagram(int n) {
    BrauerDiagram d{n, n, std::vector<int>(2 * n)};
    for (int i = 0; i < n; ++i) {
        d.match[i] = n + i;
        d.match[n + i] = i;
    }
    return d;
}

std::vector<BrauerDiagram> enumerate_diagrams(int m, int n) {
    std::vector<BrauerDiagram> out;
    if (m < 0 || n < 0 || (m + n) % 2) return out;
    int N = m + n;
    std::vector<int> match(N, -1);
    std::function<void()> rec = [&] {
        int i = 0;
        while (i < N && match[i] != -1) ++i;
        if (i == N) {
            out.push_back(BrauerDiagram{m, n, match});
            return;
        }
        for (int j = i + 1; j < N; ++j) {
            if (match[j] != -1) continue;
            match[i] = j;
            match[j] = i;
            rec();
            match[i] = match[j] = -1;
        }
    };
    rec();
    std::sort(out.begin(), out.end(), [](const BrauerDiagram& a, const BrauerDiagram& b) {
        return a.match < b.match;
    });
    return out;
}

Composite diagram_compose_oracle(const BrauerDiagram& top, const BrauerDiagram& bot) {
    if (top.m != bot.n)
        throw WidthMismatch("compose: top has " + std::to_string(top.m) + " bottom dots, bottom has " +
                            std::to_string(bot.n) + " top dots");
    const int mid = bot.n;
    Composite c;
    c.result = BrauerDiagram{bot.m, top.n, std::vector<int>(bot.m + top.n, -1)};
    std::vector<char> seen(mid, 0);
    // walk from an outer dot; returns the outer endpoint in result numbering
    auto walk = [&](bool on_top, int dot) {
        while (true) {
            if (on_top) {
                int p = top.match[dot];
                if (p >= top.m) return bot.m + (p - top.m);
                seen[p] = 1;
                on_top = false;
                dot = bot.m + p;
            } else {
                int p = bot.match[dot];
                if (p < bot.m) return p;
                int k = p - bot.m;
                seen[k] = 1;
                on_top = true;
                dot = k;
            }
        }
    };
    for (int i = 0; i < bot.m; ++i) {
        if (c.result.match[i] != -1) continue;
        int j = walk(false, i);
        c.result.match[i] = j;
        c.result.match[j] = i;
    }
    for (int t = 0; t < top.n; ++t) {
        int i = bot.m + t;
        if (c.result.match[i] != -1) continue;
        int j = walk(true, top.m + t);
        c.result.match[i] = j;
        c.result.match[j] = i;
    }
    for (int k = 0; k < mid; ++k) {
        if (seen[k]) continue;
        ++c.loops;
        int cur = k;
        while (!seen[cur]) {
            seen[cur] = 1;
            int p = top.match[cur]; // stays in the middle
            seen[p] = 1;
            cur = bot.match[bot.m + p] - bot.m;
        }
    }
    return c;
}

BrauerDiagram diagram_tensor(const BrauerDiagram& x, const BrauerDiagram& y) {
    BrauerDiagram d{x.m + y.m, x.n + y.n, std::vector<int>(x.m + y.m + x.n + y.n)};
    // index maps from each factor into the juxtaposition
    auto mx = [&](int i) { return i < x.m ? i : y.m + i; };
    auto my = [&](int i) { return i < y.m ? x.m + i : x.m + x.n + i; };
    for (int i = 0; i < x.m + x.n; ++i) d.match[mx(i)] = mx(x.match[i]);
    for (int i = 0; i < y.m + y.n; ++i) d.match[my(i)] = my(y.match[i]);
    return d;
}

BrauerDiagram diagram_vflip(const BrauerDiagram& d) {
    BrauerDiagram r{d.n, d.m, std::vector<int>(d.m + d.n)};
    auto f = [&](int i) { return i < d.m ? d.n + i : i - d.m; };
    for (int i = 0; i < d.m + d.n; ++i) r.match[f(i)] = f(d.match[i]);
    return r;
}

BrauerDiagram diagram_hflip(const BrauerDiagram& d) {
    BrauerDiagram r{d.m, d.n, std::vector<int>(d.m + d.n)};
    auto f = [&](int i) { return i < d.m ? d.m - 1 - i : d.m + (d.n - 1 - (i - d.m)); };
    for (int i = 0; i < d.m + d.n; ++i) r.match[f(i)] = f(d.match[i]);
    return r;
}

std::string Letter::str() const {
    const char* k = kind == Kind::Cross ? "X" : kind == Kind::Cap ? "A" : "C";
    return k + std::to_string(pos);
}

BrauerDiagram letter_diagram(Letter g, int w) {
    const int i = g.pos;
    std::vector<std::pair<int, int>> ps;
    switch (g.kind) {
    case Letter::Kind::Cross:
        if (i < 1 || i > w - 1) throw WidthViolation(0, "s(" + std::to_string(i) + ") on width " + std::to_string(w));
        for (int k = 0; k < w; ++k) {
            int t = k == i - 1 ? i : k == i ? i - 1 : k;
            ps.emplace_back(k, w + t);
        }
        return diagram_new(w, w, ps);
    case Letter::Kind::Cap:
        if (i < 1 || i > w - 1) throw WidthViolation(0, "a(" + std::to_string(i) + ") on width " + std::to_string(w));
        ps.emplace_back(i - 1, i);
        for (int k = 0; k < w; ++k) {
            if (k == i - 1 || k == i) continue;
            ps.emplace_back(k, w + (k < i ? k : k - 2));
        }
        return diagram_new(w, w - 2, ps);
    case Letter::Kind::Cup:
        if (i < 1 || i > w + 1) throw WidthViolation(0, "u(" + std::to_string(i) + ") on width " + std::to_string(w));
        ps.emplace_back(w + i - 1, w + i);
        for (int k = 0; k < w; ++k) ps.emplace_back(k, w + (k < i - 1 ? k : k + 2));
        return diagram_new(w, w + 2, ps);
    }
    return {};
}

Composite word_diagram(int m, const std::vector<Letter>& letters) {
    Composite c{0, identity_diagram(m)};
    int w = m;
    for (size_t k = 0; k < letters.size(); ++k) {
        BrauerDiagram g;
        try {
            g = letter_diagram(letters[k], w);
        } catch (const WidthViolation& e) {
            throw WidthViolation(static_cast<int>(k), e.what());
        }
        auto step = diagram_compose_oracle(g, c.result);
        c.loops += step.loops;
        c.result = std::move(step.result);
        w = c.result.n;
    }
    return c;
}

std::vector<int> permutation_canonical_word(const Permutation& p) {
    const int n = static_cast<int>(p.images.size());
    std::vector<int> word;
    // strand k moves right past the later strands that end left of it
    for (int k = n - 1; k >= 1; --k) {
        int c = 0;
        for (int j = k + 1; j <= n; ++j)
            if (p.images[j - 1] < p.images[k - 1]) ++c;
        for (int t = 0; t < c; ++t) word.push_back(k + t);
    }
    if (static_cast<int>(word.size()) != inversions(p)) throw Error("canonical word is not reduced");
    for (size_t t = 0; t + 2 < word.size(); ++t)
        if (word[t] == word[t + 2] && word[t + 1] == word[t] + 1) throw Error("canonical word has s_i s_i+1 s_i");
    return word;
}

Permutation word_permutation(int width, const std::vector<int>& word) {
    // at[pos] = original strand sitting at pos
    std::vector<int> at(width);
    for (int k = 0; k < width; ++k) at[k] = k;
    for (int i : word) std::swap(at[i - 1], at[i]);
    Permutation p{std::vector<int>(width)};
    for (int pos = 0; pos < width; ++pos) p.images[at[pos]] = pos + 1;
    return p;
}

int inversions(const Permutation& p) {
    int k = 0;
    for (size_t i = 0; i < p.images.size(); ++i)
        for (size_t j = i + 1; j < p.images.size(); ++j)
            if (p.images[i] > p.images[j]) ++k;
    return k;
}

std::vector<Letter> cup_block_letters(Block b) {
    std::vector<Letter> r{Letter::C(b.a)};
    for (int j = 1; j <= b.s; ++j) r.push_back(Letter::X(b.a + j));
    return r;
}

std::vector<Letter> cap_block_letters(Block b) {
    std::vector<Letter> r;
    for (int j = b.s; j >= 1; --j) r.push_back(Letter::X(b.a + j));
    r.push_back(Letter::A(b.a));
    return r;
}

namespace {

// arcs given as 1-based (l, r) on one side; `straight` holds 1-based positions of propagating dots
std::vector<Block> arc_blocks(std::vector<std::pair<int, int>> arcs, std::vector<int> straight) {
    std::sort(arcs.begin(), arcs.end());
    std::vector<Block> out;
    for (auto [l, r] : arcs) {
        int below = 0, inside = 0;
        for (int x : straight) {
            if (x < l) ++below;
            else if (x < r) ++inside;
        }
        out.push_back({1 + below, inside});
        straight.push_back(l);
        straight.push_back(r);
    }
    return out;
}

} // namespace

StdParts standard_parts(const BrauerDiagram& d) {
    StdParts sp;
    std::vector<std::pair<int, int>> cups, caps;
    std::vector<int> top_straight, bot_straight;
    std::vector<std::pair<int, int>> lines; // (bottom pos, top pos), 1-based
    for (int i = 0; i < d.m; ++i) {
        int j = d.match[i];
        if (j < d.m) {
            if (j > i) caps.emplace_back(i + 1, j + 1);
        } else {
            bot_straight.push_back(i + 1);
            top_straight.push_back(j - d.m + 1);
            lines.emplace_back(i + 1, j - d.m + 1);
        }
    }
    for (int i = d.m; i < d.m + d.n; ++i)
        if (d.match[i] > i) cups.emplace_back(i - d.m + 1, d.match[i] - d.m + 1);

    sp.cups = arc_blocks(cups, top_straight);
    auto cap_order = arc_blocks(caps, bot_straight);
    sp.caps.assign(cap_order.rbegin(), cap_order.rend());

    // lines are sorted by bottom position already
    std::vector<int> tops;
    for (auto& [b, t] : lines) tops.push_back(t);
    std::vector<int> sorted = tops;
    std::sort(sorted.begin(), sorted.end());
    Permutation pi{std::vector<int>(tops.size())};
    for (size_t k = 0; k < tops.size(); ++k)
        pi.images[k] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), tops[k]) - sorted.begin()) + 1;
    sp.perm = permutation_canonical_word(pi);
    sp.perm_width = static_cast<int>(tops.size());

    for (auto& b : sp.caps)
        for (auto l : cap_block_letters(b)) sp.letters.push_back(l);
    sp.caps_len = sp.letters.size();
    for (int i : sp.perm) sp.letters.push_back(Letter::X(i));
    sp.perm_len = sp.perm.size();
    for (auto& b : sp.cups)
        for (auto l : cup_block_letters(b)) sp.letters.push_back(l);
    return sp;
}

StandardWord standard_word(const BrauerDiagram& d) {
    StdParts sp = standard_parts(d);
    StandardWord w;
    w.m = d.m;
    w.n = d.n;
    w.perm_word = sp.perm;
    int width = sp.perm_width;
    for (auto& b : sp.cups) {
        w.cups.push_back({b.s, width, b.a});
        width += 2;
    }
    std::reverse(w.cups.begin(), w.cups.end());
    width = sp.perm_width;
    for (auto it = sp.caps.rbegin(); it != sp.caps.rend(); ++it) {
        w.caps.push_back({it->s, width, it->a});
        width += 2;
    }
    return w;
}

std::vector<Letter> StandardWord::letters() const {
    std::vector<Letter> r;
    for (auto it = caps.rbegin(); it != caps.rend(); ++it)
        for (auto l : cap_block_letters({it->a, it->s})) r.push_back(l);
    for (int i : perm_word) r.push_back(Letter::X(i));
    for (auto it = cups.rbegin(); it != cups.rend(); ++it)
        for (auto l : cup_block_letters({it->a, it->s})) r.push_back(l);
    return r;
}

} // namespace brauer
