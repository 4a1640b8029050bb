#include "catch_amalgamated.hpp"

#include <random>
#include <set>

#include "brauer/diagram.hpp"
#include "oracles.hpp"

using namespace brauer;

namespace {

oracle::Matching as_oracle(const BrauerDiagram& d) { return {d.m, d.n, d.match}; }

int kind_of(Letter g) { return g.is_cross() ? 0 : g.is_cap() ? 1 : 2; }

oracle::Matching oracle_word(int m, const std::vector<Letter>& w, int& loops) {
    oracle::Matching cur = oracle::identity(m);
    loops = 0;
    for (auto g : w) {
        auto [l, r] = oracle::stack(oracle::letter(kind_of(g), g.pos, cur.n), cur);
        loops += l;
        cur = r;
    }
    return cur;
}

BrauerDiagram figure1() {
    return diagram_new(8, 6, {{0, 1}, {6, 7}, {10, 11}, {2, 8}, {3, 9}, {4, 13}, {5, 12}});
}

} // namespace

TEST_CASE("diagram construction", "[diagram]") {
    CHECK(diagram_new(0, 0, {}).pairs().empty());
    auto cap = diagram_new(2, 0, {{0, 1}});
    CHECK(cap.caps() == 1);
    CHECK(cap == letter_diagram(Letter::A(1), 2));
    CHECK_THROWS_AS(diagram_new(2, 1, {{0, 1}}), ParityError);
    CHECK_THROWS_AS(diagram_new(2, 2, {{0, 1}, {1, 2}}), NotAMatching);
    CHECK_THROWS_AS(diagram_new(2, 2, {{0, 1}}), NotAMatching);
    auto f = figure1();
    CHECK(f.cups() == 1);
    CHECK(f.caps() == 2);
    CHECK(f.propagating() == 4);
    CHECK(BrauerDiagram::parse(f.literal()) == f);
    CHECK_THROWS_AS(letter_diagram(Letter::X(3), 3), WidthViolation);
}

TEST_CASE("enumeration counts and validity", "[diagram]") {
    CHECK(enumerate_diagrams(3, 3).size() == 15);
    CHECK(enumerate_diagrams(4, 4).size() == 105);
    CHECK(enumerate_diagrams(1, 2).empty());
    for (int m = 0; m <= 5; ++m)
        for (int n = 0; n <= 5; ++n) {
            auto ds = enumerate_diagrams(m, n);
            std::set<BrauerDiagram> uniq(ds.begin(), ds.end());
            CHECK(uniq.size() == ds.size());
            CHECK(static_cast<long>(ds.size()) == ((m + n) % 2 ? 0 : oracle::double_factorial(m + n - 1)));
            CHECK(std::is_sorted(ds.begin(), ds.end()));
            for (auto& d : ds) CHECK_NOTHROW(diagram_new(d.m, d.n, d.pairs()));
        }
}

TEST_CASE("composition agrees with path following", "[diagram]") {
    std::mt19937 rng(11);
    for (int it = 0; it < 400; ++it) {
        int m = static_cast<int>(rng() % 5), k = static_cast<int>(rng() % 5), n = static_cast<int>(rng() % 5);
        if ((m + k) % 2) ++k;
        if ((k + n) % 2) ++n;
        auto bs = enumerate_diagrams(m, k), ts = enumerate_diagrams(k, n);
        auto& b = bs[rng() % bs.size()];
        auto& t = ts[rng() % ts.size()];
        auto got = diagram_compose_oracle(t, b);
        auto [loops, want] = oracle::stack(as_oracle(t), as_oracle(b));
        CHECK(got.loops == loops);
        CHECK(got.result.match == want.to);
    }
    auto cup = letter_diagram(Letter::C(1), 0), cap = letter_diagram(Letter::A(1), 2);
    auto r = diagram_compose_oracle(cap, cup);
    CHECK(r.loops == 1);
    CHECK(r.result == identity_diagram(0));
    CHECK_THROWS_AS(diagram_compose_oracle(cap, cap), WidthMismatch);
}

TEST_CASE("tensor and flips", "[diagram]") {
    auto cap = letter_diagram(Letter::A(1), 2), cup = letter_diagram(Letter::C(1), 0);
    CHECK(diagram_tensor(identity_diagram(0), cap) == cap);
    CHECK(diagram_tensor(cap, cap) == diagram_new(4, 0, {{0, 1}, {2, 3}}));
    CHECK(diagram_tensor(identity_diagram(1), cup) == diagram_new(1, 3, {{0, 1}, {2, 3}}));
    CHECK(diagram_vflip(cap) == cup);
    for (auto& d : enumerate_diagrams(3, 5)) {
        CHECK(diagram_vflip(diagram_vflip(d)) == d);
        CHECK(diagram_hflip(diagram_hflip(d)) == d);
    }
}

TEST_CASE("canonical permutation words", "[diagram]") {
    CHECK(permutation_canonical_word(Permutation{{1, 2, 3}}).empty());
    CHECK(permutation_canonical_word(Permutation{{2, 1}}) == std::vector<int>{1});
    CHECK(permutation_canonical_word(Permutation{{3, 2, 1}}) == std::vector<int>{2, 1, 2});
    std::vector<int> im{1, 2, 3, 4};
    do {
        auto w = permutation_canonical_word(Permutation{im});
        CHECK(static_cast<int>(w.size()) == oracle::inversions(im));
        CHECK(word_permutation(4, w).images == im);
        for (size_t k = 0; k + 2 < w.size(); ++k) CHECK_FALSE((w[k] == w[k + 2] && w[k + 1] == w[k] + 1));
    } while (std::next_permutation(im.begin(), im.end()));
}

TEST_CASE("standard words realize their diagram", "[diagram]") {
    for (int m = 0; m <= 8; ++m)
        for (int n = m % 2; m + n <= 8; n += 2)
            for (auto& d : enumerate_diagrams(m, n)) {
                int loops = 0;
                auto got = oracle_word(m, standard_parts(d).letters, loops);
                CHECK(loops == 0);
                CHECK(got.to == d.match);
            }
    auto sw = standard_word(identity_diagram(3));
    CHECK(sw.cups.empty());
    CHECK(sw.caps.empty());
    CHECK(sw.perm_word.empty());
    CHECK(standard_word(letter_diagram(Letter::X(1), 2)).perm_word == std::vector<int>{1});
}

TEST_CASE("two decompositions of one diagram", "[diagram]") {
    std::vector<Letter> left{Letter::X(2), Letter::A(1), Letter::A(1), Letter::X(1)};
    std::vector<Letter> right{Letter::X(5), Letter::X(3), Letter::A(2), Letter::A(1)};
    auto l = word_diagram(6, left), r = word_diagram(6, right);
    CHECK(l.loops == 0);
    CHECK(r.loops == 0);
    CHECK(l.result == r.result);
    int loops = 0;
    CHECK(oracle_word(6, left, loops).to == l.result.match);
}

TEST_CASE("ordered cups of a (1,9) diagram", "[diagram]") {
    std::vector<Letter> w{Letter::C(1), Letter::X(2), Letter::C(2), Letter::C(4),
                          Letter::X(5), Letter::X(6), Letter::C(7), Letter::X(8)};
    auto d = word_diagram(1, w).result;
    auto sw = standard_word(d);
    std::vector<ElementaryCup> want{{1, 7, 7}, {2, 5, 4}, {0, 3, 2}, {1, 1, 1}};
    CHECK(sw.cups == want);
    CHECK(standard_parts(d).letters == w);
}
