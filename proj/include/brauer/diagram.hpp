#pragma once
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "brauer/errors.hpp"

namespace brauer {

// bottom dots 0..m-1, top dots m..m+n-1, both left to right
struct BrauerDiagram {
    int m = 0, n = 0;
    std::vector<int> match;

    int caps() const;
    int cups() const;
    int propagating() const { return m - 2 * caps(); }
    std::vector<std::pair<int, int>> pairs() const;
    std::string literal() const;
    static BrauerDiagram parse(std::string_view text);

    auto operator<=>(const BrauerDiagram&) const = default;
    bool operator==(const BrauerDiagram&) const = default;
};

BrauerDiagram diagram_new(int m, int n, const std::vector<std::pair<int, int>>& pairs);
BrauerDiagram identity_diagram(int n);
std::vector<BrauerDiagram> enumerate_diagrams(int m, int n);

struct Composite {
    int loops = 0;
    BrauerDiagram result;
};
// top sits above bot; requires top.m == bot.n
Composite diagram_compose_oracle(const BrauerDiagram& top, const BrauerDiagram& bot);
BrauerDiagram diagram_tensor(const BrauerDiagram& x, const BrauerDiagram& y);
// upside down / mirror images of the matching
BrauerDiagram diagram_vflip(const BrauerDiagram& d);
BrauerDiagram diagram_hflip(const BrauerDiagram& d);

// generators; pos is 1-based
struct Letter {
    enum class Kind : std::uint8_t { Cross, Cap, Cup };
    Kind kind;
    int pos;

    static Letter X(int i) { return {Kind::Cross, i}; }
    static Letter A(int i) { return {Kind::Cap, i}; }
    static Letter C(int i) { return {Kind::Cup, i}; }
    bool is_cross() const { return kind == Kind::Cross; }
    bool is_cap() const { return kind == Kind::Cap; }
    bool is_cup() const { return kind == Kind::Cup; }
    bool odd() const { return kind != Kind::Cross; }
    int delta() const { return kind == Kind::Cup ? 2 : kind == Kind::Cap ? -2 : 0; }
    std::string str() const;

    auto operator<=>(const Letter&) const = default;
    bool operator==(const Letter&) const = default;
};

// diagram of a single letter acting on `width` strands
BrauerDiagram letter_diagram(Letter g, int width);
// letters listed bottom to top, starting at width m
Composite word_diagram(int m, const std::vector<Letter>& letters);

struct Permutation {
    std::vector<int> images; // 1-based, strand at bottom k ends at top images[k-1]
};
std::vector<int> permutation_canonical_word(const Permutation& p);
Permutation word_permutation(int width, const std::vector<int>& word);
int inversions(const Permutation& p);

// elementary cup I_s^{n,a}: n = domain width, letters C_a X_{a+1} .. X_{a+s}
struct ElementaryCup {
    int s, n, a;
    bool operator==(const ElementaryCup&) const = default;
};
// elementary cap J_s^{n,a}: n = codomain width, letters X_{a+s} .. X_{a+1} A_a
struct ElementaryCap {
    int s, n, a;
    bool operator==(const ElementaryCap&) const = default;
};

struct Block {
    int a, s;
    bool operator==(const Block&) const = default;
};

std::vector<Letter> cup_block_letters(Block b);
std::vector<Letter> cap_block_letters(Block b);

struct StandardWord {
    int m = 0, n = 0;
    std::vector<ElementaryCup> cups; // topmost first
    std::vector<int> perm_word;      // bottom to top
    std::vector<ElementaryCap> caps; // topmost first

    std::vector<Letter> letters() const;
};

// the same decomposition in the shape the rewriter wants
struct StdParts {
    std::vector<Block> caps; // bottom to top
    std::vector<int> perm;
    int perm_width = 0;
    std::vector<Block> cups; // bottom to top
    std::vector<Letter> letters;
    size_t caps_len = 0, perm_len = 0;
};

StdParts standard_parts(const BrauerDiagram& d);
StandardWord standard_word(const BrauerDiagram& d);

} // namespace brauer
