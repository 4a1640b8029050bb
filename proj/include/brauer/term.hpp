#pragma once
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "brauer/coeff.hpp"
#include "brauer/diagram.hpp"

namespace brauer {

struct GenWord {
    int domain = 0;
    std::vector<Letter> letters; // bottom to top
    int codomain() const;
    bool operator==(const GenWord&) const = default;
};

// validates widths at every level; throws WidthViolation
GenWord word_new(int domain, std::vector<Letter> letters);
int propagate_width(int domain, const std::vector<Letter>& letters);
std::string word_str(const GenWord& w);

struct MorphismExpr;
using ExprPtr = std::shared_ptr<const MorphismExpr>;

struct MorphismExpr {
    enum class Kind { Word, Compose, Tensor, Scale, Sum };
    Kind kind = Kind::Word;
    GenWord word;              // Word
    LaurentPoly coeff;         // Scale
    std::vector<ExprPtr> kids; // Compose: {top, bottom}; Tensor: {left, right}; Scale: {x}; Sum: terms
    int m = 0, n = 0;

    static ExprPtr make_word(GenWord w);
    static ExprPtr compose(ExprPtr top, ExprPtr bottom);
    static ExprPtr tensor(ExprPtr left, ExprPtr right);
    static ExprPtr scale(LaurentPoly c, ExprPtr x);
    static ExprPtr sum(std::vector<ExprPtr> xs);
};

ExprPtr parse_expr(std::string_view text);
std::string expr_print(const MorphismExpr& e);

struct WeightedWord {
    LaurentPoly coeff;
    GenWord word;
};
std::vector<WeightedWord> expr_flatten(const MorphismExpr& e);

} // namespace brauer
