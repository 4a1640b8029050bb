#pragma once
#include <utility>

#include "brauer/rewrite.hpp"

namespace brauer {

struct RescaleSpec {
    LaurentPoly alpha{1}, beta{1}, gamma{1};
    RescaleSpec inverse() const;
};

// parameter records of the target categories
CategoryParams rescale_params(const CategoryParams& src, const RescaleSpec& s);
CategoryParams vflip_params(const CategoryParams& src);
CategoryParams hflip_params(const CategoryParams& src);

// images of single words, letter by letter
std::vector<Letter> vflip_word(int domain, const std::vector<Letter>& w);
std::vector<Letter> hflip_word(int domain, const std::vector<Letter>& w);

// tgt must be built from the matching *_params record
NormalForm rescale(const NormalForm& nf, const RescaleSpec& s, Engine& tgt);
NormalForm vflip(const NormalForm& nf, Engine& tgt);
NormalForm hflip(const NormalForm& nf, Engine& tgt);

std::pair<NormalForm, CategoryParams> rescale(const NormalForm& nf, const RescaleSpec& s, const CategoryParams& src);
std::pair<NormalForm, CategoryParams> vflip(const NormalForm& nf, const CategoryParams& src);
std::pair<NormalForm, CategoryParams> hflip(const NormalForm& nf, const CategoryParams& src);

} // namespace brauer
