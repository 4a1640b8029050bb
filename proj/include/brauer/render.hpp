#pragma once
#include <string>

#include "brauer/rewrite.hpp"

namespace brauer {

enum class RenderFormat { Ascii, Tikz, Json };
RenderFormat render_format_from_name(const std::string& s);

struct RenderOptions {
    RenderFormat format = RenderFormat::Ascii;
    bool show_coeffs = true;
};

// ascii draws the standard word, one generator per row, top row first
std::string render_diagram(const BrauerDiagram& d, const RenderOptions& opts = {});
std::string render_word(const GenWord& w);
std::string render_nf(const NormalForm& nf, const RenderOptions& opts = {});

} // namespace brauer
