#include "brauer/render.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "json.hpp"

namespace brauer {

RenderFormat render_format_from_name(const std::string& s) {
    if (s == "ascii") return RenderFormat::Ascii;
    if (s == "tikz") return RenderFormat::Tikz;
    if (s == "json") return RenderFormat::Json;
    throw SyntaxError(0, "unknown format " + s);
}

namespace {

std::string bars(int k) {
    std::string s;
    for (int j = 0; j < k; ++j) s += j ? " |" : "|";
    return s;
}

std::string join(const std::string& a, const std::string& b) {
    if (a.empty()) return b;
    if (b.empty()) return a;
    return a + " " + b;
}

std::string row(Letter g, int w) {
    switch (g.kind) {
    case Letter::Kind::Cross: return join(join(bars(g.pos - 1), "X"), bars(w - g.pos - 1));
    case Letter::Kind::Cap: return join(join(bars(g.pos - 1), "/\\"), bars(w - g.pos - 1));
    case Letter::Kind::Cup: return join(join(bars(g.pos - 1), "\\/"), bars(w - g.pos + 1));
    }
    return {};
}

std::string tikz_body(const BrauerDiagram& d, double x0) {
    std::ostringstream os;
    auto xy = [&](int dot) {
        std::ostringstream p;
        if (dot < d.m) p << "(" << x0 + dot << ",0)";
        else p << "(" << x0 + dot - d.m << ",2)";
        return p.str();
    };
    for (int k = 0; k < d.m; ++k) os << "  \\fill " << xy(k) << " circle (2pt);\n";
    for (int k = 0; k < d.n; ++k) os << "  \\fill " << xy(d.m + k) << " circle (2pt);\n";
    for (auto [p, q] : d.pairs()) {
        bool pb = p < d.m, qb = q < d.m;
        if (pb != qb) {
            os << "  \\draw " << xy(p) << " -- " << xy(q) << ";\n";
        } else {
            double h = 0.35 + 0.25 * (q - p);
            os << "  \\draw " << xy(p) << " .. controls +(0," << (pb ? h : -h) << ") and +(0," << (pb ? h : -h)
               << ") .. " << xy(q) << ";\n";
        }
    }
    return os.str();
}

std::string tex(const std::string& c) {
    std::string s;
    for (size_t k = 0; k < c.size(); ++k) {
        if (c[k] == '*') {
            s += ' ';
        } else if (c[k] == '^') {
            size_t j = k + 1;
            if (j < c.size() && c[j] == '-') ++j;
            while (j < c.size() && std::isdigit(static_cast<unsigned char>(c[j]))) ++j;
            s += "^{" + c.substr(k + 1, j - k - 1) + "}";
            k = j - 1;
        } else {
            s += c[k];
        }
    }
    return s;
}

std::string tikz_wrap(const std::string& body) {
    return "\\documentclass[tikz]{standalone}\n\\begin{document}\n\\begin{tikzpicture}\n" + body +
           "\\end{tikzpicture}\n\\end{document}\n";
}

nlohmann::json diagram_json(const BrauerDiagram& d) {
    nlohmann::json j;
    j["m"] = d.m;
    j["n"] = d.n;
    j["pairs"] = nlohmann::json::array();
    for (auto [p, q] : d.pairs()) j["pairs"].push_back({p, q});
    j["word"] = nlohmann::json::array();
    for (auto g : standard_parts(d).letters) j["word"].push_back(g.str());
    return j;
}

} // namespace

std::string render_word(const GenWord& w) {
    std::vector<std::string> rows;
    int width = w.domain;
    for (auto g : w.letters) {
        rows.push_back(row(g, width));
        width += g.delta();
    }
    if (rows.empty()) rows.push_back(w.domain ? bars(w.domain) : "(empty)");
    std::string s;
    for (auto it = rows.rbegin(); it != rows.rend(); ++it) s += *it + "\n";
    return s;
}

std::string render_diagram(const BrauerDiagram& d, const RenderOptions& opts) {
    switch (opts.format) {
    case RenderFormat::Ascii: return render_word(GenWord{d.m, standard_parts(d).letters});
    case RenderFormat::Tikz: return tikz_wrap(tikz_body(d, 0));
    case RenderFormat::Json: return diagram_json(d).dump(2) + "\n";
    }
    return {};
}

std::string render_nf(const NormalForm& nf, const RenderOptions& opts) {
    switch (opts.format) {
    case RenderFormat::Ascii: {
        if (!opts.show_coeffs) {
            std::string s;
            for (auto& [d, c] : nf.terms) s += d.literal() + "\n";
            return s;
        }
        return nf.str() + "\n";
    }
    case RenderFormat::Tikz: {
        std::ostringstream os;
        double x = 0;
        for (auto& [d, c] : nf.terms) {
            if (opts.show_coeffs) os << "  \\node at (" << x << ",1) {$" << tex(c.str()) << "$};\n";
            x += 1.5;
            os << tikz_body(d, x);
            x += std::max(d.m, d.n) + 0.5;
        }
        return tikz_wrap(os.str());
    }
    case RenderFormat::Json: return nf.to_json() + "\n";
    }
    return {};
}

} // namespace brauer
