#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "brauer/algebra.hpp"
#include "brauer/functors.hpp"
#include "brauer/render.hpp"

using namespace brauer;
using json = nlohmann::json;

namespace {

enum Exit { kOk = 0, kFail = 1, kParse = 2, kWidth = 3, kParams = 4 };

struct Globals {
    std::string preset = "brauer";
    std::string params_file;
    std::string format = "ascii";
    unsigned seed = 1;
    int max_width = 6;
    int max_letters = 4;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

CategoryParams load_params(const Globals& g) {
    if (!g.params_file.empty()) return CategoryParams::from_json(slurp(g.params_file));
    return preset(g.preset);
}

// an operand is either a NormalForm JSON file or a morphism expression
NormalForm operand(Engine& eng, const std::string& arg) {
    if (std::filesystem::is_regular_file(arg)) {
        NormalForm nf = NormalForm::from_json(slurp(arg));
        nf.params_fingerprint = eng.fingerprint();
        return nf;
    }
    return eng.normalize(*parse_expr(arg));
}

void print_nf(const NormalForm& nf, const Globals& g) {
    RenderOptions o;
    o.format = render_format_from_name(g.format);
    std::cout << render_nf(nf, o);
}

int verify_table1() {
    bool ok = true;
    json rep;
    rep["rows"] = json::array();
    for (auto f : all_families())
        for (int eps : {1, -1})
            for (auto& ch : legal_e_choices(f, eps)) {
                auto p = family_instantiate(f, eps, ch.e, ch.e_prime, symbolic_bindings(f));
                auto bad = check_consistency(p);
                ok = ok && bad.empty();
                rep["rows"].push_back({{"family", family_name(f)},
                                       {"epsilon", eps},
                                       {"e", ch.e.str()},
                                       {"e_prime", ch.e_prime.str()},
                                       {"failed", bad}});
            }
    rep["limits"] = json::array();
    for (auto& l : check_limits()) {
        ok = ok && l.ok;
        rep["limits"].push_back({{"limit", l.description}, {"ok", l.ok}, {"detail", l.detail}});
    }
    rep["result"] = ok ? "consistent" : "inconsistent";
    std::cout << rep.dump(2) << "\n";
    return ok ? kOk : kFail;
}

int verify_confluence(const Globals& g) {
    CategoryParams p = load_params(g);
    auto t0 = std::chrono::steady_clock::now();
    auto rep = check_local_confluence(p, g.max_width, g.max_letters);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    json j;
    j["words"] = rep.words;
    j["branches"] = rep.branches;
    j["seconds"] = secs;
    j["counterexamples"] = json::array();
    for (auto& i : rep.issues)
        j["counterexamples"].push_back({{"word", word_str(i.word)}, {"rule", i.rule}, {"difference", i.difference.str()}});
    std::cout << j.dump(2) << "\n";
    return rep.issues.empty() ? kOk : kFail;
}

int verify_presentation(const Globals& g, const std::vector<int>& ns) {
    json j;
    bool ok = true;
    for (int n : ns) {
        auto failed = check_presentation(g.preset, n);
        ok = ok && failed.empty();
        j[std::to_string(n)] = failed;
    }
    std::cout << json{{"preset", g.preset}, {"failed", j}}.dump(2) << "\n";
    return ok ? kOk : kFail;
}

int verify_wenzl() {
    auto r = wenzl_feasibility();
    std::cout << r.to_json() << "\n";
    return r.feasible ? kFail : kOk;
}

// random words on at most four strands
std::vector<Letter> random_word(std::mt19937& rng, int m, int len, int& out_width) {
    int w = m;
    std::vector<Letter> L;
    for (int k = 0; k < len; ++k) {
        int c = static_cast<int>(rng() % 3);
        if (c == 0 && w >= 2) {
            L.push_back(Letter::X(1 + static_cast<int>(rng() % (w - 1))));
        } else if (c == 1 && w >= 2) {
            L.push_back(Letter::A(1 + static_cast<int>(rng() % (w - 1))));
            w -= 2;
        } else if (w <= 2) {
            L.push_back(Letter::C(1 + static_cast<int>(rng() % (w + 1))));
            w += 2;
        }
    }
    out_width = w;
    return L;
}

int verify_functors(const Globals& g) {
    CategoryParams p = load_params(g);
    Engine src(p);
    RescaleSpec s{LaurentPoly::var("alpha"), LaurentPoly::var("beta"), LaurentPoly::var("gamma")};
    Engine V(vflip_params(p)), H(hflip_params(p)), R(rescale_params(p, s));
    std::mt19937 rng(g.seed);
    int bad = 0;
    for (int it = 0; it < 200; ++it) {
        int k = 0, n = 0;
        int m = static_cast<int>(rng() % 4);
        auto y = random_word(rng, m, static_cast<int>(rng() % 5), k);
        auto x = random_word(rng, k, static_cast<int>(rng() % 5), n);
        NormalForm nx = src.normalize(k, x), ny = src.normalize(m, y), nxy = src.compose(nx, ny);
        bad += !(rescale(nxy, s, R) == R.compose(rescale(nx, s, R), rescale(ny, s, R)));
        bad += !(vflip(nxy, V) == V.compose(vflip(ny, V), vflip(nx, V)));
        bad += !(hflip(nxy, H) == H.compose(hflip(nx, H), hflip(ny, H)));
    }
    std::cout << json{{"samples", 200}, {"seed", g.seed}, {"failures", bad}}.dump(2) << "\n";
    return bad ? kFail : kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Categories of Brauer type: normal forms, tables and checks"};
    app.require_subcommand(1);
    Globals g;
    app.add_option("-p,--preset", g.preset, "parameter preset (brauer, bwm, periplectic, periplectic_q, "
                                            "periplectic_q_op, family:TAG[:eps[:e[:e']]])");
    app.add_option("--params", g.params_file, "parameter record JSON file");
    app.add_option("-f,--format", g.format, "output format")->check(CLI::IsMember({"ascii", "tikz", "json"}));
    app.add_option("--seed", g.seed, "seed for randomized checks");
    app.add_option("--max-width", g.max_width, "largest width in the confluence sweep");
    app.add_option("--max-letters", g.max_letters, "longest word in the confluence sweep");

    std::string expr, other;
    auto* normalize_cmd = app.add_subcommand("normalize", "normal form of a morphism expression");
    normalize_cmd->add_option("expr", expr, "expression, e.g. \"a(1)@2 . u(1)@0\"")->required();

    auto* compose_cmd = app.add_subcommand("compose", "X . Y with X on top");
    compose_cmd->add_option("top", expr, "expression or NormalForm JSON file")->required();
    compose_cmd->add_option("bottom", other, "expression or NormalForm JSON file")->required();

    auto* tensor_cmd = app.add_subcommand("tensor", "X # Y with X on the left");
    tensor_cmd->add_option("left", expr, "expression or NormalForm JSON file")->required();
    tensor_cmd->add_option("right", other, "expression or NormalForm JSON file")->required();

    int table_n = 2, table_max = 4;
    bool csv = false;
    auto* table_cmd = app.add_subcommand("table", "multiplication table of End(n)");
    table_cmd->add_option("n", table_n, "width")->required();
    table_cmd->add_flag("--csv", csv, "CSV instead of JSON");
    table_cmd->add_option("--max-n", table_max, "largest width allowed");

    std::string what;
    std::vector<int> pres_n{3, 4};
    auto* verify_cmd = app.add_subcommand("verify", "run a check and report");
    verify_cmd->add_option("what", what, "confluence, table1, presentation, wenzl or functors")
        ->required()
        ->check(CLI::IsMember({"confluence", "table1", "presentation", "wenzl", "functors"}));
    verify_cmd->add_option("--n", pres_n, "widths for presentation checks");

    auto* classify_cmd = app.add_subcommand("classify", "table rows that reproduce the parameters");

    std::string functor, params_out;
    std::string alpha = "1", beta = "1", gamma = "1";
    auto* map_cmd = app.add_subcommand("map", "apply rescale, vflip or hflip to a NormalForm JSON file");
    map_cmd->add_option("--functor", functor, "functor")->required()->check(CLI::IsMember({"rescale", "vflip", "hflip"}));
    map_cmd->add_option("nf", expr, "NormalForm JSON file or expression")->required();
    map_cmd->add_option("--alpha", alpha, "cap scale");
    map_cmd->add_option("--beta", beta, "cup scale");
    map_cmd->add_option("--gamma", gamma, "crossing scale");
    map_cmd->add_option("--params-out", params_out, "write the target parameter record here");

    auto* render_cmd = app.add_subcommand("render", "draw a diagram literal or an expression");
    render_cmd->add_option("what", expr, "B[m,n | (p,q)...] or an expression")->required();

    for (auto* sc : app.get_subcommands({})) sc->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*normalize_cmd) {
            Engine eng(load_params(g));
            print_nf(eng.normalize(*parse_expr(expr)), g);
        } else if (*compose_cmd || *tensor_cmd) {
            Engine eng(load_params(g));
            NormalForm x = operand(eng, expr), y = operand(eng, other);
            print_nf(*compose_cmd ? eng.compose(x, y) : eng.tensor(x, y), g);
        } else if (*table_cmd) {
            auto t = mult_table(table_n, load_params(g), table_max);
            std::cout << (csv ? t.to_csv() : t.to_json() + "\n");
        } else if (*verify_cmd) {
            if (what == "table1") return verify_table1();
            if (what == "confluence") return verify_confluence(g);
            if (what == "presentation") return verify_presentation(g, pres_n);
            if (what == "wenzl") return verify_wenzl();
            return verify_functors(g);
        } else if (*classify_cmd) {
            CategoryParams p = load_params(g);
            auto bad = check_consistency(p);
            json j{{"consistent", bad.empty()}, {"failed", bad}, {"rows", classify(p)}};
            std::cout << j.dump(2) << "\n";
            return bad.empty() ? kOk : kParams;
        } else if (*map_cmd) {
            CategoryParams p = load_params(g);
            Engine src(p);
            NormalForm nf = operand(src, expr);
            std::pair<NormalForm, CategoryParams> r;
            if (functor == "rescale")
                r = rescale(nf, {LaurentPoly::parse(alpha), LaurentPoly::parse(beta), LaurentPoly::parse(gamma)}, p);
            else if (functor == "vflip")
                r = vflip(nf, p);
            else
                r = hflip(nf, p);
            if (!params_out.empty()) std::ofstream(params_out) << r.second.to_json() << "\n";
            print_nf(r.first, g);
        } else if (*render_cmd) {
            RenderOptions o;
            o.format = render_format_from_name(g.format);
            if (expr.rfind("B[", 0) == 0) {
                std::cout << render_diagram(BrauerDiagram::parse(expr), o);
            } else {
                auto e = parse_expr(expr);
                auto words = expr_flatten(*e);
                if (words.size() == 1 && words[0].coeff.is_one() && o.format == RenderFormat::Ascii) {
                    std::cout << render_word(words[0].word);
                } else {
                    Engine eng(load_params(g));
                    std::cout << render_nf(eng.normalize(*e), o);
                }
            }
        }
    } catch (const SyntaxError& e) {
        std::cerr << e.what() << "\n";
        return kParse;
    } catch (const WidthViolation& e) {
        std::cerr << e.what() << "\n";
        return kWidth;
    } catch (const WidthMismatch& e) {
        std::cerr << "width error: " << e.what() << "\n";
        return kWidth;
    } catch (const InconsistentParams& e) {
        std::cerr << "inconsistent parameters: " << e.what() << "\n";
        return kParams;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFail;
    }
    return kOk;
}
