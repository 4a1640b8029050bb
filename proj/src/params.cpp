#include "brauer/params.hpp"

#include <algorithm>
#include <functional>

#include "json.hpp"

namespace brauer {

using json = nlohmann::json;

const std::vector<std::pair<std::string, PolyField>>& poly_fields() {
    static const std::vector<std::pair<std::string, PolyField>> f = {
        {"lambda", &CategoryParams::lambda},   {"lambda_prime", &CategoryParams::lambda_prime},
        {"sigma", &CategoryParams::sigma},     {"sigma_prime", &CategoryParams::sigma_prime},
        {"delta", &CategoryParams::delta},     {"rho", &CategoryParams::rho},
        {"a", &CategoryParams::a},             {"b", &CategoryParams::b},
        {"c", &CategoryParams::c},             {"d", &CategoryParams::d},
        {"d_prime", &CategoryParams::d_prime}, {"f", &CategoryParams::f},
        {"f_prime", &CategoryParams::f_prime}, {"D", &CategoryParams::D},
        {"E", &CategoryParams::E},             {"F", &CategoryParams::F},
        {"D_prime", &CategoryParams::D_prime}, {"E_prime", &CategoryParams::E_prime},
        {"F_prime", &CategoryParams::F_prime},
    };
    return f;
}

std::optional<std::string> CategoryParams::first_difference(const CategoryParams& o) const {
    if (epsilon != o.epsilon) return "epsilon";
    if (!(e == o.e)) return "e";
    if (!(e_prime == o.e_prime)) return "e_prime";
    for (auto& [name, fld] : poly_fields())
        if (!(this->*fld == o.*fld)) return name;
    return std::nullopt;
}

std::string CategoryParams::to_json() const {
    json j;
    j["epsilon"] = epsilon;
    j["e"] = e.str();
    j["e_prime"] = e_prime.str();
    for (auto& [name, fld] : poly_fields()) j[name] = (this->*fld).str();
    if (!label.empty()) j["label"] = label;
    return j.dump(2);
}

std::uint64_t CategoryParams::fingerprint() const {
    std::string s = std::to_string(epsilon) + "|" + e.str() + "|" + e_prime.str();
    for (auto& [name, fld] : poly_fields()) s += "|" + (this->*fld).str();
    // FNV-1a, stable across runs
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    return h;
}

namespace {

GaussRational parse_unit(const json& v) {
    LaurentPoly p = v.is_string() ? LaurentPoly::parse(v.get<std::string>()) : LaurentPoly(v.get<long>());
    if (!p.is_constant()) throw EChoiceInvalid("e must be a constant");
    return p.constant_term();
}

int parse_parity(const json& v) {
    int eps = v.is_string() ? std::stoi(v.get<std::string>()) : v.get<int>();
    if (eps != 1 && eps != -1) throw EChoiceInvalid("epsilon must be +1 or -1");
    return eps;
}

} // namespace

CategoryParams CategoryParams::from_json(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw SyntaxError(e.byte > 0 ? e.byte - 1 : 0, e.what());
    }
    if (j.contains("preset")) return preset(j["preset"].get<std::string>());
    if (j.contains("family")) {
        FamilyId fam = family_from_name(j["family"].get<std::string>());
        int eps = j.contains("epsilon") ? parse_parity(j["epsilon"]) : 1;
        auto choices = legal_e_choices(fam, eps);
        GaussRational e = j.contains("e") ? parse_unit(j["e"]) : choices.at(0).e;
        GaussRational ep = j.contains("e_prime") ? parse_unit(j["e_prime"]) : choices.at(0).e_prime;
        std::map<std::string, LaurentPoly> b = symbolic_bindings(fam);
        if (j.contains("bindings"))
            for (auto& [k, v] : j["bindings"].items())
                b[k] = v.is_string() ? LaurentPoly::parse(v.get<std::string>()) : LaurentPoly(v.get<long>());
        return family_instantiate(fam, eps, e, ep, b);
    }
    CategoryParams p;
    p.epsilon = parse_parity(j.at("epsilon"));
    p.e = parse_unit(j.at("e"));
    p.e_prime = parse_unit(j.at("e_prime"));
    for (auto& [name, fld] : poly_fields()) {
        if (!j.contains(name)) throw MissingBinding("params JSON lacks field " + name);
        auto& v = j[name];
        p.*fld = v.is_string() ? LaurentPoly::parse(v.get<std::string>()) : LaurentPoly(v.get<long>());
    }
    if (j.contains("label")) p.label = j["label"].get<std::string>();
    return p;
}

// ---- parameter families

const std::vector<FamilyId>& all_families() {
    static const std::vector<FamilyId> f = {
        FamilyId::Cb0_l_s, FamilyId::Cb0_bl_s, FamilyId::Cb0_l_0,  FamilyId::Cb0_bl_0, FamilyId::C0b_l_s,
        FamilyId::C0b_bl_s, FamilyId::C0b_l_0, FamilyId::C0b_bl_0, FamilyId::Cbb_l_s,  FamilyId::C00_l_s,
        FamilyId::C00_ml_s, FamilyId::C00_l_0, FamilyId::C00_ml_0,
    };
    return f;
}

std::string family_name(FamilyId f) {
    switch (f) {
    case FamilyId::Cb0_l_s: return "Cb0_l_s";
    case FamilyId::Cb0_bl_s: return "Cb0_bl_s";
    case FamilyId::Cb0_l_0: return "Cb0_l_0";
    case FamilyId::Cb0_bl_0: return "Cb0_bl_0";
    case FamilyId::C0b_l_s: return "C0b_l_s";
    case FamilyId::C0b_bl_s: return "C0b_bl_s";
    case FamilyId::C0b_l_0: return "C0b_l_0";
    case FamilyId::C0b_bl_0: return "C0b_bl_0";
    case FamilyId::Cbb_l_s: return "Cbb_l_s";
    case FamilyId::C00_l_s: return "C00_l_s";
    case FamilyId::C00_ml_s: return "C00_ml_s";
    case FamilyId::C00_l_0: return "C00_l_0";
    case FamilyId::C00_ml_0: return "C00_ml_0";
    }
    return "?";
}

FamilyId family_from_name(std::string_view name) {
    for (auto f : all_families())
        if (family_name(f) == name) return f;
    throw UnknownPreset("unknown family " + std::string(name));
}

namespace {

bool has_b(FamilyId f) {
    switch (f) {
    case FamilyId::C00_l_s:
    case FamilyId::C00_ml_s:
    case FamilyId::C00_l_0:
    case FamilyId::C00_ml_0: return false;
    default: return true;
    }
}

bool has_sigma(FamilyId f) {
    switch (f) {
    case FamilyId::Cb0_l_s:
    case FamilyId::Cb0_bl_s:
    case FamilyId::C0b_l_s:
    case FamilyId::C0b_bl_s:
    case FamilyId::Cbb_l_s:
    case FamilyId::C00_l_s:
    case FamilyId::C00_ml_s: return true;
    default: return false;
    }
}

bool is_unit4(const GaussRational& x) { return x.pow(4).is_one(); }

// the row's constraint column
bool e_rule(FamilyId f, int eps, const GaussRational& e, const GaussRational& ep, bool c_nonzero) {
    if (!is_unit4(e) || !is_unit4(ep)) return false;
    const GaussRational E(eps);
    switch (f) {
    case FamilyId::Cb0_l_s:
    case FamilyId::Cb0_bl_s:
    case FamilyId::C0b_l_s:
    case FamilyId::C0b_bl_s:
    case FamilyId::C00_ml_s: return e * e == -E && ep == -E * e;
    case FamilyId::Cb0_l_0:
    case FamilyId::Cb0_bl_0:
    case FamilyId::C0b_l_0:
    case FamilyId::C0b_bl_0: return e * e == -E && ep * ep == -E;
    case FamilyId::Cbb_l_s:
    case FamilyId::C00_l_s: return e * e == E && ep == E * e;
    case FamilyId::C00_l_0: return !c_nonzero || (e * ep).is_one();
    case FamilyId::C00_ml_0: return true;
    }
    return false;
}

const std::vector<GaussRational>& units() {
    static const std::vector<GaussRational> u = {GaussRational(1), GaussRational(-1), GaussRational::i(),
                                                 -GaussRational::i()};
    return u;
}

} // namespace

std::vector<std::string> family_red_vars(FamilyId f) {
    std::vector<std::string> r{"lambda"};
    if (has_sigma(f)) r.push_back("sigma");
    if (has_b(f)) r.push_back("b");
    if (f == FamilyId::Cbb_l_s || f == FamilyId::C00_l_s || f == FamilyId::C00_l_0) r.push_back("delta");
    if (f == FamilyId::C00_l_0) r.push_back("c");
    return r;
}

std::map<std::string, LaurentPoly> symbolic_bindings(FamilyId f) {
    std::map<std::string, LaurentPoly> b;
    for (auto& v : family_red_vars(f)) b[v] = LaurentPoly::var(v);
    return b;
}

std::vector<EChoice> legal_e_choices(FamilyId f, int epsilon) {
    std::vector<EChoice> out;
    for (auto& e : units())
        for (auto& ep : units())
            if (e_rule(f, epsilon, e, ep, true)) out.push_back({e, ep});
    return out;
}

CategoryParams family_instantiate(FamilyId fam, int epsilon, const GaussRational& e, const GaussRational& e_prime,
                                  const std::map<std::string, LaurentPoly>& bindings) {
    if (epsilon != 1 && epsilon != -1) throw EChoiceInvalid("epsilon must be +1 or -1");
    auto red = family_red_vars(fam);
    for (auto& v : red)
        if (!bindings.count(v)) throw MissingBinding(family_name(fam) + " needs a value for " + v);
    for (auto& [k, v] : bindings)
        if (std::find(red.begin(), red.end(), k) == red.end())
            throw MissingBinding(k + " is not an independent parameter of " + family_name(fam));
    for (const char* nz : {"lambda", "b", "sigma"}) {
        auto it = bindings.find(nz);
        if (it != bindings.end() && it->second.is_zero())
            throw ZeroForbidden(std::string(nz) + " must be non-zero in " + family_name(fam));
    }
    auto get = [&](const char* k) {
        auto it = bindings.find(k);
        return it == bindings.end() ? LaurentPoly() : it->second;
    };
    const LaurentPoly c_val = get("c");
    if (!e_rule(fam, epsilon, e, e_prime, !c_val.is_zero()))
        throw EChoiceInvalid("e = " + e.str() + ", e' = " + e_prime.str() + " violates the constraint of " +
                             family_name(fam) + " for epsilon = " + std::to_string(epsilon));

    CategoryParams p;
    p.epsilon = epsilon;
    p.e = e;
    p.e_prime = e_prime;
    p.label = family_name(fam);
    const LaurentPoly eps(epsilon), E(e), Ep(e_prime);
    const LaurentPoly lam = get("lambda"), sig = get("sigma"), b = get("b");
    p.lambda = lam;
    p.sigma = sig;
    p.b = b;
    p.delta = get("delta");
    p.c = c_val;

    switch (fam) {
    case FamilyId::Cb0_l_s:
        p.lambda_prime = lam;
        p.f = b;
        p.delta = -E * eps * sig * (2 * lam - b) / b;
        p.rho = -eps * E * sig * (lam - b);
        break;
    case FamilyId::Cb0_bl_s:
        p.lambda_prime = b - lam;
        p.f = b;
        p.rho = eps * E * sig * lam;
        break;
    case FamilyId::Cb0_l_0:
        p.lambda_prime = lam;
        p.f = b;
        break;
    case FamilyId::Cb0_bl_0:
        p.lambda_prime = b - lam;
        p.f = b;
        break;
    case FamilyId::C0b_l_s:
        p.lambda_prime = lam;
        p.f_prime = b;
        p.delta = E * eps * sig * (2 * lam - b) / b;
        p.rho = eps * E * sig * (lam - b);
        break;
    case FamilyId::C0b_bl_s:
        p.lambda_prime = b - lam;
        p.f_prime = b;
        p.rho = eps * E * sig * (lam - b);
        break;
    case FamilyId::C0b_l_0:
        p.lambda_prime = lam;
        p.f_prime = b;
        break;
    case FamilyId::C0b_bl_0:
        p.lambda_prime = b - lam;
        p.f_prime = b;
        break;
    case FamilyId::Cbb_l_s:
        p.lambda_prime = lam;
        p.f = b;
        p.f_prime = b;
        p.c = -E * lam * b / sig;
        p.rho = eps * sig * E * (lam - b) + b * p.delta;
        break;
    case FamilyId::C00_l_s:
        p.lambda_prime = lam;
        p.rho = eps * sig * E * lam;
        break;
    case FamilyId::C00_ml_s:
        p.lambda_prime = -lam;
        p.rho = eps * sig * E * lam;
        break;
    case FamilyId::C00_l_0: p.lambda_prime = lam; break;
    case FamilyId::C00_ml_0: p.lambda_prime = -lam; break;
    }

    p.sigma_prime = eps * p.sigma;
    p.d = -E * p.f_prime;
    p.d_prime = -Ep * p.f;
    p.E = p.b - p.f;
    p.E_prime = p.b - p.f_prime;
    if (p.lambda_prime == p.lambda) p.a = lam * lam - b * lam - p.c * p.delta;
    else p.a = -p.lambda_prime * lam;
    // D = aE/lambda and D' = aE'/lambda', written out per row so no division is needed
    const bool bl = p.lambda_prime == b - lam && !b.is_zero();
    if (!p.E.is_zero()) p.D = b * (lam - b);
    if (!p.E_prime.is_zero()) p.D_prime = bl ? -b * lam : b * (lam - b);
    p.F = p.a * LaurentPoly(e.inverse());
    p.F_prime = p.a * LaurentPoly(e_prime.inverse());
    return p;
}

namespace {

CategoryParams family_preset(std::string_view spec) {
    // family:TAG[:eps[:e[:e']]]
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : spec.substr(7)) {
        if (ch == ':') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    parts.push_back(cur);
    FamilyId fam = family_from_name(parts[0]);
    int eps = 1;
    if (parts.size() > 1) {
        const std::string& s = parts[1];
        if (s == "+" || s == "1" || s == "+1") eps = 1;
        else if (s == "-" || s == "-1") eps = -1;
        else throw EChoiceInvalid("epsilon must be + or -, got " + s);
    }
    auto choices = legal_e_choices(fam, eps);
    if (choices.empty()) throw EChoiceInvalid(family_name(fam) + " has no legal e for this parity");
    GaussRational e = parts.size() > 2 ? LaurentPoly::parse(parts[2]).constant_term() : choices[0].e;
    GaussRational ep = parts.size() > 3 ? LaurentPoly::parse(parts[3]).constant_term() : choices[0].e_prime;
    if (parts.size() == 3) {
        for (auto& ch : choices)
            if (ch.e == e) {
                ep = ch.e_prime;
                break;
            }
    }
    CategoryParams p = family_instantiate(fam, eps, e, ep, symbolic_bindings(fam));
    p.label = std::string(spec);
    return p;
}

} // namespace

std::vector<std::string> preset_names() {
    return {"brauer", "bwm", "periplectic", "periplectic_q", "periplectic_q_op"};
}

CategoryParams preset(std::string_view name) {
    const LaurentPoly one(1);
    CategoryParams p;
    if (name == "brauer") {
        p = family_instantiate(FamilyId::C00_l_s, 1, 1, 1,
                               {{"lambda", one}, {"sigma", one}, {"delta", LaurentPoly::var("delta")}});
    } else if (name == "bwm") {
        LaurentPoly v = LaurentPoly::var("v"), z = LaurentPoly::var("z");
        LaurentPoly delta = v.inverse() * z.inverse() - v * z.inverse() + 1;
        p = family_instantiate(FamilyId::Cbb_l_s, 1, 1, 1, {{"lambda", v}, {"b", z}, {"sigma", one}, {"delta", delta}});
    } else if (name == "periplectic") {
        p = family_instantiate(FamilyId::C00_ml_s, -1, 1, 1, {{"lambda", one}, {"sigma", one}});
    } else if (name == "periplectic_q") {
        LaurentPoly q = LaurentPoly::var("q");
        p = family_instantiate(FamilyId::Cb0_bl_s, -1, 1, 1, {{"lambda", q}, {"b", q - q.inverse()}, {"sigma", one}});
    } else if (name == "periplectic_q_op") {
        LaurentPoly q = LaurentPoly::var("q");
        p = family_instantiate(FamilyId::C0b_bl_s, -1, 1, 1, {{"lambda", q}, {"b", q - q.inverse()}, {"sigma", -one}});
    } else if (name.substr(0, 7) == "family:") {
        return family_preset(name);
    } else {
        throw UnknownPreset("unknown preset " + std::string(name));
    }
    p.label = std::string(name);
    return p;
}

// ---- consistency equations

std::vector<std::string> check_consistency(const CategoryParams& p) {
    using F = Frac;
    const F eps(p.epsilon), e(LaurentPoly(p.e)), ep(LaurentPoly(p.e_prime));
    const F l(p.lambda), lp(p.lambda_prime), s(p.sigma), sp(p.sigma_prime), dl(p.delta), rho(p.rho);
    const F a(p.a), b(p.b), c(p.c), d(p.d), dp(p.d_prime), f(p.f), fp(p.f_prime);
    const F D(p.D), E(p.E), Fv(p.F), Dp(p.D_prime), Ep(p.E_prime), Fp(p.F_prime);
    const F zero(0), one(1), two(2);

    std::vector<std::pair<std::string, std::function<bool()>>> eqs;
    auto add = [&](std::string label, std::function<bool()> fn) { eqs.emplace_back(std::move(label), std::move(fn)); };

    add("NonZero", [&] { return !p.lambda.is_zero() && !p.lambda_prime.is_zero() && !p.a.is_zero(); });
    add("E4", [&] { return p.e.pow(4).is_one() && p.e_prime.pow(4).is_one(); });
    add("Derived.sigma_prime", [&] { return sp == eps * s; });
    add("Derived.d", [&] { return d == -(e * fp); });
    add("Derived.d_prime", [&] { return dp == -(ep * f); });
    add("Derived.E", [&] { return E == b - f; });
    add("Derived.E_prime", [&] { return Ep == b - fp; });
    add("Derived.D", [&] { return D * l == a * E; });
    add("Derived.D_prime", [&] { return Dp * lp == a * Ep; });
    add("Derived.F", [&] { return Fv * e == a; });
    add("Derived.F_prime", [&] { return Fp * ep == a; });
    if (p.lambda == p.lambda_prime) {
        add("QuadSame", [&] { return l * l - b * l - c * dl == a; });
    } else {
        add("MuNeq", [&] { return c == zero && dl == zero && a == -(lp * l) && b == lp + l; });
    }
    add("FCase.1", [&] { return f * (b - f) == zero; });
    add("FCase.2", [&] { return fp * (b - fp) == zero; });

    add("FFb.1", [&] { return a * (b - f) / l == c * s / e - (b - l - f) * fp; });
    add("FFb.2", [&] { return a * (b - fp) / lp == c * sp / ep - (b - lp - fp) * f; });
    add("FFb.3", [&] {
        return eps * e * e * (a * (b - f) / l - f * l) == (fp * fp - f * fp - fp * l + f * l) + e * c * sp;
    });
    add("FFb.4", [&] {
        return eps * ep * ep * (a * (b - fp) / lp - fp * lp) == (f * f - f * fp - f * lp + fp * lp) + ep * c * s;
    });
    add("FFb.5", [&] { return eps * e * e * (b - two * f) == b - two * fp; });
    add("FFb.6", [&] { return eps * ep * ep * (b - two * fp) == b - two * f; });
    add("FFb.7", [&] { return fp * (e * c * sp + f * l) == a * (b - f) * (b - fp) / l; });
    add("FFb.8", [&] { return f * (ep * c * s + fp * lp) == a * (b - f) * (b - fp) / lp; });
    add("FFb.9", [&] { return l * (b - f - fp) - e * c * sp == (b - f) * (b - fp); });
    add("FFb.10", [&] { return lp * (b - fp - f) - ep * c * s == (b - f) * (b - fp); });
    add("FFb.11", [&] { return l * (e * c * sp + f * l - f * f) - e * c * sp * f == a * (b - fp); });
    add("FFb.12", [&] { return lp * (ep * c * s + fp * lp - fp * fp) - ep * c * s * fp == a * (b - f); });

    add("Rest.1", [&] { return c * rho == a * (b - f - fp); });
    add("Rest.2", [&] {
        F rhs = a * (b - f - fp);
        return l * (s * ep * c + f * fp) + c * dl * fp == rhs && lp * (sp * e * c + f * fp) + c * dl * f == rhs;
    });
    add("Rest.3", [&] { return rho == sp * (d + e * l) + f * dl && rho == s * (dp + ep * lp) + fp * dl; });
    add("Rest.4", [&] { return s * (lp - l) * (one + eps * e * e) == zero; });
    add("Rest.5", [&] { return (l - b + fp) * rho == a / lp * (b - fp) * dl + a * sp * e; });
    add("Rest.6", [&] { return (lp - b + f) * rho == a / l * (b - f) * dl + a * s * ep; });
    add("Rest.7", [&] {
        return (b - f) * (rho * l + a * dl) + s * a * l * ep == (b - fp) * (rho * lp + a * dl) + sp * a * lp * e;
    });
    add("Rest.8", [&] {
        return a * dl * (e - one / ep) == (b - fp) * (s * a / lp - e * rho) + (b - fp - f) * l * s - e * c * s * sp;
    });
    add("Rest.9", [&] {
        return a * dl * (ep - one / e) == (b - f) * (sp * a / l - ep * rho) + (b - f - fp) * lp * sp - ep * c * s * sp;
    });

    add("DEF.1", [&] { return a * (b * E + c * sp * e) == D * D + E * a * l + E * b * D + E * c * sp * d + Fv * l * d; });
    add("DEF.2", [&] {
        return a * l + b * D + b * b * E + c * sp * d + c * sp * e * b == D * E + b * E * E + E * c * sp * e + Fv * l * e;
    });
    add("DEF.3", [&] {
        return b * E * c * sp + b * Fv * l + c * c * sp * sp * e + c * sp * l * f ==
               D * Fv + E * b * Fv + E * c * sp * f + Fv * l * f;
    });
    add("DEF.4", [&] {
        return a * (b * Ep + c * s * ep) == Dp * Dp + Ep * a * lp + Ep * b * Dp + Ep * c * s * dp + Fp * lp * dp;
    });
    add("DEF.5", [&] {
        return a * lp + b * Dp + b * b * Ep + c * s * dp + c * s * ep * b ==
               Dp * Ep + b * Ep * Ep + Ep * c * s * ep + Fp * lp * ep;
    });
    add("DEF.6", [&] {
        return b * Ep * c * s + b * Fp * lp + c * c * s * s * ep + c * s * lp * fp ==
               Dp * Fp + Ep * b * Fp + Ep * c * s * fp + Fp * lp * fp;
    });

    if (!p.c.is_zero()) {
        add("CNZ.1", [&] { return f == fp; });
        add("CNZ.2", [&] { return e * e * eps * f == f && ep * ep * eps * f == f; });
        add("CNZ.3", [&] { return E == zero && Ep == zero; });
        add("CNZ.4", [&] { return e * ep == one; });
        add("CNZ.5", [&] { return e * c * sp + f * l == zero && ep * c * s + fp * lp == zero; });
        add("CNZ.6", [&] { return l == lp; });
    }
    if (!p.sigma.is_zero()) add("SNZ.1", [&] { return e * ep == one; });

    std::vector<std::string> failed;
    for (auto& [label, fn] : eqs) {
        bool ok = false;
        try {
            ok = fn();
        } catch (const DivisionByZero&) {
            ok = false;
        }
        if (!ok) failed.push_back(label);
    }
    return failed;
}

std::vector<std::string> classify(const CategoryParams& p) {
    std::vector<std::string> out;
    for (auto fam : all_families()) {
        std::map<std::string, LaurentPoly> b;
        for (auto& v : family_red_vars(fam)) {
            if (v == "lambda") b[v] = p.lambda;
            else if (v == "sigma") b[v] = p.sigma;
            else if (v == "b") b[v] = p.b;
            else if (v == "delta") b[v] = p.delta;
            else if (v == "c") b[v] = p.c;
        }
        try {
            CategoryParams q = family_instantiate(fam, p.epsilon, p.e, p.e_prime, b);
            if (q == p)
                out.push_back(family_name(fam) + "(" + (p.epsilon > 0 ? "+" : "-") + "," + p.e.str() + "," +
                              p.e_prime.str() + ")");
        } catch (const Error&) {
        }
    }
    return out;
}

// ---- limits

namespace {

CategoryParams substitute_record(const CategoryParams& p, const std::map<VarId, LaurentPoly>& sub) {
    CategoryParams q = p;
    for (auto& [name, fld] : poly_fields()) q.*fld = poly_substitute(p.*fld, sub);
    return q;
}

} // namespace

std::vector<LimitCheck> check_limits() {
    struct Lim {
        FamilyId src;
        std::string var;
        FamilyId dst; // ignored when expect_fail
        std::map<std::string, LaurentPoly> dst_fixed;
        bool expect_fail;
    };
    const LaurentPoly zero;
    const std::vector<Lim> lims = {
        {FamilyId::C00_l_s, "sigma", FamilyId::C00_l_0, {{"c", zero}}, false},
        {FamilyId::Cb0_l_s, "sigma", FamilyId::Cb0_l_0, {}, false},
        {FamilyId::Cb0_l_0, "b", FamilyId::C00_l_0, {{"c", zero}, {"delta", zero}}, false},
        {FamilyId::Cb0_bl_s, "sigma", FamilyId::Cb0_bl_0, {}, false},
        {FamilyId::Cb0_bl_0, "b", FamilyId::C00_ml_0, {}, false},
        {FamilyId::Cb0_bl_s, "b", FamilyId::C00_ml_s, {}, false},
        {FamilyId::C00_ml_s, "sigma", FamilyId::C00_ml_0, {}, false},
        {FamilyId::Cbb_l_s, "b", FamilyId::C00_l_s, {}, false},
        {FamilyId::C0b_l_s, "sigma", FamilyId::C0b_l_0, {}, false},
        {FamilyId::C0b_l_0, "b", FamilyId::C00_l_0, {{"c", zero}, {"delta", zero}}, false},
        {FamilyId::C0b_bl_s, "sigma", FamilyId::C0b_bl_0, {}, false},
        {FamilyId::C0b_bl_0, "b", FamilyId::C00_ml_0, {}, false},
        {FamilyId::C0b_bl_s, "b", FamilyId::C00_ml_s, {}, false},
        {FamilyId::Cb0_l_s, "b", FamilyId::Cb0_l_s, {}, true},
        {FamilyId::C0b_l_s, "b", FamilyId::C0b_l_s, {}, true},
        {FamilyId::Cbb_l_s, "sigma", FamilyId::Cbb_l_s, {}, true},
    };
    std::vector<LimitCheck> out;
    for (auto& L : lims) {
        for (int eps : {1, -1}) {
            for (auto& ch : legal_e_choices(L.src, eps)) {
                std::string desc = "lim " + L.var + "->0 " + family_name(L.src) + "(" + (eps > 0 ? "+" : "-") + "," +
                                   ch.e.str() + "," + ch.e_prime.str() + ")";
                CategoryParams src = family_instantiate(L.src, eps, ch.e, ch.e_prime, symbolic_bindings(L.src));
                std::map<VarId, LaurentPoly> sub{{var_id(L.var), zero}};
                if (L.expect_fail) {
                    bool diverged = false;
                    try {
                        substitute_record(src, sub);
                    } catch (const NonInvertibleSubstitution&) {
                        diverged = true;
                    }
                    out.push_back({desc + " does not exist", diverged, diverged ? "negative exponent detected" : "limit unexpectedly finite"});
                    continue;
                }
                CategoryParams got = substitute_record(src, sub);
                auto b = symbolic_bindings(L.dst);
                for (auto& [k, v] : L.dst_fixed) b[k] = v;
                CategoryParams want;
                try {
                    want = family_instantiate(L.dst, eps, ch.e, ch.e_prime, b);
                } catch (const Error& e) {
                    out.push_back({desc + " = " + family_name(L.dst), false, e.what()});
                    continue;
                }
                auto diff = got.first_difference(want);
                out.push_back({desc + " = " + family_name(L.dst), !diff, diff ? "differs in " + *diff : ""});
            }
        }
    }
    return out;
}

// ---- Wenzl

std::string WenzlReport::to_json() const {
    json j;
    j["result"] = feasible ? "Feasible" : "Infeasible";
    j["survivors"] = survivors;
    j["ratio_row"] = ratio_row;
    j["ratio_imposed"] = ratio_imposed;
    j["witness"] = witness;
    j["bwm"] = bwm_feasible ? "Feasible" : "Infeasible";
    j["lines"] = lines;
    return j.dump(2);
}

WenzlReport wenzl_feasibility() {
    WenzlReport rep;
    const LaurentPoly q = LaurentPoly::var("q"), r = LaurentPoly::var("r");
    // imposed: a = q, b = q - 1, c = 0, lambda = q, rho = r, delta = (r-1)/(q-1)
    const LaurentPoly a_w = q, b_w = q - 1, lam_w = q;
    const Frac rho_w(r), delta_w(r - 1, q - 1);
    rep.lines.push_back("imposed: a = q, b = q - 1, c = 0, lambda = q, rho = r, delta = (r - 1)/(q - 1)");

    // rows compatible with c = 0 and b, delta, rho all non-zero
    std::vector<CategoryParams> kept;
    for (auto fam : all_families())
        for (int eps : {1, -1})
            for (auto& ch : legal_e_choices(fam, eps)) {
                CategoryParams p = family_instantiate(fam, eps, ch.e, ch.e_prime, symbolic_bindings(fam));
                if (!p.c.is_zero() || p.b.is_zero() || p.delta.is_zero() || p.rho.is_zero()) continue;
                rep.survivors.push_back(family_name(fam) + "(" + (eps > 0 ? "+" : "-") + "," + ch.e.str() + "," +
                                        ch.e_prime.str() + ")");
                kept.push_back(p);
            }
    rep.lines.push_back("rows with c = 0 and b, delta, rho non-zero: " + std::to_string(kept.size()));

    std::map<VarId, LaurentPoly> sub{{var_id("lambda"), lam_w}, {var_id("b"), b_w}};
    rep.feasible = false;
    bool first = true;
    for (auto& p : kept) {
        // rho/delta is free of sigma and e on these rows; compare it with the imposed ratio
        // delta carries 1/b on these rows; clear it before substituting a non-unit for b
        const LaurentPoly bv = LaurentPoly::var("b");
        Frac ratio = Frac(poly_substitute(bv * p.rho, sub)) / Frac(poly_substitute(bv * p.delta, sub));
        Frac imposed = rho_w / delta_w;
        LaurentPoly witness = ratio.num * imposed.den - imposed.num * ratio.den;
        bool a_ok = poly_substitute(p.a, sub) == a_w;
        if (first) {
            Frac sym = Frac(p.rho) / Frac(p.delta);
            rep.ratio_row = "(" + sym.num.str() + ")/(" + sym.den.str() + ")";
            rep.ratio_imposed = "(" + imposed.num.str() + ")/(" + imposed.den.str() + ")";
            rep.witness = witness.str();
            first = false;
        }
        rep.lines.push_back(p.label + (p.epsilon > 0 ? "(+)" : "(-)") + ": a matches = " + (a_ok ? "yes" : "no") +
                            ", rho/delta mismatch polynomial = " + witness.str());
        if (witness.is_zero() && a_ok) rep.feasible = true;
    }

    CategoryParams bwm = preset("bwm");
    rep.bwm_feasible = bwm.a.is_one() && bwm.rho == LaurentPoly::var("v", -1) && check_consistency(bwm).empty() &&
                       !classify(bwm).empty();
    rep.lines.push_back(std::string("bwm constraints against Cbb_l_s: ") + (rep.bwm_feasible ? "Feasible" : "Infeasible"));
    return rep;
}

} // namespace brauer
