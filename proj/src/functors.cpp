#include "brauer/functors.hpp"

namespace brauer {

namespace {

void require_unit(const LaurentPoly& x, const char* name) {
    if (!x.is_unit()) throw NonUnitScale(std::string(name) + " = " + x.str() + " is not an invertible monomial");
}

// exact quotient; only units divide
LaurentPoly quot(const LaurentPoly& num, const LaurentPoly& den) {
    if (num.is_zero()) return {};
    return num / den;
}

} // namespace

RescaleSpec RescaleSpec::inverse() const { return {alpha.inverse(), beta.inverse(), gamma.inverse()}; }

CategoryParams rescale_params(const CategoryParams& p, const RescaleSpec& s) {
    require_unit(s.alpha, "alpha");
    require_unit(s.beta, "beta");
    require_unit(s.gamma, "gamma");
    const LaurentPoly g = s.gamma.inverse(), g2 = g * g, ab = (s.alpha * s.beta).inverse();
    CategoryParams t = p;
    t.lambda = g * p.lambda;
    t.lambda_prime = g * p.lambda_prime;
    t.sigma = ab * p.sigma;
    t.sigma_prime = ab * p.sigma_prime;
    t.delta = ab * p.delta;
    t.rho = ab * g * p.rho;
    t.a = g2 * p.a;
    t.b = g * p.b;
    t.c = s.alpha * s.beta * g2 * p.c;
    for (auto f : {&CategoryParams::d, &CategoryParams::d_prime, &CategoryParams::f, &CategoryParams::f_prime,
                   &CategoryParams::E, &CategoryParams::E_prime})
        t.*f = g * (p.*f);
    for (auto f : {&CategoryParams::D, &CategoryParams::D_prime, &CategoryParams::F, &CategoryParams::F_prime})
        t.*f = g2 * (p.*f);
    t.label = p.label + " rescaled";
    return t;
}

CategoryParams vflip_params(const CategoryParams& p) {
    CategoryParams t = p;
    std::swap(t.lambda, t.lambda_prime);
    std::swap(t.sigma, t.sigma_prime);
    std::swap(t.d, t.d_prime);
    std::swap(t.e, t.e_prime);
    std::swap(t.f, t.f_prime);
    std::swap(t.D, t.D_prime);
    std::swap(t.E, t.E_prime);
    std::swap(t.F, t.F_prime);
    t.label = p.label + " vflipped";
    return t;
}

CategoryParams hflip_params(const CategoryParams& p) {
    CategoryParams t = p;
    const LaurentPoly E(p.e), Ep(p.e_prime), eep = E * Ep;
    t.sigma = p.sigma_prime;
    t.sigma_prime = p.sigma;
    t.rho = p.rho + E * p.sigma_prime * (p.lambda_prime - p.lambda);
    t.d = quot(p.d_prime, eep);
    t.d_prime = quot(p.d, eep);
    t.e = p.e.inverse();
    t.e_prime = p.e_prime.inverse();
    t.f = p.f_prime;
    t.f_prime = p.f;
    t.D = quot(p.D_prime * p.lambda_prime, p.lambda);
    t.D_prime = quot(p.D * p.lambda, p.lambda_prime);
    t.E = p.E_prime;
    t.E_prime = p.E;
    t.F = eep * p.F_prime;
    t.F_prime = eep * p.F;
    t.label = p.label + " hflipped";
    return t;
}

std::vector<Letter> vflip_word(int domain, const std::vector<Letter>& w) {
    propagate_width(domain, w);
    std::vector<Letter> r;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        Letter g = *it;
        if (g.is_cap()) g.kind = Letter::Kind::Cup;
        else if (g.is_cup()) g.kind = Letter::Kind::Cap;
        r.push_back(g);
    }
    return r;
}

std::vector<Letter> hflip_word(int domain, const std::vector<Letter>& w) {
    std::vector<Letter> r;
    int width = domain;
    for (auto g : w) {
        switch (g.kind) {
        case Letter::Kind::Cross: r.push_back(Letter::X(width - g.pos)); break;
        case Letter::Kind::Cap: r.push_back(Letter::A(width - g.pos)); break;
        case Letter::Kind::Cup: r.push_back(Letter::C(width + 2 - g.pos)); break;
        }
        width += g.delta();
    }
    return r;
}

NormalForm rescale(const NormalForm& nf, const RescaleSpec& s, Engine& tgt) {
    require_unit(s.alpha, "alpha");
    require_unit(s.beta, "beta");
    require_unit(s.gamma, "gamma");
    NormalForm out{nf.m, nf.n, {}, tgt.fingerprint()};
    for (auto& [d, c] : nf.terms) {
        int xs = 0;
        for (auto g : standard_parts(d).letters) xs += g.is_cross();
        out.add(d, s.alpha.pow(d.caps()) * s.beta.pow(d.cups()) * s.gamma.pow(xs) * c);
    }
    return out;
}

NormalForm vflip(const NormalForm& nf, Engine& tgt) {
    NormalForm out{nf.n, nf.m, {}, tgt.fingerprint()};
    for (auto& [d, c] : nf.terms) out += c * tgt.normalize(d.n, vflip_word(d.m, standard_parts(d).letters));
    return out;
}

NormalForm hflip(const NormalForm& nf, Engine& tgt) {
    NormalForm out{nf.m, nf.n, {}, tgt.fingerprint()};
    for (auto& [d, c] : nf.terms) out += c * tgt.normalize(d.m, hflip_word(d.m, standard_parts(d).letters));
    return out;
}

std::pair<NormalForm, CategoryParams> rescale(const NormalForm& nf, const RescaleSpec& s, const CategoryParams& src) {
    CategoryParams t = rescale_params(src, s);
    Engine e(t);
    return {rescale(nf, s, e), t};
}

std::pair<NormalForm, CategoryParams> vflip(const NormalForm& nf, const CategoryParams& src) {
    CategoryParams t = vflip_params(src);
    Engine e(t);
    return {vflip(nf, e), t};
}

std::pair<NormalForm, CategoryParams> hflip(const NormalForm& nf, const CategoryParams& src) {
    CategoryParams t = hflip_params(src);
    Engine e(t);
    return {hflip(nf, e), t};
}

} // namespace brauer
