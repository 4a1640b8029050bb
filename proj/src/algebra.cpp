#include "brauer/algebra.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "json.hpp"

namespace brauer {

Generators gens(int n, Engine& eng) {
    if (n < 2) throw WidthTooSmall("generators need n >= 2, got " + std::to_string(n));
    Generators G;
    for (int i = 1; i < n; ++i) {
        G.g.push_back(eng.normalize(n, {Letter::X(i)}));
        G.e.push_back(eng.normalize(n, {Letter::A(i), Letter::C(i)}));
    }
    return G;
}

Generators gens(int n, const CategoryParams& p) {
    Engine eng(p);
    return gens(n, eng);
}

MultTable mult_table(int n, const CategoryParams& p, int max_n) {
    if (n > max_n) throw WidthTooSmall("tables above n = " + std::to_string(max_n) + " are disabled");
    Engine eng(p);
    MultTable t;
    t.n = n;
    t.basis = enumerate_diagrams(n, n);
    t.params_fingerprint = eng.fingerprint();
    std::vector<NormalForm> b;
    for (auto& d : t.basis) b.push_back(eng.basis(d));
    for (auto& x : b) {
        t.products.emplace_back();
        for (auto& y : b) t.products.back().push_back(eng.compose(x, y));
    }
    return t;
}

std::string MultTable::to_json() const {
    using json = nlohmann::json;
    json j;
    j["n"] = n;
    j["basis"] = json::array();
    for (auto& d : basis) j["basis"].push_back(d.literal());
    j["products"] = json::array();
    for (auto& row : products) {
        json r = json::array();
        for (auto& nf : row) r.push_back(json::parse(nf.to_json()));
        j["products"].push_back(r);
    }
    return j.dump(2);
}

std::string MultTable::to_csv() const {
    std::ostringstream os;
    os << "row,col,diagram,coeff\n";
    for (size_t i = 0; i < products.size(); ++i)
        for (size_t k = 0; k < products[i].size(); ++k)
            for (auto& [d, c] : products[i][k].terms)
                os << i << ',' << k << ",\"" << d.literal() << "\",\"" << c.str() << "\"\n";
    return os.str();
}

namespace {

struct Rel {
    std::string label;
    std::function<bool()> holds;
};

// id_{i-1} # x # id_{n-i-1} for a two-strand x
NormalForm embed2(Engine& eng, const NormalForm& x, int i, int n) {
    NormalForm out = eng.tensor(eng.tensor(eng.basis(identity_diagram(i - 1)), x), eng.basis(identity_diagram(n - i - 1)));
    return out;
}

} // namespace

std::vector<std::string> check_presentation(const std::string& name, int n, const CategoryParams& p) {
    if (name != "bwm" && name != "brauer" && name != "periplectic_q" && name != "periplectic")
        throw UnknownPreset("no presentation known for " + name);
    Engine eng(p, false);
    Generators G = gens(n, eng);
    auto g = [&](int i) { return G.g[i - 1]; };
    auto e = [&](int i) { return G.e[i - 1]; };
    auto mul = [&](std::initializer_list<NormalForm> xs) {
        // x1 x2 ... xk with x1 on top
        std::vector<NormalForm> v(xs);
        NormalForm r = v.back();
        for (size_t k = v.size() - 1; k-- > 0;) r = eng.compose(v[k], r);
        return r;
    };
    const NormalForm one = eng.basis(identity_diagram(n));
    const NormalForm under = eng.under_cross();
    auto ginv = [&](int i) { return embed2(eng, under, i, n); };

    const bool bwm_like = name == "bwm" || name == "brauer";
    const LaurentPoly v = name == "bwm" ? LaurentPoly::var("v") : LaurentPoly(1);
    const LaurentPoly z = name == "bwm" ? LaurentPoly::var("z") : LaurentPoly();
    const LaurentPoly q = name == "periplectic_q" ? LaurentPoly::var("q") : LaurentPoly(1);
    const LaurentPoly qq = q - q.inverse();
    const LaurentPoly delta = p.delta;

    std::vector<Rel> rels;
    auto add = [&](std::string label, std::function<bool()> f) { rels.push_back({std::move(label), std::move(f)}); };
    auto I = [](const char* s, int) { return std::string(s); };
    auto IJ = [](const char* s, int, int) { return std::string(s); };

    for (int i = 1; i < n; ++i) {
        add(I("g_i g_i^-1 = 1 = g_i^-1 g_i", i), [&, i] { return mul({g(i), ginv(i)}) == one && mul({ginv(i), g(i)}) == one; });
        if (bwm_like) {
            add(I("(g_i - g_i^-1) = z(1 - e_i)", i), [&, i] { return g(i) - ginv(i) == z * (one - e(i)); });
            add(I("e_i^2 = delta e_i", i), [&, i] { return mul({e(i), e(i)}) == delta * e(i); });
            add(I("e_i g_i = v e_i = g_i e_i", i),
                [&, i] { return mul({e(i), g(i)}) == v * e(i) && mul({g(i), e(i)}) == v * e(i); });
        } else {
            add(I("(g_i - q)(g_i + q^-1) = 0", i),
                [&, i] { return mul({g(i), g(i)}) + (q.inverse() - q) * g(i) - one == NormalForm{n, n, {}, 0}; });
            add(I("e_i^2 = 0", i), [&, i] { return mul({e(i), e(i)}).is_zero(); });
            add(I("e_i g_i = -q^-1 e_i", i), [&, i] { return mul({e(i), g(i)}) == -q.inverse() * e(i); });
            add(I("g_i e_i = q e_i", i), [&, i] { return mul({g(i), e(i)}) == q * e(i); });
        }
    }
    for (int i = 1; i < n; ++i)
        for (int j = i + 2; j < n; ++j) {
            add(IJ("g_i g_j = g_j g_i", i, j), [&, i, j] { return mul({g(i), g(j)}) == mul({g(j), g(i)}); });
            add(IJ("g_i e_j = e_j g_i", i, j),
                [&, i, j] { return mul({g(i), e(j)}) == mul({e(j), g(i)}) && mul({g(j), e(i)}) == mul({e(i), g(j)}); });
            add(IJ("e_i e_j = e_j e_i", i, j), [&, i, j] { return mul({e(i), e(j)}) == mul({e(j), e(i)}); });
        }
    for (int i = 1; i + 1 < n; ++i) {
        add(I("g_i g_{i+1} g_i = g_{i+1} g_i g_{i+1}", i),
            [&, i] { return mul({g(i), g(i + 1), g(i)}) == mul({g(i + 1), g(i), g(i + 1)}); });
        if (bwm_like) {
            add(I("e_{i+1} e_i e_{i+1} = e_{i+1}", i), [&, i] { return mul({e(i + 1), e(i), e(i + 1)}) == e(i + 1); });
            add(I("e_i e_{i+1} e_i = e_i", i), [&, i] { return mul({e(i), e(i + 1), e(i)}) == e(i); });
            add(I("g_i g_{i+1} e_i = e_{i+1} e_i", i), [&, i] { return mul({g(i), g(i + 1), e(i)}) == mul({e(i + 1), e(i)}); });
            add(I("g_{i+1} g_i e_{i+1} = e_i e_{i+1}", i),
                [&, i] { return mul({g(i + 1), g(i), e(i + 1)}) == mul({e(i), e(i + 1)}); });
            add(I("e_i g_{i+1} e_i = v^-1 e_i", i), [&, i] { return mul({e(i), g(i + 1), e(i)}) == v.inverse() * e(i); });
            add(I("e_{i+1} g_i e_{i+1} = v^-1 e_{i+1}", i),
                [&, i] { return mul({e(i + 1), g(i), e(i + 1)}) == v.inverse() * e(i + 1); });
        } else {
            add(I("e_{i+1} e_i e_{i+1} = -e_{i+1}", i), [&, i] { return mul({e(i + 1), e(i), e(i + 1)}) == -1 * e(i + 1); });
            add(I("e_i e_{i+1} e_i = -e_i", i), [&, i] { return mul({e(i), e(i + 1), e(i)}) == -1 * e(i); });
            add(I("g_i e_{i+1} e_i = -g_{i+1} e_i + (q-q^-1) e_{i+1} e_i", i), [&, i] {
                return mul({g(i), e(i + 1), e(i)}) == -1 * mul({g(i + 1), e(i)}) + qq * mul({e(i + 1), e(i)});
            });
            add(I("e_{i+1} e_i g_{i+1} = -e_{i+1} g_i + (q-q^-1) e_{i+1} e_i", i), [&, i] {
                return mul({e(i + 1), e(i), g(i + 1)}) == -1 * mul({e(i + 1), g(i)}) + qq * mul({e(i + 1), e(i)});
            });
        }
    }

    std::vector<std::string> failed;
    for (auto& r : rels) {
        bool ok = false;
        try {
            ok = r.holds();
        } catch (const Error&) {
            ok = false;
        }
        if (!ok && std::find(failed.begin(), failed.end(), r.label) == failed.end()) failed.push_back(r.label);
    }
    return failed;
}

std::vector<std::string> check_presentation(const std::string& name, int n) {
    if (name != "bwm" && name != "brauer" && name != "periplectic_q" && name != "periplectic")
        throw UnknownPreset("no presentation known for " + name);
    return check_presentation(name, n, preset(name));
}

} // namespace brauer
