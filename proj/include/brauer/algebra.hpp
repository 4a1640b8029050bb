#pragma once
#include <string>
#include <vector>

#include "brauer/rewrite.hpp"

namespace brauer {

struct Generators {
    std::vector<NormalForm> g, e; // g[i-1] = crossing at i, e[i-1] = cap then cup at i
};
Generators gens(int n, Engine& eng);
Generators gens(int n, const CategoryParams& p);

struct MultTable {
    int n = 0;
    std::vector<BrauerDiagram> basis;
    std::vector<std::vector<NormalForm>> products; // products[i][j] = basis[i] . basis[j] (i on top)
    std::uint64_t params_fingerprint = 0;
    std::string to_json() const;
    std::string to_csv() const;
};
MultTable mult_table(int n, const CategoryParams& p, int max_n = 4);

// labels of relations that fail; presets bwm, brauer, periplectic_q, periplectic
std::vector<std::string> check_presentation(const std::string& preset_name, int n);
// same relation list, evaluated under an arbitrary record
std::vector<std::string> check_presentation(const std::string& preset_name, int n, const CategoryParams& p);

} // namespace brauer
