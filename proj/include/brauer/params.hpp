#pragma once
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "brauer/coeff.hpp"

namespace brauer {

struct CategoryParams {
    int epsilon = 1;
    GaussRational e{1}, e_prime{1};
    LaurentPoly lambda, lambda_prime, sigma, sigma_prime, delta, rho;
    LaurentPoly a, b, c, d, d_prime, f, f_prime;
    LaurentPoly D, E, F, D_prime, E_prime, F_prime;
    std::string label; // informational only, ignored by comparisons

    std::uint64_t fingerprint() const;
    std::string to_json() const;
    static CategoryParams from_json(std::string_view text);
    // differs from == in that it reports the first differing field
    std::optional<std::string> first_difference(const CategoryParams& o) const;
    friend bool operator==(const CategoryParams& x, const CategoryParams& y) {
        return !x.first_difference(y).has_value();
    }
};

using PolyField = LaurentPoly CategoryParams::*;
const std::vector<std::pair<std::string, PolyField>>& poly_fields();

enum class FamilyId {
    Cb0_l_s,
    Cb0_bl_s,
    Cb0_l_0,
    Cb0_bl_0,
    C0b_l_s,
    C0b_bl_s,
    C0b_l_0,
    C0b_bl_0,
    Cbb_l_s,
    C00_l_s,
    C00_ml_s,
    C00_l_0,
    C00_ml_0,
};

const std::vector<FamilyId>& all_families();
std::string family_name(FamilyId f);
FamilyId family_from_name(std::string_view name);
// independent parameters of the row, in Table order
std::vector<std::string> family_red_vars(FamilyId f);
std::map<std::string, LaurentPoly> symbolic_bindings(FamilyId f);

struct EChoice {
    GaussRational e, e_prime;
};
// every (e, e') pair the row admits for the given parity, assuming symbolic red variables
std::vector<EChoice> legal_e_choices(FamilyId f, int epsilon);

CategoryParams family_instantiate(FamilyId fam, int epsilon, const GaussRational& e, const GaussRational& e_prime,
                                  const std::map<std::string, LaurentPoly>& bindings);

// brauer, bwm, periplectic, periplectic_q, periplectic_q_op, family:TAG[:eps[:e[:e']]]
CategoryParams preset(std::string_view name);
std::vector<std::string> preset_names();

std::vector<std::string> check_consistency(const CategoryParams& p);

// family rows (with e-choices) whose instantiation from p's own red values reproduces p
std::vector<std::string> classify(const CategoryParams& p);

struct LimitCheck {
    std::string description;
    bool ok;
    std::string detail;
};
std::vector<LimitCheck> check_limits();

struct WenzlReport {
    bool feasible = true;
    std::vector<std::string> survivors; // rows passing the c=0, b,delta,rho != 0 filter
    std::string ratio_row;              // rho/delta on the surviving rows
    std::string ratio_imposed;
    std::string witness;                // nonzero polynomial that would have to vanish
    bool bwm_feasible = false;
    std::vector<std::string> lines;
    std::string to_json() const;
};
WenzlReport wenzl_feasibility();

} // namespace brauer
