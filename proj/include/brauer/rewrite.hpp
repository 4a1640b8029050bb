#pragma once
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "brauer/coeff.hpp"
#include "brauer/diagram.hpp"
#include "brauer/params.hpp"
#include "brauer/term.hpp"

namespace brauer {

using Terms = std::map<BrauerDiagram, LaurentPoly>;

struct NormalForm {
    int m = 0, n = 0;
    Terms terms;
    std::uint64_t params_fingerprint = 0;

    bool is_zero() const { return terms.empty(); }
    LaurentPoly coeff(const BrauerDiagram& d) const;
    void add(const BrauerDiagram& d, const LaurentPoly& c);
    std::string str() const;
    std::string to_json() const;
    static NormalForm from_json(std::string_view text);

    NormalForm& operator+=(const NormalForm& o);
    NormalForm& operator-=(const NormalForm& o);
    NormalForm& operator*=(const LaurentPoly& c);
    friend NormalForm operator+(NormalForm a, const NormalForm& b) { return a += b; }
    friend NormalForm operator-(NormalForm a, const NormalForm& b) { return a -= b; }
    friend NormalForm operator*(const LaurentPoly& c, NormalForm a) { return a *= c; }
    // equality ignores the fingerprint: two morphisms are equal iff their basis expansions are
    friend bool operator==(const NormalForm& a, const NormalForm& b) {
        return a.m == b.m && a.n == b.n && a.terms == b.terms;
    }
};

NormalForm basis_nf(const BrauerDiagram& d, std::uint64_t fingerprint = 0);

// Rewrites words into the standard-expression basis for one fixed parameter record.
// Memoizes across calls; not safe to share between threads.
class Engine {
public:
    explicit Engine(CategoryParams p, bool require_consistent = true);

    const CategoryParams& params() const { return p_; }
    std::uint64_t fingerprint() const { return fp_; }
    void set_fuel(long steps) { fuel_ = steps; }

    NormalForm normalize(const GenWord& w);
    NormalForm normalize(int domain, const std::vector<Letter>& letters);
    NormalForm normalize(const MorphismExpr& e);
    NormalForm push_generator(Letter g, const BrauerDiagram& d);
    NormalForm compose(const NormalForm& top, const NormalForm& bottom);
    NormalForm tensor(const NormalForm& x, const NormalForm& y);
    NormalForm basis(const BrauerDiagram& d) const { return basis_nf(d, fp_); }
    NormalForm under_cross();

private:
    using Word = std::vector<Letter>;

    template <class F>
    NormalForm guarded(int m, int n, F&& body);
    const Terms& nfw(int m, const Word& w);
    const Terms& push(Letter g, const BrauerDiagram& d);
    Terms push_cross(int r, const BrauerDiagram& d, const StdParts& sp);
    Terms push_cap(int q, const BrauerDiagram& d, const StdParts& sp);
    const Terms& cap_block_perm(int m, int q, int s, const std::vector<int>& perm, const std::vector<Block>& caps);
    Terms extend(int m, const Terms& r, const Word& letters);
    Terms expect_standard(int m, const Word& w);
    void tick();

    CategoryParams p_;
    std::uint64_t fp_;
    LaurentPoly eps_, e_, ep_;
    long fuel_ = 1000000;
    long steps_ = 0;
    std::unordered_map<std::string, Terms> word_memo_, push_memo_, cbp_memo_;
    std::unordered_set<std::string> active_;
};

NormalForm normalize(const GenWord& w, const CategoryParams& p);
NormalForm nf_compose(const NormalForm& x, const NormalForm& y, const CategoryParams& p);
NormalForm nf_tensor(const NormalForm& x, const NormalForm& y, const CategoryParams& p);
NormalForm under_cross(const CategoryParams& p);

// adjacent letters x (lower) and y (upper) that touch disjoint strands can be swapped
struct Swap {
    Letter lower, upper;
    bool odd_pair;
};
std::optional<Swap> try_commute(Letter lower, Letter upper);

// one-step rewrites at every window of w
struct Reduct {
    std::string rule;
    size_t at;
    std::vector<std::pair<LaurentPoly, std::vector<Letter>>> terms;
};
std::vector<Reduct> one_step_reducts(const GenWord& w, const CategoryParams& p);

struct ConfluenceIssue {
    GenWord word;
    std::string rule;
    NormalForm difference;
};
struct ConfluenceReport {
    long words = 0;
    long branches = 0;
    std::vector<ConfluenceIssue> issues;
};
ConfluenceReport check_local_confluence(const CategoryParams& p, int max_width, int max_letters,
                                        size_t max_issues = 50);

} // namespace brauer
