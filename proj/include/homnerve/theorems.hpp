#ifndef HOMNERVE_THEOREMS_HPP
#define HOMNERVE_THEOREMS_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "field.hpp"
#include "homology.hpp"
#include "simplicial.hpp"

namespace homnerve {

enum class HypothesisKind { T1, HNT, HellyWeak, HellyStrong, RainbowWeak, RainbowStrong };

inline std::string to_string(HypothesisKind kind) {
    switch (kind) {
        case HypothesisKind::T1: return "T1";
        case HypothesisKind::HNT: return "HNT";
        case HypothesisKind::HellyWeak: return "Helly-weak";
        case HypothesisKind::HellyStrong: return "Helly-strong";
        case HypothesisKind::RainbowWeak: return "Rainbow-weak";
        case HypothesisKind::RainbowStrong: return "Rainbow-strong";
    }
    return "?";
}

/// Name of the integer parameter a hypothesis is indexed by.
inline std::string parameter_name(HypothesisKind kind) {
    switch (kind) {
        case HypothesisKind::T1:
        case HypothesisKind::HNT: return "k";
        case HypothesisKind::HellyWeak:
        case HypothesisKind::HellyStrong: return "d";
        default: return "m";
    }
}

/// One index set whose intersection (or colored subcomplex) has nonzero
/// reduced homology in a degree the hypothesis requires to vanish.
struct Violation {
    std::vector<std::size_t> indices;  ///< 1-based member indices or colors
    std::vector<std::string> labels;   ///< member names or "color c"
    std::vector<int> required_degrees;
    std::vector<std::pair<int, std::size_t>> offending;  ///< (degree, Betti number)
};

struct HypothesisReport {
    HypothesisKind kind = HypothesisKind::T1;
    int parameter = 0;
    FieldSpec field;
    bool passed = true;
    std::vector<Violation> violations;
};

enum class ConclusionMode { T1, HNT };

struct RankRow {
    int degree = 0;
    std::size_t rank_nerve = 0;
    std::size_t rank_ambient = 0;
    bool equal = true;
};

struct ConclusionReport {
    int k = 0;
    FieldSpec field;
    ConclusionMode mode = ConclusionMode::T1;
    std::size_t rank_N_k1 = 0;  ///< rank of reduced H_{k+1}(N)
    std::size_t rank_X_k1 = 0;
    std::size_t rank_X_k = 0;
    std::size_t rank_N_k = 0;
    bool ineq1_holds = true;  ///< rank H_{k+1}(N) <= rank H_{k+1}(X)
    bool ineq2_holds = true;  ///< rank H_k(X) <= rank H_k(N)
    std::vector<RankRow> table;  ///< degrees 0..k, HNT mode only
    BettiProfile nerve_betti;
    BettiProfile ambient_betti;

    /// T1 mode: both inequalities. HNT mode: the first inequality and rank
    /// equality in every degree 0..k.
    bool holds() const {
        if (mode == ConclusionMode::T1) return ineq1_holds && ineq2_holds;
        if (!ineq1_holds) return false;
        for (const auto& row : table)
            if (!row.equal) return false;
        return true;
    }
};

struct HellyReport {
    int d = 1;
    std::size_t m = 0;
    FieldSpec field;
    HypothesisReport hypothesis;
    bool ambient_ok = false;  ///< reduced homology of the union vanishes in degrees >= d
    bool predicted_nonempty = false;
    bool actual_intersection_nonempty = false;
};

struct RainbowReport {
    int m = 0;
    FieldSpec field;
    HypothesisReport hypothesis;
    bool predicted_rainbow = false;
    std::optional<Simplex> witness;
};

namespace detail {

/// Calls fn(indices) for every r-subset of {1..n}, lexicographically.
template <class Fn>
void for_each_combination(std::size_t n, std::size_t r, Fn&& fn) {
    if (r == 0 || r > n) return;
    std::vector<std::size_t> idx(r);
    for (std::size_t i = 0; i < r; ++i) idx[i] = i + 1;
    while (true) {
        fn(static_cast<const std::vector<std::size_t>&>(idx));
        std::size_t i = r;
        while (i > 0 && idx[i - 1] == n - r + i) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
    }
}

inline std::vector<int> degree_range(int low, int high) {
    std::vector<int> out;
    for (int d = low; d <= high; ++d) out.push_back(d);
    return out;
}

/// Records a violation if the profile is nonzero in any required degree.
inline void audit(HypothesisReport& report, const BettiProfile& profile,
                  std::vector<std::size_t> indices, std::vector<std::string> labels,
                  std::vector<int> required) {
    Violation v{std::move(indices), std::move(labels), std::move(required), {}};
    for (int d : v.required_degrees)
        if (profile[d] != 0) v.offending.emplace_back(d, profile[d]);
    if (!v.offending.empty()) {
        report.passed = false;
        report.violations.push_back(std::move(v));
    }
}

inline HypothesisReport check_cover_hypothesis(const Cover& cover, int k, const FieldSpec& field,
                                               HypothesisKind kind) {
    if (k < 0) throw InvalidInput("k must be non-negative");
    HypothesisReport report{kind, k, field, true, {}};
    const auto n = nerve(cover);
    for (const auto& sigma : n.simplices()) {
        const int size = static_cast<int>(sigma.size());
        if (size > k + 1) break;  // canonical order is by cardinality
        const int degree = k - size + 1;
        const auto profile = reduced_betti(cover.intersection_of(sigma), field);
        std::vector<std::size_t> indices(sigma.begin(), sigma.end());
        std::vector<std::string> labels;
        for (auto i : indices) labels.push_back(cover.member(i - 1).name);
        audit(report, profile, std::move(indices), std::move(labels),
              kind == HypothesisKind::T1 ? std::vector<int>{degree} : degree_range(-1, degree));
    }
    return report;
}

}  // namespace detail

/// For every sigma in the k-skeleton of the nerve (|sigma| <= k + 1), the
/// reduced homology of the intersection over sigma vanishes in degree
/// k - |sigma| + 1.
inline HypothesisReport check_t1_hypothesis(const Cover& cover, int k, const FieldSpec& field) {
    return detail::check_cover_hypothesis(cover, k, field, HypothesisKind::T1);
}

/// Same index sets, but the intersection must be (k - |sigma| + 1)-acyclic:
/// vanishing in every degree from -1 up to k - |sigma| + 1.
inline HypothesisReport check_hnt_hypothesis(const Cover& cover, int k, const FieldSpec& field) {
    return detail::check_cover_hypothesis(cover, k, field, HypothesisKind::HNT);
}

/// Rank comparisons between the nerve and the covered complex. Computed
/// regardless of whether any hypothesis holds.
inline ConclusionReport verify_conclusions(const Cover& cover, int k, const FieldSpec& field,
                                           ConclusionMode mode) {
    if (k < 0) throw InvalidInput("k must be non-negative");
    ConclusionReport r;
    r.k = k;
    r.field = field;
    r.mode = mode;
    r.nerve_betti = reduced_betti(nerve(cover), field);
    r.ambient_betti = reduced_betti(cover.ambient(), field);
    r.rank_N_k1 = r.nerve_betti[k + 1];
    r.rank_X_k1 = r.ambient_betti[k + 1];
    r.rank_X_k = r.ambient_betti[k];
    r.rank_N_k = r.nerve_betti[k];
    r.ineq1_holds = r.rank_N_k1 <= r.rank_X_k1;
    r.ineq2_holds = r.rank_X_k <= r.rank_N_k;
    if (mode == ConclusionMode::HNT) {
        for (int j = 0; j <= k; ++j) {
            const auto a = r.nerve_betti[j], b = r.ambient_betti[j];
            r.table.push_back({j, a, b, a == b});
        }
    }
    return r;
}

enum class Strength { Weak, Strong };

/// Topological Helly check for a family of m >= d + 2 subcomplexes.
///
/// Weak: for every subfamily of size n, 1 <= n <= d + 1, the intersection
/// has vanishing reduced homology in degree d - n. Strong: it is
/// (d - n)-acyclic. The embedding in R^d is replaced by requiring the union
/// to have vanishing reduced homology in every degree >= d.
inline HellyReport helly_check(const Cover& cover, int d, const FieldSpec& field, Strength strength) {
    if (d < 1) throw InvalidInput("helly check needs d >= 1");
    const std::size_t m = cover.size();
    if (m < static_cast<std::size_t>(d) + 2)
        throw InvalidInput("the topological Helly statement needs m >= d + 2 members (got m = " +
                           std::to_string(m) + ", d = " + std::to_string(d) + ")");

    HellyReport r;
    r.d = d;
    r.m = m;
    r.field = field;
    r.hypothesis = {strength == Strength::Weak ? HypothesisKind::HellyWeak : HypothesisKind::HellyStrong,
                    d, field, true, {}};
    for (std::size_t n = 1; n <= static_cast<std::size_t>(d) + 1; ++n) {
        detail::for_each_combination(m, n, [&](const std::vector<std::size_t>& idx) {
            Simplex sigma(idx.begin(), idx.end());
            const auto profile = reduced_betti(cover.intersection_of(sigma), field);
            std::vector<std::string> labels;
            for (auto i : idx) labels.push_back(cover.member(i - 1).name);
            const int degree = d - static_cast<int>(n);
            detail::audit(r.hypothesis, profile, idx, std::move(labels),
                          strength == Strength::Weak ? std::vector<int>{degree}
                                                     : detail::degree_range(-1, degree));
        });
    }

    const auto ambient = reduced_betti(cover.ambient(), field);
    r.ambient_ok = true;
    for (int j = d; j <= ambient.stored_top(); ++j)
        if (ambient[j] != 0) r.ambient_ok = false;

    r.predicted_nonempty = r.hypothesis.passed && r.ambient_ok;
    r.actual_intersection_nonempty = !intersection(cover.complexes()).empty();
    return r;
}

/// Lexicographically first simplex with exactly one vertex of each color.
inline std::optional<Simplex> rainbow_bruteforce(const ColoredComplex& k) {
    const auto m = static_cast<std::size_t>(k.num_colors());
    for (const auto& s : k.complex().simplices_of_dimension(static_cast<int>(m) - 1)) {
        std::set<int> seen;
        for (Vertex v : s) seen.insert(k.color(v));
        if (seen.size() == m) return s;
    }
    return std::nullopt;
}

/// Rainbow-simplex check. For every nonempty set S of s colors, weak mode
/// requires reduced homology of K_S to vanish in degree s - 2, strong mode
/// requires K_S to be (s - 2)-acyclic.
inline RainbowReport rainbow_check(const ColoredComplex& k, const FieldSpec& field, Strength strength) {
    const auto m = static_cast<std::size_t>(k.num_colors());
    if (m > 20) throw InvalidInput("rainbow check supports at most 20 colors");
    RainbowReport r;
    r.m = static_cast<int>(m);
    r.field = field;
    r.hypothesis = {strength == Strength::Weak ? HypothesisKind::RainbowWeak : HypothesisKind::RainbowStrong,
                    static_cast<int>(m), field, true, {}};
    for (std::size_t s = 1; s <= m; ++s) {
        detail::for_each_combination(m, s, [&](const std::vector<std::size_t>& idx) {
            std::set<int> palette;
            std::vector<std::string> labels;
            for (auto c : idx) {
                palette.insert(static_cast<int>(c));
                labels.push_back("color " + std::to_string(c));
            }
            const auto profile = reduced_betti(k.restricted_to(palette), field);
            const int degree = static_cast<int>(s) - 2;
            detail::audit(r.hypothesis, profile, idx, std::move(labels),
                          strength == Strength::Weak ? std::vector<int>{degree}
                                                     : detail::degree_range(-1, degree));
        });
    }
    r.predicted_rainbow = r.hypothesis.passed;
    r.witness = rainbow_bruteforce(k);
    return r;
}

}  // namespace homnerve

#endif
