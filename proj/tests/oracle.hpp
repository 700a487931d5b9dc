// Test-only reference computations. Nothing here calls into the library's
// linear algebra or chain-complex code; only the SimplicialComplex carrier
// is shared.
#ifndef HOMNERVE_TESTS_ORACLE_HPP
#define HOMNERVE_TESTS_ORACLE_HPP

#include <cstdint>
#include <map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "homnerve/simplicial.hpp"

namespace oracle {

using boost::multiprecision::cpp_rational;

/// Integer matrix as a list of columns.
using IntColumns = std::vector<std::vector<long long>>;

/// Rank with pivots chosen from the last column backwards and, within a
/// column, the bottom-most unused row.
template <class T, class IsZero, class Div, class MulSub>
std::size_t reversed_rank(std::vector<std::vector<T>> rows, IsZero is_zero, Div div, MulSub mul_sub) {
    if (rows.empty()) return 0;
    const std::size_t n_rows = rows.size(), n_cols = rows[0].size();
    std::vector<bool> used(n_rows, false);
    std::size_t r = 0;
    for (std::size_t c = n_cols; c-- > 0;) {
        std::size_t pivot = n_rows;
        for (std::size_t i = n_rows; i-- > 0;)
            if (!used[i] && !is_zero(rows[i][c])) {
                pivot = i;
                break;
            }
        if (pivot == n_rows) continue;
        used[pivot] = true;
        ++r;
        for (std::size_t i = 0; i < n_rows; ++i) {
            if (used[i] || is_zero(rows[i][c])) continue;
            const T factor = div(rows[i][c], rows[pivot][c]);
            for (std::size_t j = 0; j <= c; ++j) rows[i][j] = mul_sub(rows[i][j], factor, rows[pivot][j]);
        }
    }
    return r;
}

inline long long mod(long long a, long long p) {
    a %= p;
    return a < 0 ? a + p : a;
}

inline long long pow_mod(long long b, long long e, long long p) {
    long long r = 1;
    b = mod(b, p);
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

/// Rank over GF(p) of a row-major integer matrix.
inline std::size_t rank_mod_p(std::vector<std::vector<long long>> rows, long long p) {
    for (auto& row : rows)
        for (auto& x : row) x = mod(x, p);
    return reversed_rank(
        std::move(rows), [](long long x) { return x == 0; },
        [p](long long a, long long b) { return a * pow_mod(b, p - 2, p) % p; },
        [p](long long a, long long f, long long b) { return mod(a - f * b, p); });
}

inline std::size_t rank_rational(const std::vector<std::vector<long long>>& int_rows) {
    std::vector<std::vector<cpp_rational>> rows;
    for (const auto& r : int_rows) rows.emplace_back(r.begin(), r.end());
    return reversed_rank(
        std::move(rows), [](const cpp_rational& x) { return x == 0; },
        [](const cpp_rational& a, const cpp_rational& b) { return cpp_rational(a / b); },
        [](const cpp_rational& a, const cpp_rational& f, const cpp_rational& b) { return cpp_rational(a - f * b); });
}

/// Boundary matrices (row-major, integer) of k: result[d] maps d-chains to
/// (d-1)-chains, result[0] is the all-ones augmentation row.
inline std::vector<std::vector<std::vector<long long>>> boundary_matrices(const homnerve::SimplicialComplex& k) {
    std::vector<std::vector<homnerve::Simplex>> by_dim;
    for (const auto& s : k.simplices()) {
        if (by_dim.size() < s.size()) by_dim.resize(s.size());
        by_dim[s.size() - 1].push_back(s);
    }
    std::vector<std::vector<std::vector<long long>>> out;
    for (std::size_t d = 0; d < by_dim.size(); ++d) {
        if (d == 0) {
            out.push_back({std::vector<long long>(by_dim[0].size(), 1)});
            continue;
        }
        std::map<homnerve::Simplex, std::size_t> row_of;
        for (std::size_t i = 0; i < by_dim[d - 1].size(); ++i) row_of[by_dim[d - 1][i]] = i;
        std::vector<std::vector<long long>> m(by_dim[d - 1].size(), std::vector<long long>(by_dim[d].size(), 0));
        for (std::size_t c = 0; c < by_dim[d].size(); ++c) {
            const auto& s = by_dim[d][c];
            for (std::size_t i = 0; i < s.size(); ++i) {
                homnerve::Simplex face;
                for (std::size_t j = 0; j < s.size(); ++j)
                    if (j != i) face.push_back(s[j]);
                m[row_of.at(face)][c] = (i % 2 == 0) ? 1 : -1;
            }
        }
        out.push_back(std::move(m));
    }
    return out;
}

/// Reduced Betti numbers, index 0 = degree -1. p = 0 means the rationals.
inline std::vector<std::size_t> reduced_betti(const homnerve::SimplicialComplex& k, long long p) {
    const auto mats = boundary_matrices(k);
    auto rk = [&](const std::vector<std::vector<long long>>& m) {
        if (m.empty() || m[0].empty()) return std::size_t{0};
        return p == 0 ? rank_rational(m) : rank_mod_p(m, p);
    };
    std::vector<std::size_t> ranks;
    for (const auto& m : mats) ranks.push_back(rk(m));
    std::vector<std::size_t> out;
    out.push_back(1 - (ranks.empty() ? 0 : ranks[0]));
    for (std::size_t d = 0; d < mats.size(); ++d) {
        const std::size_t n = mats[d].empty() ? 0 : mats[d][0].size();
        const std::size_t next = d + 1 < ranks.size() ? ranks[d + 1] : 0;
        out.push_back(n - ranks[d] - next);
    }
    return out;
}

}  // namespace oracle

#endif
