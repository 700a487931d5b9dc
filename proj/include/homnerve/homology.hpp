#ifndef HOMNERVE_HOMOLOGY_HPP
#define HOMNERVE_HOMOLOGY_HPP

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "chain.hpp"
#include "error.hpp"
#include "field.hpp"
#include "linalg.hpp"
#include "simplicial.hpp"

namespace homnerve {

/// Reduced Betti numbers over one field, degrees -1, 0, 1, ...
/// Degrees past the stored range are zero.
class BettiProfile {
public:
    BettiProfile() = default;
    /// values[0] is degree -1.
    BettiProfile(FieldSpec field, std::vector<std::size_t> values)
        : field_(field), values_(std::move(values)) {
        if (values_.empty()) values_.push_back(0);
        if (values_[0] > 1) throw InvariantViolation("reduced Betti number in degree -1 exceeds 1");
    }

    const FieldSpec& field() const { return field_; }

    std::size_t operator[](int degree) const {
        if (degree < -1) return 0;
        const auto i = static_cast<std::size_t>(degree + 1);
        return i < values_.size() ? values_[i] : 0;
    }

    /// Highest degree stored (the dimension of the underlying complex).
    int stored_top() const { return static_cast<int>(values_.size()) - 2; }

    /// Highest degree with a nonzero entry; -2 when all vanish.
    int top_nonzero() const {
        for (int d = stored_top(); d >= -1; --d)
            if ((*this)[d] != 0) return d;
        return -2;
    }

    /// True iff every reduced Betti number in degrees -1..rho vanishes.
    bool is_acyclic_through(int rho) const {
        for (int d = -1; d <= rho; ++d)
            if ((*this)[d] != 0) return false;
        return true;
    }

    bool is_empty_space() const { return (*this)[-1] == 1; }

    /// Same field and the same numbers in every degree.
    friend bool operator==(const BettiProfile& a, const BettiProfile& b) {
        if (!(a.field_ == b.field_)) return false;
        const int top = std::max(a.stored_top(), b.stored_top());
        for (int d = -1; d <= top; ++d)
            if (a[d] != b[d]) return false;
        return true;
    }

    /// "β̃₋₁=0 β̃₀=0 β̃₁=1", covering degrees -1 through stored_top().
    std::string to_string() const {
        std::string out;
        for (int d = -1; d <= stored_top(); ++d) {
            if (!out.empty()) out += ' ';
            out += "β̃" + subscript(d) + "=" + std::to_string((*this)[d]);
        }
        return out;
    }

private:
    static std::string subscript(int d) {
        static const char* digits[] = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};
        std::string out = d < 0 ? "₋" : "";
        const std::string text = std::to_string(d < 0 ? -d : d);
        for (char c : text) out += digits[c - '0'];
        return out;
    }

    FieldSpec field_;
    std::vector<std::size_t> values_{0};
};

/// beta_d = n_d - rank(boundary_d) - rank(boundary_{d+1}) for d >= -1, with
/// n_{-1} = 1 and boundary_{-1} = 0. ranks[d] is rank(boundary_d), d >= 0.
inline BettiProfile betti_from_ranks(const FieldSpec& field, const std::vector<std::size_t>& counts,
                                     const std::vector<std::size_t>& ranks) {
    if (counts.size() != ranks.size()) throw InvalidInput("counts and ranks disagree");
    const std::size_t top = counts.size();  // degrees 0..top-1
    std::vector<std::size_t> values(top + 1);
    for (std::size_t i = 0; i <= top; ++i) {
        const long long n = i == 0 ? 1 : static_cast<long long>(counts[i - 1]);
        const long long out = i == 0 ? 0 : static_cast<long long>(ranks[i - 1]);
        const long long in = i < top ? static_cast<long long>(ranks[i]) : 0;
        const long long b = n - out - in;
        if (b < 0) throw InvariantViolation("negative Betti number in degree " + std::to_string(i - 1));
        values[i] = static_cast<std::size_t>(b);
    }
    return BettiProfile(field, std::move(values));
}

template <class F>
BettiProfile betti(const AugmentedChainComplex<F>& c) {
    std::vector<std::size_t> counts, ranks;
    for (int d = 0; d <= c.top_degree(); ++d) {
        counts.push_back(c.generator_count(d));
        ranks.push_back(rank(c.boundary(d)));
    }
    return betti_from_ranks(c.field().spec(), counts, ranks);
}

/// Reduced Betti numbers of a simplicial complex over a runtime-chosen field.
inline BettiProfile reduced_betti(const SimplicialComplex& k, const FieldSpec& field) {
    return with_field(field, [&](const auto& f) { return betti(compile(k, f)); });
}

template <class F>
bool is_rho_acyclic(const AugmentedChainComplex<F>& c, int rho) {
    return betti(c).is_acyclic_through(rho);
}

/// Cycles whose classes form a basis of reduced homology in `degree`.
template <class F>
std::vector<std::vector<typename F::value_type>> homology_basis(const AugmentedChainComplex<F>& c,
                                                                int degree) {
    if (degree < 0) throw InvalidInput("homology_basis needs degree >= 0");
    const auto cycles = kernel_basis(c.boundary(degree));
    const auto boundaries = c.boundary(degree + 1).columns();
    return extend_to_complement(boundaries, cycles, c.field(), c.generator_count(degree));
}

/// True iff z is a boundary, i.e. its homology class vanishes. For degree
/// -1 this asks whether the complex is nonempty.
template <class F>
bool is_boundary(const AugmentedChainComplex<F>& c, int degree,
                 const std::vector<typename F::value_type>& z) {
    EchelonBasis<F> image(c.field(), c.generator_count(degree));
    for (const auto& col : c.boundary(degree + 1).columns()) image.insert(col);
    return image.contains(z);
}

template <class F>
struct KillResult {
    AugmentedChainComplex<F> complex;
    /// Cells in the order they were attached.
    std::vector<Cell<F>> log;
};

/// Attaches cells of degree <= k until reduced homology vanishes below
/// degree k, leaving degrees >= k untouched.
///
/// An empty input first receives a point. Then for d = 0..k-1 one
/// (d+1)-cell is attached along each cycle of a homology basis in degree d.
/// The attached boundaries are independent modulo the existing boundaries,
/// so rank(boundary_{d+1}) rises by exactly their number: beta_d drops to
/// zero and beta_{d+1} is unchanged.
template <class F>
KillResult<F> kill_homology_below(const AugmentedChainComplex<F>& c, int k) {
    if (k < 0) throw InvalidInput("kill_homology_below needs k >= 0");
    KillResult<F> result{c, {}};
    auto attach = [&](Cell<F> cell) {
        result.complex = attach_cell(result.complex, cell);
        result.log.push_back(std::move(cell));
    };
    if (rank(result.complex.boundary(0)) == 0) attach(Cell<F>{0, {}});
    for (int d = 0; d < k; ++d) {
        for (auto& z : homology_basis(result.complex, d)) attach(Cell<F>{d + 1, std::move(z)});
    }
    return result;
}

}  // namespace homnerve

#endif
