#ifndef HOMNERVE_CHAIN_HPP
#define HOMNERVE_CHAIN_HPP

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "field.hpp"
#include "linalg.hpp"
#include "simplicial.hpp"

namespace homnerve {

/// A cell to attach: a generator in `degree` whose boundary is the given
/// chain over the generators one degree down. A 0-cell carries no chain;
/// its augmentation value is 1.
template <class F>
struct Cell {
    int degree = 0;
    std::vector<typename F::value_type> boundary_chain;
};

/// Free chain complex over a field, augmented to degree -1.
///
/// boundary(d) maps degree d to degree d - 1; boundary(0) is the
/// augmentation, a 1 x n_0 row. The degree -1 group is always one
/// dimensional, so reduced homology falls out of the same rank formula in
/// every degree.
template <class F>
class AugmentedChainComplex {
public:
    using value_type = typename F::value_type;
    using Chain = std::vector<value_type>;

    explicit AugmentedChainComplex(F field) : field_(std::move(field)) {}

    const F& field() const { return field_; }

    /// Highest degree holding a generator; -1 when there is none.
    int top_degree() const { return static_cast<int>(names_.size()) - 1; }

    std::size_t generator_count(int degree) const {
        if (degree == -1) return 1;
        if (degree < -1 || degree > top_degree()) return 0;
        return names_[static_cast<std::size_t>(degree)].size();
    }

    const std::vector<std::string>& generator_names(int degree) const {
        static const std::vector<std::string> none;
        if (degree < 0 || degree > top_degree()) return none;
        return names_[static_cast<std::size_t>(degree)];
    }

    /// The map from degree d to degree d - 1. Outside the stored range this
    /// is the zero map with the right shape.
    Matrix<F> boundary(int degree) const {
        if (degree >= 0 && degree <= top_degree()) return boundaries_[static_cast<std::size_t>(degree)];
        return Matrix<F>(field_, generator_count(degree - 1), generator_count(degree));
    }

    const Matrix<F>& augmentation() const { return boundaries_.at(0); }

    /// Throws InvariantViolation unless every composite of consecutive maps
    /// vanishes and every matrix shape matches the generator counts.
    void check_invariants() const {
        for (int d = 0; d <= top_degree(); ++d) {
            const auto& m = boundaries_[static_cast<std::size_t>(d)];
            if (m.rows() != generator_count(d - 1) || m.cols() != generator_count(d))
                throw InvariantViolation("boundary matrix shape mismatch in degree " + std::to_string(d));
        }
        for (int d = 1; d <= top_degree(); ++d)
            if (!multiply(boundaries_[static_cast<std::size_t>(d - 1)],
                          boundaries_[static_cast<std::size_t>(d)]).is_zero())
                throw InvariantViolation("boundary of boundary is nonzero in degree " + std::to_string(d));
    }

    /// Appends a generator. Lower-level than attach_cell: no cycle check.
    void append_generator(int degree, std::string name, const Chain& boundary_column) {
        if (degree < 0) throw InvalidInput("generators live in degrees >= 0");
        while (top_degree() < degree) {
            const int d = top_degree() + 1;
            names_.emplace_back();
            boundaries_.emplace_back(field_, generator_count(d - 1), 0);
        }
        auto& m = boundaries_[static_cast<std::size_t>(degree)];
        m = m.with_column(boundary_column);
        names_[static_cast<std::size_t>(degree)].push_back(std::move(name));
        if (degree + 1 <= top_degree()) {
            auto& up = boundaries_[static_cast<std::size_t>(degree) + 1];
            up = up.with_zero_row();
        }
    }

    /// Builds from per-degree names and boundary matrices directly.
    static AugmentedChainComplex from_parts(F field, std::vector<std::vector<std::string>> names,
                                            std::vector<Matrix<F>> boundaries) {
        AugmentedChainComplex c(std::move(field));
        if (names.size() != boundaries.size()) throw InvalidInput("names and boundaries disagree");
        c.names_ = std::move(names);
        c.boundaries_ = std::move(boundaries);
        c.check_invariants();
        return c;
    }

private:
    F field_;
    std::vector<std::vector<std::string>> names_;
    std::vector<Matrix<F>> boundaries_;
};

/// Simplicial chain complex of k. Generators in degree d are the
/// d-simplices in canonical order, named like "[0,1,2]". The facet
/// obtained by dropping the i-th vertex of a sorted simplex has sign (-1)^i.
template <class F>
AugmentedChainComplex<F> compile(const SimplicialComplex& k, const F& field = F{}) {
    const int top = k.dimension();
    std::vector<std::vector<std::string>> names(static_cast<std::size_t>(top + 1));
    std::vector<std::map<Simplex, std::size_t>> index(static_cast<std::size_t>(top + 1));
    std::vector<std::vector<Simplex>> by_dim(static_cast<std::size_t>(top + 1));
    for (int d = 0; d <= top; ++d) {
        auto& list = by_dim[static_cast<std::size_t>(d)];
        list = k.simplices_of_dimension(d);
        for (std::size_t i = 0; i < list.size(); ++i) {
            index[static_cast<std::size_t>(d)].emplace(list[i], i);
            names[static_cast<std::size_t>(d)].push_back(to_string(list[i]));
        }
    }

    std::vector<Matrix<F>> boundaries;
    if (top >= 0) {
        Matrix<F> aug(field, 1, by_dim[0].size());
        for (std::size_t i = 0; i < by_dim[0].size(); ++i) aug(0, i) = field.one();
        boundaries.push_back(std::move(aug));
    }
    for (int d = 1; d <= top; ++d) {
        const auto& cols = by_dim[static_cast<std::size_t>(d)];
        const auto& rows = index[static_cast<std::size_t>(d - 1)];
        Matrix<F> m(field, rows.size(), cols.size());
        for (std::size_t c = 0; c < cols.size(); ++c) {
            for (std::size_t drop = 0; drop < cols[c].size(); ++drop) {
                Simplex face = cols[c];
                face.erase(face.begin() + static_cast<std::ptrdiff_t>(drop));
                const auto value = field.from_int(drop % 2 == 0 ? 1 : -1);
                m(rows.at(face), c) = value;
            }
        }
        boundaries.push_back(std::move(m));
    }
    return AugmentedChainComplex<F>::from_parts(field, std::move(names), std::move(boundaries));
}

/// True iff z is a cycle in the given degree (for degree 0: augmentation
/// of z vanishes).
template <class F>
bool is_cycle(const AugmentedChainComplex<F>& c, int degree,
              const std::vector<typename F::value_type>& z) {
    if (degree < 0) return true;
    if (z.size() != c.generator_count(degree)) return false;
    const auto image = matvec(c.boundary(degree), std::span<const typename F::value_type>(z));
    for (const auto& x : image)
        if (!c.field().is_zero(x)) return false;
    return true;
}

/// Attaches one cell: a new generator in cell.degree with boundary
/// cell.boundary_chain. Throws InvalidInput when the chain is not a cycle.
template <class F>
AugmentedChainComplex<F> attach_cell(const AugmentedChainComplex<F>& c, const Cell<F>& cell) {
    if (cell.degree < 0) throw InvalidInput("cell degree must be non-negative");
    const int below = cell.degree - 1;
    std::vector<typename F::value_type> column;
    if (cell.degree == 0) {
        if (cell.boundary_chain.size() > 1 ||
            (cell.boundary_chain.size() == 1 && cell.boundary_chain[0] != c.field().one()))
            throw InvalidInput("a 0-cell has augmentation 1 and no other boundary");
        column = {c.field().one()};
    } else {
        if (cell.boundary_chain.size() != c.generator_count(below))
            throw InvalidInput("attaching chain has length " + std::to_string(cell.boundary_chain.size()) +
                               ", expected " + std::to_string(c.generator_count(below)));
        if (!is_cycle(c, below, cell.boundary_chain))
            throw InvalidInput("attaching chain is not a cycle");
        column = cell.boundary_chain;
    }
    AugmentedChainComplex<F> out = c;
    const auto serial = c.generator_count(cell.degree);
    out.append_generator(cell.degree, "cell" + std::to_string(cell.degree) + "." + std::to_string(serial),
                         column);
    out.check_invariants();
    return out;
}

}  // namespace homnerve

#endif
