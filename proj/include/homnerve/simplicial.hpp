#ifndef HOMNERVE_SIMPLICIAL_HPP
#define HOMNERVE_SIMPLICIAL_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"

namespace homnerve {

using Vertex = std::uint32_t;
/// A simplex is its vertex set, stored sorted ascending without repeats.
using Simplex = std::vector<Vertex>;

/// Canonical order: by cardinality, then lexicographic.
struct SimplexOrder {
    bool operator()(const Simplex& a, const Simplex& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

using SimplexSet = std::set<Simplex, SimplexOrder>;

inline std::string to_string(const Simplex& s) {
    std::string out = "[";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(s[i]);
    }
    return out + "]";
}

namespace detail {

inline void add_closure(const Simplex& facet, SimplexSet& into) {
    if (into.contains(facet)) return;
    const std::size_t n = facet.size();
    if (n > 24) throw InvalidInput("simplex too large to close (more than 24 vertices)");
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
        Simplex face;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::uint32_t{1} << i)) face.push_back(facet[i]);
        into.insert(std::move(face));
    }
}

}  // namespace detail

/// Finite abstract simplicial complex. Values are immutable once built; all
/// constructors produce face-closed simplex sets.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    /// Smallest face-closed complex containing every facet.
    static SimplicialComplex from_facets(const std::vector<std::vector<Vertex>>& facets) {
        SimplexSet simplices;
        for (auto facet : facets) {
            if (facet.empty()) throw InvalidInput("facets must be nonempty");
            std::sort(facet.begin(), facet.end());
            if (std::adjacent_find(facet.begin(), facet.end()) != facet.end())
                throw InvalidInput("duplicate vertex in facet " + to_string(facet));
            detail::add_closure(facet, simplices);
        }
        return SimplicialComplex(std::move(simplices));
    }

    /// Adopts a simplex set that is already face-closed; checks closure.
    static SimplicialComplex from_closed_set(SimplexSet simplices) {
        SimplicialComplex k(std::move(simplices));
        k.validate();
        return k;
    }

    bool empty() const { return simplices_.empty(); }
    std::size_t size() const { return simplices_.size(); }
    /// Dimension of the largest simplex; -1 for the empty complex.
    int dimension() const {
        return simplices_.empty() ? -1 : static_cast<int>(simplices_.rbegin()->size()) - 1;
    }

    const SimplexSet& simplices() const { return simplices_; }
    const std::set<Vertex>& vertices() const { return vertices_; }
    bool contains(const Simplex& s) const { return simplices_.contains(s); }
    bool has_vertex(Vertex v) const { return vertices_.contains(v); }

    std::vector<Simplex> simplices_of_dimension(int d) const {
        std::vector<Simplex> out;
        if (d < 0) return out;
        auto lo = simplices_.lower_bound(Simplex(static_cast<std::size_t>(d) + 1, 0));
        for (auto it = lo; it != simplices_.end() && it->size() == static_cast<std::size_t>(d) + 1; ++it)
            out.push_back(*it);
        return out;
    }

    std::size_t count_of_dimension(int d) const { return simplices_of_dimension(d).size(); }

    /// Maximal simplices, canonical order.
    std::vector<Simplex> facets() const {
        std::vector<Simplex> out;
        for (const auto& s : simplices_) {
            bool maximal = true;
            for (auto it = simplices_.upper_bound(s); it != simplices_.end(); ++it) {
                if (it->size() == s.size()) continue;
                if (std::includes(it->begin(), it->end(), s.begin(), s.end())) {
                    maximal = false;
                    break;
                }
            }
            if (maximal) out.push_back(s);
        }
        return out;
    }

    /// Throws InvariantViolation if the simplex set is not face-closed or the
    /// vertex set disagrees with the singletons.
    void validate() const {
        std::set<Vertex> seen;
        for (const auto& s : simplices_) {
            if (s.empty()) throw InvariantViolation("empty simplex stored");
            if (!std::is_sorted(s.begin(), s.end()) ||
                std::adjacent_find(s.begin(), s.end()) != s.end())
                throw InvariantViolation("unsorted simplex " + to_string(s));
            for (std::size_t drop = 0; s.size() > 1 && drop < s.size(); ++drop) {
                Simplex face = s;
                face.erase(face.begin() + static_cast<std::ptrdiff_t>(drop));
                if (!simplices_.contains(face))
                    throw InvariantViolation("face " + to_string(face) + " of " + to_string(s) +
                                             " missing");
            }
            if (s.size() == 1) seen.insert(s[0]);
        }
        if (seen != vertices_) throw InvariantViolation("vertex set disagrees with singletons");
    }

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
        return a.simplices_ == b.simplices_;
    }

private:
    explicit SimplicialComplex(SimplexSet simplices) : simplices_(std::move(simplices)) {
        for (const auto& s : simplices_)
            if (s.size() == 1) vertices_.insert(s[0]);
    }

    std::set<Vertex> vertices_;
    SimplexSet simplices_;
};

/// All simplices of dimension at most k.
inline SimplicialComplex skeleton(const SimplicialComplex& k, int max_dim) {
    if (max_dim < 0) throw InvalidInput("skeleton dimension must be non-negative");
    SimplexSet out;
    for (const auto& s : k.simplices())
        if (static_cast<int>(s.size()) <= max_dim + 1) out.insert(s);
    return SimplicialComplex::from_closed_set(std::move(out));
}

/// Simplex-set intersection of subcomplexes of one ambient complex.
inline SimplicialComplex intersection(std::span<const SimplicialComplex> members) {
    if (members.empty()) throw InvalidInput("intersection of an empty family");
    SimplexSet out = members.front().simplices();
    for (const auto& m : members.subspan(1)) {
        std::erase_if(out, [&](const Simplex& s) { return !m.contains(s); });
        if (out.empty()) break;
    }
    return SimplicialComplex::from_closed_set(std::move(out));
}

inline SimplicialComplex intersection(std::initializer_list<SimplicialComplex> members) {
    return intersection(std::span<const SimplicialComplex>(members.begin(), members.size()));
}

inline SimplicialComplex union_of(std::span<const SimplicialComplex> members) {
    SimplexSet out;
    for (const auto& m : members) out.insert(m.simplices().begin(), m.simplices().end());
    return SimplicialComplex::from_closed_set(std::move(out));
}

inline SimplicialComplex union_of(std::initializer_list<SimplicialComplex> members) {
    return union_of(std::span<const SimplicialComplex>(members.begin(), members.size()));
}

/// All simplices of k whose vertices lie in w. Throws if w names a vertex
/// that k does not have.
inline SimplicialComplex induced_subcomplex(const SimplicialComplex& k, const std::set<Vertex>& w) {
    for (Vertex v : w)
        if (!k.has_vertex(v)) throw InvalidInput("unknown vertex " + std::to_string(v));
    SimplexSet out;
    for (const auto& s : k.simplices())
        if (std::all_of(s.begin(), s.end(), [&](Vertex v) { return w.contains(v); })) out.insert(s);
    return SimplicialComplex::from_closed_set(std::move(out));
}

/// Closed star of a vertex: every simplex containing v, with all faces.
inline SimplicialComplex closed_star(const SimplicialComplex& k, Vertex v) {
    SimplexSet out;
    for (const auto& s : k.simplices())
        if (std::binary_search(s.begin(), s.end(), v)) detail::add_closure(s, out);
    return SimplicialComplex::from_closed_set(std::move(out));
}

/// Barycentric subdivision. Vertex i of the result is the barycenter of
/// labels[i], the i-th simplex of k in canonical order; simplices are the
/// chains of the face poset.
struct Subdivision {
    SimplicialComplex complex;
    std::vector<Simplex> labels;
};

inline Subdivision barycentric_subdivision(const SimplicialComplex& k) {
    std::vector<Simplex> labels(k.simplices().begin(), k.simplices().end());
    std::map<Simplex, Vertex, SimplexOrder> id;
    for (std::size_t i = 0; i < labels.size(); ++i) id.emplace(labels[i], static_cast<Vertex>(i));

    // Maximal chains run from a vertex up to a facet, so enumerating the
    // chains ending at each facet and closing them is enough.
    std::vector<std::vector<Vertex>> facets;
    for (const auto& top : k.facets()) {
        // Depth-first over facet-removal sequences: top = s_n > s_{n-1} > ... > s_0.
        std::vector<std::pair<Simplex, std::vector<Vertex>>> stack{{top, {id.at(top)}}};
        while (!stack.empty()) {
            auto [s, chain] = std::move(stack.back());
            stack.pop_back();
            if (s.size() == 1) {
                facets.push_back(std::move(chain));
                continue;
            }
            for (std::size_t drop = 0; drop < s.size(); ++drop) {
                Simplex face = s;
                face.erase(face.begin() + static_cast<std::ptrdiff_t>(drop));
                auto next = chain;
                next.push_back(id.at(face));
                stack.emplace_back(std::move(face), std::move(next));
            }
        }
    }
    return {SimplicialComplex::from_facets(facets), std::move(labels)};
}

/// A complex together with named subcomplexes A_1..A_m whose union is it.
class Cover {
public:
    struct Member {
        std::string name;
        SimplicialComplex complex;
    };

    Cover(SimplicialComplex ambient, std::vector<Member> members)
        : ambient_(std::move(ambient)), members_(std::move(members)) {
        if (members_.empty()) throw InvalidInput("a cover needs at least one member");
        std::set<std::string> names;
        for (const auto& m : members_) {
            if (!names.insert(m.name).second) throw InvalidInput("duplicate member name '" + m.name + "'");
            for (const auto& s : m.complex.simplices())
                if (!ambient_.contains(s))
                    throw InvalidInput("member '" + m.name + "' has simplex " + to_string(s) +
                                       " outside the ambient complex");
        }
        if (!(union_of(complexes()) == ambient_))
            throw InvalidInput("members do not cover the ambient complex");
    }

    /// Cover of the union of the given members, named A1..Am.
    static Cover of_members(std::vector<SimplicialComplex> members) {
        std::vector<Member> named;
        for (std::size_t i = 0; i < members.size(); ++i)
            named.push_back({"A" + std::to_string(i + 1), std::move(members[i])});
        std::vector<SimplicialComplex> plain;
        for (const auto& m : named) plain.push_back(m.complex);
        return Cover(union_of(plain), std::move(named));
    }

    const SimplicialComplex& ambient() const { return ambient_; }
    std::size_t size() const { return members_.size(); }
    const std::vector<Member>& members() const { return members_; }
    const Member& member(std::size_t i) const { return members_.at(i); }

    std::vector<SimplicialComplex> complexes() const {
        std::vector<SimplicialComplex> out;
        out.reserve(members_.size());
        for (const auto& m : members_) out.push_back(m.complex);
        return out;
    }

    /// Intersection of the members with the given 1-based indices.
    SimplicialComplex intersection_of(const Simplex& indices) const {
        std::vector<SimplicialComplex> picked;
        for (Vertex i : indices) picked.push_back(members_.at(i - 1).complex);
        return intersection(picked);
    }

private:
    SimplicialComplex ambient_;
    std::vector<Member> members_;
};

/// Nerve on vertex ids 1..m: sigma is a simplex iff the members indexed by
/// sigma share a simplex (equivalently a vertex, since intersections of
/// subcomplexes are subcomplexes).
inline SimplicialComplex nerve(const Cover& cover) {
    std::vector<std::vector<Vertex>> facets;
    for (Vertex v : cover.ambient().vertices()) {
        std::vector<Vertex> holders;
        for (std::size_t i = 0; i < cover.size(); ++i)
            if (cover.member(i).complex.has_vertex(v)) holders.push_back(static_cast<Vertex>(i + 1));
        if (!holders.empty()) facets.push_back(std::move(holders));
    }
    auto n = SimplicialComplex::from_facets(facets);
    n.validate();
    return n;
}

/// Complex with a vertex coloring by 1..m. Empty color classes are only
/// accepted when allow_empty_classes is set.
class ColoredComplex {
public:
    ColoredComplex(SimplicialComplex complex, std::map<Vertex, int> colors, int num_colors,
                   bool allow_empty_classes = false)
        : complex_(std::move(complex)), colors_(std::move(colors)), num_colors_(num_colors) {
        if (num_colors_ < 1) throw InvalidInput("at least one color is required");
        for (Vertex v : complex_.vertices())
            if (!colors_.contains(v)) throw InvalidInput("vertex " + std::to_string(v) + " has no color");
        std::vector<bool> used(static_cast<std::size_t>(num_colors_) + 1, false);
        for (const auto& [v, c] : colors_) {
            if (!complex_.has_vertex(v))
                throw InvalidInput("color given for unknown vertex " + std::to_string(v));
            if (c < 1 || c > num_colors_)
                throw InvalidInput("color " + std::to_string(c) + " outside 1.." + std::to_string(num_colors_));
            used[static_cast<std::size_t>(c)] = true;
        }
        for (int c = 1; c <= num_colors_; ++c)
            if (!used[static_cast<std::size_t>(c)] && !allow_empty_classes)
                throw InvalidInput("color class " + std::to_string(c) + " is empty");
    }

    /// Colors default to 1..max(color).
    ColoredComplex(SimplicialComplex complex, std::map<Vertex, int> colors)
        : ColoredComplex(complex, colors, max_color(colors)) {}

    const SimplicialComplex& complex() const { return complex_; }
    const std::map<Vertex, int>& colors() const { return colors_; }
    int num_colors() const { return num_colors_; }
    int color(Vertex v) const { return colors_.at(v); }

    /// Vertices whose color lies in the given set.
    std::set<Vertex> vertices_colored(const std::set<int>& palette) const {
        std::set<Vertex> out;
        for (const auto& [v, c] : colors_)
            if (palette.contains(c)) out.insert(v);
        return out;
    }

    /// K_S: the full subcomplex on the vertices colored within palette.
    SimplicialComplex restricted_to(const std::set<int>& palette) const {
        return induced_subcomplex(complex_, vertices_colored(palette));
    }

private:
    static int max_color(const std::map<Vertex, int>& colors) {
        int m = 0;
        for (const auto& [v, c] : colors) m = std::max(m, c);
        return std::max(m, 1);
    }

    SimplicialComplex complex_;
    std::map<Vertex, int> colors_;
    int num_colors_;
};

}  // namespace homnerve

#endif
