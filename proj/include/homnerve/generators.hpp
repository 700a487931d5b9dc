#ifndef HOMNERVE_GENERATORS_HPP
#define HOMNERVE_GENERATORS_HPP

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "error.hpp"
#include "field.hpp"
#include "homology.hpp"
#include "io.hpp"
#include "linalg.hpp"
#include "simplicial.hpp"
#include "theorems.hpp"

namespace homnerve {

// Every random choice goes through std::mt19937_64 with explicit reductions
// (no std::*_distribution, whose output is implementation defined):
//   uniform index in [0, n):   draw % n
//   Bernoulli(num / den):      draw % den < num
// Trial t of a fuzz run is seeded with seed ^ (t * 0x9E3779B97F4A7C15).
using Prng = std::mt19937_64;
inline constexpr const char* kPrngName = "mt19937_64";

inline std::uint64_t uniform_index(Prng& rng, std::uint64_t n) { return rng() % n; }
inline bool bernoulli(Prng& rng, std::uint64_t num, std::uint64_t den) { return rng() % den < num; }

inline std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) {
    return seed ^ (trial * 0x9E3779B97F4A7C15ULL);
}

struct GenParams {
    std::size_t vertex_budget = 6;
    std::size_t max_dim = 2;
    std::uint64_t density_num = 1;  ///< density = num / den
    std::uint64_t density_den = 2;
    std::size_t member_count = 3;
    std::uint64_t seed = 0;

    void validate() const {
        if (vertex_budget < 1) throw InvalidInput("vertex budget must be at least 1");
        if (vertex_budget > 16) throw InvalidInput("vertex budget above 16 is not supported");
        if (max_dim + 1 > vertex_budget) throw InvalidInput("max_dim must be at most vertex_budget - 1");
        if (density_den == 0 || density_num > density_den) throw InvalidInput("density must lie in [0, 1]");
        if (member_count < 1) throw InvalidInput("member count must be at least 1");
    }
};

/// Vertices 0..budget-1, then every candidate simplex of dimension
/// 1..max_dim in canonical order is added with probability `density`,
/// provided all of its facets are already present.
inline SimplicialComplex random_complex(const GenParams& p) {
    p.validate();
    Prng rng(p.seed);
    SimplexSet simplices;
    for (Vertex v = 0; v < p.vertex_budget; ++v) simplices.insert({v});
    for (std::size_t size = 2; size <= p.max_dim + 1; ++size) {
        detail::for_each_combination(p.vertex_budget, size, [&](const std::vector<std::size_t>& idx) {
            Simplex s;
            for (auto i : idx) s.push_back(static_cast<Vertex>(i - 1));
            // One draw per candidate, whether or not its facets exist.
            const bool keep = bernoulli(rng, p.density_num, p.density_den);
            if (!keep) return;
            for (std::size_t drop = 0; drop < s.size(); ++drop) {
                Simplex face = s;
                face.erase(face.begin() + static_cast<std::ptrdiff_t>(drop));
                if (!simplices.contains(face)) return;
            }
            simplices.insert(std::move(s));
        });
    }
    return SimplicialComplex::from_closed_set(std::move(simplices));
}

/// Each facet of x goes to one uniformly chosen member and, independently,
/// to each other member with probability 1/4. Members are named A1..Am.
inline Cover random_cover(const SimplicialComplex& x, std::size_t m, std::uint64_t seed) {
    if (x.empty()) throw InvalidInput("random_cover needs a nonempty complex");
    if (m < 1) throw InvalidInput("random_cover needs m >= 1");
    Prng rng(seed);
    std::vector<std::vector<std::vector<Vertex>>> assigned(m);
    for (const auto& f : x.facets()) {
        const auto primary = uniform_index(rng, m);
        for (std::size_t i = 0; i < m; ++i)
            if (i == primary || bernoulli(rng, 1, 4)) assigned[i].push_back(f);
    }
    std::vector<Cover::Member> members;
    for (std::size_t i = 0; i < m; ++i)
        members.push_back({"A" + std::to_string(i + 1), SimplicialComplex::from_facets(assigned[i])});
    return Cover(x, std::move(members));
}

/// Star cover of the barycentric subdivision of base: member i is the closed
/// star of the i-th vertex of base. A set of stars meets iff the vertices
/// span a simplex tau of base, and then the intersection is the complex of
/// chains of simplices containing tau, a cone with apex tau. The nerve is
/// therefore base itself (vertex i+1 <-> i-th vertex).
inline Cover good_cover(const SimplicialComplex& base) {
    if (base.empty()) throw InvalidInput("good_cover needs a nonempty complex");
    const auto sd = barycentric_subdivision(base);
    std::vector<Cover::Member> members;
    Vertex index = 0;
    for (std::size_t i = 0; i < sd.labels.size(); ++i, ++index) {
        if (sd.labels[i].size() != 1) break;  // vertices come first in canonical order
        members.push_back({"star" + std::to_string(sd.labels[i][0]), closed_star(sd.complex, index)});
    }
    return Cover(sd.complex, std::move(members));
}

/// Subcomplex of the path 0-1-...-(L-1) spanned by vertices a..b.
inline SimplicialComplex path_interval(Vertex a, Vertex b) {
    if (a > b) std::swap(a, b);
    if (a == b) return SimplicialComplex::from_facets({{a}});
    std::vector<std::vector<Vertex>> edges;
    for (Vertex v = a; v < b; ++v) edges.push_back({v, v + 1});
    return SimplicialComplex::from_facets(edges);
}

/// d = 1 Helly instance: m in {3, 4, 5} members on a path with 4..9
/// vertices, each a random interval, joined with probability 1/4 by a second
/// interval (possibly disconnecting it). The ambient is the union.
inline Cover random_interval_family(Prng& rng) {
    const auto length = 4 + uniform_index(rng, 6);
    const auto m = 3 + uniform_index(rng, 3);
    std::vector<SimplicialComplex> members;
    for (std::size_t i = 0; i < m; ++i) {
        auto draw = [&] {
            const auto a = static_cast<Vertex>(uniform_index(rng, length));
            const auto b = static_cast<Vertex>(uniform_index(rng, length));
            return path_interval(a, b);
        };
        auto member = draw();
        if (bernoulli(rng, 1, 4)) member = union_of({member, draw()});
        members.push_back(std::move(member));
    }
    return Cover::of_members(std::move(members));
}

/// Uniform coloring of the vertices of k by 1..m; classes may be empty.
inline ColoredComplex random_coloring(const SimplicialComplex& k, int m, Prng& rng) {
    std::map<Vertex, int> colors;
    for (Vertex v : k.vertices()) colors[v] = 1 + static_cast<int>(uniform_index(rng, static_cast<std::uint64_t>(m)));
    return ColoredComplex(k, std::move(colors), m, true);
}

enum class FuzzKind { T1, HNT, Helly, Rainbow };

inline std::string to_string(FuzzKind kind) {
    switch (kind) {
        case FuzzKind::T1: return "t1";
        case FuzzKind::HNT: return "hnt";
        case FuzzKind::Helly: return "helly";
        case FuzzKind::Rainbow: return "rainbow";
    }
    return "?";
}

struct FuzzViolation {
    std::size_t trial = 0;
    Json instance;  ///< cover or colored-complex file contents
    Json report;
};

struct FuzzReport {
    FuzzKind kind = FuzzKind::T1;
    FieldSpec field;
    GenParams params;
    std::size_t trials = 0;
    std::size_t hypothesis_passed = 0;
    std::vector<FuzzViolation> conclusion_violations;  ///< sorted by trial
    std::chrono::milliseconds elapsed{0};
};

/// Generates `trials` seeded instances of the given kind. Instances that
/// pass the kind's hypothesis have the matching conclusion checked; a failed
/// conclusion is recorded with the full instance for replay.
///
///   t1 / hnt  random complex (params), random cover with member_count
///             members, k drawn from {0, 1, 2}
///   helly     random_interval_family, d = 1, weak hypothesis
///   rainbow   random complex, uniform coloring by member_count colors
inline FuzzReport fuzz_theorem(FuzzKind kind, std::size_t trials, const GenParams& params,
                               const FieldSpec& field) {
    if (trials == 0) throw InvalidInput("fuzz needs at least one trial");
    params.validate();
    const auto start = std::chrono::steady_clock::now();
    FuzzReport report{kind, field, params, trials, 0, {}, {}};

    for (std::size_t t = 0; t < trials; ++t) {
        Prng rng(trial_seed(params.seed, t));
        GenParams p = params;
        p.seed = rng();
        switch (kind) {
            case FuzzKind::T1:
            case FuzzKind::HNT: {
                const auto x = random_complex(p);
                const auto cover = random_cover(x, params.member_count, rng());
                const int k = static_cast<int>(uniform_index(rng, 3));
                const bool t1 = kind == FuzzKind::T1;
                const auto hyp = t1 ? check_t1_hypothesis(cover, k, field) : check_hnt_hypothesis(cover, k, field);
                if (!hyp.passed) break;
                ++report.hypothesis_passed;
                const auto concl =
                    verify_conclusions(cover, k, field, t1 ? ConclusionMode::T1 : ConclusionMode::HNT);
                if (!concl.holds()) {
                    Json r;
                    r["hypothesis"] = to_json(hyp);
                    r["conclusions"] = to_json(concl);
                    report.conclusion_violations.push_back({t, cover_to_json(cover), std::move(r)});
                }
                break;
            }
            case FuzzKind::Helly: {
                const auto cover = random_interval_family(rng);
                const auto r = helly_check(cover, 1, field, Strength::Weak);
                if (!r.predicted_nonempty) break;
                ++report.hypothesis_passed;
                if (!r.actual_intersection_nonempty)
                    report.conclusion_violations.push_back({t, cover_to_json(cover), to_json(r)});
                break;
            }
            case FuzzKind::Rainbow: {
                const auto k = random_complex(p);
                const int m = static_cast<int>(std::min(params.member_count, params.vertex_budget));
                const auto colored = random_coloring(k, m, rng);
                const auto r = rainbow_check(colored, field, Strength::Weak);
                if (!r.hypothesis.passed) break;
                ++report.hypothesis_passed;
                if (!r.witness)
                    report.conclusion_violations.push_back({t, colored_to_json(colored), to_json(r)});
                break;
            }
        }
    }
    report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    return report;
}

inline Json to_json(const FuzzReport& r) {
    Json j;
    j["kind"] = to_string(r.kind);
    j["field"] = r.field.name();
    j["prng"] = kPrngName;
    j["seed"] = r.params.seed;
    j["vertex_budget"] = r.params.vertex_budget;
    j["max_dim"] = r.params.max_dim;
    j["density"] = std::to_string(r.params.density_num) + "/" + std::to_string(r.params.density_den);
    j["member_count"] = r.params.member_count;
    j["trials"] = r.trials;
    j["hypothesis_passed"] = r.hypothesis_passed;
    Json v = Json::array();
    for (const auto& x : r.conclusion_violations)
        v.push_back({{"trial", x.trial}, {"instance", x.instance}, {"report", x.report}});
    j["conclusion_violations"] = std::move(v);
    j["elapsed_ms"] = r.elapsed.count();
    return j;
}

/// Enumerates every simplicial complex on the vertex set {0..n-1} (all
/// vertices present) with dimension at most max_dim. A complex is a bit
/// mask over the candidate simplices, which are listed in canonical order.
class ComplexEnumerator {
public:
    ComplexEnumerator(std::size_t n, std::size_t max_dim) : n_(n) {
        if (n == 0) throw InvalidInput("enumeration needs at least one vertex");
        if (n > 8) throw InvalidInput("enumeration supports at most 8 vertices");
        for (std::size_t size = 1; size <= std::min(max_dim + 1, n); ++size)
            detail::for_each_combination(n, size, [&](const std::vector<std::size_t>& idx) {
                Simplex s;
                for (auto i : idx) s.push_back(static_cast<Vertex>(i - 1));
                candidates_.push_back(std::move(s));
            });
        if (candidates_.size() > 64) throw InvalidInput("too many candidate simplices to enumerate");
        std::map<Simplex, std::size_t> id;
        for (std::size_t i = 0; i < candidates_.size(); ++i) id.emplace(candidates_[i], i);
        facets_.resize(candidates_.size());
        for (std::size_t i = 0; i < candidates_.size(); ++i) {
            const auto& s = candidates_[i];
            if (s.size() == 1) {
                vertex_mask_ |= bit(i);
                continue;
            }
            for (std::size_t drop = 0; drop < s.size(); ++drop) {
                Simplex face = s;
                face.erase(face.begin() + static_cast<std::ptrdiff_t>(drop));
                facets_[i].push_back(id.at(face));
            }
        }
    }

    std::size_t vertex_count() const { return n_; }
    const std::vector<Simplex>& candidates() const { return candidates_; }

    /// Candidates whose vertices all lie in the given vertex subset (bit v
    /// of vertex_subset set means vertex v is included).
    std::uint64_t within(std::uint32_t vertex_subset) const {
        std::uint64_t out = 0;
        for (std::size_t i = 0; i < candidates_.size(); ++i)
            if (std::all_of(candidates_[i].begin(), candidates_[i].end(),
                            [&](Vertex v) { return vertex_subset & (1u << v); }))
                out |= bit(i);
        return out;
    }

    template <class Fn>
    void for_each(Fn&& fn) const {
        walk(vertex_mask_, first_non_vertex(), fn);
    }

    SimplicialComplex to_complex(std::uint64_t mask) const {
        SimplexSet s;
        for (std::size_t i = 0; i < candidates_.size(); ++i)
            if (mask & bit(i)) s.insert(candidates_[i]);
        return SimplicialComplex::from_closed_set(std::move(s));
    }

    /// Reduced Betti numbers of the complex given by mask, built straight
    /// from the candidate tables.
    template <class F>
    BettiProfile betti(std::uint64_t mask, const F& field = F{}) const {
        std::vector<std::vector<std::size_t>> by_dim;
        std::vector<std::size_t> local(candidates_.size(), 0);
        for (std::size_t i = 0; i < candidates_.size(); ++i) {
            if (!(mask & bit(i))) continue;
            const auto d = candidates_[i].size() - 1;
            if (by_dim.size() <= d) by_dim.resize(d + 1);
            local[i] = by_dim[d].size();
            by_dim[d].push_back(i);
        }
        std::vector<std::size_t> counts, ranks;
        for (std::size_t d = 0; d < by_dim.size(); ++d) {
            counts.push_back(by_dim[d].size());
            if (d == 0) {
                ranks.push_back(by_dim[0].empty() ? 0 : 1);
                continue;
            }
            Matrix<F> m(field, by_dim[d - 1].size(), by_dim[d].size());
            for (std::size_t c = 0; c < by_dim[d].size(); ++c) {
                const auto& faces = facets_[by_dim[d][c]];
                for (std::size_t drop = 0; drop < faces.size(); ++drop)
                    m(local[faces[drop]], c) = field.from_int(drop % 2 == 0 ? 1 : -1);
            }
            ranks.push_back(rank(std::move(m)));
        }
        return betti_from_ranks(field.spec(), counts, ranks);
    }

private:
    static std::uint64_t bit(std::size_t i) { return std::uint64_t{1} << i; }

    std::size_t first_non_vertex() const {
        std::size_t i = 0;
        while (i < candidates_.size() && candidates_[i].size() == 1) ++i;
        return i;
    }

    template <class Fn>
    void walk(std::uint64_t mask, std::size_t pos, Fn& fn) const {
        if (pos == candidates_.size()) {
            fn(mask);
            return;
        }
        walk(mask, pos + 1, fn);
        for (auto f : facets_[pos])
            if (!(mask & bit(f))) return;
        walk(mask | bit(pos), pos + 1, fn);
    }

    std::size_t n_;
    std::vector<Simplex> candidates_;
    std::vector<std::vector<std::size_t>> facets_;
    std::uint64_t vertex_mask_ = 0;
};

struct SweepReport {
    FieldSpec field;
    std::size_t max_vertices = 0, max_colors = 0, max_dim = 0;
    std::size_t complexes = 0;            ///< uncolored complexes visited
    std::size_t instances = 0;            ///< (complex, coloring) pairs
    std::size_t with_rainbow = 0;
    std::size_t weak_passed = 0;
    std::size_t strong_passed = 0;
    std::size_t weak_not_strong = 0;
    std::vector<Json> violations;         ///< weak passes, no rainbow simplex
    std::vector<Json> weak_not_strong_examples;  ///< first few
    std::chrono::milliseconds elapsed{0};
};

/// Exhaustive rainbow sweep over colored complexes with at most
/// max_vertices vertices, max_colors colors and dimension at most max_dim.
///
/// Colored complexes are taken up to relabeling of vertices and colors:
/// every complex on {0..n-1} is paired with each block coloring whose class
/// sizes form a partition of n into m <= max_colors nonincreasing positive
/// parts (vertices 0..s1-1 get color 1, the next s2 color 2, ...). Every
/// coloring with nonempty classes is isomorphic to one of these. Colorings
/// with an empty class fail the hypothesis at s = 1 and have no rainbow
/// simplex, so they are not enumerated.
inline SweepReport rainbow_sweep(std::size_t max_vertices, std::size_t max_colors, std::size_t max_dim,
                                 const FieldSpec& field) {
    const auto start = std::chrono::steady_clock::now();
    SweepReport report;
    report.field = field;
    report.max_vertices = max_vertices;
    report.max_colors = max_colors;
    report.max_dim = max_dim;

    with_field(field, [&](const auto& f) {
        for (std::size_t n = 1; n <= max_vertices; ++n) {
            const ComplexEnumerator en(n, max_dim);

            struct Palette {
                std::size_t size;           // s = |S|
                std::uint64_t within;       // candidates inside V_S
                bool full;
            };
            struct Coloring {
                std::vector<int> color;     // by vertex
                std::size_t m;
                std::vector<Palette> palettes;
                std::uint64_t rainbow;      // candidates that are rainbow simplices
            };
            std::vector<Coloring> colorings;
            std::function<void(std::vector<std::size_t>&, std::size_t, std::size_t)> parts =
                [&](std::vector<std::size_t>& acc, std::size_t left, std::size_t cap) {
                    if (left == 0) {
                        if (acc.size() > max_colors) return;
                        Coloring c;
                        c.m = acc.size();
                        for (std::size_t i = 0; i < acc.size(); ++i)
                            c.color.insert(c.color.end(), acc[i], static_cast<int>(i + 1));
                        for (std::uint32_t s = 1; s < (1u << c.m); ++s) {
                            std::uint32_t verts = 0;
                            for (std::size_t v = 0; v < n; ++v)
                                if (s & (1u << (c.color[v] - 1))) verts |= 1u << v;
                            c.palettes.push_back({static_cast<std::size_t>(std::popcount(s)), en.within(verts),
                                                  s == (1u << c.m) - 1});
                        }
                        c.rainbow = 0;
                        for (std::size_t i = 0; i < en.candidates().size(); ++i) {
                            const auto& sx = en.candidates()[i];
                            std::uint32_t seen = 0;
                            for (Vertex v : sx) seen |= 1u << (c.color[v] - 1);
                            if (sx.size() == c.m && std::popcount(seen) == static_cast<int>(c.m))
                                c.rainbow |= std::uint64_t{1} << i;
                        }
                        colorings.push_back(std::move(c));
                        return;
                    }
                    if (acc.size() == max_colors) return;
                    for (std::size_t a = std::min(left, cap); a >= 1; --a) {
                        acc.push_back(a);
                        parts(acc, left - a, a);
                        acc.pop_back();
                    }
                };
            std::vector<std::size_t> acc;
            parts(acc, n, n);

            std::unordered_map<std::uint64_t, BettiProfile> cache;
            auto profile_of = [&](std::uint64_t mask) -> const BettiProfile& {
                auto it = cache.find(mask);
                if (it == cache.end()) it = cache.emplace(mask, en.template betti<std::decay_t<decltype(f)>>(mask, f)).first;
                return it->second;
            };

            en.for_each([&](std::uint64_t mask) {
                ++report.complexes;
                const auto full = en.template betti<std::decay_t<decltype(f)>>(mask, f);
                for (const auto& c : colorings) {
                    ++report.instances;
                    bool weak = true, strong = true;
                    for (const auto& pal : c.palettes) {
                        const BettiProfile& b = pal.full ? full : profile_of(mask & pal.within);
                        const int top = static_cast<int>(pal.size) - 2;
                        if (b[top] != 0) weak = false;
                        if (!b.is_acyclic_through(top)) strong = false;
                        if (!weak && !strong) break;
                    }
                    const bool has_rainbow = (mask & c.rainbow) != 0;
                    report.with_rainbow += has_rainbow;
                    report.weak_passed += weak;
                    report.strong_passed += strong;
                    if (weak && !strong) {
                        ++report.weak_not_strong;
                        if (report.weak_not_strong_examples.size() < 5) {
                            std::map<Vertex, int> colors;
                            for (std::size_t v = 0; v < n; ++v) colors[static_cast<Vertex>(v)] = c.color[v];
                            report.weak_not_strong_examples.push_back(colored_to_json(
                                ColoredComplex(en.to_complex(mask), colors, static_cast<int>(c.m))));
                        }
                    }
                    if (weak && !has_rainbow) {
                        std::map<Vertex, int> colors;
                        for (std::size_t v = 0; v < n; ++v) colors[static_cast<Vertex>(v)] = c.color[v];
                        report.violations.push_back(colored_to_json(
                            ColoredComplex(en.to_complex(mask), colors, static_cast<int>(c.m))));
                    }
                }
            });
        }
        return 0;
    });
    report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    return report;
}

inline Json to_json(const SweepReport& r) {
    Json j;
    j["field"] = r.field.name();
    j["max_vertices"] = r.max_vertices;
    j["max_colors"] = r.max_colors;
    j["max_dim"] = r.max_dim;
    j["complexes"] = r.complexes;
    j["instances"] = r.instances;
    j["with_rainbow"] = r.with_rainbow;
    j["weak_passed"] = r.weak_passed;
    j["strong_passed"] = r.strong_passed;
    j["weak_not_strong"] = r.weak_not_strong;
    j["violations"] = r.violations;
    j["weak_not_strong_examples"] = r.weak_not_strong_examples;
    j["elapsed_ms"] = r.elapsed.count();
    return j;
}

}  // namespace homnerve

#endif
