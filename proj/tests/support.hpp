#pragma once

#include "logsark/discrepancy.hpp"
#include "logsark/dual_graph.hpp"
#include "logsark/error.hpp"
#include "logsark/factor.hpp"
#include "logsark/pair.hpp"
#include "logsark/problem.hpp"
#include "oracle.hpp"

#include <functional>
#include <random>

namespace support {

using namespace logsark;

inline Rational q(long num, long den = 1)
{
    return make_rational(num, den);
}

inline ScriptStep interior(const CurveId& curve, const std::string& label, int h = 0,
                           std::optional<CurveId> name = std::nullopt)
{
    return ScriptStep{InteriorPoint{curve, label}, h, std::move(name)};
}

inline ScriptStep node(const CurveId& a, const CurveId& b, int h = 0, std::optional<CurveId> name = std::nullopt)
{
    return ScriptStep{NodePoint{a, b}, h, std::move(name)};
}

inline MarkedResolution fixture(const std::string& name)
{
    return build_concatenation(builtin_fixture(name));
}

inline SurfacePair smooth_curve(const CurveId& name, int self_int, int base_rank = 1)
{
    return make_pair(DualGraph{}.with_curve(name, self_int), {name}, {}, base_rank);
}

/// A boundary curve `name` carrying the given chains, named "<name>_s<k>_<j>".
inline SurfacePair curve_with_chains(const CurveId& name, int self_int, const std::vector<HJChain>& chains,
                                     int base_rank = 1)
{
    Problem p;
    p.base_rank = base_rank;
    BoundarySpec b{name, self_int, {}};
    for (const auto& c : chains) {
        b.sings.push_back(SingularitySpec{c, std::nullopt, {}});
    }
    p.boundary.push_back(b);
    return build_pair(p);
}

inline oracle::Config to_config(const DualGraph& g)
{
    oracle::Config c;
    for (const auto& [id, v] : g.vertices()) {
        c.add(id, v.self_int);
    }
    for (const auto& [a, b] : g.edges()) {
        c.connect(c.index(a), c.index(b));
    }
    return c;
}

inline ErrorKind error_kind_of(const std::function<void()>& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::InternalInvariant;
}

/// Random tree on `n` vertices "V0".."V{n-1}" with self-intersections in [lo, hi].
inline DualGraph random_tree(std::mt19937& rng, int n, int lo, int hi)
{
    std::uniform_int_distribution<int> self(lo, hi);
    DualGraph g;
    for (int i = 0; i < n; ++i) {
        g = g.with_curve("V" + std::to_string(i), self(rng));
        if (i > 0) {
            std::uniform_int_distribution<int> parent(0, i - 1);
            g = g.with_edge("V" + std::to_string(i), "V" + std::to_string(parent(rng)));
        }
    }
    return g;
}

/// A random valid center on `g`.
inline Center random_center(std::mt19937& rng, const DualGraph& g, int& label_counter)
{
    const auto edges = g.edges();
    const auto ids = g.ids();
    std::uniform_int_distribution<int> coin(0, 1);
    if (!edges.empty() && coin(rng)) {
        std::uniform_int_distribution<std::size_t> pick(0, edges.size() - 1);
        const auto& e = edges[pick(rng)];
        return NodePoint{e.first, e.second};
    }
    std::uniform_int_distribution<std::size_t> pick(0, ids.size() - 1);
    return InteriorPoint{ids[pick(rng)], "x" + std::to_string(label_counter++)};
}

/// Random script of `steps` valid centers, h_mult in {0, 1}.
inline std::vector<ScriptStep> random_script(std::mt19937& rng, const DualGraph& start, int steps)
{
    std::vector<ScriptStep> script;
    DualGraph g = start;
    int labels = 0;
    std::uniform_int_distribution<int> h(0, 1);
    for (int k = 0; k < steps; ++k) {
        ScriptStep step{random_center(rng, g, labels), h(rng), std::nullopt};
        g = blow_up(g, step.center).graph;
        script.push_back(step);
    }
    return script;
}

inline PairHistory history_of(const MarkedResolution& r)
{
    PairHistory h = r.origin.history;
    h.contracted_count = 0;
    return h;
}

struct RandomPair {
    SurfacePair pair;
    int n = 0;
    int r = 0;
    int bar_square = 0;
};

/// Curve "C" with n boundary neighbours "N<i>" and r chains (length <= 6,
/// weights <= 7) attached to it.
inline RandomPair random_pair(std::mt19937& rng)
{
    std::uniform_int_distribution<int> neighbors(0, 3);
    std::uniform_int_distribution<int> sings(0, 3);
    std::uniform_int_distribution<int> length(1, 6);
    std::uniform_int_distribution<int> weight(2, 7);
    std::uniform_int_distribution<int> self(-3, 3);
    RandomPair out;
    out.n = neighbors(rng);
    out.r = sings(rng);
    out.bar_square = self(rng);
    Problem p;
    p.base_rank = 1;
    BoundarySpec c{"C", out.bar_square, {}};
    for (int i = 0; i < out.r; ++i) {
        HJChain chain(length(rng));
        for (auto& w : chain) {
            w = weight(rng);
        }
        c.sings.push_back(SingularitySpec{chain, std::nullopt, {}});
    }
    p.boundary.push_back(c);
    for (int i = 0; i < out.n; ++i) {
        const auto name = "N" + std::to_string(i);
        p.boundary.push_back(BoundarySpec{name, self(rng), {}});
        p.edges.emplace_back("C", name);
    }
    out.pair = build_pair(p);
    return out;
}

inline std::string full_text(const SurfacePair& p)
{
    std::string out;
    for (const auto& [id, v] : p.resolution.vertices()) {
        out += id + ":" + std::to_string(v.self_int) + (p.strict_boundary.count(id) ? "*" : "") + " ";
    }
    for (const auto& [a, b] : p.resolution.edges()) {
        out += a + "-" + b + " ";
    }
    for (const auto& chain : p.chains) {
        out += "[";
        for (const auto& id : chain) {
            out += id + ",";
        }
        out += "]";
    }
    return out + "|" + std::to_string(p.history.contracted_count);
}

/// Walks every order of eligible contractions for one keep-set.
struct ContractionExplorer {
    std::set<CurveId> keep;
    PairHistory history;
    std::map<std::set<CurveId>, DualGraph> seen;
    std::vector<std::string> outcomes;
    int inconsistent_states = 0;

    void explore(const DualGraph& g, const std::set<CurveId>& contracted)
    {
        const auto it = seen.find(contracted);
        if (it != seen.end()) {
            inconsistent_states += it->second == g ? 0 : 1;
            return;
        }
        seen.emplace(contracted, g);
        const auto eligible = eligible_contractions(g, keep);
        if (eligible.empty()) {
            try {
                outcomes.push_back(full_text(residue_pair(g, keep, history, static_cast<int>(contracted.size()))));
            } catch (const Error& e) {
                outcomes.push_back(std::string(error_name(e.kind())));
            }
            return;
        }
        for (const auto& id : eligible) {
            auto next = contracted;
            next.insert(id);
            explore(contract(g, id), next);
        }
    }
};

/// Number of keep-sets of X where some contraction order disagrees with collapse.
inline int confluence_failures(const MarkedResolution& r)
{
    const auto ids = r.graph.ids();
    const std::size_t n = ids.size();
    int failures = 0;
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
        ContractionExplorer ex;
        for (std::size_t i = 0; i < n; ++i) {
            if (mask & (std::size_t{1} << i)) {
                ex.keep.insert(ids[i]);
            }
        }
        ex.history = history_of(r);
        ex.explore(r.graph, {});
        std::string expected;
        try {
            expected = full_text(collapse(r.graph, ex.keep, ex.history));
        } catch (const Error& e) {
            expected = std::string(error_name(e.kind()));
        }
        bool ok = ex.inconsistent_states == 0;
        for (const auto& o : ex.outcomes) {
            ok = ok && o == expected;
        }
        failures += ok ? 0 : 1;
    }
    return failures;
}

/// Id-free description of every S_i and Z_i.
inline std::vector<std::string> sequence_shapes(const LinkSequence& seq)
{
    std::vector<std::string> out;
    for (std::size_t i = 0; i < seq.pairs.size(); ++i) {
        out.push_back("S " + pair_shape(seq.pairs[i]) + " rank " + std::to_string(seq.picard_ranks[i]));
    }
    for (const auto& link : seq.links) {
        out.push_back("Z " + pair_shape(link.z, {link.contracted_right, link.contracted_left}));
    }
    return out;
}

/// Shapes of the sequences glued end to end (shared surfaces listed once).
inline std::vector<std::string> glued_shapes(const std::vector<LinkSequence>& parts)
{
    std::vector<std::string> surfaces;
    std::vector<std::string> links;
    for (std::size_t k = 0; k < parts.size(); ++k) {
        const auto shapes = sequence_shapes(parts[k]);
        const std::size_t pair_count = parts[k].pairs.size();
        for (std::size_t i = (k == 0 ? 0 : 1); i < pair_count; ++i) {
            surfaces.push_back(shapes[i]);
        }
        links.insert(links.end(), shapes.begin() + static_cast<std::ptrdiff_t>(pair_count), shapes.end());
    }
    surfaces.insert(surfaces.end(), links.begin(), links.end());
    return surfaces;
}

} // namespace support
