#pragma once

#include "logsark/dual_graph.hpp"
#include "logsark/hj.hpp"
#include "logsark/rational.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace logsark {

/// Bookkeeping needed to recover Picard ranks: the rank and vertex count of
/// the origin's minimal resolution, and how many curves have since been
/// contracted to smooth points.
struct PairHistory {
    int base_rank = 1;
    int origin_vertex_count = 0;
    int contracted_count = 0;
    bool operator==(const PairHistory&) const = default;
};

/// An admissible compactification, stored as the minimal resolution of its
/// singular points. Every vertex of `resolution` is either a strict boundary
/// curve or belongs to exactly one singularity chain.
struct SurfacePair {
    DualGraph resolution;
    std::set<CurveId> strict_boundary;
    /// Each chain is listed from the curve meeting the strict boundary.
    std::vector<std::vector<CurveId>> chains;
    PairHistory history;

    /// The strict boundary curve chain `i` is attached to.
    CurveId chain_host(std::size_t i) const;
    std::vector<std::size_t> chains_on(const CurveId& curve) const;
    HJChain chain_weights(std::size_t i) const;
    HJType chain_type(std::size_t i) const { return chain_to_type(chain_weights(i)); }
    std::size_t chain_curve_count() const;

    bool operator==(const SurfacePair&) const = default;
};

/// Build a pair from an explicit resolution graph. Only structural sanity is
/// enforced here (ids exist, partition, each chain meets one boundary curve); use
/// admissibility_check for the dlt and geometry conditions.
SurfacePair make_pair(DualGraph resolution,
                      std::set<CurveId> strict_boundary,
                      std::vector<std::vector<CurveId>> chains,
                      int base_rank);

/// Removed (-1)-curves that can be contracted right now, in the order the
/// collapse processes them: exceptional curves by descending birth index,
/// then the remaining ones by id.
std::vector<CurveId> eligible_contractions(const DualGraph& g, const std::set<CurveId>& keep);

/// Interpret a graph with no eligible contraction left: the removed curves
/// must form chains of curves with self-intersection <= -2, each attached at
/// one end to a kept curve. `contracted` is the number of curves already
/// contracted to smooth points on the way from the source graph.
SurfacePair residue_pair(const DualGraph& g, const std::set<CurveId>& keep,
                         const PairHistory& source, int contracted);

/// Contract everything outside `keep` that can be contracted to smooth
/// points, then read the remaining curves as singularity chains.
SurfacePair collapse(const DualGraph& g, const std::set<CurveId>& keep, const PairHistory& source);

/// Self-intersection of a strict boundary curve on the singular surface.
Rational pair_self_intersection(const SurfacePair& p, const CurveId& curve);

/// (K + B) . C on the singular surface.
Rational kplusb_degree(const SurfacePair& p, const CurveId& curve);

struct ExtremalVerdict {
    Rational kplusb_value;
    Rational pair_self_int;
    int neighbor_count = 0;
    int singularity_count = 0;
    bool is_contractible = false;
};

ExtremalVerdict is_extremal_contractible(const SurfacePair& p, const CurveId& curve);

struct Report {
    std::vector<std::string> violations;
    std::vector<std::string> warnings;
    bool ok() const { return violations.empty(); }
};

Report admissibility_check(const SurfacePair& p);

/// 1 for a smooth pair, otherwise the weight a_1 of its unique chain.
int pair_index(const SurfacePair& p);

int picard_rank(const SurfacePair& p, int blowup_count);

/// Isomorphism of pairs respecting self-intersections, adjacency and chain
/// structure; maps every vertex of `from` to a vertex of `to`.
std::optional<std::map<CurveId, CurveId>> find_isomorphism(const SurfacePair& from, const SurfacePair& to);

/// Id-free text such as "-1{[3,2]} - -1{[2]}" used to compare pairs up to
/// renaming; curves listed in `order`, or sorted by id when empty.
std::string pair_shape(const SurfacePair& p, const std::vector<CurveId>& order = {});

/// "smooth", "A_{3,2}" or "A_{3,2} + A_{2,1}".
std::string singularity_summary(const SurfacePair& p);

} // namespace logsark
