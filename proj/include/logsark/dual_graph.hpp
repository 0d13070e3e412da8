#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace logsark {

using CurveId = std::string;

// Provenance of a curve. `chain` curves come from the minimal resolution of
// a singular point of the starting surface; `exceptional` ones from a script.
enum class CurveKind { boundary, chain, exceptional };

struct InteriorPoint {
    CurveId curve;
    std::string label;
    bool operator==(const InteriorPoint&) const = default;
};

struct NodePoint {
    CurveId a;
    CurveId b;
    bool operator==(const NodePoint&) const = default;
};

using Center = std::variant<InteriorPoint, NodePoint>;

std::string describe(const Center& center);

/// A smooth rational curve in a boundary divisor.
struct CurveVertex {
    CurveId id;
    int self_int = 0;
    CurveKind kind = CurveKind::boundary;
    int birth_index = 0;
    /// Set for curves born from an interior point: the (curve, label) blown up.
    std::optional<InteriorPoint> born_at;
    /// Interior points of this curve already used as blow-up centers.
    std::set<std::string> used_labels;

    bool operator==(const CurveVertex&) const = default;
};

/// Weighted dual graph of a simple normal crossing configuration of rational
/// curves. Values are immutable; every operation returns a new graph.
class DualGraph {
public:
    DualGraph() = default;

    DualGraph with_curve(CurveVertex vertex) const;
    DualGraph with_curve(const CurveId& id, int self_int, CurveKind kind = CurveKind::boundary) const;
    DualGraph with_edge(const CurveId& a, const CurveId& b) const;
    DualGraph with_self_int(const CurveId& id, int self_int) const;

    bool contains(const CurveId& id) const { return vertices_.count(id) != 0; }
    const CurveVertex& curve(const CurveId& id) const;
    const std::set<CurveId>& neighbors(const CurveId& id) const;
    std::size_t degree(const CurveId& id) const { return neighbors(id).size(); }
    bool adjacent(const CurveId& a, const CurveId& b) const;

    const std::map<CurveId, CurveVertex>& vertices() const noexcept { return vertices_; }
    std::vector<std::pair<CurveId, CurveId>> edges() const;
    std::vector<CurveId> ids() const;
    std::size_t size() const noexcept { return vertices_.size(); }
    std::size_t edge_count() const;
    int max_birth_index() const;
    long self_int_sum() const;

    /// Induced subgraph on `keep`.
    DualGraph restricted_to(const std::set<CurveId>& keep) const;

    bool operator==(const DualGraph&) const = default;

private:
    friend struct GraphEditor;

    std::map<CurveId, CurveVertex> vertices_;
    std::map<CurveId, std::set<CurveId>> adjacency_;
};

struct BlowUp {
    DualGraph graph;
    CurveId new_id;
};

/// Blow up a point of the configuration. The new curve gets self-intersection
/// -1 and the next birth index; `name` overrides the default id "E<birth>".
BlowUp blow_up(const DualGraph& g, const Center& center, const std::optional<CurveId>& name = std::nullopt);

/// Castelnuovo contraction of a (-1)-curve meeting at most two others.
DualGraph contract(const DualGraph& g, const CurveId& id);

/// The unique simple path from `from` to `to`, inclusive.
std::vector<CurveId> tree_path(const DualGraph& g, const CurveId& from, const CurveId& to);

struct SncReport {
    std::vector<std::string> violations;
    bool valid() const { return violations.empty(); }
};

/// Connectedness and acyclicity of a boundary graph.
SncReport validate_snc_tree(const DualGraph& g);

bool is_tree(const DualGraph& g);

/// Connected components of the subgraph induced by `subset`, each sorted.
std::vector<std::vector<CurveId>> components(const DualGraph& g, const std::set<CurveId>& subset);

} // namespace logsark
