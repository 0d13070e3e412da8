#include "logsark/dual_graph.hpp"

#include "logsark/error.hpp"

#include <algorithm>
#include <deque>

namespace logsark {

struct GraphEditor {
    static CurveVertex& vertex(DualGraph& g, const CurveId& id)
    {
        auto it = g.vertices_.find(id);
        if (it == g.vertices_.end()) {
            throw Error(ErrorKind::UnknownCurve, "no curve named '" + id + "'");
        }
        return it->second;
    }

    static void add_edge(DualGraph& g, const CurveId& a, const CurveId& b)
    {
        g.adjacency_[a].insert(b);
        g.adjacency_[b].insert(a);
    }

    static void remove_edge(DualGraph& g, const CurveId& a, const CurveId& b)
    {
        g.adjacency_[a].erase(b);
        g.adjacency_[b].erase(a);
    }

    static void remove_vertex(DualGraph& g, const CurveId& id)
    {
        for (const auto& n : g.adjacency_[id]) {
            g.adjacency_[n].erase(id);
        }
        g.adjacency_.erase(id);
        g.vertices_.erase(id);
    }
};

std::string describe(const Center& center)
{
    if (const auto* p = std::get_if<InteriorPoint>(&center)) {
        return "interior(" + p->curve + ", " + p->label + ")";
    }
    const auto& n = std::get<NodePoint>(center);
    return "node(" + n.a + ", " + n.b + ")";
}

DualGraph DualGraph::with_curve(CurveVertex vertex) const
{
    if (contains(vertex.id)) {
        throw Error(ErrorKind::DuplicateCurve, "curve '" + vertex.id + "' already present");
    }
    DualGraph g = *this;
    g.adjacency_[vertex.id];
    CurveId id = vertex.id;
    g.vertices_.emplace(std::move(id), std::move(vertex));
    return g;
}

DualGraph DualGraph::with_curve(const CurveId& id, int self_int, CurveKind kind) const
{
    CurveVertex v;
    v.id = id;
    v.self_int = self_int;
    v.kind = kind;
    return with_curve(std::move(v));
}

DualGraph DualGraph::with_edge(const CurveId& a, const CurveId& b) const
{
    curve(a);
    curve(b);
    if (a == b) {
        throw Error(ErrorKind::InvalidPair, "a curve cannot meet itself in a normal crossing boundary");
    }
    DualGraph g = *this;
    GraphEditor::add_edge(g, a, b);
    return g;
}

DualGraph DualGraph::with_self_int(const CurveId& id, int self_int) const
{
    DualGraph g = *this;
    GraphEditor::vertex(g, id).self_int = self_int;
    return g;
}

const CurveVertex& DualGraph::curve(const CurveId& id) const
{
    auto it = vertices_.find(id);
    if (it == vertices_.end()) {
        throw Error(ErrorKind::UnknownCurve, "no curve named '" + id + "'");
    }
    return it->second;
}

const std::set<CurveId>& DualGraph::neighbors(const CurveId& id) const
{
    auto it = adjacency_.find(id);
    if (it == adjacency_.end()) {
        throw Error(ErrorKind::UnknownCurve, "no curve named '" + id + "'");
    }
    return it->second;
}

bool DualGraph::adjacent(const CurveId& a, const CurveId& b) const
{
    return neighbors(a).count(b) != 0;
}

std::vector<std::pair<CurveId, CurveId>> DualGraph::edges() const
{
    std::vector<std::pair<CurveId, CurveId>> out;
    for (const auto& [id, nbrs] : adjacency_) {
        for (const auto& n : nbrs) {
            if (id < n) {
                out.emplace_back(id, n);
            }
        }
    }
    return out;
}

std::vector<CurveId> DualGraph::ids() const
{
    std::vector<CurveId> out;
    out.reserve(vertices_.size());
    for (const auto& [id, v] : vertices_) {
        out.push_back(id);
    }
    return out;
}

std::size_t DualGraph::edge_count() const
{
    std::size_t twice = 0;
    for (const auto& [id, nbrs] : adjacency_) {
        twice += nbrs.size();
    }
    return twice / 2;
}

int DualGraph::max_birth_index() const
{
    int best = 0;
    for (const auto& [id, v] : vertices_) {
        best = std::max(best, v.birth_index);
    }
    return best;
}

long DualGraph::self_int_sum() const
{
    long sum = 0;
    for (const auto& [id, v] : vertices_) {
        sum += v.self_int;
    }
    return sum;
}

DualGraph DualGraph::restricted_to(const std::set<CurveId>& keep) const
{
    DualGraph g;
    for (const auto& id : keep) {
        g.vertices_.emplace(id, curve(id));
        g.adjacency_[id];
    }
    for (const auto& id : keep) {
        for (const auto& n : neighbors(id)) {
            if (keep.count(n)) {
                g.adjacency_[id].insert(n);
            }
        }
    }
    return g;
}

BlowUp blow_up(const DualGraph& g, const Center& center, const std::optional<CurveId>& name)
{
    const int birth = g.max_birth_index() + 1;
    CurveId new_id = name.value_or("E" + std::to_string(birth));
    if (g.contains(new_id)) {
        throw Error(ErrorKind::DuplicateCurve, "curve '" + new_id + "' already present");
    }

    DualGraph out = g;
    CurveVertex fresh;
    fresh.id = new_id;
    fresh.self_int = -1;
    fresh.kind = CurveKind::exceptional;
    fresh.birth_index = birth;

    if (const auto* p = std::get_if<InteriorPoint>(&center)) {
        auto& host = GraphEditor::vertex(out, p->curve);
        if (host.used_labels.count(p->label)) {
            throw Error(ErrorKind::ReusedPointLabel,
                        "point '" + p->label + "' on '" + p->curve + "' was already blown up");
        }
        host.used_labels.insert(p->label);
        host.self_int -= 1;
        fresh.born_at = *p;
        out = out.with_curve(std::move(fresh));
        GraphEditor::add_edge(out, p->curve, new_id);
    } else {
        const auto& n = std::get<NodePoint>(center);
        GraphEditor::vertex(out, n.a);
        GraphEditor::vertex(out, n.b);
        if (n.a == n.b || !out.adjacent(n.a, n.b)) {
            throw Error(ErrorKind::MissingNode, "'" + n.a + "' and '" + n.b + "' do not meet");
        }
        GraphEditor::vertex(out, n.a).self_int -= 1;
        GraphEditor::vertex(out, n.b).self_int -= 1;
        GraphEditor::remove_edge(out, n.a, n.b);
        out = out.with_curve(std::move(fresh));
        GraphEditor::add_edge(out, n.a, new_id);
        GraphEditor::add_edge(out, n.b, new_id);
    }
    return {std::move(out), std::move(new_id)};
}

DualGraph contract(const DualGraph& g, const CurveId& id)
{
    const auto& v = g.curve(id);
    if (v.self_int != -1) {
        throw Error(ErrorKind::NotMinusOne,
                    "'" + id + "' has self-intersection " + std::to_string(v.self_int));
    }
    const std::set<CurveId> nbrs = g.neighbors(id);
    if (nbrs.size() > 2) {
        throw Error(ErrorKind::TooManyNeighbors,
                    "'" + id + "' meets " + std::to_string(nbrs.size()) + " curves");
    }
    if (nbrs.size() == 2 && g.adjacent(*nbrs.begin(), *nbrs.rbegin())) {
        throw Error(ErrorKind::TooManyNeighbors,
                    "contracting '" + id + "' would make its neighbours meet twice");
    }

    DualGraph out = g;
    const auto born_at = v.born_at;
    GraphEditor::remove_vertex(out, id);
    for (const auto& n : nbrs) {
        auto& w = GraphEditor::vertex(out, n);
        w.self_int += 1;
        if (born_at && born_at->curve == n) {
            w.used_labels.erase(born_at->label);
        }
    }
    if (nbrs.size() == 2) {
        GraphEditor::add_edge(out, *nbrs.begin(), *nbrs.rbegin());
    }
    return out;
}

std::vector<std::vector<CurveId>> components(const DualGraph& g, const std::set<CurveId>& subset)
{
    std::vector<std::vector<CurveId>> out;
    std::set<CurveId> seen;
    for (const auto& start : subset) {
        if (seen.count(start)) {
            continue;
        }
        std::vector<CurveId> comp;
        std::deque<CurveId> queue{start};
        seen.insert(start);
        while (!queue.empty()) {
            CurveId cur = queue.front();
            queue.pop_front();
            comp.push_back(cur);
            for (const auto& n : g.neighbors(cur)) {
                if (subset.count(n) && !seen.count(n)) {
                    seen.insert(n);
                    queue.push_back(n);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

bool is_tree(const DualGraph& g)
{
    if (g.size() == 0) {
        return false;
    }
    const auto ids = g.ids();
    return g.edge_count() + 1 == g.size()
           && components(g, std::set<CurveId>(ids.begin(), ids.end())).size() == 1;
}

namespace {

// One cycle of the graph as a vertex list, if any.
std::optional<std::vector<CurveId>> find_cycle(const DualGraph& g)
{
    std::map<CurveId, CurveId> parent;
    std::set<CurveId> visited;
    for (const auto& root : g.ids()) {
        if (visited.count(root)) {
            continue;
        }
        std::vector<CurveId> stack{root};
        parent[root] = "";
        visited.insert(root);
        while (!stack.empty()) {
            CurveId cur = stack.back();
            stack.pop_back();
            for (const auto& n : g.neighbors(cur)) {
                if (n == parent[cur]) {
                    continue;
                }
                if (visited.count(n)) {
                    // Walk both ends up to their common ancestor.
                    std::vector<CurveId> left{cur};
                    std::vector<CurveId> right{n};
                    std::set<CurveId> left_set{cur};
                    for (CurveId p = parent[cur]; !p.empty(); p = parent[p]) {
                        left.push_back(p);
                        left_set.insert(p);
                    }
                    for (CurveId p = parent[n]; !left_set.count(right.back()) && !p.empty(); p = parent[p]) {
                        right.push_back(p);
                    }
                    const CurveId meet = right.back();
                    std::vector<CurveId> cycle;
                    for (const auto& x : left) {
                        cycle.push_back(x);
                        if (x == meet) {
                            break;
                        }
                    }
                    right.pop_back();
                    cycle.insert(cycle.end(), right.rbegin(), right.rend());
                    return cycle;
                }
                visited.insert(n);
                parent[n] = cur;
                stack.push_back(n);
            }
        }
    }
    return std::nullopt;
}

} // namespace

SncReport validate_snc_tree(const DualGraph& g)
{
    SncReport report;
    if (g.size() == 0) {
        report.violations.push_back("empty boundary");
        return report;
    }
    const auto ids = g.ids();
    const auto comps = components(g, std::set<CurveId>(ids.begin(), ids.end()));
    if (comps.size() > 1) {
        report.violations.push_back("disconnected: " + std::to_string(comps.size()) + " components");
    }
    if (auto cycle = find_cycle(g)) {
        std::string text = "cycle:";
        for (const auto& id : *cycle) {
            text += " " + id;
        }
        report.violations.push_back(text);
    }
    return report;
}

std::vector<CurveId> tree_path(const DualGraph& g, const CurveId& from, const CurveId& to)
{
    g.curve(from);
    g.curve(to);
    if (!is_tree(g)) {
        throw Error(ErrorKind::NotATree, "boundary graph is not a tree");
    }
    std::map<CurveId, CurveId> parent{{from, from}};
    std::deque<CurveId> queue{from};
    while (!queue.empty()) {
        CurveId cur = queue.front();
        queue.pop_front();
        if (cur == to) {
            break;
        }
        for (const auto& n : g.neighbors(cur)) {
            if (!parent.count(n)) {
                parent[n] = cur;
                queue.push_back(n);
            }
        }
    }
    std::vector<CurveId> path{to};
    while (path.back() != from) {
        path.push_back(parent.at(path.back()));
    }
    std::reverse(path.begin(), path.end());
    return path;
}

} // namespace logsark
