#include "logsark/pair.hpp"

#include "logsark/error.hpp"
#include "logsark/linalg.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace logsark {

namespace {

// Intersection matrix of a chain plus the unit vector for the curve meeting
// the strict boundary.
RationalMatrix chain_matrix(const HJChain& weights)
{
    const std::size_t s = weights.size();
    RationalMatrix m(s, s);
    for (std::size_t k = 0; k < s; ++k) {
        m(k, k) = -weights[k];
        if (k + 1 < s) {
            m(k, k + 1) = 1;
            m(k + 1, k) = 1;
        }
    }
    return m;
}

void require_strict(const SurfacePair& p, const CurveId& curve)
{
    if (!p.strict_boundary.count(curve)) {
        throw Error(ErrorKind::UnknownCurve, "'" + curve + "' is not a strict boundary curve");
    }
}

std::string chain_text(const HJChain& w)
{
    std::string out = "[";
    for (std::size_t i = 0; i < w.size(); ++i) {
        out += (i ? "," : "") + std::to_string(w[i]);
    }
    return out + "]";
}

} // namespace

CurveId SurfacePair::chain_host(std::size_t i) const
{
    const auto& first = chains.at(i).front();
    for (const auto& n : resolution.neighbors(first)) {
        if (strict_boundary.count(n)) {
            return n;
        }
    }
    throw Error(ErrorKind::InvalidPair, "chain starting at '" + first + "' does not meet the boundary");
}

std::vector<std::size_t> SurfacePair::chains_on(const CurveId& curve) const
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < chains.size(); ++i) {
        if (chain_host(i) == curve) {
            out.push_back(i);
        }
    }
    return out;
}

HJChain SurfacePair::chain_weights(std::size_t i) const
{
    HJChain w;
    for (const auto& id : chains.at(i)) {
        w.push_back(-resolution.curve(id).self_int);
    }
    return w;
}

std::size_t SurfacePair::chain_curve_count() const
{
    std::size_t total = 0;
    for (const auto& c : chains) {
        total += c.size();
    }
    return total;
}

SurfacePair make_pair(DualGraph resolution,
                      std::set<CurveId> strict_boundary,
                      std::vector<std::vector<CurveId>> chains,
                      int base_rank)
{
    std::set<CurveId> seen;
    for (const auto& id : strict_boundary) {
        resolution.curve(id);
        seen.insert(id);
    }
    for (const auto& chain : chains) {
        if (chain.empty()) {
            throw Error(ErrorKind::InvalidPair, "empty singularity chain");
        }
        for (const auto& id : chain) {
            resolution.curve(id);
            if (!seen.insert(id).second) {
                throw Error(ErrorKind::InvalidPair, "curve '" + id + "' listed twice");
            }
        }
        int hosts = 0;
        for (const auto& n : resolution.neighbors(chain.front())) {
            hosts += strict_boundary.count(n) ? 1 : 0;
        }
        if (hosts != 1) {
            throw Error(ErrorKind::InvalidPair,
                        "chain starting at '" + chain.front() + "' must meet exactly one boundary curve");
        }
    }
    if (seen.size() != resolution.size()) {
        throw Error(ErrorKind::InvalidPair, "every curve must be a boundary curve or a chain curve");
    }
    SurfacePair p;
    p.history.base_rank = base_rank;
    p.history.origin_vertex_count = static_cast<int>(resolution.size());
    p.resolution = std::move(resolution);
    p.strict_boundary = std::move(strict_boundary);
    p.chains = std::move(chains);
    return p;
}

std::vector<CurveId> eligible_contractions(const DualGraph& g, const std::set<CurveId>& keep)
{
    std::vector<const CurveVertex*> found;
    for (const auto& [id, v] : g.vertices()) {
        if (keep.count(id) || v.self_int != -1) {
            continue;
        }
        const auto& nbrs = g.neighbors(id);
        if (nbrs.size() > 2) {
            continue;
        }
        if (nbrs.size() == 2 && g.adjacent(*nbrs.begin(), *nbrs.rbegin())) {
            continue;
        }
        found.push_back(&v);
    }
    std::sort(found.begin(), found.end(), [](const CurveVertex* x, const CurveVertex* y) {
        if (x->birth_index != y->birth_index) {
            return x->birth_index > y->birth_index;
        }
        return x->id < y->id;
    });
    std::vector<CurveId> out;
    for (const auto* v : found) {
        out.push_back(v->id);
    }
    return out;
}

SurfacePair residue_pair(const DualGraph& g, const std::set<CurveId>& keep,
                         const PairHistory& source, int contracted)
{
    std::set<CurveId> removed;
    for (const auto& [id, v] : g.vertices()) {
        if (keep.count(id)) {
            continue;
        }
        if (v.self_int >= -1) {
            throw Error(ErrorKind::NonContractibleResidue,
                        "'" + id + "' has self-intersection " + std::to_string(v.self_int)
                            + " and cannot be contracted");
        }
        removed.insert(id);
    }

    std::vector<std::vector<CurveId>> chains;
    for (const auto& comp : components(g, removed)) {
        std::vector<std::pair<CurveId, CurveId>> attachments;
        std::map<CurveId, int> inner_degree;
        for (const auto& id : comp) {
            for (const auto& n : g.neighbors(id)) {
                if (keep.count(n)) {
                    attachments.emplace_back(id, n);
                } else {
                    ++inner_degree[id];
                }
            }
        }
        if (attachments.size() != 1) {
            throw Error(ErrorKind::NonContractibleResidue,
                        "residue containing '" + comp.front() + "' meets the kept boundary "
                            + std::to_string(attachments.size()) + " times");
        }
        const CurveId start = attachments.front().first;
        if (inner_degree[start] > 1) {
            throw Error(ErrorKind::NonContractibleResidue,
                        "residue attaches through '" + start + "', which is not the end of a chain");
        }
        std::vector<CurveId> chain{start};
        CurveId prev;
        while (true) {
            std::vector<CurveId> next;
            for (const auto& n : g.neighbors(chain.back())) {
                if (!keep.count(n) && n != prev) {
                    next.push_back(n);
                }
            }
            if (next.empty()) {
                break;
            }
            if (next.size() > 1) {
                throw Error(ErrorKind::NonContractibleResidue,
                            "residue branches at '" + chain.back() + "'");
            }
            prev = chain.back();
            chain.push_back(next.front());
        }
        if (chain.size() != comp.size()) {
            throw Error(ErrorKind::NonContractibleResidue, "residue containing '" + start + "' is not a chain");
        }
        chains.push_back(std::move(chain));
    }
    std::sort(chains.begin(), chains.end());

    SurfacePair p;
    p.resolution = g;
    p.strict_boundary = keep;
    p.chains = std::move(chains);
    p.history = source;
    p.history.contracted_count += contracted;
    return p;
}

SurfacePair collapse(const DualGraph& g, const std::set<CurveId>& keep, const PairHistory& source)
{
    if (keep.empty()) {
        throw Error(ErrorKind::NonContractibleResidue, "nothing kept");
    }
    for (const auto& id : keep) {
        g.curve(id);
    }
    if (!is_tree(g)) {
        throw Error(ErrorKind::NotATree, "boundary graph is not a tree");
    }
    DualGraph current = g;
    int contracted = 0;
    while (true) {
        const auto eligible = eligible_contractions(current, keep);
        if (eligible.empty()) {
            break;
        }
        current = contract(current, eligible.front());
        ++contracted;
    }
    return residue_pair(current, keep, source, contracted);
}

Rational pair_self_intersection(const SurfacePair& p, const CurveId& curve)
{
    require_strict(p, curve);
    Rational total(p.resolution.curve(curve).self_int);
    for (auto i : p.chains_on(curve)) {
        const auto weights = p.chain_weights(i);
        std::vector<Rational> rhs(weights.size(), Rational(0));
        rhs[0] = -1;
        const auto beta = solve_linear(chain_matrix(weights), std::move(rhs));
        total += beta[0];
    }
    return total;
}

Rational kplusb_degree(const SurfacePair& p, const CurveId& curve)
{
    require_strict(p, curve);
    int neighbors = 0;
    for (const auto& n : p.resolution.neighbors(curve)) {
        neighbors += p.strict_boundary.count(n) ? 1 : 0;
    }
    Rational total(-2 + neighbors);
    for (auto i : p.chains_on(curve)) {
        total += 1 - chain_log_discrepancies(p.chain_weights(i)).front();
    }
    return total;
}

ExtremalVerdict is_extremal_contractible(const SurfacePair& p, const CurveId& curve)
{
    require_strict(p, curve);
    ExtremalVerdict v;
    v.kplusb_value = kplusb_degree(p, curve);
    v.pair_self_int = pair_self_intersection(p, curve);
    for (const auto& n : p.resolution.neighbors(curve)) {
        v.neighbor_count += p.strict_boundary.count(n) ? 1 : 0;
    }
    v.singularity_count = static_cast<int>(p.chains_on(curve).size());
    v.is_contractible = v.kplusb_value < 0 && v.pair_self_int < 0 && v.neighbor_count <= 1
                        && v.singularity_count <= 1;
    return v;
}

Report admissibility_check(const SurfacePair& p)
{
    Report report;
    if (p.strict_boundary.empty()) {
        report.violations.push_back("empty boundary");
        return report;
    }
    for (const auto& v : validate_snc_tree(p.resolution).violations) {
        report.violations.push_back("resolution graph " + v);
    }
    if (components(p.resolution, p.strict_boundary).size() != 1) {
        report.violations.push_back("strict boundary is not connected");
    }

    std::map<CurveId, std::size_t> owner;
    for (std::size_t i = 0; i < p.chains.size(); ++i) {
        for (const auto& id : p.chains[i]) {
            owner[id] = i;
        }
    }
    for (std::size_t i = 0; i < p.chains.size(); ++i) {
        const auto& chain = p.chains[i];
        for (std::size_t k = 0; k < chain.size(); ++k) {
            const auto& v = p.resolution.curve(chain[k]);
            if (v.self_int > -2) {
                report.violations.push_back("chain curve '" + v.id + "' has self-intersection "
                                            + std::to_string(v.self_int) + " > -2");
            }
            for (const auto& n : p.resolution.neighbors(chain[k])) {
                if (p.strict_boundary.count(n)) {
                    if (k != 0) {
                        report.violations.push_back("chain curve '" + v.id + "' meets the boundary but is not first");
                    }
                    continue;
                }
                const auto it = owner.find(n);
                const bool consecutive = it != owner.end() && it->second == i
                                         && ((k > 0 && chain[k - 1] == n) || (k + 1 < chain.size() && chain[k + 1] == n));
                if (!consecutive) {
                    report.violations.push_back("chain curve '" + v.id + "' meets '" + n + "' outside its chain");
                }
            }
            if (k + 1 < chain.size() && !p.resolution.adjacent(chain[k], chain[k + 1])) {
                report.violations.push_back("chain curves '" + chain[k] + "' and '" + chain[k + 1] + "' do not meet");
            }
        }
        bool weights_ok = true;
        for (const auto& id : chain) {
            weights_ok = weights_ok && p.resolution.curve(id).self_int <= -2;
        }
        if (weights_ok) {
            for (const auto& a : chain_log_discrepancies(p.chain_weights(i))) {
                if (a <= 0 || a >= 1) {
                    report.violations.push_back("log discrepancy " + to_string(a) + " outside (0,1) on chain "
                                                + chain.front());
                }
            }
        }
    }
    if (p.strict_boundary.size() == 1 && p.chains.size() > 2) {
        report.violations.push_back("irreducible boundary supports " + std::to_string(p.chains.size())
                                    + " singularities; at most two are allowed");
    }
    return report;
}

int pair_index(const SurfacePair& p)
{
    if (p.strict_boundary.size() != 1) {
        throw Error(ErrorKind::ReducibleBoundary,
                    "index needs an irreducible boundary, found " + std::to_string(p.strict_boundary.size()) + " curves");
    }
    if (p.chains.size() > 1) {
        throw Error(ErrorKind::MultipleSingularities,
                    "index needs at most one singularity, found " + std::to_string(p.chains.size()));
    }
    if (p.chains.empty()) {
        return 1;
    }
    return -p.resolution.curve(p.chains.front().front()).self_int;
}

int picard_rank(const SurfacePair& p, int blowup_count)
{
    const int chain_curves = static_cast<int>(p.chain_curve_count());
    const int accounted = static_cast<int>(p.strict_boundary.size()) + chain_curves + p.history.contracted_count;
    if (blowup_count < 0 || accounted != p.history.origin_vertex_count + blowup_count) {
        throw Error(ErrorKind::InconsistentHistory,
                    "pair accounts for " + std::to_string(accounted) + " curves but the history has "
                        + std::to_string(p.history.origin_vertex_count) + " + " + std::to_string(blowup_count));
    }
    const int rank = p.history.base_rank + blowup_count - p.history.contracted_count - chain_curves;
    if (rank < 1) {
        throw Error(ErrorKind::InconsistentHistory, "computed Picard rank " + std::to_string(rank) + " < 1");
    }
    return rank;
}

namespace {

std::vector<HJChain> sorted_chains_on(const SurfacePair& p, const CurveId& curve)
{
    std::vector<HJChain> out;
    for (auto i : p.chains_on(curve)) {
        out.push_back(p.chain_weights(i));
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

std::optional<std::map<CurveId, CurveId>> find_isomorphism(const SurfacePair& from, const SurfacePair& to)
{
    if (from.strict_boundary.size() != to.strict_boundary.size() || from.chains.size() != to.chains.size()
        || from.resolution.size() != to.resolution.size()) {
        return std::nullopt;
    }
    const std::vector<CurveId> sources(from.strict_boundary.begin(), from.strict_boundary.end());
    std::map<CurveId, CurveId> assignment;
    std::set<CurveId> used;

    auto compatible = [&](const CurveId& a, const CurveId& b) {
        return from.resolution.curve(a).self_int == to.resolution.curve(b).self_int
               && sorted_chains_on(from, a) == sorted_chains_on(to, b);
    };

    std::function<bool(std::size_t)> assign = [&](std::size_t k) -> bool {
        if (k == sources.size()) {
            return true;
        }
        const auto& a = sources[k];
        for (const auto& b : to.strict_boundary) {
            if (used.count(b) || !compatible(a, b)) {
                continue;
            }
            bool edges_ok = true;
            for (std::size_t j = 0; j < k && edges_ok; ++j) {
                edges_ok = from.resolution.adjacent(a, sources[j]) == to.resolution.adjacent(b, assignment[sources[j]]);
            }
            if (!edges_ok) {
                continue;
            }
            assignment[a] = b;
            used.insert(b);
            if (assign(k + 1)) {
                return true;
            }
            used.erase(b);
            assignment.erase(a);
        }
        return false;
    };
    if (!assign(0)) {
        return std::nullopt;
    }

    std::map<CurveId, CurveId> mapping = assignment;
    for (const auto& [a, b] : assignment) {
        auto from_chains = from.chains_on(a);
        auto to_chains = to.chains_on(b);
        auto by_weights = [](const SurfacePair& p) {
            return [&p](std::size_t x, std::size_t y) { return p.chain_weights(x) < p.chain_weights(y); };
        };
        std::stable_sort(from_chains.begin(), from_chains.end(), by_weights(from));
        std::stable_sort(to_chains.begin(), to_chains.end(), by_weights(to));
        for (std::size_t i = 0; i < from_chains.size(); ++i) {
            const auto& x = from.chains[from_chains[i]];
            const auto& y = to.chains[to_chains[i]];
            for (std::size_t j = 0; j < x.size(); ++j) {
                mapping[x[j]] = y[j];
            }
        }
    }
    return mapping;
}

std::string pair_shape(const SurfacePair& p, const std::vector<CurveId>& order)
{
    std::vector<CurveId> curves = order;
    if (curves.empty()) {
        curves.assign(p.strict_boundary.begin(), p.strict_boundary.end());
    }
    std::ostringstream out;
    for (std::size_t i = 0; i < curves.size(); ++i) {
        if (i) {
            out << (p.resolution.adjacent(curves[i - 1], curves[i]) ? " - " : " | ");
        }
        out << p.resolution.curve(curves[i]).self_int << "{";
        const auto chains = sorted_chains_on(p, curves[i]);
        for (std::size_t j = 0; j < chains.size(); ++j) {
            out << (j ? "," : "") << chain_text(chains[j]);
        }
        out << "}";
    }
    return out.str();
}

std::string singularity_summary(const SurfacePair& p)
{
    if (p.chains.empty()) {
        return "smooth";
    }
    std::string out;
    for (std::size_t i = 0; i < p.chains.size(); ++i) {
        out += (i ? " + " : "") + type_name(p.chain_type(i));
    }
    return out;
}

} // namespace logsark
