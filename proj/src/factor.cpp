#include "logsark/factor.hpp"

#include "logsark/error.hpp"

#include <algorithm>

namespace logsark {

namespace {

PairHistory collapse_history(const SurfacePair& origin)
{
    PairHistory h = origin.history;
    h.contracted_count = 0;
    return h;
}

void require_link_shape(const SurfacePair& z, const CurveId& left, const CurveId& right, std::size_t i)
{
    const std::string where = "Z_" + std::to_string(i);
    if (z.strict_boundary.size() != 2) {
        throw Error(ErrorKind::ExtremalityFailure, where + " does not have two boundary components");
    }
    for (const auto& curve : {left, right}) {
        const auto verdict = is_extremal_contractible(z, curve);
        if (verdict.singularity_count > 1) {
            throw Error(ErrorKind::ExtremalityFailure,
                        where + ": '" + curve + "' supports " + std::to_string(verdict.singularity_count)
                            + " singularities");
        }
        if (!verdict.is_contractible) {
            throw Error(ErrorKind::ExtremalityFailure,
                        where + ": '" + curve + "' is not K+B extremal ((K+B).C = " + to_string(verdict.kplusb_value)
                            + ", C^2 = " + to_string(verdict.pair_self_int) + ")");
        }
    }
}

bool same_center(const Center& x, const Center& y)
{
    if (x.index() != y.index()) {
        return false;
    }
    if (const auto* p = std::get_if<InteriorPoint>(&x)) {
        return *p == std::get<InteriorPoint>(y);
    }
    const auto& a = std::get<NodePoint>(x);
    const auto& b = std::get<NodePoint>(y);
    return (a.a == b.a && a.b == b.b) || (a.a == b.b && a.b == b.a);
}

} // namespace

Report validate_resolution(const MarkedResolution& r)
{
    Report report;
    if (r.script.empty() || r.e0 == r.en) {
        report.violations.push_back("no target divisor: the script has no blow-ups");
        return report;
    }
    for (const auto& v : validate_snc_tree(r.graph).violations) {
        report.violations.push_back("resolution boundary " + v);
    }
    for (const auto& id : {r.e0, r.en}) {
        if (!r.graph.contains(id)) {
            report.violations.push_back("'" + id + "' is not a curve of the resolution");
        }
    }
    if (!report.ok()) {
        return report;
    }
    std::vector<CurveId> minus_one;
    for (const auto& [id, v] : r.graph.vertices()) {
        if (v.self_int == -1) {
            minus_one.push_back(id);
        }
    }
    for (const auto& id : minus_one) {
        if (id != r.e0 && id != r.en) {
            report.violations.push_back("'" + id + "' is a (-1)-curve other than E_0 and E_n ("
                                        + std::to_string(minus_one.size()) + " (-1)-curves in total)");
        }
    }
    const auto& en = r.graph.curve(r.en);
    if (en.kind != CurveKind::exceptional || en.birth_index != r.graph.max_birth_index()) {
        report.violations.push_back("'" + r.en + "' is not the last exceptional divisor");
    }
    if (r.origin.resolution.contains(r.e0)) {
        const int e0_square = r.origin.resolution.curve(r.e0).self_int;
        if (e0_square < 0) {
            report.violations.push_back("E_0 has negative self-intersection " + std::to_string(e0_square)
                                        + " on the origin");
        } else if (e0_square == 0) {
            report.warnings.push_back("E_0 has self-intersection 0 on the origin");
        }
    } else {
        report.violations.push_back("E_0 '" + r.e0 + "' is not a curve of the origin");
    }
    const auto origin_report = admissibility_check(r.origin);
    for (const auto& v : origin_report.violations) {
        report.violations.push_back("origin: " + v);
    }
    return report;
}

LinkSequence factorize(const MarkedResolution& r)
{
    const auto report = validate_resolution(r);
    if (!report.ok()) {
        throw Error(ErrorKind::InvalidResolution, report.violations.front());
    }
    return factorize_from(r.graph, r.e0, r.en, r.origin, r.blowup_count());
}

LinkSequence factorize_from(const DualGraph& x, const CurveId& e0, const CurveId& en,
                            const SurfacePair& origin, int blowup_count)
{
    const auto history = collapse_history(origin);
    LinkSequence seq;
    seq.chain = tree_path(x, e0, en);
    for (const auto& id : seq.chain) {
        seq.pairs.push_back(collapse(x, {id}, history));
        seq.picard_ranks.push_back(picard_rank(seq.pairs.back(), blowup_count));
    }
    if (!find_isomorphism(seq.pairs.front(), origin)) {
        throw Error(ErrorKind::InvalidResolution, "S_0 does not reproduce the origin pair");
    }
    const auto target_report = admissibility_check(seq.pairs.back());
    if (!target_report.ok()) {
        throw Error(ErrorKind::InvalidResolution, "target pair: " + target_report.violations.front());
    }
    for (std::size_t i = 1; i < seq.chain.size(); ++i) {
        Link link;
        link.contracted_left = seq.chain[i];
        link.contracted_right = seq.chain[i - 1];
        link.z = collapse(x, {seq.chain[i - 1], seq.chain[i]}, history);
        require_link_shape(link.z, link.contracted_right, link.contracted_left, i);
        link.left = seq.pairs[i - 1];
        link.right = seq.pairs[i];
        seq.links.push_back(std::move(link));
    }
    return seq;
}

IndexReport index_sequence(const LinkSequence& seq)
{
    IndexReport report;
    for (const auto& p : seq.pairs) {
        report.indices.push_back(pair_index(p));
    }
    const auto& ind = report.indices;
    if (!ind.empty()) {
        const auto& first = seq.pairs.front();
        report.hypotheses_hold = ind.front() == 1 && ind.back() == 1
                                 && pair_self_intersection(first, seq.chain.front()) > 0;
    }
    for (std::size_t i = 0; i + 1 < ind.size(); ++i) {
        if (std::abs(ind[i + 1] - ind[i]) != 1) {
            report.violations.push_back("ind(S_" + std::to_string(i) + ") = " + std::to_string(ind[i]) + " and ind(S_"
                                        + std::to_string(i + 1) + ") = " + std::to_string(ind[i + 1])
                                        + " do not differ by 1");
        }
    }
    for (std::size_t i = 1; i + 1 < ind.size(); ++i) {
        if (ind[i] >= 2 && ind[i - 1] == ind[i] + 1 && ind[i + 1] != ind[i] - 1) {
            report.violations.push_back("index stops descending at S_" + std::to_string(i));
        }
    }
    return report;
}

std::vector<TriangularSegment> triangular_segments(const std::vector<int>& indices)
{
    std::vector<TriangularSegment> out;
    if (indices.size() < 2) {
        return out;
    }
    TriangularSegment current;
    current.first = 0;
    current.degree = indices[0];
    for (std::size_t i = 1; i < indices.size(); ++i) {
        current.degree = std::max(current.degree, indices[i]);
        if (indices[i] == 1 || i + 1 == indices.size()) {
            current.last = i;
            out.push_back(current);
            current.first = i;
            current.degree = indices[i];
        }
    }
    return out;
}

ExtractionReport maximal_extraction_check(const LinkSequence& seq, const CoefficientLedger& ledger)
{
    ExtractionReport report;
    if (seq.chain.size() < 2) {
        report.message = "no links: nothing is extracted";
        return report;
    }
    report.e1 = seq.chain[1];
    report.lambda_e1 = ledger.row(report.e1).lambda();
    const auto best = maximal_multiplicity(ledger);
    report.lambda_star = best.lambda;
    report.argmax = best.argmax;
    report.vacuous = std::all_of(ledger.rows.begin(), ledger.rows.end(), [](const LedgerRow& r) { return r.m == 0; });
    report.holds = report.vacuous || std::find(best.argmax.begin(), best.argmax.end(), report.e1) != best.argmax.end();
    if (report.vacuous) {
        report.message = "all multiplicities vanish, so every divisor attains lambda* = 0 and the check is vacuous";
    } else if (report.holds) {
        report.message = "E_1 = " + report.e1 + " attains lambda* = " + to_string(best.lambda);
    } else {
        report.message = "E_1 = " + report.e1 + " has lambda "
                         + (report.lambda_e1 ? to_string(*report.lambda_e1) : std::string("undefined"))
                         + " below lambda* = " + to_string(best.lambda);
    }
    return report;
}

std::vector<Rational> sarkisov_degrees(const MarkedResolution& r, const LinkSequence& seq)
{
    const auto h = marker_intersections(r.graph, r.ledger);
    std::vector<Rational> out;
    for (std::size_t i = 0; i < seq.chain.size(); ++i) {
        const auto& curve = seq.chain[i];
        std::vector<CurveId> others;
        for (const auto& id : r.graph.ids()) {
            if (id != curve) {
                others.push_back(id);
            }
        }
        Rational h_deg = h.at(curve);
        if (!others.empty()) {
            std::vector<Rational> rhs;
            for (const auto& id : others) {
                rhs.emplace_back(r.graph.adjacent(id, curve) ? -1 : 0);
            }
            const auto beta = solve_linear(intersection_matrix(r.graph, others), std::move(rhs));
            for (std::size_t k = 0; k < others.size(); ++k) {
                h_deg += beta[k] * h.at(others[k]);
            }
        }
        out.push_back(sarkisov_degree(kplusb_degree(seq.pairs[i], curve), h_deg));
    }
    return out;
}

std::vector<Center> landing_points(const MarkedResolution& r)
{
    const auto target = collapse(r.graph, {r.en}, collapse_history(r.origin));
    std::set<CurveId> gone;
    for (const auto& id : r.graph.ids()) {
        if (!target.resolution.contains(id)) {
            gone.insert(id);
        }
    }
    const std::string label = r.landing_label.value_or("landing");
    std::map<CurveId, int> interior_count;
    std::vector<Center> out;
    for (const auto& cluster : components(r.graph, gone)) {
        std::set<CurveId> touched;
        for (const auto& id : cluster) {
            for (const auto& n : r.graph.neighbors(id)) {
                if (!gone.count(n)) {
                    touched.insert(n);
                }
            }
        }
        if (touched.size() == 1) {
            const auto& host = *touched.begin();
            const int k = ++interior_count[host];
            out.push_back(InteriorPoint{host, k == 1 ? label : label + "#" + std::to_string(k)});
        } else if (touched.size() == 2) {
            out.push_back(NodePoint{*touched.begin(), *touched.rbegin()});
        } else {
            throw Error(ErrorKind::InternalInvariant,
                        "cluster containing '" + cluster.front() + "' meets " + std::to_string(touched.size())
                            + " remaining curves");
        }
    }
    return out;
}

MarkedResolution concat_general_position(const MarkedResolution& r1, const MarkedResolution& r2)
{
    if (r2.script.empty()) {
        return r1;
    }
    if (r1.script.empty()) {
        return r2;
    }
    const auto target = collapse(r1.graph, {r1.en}, collapse_history(r1.origin));
    const auto iso = find_isomorphism(r2.origin, target);
    if (!iso) {
        throw Error(ErrorKind::PairMismatch, "the target of the first map is not the origin of the second");
    }
    const auto landings = landing_points(r1);

    std::map<CurveId, CurveId> rename = *iso;
    std::set<CurveId> taken;
    for (const auto& id : r1.graph.ids()) {
        taken.insert(id);
    }
    std::map<CurveId, std::set<std::string>> labels_used;
    for (const auto& [id, v] : r1.graph.vertices()) {
        labels_used[id] = v.used_labels;
    }
    std::map<std::pair<CurveId, std::string>, std::string> label_map;

    auto special = [&](const Center& c, std::size_t step) {
        for (const auto& landing : landings) {
            if (same_center(landing, c)) {
                throw Error(ErrorKind::SpecialPosition,
                            "step " + std::to_string(step + 1) + " of the second map blows up " + describe(c)
                                + ", where the first map contracts curves");
            }
        }
    };

    std::vector<ScriptStep> combined = r1.script;
    for (std::size_t k = 0; k < r2.script.size(); ++k) {
        const auto& step = r2.script[k];
        ScriptStep mapped;
        mapped.h_mult = step.h_mult;
        if (const auto* p = std::get_if<InteriorPoint>(&step.center)) {
            const bool on_origin = iso->count(p->curve) != 0;
            InteriorPoint point{rename.at(p->curve), p->label};
            if (on_origin) {
                special(point, k);
                const auto key = std::make_pair(point.curve, p->label);
                if (!label_map.count(key)) {
                    std::string fresh = p->label;
                    while (labels_used[point.curve].count(fresh)) {
                        fresh += "'";
                    }
                    labels_used[point.curve].insert(fresh);
                    label_map[key] = fresh;
                }
                point.label = label_map[key];
            }
            mapped.center = point;
        } else {
            const auto& n = std::get<NodePoint>(step.center);
            NodePoint node{rename.at(n.a), rename.at(n.b)};
            if (iso->count(n.a) && iso->count(n.b)) {
                special(node, k);
                if (!r1.graph.adjacent(node.a, node.b)) {
                    throw Error(ErrorKind::SpecialPosition,
                                "step " + std::to_string(k + 1) + " of the second map blows up " + describe(node)
                                    + ", which is not a node of the first resolution");
                }
            }
            mapped.center = node;
        }
        CurveId name = r2.ledger.rows.at(k).id;
        while (taken.count(name)) {
            name += "'";
        }
        taken.insert(name);
        rename[r2.ledger.rows.at(k).id] = name;
        mapped.name = name;
        combined.push_back(std::move(mapped));
    }
    return run_script(r1.origin, combined, r2.landing_label);
}

} // namespace logsark
