#include "logsark/discrepancy.hpp"

#include "logsark/error.hpp"

namespace logsark {

std::optional<Rational> LedgerRow::lambda() const
{
    const Rational denominator = a();
    if (denominator <= 0) {
        return std::nullopt;
    }
    Rational value = m / denominator;
    value.canonicalize();
    return value;
}

const LedgerRow& CoefficientLedger::row(const CurveId& id) const
{
    for (const auto& r : rows) {
        if (r.id == id) {
            return r;
        }
    }
    throw Error(ErrorKind::UnknownCurve, "no ledger row for '" + id + "'");
}

bool CoefficientLedger::contains(const CurveId& id) const
{
    for (const auto& r : rows) {
        if (r.id == id) {
            return true;
        }
    }
    return false;
}

namespace {

std::vector<CurveId> curves_through(const Center& center)
{
    if (const auto* p = std::get_if<InteriorPoint>(&center)) {
        return {p->curve};
    }
    const auto& n = std::get<NodePoint>(center);
    return {n.a, n.b};
}

} // namespace

std::map<CurveId, LedgerRow> chain_seed_rows(const SurfacePair& p)
{
    std::map<CurveId, LedgerRow> out;
    for (std::size_t i = 0; i < p.chains.size(); ++i) {
        const auto& ids = p.chains[i];
        const auto m = intersection_matrix(p.resolution, ids);
        std::vector<Rational> boundary_rhs(ids.size(), Rational(0));
        boundary_rhs[0] = -1;
        std::vector<Rational> canonical_rhs;
        for (const auto& id : ids) {
            canonical_rhs.emplace_back(-2 - p.resolution.curve(id).self_int);
        }
        const auto t = solve_linear(m, std::move(boundary_rhs));
        const auto c = solve_linear(m, std::move(canonical_rhs));
        for (std::size_t j = 0; j < ids.size(); ++j) {
            out[ids[j]] = LedgerRow{ids[j], c[j], t[j], Rational(0)};
        }
    }
    return out;
}

ScriptRun run_steps(const DualGraph& start, const std::vector<ScriptStep>& script,
                    const std::map<CurveId, LedgerRow>& seeds)
{
    ScriptRun run;
    run.graph = start;
    std::map<CurveId, std::size_t> index;
    for (const auto& step : script) {
        if (step.h_mult < 0) {
            throw Error(ErrorKind::SchemaError, "h_mult must be nonnegative at " + describe(step.center));
        }
        LedgerRow row;
        row.c = 1;
        row.t = 0;
        row.m = step.h_mult;
        for (const auto& id : curves_through(step.center)) {
            const auto it = index.find(id);
            const auto seed = seeds.find(id);
            if (seed != seeds.end() && it == index.end()) {
                row.c += seed->second.c;
                row.t += seed->second.t;
                row.m += seed->second.m;
            } else if (it == index.end()) {
                row.t += 1;
            } else {
                const auto& through = run.ledger.rows[it->second];
                row.c += through.c;
                row.t += through.t;
                row.m += through.m;
            }
        }
        auto blown = blow_up(run.graph, step.center, step.name);
        row.id = blown.new_id;
        const auto lambda = row.lambda();
        if (lambda && *lambda * row.a() != row.m) {
            throw Error(ErrorKind::InternalInvariant, "lambda of '" + row.id + "' is not m / a");
        }
        row.c.canonicalize();
        row.t.canonicalize();
        if (row.t < 0 || row.m < 0) {
            throw Error(ErrorKind::InternalInvariant, "ledger row of '" + row.id + "' out of range");
        }
        run.graph = std::move(blown.graph);
        index[row.id] = run.ledger.rows.size();
        run.created.push_back(row.id);
        run.ledger.rows.push_back(std::move(row));
    }
    return run;
}

MarkedResolution run_script(const SurfacePair& start, const std::vector<ScriptStep>& script,
                            std::optional<std::string> landing_label)
{
    if (script.empty()) {
        throw Error(ErrorKind::EmptyScript, "no target divisor: the script has no blow-ups");
    }
    if (start.strict_boundary.size() != 1) {
        throw Error(ErrorKind::ReducibleBoundary, "the origin boundary must be a single curve");
    }
    auto run = run_steps(start.resolution, script, chain_seed_rows(start));
    MarkedResolution r;
    r.graph = std::move(run.graph);
    r.e0 = *start.strict_boundary.begin();
    r.en = run.created.back();
    r.ledger = std::move(run.ledger);
    r.origin = start;
    r.script = script;
    r.landing_label = std::move(landing_label);
    return r;
}

MarkedResolution identity_resolution(const SurfacePair& start)
{
    if (start.strict_boundary.size() != 1) {
        throw Error(ErrorKind::ReducibleBoundary, "the origin boundary must be a single curve");
    }
    MarkedResolution r;
    r.graph = start.resolution;
    r.e0 = *start.strict_boundary.begin();
    r.en = r.e0;
    r.origin = start;
    return r;
}

MaximalMultiplicity maximal_multiplicity(const CoefficientLedger& ledger,
                                         const std::optional<std::set<CurveId>>& among)
{
    std::optional<MaximalMultiplicity> best;
    for (const auto& row : ledger.rows) {
        if (among && !among->count(row.id)) {
            continue;
        }
        const auto lambda = row.lambda();
        if (!lambda) {
            continue;
        }
        if (!best || *lambda > best->lambda) {
            best = MaximalMultiplicity{*lambda, {row.id}};
        } else if (*lambda == best->lambda) {
            best->argmax.push_back(row.id);
        }
    }
    if (!best) {
        throw Error(ErrorKind::NoPositiveDiscrepancy, "no exceptional divisor has positive log discrepancy");
    }
    return *best;
}

RationalMatrix intersection_matrix(const DualGraph& g, const std::vector<CurveId>& ids)
{
    RationalMatrix m(ids.size(), ids.size());
    for (std::size_t i = 0; i < ids.size(); ++i) {
        m(i, i) = g.curve(ids[i]).self_int;
        for (std::size_t j = i + 1; j < ids.size(); ++j) {
            if (g.adjacent(ids[i], ids[j])) {
                m(i, j) = 1;
                m(j, i) = 1;
            }
        }
    }
    return m;
}

std::map<CurveId, Rational> log_discrepancies_linear(const DualGraph& g, const std::set<CurveId>& contracted)
{
    const std::vector<CurveId> ids(contracted.begin(), contracted.end());
    std::map<CurveId, Rational> out;
    if (ids.empty()) {
        return out;
    }
    const auto m = intersection_matrix(g, ids);
    if (!is_negative_definite(m)) {
        throw Error(ErrorKind::NotNegativeDefinite, "the contracted curves do not have a negative definite intersection matrix");
    }
    std::vector<Rational> rhs;
    for (const auto& id : ids) {
        rhs.emplace_back(-2 + static_cast<long>(g.degree(id)));
    }
    const auto a = solve_linear(m, std::move(rhs));
    for (std::size_t i = 0; i < ids.size(); ++i) {
        out[ids[i]] = a[i];
    }
    return out;
}

Rational sarkisov_degree(const Rational& kplusb_deg, const Rational& h_deg)
{
    if (kplusb_deg >= 0) {
        throw Error(ErrorKind::NonNegativeKplusB, "(K+B).C = " + to_string(kplusb_deg) + " is not negative");
    }
    Rational mu = h_deg / -kplusb_deg;
    mu.canonicalize();
    return mu;
}

std::map<CurveId, Rational> marker_intersections(const DualGraph& g, const CoefficientLedger& ledger)
{
    std::map<CurveId, Rational> out;
    for (const auto& id : g.ids()) {
        Rational total = 0;
        if (ledger.contains(id)) {
            total -= ledger.row(id).m * g.curve(id).self_int;
            for (const auto& n : g.neighbors(id)) {
                if (ledger.contains(n)) {
                    total -= ledger.row(n).m;
                }
            }
        }
        out[id] = total;
    }
    return out;
}

} // namespace logsark
