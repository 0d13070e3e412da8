#pragma once

#include "logsark/dual_graph.hpp"
#include "logsark/linalg.hpp"
#include "logsark/pair.hpp"
#include "logsark/rational.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace logsark {

/// One blow-up of a resolution script. `h_mult` is the multiplicity at the
/// center of the strict transform of the marker divisor H.
struct ScriptStep {
    Center center;
    int h_mult = 0;
    std::optional<CurveId> name;
    bool operator==(const ScriptStep&) const = default;
};

/// Ramification data of one exceptional divisor: c is its coefficient in the
/// relative canonical divisor, t in the total transform of the boundary and m
/// in the total transform of H.
struct LedgerRow {
    CurveId id;
    Rational c;
    Rational t;
    Rational m;

    Rational b() const { return t - 1; }
    /// Log discrepancy c - b.
    Rational a() const { return c - b(); }
    std::optional<Rational> lambda() const;

    bool operator==(const LedgerRow&) const = default;
};

struct CoefficientLedger {
    /// Rows in birth order.
    std::vector<LedgerRow> rows;

    const LedgerRow& row(const CurveId& id) const;
    bool contains(const CurveId& id) const;
    bool operator==(const CoefficientLedger&) const = default;
};

struct ScriptRun {
    DualGraph graph;
    CoefficientLedger ledger;
    /// Curve created by each step, in order.
    std::vector<CurveId> created;
};

/// Replay `script` on `start`, growing the ledger one row per blow-up. Curves
/// of `start` listed in `seeds` use those coefficients; any other curve of
/// `start` is reduced boundary with t = 1, c = 0, m = 0.
ScriptRun run_steps(const DualGraph& start, const std::vector<ScriptStep>& script,
                    const std::map<CurveId, LedgerRow>& seeds = {});

/// Coefficients of the chain curves of a pair on its minimal resolution:
/// t from the pullback of the boundary, c from the pullback of the canonical
/// divisor, so that c - t + 1 is the log discrepancy of the chain curve.
std::map<CurveId, LedgerRow> chain_seed_rows(const SurfacePair& p);

/// A resolution of a birational map: `graph` is the boundary of the common
/// resolution X, `e0` the strict transform of the origin boundary and `en`
/// the last exceptional divisor (the strict transform of the target boundary).
struct MarkedResolution {
    DualGraph graph;
    CurveId e0;
    CurveId en;
    CoefficientLedger ledger;
    SurfacePair origin;
    std::vector<ScriptStep> script;
    /// Name of the point where the contracted part of X lands on the target.
    std::optional<std::string> landing_label;

    int blowup_count() const { return static_cast<int>(script.size()); }
};

/// Run a script on the minimal resolution of an admissible pair with an
/// irreducible boundary curve.
MarkedResolution run_script(const SurfacePair& start, const std::vector<ScriptStep>& script,
                            std::optional<std::string> landing_label = std::nullopt);

/// The map of a pair to itself: no blow-ups, e0 = en.
MarkedResolution identity_resolution(const SurfacePair& start);

struct MaximalMultiplicity {
    Rational lambda;
    std::vector<CurveId> argmax;
};

/// Maximum of m / a over rows with a > 0 (restricted to `among` when given),
/// together with every divisor attaining it.
MaximalMultiplicity maximal_multiplicity(const CoefficientLedger& ledger,
                                         const std::optional<std::set<CurveId>>& among = std::nullopt);

/// Solve sum_i a_i (C_i . C_j) = -2 + deg(C_j) over the contracted curves.
std::map<CurveId, Rational> log_discrepancies_linear(const DualGraph& g, const std::set<CurveId>& contracted);

/// mu = H.C / -(K+B).C
Rational sarkisov_degree(const Rational& kplusb_deg, const Rational& h_deg);

/// H_X . v for every curve of X, assuming H meets the boundary only at the
/// script's centers: -(sum_u m_u C_u) . v on exceptional curves, 0 elsewhere.
std::map<CurveId, Rational> marker_intersections(const DualGraph& g, const CoefficientLedger& ledger);

/// Intersection matrix of `ids` in `g`, in the given order.
RationalMatrix intersection_matrix(const DualGraph& g, const std::vector<CurveId>& ids);

} // namespace logsark
