#pragma once

#include "logsark/discrepancy.hpp"
#include "logsark/pair.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace logsark {

/// Elementary link S_{i-1} <- Z_i -> S_i: `contracted_left` (E_i) is
/// contracted by Z_i -> S_{i-1} and `contracted_right` (E_{i-1}) by Z_i -> S_i.
struct Link {
    SurfacePair z;
    SurfacePair left;
    SurfacePair right;
    CurveId contracted_left;
    CurveId contracted_right;
};

struct LinkSequence {
    /// S_0 .. S_n
    std::vector<SurfacePair> pairs;
    /// Z_1 .. Z_n
    std::vector<Link> links;
    /// E_0 .. E_n
    std::vector<CurveId> chain;
    std::vector<int> picard_ranks;

    std::size_t link_count() const { return links.size(); }
};

Report validate_resolution(const MarkedResolution& r);

/// Factor the map resolved by `r` into elementary links.
LinkSequence factorize(const MarkedResolution& r);

/// The factorization of the map from `origin` (the pair obtained from X by
/// keeping only `e0`) to the pair obtained by keeping only `en`.
LinkSequence factorize_from(const DualGraph& x, const CurveId& e0, const CurveId& en,
                            const SurfacePair& origin, int blowup_count);

struct IndexReport {
    std::vector<int> indices;
    std::vector<std::string> violations;
    /// S_0 and S_n are smooth and B_{S_0}^2 > 0, the setting where the
    /// index rules are guaranteed.
    bool hypotheses_hold = false;
    bool ok() const { return violations.empty(); }
};

/// Indices of S_0 .. S_n, checking that consecutive ones differ by one and
/// that a descent onto an index >= 2 is followed by another descent.
IndexReport index_sequence(const LinkSequence& seq);

/// Maximal run S_first .. S_last whose interior pairs are singular. The degree
/// is the largest index in the run.
struct TriangularSegment {
    std::size_t first = 0;
    std::size_t last = 0;
    int degree = 0;

    std::size_t length() const { return last - first; }
    bool has_expected_length() const { return static_cast<int>(length()) == 2 * degree - 2; }
};

std::vector<TriangularSegment> triangular_segments(const std::vector<int>& indices);

struct ExtractionReport {
    CurveId e1;
    std::optional<Rational> lambda_e1;
    Rational lambda_star;
    std::vector<CurveId> argmax;
    bool holds = false;
    /// Every multiplicity is zero, so the check carries no information.
    bool vacuous = false;
    std::string message;
};

/// Whether E_1 attains the maximal multiplicity among divisors contracted
/// over S_0.
ExtractionReport maximal_extraction_check(const LinkSequence& seq, const CoefficientLedger& ledger);

/// Log Sarkisov degree of each S_i along E_i, for the marker encoded in the ledger.
std::vector<Rational> sarkisov_degrees(const MarkedResolution& r, const LinkSequence& seq);

/// Where each cluster of curves contracted by X -> S_n lands on S_n.
std::vector<Center> landing_points(const MarkedResolution& r);

/// Glue two resolutions whose target and origin pairs agree, provided the
/// second map's first base point avoids the points where the first one
/// contracts curves.
MarkedResolution concat_general_position(const MarkedResolution& r1, const MarkedResolution& r2);

} // namespace logsark
