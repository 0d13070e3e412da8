#pragma once

#include "logsark/discrepancy.hpp"
#include "logsark/hj.hpp"
#include "logsark/pair.hpp"

#include <json.hpp>

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace logsark {

struct SingularitySpec {
    HJChain chain;
    /// Set when the singularity was written as a type rather than a chain.
    std::optional<HJType> type;
    std::vector<CurveId> names;
    bool operator==(const SingularitySpec&) const = default;
};

struct BoundarySpec {
    CurveId name;
    int self_int = 0;
    std::vector<SingularitySpec> sings;
    bool operator==(const BoundarySpec&) const = default;
};

struct Problem;

struct ConcatEntry {
    /// Path the entry was read from, relative to the including file.
    std::optional<std::string> file;
    std::shared_ptr<const Problem> problem;
    bool operator==(const ConcatEntry& other) const;
};

struct Problem {
    int base_rank = 1;
    std::vector<BoundarySpec> boundary;
    std::vector<std::pair<CurveId, CurveId>> edges;
    std::vector<ScriptStep> script;
    std::optional<std::string> landing;
    std::vector<ConcatEntry> concat;
    nlohmann::json options = nlohmann::json::object();

    bool operator==(const Problem& other) const;
};

/// Parse and validate problem text. `base_dir` resolves "file" references.
Problem load_problem(const std::string& text, const std::string& base_dir = ".");
Problem load_problem_file(const std::string& path);

/// Canonical JSON form; load_problem(render_problem(p)) == p.
nlohmann::json problem_to_json(const Problem& p);
std::string render_problem(const Problem& p);

/// Chain curve names default to "<curve>_s<k>_<j>".
SurfacePair build_pair(const Problem& p);

/// The resolution described by the problem's own pair and script.
MarkedResolution build_resolution(const Problem& p);

/// The problem's resolution followed by every concatenated one.
MarkedResolution build_concatenation(const Problem& p);

/// Resolutions of the problem and of each concatenated entry, in order.
std::vector<MarkedResolution> concat_parts(const Problem& p);

/// "quadric", "reversion-sigma", "reversion-h2", "reversion-sigma-inverse",
/// "reversion-h0", "jung-d=N".
Problem builtin_fixture(const std::string& name);
std::vector<std::string> builtin_fixture_names();

} // namespace logsark
