#include "logsark/report.hpp"

#include "logsark/error.hpp"
#include "logsark/factor.hpp"

#include <algorithm>
#include <sstream>

namespace logsark {

namespace {

int kind_rank(CurveKind kind)
{
    switch (kind) {
    case CurveKind::boundary:
        return 0;
    case CurveKind::chain:
        return 1;
    case CurveKind::exceptional:
        return 2;
    }
    return 3;
}

std::string quoted(const std::string& s)
{
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') {
            out += '\\';
        }
        out += c;
    }
    return out + "\"";
}

std::string join(const std::vector<std::string>& parts, const std::string& sep)
{
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        out += (i ? sep : "") + parts[i];
    }
    return out;
}

std::string list_text(const std::vector<int>& values)
{
    std::vector<std::string> parts;
    for (int v : values) {
        parts.push_back(std::to_string(v));
    }
    return "[" + join(parts, ", ") + "]";
}

std::string chain_text(const HJChain& chain)
{
    return list_text(chain);
}

void append_report(std::ostringstream& out, const std::string& title, const Report& report)
{
    out << title << ": " << (report.ok() ? "ok" : "invalid") << "\n";
    for (const auto& v : report.violations) {
        out << "  violation: " << v << "\n";
    }
    for (const auto& w : report.warnings) {
        out << "  warning: " << w << "\n";
    }
}

CommandResult run_validate(const Problem& p)
{
    std::ostringstream out;
    const auto pair = build_pair(p);
    const auto admissibility = admissibility_check(pair);
    append_report(out, "origin pair", admissibility);
    int code = admissibility.ok() ? 0 : 2;
    if (p.script.empty()) {
        out << "resolution: invalid\n  violation: no target divisor: the script has no blow-ups\n";
        return {out.str(), 2, {}};
    }
    const auto r = build_resolution(p);
    const auto resolution = validate_resolution(r);
    append_report(out, "resolution", resolution);
    if (!resolution.ok()) {
        code = 2;
    }
    return {out.str(), code, {}};
}

CommandResult run_ledger(const Problem& p)
{
    const auto r = build_resolution(p);
    std::vector<std::vector<std::string>> rows{{"divisor", "c", "b", "m", "lambda"}};
    for (const auto& row : r.ledger.rows) {
        const auto lambda = row.lambda();
        rows.push_back({row.id, to_string(row.c), to_string(row.b()), to_string(row.m),
                        lambda ? to_string(*lambda) : "-"});
    }
    std::vector<std::size_t> width(rows.front().size(), 0);
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            width[i] = std::max(width[i], row[i].size());
        }
    }
    std::ostringstream out;
    for (const auto& row : rows) {
        std::string line;
        for (std::size_t i = 0; i < row.size(); ++i) {
            line += row[i] + std::string(width[i] - row[i].size() + 2, ' ');
        }
        line.erase(line.find_last_not_of(' ') + 1);
        out << line << "\n";
    }
    const auto best = maximal_multiplicity(r.ledger);
    out << "lambda* = " << to_string(best.lambda) << " at " << join(best.argmax, ", ") << "\n";
    return {out.str(), 0, {}};
}

std::string describe_sequence(const MarkedResolution& r, const LinkSequence& seq)
{
    std::ostringstream out;
    out << seq.link_count() << " links\n";
    std::vector<std::optional<int>> indices;
    for (const auto& p : seq.pairs) {
        try {
            indices.emplace_back(pair_index(p));
        } catch (const Error&) {
            indices.emplace_back(std::nullopt);
        }
    }
    for (std::size_t i = 0; i < seq.pairs.size(); ++i) {
        out << "S_" << i << ": " << singularity_summary(seq.pairs[i]);
        out << ", index " << (indices[i] ? std::to_string(*indices[i]) : std::string("-"));
        out << ", rank " << seq.picard_ranks[i];
        out << "; boundary " << seq.chain[i] << " (B^2 = " << to_string(pair_self_intersection(seq.pairs[i], seq.chain[i]))
            << ")\n";
    }
    for (std::size_t i = 0; i < seq.links.size(); ++i) {
        const auto& link = seq.links[i];
        std::vector<std::string> parts;
        for (const auto& c : {link.contracted_right, link.contracted_left}) {
            const auto v = is_extremal_contractible(link.z, c);
            parts.push_back(c + " (C^2 = " + to_string(v.pair_self_int) + ", (K+B).C = " + to_string(v.kplusb_value)
                            + ")");
        }
        out << "Z_" << i + 1 << ": " << singularity_summary(link.z) << "; " << join(parts, " + ") << "\n";
    }
    const bool all_indexed = std::all_of(indices.begin(), indices.end(), [](const auto& v) { return v.has_value(); });
    if (all_indexed) {
        const auto report = index_sequence(seq);
        out << "index sequence: " << list_text(report.indices) << "\n";
        if (report.hypotheses_hold) {
            out << "index lemma: " << (report.ok() ? "holds" : "fails") << "\n";
            for (const auto& v : report.violations) {
                out << "  violation: " << v << "\n";
            }
        } else {
            out << "index lemma: not applicable (the end surfaces are not smooth with B^2 > 0)\n";
        }
        std::vector<std::string> segments;
        for (const auto& s : triangular_segments(report.indices)) {
            segments.push_back("S_" + std::to_string(s.first) + "..S_" + std::to_string(s.last) + " degree "
                               + std::to_string(s.degree));
        }
        out << "triangular segments: " << (segments.empty() ? "none" : join(segments, ", ")) << "\n";
    } else {
        out << "index sequence: undefined (a surface has several singularities)\n";
    }
    if (!seq.links.empty() && !r.ledger.rows.empty()) {
        const auto extraction = maximal_extraction_check(seq, r.ledger);
        out << "maximal extraction: " << (extraction.holds ? "yes" : "no") << " (" << extraction.message << ")\n";
        try {
            std::vector<std::string> mus;
            for (const auto& mu : sarkisov_degrees(r, seq)) {
                mus.push_back(to_string(mu));
            }
            out << "log Sarkisov degrees: " << join(mus, ", ") << "\n";
        } catch (const Error& e) {
            out << "log Sarkisov degrees: undefined (" << e.what() << ")\n";
        }
    }
    return out.str();
}

CommandResult run_factorize(const Problem& p)
{
    const auto r = p.concat.empty() ? build_resolution(p) : build_concatenation(p);
    return {describe_sequence(r, factorize(r)), 0, {}};
}

CommandResult run_hj(const Problem& p)
{
    std::ostringstream out;
    auto describe_chain = [&](const std::string& what, const HJChain& chain) {
        const auto type = chain_to_type(chain);
        std::vector<std::string> a;
        for (const auto& v : chain_log_discrepancies(chain)) {
            a.push_back(to_string(v));
        }
        out << what << ": chain " << chain_text(chain) << " = " << type_name(type) << ", log discrepancies "
            << join(a, ", ") << "\n";
    };
    if (p.options.contains("chain")) {
        describe_chain("options.chain", p.options["chain"].get<HJChain>());
    }
    if (p.options.contains("type")) {
        const auto t = p.options["type"];
        describe_chain("options.type", type_to_chain(HJType{t.at(0).get<std::int64_t>(), t.at(1).get<std::int64_t>()}));
    }
    const auto pair = build_pair(p);
    for (std::size_t i = 0; i < pair.chains.size(); ++i) {
        describe_chain(pair.chain_host(i) + " [" + join(pair.chains[i], ", ") + "]", pair.chain_weights(i));
    }
    if (pair.chains.empty() && !p.options.contains("chain") && !p.options.contains("type")) {
        out << "no singularities\n";
    }
    return {out.str(), 0, {}};
}

CommandResult run_dot(const Problem& p)
{
    const auto g = p.script.empty() ? build_pair(p).resolution : build_concatenation(p).graph;
    const auto dot = emit_dot(g);
    return {dot, 0, dot};
}

CommandResult run_concat(const Problem& p)
{
    std::ostringstream out;
    const auto parts = concat_parts(p);
    std::size_t total = 0;
    std::vector<std::string> counts;
    for (const auto& part : parts) {
        const auto n = part.script.empty() ? 0 : factorize(part).link_count();
        counts.push_back(std::to_string(n));
        total += n;
    }
    const auto merged = build_concatenation(p);
    const auto seq = factorize(merged);
    out << "parts: " << join(counts, " + ") << " = " << total << " links\n";
    out << describe_sequence(merged, seq);
    const bool matches = seq.link_count() == total;
    out << "concatenation of the parts: " << (matches ? "yes" : "no") << "\n";
    return {out.str(), matches ? 0 : 2, {}};
}

} // namespace

std::string emit_dot(const DualGraph& g)
{
    std::vector<const CurveVertex*> order;
    for (const auto& [id, v] : g.vertices()) {
        order.push_back(&v);
    }
    std::sort(order.begin(), order.end(), [](const CurveVertex* x, const CurveVertex* y) {
        return std::make_tuple(kind_rank(x->kind), x->birth_index, x->id)
               < std::make_tuple(kind_rank(y->kind), y->birth_index, y->id);
    });
    std::ostringstream out;
    out << "graph boundary {\n";
    std::set<CurveId> chain_curves;
    for (const auto* v : order) {
        if (v->kind == CurveKind::chain) {
            chain_curves.insert(v->id);
        }
    }
    auto node_line = [&](const CurveVertex& v) {
        return quoted(v.id) + " [label=" + quoted(v.id + " (" + std::to_string(v.self_int) + ")") + "];\n";
    };
    for (const auto* v : order) {
        if (v->kind != CurveKind::chain) {
            out << "  " << node_line(*v);
        }
    }
    const auto clusters = components(g, chain_curves);
    for (std::size_t i = 0; i < clusters.size(); ++i) {
        out << "  subgraph cluster_" << i + 1 << " {\n    style=dashed;\n";
        for (const auto* v : order) {
            if (std::find(clusters[i].begin(), clusters[i].end(), v->id) != clusters[i].end()) {
                out << "    " << node_line(*v);
            }
        }
        out << "  }\n";
    }
    for (const auto& [a, b] : g.edges()) {
        out << "  " << quoted(a) << " -- " << quoted(b) << ";\n";
    }
    out << "}\n";
    return out.str();
}

std::vector<std::string> command_names()
{
    return {"validate", "ledger", "factorize", "hj", "dot", "concat"};
}

CommandResult run_command(const std::string& command, const Problem& p)
{
    if (command == "validate") {
        return run_validate(p);
    }
    if (command == "ledger") {
        return run_ledger(p);
    }
    if (command == "factorize") {
        return run_factorize(p);
    }
    if (command == "hj") {
        return run_hj(p);
    }
    if (command == "dot") {
        return run_dot(p);
    }
    if (command == "concat") {
        return run_concat(p);
    }
    throw Error(ErrorKind::UnknownCommand, "unknown command '" + command + "'");
}

} // namespace logsark
