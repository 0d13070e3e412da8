#include "logsark/problem.hpp"

#include "logsark/error.hpp"
#include "logsark/factor.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace logsark {

using nlohmann::json;

bool ConcatEntry::operator==(const ConcatEntry& other) const
{
    if (!problem || !other.problem) {
        return problem == other.problem;
    }
    return *problem == *other.problem;
}

bool Problem::operator==(const Problem& other) const
{
    return base_rank == other.base_rank && boundary == other.boundary && edges == other.edges
           && script == other.script && landing == other.landing && concat == other.concat
           && options == other.options;
}

namespace {

[[noreturn]] void schema_error(const std::string& path, const std::string& what)
{
    throw Error(ErrorKind::SchemaError, path + ": " + what);
}

void allow_keys(const json& obj, const std::string& path, std::initializer_list<const char*> keys)
{
    for (const auto& [key, value] : obj.items()) {
        bool known = false;
        for (const char* k : keys) {
            known = known || key == k;
        }
        if (!known) {
            schema_error(path.empty() ? key : path + "." + key, "unknown field");
        }
    }
}

const json& require_object(const json& v, const std::string& path)
{
    if (!v.is_object()) {
        schema_error(path, "expected an object");
    }
    return v;
}

const json& require_array(const json& v, const std::string& path)
{
    if (!v.is_array()) {
        schema_error(path, "expected a list");
    }
    return v;
}

const json& field(const json& obj, const std::string& key, const std::string& path)
{
    const auto it = obj.find(key);
    if (it == obj.end()) {
        schema_error(path.empty() ? key : path + "." + key, "missing field '" + key + "'");
    }
    return *it;
}

int as_int(const json& v, const std::string& path)
{
    if (!v.is_number_integer()) {
        schema_error(path, "expected an integer");
    }
    const auto value = v.get<std::int64_t>();
    if (value < INT32_MIN || value > INT32_MAX) {
        schema_error(path, "integer out of range");
    }
    return static_cast<int>(value);
}

std::string as_string(const json& v, const std::string& path)
{
    if (!v.is_string() || v.get<std::string>().empty()) {
        schema_error(path, "expected a nonempty string");
    }
    return v.get<std::string>();
}

std::string at(const std::string& path, std::size_t i)
{
    return path + "[" + std::to_string(i) + "]";
}

SingularitySpec parse_sing(const json& v, const std::string& path)
{
    require_object(v, path);
    allow_keys(v, path, {"chain", "type", "names"});
    SingularitySpec s;
    const bool has_chain = v.contains("chain");
    const bool has_type = v.contains("type");
    if (has_chain == has_type) {
        schema_error(path, "give exactly one of 'chain' or 'type'");
    }
    if (has_chain) {
        const auto& c = require_array(v["chain"], path + ".chain");
        for (std::size_t i = 0; i < c.size(); ++i) {
            s.chain.push_back(as_int(c[i], at(path + ".chain", i)));
        }
        check_chain(s.chain);
    } else {
        const auto& t = require_array(v["type"], path + ".type");
        if (t.size() != 2) {
            schema_error(path + ".type", "expected [n, q]");
        }
        HJType type{as_int(t[0], path + ".type[0]"), as_int(t[1], path + ".type[1]")};
        s.chain = type_to_chain(type);
        s.type = type;
    }
    if (v.contains("names")) {
        const auto& n = require_array(v["names"], path + ".names");
        for (std::size_t i = 0; i < n.size(); ++i) {
            s.names.push_back(as_string(n[i], at(path + ".names", i)));
        }
        if (s.names.size() != s.chain.size()) {
            schema_error(path + ".names", "expected one name per chain curve");
        }
    }
    return s;
}

CurveId chain_curve_name(const BoundarySpec& b, std::size_t k, std::size_t j)
{
    const auto& s = b.sings[k];
    if (!s.names.empty()) {
        return s.names[j];
    }
    return b.name + "_s" + std::to_string(k + 1) + "_" + std::to_string(j + 1);
}

void check_reference(const std::set<CurveId>& defined, const CurveId& name, const std::string& path)
{
    if (!defined.count(name)) {
        throw Error(ErrorKind::UnknownReference, path + ": no curve named '" + name + "'");
    }
}

Problem parse_problem(const json& root, const std::string& base_dir, const std::string& path);

ConcatEntry parse_concat_entry(const json& v, const std::string& base_dir, const std::string& path)
{
    require_object(v, path);
    allow_keys(v, path, {"file", "problem"});
    ConcatEntry entry;
    if (v.contains("file") == v.contains("problem")) {
        schema_error(path, "give exactly one of 'file' or 'problem'");
    }
    if (v.contains("file")) {
        entry.file = as_string(v["file"], path + ".file");
        const auto full = (std::filesystem::path(base_dir) / *entry.file).string();
        entry.problem = std::make_shared<const Problem>(load_problem_file(full));
    } else {
        entry.problem = std::make_shared<const Problem>(parse_problem(v["problem"], base_dir, path + ".problem"));
    }
    return entry;
}

Problem parse_problem(const json& root, const std::string& base_dir, const std::string& path)
{
    const auto sub = [&](const std::string& key) { return path.empty() ? key : path + "." + key; };
    require_object(root, path.empty() ? "problem" : path);
    allow_keys(root, path, {"pair", "script", "landing", "concat", "options"});
    Problem p;

    const auto& pair = require_object(field(root, "pair", path), sub("pair"));
    allow_keys(pair, sub("pair"), {"base_rank", "boundary", "edges"});
    p.base_rank = as_int(field(pair, "base_rank", sub("pair")), sub("pair.base_rank"));
    if (p.base_rank < 1) {
        schema_error(sub("pair.base_rank"), "must be at least 1");
    }
    const auto& boundary = require_array(field(pair, "boundary", sub("pair")), sub("pair.boundary"));
    if (boundary.empty()) {
        schema_error(sub("pair.boundary"), "at least one boundary curve is required");
    }
    std::set<CurveId> defined;
    for (std::size_t i = 0; i < boundary.size(); ++i) {
        const auto bpath = at(sub("pair.boundary"), i);
        const auto& b = require_object(boundary[i], bpath);
        allow_keys(b, bpath, {"name", "self_int", "sings"});
        BoundarySpec spec;
        spec.name = as_string(field(b, "name", bpath), bpath + ".name");
        spec.self_int = as_int(field(b, "self_int", bpath), bpath + ".self_int");
        if (b.contains("sings")) {
            const auto& sings = require_array(b["sings"], bpath + ".sings");
            for (std::size_t k = 0; k < sings.size(); ++k) {
                spec.sings.push_back(parse_sing(sings[k], at(bpath + ".sings", k)));
            }
        }
        p.boundary.push_back(std::move(spec));
    }
    for (const auto& b : p.boundary) {
        if (!defined.insert(b.name).second) {
            schema_error(sub("pair.boundary"), "curve '" + b.name + "' defined twice");
        }
        for (std::size_t k = 0; k < b.sings.size(); ++k) {
            for (std::size_t j = 0; j < b.sings[k].chain.size(); ++j) {
                const auto name = chain_curve_name(b, k, j);
                if (!defined.insert(name).second) {
                    schema_error(sub("pair.boundary"), "curve '" + name + "' defined twice");
                }
            }
        }
    }
    if (pair.contains("edges")) {
        const auto& edges = require_array(pair["edges"], sub("pair.edges"));
        for (std::size_t i = 0; i < edges.size(); ++i) {
            const auto epath = at(sub("pair.edges"), i);
            const auto& e = require_array(edges[i], epath);
            if (e.size() != 2) {
                schema_error(epath, "expected [name, name]");
            }
            std::pair<CurveId, CurveId> edge{as_string(e[0], epath + "[0]"), as_string(e[1], epath + "[1]")};
            for (const auto& name : {edge.first, edge.second}) {
                bool strict = false;
                for (const auto& b : p.boundary) {
                    strict = strict || b.name == name;
                }
                if (!strict) {
                    throw Error(ErrorKind::UnknownReference, epath + ": no boundary curve named '" + name + "'");
                }
            }
            p.edges.push_back(std::move(edge));
        }
    }

    const auto& script = require_array(field(root, "script", path), sub("script"));
    for (std::size_t k = 0; k < script.size(); ++k) {
        const auto spath = at(sub("script"), k);
        const auto& s = require_object(script[k], spath);
        allow_keys(s, spath, {"center", "h_mult", "name"});
        ScriptStep step;
        const auto& c = require_object(field(s, "center", spath), spath + ".center");
        const auto cpath = spath + ".center";
        if (c.contains("node")) {
            allow_keys(c, cpath, {"node"});
            const auto& n = require_array(c["node"], cpath + ".node");
            if (n.size() != 2) {
                schema_error(cpath + ".node", "expected [name, name]");
            }
            NodePoint node{as_string(n[0], cpath + ".node[0]"), as_string(n[1], cpath + ".node[1]")};
            check_reference(defined, node.a, cpath + ".node[0]");
            check_reference(defined, node.b, cpath + ".node[1]");
            step.center = node;
        } else if (c.contains("interior")) {
            allow_keys(c, cpath, {"interior", "point"});
            InteriorPoint point{as_string(c["interior"], cpath + ".interior"),
                                as_string(field(c, "point", cpath), cpath + ".point")};
            check_reference(defined, point.curve, cpath + ".interior");
            step.center = point;
        } else {
            schema_error(cpath, "expected 'interior' or 'node'");
        }
        if (s.contains("h_mult")) {
            step.h_mult = as_int(s["h_mult"], spath + ".h_mult");
            if (step.h_mult < 0) {
                schema_error(spath + ".h_mult", "must be nonnegative");
            }
        }
        if (s.contains("name")) {
            step.name = as_string(s["name"], spath + ".name");
        }
        const CurveId created = step.name.value_or("E" + std::to_string(k + 1));
        if (!defined.insert(created).second) {
            schema_error(spath + ".name", "curve '" + created + "' defined twice");
        }
        p.script.push_back(std::move(step));
    }

    if (root.contains("landing")) {
        p.landing = as_string(root["landing"], sub("landing"));
    }
    if (root.contains("concat")) {
        const auto& list = require_array(root["concat"], sub("concat"));
        for (std::size_t i = 0; i < list.size(); ++i) {
            p.concat.push_back(parse_concat_entry(list[i], base_dir, at(sub("concat"), i)));
        }
    }
    if (root.contains("options")) {
        p.options = require_object(root["options"], sub("options"));
    }
    return p;
}

} // namespace

Problem load_problem(const std::string& text, const std::string& base_dir)
{
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        std::size_t line = 1;
        std::size_t column = 1;
        const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
        for (std::size_t i = 0; i < end; ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        throw Error(ErrorKind::ParseError,
                    "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + e.what());
    }
    return parse_problem(root, base_dir, "");
}

Problem load_problem_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorKind::ParseError, "cannot read '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    const auto dir = std::filesystem::path(path).parent_path();
    return load_problem(buffer.str(), dir.empty() ? "." : dir.string());
}

json problem_to_json(const Problem& p)
{
    json boundary = json::array();
    for (const auto& b : p.boundary) {
        json curve{{"name", b.name}, {"self_int", b.self_int}};
        if (!b.sings.empty()) {
            json sings = json::array();
            for (const auto& s : b.sings) {
                json entry = json::object();
                if (s.type) {
                    entry["type"] = {s.type->n, s.type->q};
                } else {
                    entry["chain"] = s.chain;
                }
                if (!s.names.empty()) {
                    entry["names"] = s.names;
                }
                sings.push_back(std::move(entry));
            }
            curve["sings"] = std::move(sings);
        }
        boundary.push_back(std::move(curve));
    }
    json pair{{"base_rank", p.base_rank}, {"boundary", std::move(boundary)}};
    if (!p.edges.empty()) {
        json edges = json::array();
        for (const auto& [a, b] : p.edges) {
            edges.push_back({a, b});
        }
        pair["edges"] = std::move(edges);
    }
    json script = json::array();
    for (const auto& step : p.script) {
        json center;
        if (const auto* point = std::get_if<InteriorPoint>(&step.center)) {
            center = {{"interior", point->curve}, {"point", point->label}};
        } else {
            const auto& node = std::get<NodePoint>(step.center);
            center = {{"node", {node.a, node.b}}};
        }
        json entry{{"center", std::move(center)}, {"h_mult", step.h_mult}};
        if (step.name) {
            entry["name"] = *step.name;
        }
        script.push_back(std::move(entry));
    }
    json root{{"pair", std::move(pair)}, {"script", std::move(script)}};
    if (p.landing) {
        root["landing"] = *p.landing;
    }
    if (!p.concat.empty()) {
        json list = json::array();
        for (const auto& entry : p.concat) {
            if (entry.file) {
                list.push_back({{"file", *entry.file}});
            } else {
                list.push_back({{"problem", problem_to_json(*entry.problem)}});
            }
        }
        root["concat"] = std::move(list);
    }
    if (!p.options.empty()) {
        root["options"] = p.options;
    }
    return root;
}

std::string render_problem(const Problem& p)
{
    return problem_to_json(p).dump(2) + "\n";
}

SurfacePair build_pair(const Problem& p)
{
    DualGraph g;
    std::set<CurveId> strict;
    std::vector<std::vector<CurveId>> chains;
    for (const auto& b : p.boundary) {
        g = g.with_curve(b.name, b.self_int, CurveKind::boundary);
        strict.insert(b.name);
    }
    for (const auto& [a, b] : p.edges) {
        g = g.with_edge(a, b);
    }
    for (const auto& b : p.boundary) {
        for (std::size_t k = 0; k < b.sings.size(); ++k) {
            std::vector<CurveId> chain;
            CurveId previous = b.name;
            for (std::size_t j = 0; j < b.sings[k].chain.size(); ++j) {
                const auto name = chain_curve_name(b, k, j);
                g = g.with_curve(name, -b.sings[k].chain[j], CurveKind::chain).with_edge(previous, name);
                chain.push_back(name);
                previous = name;
            }
            chains.push_back(std::move(chain));
        }
    }
    return make_pair(std::move(g), std::move(strict), std::move(chains), p.base_rank);
}

MarkedResolution build_resolution(const Problem& p)
{
    return run_script(build_pair(p), p.script, p.landing);
}

std::vector<MarkedResolution> concat_parts(const Problem& p)
{
    std::vector<MarkedResolution> parts;
    parts.push_back(p.script.empty() ? identity_resolution(build_pair(p)) : build_resolution(p));
    for (const auto& entry : p.concat) {
        parts.push_back(build_concatenation(*entry.problem));
    }
    return parts;
}

MarkedResolution build_concatenation(const Problem& p)
{
    const auto parts = concat_parts(p);
    MarkedResolution merged = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) {
        merged = concat_general_position(merged, parts[i]);
    }
    return merged;
}

namespace {

ScriptStep interior(const CurveId& curve, const std::string& label, int h, const CurveId& name)
{
    return ScriptStep{InteriorPoint{curve, label}, h, name};
}

ScriptStep node(const CurveId& a, const CurveId& b, int h, const CurveId& name)
{
    return ScriptStep{NodePoint{a, b}, h, name};
}

Problem quadric()
{
    Problem p;
    p.base_rank = 2;
    p.boundary = {BoundarySpec{"D", 2, {}}};
    p.script = {interior("D", "p", 1, "C_1"), node("C_1", "D", 1, "C_2"), node("C_2", "D", 1, "C_3"),
                interior("C_3", "q", 1, "C_4")};
    p.landing = "r";
    return p;
}

Problem reversion_sigma()
{
    Problem p;
    p.base_rank = 6;
    p.boundary = {BoundarySpec{"B", 1, {SingularitySpec{{3, 2}, std::nullopt, {"C_1", "C_2"}}}}};
    p.script = {interior("B", "p", 0, "Aux"), node("Aux", "B", 0, "E_1"), node("Aux", "E_1", 0, "E_2")};
    p.landing = "s";
    return p;
}

Problem reversion_h2()
{
    Problem p;
    p.base_rank = 5;
    p.boundary = {BoundarySpec{"B", 2, {SingularitySpec{{3}, HJType{3, 1}, {"A"}}}}};
    p.script = {node("B", "A", 0, "G_1"), node("B", "G_1", 0, "G_2"), node("B", "G_2", 0, "G_3"),
                interior("G_3", "t", 0, "G_4")};
    p.landing = "u";
    return p;
}

Problem reversion_sigma_inverse()
{
    Problem p;
    p.base_rank = 5;
    p.boundary = {BoundarySpec{"E_2", 2, {SingularitySpec{{3}, std::nullopt, {"Aux"}}}}};
    p.script = {interior("E_2", "q", 0, "C_2"), node("C_2", "E_2", 0, "C_1"), node("C_1", "E_2", 0, "E_1"),
                node("C_1", "E_1", 0, "B")};
    p.landing = "v";
    return p;
}

Problem reversion_h0()
{
    Problem p = reversion_sigma();
    p.concat = {ConcatEntry{std::nullopt, std::make_shared<const Problem>(reversion_h2())},
                ConcatEntry{std::nullopt, std::make_shared<const Problem>(reversion_sigma_inverse())}};
    return p;
}

Problem jung(int d)
{
    if (d < 2 || d > 64) {
        throw Error(ErrorKind::UnknownReference, "Jung tower degree must lie in 2..64, got " + std::to_string(d));
    }
    Problem p;
    p.base_rank = 1;
    p.boundary = {BoundarySpec{"L", 1, {}}};
    p.script.push_back(interior("L", "p", d - 1, "F"));
    p.script.push_back(node("F", "L", 1, "E_1"));
    for (int j = 2; j <= d - 1; ++j) {
        p.script.push_back(node("E_" + std::to_string(j - 1), "F", 1, "E_" + std::to_string(j)));
    }
    for (int j = d; j <= 2 * d - 2; ++j) {
        p.script.push_back(interior("E_" + std::to_string(j - 1), "p", 1, "E_" + std::to_string(j)));
    }
    p.landing = "r";
    return p;
}

} // namespace

Problem builtin_fixture(const std::string& name)
{
    if (name == "quadric") {
        return quadric();
    }
    if (name == "reversion-sigma") {
        return reversion_sigma();
    }
    if (name == "reversion-h2") {
        return reversion_h2();
    }
    if (name == "reversion-sigma-inverse") {
        return reversion_sigma_inverse();
    }
    if (name == "reversion-h0") {
        return reversion_h0();
    }
    const std::string prefix = "jung-d=";
    if (name.rfind(prefix, 0) == 0) {
        const auto digits = name.substr(prefix.size());
        if (!digits.empty() && digits.size() <= 3 && digits.find_first_not_of("0123456789") == std::string::npos) {
            return jung(std::stoi(digits));
        }
    }
    throw Error(ErrorKind::UnknownReference, "no builtin fixture named '" + name + "'");
}

std::vector<std::string> builtin_fixture_names()
{
    std::vector<std::string> names{"quadric", "reversion-sigma", "reversion-h2", "reversion-sigma-inverse",
                                   "reversion-h0"};
    for (int d = 2; d <= 6; ++d) {
        names.push_back("jung-d=" + std::to_string(d));
    }
    return names;
}

} // namespace logsark
