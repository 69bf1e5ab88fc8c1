// growthlab: batch front end for growth sequences, bound checks, OEIS b-file
// comparison, hereditary graph classes and witness search.
//
// Exit codes: 0 success/pass, 1 negative verdict (bound fail, witness none,
// disagreement), 2 input error, 3 capacity exceeded, 4 indeterminate search.

#include "growthlab/graph.hpp"
#include "growthlab/group_expr.hpp"
#include "growthlab/io.hpp"
#include "growthlab/partitions.hpp"
#include "growthlab/seq_core.hpp"
#include "growthlab/witness.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace {

using json = nlohmann::ordered_json;
using namespace growthlab;

enum Exit { ok = 0, negative = 1, bad_input = 2, capacity = 3, indeterminate = 4 };

struct RunConfig {
    std::string command;
    std::string format = "json";
    std::size_t max_n = 0;
    std::optional<std::size_t> trunc_m;
    bool oracle_check = false;
    std::size_t oracle_max_n = 5;
    std::string grid;
    unsigned jobs = 1;
    std::uint64_t seed = 0;
    bool deterministic = false;
    std::uint64_t budget_tuples = 10'000'000;
    std::uint64_t budget_nodes = 10'000'000;

    unsigned effective_jobs() const { return deterministic ? 1U : std::max(1U, jobs); }
};

struct Report {
    json config = json::object();
    json results = json::array();
    json telemetry = json::object();
    int exit = Exit::ok;

    void add(json r) { results.push_back(std::move(r)); }
};

json entry(const std::string& name, const std::string& value) { return json{{"name", name}, {"value", value}}; }

json entry(const std::string& name, std::size_t n, const std::string& value) {
    return json{{"name", name}, {"n", std::to_string(n)}, {"value", value}};
}

json bound_json(const BoundReport& r) {
    json j{{"name", to_string(r.kind)}, {"verdict", r.pass ? "pass" : "fail"}};
    if (r.c) j["c"] = to_string(*r.c);
    if (r.d) j["d"] = to_string(*r.d);
    if (r.n0) j["n0"] = std::to_string(*r.n0);
    j["verified_range"] = json::array({std::to_string(r.range_lo), std::to_string(r.range_hi)});
    if (r.first_fail) j["first_fail"] = std::to_string(*r.first_fail);
    if (r.d_estimate) j["d_estimate"] = to_string(*r.d_estimate);
    return j;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

void emit(const RunConfig& cfg, const Report& rep) {
    if (cfg.format == "csv") {
        std::cout << "name,n,value\n";
        for (const auto& r : rep.results) {
            std::string value;
            if (r.contains("value")) value = r["value"].get<std::string>();
            else if (r.contains("verdict")) value = r["verdict"].get<std::string>();
            std::cout << csv_escape(r["name"].get<std::string>()) << ','
                      << (r.contains("n") ? r["n"].get<std::string>() : std::string()) << ',' << csv_escape(value) << '\n';
        }
        return;
    }
    json out;
    out["command"] = cfg.command;
    json config = rep.config;
    config["format"] = cfg.format;
    config["jobs"] = std::to_string(cfg.effective_jobs());
    config["seed"] = std::to_string(cfg.seed);
    config["deterministic"] = cfg.deterministic;
    out["config"] = std::move(config);
    out["results"] = rep.results;
    out["telemetry"] = rep.telemetry;
    std::cout << out.dump(2) << '\n';
}

OrbitBudget orbit_budget(const RunConfig& cfg) {
    OrbitBudget b;
    b.max_tuples = cfg.budget_tuples;
    return b;
}

std::vector<CellularPoint> parse_cellular_grid(const std::string& text, std::vector<Rational>* cs) {
    std::vector<CellularPoint> grid;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        const auto colon = item.find(':');
        if (colon == std::string::npos) {
            cs->push_back(parse_rational(item));
        } else {
            Rational c = parse_rational(item.substr(0, colon));
            grid.push_back({c, parse_rational(item.substr(colon + 1))});
            cs->push_back(c);
        }
    }
    return grid;
}

GroupExpr load_expr(const std::string& file, const std::string& inline_expr) {
    if (!inline_expr.empty()) return parse_expr(inline_expr);
    if (file.empty()) throw input_error("no expression given (file argument or --expr)");
    return parse_expr(io::read_file(file));
}

// ---------------------------------------------------------------------------

int cmd_seq(const RunConfig& cfg, const std::string& file, const std::string& inline_expr, Report& rep) {
    rep.config["input"] = inline_expr.empty() ? file : inline_expr;
    rep.config["max_n"] = std::to_string(cfg.max_n);
    rep.config["oracle_check"] = cfg.oracle_check;
    const GroupExpr e = load_expr(file, inline_expr);
    const OrbitBudget budget = orbit_budget(cfg);
    rep.config["expr"] = e.to_string();
    rep.add(entry("classification", to_string(classify(e))));

    const IntSeq l = eval_lseq(e, cfg.max_n, budget);
    const IntSeq s = stirling_transform(l);
    for (std::size_t n = 0; n <= cfg.max_n; ++n) rep.add(entry("l", n, l.values[n].str()));
    for (std::size_t n = 0; n <= cfg.max_n; ++n) rep.add(entry("s", n, s.values[n].str()));

    if (cfg.oracle_check) {
        std::uint64_t visited = 0;
        bool all_agree = true;
        const std::size_t top = std::min(cfg.max_n, cfg.oracle_max_n);
        rep.telemetry["oracle_note"] = "truncation agreement at m and m+1 is a verification heuristic";
        for (std::size_t n = 0; n <= top; ++n) {
            try {
                const std::size_t m = cfg.trunc_m.value_or(std::max<std::size_t>(n, 1));
                auto a = count_orbits_injective(truncate_expr(e, m), n, budget);
                auto b = count_orbits_injective(truncate_expr(e, m + 1), n, budget);
                visited += a.tuples_visited + b.tuples_visited;
                const bool agree = a.count == l.values[n] && b.count == l.values[n];
                all_agree = all_agree && agree;
                json r = entry("oracle", n, agree ? "agree" : "disagree");
                r["oracle"] = json{{"m", std::to_string(m)},
                                   {"at_m", a.count.str()},
                                   {"at_m_plus_1", b.count.str()},
                                   {"expected", l.values[n].str()}};
                rep.add(std::move(r));
            } catch (const capacity_error& err) {
                json r = entry("oracle", n, "capacity");
                r["partial"] = true;
                r["error"] = err.what();
                rep.add(std::move(r));
                rep.telemetry["oracle_tuples_visited"] = std::to_string(visited);
                return Exit::capacity;
            }
        }
        rep.telemetry["oracle_tuples_visited"] = std::to_string(visited);
        if (!all_agree) return Exit::negative;
    }
    return Exit::ok;
}

int cmd_bounds(const RunConfig& cfg, const std::string& file, const std::string& inline_expr, Report& rep) {
    rep.config["input"] = inline_expr.empty() ? file : inline_expr;
    rep.config["max_n"] = std::to_string(cfg.max_n);
    rep.config["grid"] = cfg.grid;
    const GroupExpr e = load_expr(file, inline_expr);
    rep.config["expr"] = e.to_string();

    std::vector<Rational> cs;
    std::vector<CellularPoint> grid = cfg.grid.empty() ? default_cellular_grid() : parse_cellular_grid(cfg.grid, &cs);
    if (cfg.grid.empty()) cs = default_factorial_grid();
    if (grid.empty()) grid = default_cellular_grid();
    if (cs.empty()) cs = default_factorial_grid();

    const GapVerdict v = gap_verdict(e, cfg.max_n, grid, cs, orbit_budget(cfg));
    rep.add(entry("classification", to_string(v.classification)));
    if (v.classification == Classification::finite) {
        rep.add(entry("note", "finite; no bounds applicable"));
        return Exit::ok;
    }
    for (const auto& r : v.reports) rep.add(bound_json(r));
    return v.pass() ? Exit::ok : Exit::negative;
}

IntSeq load_seq_json(const std::string& path, const std::string& which) {
    json j;
    try {
        j = json::parse(io::read_file(path));
    } catch (const json::parse_error& e) {
        throw input_error(std::string("sequence JSON: ") + e.what());
    }
    std::vector<std::pair<std::size_t, BigInt>> vals;
    for (const auto& r : j.at("results")) {
        if (r.value("name", "") != which || !r.contains("n")) continue;
        vals.emplace_back(std::stoul(r["n"].get<std::string>()), BigInt(r["value"].get<std::string>()));
    }
    if (vals.empty()) throw input_error("no '" + which + "' entries in " + path);
    std::sort(vals.begin(), vals.end());
    IntSeq s;
    for (std::size_t i = 0; i < vals.size(); ++i) {
        if (vals[i].first != i) throw input_error("sequence JSON is not indexed 0..N");
        s.values.push_back(vals[i].second);
    }
    return s;
}

int cmd_oeis(const RunConfig& cfg, const std::string& seq_json, const std::string& which, const std::string& builtin,
             const std::string& expr_file, const std::string& bfile_path, std::optional<std::int64_t> offset,
             Report& rep) {
    rep.config["bfile"] = bfile_path;
    IntSeq ours;
    std::size_t builtin_n = cfg.max_n ? cfg.max_n : 20;
    if (!builtin.empty()) {
        rep.config["builtin"] = builtin;
        rep.config["max_n"] = std::to_string(builtin_n);
        if (builtin == "bell") ours = IntSeq(bell_prefix(builtin_n));
        else if (builtin == "bell2") ours = IntSeq(bell2_prefix(builtin_n));
        else if (builtin == "trivial-meet") {
            if (builtin_n > 9) throw input_error("trivial-meet brute force is limited to n <= 9");
            for (std::size_t n = 0; n <= builtin_n; ++n) ours.values.push_back(count_trivial_meet_pairs(n));
        } else throw input_error("unknown builtin '" + builtin + "' (bell, bell2, trivial-meet)");
    } else if (!seq_json.empty()) {
        rep.config["seq_json"] = seq_json;
        rep.config["which"] = which;
        ours = load_seq_json(seq_json, which);
    } else if (!expr_file.empty()) {
        rep.config["expr_file"] = expr_file;
        rep.config["which"] = which;
        const GroupExpr e = parse_expr(io::read_file(expr_file));
        ours = which == "s" ? eval_sseq(e, builtin_n, orbit_budget(cfg)) : eval_lseq(e, builtin_n, orbit_budget(cfg));
    } else {
        throw input_error("oeis needs --seq-json, --builtin or --expr-file");
    }

    const auto bfile = io::parse_bfile(io::read_file(bfile_path));
    std::optional<std::int64_t> cap;
    if (cfg.max_n) cap = static_cast<std::int64_t>(cfg.max_n);
    const auto cmp = io::compare_with_bfile(ours, bfile, offset, cap);
    rep.add(entry("agreement", cmp.agree() ? "full" : "mismatch"));
    rep.add(json{{"name", "range"}, {"value", std::to_string(cmp.lo) + ".." + std::to_string(cmp.hi)}});
    rep.add(entry("compared", std::to_string(cmp.compared)));
    rep.add(entry("offset", std::to_string(cmp.offset)));
    for (const auto& m : cmp.mismatches) {
        json r = entry("mismatch", static_cast<std::size_t>(m.n), m.ours.str());
        r["expected"] = m.theirs.str();
        rep.add(std::move(r));
    }
    return cmp.agree() ? Exit::ok : Exit::negative;
}

int cmd_graphs(const RunConfig& cfg, const std::string& sub, const std::string& class_file, const std::string& mode,
               std::size_t n, const std::string& graph_file, std::size_t half_t, bool lax, std::size_t k,
               std::size_t seeds, bool exhaustive, Report& rep) {
    SearchBudget budget;
    budget.max_nodes = cfg.budget_nodes;
    rep.config["subcommand"] = sub;
    if (sub == "count") {
        rep.config["class"] = class_file;
        rep.config["n"] = std::to_string(n);
        ClassSpec spec = io::parse_class_spec(io::read_file(class_file));
        if (mode == "generators") spec.mode = ClassSpec::Mode::generators;
        else if (mode == "forbidden") spec.mode = ClassSpec::Mode::forbidden;
        else if (!mode.empty()) throw input_error("--mode must be generators or forbidden");
        rep.config["mode"] = to_string(spec.mode);
        rep.add(entry("count_labelled", n, count_labelled(spec, n, cfg.effective_jobs(), budget).str()));
        return Exit::ok;
    }
    if (sub == "semiinduced") {
        Graph g;
        if (half_t) {
            g = half_graph(half_t);
            rep.config["graph"] = "half_graph(" + std::to_string(half_t) + ")";
        } else {
            if (graph_file.empty()) throw input_error("semiinduced needs --graph or --half-graph");
            g = io::parse_graph(io::read_file(graph_file));
            rep.config["graph"] = graph_file;
        }
        rep.config["lax"] = lax;
        rep.add(entry("semi_induced_order", std::to_string(semi_induced_order(g, !lax, budget))));
        return Exit::ok;
    }
    if (sub == "fliproundtrip") {
        if (k < 2) throw input_error("--k must be >= 2");
        rep.config["k"] = std::to_string(k);
        std::size_t tried = 0, recovered = 0;
        const Graph target = flipped_paths(k, 3, FlipSpec(k, {}));
        auto run = [&](const FlipSpec& spec) {
            ++tried;
            if (flip_recover(flipped_paths(k, 3, spec)) == target) ++recovered;
        };
        if (exhaustive) {
            const std::size_t pairs = k * (k + 1) / 2;
            if (pairs > 24) throw input_error("exhaustive flip specs limited to k <= 6");
            rep.config["exhaustive"] = true;
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) run(FlipSpec::from_mask(k, mask));
        } else {
            rep.config["seeds"] = std::to_string(seeds);
            for (std::size_t s = 0; s < seeds; ++s) {
                std::mt19937_64 rng(cfg.seed + s);
                run(FlipSpec::random(k, rng));
            }
        }
        rep.add(entry("tried", std::to_string(tried)));
        rep.add(entry("recovered", std::to_string(recovered)));
        rep.add(entry("failures", std::to_string(tried - recovered)));
        return recovered == tried ? Exit::ok : Exit::negative;
    }
    throw input_error("unknown graphs subcommand '" + sub + "' (count, semiinduced, fliproundtrip)");
}

FinRelation fixture_relation(const std::string& spec) {
    // e1e2:<m0> | lt:<a> | empty:<a>:<r>
    std::vector<std::string> parts;
    std::stringstream ss(spec);
    std::string p;
    while (std::getline(ss, p, ':')) parts.push_back(p);
    auto num = [&](std::size_t i) -> std::size_t {
        if (i >= parts.size()) throw input_error("fixture '" + spec + "' is missing a parameter");
        return static_cast<std::size_t>(parse_rational(parts[i]).convert_to<double>());
    };
    if (parts.empty()) throw input_error("empty fixture name");
    if (parts[0] == "e1e2") {
        const std::size_t m0 = num(1);
        FinRelation d(m0 * m0 * m0, 3);
        auto enc = [&](std::size_t a1, std::size_t a2, std::size_t a3) {
            return static_cast<std::uint32_t>((a1 * m0 + a2) * m0 + a3);
        };
        for (std::size_t x = 0; x < m0 * m0 * m0; ++x)
            for (std::size_t y = 0; y < m0 * m0 * m0; ++y)
                for (std::size_t c3 = 0; c3 < m0; ++c3) {
                    const std::size_t x1 = x / (m0 * m0), y2 = (y / m0) % m0;
                    d.insert({static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(y), enc(x1, y2, c3)});
                }
        return d;
    }
    if (parts[0] == "lt") {
        const std::size_t a = num(1);
        FinRelation d(a, 2);
        for (std::uint32_t x = 0; x < a; ++x)
            for (std::uint32_t y = x + 1; y < a; ++y) d.insert({x, y});
        return d;
    }
    if (parts[0] == "empty") return FinRelation(num(1), num(2));
    throw input_error("unknown fixture '" + parts[0] + "' (e1e2:<m0>, lt:<a>, empty:<a>:<r>)");
}

std::string tuple_text(const Tuple& t) {
    std::string s = "(";
    for (std::size_t i = 0; i < t.size(); ++i) s += (i ? " " : "") + std::to_string(t[i]);
    return s + ")";
}

int cmd_witness(const RunConfig& cfg, const std::string& kind, const std::string& relation_file,
                const std::string& fixture, std::size_t size, std::size_t k, Report& rep) {
    rep.config["kind"] = kind;
    rep.config["size"] = std::to_string(size);
    FinRelation d = [&] {
        if (!fixture.empty()) {
            rep.config["fixture"] = fixture;
            return fixture_relation(fixture);
        }
        if (relation_file.empty()) throw input_error("witness needs --relation or --fixture");
        rep.config["relation"] = relation_file;
        return io::parse_relation(io::read_file(relation_file));
    }();
    WitnessBudget budget;
    budget.max_nodes = cfg.budget_nodes;
    budget.jobs = cfg.effective_jobs();

    SearchStatus status;
    std::uint64_t nodes = 0;
    if (kind == "order") {
        auto r = find_order_witness(d, size, budget);
        status = r.status;
        nodes = r.nodes;
        if (r.witness) {
            rep.add(entry("a", tuple_text(r.witness->a)));
            rep.add(entry("b", tuple_text(r.witness->b)));
            rep.add(entry("verified", verify_order_witness(d, *r.witness) ? "true" : "false"));
        }
    } else if (kind == "coding" || kind == "tuplecoding") {
        const std::size_t kk = kind == "coding" ? 1 : k;
        rep.config["k"] = std::to_string(kk);
        auto r = kind == "coding" ? find_coding_witness(d, size, budget) : find_tuple_coding_witness(d, size, kk, budget);
        status = r.status;
        nodes = r.nodes;
        if (r.witness) {
            const auto& w = *r.witness;
            json xs = json::array(), ys = json::array(), zs = json::array();
            for (const auto& t : w.x) xs.push_back(tuple_text(t));
            for (const auto& t : w.y) ys.push_back(tuple_text(t));
            for (auto z : w.z) zs.push_back(std::to_string(z));
            json r1 = entry("X", std::to_string(w.x.size()));
            r1["elements"] = xs;
            json r2 = entry("Y", std::to_string(w.y.size()));
            r2["elements"] = ys;
            json r3 = entry("f", std::to_string(w.z.size()));
            r3["row_major"] = zs;
            rep.add(std::move(r1));
            rep.add(std::move(r2));
            rep.add(std::move(r3));
            std::string why;
            const bool ok = verify_coding_witness(d, w, &why);
            json rv = entry("verified", ok ? "true" : "false");
            if (!ok) rv["reason"] = why;
            rep.add(std::move(rv));
        }
    } else {
        throw input_error("unknown witness kind '" + kind + "' (order, coding, tuplecoding)");
    }
    rep.add(entry("status", to_string(status)));
    rep.telemetry["search_nodes"] = std::to_string(nodes);
    rep.telemetry["budget_nodes"] = std::to_string(cfg.budget_nodes);
    switch (status) {
    case SearchStatus::found: return Exit::ok;
    case SearchStatus::none: return Exit::negative;
    case SearchStatus::indeterminate: return Exit::indeterminate;
    }
    return Exit::ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"growthlab: labelled growth of omega-categorical structures and related searches"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig cfg;
    app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);
    app.add_option("--seed", cfg.seed, "Random seed");
    app.add_flag("--deterministic", cfg.deterministic, "Single worker, fixed reduction order");
    app.add_option("--budget-tuples", cfg.budget_tuples, "Orbit oracle tuple budget")->check(CLI::PositiveNumber);
    app.add_option("--budget-nodes", cfg.budget_nodes, "Backtracking node budget")->check(CLI::PositiveNumber);

    std::string expr_file, inline_expr;
    std::optional<std::size_t> max_n;
    std::size_t trunc_m = 0;

    auto* seq = app.add_subcommand("seq", "l_n and s_n of a group expression");
    seq->add_option("expr_file", expr_file, "File holding the expression");
    seq->add_option("-e,--expr", inline_expr, "Expression text");
    seq->add_option("--max-n", max_n, "Largest n");
    seq->add_option("--trunc-m", trunc_m, "Oracle truncation level (default n)");
    seq->add_flag("--oracle-check", cfg.oracle_check, "Compare with the truncation orbit oracle");
    seq->add_option("--oracle-max-n", cfg.oracle_max_n, "Largest n for the oracle check");

    auto* bounds = app.add_subcommand("bounds", "Growth-bound verdicts for a group expression");
    bounds->add_option("expr_file", expr_file, "File holding the expression");
    bounds->add_option("-e,--expr", inline_expr, "Expression text");
    bounds->add_option("--max-n", max_n, "Largest n (>= 10)");
    bounds->add_option("--grid", cfg.grid, "Comma list of c:d (cellular) or c (factorial) entries");

    std::string seq_json, which = "l", builtin, bfile;
    std::optional<std::int64_t> offset;
    auto* oeis = app.add_subcommand("oeis", "Compare a sequence with an OEIS b-file");
    oeis->add_option("--bfile", bfile, "OEIS b-file")->required();
    oeis->add_option("--seq-json", seq_json, "JSON output of `growthlab seq`");
    oeis->add_option("--which", which, "Sequence to compare (l or s)")->check(CLI::IsMember({"l", "s"}));
    oeis->add_option("--builtin", builtin, "bell, bell2 or trivial-meet");
    oeis->add_option("--expr-file", expr_file, "Evaluate this expression instead");
    oeis->add_option("--offset", offset, "Our index of the b-file's first entry (default: its n)");
    oeis->add_option("--max-n", max_n, "Largest index compared");

    std::string graphs_sub, class_file, mode, graph_file;
    std::size_t graph_n = 4, half_t = 0, flip_k = 6, flip_seeds = 100;
    bool lax = false, exhaustive = false;
    auto* graphs = app.add_subcommand("graphs", "Hereditary graph classes, half-graphs, flip recovery");
    graphs->add_option("subcommand", graphs_sub, "count | semiinduced | fliproundtrip")->required();
    graphs->add_option("--class", class_file, "Class file (count)");
    graphs->add_option("--mode", mode, "Override class mode: generators | forbidden");
    graphs->add_option("--n", graph_n, "Vertex count (count)");
    graphs->add_option("--graph", graph_file, "Graph file (semiinduced)");
    graphs->add_option("--half-graph", half_t, "Use H_t as the graph (semiinduced)");
    graphs->add_flag("--lax", lax, "Semi-induced map need only be injective per side");
    graphs->add_option("--k", flip_k, "Path length (fliproundtrip)");
    graphs->add_option("--seeds", flip_seeds, "Random specs to try (fliproundtrip)");
    graphs->add_flag("--exhaustive", exhaustive, "All flip specs instead of random ones");

    std::string witness_kind, relation_file, fixture;
    std::size_t witness_size = 2, witness_k = 1;
    auto* witness = app.add_subcommand("witness", "Order / coding / tuple-coding witness search");
    witness->add_option("kind", witness_kind, "order | coding | tuplecoding")->required();
    witness->add_option("--relation", relation_file, "Relation file");
    witness->add_option("--fixture", fixture, "Built-in relation: e1e2:<m0>, lt:<a>, empty:<a>:<r>");
    witness->add_option("--size,-m", witness_size, "n for order, m for coding")->check(CLI::PositiveNumber);
    witness->add_option("--k", witness_k, "Tuple length (tuplecoding)")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : Exit::bad_input;
    }

    Report rep;
    int rc = Exit::ok;
    try {
        if (*seq) {
            cfg.command = "seq";
            cfg.max_n = max_n.value_or(10);
            if (trunc_m) cfg.trunc_m = trunc_m;
            if (cfg.max_n < 1) throw input_error("--max-n must be >= 1");
            rc = cmd_seq(cfg, expr_file, inline_expr, rep);
        } else if (*bounds) {
            cfg.command = "bounds";
            cfg.max_n = max_n.value_or(50);
            rc = cmd_bounds(cfg, expr_file, inline_expr, rep);
        } else if (*oeis) {
            cfg.command = "oeis";
            cfg.max_n = max_n.value_or(0);
            rc = cmd_oeis(cfg, seq_json, which, builtin, expr_file, bfile, offset, rep);
        } else if (*graphs) {
            cfg.command = "graphs";
            rc = cmd_graphs(cfg, graphs_sub, class_file, mode, graph_n, graph_file, half_t, lax, flip_k, flip_seeds,
                            exhaustive, rep);
        } else if (*witness) {
            cfg.command = "witness";
            rc = cmd_witness(cfg, witness_kind, relation_file, fixture, witness_size, witness_k, rep);
        }
    } catch (const capacity_error& e) {
        rep.add(json{{"name", "error"}, {"value", e.what()}, {"partial", true}});
        rc = Exit::capacity;
    } catch (const input_error& e) {
        std::cerr << "growthlab: " << e.what() << '\n';
        return Exit::bad_input;
    } catch (const std::invalid_argument& e) {
        std::cerr << "growthlab: " << e.what() << '\n';
        return Exit::bad_input;
    } catch (const std::out_of_range& e) {
        std::cerr << "growthlab: " << e.what() << '\n';
        return Exit::bad_input;
    }
    rep.telemetry["exit_code"] = std::to_string(rc);
    emit(cfg, rep);
    return rc;
}
