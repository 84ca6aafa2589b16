#include "oreg/cli.hpp"

#include <atomic>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "oreg/families.hpp"
#include "oreg/formulas.hpp"
#include "oreg/hypergraph.hpp"
#include "oreg/io.hpp"
#include "oreg/parallel.hpp"

namespace oreg::cli {

namespace {

void report_error(std::ostream& err, const Error& e, const std::string& reason = "") {
    err << "{\"error\":\"" << e.code() << "\"";
    if (!reason.empty()) err << ",\"reason\":\"" << reason << "\"";
    err << ",\"message\":\"" << e.what() << "\"}\n";
}

int exit_code_for(const Error& e) {
    if (dynamic_cast<const TooLarge*>(&e) || dynamic_cast<const SearchBudgetExceeded*>(&e))
        return kExitTooLarge;
    if (dynamic_cast<const PreconditionFailed*>(&e) ||
        dynamic_cast<const NoApplicableMethod*>(&e) || dynamic_cast<const EmptyEdgeSet*>(&e) ||
        dynamic_cast<const ZeroIdeal*>(&e) || dynamic_cast<const UnitIdeal*>(&e))
        return kExitPrecondition;
    return kExitParse;
}

Field parse_field(const std::string& name) {
    if (name == "gf2") return Field::GF2;
    if (name == "rational") return Field::Rational;
    throw BadParameters("unknown field '" + name + "'");
}

void warn_cap(std::ostream& err, int cap) {
    if (cap > 18)
        err << "warning: raising the polarized-variable cap to " << cap
            << " can make the oracle very slow\n";
}

int count_polar_vars(const WeightedOrientedGraph& d) {
    if (d.edges().empty()) return 0;
    return static_cast<int>(polarize(edge_ideal(d)).first.support().size());
}

void print_result(std::ostream& out, const RegularityResult& r) {
    out << "method: " << r.method << "\n";
    out << "reg(I(D)) = " << r.reg_ideal << "\n";
    out << "reg(R/I(D)) = " << r.reg_quotient << "\n";
    if (!r.checked.empty()) {
        out << "preconditions:\n";
        for (const auto& c : r.checked) {
            out << "  " << c.name << ": " << (c.ok ? "ok" : "failed");
            if (!c.note.empty()) out << " (" << c.note << ")";
            out << "\n";
        }
    }
}

void print_betti(std::ostream& out, const BettiTable& table, const std::string& subject) {
    int min_row = 0, max_row = 0, max_col = 0;
    bool first = true;
    for (const auto& [cell, count] : table.entries) {
        int row = cell.second - cell.first;
        if (first) {
            min_row = max_row = row;
            first = false;
        }
        min_row = std::min(min_row, row);
        max_row = std::max(max_row, row);
        max_col = std::max(max_col, cell.first);
    }
    out << "betti numbers of " << subject << " (field " << field_name(table.field) << ")\n";
    out << "      ";
    for (int i = 0; i <= max_col; ++i) out << "\t" << i;
    out << "\n";
    for (int row = min_row; row <= max_row; ++row) {
        out << " " << row << ":";
        for (int i = 0; i <= max_col; ++i) {
            long long b = table.at(i, i + row);
            out << "\t";
            if (b == 0)
                out << ".";
            else
                out << b;
        }
        out << "\n";
    }
    out << "regularity = " << table.regularity() << "\n";
    out << "\ni,j,beta\n";
    for (const auto& [cell, count] : table.entries)
        out << cell.first << "," << cell.second << "," << count << "\n";
}

}  // namespace

int cmd_reg(const RegArgs& args, std::ostream& out, std::ostream& err) {
    try {
        WeightedOrientedGraph d = io::graph_from_file(args.input);
        DispatchOptions opts;
        opts.oracle.field = parse_field(args.field);
        opts.oracle.max_polar_vars = args.max_polar_vars;
        opts.oracle.threads = args.threads;
        warn_cap(err, args.max_polar_vars);
        RegularityResult r = evaluate_with_method(d, args.method, opts);
        print_result(out, r);
        return kExitOk;
    } catch (const PreconditionFailed& e) {
        report_error(err, e, e.reason());
        return kExitPrecondition;
    } catch (const Error& e) {
        report_error(err, e);
        return exit_code_for(e);
    }
}

int cmd_betti(const BettiArgs& args, std::ostream& out, std::ostream& err) {
    try {
        MonomialIdeal ideal = io::ideal_from_file(args.input);
        OracleOptions opts;
        opts.field = parse_field(args.field);
        opts.max_polar_vars = args.max_polar_vars;
        opts.threads = args.threads;
        warn_cap(err, args.max_polar_vars);
        out << "ideal: " << ideal.render() << "\n";
        if (!ideal.is_squarefree())
            out << "polarized to " << polarize(ideal).first.support().size() << " variables\n";
        if (args.quotient)
            print_betti(out, graded_betti_quotient(ideal, opts), "R/I");
        else
            print_betti(out, graded_betti(ideal, opts), "I");
        return kExitOk;
    } catch (const Error& e) {
        report_error(err, e);
        return exit_code_for(e);
    }
}

int cmd_hgraph(const HgraphArgs& args, std::ostream& out, std::ostream& err) {
    try {
        MonomialIdeal ideal = io::ideal_from_file(args.input);
        if (!ideal.is_squarefree()) {
            out << "input is not squarefree; using its polarization\n";
            ideal = polarize(ideal).first;
        }
        LabeledHypergraph h = build_labeled_hypergraph(ideal);
        out << "vertices (minimal generators):\n";
        for (int j = 0; j < h.vertex_count; ++j)
            out << "  " << (j + 1) << ": " << ideal.render_monomial(h.generators[j]) << "\n";
        out << "X: " << h.x_variables.size() << " variables\n";
        auto simples = simple_edges(h);
        std::set<std::vector<int>> simple_set(simples.begin(), simples.end());
        out << "edges:\n";
        for (size_t e = 0; e < h.edges.size(); ++e) {
            out << "  {";
            for (size_t i = 0; i < h.edges[e].size(); ++i)
                out << (i ? "," : "") << h.edges[e][i];
            out << "}  label {";
            for (size_t i = 0; i < h.labels[e].size(); ++i)
                out << (i ? "," : "") << ideal.variables().display(h.labels[e][i]);
            out << "}";
            if (h.edges[e].size() == 1) out << "  closed singleton";
            if (simple_set.count(h.edges[e])) out << "  simple";
            out << "\n";
        }
        bool isolated = has_isolated_simple_edges(h);
        out << "isolated simple edges: " << (isolated ? "yes" : "no") << "\n";
        if (isolated)
            out << "reg(R/I) by simple-edge count = " << reg_via_simple_edges(h) << "\n";
        return kExitOk;
    } catch (const Error& e) {
        report_error(err, e);
        return exit_code_for(e);
    }
}

namespace {

std::map<std::string, std::string> parse_params(const std::string& text) {
    std::map<std::string, std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        auto eq = item.find('=');
        if (eq == std::string::npos) throw BadParameters("expected k=v, got '" + item + "'");
        out[item.substr(0, eq)] = item.substr(eq + 1);
    }
    return out;
}

int int_param(const std::map<std::string, std::string>& params, const std::string& key,
              int fallback, bool required = false) {
    auto it = params.find(key);
    if (it == params.end()) {
        if (required) throw BadParameters("missing parameter '" + key + "'");
        return fallback;
    }
    try {
        return std::stoi(it->second);
    } catch (const std::exception&) {
        throw BadParameters("parameter '" + key + "' must be an integer");
    }
}

std::vector<int> int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ':')) {
        try {
            out.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw BadParameters("expected integer list, got '" + text + "'");
        }
    }
    return out;
}

std::vector<DirectedEdge> edge_list(const std::string& text) {
    std::vector<DirectedEdge> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ':')) {
        auto gt = item.find('>');
        if (gt == std::string::npos)
            throw BadParameters("expected tail>head, got '" + item + "'");
        out.emplace_back(item.substr(0, gt), item.substr(gt + 1));
    }
    return out;
}

std::vector<int> resolve_weights(const std::map<std::string, std::string>& params, int count,
                                 int uniform_fallback) {
    auto it = params.find("wlist");
    if (it != params.end()) return int_list(it->second);
    int w = int_param(params, "w", uniform_fallback);
    return std::vector<int>(count, w);
}

std::vector<int> sink_weights(const std::vector<int>& heavy_positions, int first, int count,
                              int heavy_weight) {
    std::vector<int> out(count, 1);
    for (int p : heavy_positions) {
        int idx = p - first;
        if (idx >= 0 && idx < count) out[idx] = heavy_weight;
    }
    return out;
}

WeightedOrientedGraph generate_family(const std::string& family,
                                      const std::map<std::string, std::string>& params) {
    namespace fam = families;
    if (family == "path") {
        int n = int_param(params, "n", 0, true);
        return fam::naturally_oriented_path(n, resolve_weights(params, n + 1, 1));
    }
    if (family == "cycle") {
        int n = int_param(params, "n", 0, true);
        return fam::naturally_oriented_cycle(n, resolve_weights(params, n, 1));
    }
    if (family == "dumbbell") {
        int n = int_param(params, "n", 0, true);
        int m = int_param(params, "m", 0, true);
        int r = int_param(params, "r", 1);
        return fam::dumbbell(n, m, r, resolve_weights(params, n + m + r - 1, 2));
    }
    if (family == "cycle-with-chords") {
        int n = int_param(params, "n", 0, true);
        auto it = params.find("chords");
        std::vector<DirectedEdge> chords =
            it == params.end() ? std::vector<DirectedEdge>{} : edge_list(it->second);
        return fam::cycle_with_chords(n, chords, resolve_weights(params, n, 2));
    }
    if (family == "join-of-cycles") {
        int n = int_param(params, "n", 0, true);
        int m = int_param(params, "m", 0, true);
        auto it = params.find("cross");
        if (it == params.end()) throw BadParameters("missing parameter 'cross'");
        return fam::join_of_cycles(n, m, edge_list(it->second),
                                   resolve_weights(params, n + m, 2));
    }
    if (family == "complete-mpartite") {
        auto it = params.find("parts");
        if (it == params.end()) throw BadParameters("missing parameter 'parts'");
        std::vector<int> parts = int_list(it->second);
        int total = 0;
        for (int p : parts) total += p;
        auto pair = fam::complete_mpartite(parts, resolve_weights(params, total, 2));
        auto variant = params.find("variant");
        if (variant != params.end() && variant->second == "spanning") return pair.second;
        if (variant != params.end() && variant->second != "full")
            throw BadParameters("variant must be full or spanning");
        return pair.first;
    }
    if (family == "sink-path" || family == "sink-cycle") {
        int n = int_param(params, "n", 0, true);
        auto it = params.find("vplus");
        std::vector<int> heavy = it == params.end() ? std::vector<int>{} : int_list(it->second);
        bool cycle = family == "sink-cycle";
        int first = cycle ? 1 : 0;
        int count = cycle ? n : n + 1;
        std::vector<int> weights;
        auto wl = params.find("wlist");
        if (wl != params.end())
            weights = int_list(wl->second);
        else
            weights = sink_weights(heavy, first, count, int_param(params, "w", 2));
        return cycle ? fam::sink_cycle(n, heavy, weights) : fam::sink_path(n, heavy, weights);
    }
    if (family == "random-property-p") {
        return fam::random_property_p(int_param(params, "seed", 0),
                                      int_param(params, "size", 6),
                                      int_param(params, "wmax", 3));
    }
    throw BadParameters("unknown family '" + family + "'");
}

}  // namespace

int cmd_gen(const GenArgs& args, std::ostream& out, std::ostream& err) {
    try {
        WeightedOrientedGraph d = generate_family(args.family, parse_params(args.params));
        std::string text = io::graph_to_json(d);
        if (args.out_path.empty()) {
            out << text;
        } else {
            std::ofstream file(args.out_path);
            if (!file) throw ParseError("cannot write '" + args.out_path + "'");
            file << text;
        }
        return kExitOk;
    } catch (const Error& e) {
        report_error(err, e);
        return exit_code_for(e);
    }
}

namespace {

struct Instance {
    std::string id;
    WeightedOrientedGraph graph;
};

std::pair<int, int> parse_range(const std::string& text, std::pair<int, int> fallback) {
    if (text.empty()) return fallback;
    auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            int v = std::stoi(text);
            return {v, v};
        }
        return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
    } catch (const std::exception&) {
        throw BadParameters("bad range '" + text + "'");
    }
}

std::string weights_tag(const std::vector<int>& w) {
    std::string out;
    for (size_t i = 0; i < w.size(); ++i) out += (i ? ":" : "") + std::to_string(w[i]);
    return out;
}

// all weight vectors with entries in 1..wmax, first `fixed_ones` entries
// pinned to 1
void enumerate_weight_vectors(int count, int wmax, int fixed_ones,
                              const std::function<void(const std::vector<int>&)>& emit) {
    std::vector<int> w(count, 1);
    while (true) {
        emit(w);
        int i = count - 1;
        while (i >= fixed_ones && w[i] == wmax) w[i--] = 1;
        if (i < fixed_ones) break;
        ++w[i];
    }
}

// subsets of positions [first..last] with no two adjacent; `cyclic` also
// forbids first/last together
void enumerate_nonadjacent_subsets(int first, int last, bool cyclic,
                                   const std::function<void(const std::vector<int>&)>& emit) {
    int count = last - first + 1;
    for (std::uint32_t mask = 0; mask < (1u << count); ++mask) {
        bool ok = true;
        for (int i = 0; i + 1 < count && ok; ++i)
            if ((mask >> i & 1u) && (mask >> (i + 1) & 1u)) ok = false;
        if (cyclic && count > 1 && (mask & 1u) && (mask >> (count - 1) & 1u)) ok = false;
        if (!ok) continue;
        std::vector<int> positions;
        for (int i = 0; i < count; ++i)
            if (mask >> i & 1u) positions.push_back(first + i);
        emit(positions);
    }
}

std::vector<Instance> build_instances(const VerifyArgs& args) {
    namespace fam = families;
    std::vector<Instance> out;
    if (args.family == "path" || args.family == "cycle") {
        bool path = args.family == "path";
        auto [lo, hi] = parse_range(args.n_range, path ? std::make_pair(1, 4)
                                                       : std::make_pair(3, 5));
        for (int n = lo; n <= hi; ++n) {
            int count = path ? n + 1 : n;
            enumerate_weight_vectors(count, args.wmax, path ? 1 : 0,
                                     [&](const std::vector<int>& w) {
                out.push_back({args.family + "[n=" + std::to_string(n) + ",w=" +
                                   weights_tag(w) + "]",
                               path ? fam::naturally_oriented_path(n, w)
                                    : fam::naturally_oriented_cycle(n, w)});
            });
        }
    } else if (args.family == "sink-path" || args.family == "sink-cycle") {
        bool cycle = args.family == "sink-cycle";
        auto [lo, hi] = parse_range(args.n_range, cycle ? std::make_pair(3, 5)
                                                        : std::make_pair(1, 4));
        for (int n = lo; n <= hi; ++n) {
            int first = cycle ? 1 : 0;
            int last = n;
            enumerate_nonadjacent_subsets(first, last, cycle, [&](const std::vector<int>& pos) {
                int heavies = static_cast<int>(pos.size());
                std::vector<int> hw(heavies, 2);
                while (true) {
                    std::vector<int> weights(last - first + 1, 1);
                    for (int i = 0; i < heavies; ++i) weights[pos[i] - first] = hw[i];
                    std::string id = args.family + "[n=" + std::to_string(n) + ",w=" +
                                     weights_tag(weights) + "]";
                    out.push_back({id, cycle ? fam::sink_cycle(n, pos, weights)
                                             : fam::sink_path(n, pos, weights)});
                    int i = heavies - 1;
                    while (i >= 0 && hw[i] == args.wmax) hw[i--] = 2;
                    if (i < 0) break;
                    ++hw[i];
                }
            });
        }
    } else if (args.family == "property-p") {
        auto [lo, hi] = parse_range(args.seeds, {0, 9});
        for (int seed = lo; seed <= hi; ++seed)
            out.push_back({"property-p[seed=" + std::to_string(seed) + "]",
                           fam::random_property_p(static_cast<std::uint64_t>(seed), args.size,
                                                  args.wmax)});
    } else if (args.family == "dumbbell") {
        auto [lo, hi] = parse_range(args.n_range, {3, 3});
        for (int n = lo; n <= hi; ++n) {
            std::vector<int> w(n + args.m + args.r - 1, args.w);
            out.push_back({"dumbbell[n=" + std::to_string(n) + ",m=" + std::to_string(args.m) +
                               ",r=" + std::to_string(args.r) + ",w=" + std::to_string(args.w) +
                               "]",
                           fam::dumbbell(n, args.m, args.r, w)});
        }
    } else if (args.family == "cycle-with-chords") {
        auto [lo, hi] = parse_range(args.n_range, {4, 4});
        for (int n = lo; n <= hi; ++n) {
            std::vector<int> w(n, args.w);
            for (int i = 1; i <= n; ++i)
                for (int j = i + 2; j <= n; ++j) {
                    if (i == 1 && j == n) continue;  // cycle edge
                    Vertex a = "x" + std::to_string(i), b = "x" + std::to_string(j);
                    for (const auto& [tail, head] :
                         {std::make_pair(a, b), std::make_pair(b, a)})
                        out.push_back({"chords[n=" + std::to_string(n) + "," + tail + ">" +
                                           head + "]",
                                       fam::cycle_with_chords(n, {{tail, head}}, w)});
                }
        }
    } else if (args.family == "join-of-cycles") {
        auto [lo, hi] = parse_range(args.n_range, {3, 3});
        for (int n = lo; n <= hi; ++n) {
            std::vector<int> w(n + args.m, args.w);
            std::vector<DirectedEdge> cross;
            int added = 0;
            for (int i = 1; i <= n && added < args.k; ++i)
                for (int j = 1; j <= args.m && added < args.k; ++j, ++added) {
                    Vertex x = "x" + std::to_string(i), y = "y" + std::to_string(j);
                    if ((i + j) % 2 == 0)
                        cross.emplace_back(x, y);
                    else
                        cross.emplace_back(y, x);
                }
            out.push_back({"join[n=" + std::to_string(n) + ",m=" + std::to_string(args.m) +
                               ",k=" + std::to_string(args.k) + "]",
                           fam::join_of_cycles(n, args.m, cross, w)});
        }
    } else if (args.family == "complete-mpartite") {
        std::vector<int> parts = int_list(args.parts);
        int total = 0;
        for (int p : parts) total += p;
        std::vector<int> w(total, args.w);
        out.push_back({"mpartite[parts=" + args.parts + ",w=" + std::to_string(args.w) + "]",
                       fam::complete_mpartite(parts, w).first});
    } else {
        throw BadParameters("unknown family '" + args.family + "'");
    }
    return out;
}

struct VerifyRow {
    std::string id;
    std::string method;
    std::string formula;
    std::string oracle;
    std::string agree;
    long long elapsed_ms = 0;
};

}  // namespace

int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
    try {
        warn_cap(err, args.max_polar_vars);
        std::vector<Instance> instances = build_instances(args);
        std::vector<VerifyRow> rows(instances.size());
        std::atomic<int> disagreements{0};

        bool both = args.field == "both";
        Field primary = both ? Field::GF2 : parse_field(args.field);

        auto run_instance = [&](size_t idx) {
            const Instance& inst = instances[idx];
            VerifyRow row;
            row.id = inst.id;
            auto start = std::chrono::steady_clock::now();

            DispatchOptions dopts;
            dopts.allow_oracle = false;
            std::optional<int> formula;
            try {
                RegularityResult r = dispatch_regularity(inst.graph, dopts);
                row.method = r.method;
                formula = r.reg_quotient;
                row.formula = std::to_string(r.reg_quotient);
            } catch (const Error&) {
                row.method = "none";
            }

            std::optional<int> oracle;
            bool diverged = false;
            if (count_polar_vars(inst.graph) <= args.max_polar_vars) {
                OracleOptions oopts;
                oopts.max_polar_vars = args.max_polar_vars;
                oopts.threads = 1;
                oopts.field = primary;
                MonomialIdeal ideal = edge_ideal(inst.graph);
                int value = regularity_oracle_quotient(ideal, oopts);
                if (both) {
                    oopts.field = Field::Rational;
                    int rational = regularity_oracle_quotient(ideal, oopts);
                    if (rational != value) diverged = true;
                }
                oracle = value;
                row.oracle = std::to_string(value);
            }

            if (diverged) {
                row.agree = "no";
                row.oracle += " (field divergence)";
                ++disagreements;
            } else if (formula && oracle) {
                row.agree = *formula == *oracle ? "yes" : "no";
                if (*formula != *oracle) ++disagreements;
            }
            row.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                                 std::chrono::steady_clock::now() - start)
                                 .count();
            rows[idx] = std::move(row);
        };

        if (args.parallel) {
            parallel_chunks(instances.size(), args.threads,
                            [&](size_t, size_t begin, size_t end) {
                for (size_t i = begin; i < end; ++i) run_instance(i);
            });
        } else {
            for (size_t i = 0; i < instances.size(); ++i) run_instance(i);
        }

        out << "family,instance,method,formula_reg_quotient,oracle_reg_quotient,agree";
        if (args.timings) out << ",elapsed_ms";
        out << "\r\n";
        int compared = 0, agreed = 0, formula_only = 0, no_formula = 0;
        for (const auto& row : rows) {
            out << io::csv_field(args.family) << "," << io::csv_field(row.id) << ","
                << row.method << "," << row.formula << "," << io::csv_field(row.oracle) << ","
                << row.agree;
            if (args.timings) out << "," << row.elapsed_ms;
            out << "\r\n";
            if (row.method == "none") ++no_formula;
            if (!row.formula.empty() && row.oracle.empty()) ++formula_only;
            if (!row.agree.empty()) {
                ++compared;
                if (row.agree == "yes") ++agreed;
            }
        }
        err << "instances: " << rows.size() << ", compared: " << compared
            << ", agree: " << agreed << ", disagree: " << disagreements.load()
            << ", formula-only: " << formula_only << ", no-formula: " << no_formula << "\n";
        return disagreements.load() > 0 ? kExitDisagreement : kExitOk;
    } catch (const Error& e) {
        report_error(err, e);
        return exit_code_for(e);
    }
}

}  // namespace oreg::cli
