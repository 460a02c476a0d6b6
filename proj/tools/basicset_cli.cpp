// Command-line front end: check / decompose / graph / generate / search /
// fixtures over the text and JSON point formats.
//
// Exit codes: 0 basic (or success), 1 non-basic, 2 input error,
// 3 search budget exceeded.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "basicset/core.hpp"
#include "basicset/decide.hpp"
#include "basicset/gen.hpp"
#include "basicset/graphs.hpp"
#include "basicset/io.hpp"
#include "basicset/search.hpp"

using namespace basicset;
using nlohmann::json;

namespace {

constexpr int kBasic = 0;
constexpr int kNonBasic = 1;
constexpr int kInputError = 2;
constexpr int kBudget = 3;

std::string read_input(const std::string& path) {
    if (path == "-") {
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    }
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::string join(const IntVector& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ' ';
        s += v[i].get_str();
    }
    return s;
}

Point3 parse_point_arg(const std::string& text) {
    std::string t = text;
    for (auto& c : t)
        if (c == ',') c = ' ';
    std::istringstream in(t);
    Point3 p;
    std::string extra;
    if (!(in >> p.x >> p.y >> p.z) || (in >> extra)) throw Error("expected a point 'x,y,z', got '" + text + "'");
    return p;
}

Axis parse_axis(const std::string& s) {
    if (s == "x" || s == "X") return Axis::X;
    if (s == "y" || s == "Y") return Axis::Y;
    if (s == "z" || s == "Z") return Axis::Z;
    throw Error("axis must be x, y or z");
}

void emit_points(const PointSet3& set, bool as_json, const std::string& header) {
    if (as_json) {
        std::cout << points_json(set).dump() << '\n';
    } else {
        if (!header.empty()) std::cout << "# " << header << '\n';
        std::cout << format_points_text(set);
    }
}

struct CheckArgs {
    std::string input = "-";
    bool fast = false;
    bool as_json = false;
};

int cmd_check(const CheckArgs& args) {
    CanonicalForm form = parse_points(read_input(args.input));
    const PointSet3& set = form.set;

    std::string route = "oracle: slice-sum rank";
    Verdict verdict = is_basic(set);
    if (args.fast) {
        FastResult fast = fast_is_basic(set);
        if (fast.kind == VerdictKind::Inapplicable) {
            route = "oracle (fast path inapplicable: " + fast.route + ")";
        } else {
            route = fast.route;
            if ((fast.kind == VerdictKind::Basic) != is_basic_verdict(verdict)) {
                throw std::logic_error("fast route disagrees with the oracle");
            }
        }
    }

    const bool basic = is_basic_verdict(verdict);
    if (args.as_json) {
        json out = verdict_json(verdict);
        out["dim"] = set.dim();
        out["size"] = set.size();
        if (args.fast) out["route"] = route;
        std::cout << out.dump() << '\n';
    } else {
        std::cout << "verdict: " << (basic ? "basic" : "nonbasic") << '\n';
        if (args.fast) std::cout << "route: " << route << '\n';
        if (!basic) std::cout << "certificate: " << join(std::get<NonBasic>(verdict).certificate.weights) << '\n';
    }
    return basic ? kBasic : kNonBasic;
}

struct DecomposeArgs {
    std::string input;
    std::string values;
    bool as_json = false;
};

int cmd_decompose(const DecomposeArgs& args) {
    CanonicalForm form = parse_points(read_input(args.input));
    PointFunction f = parse_values(read_input(args.values), form);
    const int dim = form.set.dim();

    auto result = decompose(form.set, f);
    if (auto* d = std::get_if<Decomposition>(&result)) {
        for (const auto& [p, value] : f) {
            if (d->evaluate(p, dim) != value) throw std::logic_error("decomposition failed verification");
        }
        json tables = decomposition_json(*d, form);
        if (args.as_json) {
            json out{{"decomposable", true}, {"verified", true}};
            for (auto it = tables.begin(); it != tables.end(); ++it) out[it.key()] = it.value();
            std::cout << out.dump() << '\n';
        } else {
            std::cout << "decomposable: yes (verified at " << f.size() << " points)\n";
            for (auto it = tables.begin(); it != tables.end(); ++it) {
                std::cout << it.key() << ':';
                for (auto e = it.value().begin(); e != it.value().end(); ++e) {
                    std::cout << ' ' << e.key() << "->" << e.value().get<std::string>();
                }
                std::cout << '\n';
            }
        }
        return kBasic;
    }
    const auto& w = std::get<Witness>(result);
    if (args.as_json) {
        std::cout << json{{"decomposable", false},
                          {"certificate", certificate_json(w.certificate)},
                          {"pairing", rat_string(w.pairing)}}
                         .dump()
                  << '\n';
    } else {
        std::cout << "decomposable: no\n"
                  << "certificate: " << join(w.certificate.weights) << '\n'
                  << "pairing: " << rat_string(w.pairing) << '\n';
    }
    return kNonBasic;
}

struct GraphArgs {
    std::string input = "-";
    bool as_json = false;
};

int cmd_graph(const GraphArgs& args) {
    Graph g = parse_graph(read_input(args.input));
    const bool basic = graph_is_basic(g);
    const bool by_rank = graph_is_basic_rank(g);
    if (basic != by_rank) throw std::logic_error("bipartiteness and rank routes disagree");
    auto comps = bipartite_components(g);
    if (args.as_json) {
        json cj = json::array();
        for (const auto& c : comps) cj.push_back({{"vertices", c.vertices}, {"bipartite", c.bipartite}});
        std::cout << json{{"vertices", g.vertex_count()},
                          {"edges", g.edge_count()},
                          {"basic", basic},
                          {"rank_route", by_rank},
                          {"components", cj}}
                         .dump()
                  << '\n';
    } else {
        std::cout << "graph: " << describe_graph(g) << '\n'
                  << "basic: " << (basic ? "yes" : "no") << " (rank route agrees)\n";
        for (const auto& c : comps) {
            std::cout << "component " << (c.bipartite ? "bipartite" : "odd-cycle") << ':';
            for (auto v : c.vertices) std::cout << ' ' << v;
            std::cout << '\n';
        }
    }
    return basic ? kBasic : kNonBasic;
}

struct GenerateArgs {
    std::string kind;
    int l = 2;
    std::uint64_t seed = 0;
    std::string axis = "z";
    std::int64_t value = 0;
    int max_offset = 1;
    std::string input;
    std::string a;
    std::string b;
    std::int64_t offset = 1;
    std::string split_axis;
    bool as_json = false;
};

int cmd_generate(const GenerateArgs& args) {
    const SliceId slice{parse_axis(args.axis), args.value};
    if (args.kind == "lightning") {
        auto m = closed_lightning(slice, args.l, args.seed);
        emit_points(PointSet3(3, m.vertices()), args.as_json,
                    "closed lightning l=" + std::to_string(args.l) + " seed=" + std::to_string(args.seed));
    } else if (args.kind == "construction") {
        auto c = random_construction(slice, args.l, args.seed, args.max_offset);
        emit_points(c.set, args.as_json,
                    "construction l=" + std::to_string(args.l) + " seed=" + std::to_string(args.seed));
    } else {
        CanonicalForm form = parse_points(read_input(args.input));
        std::optional<Axis> ax;
        if (!args.split_axis.empty()) ax = parse_axis(args.split_axis);
        auto out = boyarov_split(form.set, parse_point_arg(args.a), parse_point_arg(args.b), args.offset, ax);
        emit_points(out, args.as_json, "split of " + args.input);
    }
    return 0;
}

struct SearchArgs {
    std::vector<int> grid{2, 2, 2};
    int max_size = -1;
    std::int64_t sup_bound = 0;
    unsigned workers = 1;
    bool dedup = false;
    std::string format = "csv";
    std::uint64_t budget = std::uint64_t{1} << 27;
    long time_limit_ms = 0;
};

int cmd_search(const SearchArgs& args) {
    GridSpec grid{args.grid[0], args.grid[1], args.grid[2]};
    SearchOptions opt;
    opt.dedup = args.dedup;
    opt.workers = args.workers;
    opt.budget = args.budget;
    if (args.time_limit_ms > 0) opt.time_limit = std::chrono::milliseconds(args.time_limit_ms);
    if (args.sup_bound > 0) opt.sup_bound = args.sup_bound;
    std::size_t max_size = args.max_size < 0 ? grid.cell_count() : static_cast<std::size_t>(args.max_size);
    Survey s = max_weight_survey(grid, max_size, opt);
    std::cout << (args.format == "json" ? survey_json(s) : survey_csv(s));
    return 0;
}

int cmd_fixtures(const std::string& name, bool as_json) {
    auto all = fixtures();
    if (!name.empty()) {
        auto it = all.find(name);
        if (it == all.end()) throw Error("unknown fixture '" + name + "'");
        emit_points(it->second, as_json, name);
        return 0;
    }
    if (as_json) {
        json out = json::object();
        for (const auto& [n, set] : all) out[n] = points_json(set);
        std::cout << out.dump() << '\n';
    } else {
        for (const auto& [n, set] : all) emit_points(set, false, n);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Decide whether finite lattice point sets are basic, with certificates"};
    app.require_subcommand(1);

    CheckArgs check;
    auto* sc = app.add_subcommand("check", "Decide basicness of a point set");
    sc->add_option("input", check.input, "Point file (text or JSON), '-' for stdin");
    sc->add_flag("--fast", check.fast, "Try peeling and the slice graph before the rank oracle");
    sc->add_flag("--json", check.as_json, "Machine-readable output");

    DecomposeArgs dec;
    auto* sd = app.add_subcommand("decompose", "Split a function into per-axis functions or prove it impossible");
    sd->add_option("input", dec.input, "Point file")->required();
    sd->add_option("values", dec.values, "Value file: 'x y z value' lines or {\"values\":[...]}")->required();
    sd->add_flag("--json", dec.as_json, "Machine-readable output");

    GraphArgs gr;
    auto* sg = app.add_subcommand("graph", "Decide basicness of a graph ('n m' then 'u v' lines)");
    sg->add_option("input", gr.input, "Graph file, '-' for stdin");
    sg->add_flag("--json", gr.as_json, "Machine-readable output");

    GenerateArgs gen;
    auto* sgen = app.add_subcommand("generate", "Generate non-basic sets");
    sgen->add_option("kind", gen.kind, "lightning | construction | boyarov")
        ->required()
        ->check(CLI::IsMember({"lightning", "construction", "boyarov"}));
    sgen->add_option("--l", gen.l, "Half-length of the closed lightning (>= 2)");
    sgen->add_option("--seed", gen.seed, "Generator seed");
    sgen->add_option("--axis", gen.axis, "Normal axis of the lightning's slice");
    sgen->add_option("--value", gen.value, "Coordinate of the lightning's slice");
    sgen->add_option("--max-offset", gen.max_offset, "Largest group translation (construction)");
    sgen->add_option("--input", gen.input, "Non-basic point file (boyarov)");
    sgen->add_option("--a", gen.a, "Kept point 'x,y,z' (boyarov)");
    sgen->add_option("--b", gen.b, "Moved point 'x,y,z' (boyarov)");
    sgen->add_option("--offset", gen.offset, "Translation length (boyarov)");
    sgen->add_option("--split-axis", gen.split_axis, "Translation axis (boyarov; default lowest shared)");
    sgen->add_flag("--json", gen.as_json, "Emit JSON point format");

    SearchArgs srch;
    auto* ss = app.add_subcommand("search", "Enumerate minimal non-basic subsets of a grid and survey weights");
    ss->add_option("--grid", srch.grid, "Grid extents nx ny nz")->expected(3);
    ss->add_option("--max-size", srch.max_size, "Largest subset size (default: whole grid)");
    ss->add_option("--sup-bound", srch.sup_bound, "Largest certificate sup-norm to try");
    ss->add_option("--workers", srch.workers, "Worker threads");
    ss->add_flag("--dedup", srch.dedup, "One representative per grid symmetry class");
    ss->add_option("--format", srch.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
    ss->add_flag("--json", [&](std::int64_t) { srch.format = "json"; }, "Same as --format json");
    ss->add_option("--budget", srch.budget, "Maximum number of candidate subsets");
    ss->add_option("--time-limit-ms", srch.time_limit_ms, "Abort the enumeration after this many milliseconds");

    std::string fixture_name;
    bool fixture_json = false;
    auto* sf = app.add_subcommand("fixtures", "Print the named example sets");
    sf->add_option("name", fixture_name, "example1 | ex2 | cube8 (default: all)");
    sf->add_flag("--json", fixture_json, "Emit JSON point format");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kInputError;
    }

    try {
        if (*sc) return cmd_check(check);
        if (*sd) return cmd_decompose(dec);
        if (*sg) return cmd_graph(gr);
        if (*sgen) return cmd_generate(gen);
        if (*ss) return cmd_search(srch);
        if (*sf) return cmd_fixtures(fixture_name, fixture_json);
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << '\n';
        return kBudget;
    } catch (const ParseError& e) {
        std::cerr << "parse error at " << e.what() << '\n';
        return kInputError;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    }
    return kInputError;
}
