// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "basicset/decide.hpp"
#include "basicset/gen.hpp"
#include "basicset/graphs.hpp"
#include "basicset/search.hpp"
#include "support.hpp"

using namespace basicset;
using Clock = std::chrono::steady_clock;

namespace {

// Runtime limits in seconds.
constexpr double kFixtureLimit = 1.0;
constexpr double kGraphLimit = 60.0;
constexpr double kBridgeLimit = 120.0;
constexpr double kPlanarLimit = 120.0;

constexpr int kRandomGraphs = 10000;
constexpr std::size_t kRandomGraphMaxVertices = 12;
constexpr int kRandomSubsets = 10000;
constexpr std::size_t kRandomSubsetMaxSize = 8;
constexpr int kGeneratorSamples = 100;
constexpr int kGeneratorMaxL = 5;
constexpr int kGeneratorMaxOffset = 3;

struct Outcome {
    bool pass;
    std::string detail;
};

int failures = 0;

void criterion(int n, const std::string& name, double limit, const std::function<Outcome()>& body) {
    auto start = Clock::now();
    Outcome out;
    try {
        out = body();
    } catch (const std::exception& e) {
        out = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (limit > 0 && secs >= limit) {
        out.pass = false;
        out.detail += " (over the " + std::to_string(limit) + " s limit)";
    }
    if (!out.pass) ++failures;
    std::printf("%s criterion %d %s: %s [%.3f s]\n", out.pass ? "PASS" : "FAIL", n, name.c_str(), out.detail.c_str(),
                secs);
    std::fflush(stdout);
}

bool oracle_minimal(const PointSet3& s) {
    if (oracle::basic(s)) return false;
    for (std::size_t i = 0; i < s.size(); ++i)
        if (!oracle::basic(s.without(i))) return false;
    return true;
}

std::vector<PointSet3> bridge_corpus() {
    auto corpus = oracle::cube_subsets();
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<std::size_t> size(1, kRandomSubsetMaxSize);
    for (int i = 0; i < kRandomSubsets; ++i) corpus.push_back(oracle::random_subset(rng, 3, 3, 3, size(rng)));
    return corpus;
}

Graph random_graph(std::mt19937_64& rng) {
    std::size_t n = std::uniform_int_distribution<std::size_t>(1, kRandomGraphMaxVertices)(rng);
    std::size_t m = n < 2 ? 0 : std::uniform_int_distribution<std::size_t>(0, 2 * n)(rng);
    std::uniform_int_distribution<std::size_t> v(0, n - 1);
    std::vector<Graph::Edge> edges;
    while (edges.size() < m) {
        auto a = v(rng), b = v(rng);
        if (a != b) edges.emplace_back(a, b);
    }
    return Graph(n, edges);
}

Outcome fixture_verdicts() {
    auto f = fixtures();
    bool ok = is_basic_verdict(is_basic(f.at("example1"))) && !is_basic_verdict(is_basic(f.at("ex2"))) &&
              !is_basic_verdict(is_basic(f.at("cube8")));
    ok = ok && oracle::basic(f.at("example1")) && !oracle::basic(f.at("ex2")) && !oracle::basic(f.at("cube8"));
    return {ok, "example1 basic, ex2 and cube8 non-basic"};
}

Outcome example1_decomposition() {
    const Rat a = 1, b = 2, c = 3, d = 4;
    const Point3 pa{0, 1, 0}, pb{1, 0, 0}, pc{0, 0, 1}, pd{1, 1, 1};
    auto set = fixtures().at("example1");
    PointFunction f{{pa, a}, {pb, b}, {pc, c}, {pd, d}};

    const Rat f1[2] = {a / 2 - d / 2, b / 2 - c / 2};
    const Rat f2[2] = {b / 2 + c / 2, a / 2 + d / 2};
    const Rat f3[2] = {0, -a / 2 - b / 2 + c / 2 + d / 2};
    bool closed = true;
    for (const auto& [p, v] : f) closed = closed && f1[p.x] + f2[p.y] + f3[p.z] == v;

    auto r = decompose(set, f);
    bool solver = false;
    if (auto* dec = std::get_if<Decomposition>(&r)) {
        solver = true;
        for (const auto& [p, v] : f) solver = solver && dec->evaluate(p, 3) == v;
    }
    return {closed && solver, std::string("closed form ") + (closed ? "holds" : "fails") + ", solver tables " +
                                  (solver ? "hold" : "fail")};
}

Outcome ex2_weights() {
    auto ex2 = fixtures().at("ex2");
    const bool one_dim = certificate_space_dimension(ex2) == 1;
    auto v = is_basic(ex2);
    const bool vec = !is_basic_verdict(v) && std::get<NonBasic>(v).certificate.weights == IntVector{2, -1, -1, -1, 1};
    const bool none1 = std::holds_alternative<NoneWithinBound>(minimize_certificate(ex2, 1));
    auto two = minimize_certificate(ex2, 2);
    const bool sup2 = std::holds_alternative<MinimizedCertificate>(two) && std::get<MinimizedCertificate>(two).sup == 2;
    return {one_dim && vec && none1 && sup2,
            "kernel dimension 1 with (2,-1,-1,-1,1), nothing within 1, sup-norm 2 within 2"};
}

Outcome cube8_pattern() {
    auto cube = fixtures().at("cube8");
    Coloring fig;
    for (const auto& p : cube.points()) fig[p] = Color::White;
    for (Point3 p : {Point3{3, 0, 0}, Point3{0, 3, 0}, Point3{1, 1, 1}, Point3{2, 2, 1}}) fig[p] = Color::Black;
    auto colored = coloring_certificate(cube, fig);
    if (!std::holds_alternative<Certificate>(colored)) return {false, "figure coloring is unbalanced"};
    const auto& expected = std::get<Certificate>(colored).weights;

    auto v = is_basic(cube);
    if (is_basic_verdict(v)) return {false, "cube8 reported basic"};
    auto found = std::get<NonBasic>(v).certificate.weights;
    auto neg = found;
    for (auto& w : neg) w = -w;
    bool unit = std::all_of(found.begin(), found.end(), [](const mpz_class& w) { return abs(w) == 1; });
    bool match = found == expected || neg == expected;
    bool valid = oracle::balanced(cube.points(), found);
    return {unit && match && valid, "+-1 certificate matches the two-symbol coloring up to sign"};
}

Outcome graph_routes() {
    std::size_t checked = 0, mismatches = 0;
    for (std::size_t n = 1; n <= 5; ++n) {
        std::vector<Graph::Edge> all;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b) all.emplace_back(a, b);
        for (std::size_t mask = 0; mask < (std::size_t{1} << all.size()); ++mask) {
            std::vector<Graph::Edge> es;
            for (std::size_t k = 0; k < all.size(); ++k)
                if (mask >> k & 1) es.push_back(all[k]);
            Graph g(n, es);
            ++checked;
            if (graph_is_basic(g) != graph_is_basic_rank(g)) ++mismatches;
        }
    }
    std::mt19937_64 rng(5);
    for (int i = 0; i < kRandomGraphs; ++i) {
        Graph g = random_graph(rng);
        ++checked;
        if (graph_is_basic(g) != graph_is_basic_rank(g)) ++mismatches;
    }
    return {mismatches == 0, std::to_string(checked) + " graphs, " + std::to_string(mismatches) + " mismatches"};
}

Outcome bridge(const std::vector<PointSet3>& corpus) {
    std::size_t applicable = 0, mismatches = 0;
    for (const auto& s : corpus) {
        auto f = fast_is_basic(s);
        if (f.kind == VerdictKind::Inapplicable) continue;
        ++applicable;
        if ((f.kind == VerdictKind::Basic) != oracle::basic(s)) ++mismatches;
    }
    return {mismatches == 0 && applicable > 0, std::to_string(corpus.size()) + " sets, " +
                                                   std::to_string(applicable) + " applicable, " +
                                                   std::to_string(mismatches) + " mismatches"};
}

Outcome peeling(const std::vector<PointSet3>& corpus) {
    std::size_t empty_core = 0, exceptions = 0;
    for (const auto& s : corpus) {
        if (!peel(s).core.empty()) continue;
        ++empty_core;
        if (!oracle::basic(s)) ++exceptions;
    }
    return {exceptions == 0, std::to_string(empty_core) + " empty cores, " + std::to_string(exceptions) +
                                 " non-basic among them"};
}

Outcome planar() {
    std::size_t checked = 0, mismatches = 0, bad_entries = 0;
    for (std::uint32_t mask = 0; mask < (1u << 16); ++mask) {
        if (__builtin_popcount(mask) > 7) continue;
        std::vector<Point3> pts;
        for (int i = 0; i < 16; ++i)
            if (mask >> i & 1) pts.push_back({i / 4, i % 4, 0});
        PointSet3 s(2, pts);
        ++checked;
        auto v = is_basic_2d(s);
        if (is_basic_verdict(v) != oracle::basic(s)) ++mismatches;
        if (auto* nb = std::get_if<NonBasic>(&v)) {
            const auto& w = nb->certificate.weights;
            if (!oracle::balanced(s.points(), w, 2) ||
                std::any_of(w.begin(), w.end(), [](const mpz_class& x) { return abs(x) > 1; }))
                ++bad_entries;
        }
    }
    return {mismatches == 0 && bad_entries == 0, std::to_string(checked) + " subsets, " +
                                                     std::to_string(mismatches) + " mismatches, " +
                                                     std::to_string(bad_entries) + " bad certificates"};
}

Outcome generators() {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> ldist(2, kGeneratorMaxL);
    std::uniform_int_distribution<std::int64_t> odist(1, kGeneratorMaxOffset);
    std::size_t constructions = 0, basic_outputs = 0, qualifying = 0, not_minimal = 0;
    std::vector<PointSet3> pool;
    for (int i = 0; i < kGeneratorSamples; ++i) {
        SliceId slice{axis_from_index(i % 3), static_cast<std::int64_t>(i % 4)};
        auto c = random_construction(slice, ldist(rng), rng(), kGeneratorMaxOffset);
        ++constructions;
        if (oracle::basic(c.set)) ++basic_outputs;
        auto [u, v] = in_plane_axes(slice.axis);
        bool two_each = true;
        for (const auto& sl : slices_of(c.set))
            if ((sl.id.axis == u || sl.id.axis == v) && sl.members.size() != 2) two_each = false;
        if (two_each) {
            ++qualifying;
            if (!oracle_minimal(c.set)) ++not_minimal;
        }
        pool.push_back(c.set);
    }

    std::size_t splits = 0;
    for (std::size_t attempt = 0; splits < static_cast<std::size_t>(kGeneratorSamples) && attempt < 100000; ++attempt) {
        const auto& m = pool[attempt % pool.size()];
        std::uniform_int_distribution<std::size_t> pick(0, m.size() - 1);
        const Point3 a = m[pick(rng)], b = m[pick(rng)];
        int shared = (a.x == b.x) + (a.y == b.y) + (a.z == b.z);
        if (shared != 2) continue;
        try {
            auto out = boyarov_split(m, a, b, odist(rng));
            ++splits;
            if (oracle::basic(out)) ++basic_outputs;
        } catch (const CollisionWithExisting&) {
        }
    }
    bool ok = splits == static_cast<std::size_t>(kGeneratorSamples) && basic_outputs == 0 && not_minimal == 0;
    return {ok, std::to_string(constructions) + " constructions and " + std::to_string(splits) + " splits, " +
                    std::to_string(basic_outputs) + " basic; " + std::to_string(qualifying) +
                    " meet the two-point condition, " + std::to_string(not_minimal) + " of them not minimal"};
}

Outcome volkov() {
    GridSpec grid{2, 2, 2};
    auto all = enumerate_minimal(grid, 8);
    std::size_t unverified = 0;
    std::set<std::vector<Point3>> found;
    for (const auto& r : all) {
        if (!r.is_nonbasic || !r.minimal || !oracle_minimal(r.set)) ++unverified;
        found.insert(r.set.points());
    }
    std::size_t faces = 0;
    for (int axis = 0; axis < 3; ++axis) {
        for (int v = 0; v < 2; ++v) {
            std::vector<Point3> face;
            for (const auto& p : grid.cells())
                if (p[axis_from_index(axis)] == v) face.push_back(p);
            faces += found.count(face);
        }
    }
    const bool ex2 = found.count(fixtures().at("ex2").points()) == 1;
    auto survey = max_weight_survey(grid, 8);
    bool ok = unverified == 0 && faces == 6 && ex2 && survey.max_sup_norm == 2;
    return {ok, std::to_string(all.size()) + " minimal sets, " + std::to_string(faces) + " faces, ex2 pattern " +
                    (ex2 ? "present" : "missing") + ", max sup-norm " + survey.max_sup_norm.get_str()};
}

Outcome determinism() {
    bool same = true;
    for (auto [grid, size] : {std::pair{GridSpec{2, 2, 2}, std::size_t{8}}, std::pair{GridSpec{3, 3, 2}, std::size_t{6}}}) {
        auto one = max_weight_survey(grid, size, SearchOptions{.workers = 1});
        auto four = max_weight_survey(grid, size, SearchOptions{.workers = 4});
        same = same && survey_csv(one) == survey_csv(four) && survey_json(one) == survey_json(four);
    }
    return {same, "csv and json identical for 1 and 4 workers"};
}

}  // namespace

int main() {
    criterion(1, "fixture verdicts", kFixtureLimit, fixture_verdicts);
    criterion(2, "example1 decomposition", 0, example1_decomposition);
    criterion(3, "ex2 weight bound", 0, ex2_weights);
    criterion(4, "cube8 certificate", 0, cube8_pattern);
    criterion(5, "graph route equivalence", kGraphLimit, graph_routes);
    auto corpus = bridge_corpus();
    criterion(6, "graph bridge", kBridgeLimit, [&] { return bridge(corpus); });
    criterion(7, "peeling soundness", 0, [&] { return peeling(corpus); });
    criterion(8, "planar criterion", kPlanarLimit, planar);
    criterion(9, "generators", 0, generators);
    criterion(10, "2x2x2 reproduction", 0, volkov);
    criterion(11, "survey determinism", 0, determinism);
    std::printf("%d of 11 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
