#include "basicset/graphs.hpp"

#include <algorithm>
#include <sstream>

namespace basicset {

Graph::Graph(std::size_t vertices, std::vector<Edge> edges) : n_(vertices), edges_(std::move(edges)) {
    for (auto& [u, v] : edges_) {
        if (u >= n_ || v >= n_) throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
}

std::vector<std::vector<std::size_t>> Graph::incidence() const {
    std::vector<std::vector<std::size_t>> inc(n_);
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        inc[edges_[e].first].push_back(e);
        inc[edges_[e].second].push_back(e);
    }
    return inc;
}

std::vector<Component> bipartite_components(const Graph& g) {
    auto inc = g.incidence();
    std::vector<int> color(g.vertex_count(), -1);
    std::vector<Component> out;
    for (std::size_t start = 0; start < g.vertex_count(); ++start) {
        if (color[start] != -1) continue;
        Component comp;
        comp.bipartite = true;
        std::vector<std::size_t> stack{start};
        color[start] = 0;
        while (!stack.empty()) {
            auto v = stack.back();
            stack.pop_back();
            comp.vertices.push_back(v);
            for (auto e : inc[v]) {
                auto [a, b] = g.edges()[e];
                auto w = a == v ? b : a;
                if (color[w] == -1) {
                    color[w] = 1 - color[v];
                    stack.push_back(w);
                } else if (color[w] == color[v]) {
                    comp.bipartite = false;
                }
            }
        }
        std::sort(comp.vertices.begin(), comp.vertices.end());
        if (comp.bipartite) {
            for (auto v : comp.vertices) comp.side.push_back(color[v]);
        }
        out.push_back(std::move(comp));
    }
    return out;
}

bool graph_is_basic(const Graph& g) {
    auto comps = bipartite_components(g);
    return std::none_of(comps.begin(), comps.end(), [](const Component& c) { return c.bipartite; });
}

RatMatrix coboundary_matrix(const Graph& g) {
    RatMatrix m(g.vertex_count(), g.edge_count());
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        m(g.edges()[e].first, e) = 1;
        m(g.edges()[e].second, e) = 1;
    }
    return m;
}

bool graph_is_basic_rank(const Graph& g) { return rank(coboundary_matrix(g)) == g.vertex_count(); }

EdgeSolveResult solve_edges(const Graph& g, const RatVector& b) {
    if (b.size() != g.vertex_count()) throw DomainMismatch("vertex values must cover every vertex");
    if (auto x = solve(coboundary_matrix(g), b)) return *x;

    for (const auto& comp : bipartite_components(g)) {
        if (!comp.bipartite) continue;
        Rat diff = 0;
        for (std::size_t k = 0; k < comp.vertices.size(); ++k) {
            diff += comp.side[k] == 0 ? b[comp.vertices[k]] : -b[comp.vertices[k]];
        }
        if (sgn(diff) != 0) return EdgeUnsolvable{comp.vertices, diff};
    }
    throw std::logic_error("incidence system inconsistent with balanced bipartite parts");
}

PointGraphResult point_graph(const PointSet3& set) {
    std::vector<Graph::Edge> edges;
    for (const auto& s : slices_of(set)) {
        if (s.members.size() != 2) return NotTwoRegular{s.id, s.members.size()};
        edges.emplace_back(s.members[0], s.members[1]);
    }
    return Graph(set.size(), std::move(edges));
}

std::string describe_graph(const Graph& g) {
    const auto n = g.vertex_count();
    auto edges = g.edges();
    bool simple = std::adjacent_find(edges.begin(), edges.end()) == edges.end();
    bool basic = graph_is_basic(g);
    std::ostringstream os;
    if (simple && n >= 2 && edges.size() == n * (n - 1) / 2) {
        os << 'K' << n;
    } else {
        os << n << " vertices, " << edges.size() << " edges";
    }
    if (basic) {
        os << " non-bipartite";
    } else {
        auto comps = bipartite_components(g);
        auto bip = std::count_if(comps.begin(), comps.end(), [](const Component& c) { return c.bipartite; });
        if (comps.size() == 1) {
            os << " bipartite";
        } else {
            os << ", " << bip << " of " << comps.size() << " components bipartite";
        }
    }
    return os.str();
}

FastResult fast_is_basic(const PointSet3& set) {
    PeelResult p = peel(set);
    if (p.core.empty()) {
        return {VerdictKind::Basic, "peel: all " + std::to_string(set.size()) + " points removed"};
    }
    auto pg = point_graph(p.core);
    if (auto* bad = std::get_if<NotTwoRegular>(&pg)) {
        return {VerdictKind::Inapplicable, "core slice " + to_string(bad->slice) + " holds " +
                                               std::to_string(bad->size) + " points"};
    }
    const Graph& g = std::get<Graph>(pg);
    std::string route = "graph: " + describe_graph(g);
    if (!p.order.empty()) route = "peel " + std::to_string(p.order.size()) + ", " + route;
    return {graph_is_basic(g) ? VerdictKind::Basic : VerdictKind::NonBasic, route};
}

Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    auto next_content = [&](std::string& out) {
        while (std::getline(in, line)) {
            ++line_no;
            auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            if (line.find_first_not_of(" \t\r") != std::string::npos) {
                out = line;
                return true;
            }
        }
        return false;
    };
    auto read_pair = [&](const std::string& s, long long& a, long long& b) {
        std::istringstream ls(s);
        std::string extra;
        if (!(ls >> a >> b) || (ls >> extra)) throw ParseError("expected two integers", line_no, 1);
    };

    std::string content;
    if (!next_content(content)) throw ParseError("missing 'n m' header", line_no + 1, 1);
    long long n = 0, m = 0;
    read_pair(content, n, m);
    if (n < 0 || m < 0) throw ParseError("negative vertex or edge count", line_no, 1);

    std::vector<Graph::Edge> edges;
    for (long long k = 0; k < m; ++k) {
        if (!next_content(content)) throw ParseError("expected " + std::to_string(m) + " edges", line_no + 1, 1);
        long long u = 0, v = 0;
        read_pair(content, u, v);
        if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError("endpoint out of range", line_no, 1);
        if (u == v) throw ParseError("self-loop", line_no, 1);
        edges.emplace_back(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
    }
    if (next_content(content)) throw ParseError("trailing content after edge list", line_no, 1);
    return Graph(static_cast<std::size_t>(n), std::move(edges));
}

}  // namespace basicset
