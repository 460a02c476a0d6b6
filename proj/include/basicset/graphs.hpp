#ifndef BASICSET_GRAPHS_HPP
#define BASICSET_GRAPHS_HPP

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "basicset/core.hpp"
#include "basicset/decide.hpp"
#include "basicset/ratlin.hpp"

namespace basicset {

/// Undirected multigraph without self-loops. Edges are stored as (u, v)
/// with u < v, sorted, so equal graphs compare equal.
class Graph {
public:
    using Edge = std::pair<std::size_t, std::size_t>;

    Graph() = default;
    /// Throws std::invalid_argument on out-of-range endpoints or self-loops.
    Graph(std::size_t vertices, std::vector<Edge> edges);

    std::size_t vertex_count() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }

    /// Incident edge indices per vertex.
    std::vector<std::vector<std::size_t>> incidence() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::size_t n_ = 0;
    std::vector<Edge> edges_;
};

struct Component {
    std::vector<std::size_t> vertices;  // ascending
    bool bipartite = false;
    std::vector<int> side;  // 0/1 per entry of `vertices` when bipartite
};

std::vector<Component> bipartite_components(const Graph& g);

/// Every connected component contains an odd cycle. An isolated vertex is a
/// bipartite component.
bool graph_is_basic(const Graph& g);

/// n x e vertex-edge incidence matrix; row i is the coboundary of vertex i.
RatMatrix coboundary_matrix(const Graph& g);

/// Coboundaries linearly independent, i.e. the incidence matrix has rank n.
bool graph_is_basic_rank(const Graph& g);

using EdgeAssignment = std::vector<Rat>;  // indexed like Graph::edges()

struct EdgeUnsolvable {
    std::vector<std::size_t> component;
    Rat part_difference;  // sum over side 0 minus sum over side 1
};

using EdgeSolveResult = std::variant<EdgeAssignment, EdgeUnsolvable>;

/// Finds edge values whose incident sums reproduce b at every vertex.
EdgeSolveResult solve_edges(const Graph& g, const RatVector& b);

struct NotTwoRegular {
    SliceId slice;
    std::size_t size = 0;
};

using PointGraphResult = std::variant<Graph, NotTwoRegular>;

/// Vertices are the points; each slice holding exactly two points becomes
/// an edge. Fails on the first slice of any other size.
PointGraphResult point_graph(const PointSet3& set);

/// Short human description, e.g. "K4 non-bipartite".
std::string describe_graph(const Graph& g);

enum class VerdictKind { Basic, NonBasic, Inapplicable };

struct FastResult {
    VerdictKind kind = VerdictKind::Inapplicable;
    std::string route;
};

/// Peel, then decide the core through its slice graph when every slice of
/// the core holds exactly two points.
FastResult fast_is_basic(const PointSet3& set);

/// Parses the `n m` / `u v` graph text format.
Graph parse_graph(const std::string& text);

}  // namespace basicset

#endif
