#include "basicset/gen.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <random>

namespace basicset {

std::pair<Axis, Axis> in_plane_axes(Axis normal) {
    switch (normal) {
        case Axis::X: return {Axis::Y, Axis::Z};
        case Axis::Y: return {Axis::X, Axis::Z};
        default: return {Axis::X, Axis::Y};
    }
}

LightningCheck is_lightning(const SliceId& slice, const std::vector<Point3>& pts) {
    for (const auto& p : pts) {
        if (p[slice.axis] != slice.value) {
            throw PointOutsideSlice(to_string(p) + " is not in slice " + to_string(slice));
        }
    }
    LightningCheck out;
    if (pts.empty()) return out;
    auto [first, second] = in_plane_axes(slice.axis);

    // phase 0: step k shares `second` for even k, `first` for odd k
    auto alternates = [&](int phase) {
        for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
            const Point3& p = pts[k];
            const Point3& q = pts[k + 1];
            if (p == q) return false;
            Axis shared = ((k + phase) % 2 == 0) ? second : first;
            if (p[shared] != q[shared]) return false;
        }
        return true;
    };
    out.lightning = alternates(0) || alternates(1);
    if (!out.lightning) return out;

    out.closed = pts.size() >= 3 && pts.size() % 2 == 1 && pts.front() == pts.back();
    if (out.closed) {
        std::vector<Point3> body(pts.begin(), pts.end() - 1);
        std::sort(body.begin(), body.end());
        out.simple = std::adjacent_find(body.begin(), body.end()) == body.end();
    }
    return out;
}

std::vector<Point3> ClosedLightning::vertices() const {
    return {path.points.begin(), path.points.end() - 1};
}

Coloring ClosedLightning::alternating_coloring() const {
    Coloring c;
    auto vs = vertices();
    for (std::size_t k = 0; k < vs.size(); ++k) c[vs[k]] = k % 2 == 0 ? Color::Black : Color::White;
    return c;
}

ClosedLightning closed_lightning(const SliceId& slice, int l, std::uint64_t seed) {
    if (l < 2) throw std::invalid_argument("closed lightning needs l >= 2");
    std::mt19937_64 rng(seed);
    std::vector<std::int64_t> xs(static_cast<std::size_t>(l)), ys(static_cast<std::size_t>(l));
    std::iota(xs.begin(), xs.end(), 0);
    std::iota(ys.begin(), ys.end(), 0);
    std::shuffle(xs.begin(), xs.end(), rng);
    std::shuffle(ys.begin(), ys.end(), rng);

    auto [first, second] = in_plane_axes(slice.axis);
    auto make = [&, first = first, second = second](std::int64_t u, std::int64_t v) {
        Point3 p;
        p[slice.axis] = slice.value;
        p[first] = u;
        p[second] = v;
        return p;
    };
    // (u_k, v_k) -> (u_{k+1}, v_k) -> (u_{k+1}, v_{k+1}) -> ...
    ClosedLightning out;
    out.path.slice = slice;
    const auto n = static_cast<std::size_t>(l);
    for (std::size_t k = 0; k < n; ++k) {
        out.path.points.push_back(make(xs[k], ys[k]));
        out.path.points.push_back(make(xs[(k + 1) % n], ys[k]));
    }
    out.path.points.push_back(out.path.points.front());
    out.simple = true;
    return out;
}

Construction construction_split(const ClosedLightning& m, const std::map<Point3, int>& grouping,
                                const std::map<int, std::int64_t>& offsets) {
    if (!m.simple) throw std::invalid_argument("construction needs a simple closed lightning");
    auto colors = m.alternating_coloring();
    std::map<int, std::pair<int, int>> balance;
    for (const auto& v : m.vertices()) {
        auto g = grouping.find(v);
        if (g == grouping.end()) throw DomainMismatch("no group for " + to_string(v));
        if (!offsets.count(g->second)) throw DomainMismatch("no offset for group " + std::to_string(g->second));
        auto& [black, white] = balance[g->second];
        (colors.at(v) == Color::Black ? black : white)++;
    }
    for (const auto& [group, bw] : balance) {
        if (bw.first != bw.second) {
            throw UnbalancedGroup("group " + std::to_string(group) + " has " + std::to_string(bw.first) +
                                  " black and " + std::to_string(bw.second) + " white points");
        }
    }
    Construction out;
    std::vector<Point3> moved;
    for (const auto& v : m.vertices()) {
        Point3 p = v;
        p[m.path.slice.axis] += offsets.at(grouping.at(v));
        moved.push_back(p);
        out.coloring[p] = colors.at(v);
    }
    out.set = PointSet3(3, std::move(moved));
    return out;
}

Construction random_construction(const SliceId& slice, int l, std::uint64_t seed, int max_offset) {
    if (max_offset < 0) throw std::invalid_argument("max offset must be non-negative");
    auto m = closed_lightning(slice, l, seed);
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    auto vs = m.vertices();
    const std::size_t pairs = vs.size() / 2;
    const std::size_t phase = std::uniform_int_distribution<std::size_t>(0, 1)(rng);
    const int groups = std::uniform_int_distribution<int>(1, l)(rng);
    std::map<Point3, int> grouping;
    std::map<int, std::int64_t> offsets;
    std::uniform_int_distribution<int> pick(0, groups - 1);
    std::uniform_int_distribution<std::int64_t> shift(0, max_offset);
    for (int g = 0; g < groups; ++g) offsets[g] = shift(rng);
    for (std::size_t k = 0; k < pairs; ++k) {
        int g = pick(rng);
        grouping[vs[(2 * k + phase) % vs.size()]] = g;
        grouping[vs[(2 * k + 1 + phase) % vs.size()]] = g;
    }
    return construction_split(m, grouping, offsets);
}

PointSet3 boyarov_split(const PointSet3& m, const Point3& a, const Point3& b, std::int64_t offset,
                        std::optional<Axis> axis) {
    if (m.dim() != 3) throw std::invalid_argument("split needs a 3D set");
    if (!m.contains(a) || !m.contains(b)) throw DomainMismatch("split points must belong to the set");
    std::vector<Axis> agree;
    for (Axis ax : axes(3))
        if (a[ax] == b[ax]) agree.push_back(ax);
    if (agree.size() != 2) {
        throw PointsNotAligned(to_string(a) + " and " + to_string(b) + " do not agree in exactly two coordinates");
    }
    Axis dir = agree.front();
    if (axis) {
        if (std::find(agree.begin(), agree.end(), *axis) == agree.end()) {
            throw PointsNotAligned(std::string("translation axis ") + axis_name(*axis) + " is not shared");
        }
        dir = *axis;
    }
    if (is_basic_verdict(is_basic(m))) throw NotNonBasic("split input must be non-basic");

    Point3 a2 = a, b2 = b;
    a2[dir] += offset;
    b2[dir] += offset;
    for (const auto& q : {a2, b2}) {
        if (m.contains(q)) throw CollisionWithExisting("translate " + to_string(q) + " is already in the set");
    }
    std::vector<Point3> pts;
    for (const auto& p : m.points())
        if (p != b) pts.push_back(p);
    pts.push_back(a2);
    pts.push_back(b2);
    return PointSet3(3, std::move(pts));
}

Verdict is_basic_2d(const PointSet3& set) {
    if (set.dim() != 2) throw std::invalid_argument("planar criterion needs a 2D set");
    const auto& xv = set.values(Axis::X);
    const auto& yv = set.values(Axis::Y);
    const std::size_t nodes = xv.size() + yv.size();
    auto x_node = [&](const Point3& p) {
        return static_cast<std::size_t>(std::lower_bound(xv.begin(), xv.end(), p.x) - xv.begin());
    };
    auto y_node = [&](const Point3& p) {
        return xv.size() + static_cast<std::size_t>(std::lower_bound(yv.begin(), yv.end(), p.y) - yv.begin());
    };

    // Forest of earlier points; the first point joining two connected
    // value-nodes closes a cycle.
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(nodes);  // (neighbor, point)
    std::vector<std::size_t> parent(nodes);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };

    for (std::size_t i = 0; i < set.size(); ++i) {
        auto u = x_node(set[i]);
        auto v = y_node(set[i]);
        if (find(u) != find(v)) {
            parent[find(u)] = find(v);
            adj[u].push_back({v, i});
            adj[v].push_back({u, i});
            continue;
        }
        // tree path v -> u
        std::vector<std::pair<std::size_t, std::size_t>> via(nodes, {nodes, 0});  // (prev node, point)
        std::queue<std::size_t> q;
        q.push(v);
        via[v] = {v, 0};
        while (!q.empty() && via[u].first == nodes) {
            auto w = q.front();
            q.pop();
            for (auto [nb, pt] : adj[w]) {
                if (via[nb].first != nodes) continue;
                via[nb] = {w, pt};
                q.push(nb);
            }
        }
        IntVector w(set.size(), 0);
        w[i] = 1;
        int sign = -1;
        for (auto node = u; node != v; node = via[node].first) {
            w[via[node].second] = sign;
            sign = -sign;
        }
        for (const auto& x : w) {
            if (x != 0) {
                if (x < 0)
                    for (auto& y : w) y = -y;
                break;
            }
        }
        return NonBasic{Certificate{std::move(w)}};
    }
    return Basic{};
}

std::map<std::string, PointSet3> fixtures() {
    auto make = [](std::initializer_list<std::array<int, 3>> pts) {
        std::vector<std::array<Rat, 3>> raw;
        for (const auto& p : pts) raw.push_back({Rat(p[0]), Rat(p[1]), Rat(p[2])});
        return canonicalize(3, raw);
    };
    return {
        {"example1", make({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}, {1, 1, 1}})},
        {"ex2", make({{0, 0, 0}, {0, 1, 0}, {1, 0, 0}, {0, 0, 1}, {1, 1, 1}})},
        {"cube8", make({{3, 0, 0}, {2, 1, 0}, {1, 2, 0}, {0, 3, 0}, {0, 0, 1}, {1, 1, 1}, {2, 2, 1}, {3, 3, 1}})},
    };
}

}  // namespace basicset
