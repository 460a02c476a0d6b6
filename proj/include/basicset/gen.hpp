#ifndef BASICSET_GEN_HPP
#define BASICSET_GEN_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "basicset/core.hpp"
#include "basicset/decide.hpp"

namespace basicset {

class PointOutsideSlice : public Error {
public:
    using Error::Error;
};
class UnbalancedGroup : public Error {
public:
    using Error::Error;
};
class PointsNotAligned : public Error {
public:
    using Error::Error;
};
class CollisionWithExisting : public Error {
public:
    using Error::Error;
};

/// The two in-plane axes of a slice, in ascending order (x,y for a z-slice).
std::pair<Axis, Axis> in_plane_axes(Axis normal);

/// A sequence of points inside one slice in which consecutive points are
/// distinct and alternately share their first and second in-plane
/// coordinate.
struct Lightning {
    SliceId slice;
    std::vector<Point3> points;
};

struct LightningCheck {
    bool lightning = false;
    bool closed = false;  // odd length >= 3 with first == last
    bool simple = false;  // closed and no repeats among all but the last point
};

/// Either alternation phase is accepted: which in-plane axis is called
/// "first" is a labeling choice. Throws PointOutsideSlice.
LightningCheck is_lightning(const SliceId& slice, const std::vector<Point3>& pts);

/// A closed lightning: points.front() == points.back(), 2l+1 entries.
struct ClosedLightning {
    Lightning path;
    bool simple = false;

    std::size_t length() const { return path.points.size() - 1; }  // 2l distinct vertices when simple
    /// The 2l vertices without the repeated closing point.
    std::vector<Point3> vertices() const;
    /// Alternating coloring of the vertices, vertex 0 black.
    Coloring alternating_coloring() const;
};

/// Seeded simple closed lightning with 2l distinct vertices using l distinct
/// values on each in-plane axis. Requires l >= 2.
ClosedLightning closed_lightning(const SliceId& slice, int l, std::uint64_t seed);

struct Construction {
    PointSet3 set;
    Coloring coloring;  // alternating coloring carried along with the points
};

/// Translates each group of lightning vertices along the slice normal by its
/// offset. Each group must hold as many black as white vertices.
/// Throws UnbalancedGroup, or DomainMismatch if grouping/offsets are partial.
Construction construction_split(const ClosedLightning& m, const std::map<Point3, int>& grouping,
                                const std::map<int, std::int64_t>& offsets);

/// Seeded construction over closed_lightning(slice, l, seed): adjacent
/// vertex pairs (one black, one white) are dealt into groups, each group
/// shifted by an offset in [0, max_offset].
Construction random_construction(const SliceId& slice, int l, std::uint64_t seed, int max_offset);

/// Replaces b by its translate and adds the translate of a, both moved by
/// `offset` along an axis on which a and b agree (lowest such axis unless
/// one is given). Throws NotNonBasic, PointsNotAligned, CollisionWithExisting.
PointSet3 boyarov_split(const PointSet3& m, const Point3& a, const Point3& b, std::int64_t offset,
                        std::optional<Axis> axis = std::nullopt);

/// Planar decision through the x-value/y-value incidence multigraph: basic
/// iff it is a forest. A cycle yields a +-1 certificate.
Verdict is_basic_2d(const PointSet3& set);

/// The three named example sets: "example1", "ex2", "cube8".
std::map<std::string, PointSet3> fixtures();

}  // namespace basicset

#endif
