#ifndef BASICSET_CORE_HPP
#define BASICSET_CORE_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace basicset {

/// Exact rational scalar used throughout the library.
using Rat = mpq_class;

enum class Axis : std::uint8_t { X = 0, Y = 1, Z = 2 };

char axis_name(Axis a);
Axis axis_from_index(int i);
inline int axis_index(Axis a) { return static_cast<int>(a); }

/// Base of all domain errors raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DuplicatePoint : public Error {
public:
    using Error::Error;
};

class DomainMismatch : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& msg, int line, int column);
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

struct Point3 {
    std::int64_t x = 0;
    std::int64_t y = 0;
    std::int64_t z = 0;

    std::int64_t operator[](Axis a) const;
    std::int64_t& operator[](Axis a);

    friend auto operator<=>(const Point3&, const Point3&) = default;
    friend bool operator==(const Point3&, const Point3&) = default;
};

std::string to_string(const Point3& p, int dim = 3);

struct SliceId {
    Axis axis = Axis::X;
    std::int64_t value = 0;

    friend auto operator<=>(const SliceId&, const SliceId&) = default;
    friend bool operator==(const SliceId&, const SliceId&) = default;
};

std::string to_string(const SliceId& s);

struct Slice {
    SliceId id;
    std::vector<std::size_t> members;  // indices into PointSet3::points()
};

/// A finite set of lattice points in the plane (dim 2, z fixed at 0) or in
/// space (dim 3). Points are kept sorted lexicographically and duplicates
/// are rejected, so two equal sets always compare and iterate identically.
class PointSet3 {
public:
    PointSet3() = default;

    /// Throws DuplicatePoint if the same point occurs twice, and
    /// std::invalid_argument for dim outside {2,3} or a 2D point with z != 0.
    PointSet3(int dim, std::vector<Point3> points);

    int dim() const { return dim_; }
    std::size_t size() const { return points_.size(); }
    bool empty() const { return points_.empty(); }
    const std::vector<Point3>& points() const { return points_; }
    const Point3& operator[](std::size_t i) const { return points_[i]; }

    /// Sorted distinct values occurring on the given axis.
    const std::vector<std::int64_t>& values(Axis a) const { return values_[axis_index(a)]; }

    /// Index of p in canonical order, or size() if absent.
    std::size_t index_of(const Point3& p) const;
    bool contains(const Point3& p) const { return index_of(p) != size(); }

    /// Subset keeping the listed indices (in any order).
    PointSet3 subset(const std::vector<std::size_t>& keep) const;
    PointSet3 without(std::size_t index) const;

    friend bool operator==(const PointSet3& a, const PointSet3& b) {
        return a.dim_ == b.dim_ && a.points_ == b.points_;
    }

private:
    int dim_ = 3;
    std::vector<Point3> points_;
    std::array<std::vector<std::int64_t>, 3> values_;
};

std::vector<Axis> axes(int dim);

/// Non-empty slices grouped per axis (X, Y, Z), values ascending.
std::vector<Slice> slices_of(const PointSet3& set);

/// Result of canonicalizing raw coordinates: the dense set plus, per axis,
/// the raw value that each dense index stands for.
struct CanonicalForm {
    PointSet3 set;
    std::array<std::vector<Rat>, 3> raw_values;
};

/// Replaces each axis's distinct raw values by their rank 0,1,2,...
/// Throws DuplicatePoint if two raw points coincide.
CanonicalForm canonicalize_raw(int dim, const std::vector<std::array<Rat, 3>>& raw);

PointSet3 canonicalize(int dim, const std::vector<std::array<Rat, 3>>& raw);
PointSet3 canonicalize(const PointSet3& set);

/// Parses an exact scalar written as an integer or p/q.
Rat parse_rat(const std::string& text);

/// Canonical text of a rational: "p/q", or "p" when integral.
std::string rat_string(const Rat& r);

}  // namespace basicset

#endif
