#include "basicset/core.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace basicset {

char axis_name(Axis a) {
    switch (a) {
        case Axis::X: return 'x';
        case Axis::Y: return 'y';
        case Axis::Z: return 'z';
    }
    return '?';
}

Axis axis_from_index(int i) {
    if (i < 0 || i > 2) throw std::out_of_range("axis index " + std::to_string(i));
    return static_cast<Axis>(i);
}

ParseError::ParseError(const std::string& msg, int line, int column)
    : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
      line_(line),
      column_(column) {}

std::int64_t Point3::operator[](Axis a) const {
    switch (a) {
        case Axis::X: return x;
        case Axis::Y: return y;
        case Axis::Z: return z;
    }
    return 0;
}

std::int64_t& Point3::operator[](Axis a) {
    switch (a) {
        case Axis::X: return x;
        case Axis::Y: return y;
        default: return z;
    }
}

std::string to_string(const Point3& p, int dim) {
    std::ostringstream os;
    os << '(' << p.x << ',' << p.y;
    if (dim == 3) os << ',' << p.z;
    os << ')';
    return os.str();
}

std::string to_string(const SliceId& s) {
    return std::string(1, axis_name(s.axis)) + "=" + std::to_string(s.value);
}

PointSet3::PointSet3(int dim, std::vector<Point3> points) : dim_(dim), points_(std::move(points)) {
    if (dim_ != 2 && dim_ != 3) throw std::invalid_argument("dimension must be 2 or 3");
    std::sort(points_.begin(), points_.end());
    auto dup = std::adjacent_find(points_.begin(), points_.end());
    if (dup != points_.end()) throw DuplicatePoint("duplicate point " + to_string(*dup, dim_));
    for (Axis a : axes(dim_)) {
        auto& vals = values_[axis_index(a)];
        for (const auto& p : points_) vals.push_back(p[a]);
        std::sort(vals.begin(), vals.end());
        vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    }
    if (dim_ == 2) {
        for (const auto& p : points_) {
            if (p.z != 0) throw std::invalid_argument("2D point with nonzero z: " + to_string(p));
        }
    }
}

std::size_t PointSet3::index_of(const Point3& p) const {
    auto it = std::lower_bound(points_.begin(), points_.end(), p);
    if (it == points_.end() || *it != p) return points_.size();
    return static_cast<std::size_t>(it - points_.begin());
}

PointSet3 PointSet3::subset(const std::vector<std::size_t>& keep) const {
    std::vector<Point3> pts;
    pts.reserve(keep.size());
    for (auto i : keep) pts.push_back(points_.at(i));
    return PointSet3(dim_, std::move(pts));
}

PointSet3 PointSet3::without(std::size_t index) const {
    std::vector<Point3> pts;
    pts.reserve(points_.size());
    for (std::size_t i = 0; i < points_.size(); ++i) {
        if (i != index) pts.push_back(points_[i]);
    }
    return PointSet3(dim_, std::move(pts));
}

std::vector<Axis> axes(int dim) {
    if (dim == 2) return {Axis::X, Axis::Y};
    return {Axis::X, Axis::Y, Axis::Z};
}

std::vector<Slice> slices_of(const PointSet3& set) {
    std::vector<Slice> out;
    for (Axis a : axes(set.dim())) {
        const auto& vals = set.values(a);
        std::size_t first = out.size();
        for (auto v : vals) out.push_back(Slice{SliceId{a, v}, {}});
        for (std::size_t i = 0; i < set.size(); ++i) {
            auto pos = std::lower_bound(vals.begin(), vals.end(), set[i][a]) - vals.begin();
            out[first + static_cast<std::size_t>(pos)].members.push_back(i);
        }
    }
    return out;
}

CanonicalForm canonicalize_raw(int dim, const std::vector<std::array<Rat, 3>>& raw) {
    if (dim != 2 && dim != 3) throw std::invalid_argument("dimension must be 2 or 3");
    CanonicalForm form;
    const int used = dim;
    for (int a = 0; a < used; ++a) {
        auto& vals = form.raw_values[a];
        for (const auto& r : raw) vals.push_back(r[a]);
        std::sort(vals.begin(), vals.end());
        vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    }
    std::vector<Point3> pts;
    pts.reserve(raw.size());
    for (const auto& r : raw) {
        Point3 p;
        for (int a = 0; a < used; ++a) {
            const auto& vals = form.raw_values[a];
            p[axis_from_index(a)] = std::lower_bound(vals.begin(), vals.end(), r[a]) - vals.begin();
        }
        pts.push_back(p);
    }
    // Report duplicates in raw terms, before PointSet3 sees them.
    std::vector<Point3> sorted = pts;
    std::sort(sorted.begin(), sorted.end());
    auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    if (dup != sorted.end()) {
        std::string text = "(";
        for (int a = 0; a < used; ++a) {
            if (a) text += ',';
            text += rat_string(form.raw_values[a][static_cast<std::size_t>((*dup)[axis_from_index(a)])]);
        }
        throw DuplicatePoint("duplicate point " + text + ")");
    }
    form.set = PointSet3(dim, std::move(pts));
    return form;
}

PointSet3 canonicalize(int dim, const std::vector<std::array<Rat, 3>>& raw) {
    return canonicalize_raw(dim, raw).set;
}

PointSet3 canonicalize(const PointSet3& set) {
    std::vector<std::array<Rat, 3>> raw;
    raw.reserve(set.size());
    for (const auto& p : set.points()) raw.push_back({Rat(p.x), Rat(p.y), Rat(p.z)});
    return canonicalize(set.dim(), raw);
}

Rat parse_rat(const std::string& text) {
    std::string t = text;
    if (!t.empty() && t.front() == '+') t.erase(0, 1);
    auto valid_int = [](const std::string& s) {
        std::size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
        if (i == s.size()) return false;
        return std::all_of(s.begin() + static_cast<long>(i), s.end(),
                           [](char c) { return c >= '0' && c <= '9'; });
    };
    auto slash = t.find('/');
    std::string num = t.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : t.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-') {
        throw std::invalid_argument("not an exact rational: '" + text + "'");
    }
    mpz_class d(den);
    if (d == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
    Rat r(mpz_class(num), d);
    r.canonicalize();
    return r;
}

std::string rat_string(const Rat& r) {
    Rat c = r;
    c.canonicalize();
    return c.get_str();
}

}  // namespace basicset
