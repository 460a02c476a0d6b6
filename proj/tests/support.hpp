// Test-only oracles and generators. Nothing here calls into the library's
// elimination or slice bookkeeping; the rank oracle is fraction-free
// (Bareiss) integer elimination on a matrix built straight from coordinates.
#ifndef BASICSET_TESTS_SUPPORT_HPP
#define BASICSET_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "basicset/core.hpp"

namespace oracle {

using IntMatrix = std::vector<std::vector<mpz_class>>;

inline std::size_t bareiss_rank(IntMatrix a) {
    const std::size_t rows = a.size();
    if (rows == 0) return 0;
    const std::size_t cols = a[0].size();
    mpz_class prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    return r;
}

/// Point x slice incidence built directly from coordinates: one column per
/// distinct (axis, value) pair.
inline IntMatrix incidence(const std::vector<basicset::Point3>& pts, int dim) {
    std::map<std::pair<int, std::int64_t>, std::size_t> col;
    for (const auto& p : pts) {
        std::int64_t c[3] = {p.x, p.y, p.z};
        for (int a = 0; a < dim; ++a) col.emplace(std::make_pair(a, c[a]), 0);
    }
    std::size_t k = 0;
    for (auto& [key, idx] : col) idx = k++;
    IntMatrix m(pts.size(), std::vector<mpz_class>(col.size(), 0));
    for (std::size_t i = 0; i < pts.size(); ++i) {
        std::int64_t c[3] = {pts[i].x, pts[i].y, pts[i].z};
        for (int a = 0; a < dim; ++a) m[i][col.at({a, c[a]})] = 1;
    }
    return m;
}

/// Basic iff the per-point equations are independent.
inline bool basic(const std::vector<basicset::Point3>& pts, int dim = 3) {
    if (pts.empty()) return true;
    return bareiss_rank(incidence(pts, dim)) == pts.size();
}

inline bool basic(const basicset::PointSet3& s) { return basic(s.points(), s.dim()); }

/// Direct check that integer weights sum to zero on every slice.
inline bool balanced(const std::vector<basicset::Point3>& pts, const std::vector<mpz_class>& w, int dim = 3) {
    std::map<std::pair<int, std::int64_t>, mpz_class> sums;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        std::int64_t c[3] = {pts[i].x, pts[i].y, pts[i].z};
        for (int a = 0; a < dim; ++a) sums[{a, c[a]}] += w[i];
    }
    return std::all_of(sums.begin(), sums.end(), [](const auto& kv) { return kv.second == 0; });
}

/// Random subset of an nx x ny x nz grid with `size` points.
inline basicset::PointSet3 random_subset(std::mt19937_64& rng, int nx, int ny, int nz, std::size_t size,
                                         int dim = 3) {
    std::vector<basicset::Point3> cells;
    for (int x = 0; x < nx; ++x)
        for (int y = 0; y < ny; ++y)
            for (int z = 0; z < nz; ++z) cells.push_back({x, y, z});
    std::shuffle(cells.begin(), cells.end(), rng);
    cells.resize(std::min(size, cells.size()));
    return basicset::PointSet3(dim, cells);
}

/// All subsets of the 2x2x2 vertex cube, by mask.
inline std::vector<basicset::PointSet3> cube_subsets() {
    std::vector<basicset::PointSet3> out;
    for (int mask = 0; mask < 256; ++mask) {
        std::vector<basicset::Point3> pts;
        for (int i = 0; i < 8; ++i)
            if (mask & (1 << i)) pts.push_back({(i >> 2) & 1, (i >> 1) & 1, i & 1});
        out.emplace_back(3, pts);
    }
    return out;
}

inline basicset::Rat random_rat(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-20, 20), den(1, 7);
    basicset::Rat r(num(rng), den(rng));
    r.canonicalize();
    return r;
}

inline basicset::PointSet3 points(std::initializer_list<std::array<int, 3>> pts, int dim = 3) {
    std::vector<basicset::Point3> v;
    for (const auto& p : pts) v.push_back({p[0], p[1], p[2]});
    return basicset::PointSet3(dim, v);
}

}  // namespace oracle

#endif
