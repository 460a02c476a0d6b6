#ifndef BASICSET_SEARCH_HPP
#define BASICSET_SEARCH_HPP

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "basicset/core.hpp"
#include "basicset/decide.hpp"

namespace basicset {

class BudgetExceeded : public Error {
public:
    using Error::Error;
};

/// Box of lattice points {0..nx-1} x {0..ny-1} x {0..nz-1}.
struct GridSpec {
    int nx = 1;
    int ny = 1;
    int nz = 1;

    std::size_t cell_count() const {
        return static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny) * static_cast<std::size_t>(nz);
    }
    std::vector<Point3> cells() const;  // lexicographic
};

struct MinimalityReport {
    PointSet3 set;
    bool is_nonbasic = false;
    bool minimal = false;
    std::vector<Point3> failing_deletions;  // deletions that stay non-basic
};

MinimalityReport is_minimal_nonbasic(const PointSet3& set);

struct SearchOptions {
    bool dedup = false;                                // one representative per grid-symmetry orbit
    unsigned workers = 1;
    std::uint64_t budget = std::uint64_t{1} << 27;     // max candidate subsets examined
    std::optional<std::chrono::milliseconds> time_limit;
    std::optional<std::int64_t> sup_bound;             // survey: largest sup-norm tried
};

/// Symmetries of the grid: axis permutations preserving the extents,
/// composed with independent reflections of each axis.
std::vector<std::vector<std::size_t>> grid_symmetries(const GridSpec& grid);

/// All inclusion-minimal non-basic subsets of the grid with at most
/// max_size points, in (size, point list) order. Throws BudgetExceeded
/// when the subset count or the time limit is exceeded.
std::vector<MinimalityReport> enumerate_minimal(const GridSpec& grid, std::size_t max_size,
                                                const SearchOptions& options = {});

struct NoneWithinBound {
    mpz_class bound;
};

struct MinimizedCertificate {
    Certificate certificate;
    mpz_class sup;
};

using MinimizeResult = std::variant<MinimizedCertificate, NoneWithinBound>;

/// Smallest sup-norm certificate with entries in [-sup_bound, sup_bound],
/// ties broken lexicographically. Exhaustive over the integer points of the
/// certificate space whose free coordinates lie in the bound. Throws
/// NotNonBasic on a basic set and BudgetExceeded if (2 sup_bound + 1)^d
/// exceeds `budget`.
MinimizeResult minimize_certificate(const PointSet3& set, std::int64_t sup_bound,
                                    std::uint64_t budget = std::uint64_t{1} << 27);

struct SurveyRow {
    PointSet3 set;
    bool minimal = false;
    mpz_class sup_norm;
};

struct Survey {
    GridSpec grid;
    std::size_t max_size = 0;
    std::vector<SurveyRow> rows;
    mpz_class max_sup_norm = 0;
    std::vector<std::size_t> witnesses;  // rows attaining max_sup_norm
};

Survey max_weight_survey(const GridSpec& grid, std::size_t max_size, const SearchOptions& options = {});

std::string survey_csv(const Survey& survey);
std::string survey_json(const Survey& survey);

}  // namespace basicset

#endif
