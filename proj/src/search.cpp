#include "basicset/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <exception>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "basicset/io.hpp"

namespace basicset {

namespace {

using Mask = std::uint64_t;
using Clock = std::chrono::steady_clock;

// Runs fn(i) for i in [0, n) on `workers` threads; rethrows the first error.
template <class Fn>
void parallel_for(std::size_t n, unsigned workers, Fn&& fn) {
    workers = std::max(1u, workers);
    if (workers == 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= n) return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!error) error = std::current_exception();
                    next = n;
                    return;
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

std::uint64_t binomial_capped(std::size_t n, std::size_t k, std::uint64_t cap) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 r = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > cap) return cap + 1;
    }
    return static_cast<std::uint64_t>(r);
}

// All k-subsets of {0..n-1} as masks, ascending.
std::vector<Mask> combinations(std::size_t n, std::size_t k) {
    std::vector<Mask> out;
    if (k > n) return out;
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    for (;;) {
        Mask m = 0;
        for (auto i : idx) m |= Mask{1} << i;
        out.push_back(m);
        std::size_t pos = k;
        while (pos > 0 && idx[pos - 1] == n - k + pos - 1) --pos;
        if (pos == 0) break;
        ++idx[pos - 1];
        for (std::size_t j = pos; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

PointSet3 mask_set(const std::vector<Point3>& cells, Mask m) {
    std::vector<Point3> pts;
    for (std::size_t i = 0; m; ++i, m >>= 1)
        if (m & 1) pts.push_back(cells[i]);
    return PointSet3(3, std::move(pts));
}

Mask apply(const std::vector<std::size_t>& perm, Mask m) {
    Mask out = 0;
    for (std::size_t i = 0; m; ++i, m >>= 1)
        if (m & 1) out |= Mask{1} << perm[i];
    return out;
}

bool set_less(const PointSet3& a, const PointSet3& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.points() < b.points();
}

}  // namespace

std::vector<Point3> GridSpec::cells() const {
    std::vector<Point3> out;
    for (int x = 0; x < nx; ++x)
        for (int y = 0; y < ny; ++y)
            for (int z = 0; z < nz; ++z) out.push_back({x, y, z});
    return out;
}

MinimalityReport is_minimal_nonbasic(const PointSet3& set) {
    MinimalityReport r;
    r.set = set;
    r.is_nonbasic = !is_basic_verdict(is_basic(set));
    if (!r.is_nonbasic) return r;
    for (std::size_t i = 0; i < set.size(); ++i) {
        if (!is_basic_verdict(is_basic(set.without(i)))) r.failing_deletions.push_back(set[i]);
    }
    r.minimal = r.failing_deletions.empty();
    return r;
}

std::vector<std::vector<std::size_t>> grid_symmetries(const GridSpec& grid) {
    const std::array<int, 3> ext{grid.nx, grid.ny, grid.nz};
    std::array<int, 3> perm{0, 1, 2};
    std::vector<std::vector<std::size_t>> out;
    do {
        if (ext[perm[0]] != ext[0] || ext[perm[1]] != ext[1] || ext[perm[2]] != ext[2]) continue;
        for (int flips = 0; flips < 8; ++flips) {
            std::vector<std::size_t> map;
            for (int x = 0; x < ext[0]; ++x)
                for (int y = 0; y < ext[1]; ++y)
                    for (int z = 0; z < ext[2]; ++z) {
                        std::array<int, 3> c{x, y, z};
                        std::array<int, 3> d{};
                        for (int a = 0; a < 3; ++a) {
                            d[a] = c[perm[a]];
                            if (flips & (1 << a)) d[a] = ext[a] - 1 - d[a];
                        }
                        map.push_back(static_cast<std::size_t>((d[0] * ext[1] + d[1]) * ext[2] + d[2]));
                    }
            out.push_back(std::move(map));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

std::vector<MinimalityReport> enumerate_minimal(const GridSpec& grid, std::size_t max_size,
                                                const SearchOptions& options) {
    if (grid.nx < 1 || grid.ny < 1 || grid.nz < 1) throw std::invalid_argument("grid extents must be positive");
    const std::size_t n = grid.cell_count();
    if (n > 64) throw BudgetExceeded("grid has " + std::to_string(n) + " cells; at most 64 are supported");
    max_size = std::min(max_size, n);

    std::uint64_t total = 0;
    for (std::size_t k = 0; k <= max_size; ++k) {
        total += binomial_capped(n, k, options.budget);
        if (total > options.budget) {
            throw BudgetExceeded("more than " + std::to_string(options.budget) + " candidate subsets");
        }
    }

    const auto deadline = options.time_limit ? std::optional(Clock::now() + *options.time_limit) : std::nullopt;
    const auto cells = grid.cells();
    std::vector<Mask> found;  // every minimal non-basic mask so far

    // Levels in increasing size: a candidate containing a smaller minimal
    // non-basic set is non-minimal, otherwise it is minimal iff non-basic.
    for (std::size_t k = 1; k <= max_size; ++k) {
        auto level = combinations(n, k);
        std::vector<char> hit(level.size(), 0);
        constexpr std::size_t chunk = 256;
        parallel_for((level.size() + chunk - 1) / chunk, options.workers, [&](std::size_t c) {
            if (deadline && Clock::now() > *deadline) throw BudgetExceeded("search time limit reached");
            for (std::size_t i = c * chunk; i < std::min(level.size(), (c + 1) * chunk); ++i) {
                Mask m = level[i];
                if (std::any_of(found.begin(), found.end(), [m](Mask f) { return (m & f) == f; })) continue;
                PointSet3 s = mask_set(cells, m);
                // A minimal non-basic set has no point alone in a slice.
                if (peel(s).core.size() != s.size()) continue;
                if (certificate_space_dimension(s) > 0) hit[i] = 1;
            }
        });
        for (std::size_t i = 0; i < level.size(); ++i)
            if (hit[i]) found.push_back(level[i]);
    }

    std::vector<Mask> reported;
    if (options.dedup) {
        auto syms = grid_symmetries(grid);
        for (Mask m : found) {
            bool least = std::all_of(syms.begin(), syms.end(), [&](const auto& s) { return apply(s, m) >= m; });
            if (least) reported.push_back(m);
        }
    } else {
        reported = found;
    }

    std::vector<MinimalityReport> out(reported.size());
    parallel_for(reported.size(), options.workers,
                 [&](std::size_t i) { out[i] = is_minimal_nonbasic(mask_set(cells, reported[i])); });
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return set_less(a.set, b.set); });
    return out;
}

MinimizeResult minimize_certificate(const PointSet3& set, std::int64_t sup_bound, std::uint64_t budget) {
    if (sup_bound < 1) throw std::invalid_argument("sup bound must be positive");
    auto basis = certificate_space(set);
    if (basis.empty()) throw NotNonBasic("set is basic; no certificate exists");
    const std::size_t d = basis.size();

    // Each basis vector is 1 on its own free coordinate and 0 on the
    // others, so an integer certificate with sup-norm <= B has integer
    // free coordinates in [-B, B].
    unsigned __int128 count = 1;
    for (std::size_t i = 0; i < d; ++i) {
        count *= static_cast<unsigned __int128>(2 * sup_bound + 1);
        if (count > budget) throw BudgetExceeded("certificate search space exceeds budget");
    }

    const mpz_class bound(static_cast<long>(sup_bound));
    std::optional<MinimizedCertificate> best;
    std::vector<std::int64_t> t(d, -sup_bound);
    RatVector w(set.size());
    for (;;) {
        bool zero = std::all_of(t.begin(), t.end(), [](auto v) { return v == 0; });
        if (!zero) {
            std::fill(w.begin(), w.end(), Rat(0));
            for (std::size_t k = 0; k < d; ++k) {
                if (t[k] == 0) continue;
                Rat coef(static_cast<long>(t[k]));
                for (std::size_t i = 0; i < w.size(); ++i) w[i] += coef * basis[k][i];
            }
            bool ok = true;
            IntVector iv;
            iv.reserve(w.size());
            for (const auto& q : w) {
                if (q.get_den() != 1 || abs(q.get_num()) > bound) {
                    ok = false;
                    break;
                }
                iv.push_back(q.get_num());
            }
            if (ok) {
                auto lead = std::find_if(iv.begin(), iv.end(), [](const mpz_class& x) { return sgn(x) != 0; });
                if (*lead > 0) {
                    Certificate c{std::move(iv)};
                    mpz_class s = sup_norm(c);
                    if (!best || s < best->sup || (s == best->sup && c.weights < best->certificate.weights)) {
                        best = MinimizedCertificate{std::move(c), s};
                    }
                }
            }
        }
        std::size_t pos = 0;
        while (pos < d && t[pos] == sup_bound) t[pos++] = -sup_bound;
        if (pos == d) break;
        ++t[pos];
    }
    if (!best) return NoneWithinBound{bound};
    return *best;
}

Survey max_weight_survey(const GridSpec& grid, std::size_t max_size, const SearchOptions& options) {
    Survey survey;
    survey.grid = grid;
    survey.max_size = max_size;
    auto reports = enumerate_minimal(grid, max_size, options);
    survey.rows.resize(reports.size());
    parallel_for(reports.size(), options.workers, [&](std::size_t i) {
        auto& r = reports[i];
        auto v = is_basic(r.set);
        const auto& cert = std::get<NonBasic>(v).certificate;
        std::int64_t upper = sup_norm(cert).get_si();
        if (options.sup_bound) upper = std::min(upper, *options.sup_bound);
        auto m = minimize_certificate(r.set, upper, options.budget);
        if (std::holds_alternative<NoneWithinBound>(m)) {
            throw BudgetExceeded("a minimal set needs weights above the sup bound " + std::to_string(upper));
        }
        survey.rows[i] = SurveyRow{r.set, r.minimal, std::get<MinimizedCertificate>(m).sup};
    });
    for (std::size_t i = 0; i < survey.rows.size(); ++i) {
        const auto& s = survey.rows[i].sup_norm;
        if (s > survey.max_sup_norm) {
            survey.max_sup_norm = s;
            survey.witnesses.clear();
        }
        if (s == survey.max_sup_norm) survey.witnesses.push_back(i);
    }
    return survey;
}

std::string survey_csv(const Survey& survey) {
    std::ostringstream os;
    os << "points,size,minimal,min_sup_norm\n";
    for (const auto& r : survey.rows) {
        os << '"';
        for (std::size_t i = 0; i < r.set.size(); ++i) {
            if (i) os << ' ';
            os << to_string(r.set[i]);
        }
        os << "\"," << r.set.size() << ',' << (r.minimal ? "true" : "false") << ',' << r.sup_norm.get_str()
           << '\n';
    }
    return os.str();
}

std::string survey_json(const Survey& survey) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : survey.rows) {
        rows.push_back({{"points", points_json(r.set)["points"]},
                        {"size", r.set.size()},
                        {"minimal", r.minimal},
                        {"min_sup_norm", r.sup_norm.get_si()}});
    }
    nlohmann::json j{{"grid", {survey.grid.nx, survey.grid.ny, survey.grid.nz}},
                     {"max_size", survey.max_size},
                     {"rows", rows},
                     {"max_sup_norm", survey.max_sup_norm.get_si()},
                     {"witnesses", survey.witnesses}};
    return j.dump(2) + "\n";
}

}  // namespace basicset
