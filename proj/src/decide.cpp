#include "basicset/decide.hpp"

#include <algorithm>

namespace basicset {

SliceMatrix slice_matrix(const PointSet3& set) {
    auto slices = slices_of(set);
    SliceMatrix out{RatMatrix(set.size(), slices.size()), {}};
    out.columns.reserve(slices.size());
    for (std::size_t j = 0; j < slices.size(); ++j) {
        out.columns.push_back(slices[j].id);
        for (auto i : slices[j].members) out.matrix(i, j) = 1;
    }
    return out;
}

std::string certificate_violation(const PointSet3& set, const Certificate& cert) {
    if (cert.weights.size() != set.size()) return "weight count differs from point count";
    mpz_class content = 0;
    for (const auto& w : cert.weights) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), w.get_mpz_t());
    if (content == 0) return "all weights are zero";
    if (content != 1) return "weights share the factor " + content.get_str();
    for (const auto& s : slices_of(set)) {
        mpz_class sum = 0;
        for (auto i : s.members) sum += cert.weights[i];
        if (sum != 0) return "slice " + to_string(s.id) + " has weight sum " + sum.get_str();
    }
    return {};
}

mpz_class sup_norm(const Certificate& cert) {
    mpz_class best = 0;
    for (const auto& w : cert.weights) {
        mpz_class a = abs(w);
        if (a > best) best = a;
    }
    return best;
}

std::vector<RatVector> certificate_space(const PointSet3& set) {
    if (set.empty()) return {};
    return kernel_basis(slice_matrix(set).matrix.transposed());
}

std::size_t certificate_space_dimension(const PointSet3& set) {
    if (set.empty()) return 0;
    return set.size() - rank(slice_matrix(set).matrix);
}

Verdict is_basic(const PointSet3& set) {
    auto kernel = certificate_space(set);
    if (kernel.empty()) return Basic{};
    return NonBasic{Certificate{primitive_integer(kernel.front())}};
}

Rat Decomposition::evaluate(const Point3& p, int dim) const {
    Rat acc = 0;
    for (Axis a : axes(dim)) {
        const auto& table = tables[axis_index(a)];
        auto it = table.find(p[a]);
        if (it == table.end()) throw DomainMismatch("decomposition has no value for " + to_string(p, dim));
        acc += it->second;
    }
    return acc;
}

namespace {

void check_domain(const PointSet3& set, const PointFunction& f) {
    if (f.size() != set.size()) {
        throw DomainMismatch("function defined on " + std::to_string(f.size()) + " points, set has " +
                             std::to_string(set.size()));
    }
    for (const auto& [p, value] : f) {
        if (!set.contains(p)) throw DomainMismatch("function defined off the set at " + to_string(p, set.dim()));
    }
}

}  // namespace

Rat pairing(const PointSet3& set, const Certificate& cert, const PointFunction& f) {
    check_domain(set, f);
    Rat acc = 0;
    for (std::size_t i = 0; i < set.size(); ++i) acc += Rat(cert.weights.at(i)) * f.at(set[i]);
    return acc;
}

DecomposeResult decompose(const PointSet3& set, const PointFunction& f) {
    check_domain(set, f);
    SliceMatrix sm = slice_matrix(set);
    RatVector rhs;
    rhs.reserve(set.size());
    for (const auto& p : set.points()) rhs.push_back(f.at(p));

    if (auto x = solve(sm.matrix, rhs)) {
        Decomposition d;
        for (std::size_t j = 0; j < sm.columns.size(); ++j) {
            d.tables[axis_index(sm.columns[j].axis)][sm.columns[j].value] = (*x)[j];
        }
        return d;
    }
    // Inconsistent: some slice-balanced weighting pairs nonzero with f.
    for (const auto& v : kernel_basis(sm.matrix.transposed())) {
        Certificate c{primitive_integer(v)};
        Rat p = pairing(set, c, f);
        if (sgn(p) != 0) return Witness{std::move(c), std::move(p)};
    }
    throw std::logic_error("inconsistent system without a separating certificate");
}

PointFunction indicator_witness(const PointSet3& set, const Certificate& cert) {
    if (cert.weights.size() != set.size()) throw DomainMismatch("certificate length differs from set size");
    PointFunction f;
    bool chosen = false;
    for (std::size_t i = 0; i < set.size(); ++i) {
        bool pick = !chosen && sgn(cert.weights[i]) != 0;
        f[set[i]] = pick ? 1 : 0;
        chosen = chosen || pick;
    }
    if (!chosen) throw ZeroVector("certificate has no nonzero weight");
    return f;
}

PeelResult peel(const PointSet3& set) {
    auto slices = slices_of(set);
    // slice ids touching each point
    std::vector<std::vector<std::size_t>> owned(set.size());
    std::vector<std::size_t> count(slices.size());
    for (std::size_t s = 0; s < slices.size(); ++s) {
        count[s] = slices[s].members.size();
        for (auto i : slices[s].members) owned[i].push_back(s);
    }

    std::vector<bool> alive(set.size(), true);
    PeelResult out;
    bool removed = true;
    while (removed) {
        removed = false;
        for (std::size_t i = 0; i < set.size(); ++i) {
            if (!alive[i]) continue;
            bool alone = std::any_of(owned[i].begin(), owned[i].end(), [&](auto s) { return count[s] == 1; });
            if (!alone) continue;
            alive[i] = false;
            for (auto s : owned[i]) --count[s];
            out.order.push_back(set[i]);
            removed = true;
            break;
        }
    }
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < set.size(); ++i)
        if (alive[i]) keep.push_back(i);
    out.core = set.subset(keep);
    return out;
}

ColoringResult coloring_certificate(const PointSet3& set, const Coloring& coloring) {
    if (coloring.size() != set.size()) throw DomainMismatch("coloring is not total on the set");
    if (set.empty()) throw DomainMismatch("empty set admits no certificate");
    IntVector w;
    w.reserve(set.size());
    for (const auto& p : set.points()) {
        auto it = coloring.find(p);
        if (it == coloring.end()) throw DomainMismatch("no color for " + to_string(p, set.dim()));
        w.emplace_back(it->second == Color::Black ? 1 : -1);
    }
    for (const auto& s : slices_of(set)) {
        UnbalancedSlice u{s.id, 0, 0};
        for (auto i : s.members) (w[i] > 0 ? u.black : u.white)++;
        if (u.black != u.white) return u;
    }
    if (w.front() < 0)
        for (auto& x : w) x = -x;
    return Certificate{std::move(w)};
}

}  // namespace basicset
