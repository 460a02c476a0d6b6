#ifndef BASICSET_DECIDE_HPP
#define BASICSET_DECIDE_HPP

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "basicset/core.hpp"
#include "basicset/ratlin.hpp"

namespace basicset {

/// Raised when an operation needs a non-basic set and gets a basic one.
class NotNonBasic : public Error {
public:
    using Error::Error;
};

/// Point-by-slice 0/1 incidence matrix. Row i is point i in canonical
/// order; column j is slice j in slices_of order.
struct SliceMatrix {
    RatMatrix matrix;
    std::vector<SliceId> columns;
};

SliceMatrix slice_matrix(const PointSet3& set);

/// Nonzero primitive integer weights on the points of a set such that every
/// slice has weight sum zero.
struct Certificate {
    IntVector weights;

    friend bool operator==(const Certificate&, const Certificate&) = default;
};

/// Checks the certificate invariants against a set: length, nonzero, gcd 1
/// and zero weight sum in every slice. Returns an empty string when valid,
/// otherwise a description of the first violation.
std::string certificate_violation(const PointSet3& set, const Certificate& cert);
inline bool is_valid_certificate(const PointSet3& set, const Certificate& cert) {
    return certificate_violation(set, cert).empty();
}

mpz_class sup_norm(const Certificate& cert);

struct Basic {};
struct NonBasic {
    Certificate certificate;
};
using Verdict = std::variant<Basic, NonBasic>;

inline bool is_basic_verdict(const Verdict& v) { return std::holds_alternative<Basic>(v); }

/// Exact decision. NonBasic carries the primitive form of the first kernel
/// basis vector of the slice-sum system.
Verdict is_basic(const PointSet3& set);

/// Dimension of the space of slice-balanced weightings (0 iff basic).
std::size_t certificate_space_dimension(const PointSet3& set);

/// Rational basis of the slice-balanced weightings, canonical free-column
/// convention from kernel_basis.
std::vector<RatVector> certificate_space(const PointSet3& set);

using PointFunction = std::map<Point3, Rat>;

/// f(x,y,z) = f1(x) + f2(y) + f3(z); per-axis tables keyed by coordinate.
/// In 2D the third table is empty.
struct Decomposition {
    std::array<std::map<std::int64_t, Rat>, 3> tables;

    Rat evaluate(const Point3& p, int dim) const;
};

/// Proof that a particular function does not decompose: a certificate whose
/// pairing with the function is nonzero.
struct Witness {
    Certificate certificate;
    Rat pairing;
};

using DecomposeResult = std::variant<Decomposition, Witness>;

/// Throws DomainMismatch unless f is defined on exactly the points of set.
DecomposeResult decompose(const PointSet3& set, const PointFunction& f);

Rat pairing(const PointSet3& set, const Certificate& cert, const PointFunction& f);

/// Indicator of the first point carrying a nonzero weight.
PointFunction indicator_witness(const PointSet3& set, const Certificate& cert);

struct PeelResult {
    std::vector<Point3> order;  // removal order
    PointSet3 core;
};

/// Repeatedly removes the lowest-index point that is alone in one of its
/// slices within the remaining set. An empty core proves basicness.
PeelResult peel(const PointSet3& set);

enum class Color { Black, White };
using Coloring = std::map<Point3, Color>;

struct UnbalancedSlice {
    SliceId slice;
    std::size_t black = 0;
    std::size_t white = 0;
};

using ColoringResult = std::variant<Certificate, UnbalancedSlice>;

/// Black -> +1, white -> -1, sign-normalized, if every slice carries as many
/// black as white points. Throws DomainMismatch if the coloring is not total.
ColoringResult coloring_certificate(const PointSet3& set, const Coloring& coloring);

}  // namespace basicset

#endif
