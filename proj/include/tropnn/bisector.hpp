#pragma once

#include <array>
#include <optional>
#include <variant>
#include <vector>

#include "tropnn/geometry.hpp"

namespace tropnn::geo {

/// One affine piece of a planar piecewise-linear curve, living in the
/// (x1, x2) chart of R^3/R*1 with x3 = 0. With param_axis == 0 the piece is
/// x2 = slope*x1 + intercept for x1 in [lo, hi]; with param_axis == 1 it is
/// x1 = slope*x2 + intercept for x2 in [lo, hi]. lo/hi may be +-infinity.
struct CurveSegment {
  int param_axis = 0;
  double slope = 0.0;
  double intercept = 0.0;
  double lo = -kInf;
  double hi = kInf;

  std::array<double, 2> point_at(double t) const {
    const double other = slope * t + intercept;
    return param_axis == 0 ? std::array<double, 2>{t, other}
                           : std::array<double, 2>{other, t};
  }
};

/// Contiguous chain of segments (endpoint of one piece equals the start of
/// the next within 1e-9). The first/last piece may be an unbounded ray.
struct PiecewiseLinearCurve {
  std::vector<CurveSegment> segments;

  bool contiguous(double tol = 1e-9) const;
};

/// Minimum Euclidean distance from a planar point to the curve, with rays
/// clipped to parameter magnitude `clip`.
double curve_distance(const PiecewiseLinearCurve& curve, double x1, double x2,
                      double clip = 1e6);

/// Roughly uniform point sample along the curve; rays are clipped to
/// parameter range [-clip, clip].
std::vector<std::array<double, 2>> sample_curve(const PiecewiseLinearCurve& curve,
                                                int points_per_segment, double clip = 25.0);

std::string describe(const PiecewiseLinearCurve& curve);

/// Bisector of a degenerate (not weakly general) pair in R^3/R*1: two
/// full-dimensional wedge components joined by a one-dimensional segment.
struct DegenerateBisector {
  std::vector<std::vector<Halfspace>> components;
  std::optional<CurveSegment> connector;
};

using BisectorResult = std::variant<PiecewiseLinearCurve, DegenerateBisector>;

/// Exact two-point bisector in R^3/R*1. Weakly general pairs yield the
/// closed-form five-piece curve (reduced to the canonical pair
/// (0,0,0), (1,w,0) by translation, positive scaling and coordinate
/// permutation, then mapped back). Degenerate pairs with one tied
/// coordinate difference yield a DegenerateBisector. a == b is an error.
BisectorResult bisector_two_points(const TropPoint& a, const TropPoint& b);

/// coeffs . x <= rhs (or == rhs) over the first d-1 canonical coordinates
/// (the last coordinate is pinned to zero).
struct LinearConstraint {
  std::vector<double> coeffs;
  double rhs = 0.0;
};

/// A maximal cell of the two-point bisector for points in weakly general
/// position: the locus where term (i,j) of max_{p!=q}(x_p - x_q - a_p + a_q)
/// and term (k,l) of the b-centred polynomial attain the shared maximum.
struct BisectorCell {
  int i, j, k, l;
  LinearConstraint equality;
  std::vector<LinearConstraint> bounds;
};

/// Enumerates all nonempty cells (emptiness decided by exact rational LP
/// feasibility on the dyadic-rational inputs). The union of the cells is the
/// bisector. Requires weak general position.
std::vector<BisectorCell> bisector_cells(const TropPoint& a, const TropPoint& b);

bool cell_contains(const BisectorCell& cell, std::span<const double> x, double tol = 1e-9);

/// For d == 3: converts cells to explicit curve segments (exact rational
/// interval arithmetic; zero-length cells dropped; segments sorted
/// deterministically, not chained).
std::vector<CurveSegment> cells_to_segments(const std::vector<BisectorCell>& cells);

/// True when some cross pair (w1 in first list, w2 in second) fails weak
/// general position, i.e. the two-class decision boundary owns a
/// full-dimensional region.
bool has_full_dimensional_cells(const std::vector<TropPoint>& first_class,
                                const std::vector<TropPoint>& second_class);

}  // namespace tropnn::geo
