#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "tropnn/geometry.hpp"

namespace tropnn::geo {

struct InvalidKleeneError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Polytrope given by a Kleene-star weight matrix m (d x d, zero diagonal,
/// fixed point of max-plus matrix squaring): the region
/// { y : y_j - y_i <= -m_ij for all i != j }, conventionally pinned by
/// y_1 = 0. Membership only involves coordinate differences, so any
/// representative of a torus point may be tested.
class Polytrope {
 public:
  Polytrope(int d, std::vector<double> kleene_row_major, double tol = 1e-9);

  int dim() const { return d_; }
  double entry(int i, int j) const { return m_[static_cast<std::size_t>(i * d_ + j)]; }

  std::vector<Halfspace> halfspaces() const;
  bool contains(std::span<const double> y, double tol = 0.0) const;

  /// The tropical ball B_c(r) as a polytrope: m_ij = c_i - c_j - r.
  static Polytrope from_ball(const TropPoint& c, double r);

 private:
  int d_;
  std::vector<double> m_;
};

/// Halfspace list of the polytrope of a Kleene-star matrix; throws
/// InvalidKleeneError when the matrix has a nonzero diagonal or is not closed
/// under max-plus squaring.
std::vector<Halfspace> polytrope_from_kleene(int d, const std::vector<double>& kleene_row_major);

}  // namespace tropnn::geo
