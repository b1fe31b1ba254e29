#pragma once

#include <iosfwd>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace tropnn::geo {

/// A point of the max-plus projective torus R^d / R*1, kept in canonical form:
/// the last coordinate is exactly zero. Adding a constant to every coordinate
/// does not change the point, so the canonical representative subtracts the
/// last raw coordinate from all of them.
class TropPoint {
 public:
  /// Normalizes a raw vector (d >= 2, all finite) into canonical form.
  explicit TropPoint(std::vector<double> raw);

  int dim() const { return static_cast<int>(coords_.size()); }
  double operator[](int i) const { return coords_[static_cast<std::size_t>(i)]; }
  const std::vector<double>& coords() const { return coords_; }
  std::span<const double> span() const { return coords_; }

  bool operator==(const TropPoint& other) const = default;

 private:
  std::vector<double> coords_;
};

/// Canonical-form projection; idempotent.
TropPoint normalize(const std::vector<double>& raw);

/// Max-plus (tropical) metric: max_i(x_i - y_i) - min_i(x_i - y_i).
/// Invariant under adding c*1 to either argument.
double trop_dist(std::span<const double> x, std::span<const double> y);
double trop_dist(const TropPoint& x, const TropPoint& y);

/// Argmax/argmin coordinates of x - y with lowest-index tie break. The
/// subgradient of trop_dist(x, y) in x is +1 at max_index, -1 at min_index.
struct ArgPair {
  int max_index;
  int min_index;
  bool operator==(const ArgPair&) const = default;
};
ArgPair trop_arg_pair(std::span<const double> x, std::span<const double> y);

/// Two-sided bound on one pairwise coordinate difference:
/// lower <= x_i - x_j <= upper. Coordinates are interpreted with the
/// canonical convention x_{d-1} = 0, but membership only looks at
/// differences and is therefore representative-independent.
struct Halfspace {
  int i;
  int j;
  double lower;
  double upper;
};

bool halfspace_satisfied(const Halfspace& h, std::span<const double> x, double tol = 0.0);
bool halfspaces_satisfied(const std::vector<Halfspace>& hs, std::span<const double> x,
                          double tol = 0.0);

/// H-representation of the tropical ball B_c(r): for every pair i < j,
/// (c_i - c_j) - r <= x_i - x_j <= (c_i - c_j) + r. A point satisfies all of
/// them exactly when trop_dist(c, x) <= r.
std::vector<Halfspace> trop_ball_halfspaces(const TropPoint& c, double r);

/// True when all coordinates of a - b are pairwise distinct, i.e. the pair
/// does not lie on a hyperplane parallel to a facet of the tropical unit
/// ball. Comparison is exact by default; a tolerance may be supplied.
bool weak_general_position(const TropPoint& a, const TropPoint& b, double tol = 0.0);

/// A stored embedding-layer weight row together with its class label. The
/// geometric center of the weight is -w (one explicit negation, nowhere
/// implicit).
struct WeightedClass {
  TropPoint weight;
  int label;
};

/// Center of a stored weight row.
TropPoint weight_center(const TropPoint& w);

/// Label of the weight whose center -w is tropically nearest to x;
/// ties go to the lowest list index.
int classify_nearest(const TropPoint& x, const std::vector<WeightedClass>& weights);

enum class SectorKind { Max, Min };

/// Open/closed sector of the max- or min-tropical hyperplane with offset
/// vector omega: the max-sector k contains x with x_k + omega_k strictly
/// dominating every other x_i + omega_i (dually for min).
struct Sector {
  SectorKind kind;
  TropPoint offset;
  int index;
};

enum class SectorPosition { InsideOpen, OnBoundary, Outside };

SectorPosition sector_membership(const TropPoint& x, const Sector& s);

/// Line-oriented plain-text point serialization: "d=<int>" header then one
/// whitespace-separated row per point, 17 significant digits (round-trip
/// bit-exact).
void write_points(std::ostream& os, const std::vector<TropPoint>& points);
std::vector<TropPoint> read_points(std::istream& is);
void write_points_file(const std::string& path, const std::vector<TropPoint>& points);
std::vector<TropPoint> read_points_file(const std::string& path);

/// Same container for halfspace lists; rows are "i j lower upper".
void write_halfspaces(std::ostream& os, int d, const std::vector<Halfspace>& hs);
std::pair<int, std::vector<Halfspace>> read_halfspaces(std::istream& is);

/// 17-significant-digit decimal formatting used by every text format in this
/// project; parsing the result recovers the exact double.
std::string format_double(double v);

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace tropnn::geo
