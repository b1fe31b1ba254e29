#include "tropnn/bisector.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "tropnn/lp.hpp"

namespace tropnn::geo {

namespace {

double clip_param(double t, double clip) { return std::clamp(t, -clip, clip); }

std::array<double, 2> seg_endpoint(const CurveSegment& s, bool upper, double clip) {
  return s.point_at(clip_param(upper ? s.hi : s.lo, clip));
}

double dist2(const std::array<double, 2>& p, const std::array<double, 2>& q) {
  const double dx = p[0] - q[0];
  const double dy = p[1] - q[1];
  return dx * dx + dy * dy;
}

double point_segment_distance(const std::array<double, 2>& p, const std::array<double, 2>& a,
                              const std::array<double, 2>& b) {
  const double abx = b[0] - a[0];
  const double aby = b[1] - a[1];
  const double len2 = abx * abx + aby * aby;
  double t = 0.0;
  if (len2 > 0.0) {
    t = std::clamp(((p[0] - a[0]) * abx + (p[1] - a[1]) * aby) / len2, 0.0, 1.0);
  }
  return std::sqrt(dist2(p, {a[0] + t * abx, a[1] + t * aby}));
}

}  // namespace

bool PiecewiseLinearCurve::contiguous(double tol) const {
  for (std::size_t s = 0; s + 1 < segments.size(); ++s) {
    const double clip = 1e9;
    double best = kInf;
    for (bool u1 : {false, true}) {
      for (bool u2 : {false, true}) {
        best = std::min(best, dist2(seg_endpoint(segments[s], u1, clip),
                                    seg_endpoint(segments[s + 1], u2, clip)));
      }
    }
    if (std::sqrt(best) > tol) return false;
  }
  return true;
}

double curve_distance(const PiecewiseLinearCurve& curve, double x1, double x2, double clip) {
  double best = kInf;
  const std::array<double, 2> p{x1, x2};
  for (const CurveSegment& s : curve.segments) {
    const double lo = clip_param(s.lo, clip);
    const double hi = clip_param(s.hi, clip);
    if (lo > hi) continue;
    best = std::min(best, point_segment_distance(p, s.point_at(lo), s.point_at(hi)));
  }
  return best;
}

std::vector<std::array<double, 2>> sample_curve(const PiecewiseLinearCurve& curve,
                                                int points_per_segment, double clip) {
  std::vector<std::array<double, 2>> out;
  for (const CurveSegment& s : curve.segments) {
    const double lo = clip_param(s.lo, clip);
    const double hi = clip_param(s.hi, clip);
    if (lo > hi) continue;
    for (int k = 0; k < points_per_segment; ++k) {
      const double t = points_per_segment == 1
                           ? 0.5 * (lo + hi)
                           : lo + (hi - lo) * k / (points_per_segment - 1);
      out.push_back(s.point_at(t));
    }
  }
  return out;
}

std::string describe(const PiecewiseLinearCurve& curve) {
  std::ostringstream os;
  auto bound = [](double v) {
    if (v == kInf) return std::string("inf");
    if (v == -kInf) return std::string("-inf");
    std::ostringstream b;
    b << v;
    return b.str();
  };
  for (const CurveSegment& s : curve.segments) {
    const char* dep = s.param_axis == 0 ? "x2" : "x1";
    const char* var = s.param_axis == 0 ? "x1" : "x2";
    os << dep << " = ";
    if (s.slope != 0.0) os << s.slope << "*" << var << " + ";
    os << s.intercept << "  for " << var << " in [" << bound(s.lo) << ", " << bound(s.hi)
       << "]\n";
  }
  return os.str();
}

namespace {

// Canonical-frame reduction x -> P(x - a)/lambda sending a to the origin and
// b to (1, w, 0) with w in (0,1) for weakly general pairs.
struct Reduction {
  std::array<int, 3> sigma{};  // canonical position k reads source coordinate sigma[k]
  double lambda = 1.0;
  std::array<double, 3> base{};  // coordinates of a

  std::array<double, 2> map_point(double y1, double y2) const {
    std::array<double, 3> z{0.0, 0.0, 0.0};
    z[static_cast<std::size_t>(sigma[0])] = lambda * y1;
    z[static_cast<std::size_t>(sigma[1])] = lambda * y2;
    const double r0 = base[0] + z[0];
    const double r1 = base[1] + z[1];
    const double r2 = base[2] + z[2];
    return {r0 - r2, r1 - r2};
  }

  std::array<double, 2> map_dir(double d1, double d2) const {
    const auto p = map_point(d1, d2);
    const auto o = map_point(0.0, 0.0);
    return {p[0] - o[0], p[1] - o[1]};
  }

  Halfspace map_halfspace(const Halfspace& h) const {
    const int i = sigma[static_cast<std::size_t>(h.i)];
    const int j = sigma[static_cast<std::size_t>(h.j)];
    const double shift = base[static_cast<std::size_t>(i)] - base[static_cast<std::size_t>(j)];
    const double lower = h.lower == -kInf ? -kInf : lambda * h.lower + shift;
    const double upper = h.upper == kInf ? kInf : lambda * h.upper + shift;
    return {i, j, lower, upper};
  }
};

// Open polygonal chain with an incoming and an outgoing infinite ray.
struct Chain {
  std::vector<std::array<double, 2>> vertices;
  std::array<double, 2> ray_in{};
  std::array<double, 2> ray_out{};
};

Chain canonical_chain(double w) {
  Chain c;
  c.ray_in = {0.0, -1.0};
  c.ray_out = {0.0, 1.0};
  if (w <= 0.5) {
    c.vertices = {{w, 2.0 * w - 1.0}, {0.5, 0.0}, {0.5, w}, {1.0 - w, 1.0 - w}};
  } else {
    c.vertices = {{w, 0.0}, {0.5, w - 0.5}, {0.5, 0.5}, {1.0 - w, w}};
  }
  return c;
}

CurveSegment segment_between(const std::array<double, 2>& p, const std::array<double, 2>& q) {
  CurveSegment s;
  const double dx = q[0] - p[0];
  const double dy = q[1] - p[1];
  if (std::abs(dx) >= std::abs(dy)) {
    s.param_axis = 0;
    s.slope = dx == 0.0 ? 0.0 : dy / dx;
    s.intercept = p[1] - s.slope * p[0];
    s.lo = std::min(p[0], q[0]);
    s.hi = std::max(p[0], q[0]);
  } else {
    s.param_axis = 1;
    s.slope = dy == 0.0 ? 0.0 : dx / dy;
    s.intercept = p[0] - s.slope * p[1];
    s.lo = std::min(p[1], q[1]);
    s.hi = std::max(p[1], q[1]);
  }
  return s;
}

CurveSegment ray_segment(const std::array<double, 2>& origin, const std::array<double, 2>& dir) {
  CurveSegment s;
  if (std::abs(dir[0]) >= std::abs(dir[1])) {
    s.param_axis = 0;
    s.slope = dir[1] / dir[0];
    s.intercept = origin[1] - s.slope * origin[0];
    if (dir[0] > 0.0) {
      s.lo = origin[0];
      s.hi = kInf;
    } else {
      s.lo = -kInf;
      s.hi = origin[0];
    }
  } else {
    s.param_axis = 1;
    s.slope = dir[1] == 0.0 ? 0.0 : dir[0] / dir[1];
    s.intercept = origin[0] - s.slope * origin[1];
    if (dir[1] > 0.0) {
      s.lo = origin[1];
      s.hi = kInf;
    } else {
      s.lo = -kInf;
      s.hi = origin[1];
    }
  }
  return s;
}

PiecewiseLinearCurve chain_to_curve(const Chain& chain) {
  PiecewiseLinearCurve curve;
  curve.segments.push_back(ray_segment(chain.vertices.front(), chain.ray_in));
  for (std::size_t i = 0; i + 1 < chain.vertices.size(); ++i) {
    const auto& p = chain.vertices[i];
    const auto& q = chain.vertices[i + 1];
    if (dist2(p, q) < 1e-24) continue;
    curve.segments.push_back(segment_between(p, q));
  }
  curve.segments.push_back(ray_segment(chain.vertices.back(), chain.ray_out));
  return curve;
}

Chain map_chain(const Chain& chain, const Reduction& red) {
  Chain out;
  out.vertices.reserve(chain.vertices.size());
  for (const auto& v : chain.vertices) out.vertices.push_back(red.map_point(v[0], v[1]));
  out.ray_in = red.map_dir(chain.ray_in[0], chain.ray_in[1]);
  out.ray_out = red.map_dir(chain.ray_out[0], chain.ray_out[1]);
  return out;
}

}  // namespace

BisectorResult bisector_two_points(const TropPoint& a, const TropPoint& b) {
  if (a.dim() != 3 || b.dim() != 3) {
    throw std::invalid_argument("bisector_two_points: only d = 3 is supported");
  }
  const std::array<double, 3> v{b[0] - a[0], b[1] - a[1], 0.0};
  if (v[0] == 0.0 && v[1] == 0.0) {
    throw std::domain_error("bisector_two_points: identical points, bisector is everything");
  }

  Reduction red;
  red.base = {a[0], a[1], 0.0};

  const bool t01 = v[0] == v[1];
  const bool t02 = v[0] == v[2];
  const bool t12 = v[1] == v[2];
  if (!t01 && !t02 && !t12) {
    std::array<int, 3> order{0, 1, 2};
    std::sort(order.begin(), order.end(), [&](int p, int q) {
      return v[static_cast<std::size_t>(p)] > v[static_cast<std::size_t>(q)];
    });
    red.sigma = order;
    red.lambda = v[static_cast<std::size_t>(order[0])] - v[static_cast<std::size_t>(order[2])];
    const double w = (v[static_cast<std::size_t>(order[1])] -
                      v[static_cast<std::size_t>(order[2])]) /
                     red.lambda;
    return chain_to_curve(map_chain(canonical_chain(w), red));
  }

  // One tied coordinate pair; bisector owns full-dimensional wedges.
  int ti = 0, tj = 1, other = 2;
  if (t02) {
    ti = 0;
    tj = 2;
    other = 1;
  } else if (t12) {
    ti = 1;
    tj = 2;
    other = 0;
  }

  DegenerateBisector result;
  std::vector<Halfspace> comp_a;
  std::vector<Halfspace> comp_b;
  std::array<double, 2> conn_p{}, conn_q{};
  if (v[static_cast<std::size_t>(ti)] > v[static_cast<std::size_t>(other)]) {
    // Tied value is the larger one: canonical pair (0,0,0), (1,1,0).
    red.sigma = {ti, tj, other};
    red.lambda = v[static_cast<std::size_t>(ti)] - v[static_cast<std::size_t>(other)];
    comp_a = {{0, 2, 1.0, kInf}, {1, 2, -kInf, 0.0}};
    comp_b = {{1, 2, 1.0, kInf}, {0, 2, -kInf, 0.0}};
    conn_p = {0.0, 1.0};
    conn_q = {1.0, 0.0};
  } else {
    // Tied value is the smaller one: canonical pair (0,0,0), (1,0,0).
    red.sigma = {other, ti, tj};
    red.lambda = v[static_cast<std::size_t>(other)] - v[static_cast<std::size_t>(ti)];
    comp_a = {{0, 2, 1.0, kInf}, {1, 0, 0.0, kInf}};
    comp_b = {{0, 2, -kInf, 0.0}, {1, 0, -kInf, -1.0}};
    conn_p = {0.0, -1.0};
    conn_q = {1.0, 1.0};
  }

  std::vector<Halfspace> mapped_a;
  std::vector<Halfspace> mapped_b;
  for (const Halfspace& h : comp_a) mapped_a.push_back(red.map_halfspace(h));
  for (const Halfspace& h : comp_b) mapped_b.push_back(red.map_halfspace(h));
  result.components = {mapped_a, mapped_b};
  result.connector = segment_between(red.map_point(conn_p[0], conn_p[1]),
                                     red.map_point(conn_q[0], conn_q[1]));
  return result;
}

namespace {

using lp::Rational;

// Coefficient vector of (x_p - x_q) over the first d-1 canonical coordinates.
std::vector<double> diff_coeffs(int d, int p, int q) {
  std::vector<double> c(static_cast<std::size_t>(d - 1), 0.0);
  if (p < d - 1) c[static_cast<std::size_t>(p)] += 1.0;
  if (q < d - 1) c[static_cast<std::size_t>(q)] -= 1.0;
  return c;
}

std::vector<double> sub(const std::vector<double>& u, const std::vector<double>& v) {
  std::vector<double> out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = u[i] - v[i];
  return out;
}

lp::Constraint to_lp(const LinearConstraint& c, lp::Relation rel) {
  lp::Constraint out;
  out.rel = rel;
  out.rhs = lp::to_rational(c.rhs);
  out.coeffs.reserve(c.coeffs.size());
  for (double v : c.coeffs) out.coeffs.push_back(lp::to_rational(v));
  return out;
}

}  // namespace

std::vector<BisectorCell> bisector_cells(const TropPoint& a, const TropPoint& b) {
  if (a.dim() != b.dim()) {
    throw std::domain_error("bisector_cells: dimension mismatch");
  }
  if (!weak_general_position(a, b)) {
    throw std::invalid_argument("bisector_cells: points must be in weak general position");
  }
  const int d = a.dim();

  std::vector<std::pair<int, int>> pairs;
  for (int p = 0; p < d; ++p) {
    for (int q = 0; q < d; ++q) {
      if (p != q) pairs.emplace_back(p, q);
    }
  }

  auto term_offset = [](const TropPoint& c, const std::pair<int, int>& pq) {
    return c[pq.first] - c[pq.second];
  };

  std::vector<BisectorCell> cells;
  for (const auto& ij : pairs) {
    const auto ij_coeffs = diff_coeffs(d, ij.first, ij.second);
    const double a_ij = term_offset(a, ij);
    for (const auto& kl : pairs) {
      const auto kl_coeffs = diff_coeffs(d, kl.first, kl.second);
      const double b_kl = term_offset(b, kl);

      BisectorCell cell;
      cell.i = ij.first;
      cell.j = ij.second;
      cell.k = kl.first;
      cell.l = kl.second;
      cell.equality.coeffs = sub(ij_coeffs, kl_coeffs);
      cell.equality.rhs = a_ij - b_kl;

      for (const auto& pq : pairs) {
        if (pq != ij) {
          cell.bounds.push_back(
              {sub(diff_coeffs(d, pq.first, pq.second), ij_coeffs), term_offset(a, pq) - a_ij});
        }
        if (pq != kl) {
          cell.bounds.push_back(
              {sub(diff_coeffs(d, pq.first, pq.second), kl_coeffs), term_offset(b, pq) - b_kl});
        }
      }

      lp::Problem prob;
      prob.num_vars = d - 1;
      prob.rows.push_back(to_lp(cell.equality, lp::Relation::Equal));
      for (const auto& bound : cell.bounds) {
        prob.rows.push_back(to_lp(bound, lp::Relation::LessEq));
      }
      if (lp::feasible(prob)) {
        cells.push_back(std::move(cell));
      }
    }
  }
  return cells;
}

bool cell_contains(const BisectorCell& cell, std::span<const double> x, double tol) {
  auto value = [&](const LinearConstraint& c) {
    double v = 0.0;
    for (std::size_t i = 0; i < c.coeffs.size(); ++i) v += c.coeffs[i] * x[i];
    return v;
  };
  if (std::abs(value(cell.equality) - cell.equality.rhs) > tol) return false;
  for (const auto& bound : cell.bounds) {
    if (value(bound) > bound.rhs + tol) return false;
  }
  return true;
}

std::vector<CurveSegment> cells_to_segments(const std::vector<BisectorCell>& cells) {
  std::vector<CurveSegment> out;
  for (const BisectorCell& cell : cells) {
    if (cell.equality.coeffs.size() != 2) {
      throw std::invalid_argument("cells_to_segments: requires d = 3 cells");
    }
    const Rational c1 = lp::to_rational(cell.equality.coeffs[0]);
    const Rational c2 = lp::to_rational(cell.equality.coeffs[1]);
    const Rational r = lp::to_rational(cell.equality.rhs);
    if (c1 == 0 && c2 == 0) continue;

    // Parameterize along the axis with the larger coefficient magnitude on
    // the dependent variable.
    const bool axis0 = abs(c2) >= abs(c1);
    const Rational denom = axis0 ? c2 : c1;
    const Rational cross = axis0 ? c1 : c2;
    const Rational slope = -cross / denom;
    const Rational intercept = r / denom;

    bool empty = false;
    bool has_lo = false, has_hi = false;
    Rational lo(0), hi(0);
    for (const auto& bound : cell.bounds) {
      const Rational b1 = lp::to_rational(bound.coeffs[0]);
      const Rational b2 = lp::to_rational(bound.coeffs[1]);
      const Rational s = lp::to_rational(bound.rhs);
      const Rational bt = axis0 ? b1 : b2;       // coefficient on the parameter
      const Rational bd = axis0 ? b2 : b1;       // coefficient on the dependent variable
      const Rational coef = bt + bd * slope;
      const Rational rhs = s - bd * intercept;
      if (coef == 0) {
        if (rhs < 0) {
          empty = true;
          break;
        }
        continue;
      }
      const Rational limit = rhs / coef;
      if (coef > 0) {
        if (!has_hi || limit < hi) hi = limit, has_hi = true;
      } else {
        if (!has_lo || limit > lo) lo = limit, has_lo = true;
      }
    }
    if (empty) continue;
    if (has_lo && has_hi && lo > hi) continue;
    if (has_lo && has_hi && lo == hi) continue;  // junction point, covered by neighbours

    CurveSegment seg;
    seg.param_axis = axis0 ? 0 : 1;
    seg.slope = lp::to_double(slope);
    seg.intercept = lp::to_double(intercept);
    seg.lo = has_lo ? lp::to_double(lo) : -kInf;
    seg.hi = has_hi ? lp::to_double(hi) : kInf;
    out.push_back(seg);
  }
  std::sort(out.begin(), out.end(), [](const CurveSegment& a, const CurveSegment& b) {
    return std::tie(a.param_axis, a.slope, a.intercept, a.lo) <
           std::tie(b.param_axis, b.slope, b.intercept, b.lo);
  });
  return out;
}

bool has_full_dimensional_cells(const std::vector<TropPoint>& first_class,
                                const std::vector<TropPoint>& second_class) {
  if (first_class.empty() || second_class.empty()) {
    throw std::invalid_argument("has_full_dimensional_cells: empty class");
  }
  for (const TropPoint& w1 : first_class) {
    for (const TropPoint& w2 : second_class) {
      if (!weak_general_position(w1, w2)) return true;
    }
  }
  return false;
}

}  // namespace tropnn::geo
