#include "tropnn/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace tropnn::geo {

TropPoint::TropPoint(std::vector<double> raw) : coords_(std::move(raw)) {
  if (coords_.size() < 2) {
    throw std::invalid_argument("TropPoint: dimension must be at least 2");
  }
  for (double v : coords_) {
    if (!std::isfinite(v)) {
      throw std::domain_error("TropPoint: coordinates must be finite");
    }
  }
  const double last = coords_.back();
  for (double& v : coords_) v -= last;
  coords_.back() = 0.0;
}

TropPoint normalize(const std::vector<double>& raw) { return TropPoint(raw); }

double trop_dist(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) {
    throw std::domain_error("trop_dist: dimension mismatch");
  }
  double hi = x[0] - y[0];
  double lo = hi;
  for (std::size_t i = 1; i < x.size(); ++i) {
    const double diff = x[i] - y[i];
    hi = std::max(hi, diff);
    lo = std::min(lo, diff);
  }
  return hi - lo;
}

double trop_dist(const TropPoint& x, const TropPoint& y) {
  return trop_dist(x.span(), y.span());
}

ArgPair trop_arg_pair(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) {
    throw std::domain_error("trop_arg_pair: dimension mismatch");
  }
  int k = 0;
  int l = 0;
  double hi = x[0] - y[0];
  double lo = hi;
  for (std::size_t i = 1; i < x.size(); ++i) {
    const double diff = x[i] - y[i];
    if (diff > hi) {
      hi = diff;
      k = static_cast<int>(i);
    }
    if (diff < lo) {
      lo = diff;
      l = static_cast<int>(i);
    }
  }
  return {k, l};
}

bool halfspace_satisfied(const Halfspace& h, std::span<const double> x, double tol) {
  const double diff = x[static_cast<std::size_t>(h.i)] - x[static_cast<std::size_t>(h.j)];
  return diff >= h.lower - tol && diff <= h.upper + tol;
}

bool halfspaces_satisfied(const std::vector<Halfspace>& hs, std::span<const double> x,
                          double tol) {
  for (const Halfspace& h : hs) {
    if (!halfspace_satisfied(h, x, tol)) return false;
  }
  return true;
}

std::vector<Halfspace> trop_ball_halfspaces(const TropPoint& c, double r) {
  if (!(r > 0.0)) {
    throw std::domain_error("trop_ball_halfspaces: radius must be positive");
  }
  std::vector<Halfspace> out;
  const int d = c.dim();
  out.reserve(static_cast<std::size_t>(d) * (d - 1) / 2);
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      const double delta = c[i] - c[j];
      out.push_back({i, j, delta - r, delta + r});
    }
  }
  return out;
}

bool weak_general_position(const TropPoint& a, const TropPoint& b, double tol) {
  if (a.dim() != b.dim()) {
    throw std::domain_error("weak_general_position: dimension mismatch");
  }
  const int d = a.dim();
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      if (std::abs((a[i] - b[i]) - (a[j] - b[j])) <= tol) return false;
    }
  }
  return true;
}

TropPoint weight_center(const TropPoint& w) {
  std::vector<double> neg(w.coords());
  for (double& v : neg) v = -v;
  return TropPoint(std::move(neg));
}

int classify_nearest(const TropPoint& x, const std::vector<WeightedClass>& weights) {
  if (weights.empty()) {
    throw std::invalid_argument("classify_nearest: weight list is empty");
  }
  int best_label = weights[0].label;
  double best = trop_dist(x, weight_center(weights[0].weight));
  for (std::size_t i = 1; i < weights.size(); ++i) {
    const double d = trop_dist(x, weight_center(weights[i].weight));
    if (d < best) {
      best = d;
      best_label = weights[i].label;
    }
  }
  return best_label;
}

SectorPosition sector_membership(const TropPoint& x, const Sector& s) {
  if (x.dim() != s.offset.dim()) {
    throw std::domain_error("sector_membership: dimension mismatch");
  }
  const int d = x.dim();
  const int k = s.index;
  const double pivot = x[k] + s.offset[k];
  bool tie = false;
  for (int i = 0; i < d; ++i) {
    if (i == k) continue;
    const double v = x[i] + s.offset[i];
    if (s.kind == SectorKind::Max) {
      if (v > pivot) return SectorPosition::Outside;
    } else {
      if (v < pivot) return SectorPosition::Outside;
    }
    if (v == pivot) tie = true;
  }
  return tie ? SectorPosition::OnBoundary : SectorPosition::InsideOpen;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_points(std::ostream& os, const std::vector<TropPoint>& points) {
  if (points.empty()) {
    throw std::invalid_argument("write_points: empty point list");
  }
  os << "d=" << points[0].dim() << "\n";
  for (const TropPoint& p : points) {
    for (int i = 0; i < p.dim(); ++i) {
      if (i) os << ' ';
      os << format_double(p[i]);
    }
    os << "\n";
  }
}

namespace {

int read_dim_header(std::istream& is) {
  std::string header;
  if (!(is >> header) || header.rfind("d=", 0) != 0) {
    throw std::runtime_error("point file: missing d=<int> header");
  }
  int d = 0;
  try {
    d = std::stoi(header.substr(2));
  } catch (const std::exception&) {
    throw std::runtime_error("point file: malformed d=<int> header");
  }
  if (d < 2) throw std::runtime_error("point file: dimension must be at least 2");
  return d;
}

}  // namespace

std::vector<TropPoint> read_points(std::istream& is) {
  const int d = read_dim_header(is);
  std::vector<TropPoint> out;
  std::vector<double> row(static_cast<std::size_t>(d));
  while (true) {
    if (!(is >> row[0])) break;
    for (int i = 1; i < d; ++i) {
      if (!(is >> row[static_cast<std::size_t>(i)])) {
        throw std::runtime_error("point file: truncated row");
      }
    }
    out.emplace_back(row);
  }
  return out;
}

void write_points_file(const std::string& path, const std::vector<TropPoint>& points) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open for writing: " + path);
  write_points(os, points);
}

std::vector<TropPoint> read_points_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open for reading: " + path);
  return read_points(is);
}

void write_halfspaces(std::ostream& os, int d, const std::vector<Halfspace>& hs) {
  os << "d=" << d << "\n";
  for (const Halfspace& h : hs) {
    os << h.i << ' ' << h.j << ' ' << format_double(h.lower) << ' ' << format_double(h.upper)
       << "\n";
  }
}

std::pair<int, std::vector<Halfspace>> read_halfspaces(std::istream& is) {
  const int d = read_dim_header(is);
  std::vector<Halfspace> out;
  Halfspace h{};
  while (is >> h.i >> h.j >> h.lower >> h.upper) {
    if (h.i < 0 || h.i >= d || h.j < 0 || h.j >= d || h.i == h.j) {
      throw std::runtime_error("halfspace file: bad index pair");
    }
    if (!(h.lower <= h.upper)) {
      throw std::runtime_error("halfspace file: lower > upper");
    }
    out.push_back(h);
  }
  return {d, out};
}

}  // namespace tropnn::geo
