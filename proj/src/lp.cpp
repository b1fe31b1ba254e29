#include "tropnn/lp.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace tropnn::lp {

Rational to_rational(double v) {
  if (!std::isfinite(v)) throw std::domain_error("to_rational: non-finite value");
  if (v == 0.0) return Rational(0);
  int exp = 0;
  const double mant = std::frexp(v, &exp);  // v = mant * 2^exp, |mant| in [0.5, 1)
  const auto scaled = static_cast<std::int64_t>(std::ldexp(mant, 53));
  exp -= 53;
  Rational r(scaled);
  boost::multiprecision::cpp_int pow2 = boost::multiprecision::cpp_int(1) << std::abs(exp);
  if (exp >= 0) {
    r *= Rational(pow2);
  } else {
    r /= Rational(pow2);
  }
  return r;
}

double to_double(const Rational& r) { return static_cast<double>(r); }

namespace {

class Tableau {
 public:
  // Columns: [0, n) positive parts, [n, 2n) negative parts, then one slack per
  // LessEq row, then one artificial per row. Rightmost column is the rhs.
  explicit Tableau(const Problem& p) : n_(p.num_vars) {
    const int m = static_cast<int>(p.rows.size());
    int num_slacks = 0;
    for (const auto& row : p.rows) {
      if (row.rel == Relation::LessEq) ++num_slacks;
    }
    cols_ = 2 * n_ + num_slacks + m;
    rows_ = m;
    t_.assign(static_cast<std::size_t>(rows_), std::vector<Rational>(cols_ + 1, Rational(0)));
    basis_.resize(static_cast<std::size_t>(rows_));

    int slack = 2 * n_;
    art_begin_ = 2 * n_ + num_slacks;
    for (int r = 0; r < m; ++r) {
      const Constraint& c = p.rows[static_cast<std::size_t>(r)];
      if (static_cast<int>(c.coeffs.size()) != n_) {
        throw std::invalid_argument("lp: constraint arity mismatch");
      }
      auto& row = t_[static_cast<std::size_t>(r)];
      for (int j = 0; j < n_; ++j) {
        row[static_cast<std::size_t>(j)] = c.coeffs[static_cast<std::size_t>(j)];
        row[static_cast<std::size_t>(n_ + j)] = -c.coeffs[static_cast<std::size_t>(j)];
      }
      row[static_cast<std::size_t>(cols_)] = c.rhs;
      if (c.rel == Relation::LessEq) {
        row[static_cast<std::size_t>(slack++)] = 1;
      }
      if (row[static_cast<std::size_t>(cols_)] < 0) {
        for (auto& v : row) v = -v;
      }
      row[static_cast<std::size_t>(art_begin_ + r)] = 1;
      basis_[static_cast<std::size_t>(r)] = art_begin_ + r;
    }
  }

  // Reduced-cost row for cost vector c over all columns.
  std::vector<Rational> price_out(const std::vector<Rational>& c) const {
    std::vector<Rational> red(c);
    red.resize(static_cast<std::size_t>(cols_) + 1, Rational(0));
    for (int r = 0; r < rows_; ++r) {
      const Rational cb = c[static_cast<std::size_t>(basis_[static_cast<std::size_t>(r)])];
      if (cb == 0) continue;
      const auto& row = t_[static_cast<std::size_t>(r)];
      for (int j = 0; j <= cols_; ++j) {
        red[static_cast<std::size_t>(j)] -= cb * row[static_cast<std::size_t>(j)];
      }
    }
    return red;
  }

  // Bland pivoting until no negative reduced cost remains (among allowed
  // columns). Returns false when unbounded.
  bool optimize(std::vector<Rational>& red, bool allow_artificials) {
    while (true) {
      int enter = -1;
      const int limit = allow_artificials ? cols_ : art_begin_;
      for (int j = 0; j < limit; ++j) {
        if (red[static_cast<std::size_t>(j)] < 0) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return true;

      int leave = -1;
      Rational best_ratio(0);
      for (int r = 0; r < rows_; ++r) {
        const Rational& a = t_[static_cast<std::size_t>(r)][static_cast<std::size_t>(enter)];
        if (a <= 0) continue;
        const Rational ratio = t_[static_cast<std::size_t>(r)][static_cast<std::size_t>(cols_)] / a;
        if (leave < 0 || ratio < best_ratio ||
            (ratio == best_ratio &&
             basis_[static_cast<std::size_t>(r)] < basis_[static_cast<std::size_t>(leave)])) {
          leave = r;
          best_ratio = ratio;
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter, red);
    }
  }

  void pivot(int leave, int enter, std::vector<Rational>& red) {
    auto& prow = t_[static_cast<std::size_t>(leave)];
    const Rational piv = prow[static_cast<std::size_t>(enter)];
    for (auto& v : prow) v /= piv;
    for (int r = 0; r < rows_; ++r) {
      if (r == leave) continue;
      auto& row = t_[static_cast<std::size_t>(r)];
      const Rational f = row[static_cast<std::size_t>(enter)];
      if (f == 0) continue;
      for (int j = 0; j <= cols_; ++j) {
        row[static_cast<std::size_t>(j)] -= f * prow[static_cast<std::size_t>(j)];
      }
    }
    const Rational f = red[static_cast<std::size_t>(enter)];
    if (f != 0) {
      for (int j = 0; j <= cols_; ++j) {
        red[static_cast<std::size_t>(j)] -= f * prow[static_cast<std::size_t>(j)];
      }
    }
    basis_[static_cast<std::size_t>(leave)] = enter;
  }

  // Drives basic artificials out (pivot on any eligible column) and drops
  // redundant rows.
  void purge_artificials() {
    for (int r = 0; r < rows_; ++r) {
      if (basis_[static_cast<std::size_t>(r)] < art_begin_) continue;
      int enter = -1;
      for (int j = 0; j < art_begin_; ++j) {
        if (t_[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] != 0) {
          enter = j;
          break;
        }
      }
      if (enter >= 0) {
        std::vector<Rational> dummy(static_cast<std::size_t>(cols_) + 1, Rational(0));
        pivot(r, enter, dummy);
      }
    }
  }

  Rational objective_value(const std::vector<Rational>& c) const {
    Rational v(0);
    for (int r = 0; r < rows_; ++r) {
      v += c[static_cast<std::size_t>(basis_[static_cast<std::size_t>(r)])] *
           t_[static_cast<std::size_t>(r)][static_cast<std::size_t>(cols_)];
    }
    return v;
  }

  std::vector<Rational> extract(int num_vars) const {
    std::vector<Rational> pos(static_cast<std::size_t>(2 * num_vars), Rational(0));
    for (int r = 0; r < rows_; ++r) {
      const int b = basis_[static_cast<std::size_t>(r)];
      if (b < 2 * num_vars) {
        pos[static_cast<std::size_t>(b)] =
            t_[static_cast<std::size_t>(r)][static_cast<std::size_t>(cols_)];
      }
    }
    std::vector<Rational> x(static_cast<std::size_t>(num_vars));
    for (int i = 0; i < num_vars; ++i) {
      x[static_cast<std::size_t>(i)] = pos[static_cast<std::size_t>(i)] -
                                       pos[static_cast<std::size_t>(num_vars + i)];
    }
    return x;
  }

  int cols() const { return cols_; }
  int art_begin() const { return art_begin_; }
  int n() const { return n_; }

 private:
  int n_;
  int rows_;
  int cols_;
  int art_begin_;
  std::vector<std::vector<Rational>> t_;
  std::vector<int> basis_;
};

}  // namespace

Solution solve(const Problem& p) {
  Tableau tab(p);

  // Phase 1: minimize the sum of artificials.
  std::vector<Rational> phase1_cost(static_cast<std::size_t>(tab.cols()) + 1, Rational(0));
  for (int j = tab.art_begin(); j < tab.cols(); ++j) {
    phase1_cost[static_cast<std::size_t>(j)] = 1;
  }
  auto red = tab.price_out(phase1_cost);
  tab.optimize(red, true);
  if (tab.objective_value(phase1_cost) > 0) {
    return {Status::Infeasible, Rational(0), {}};
  }
  tab.purge_artificials();

  // Phase 2.
  std::vector<Rational> cost(static_cast<std::size_t>(tab.cols()) + 1, Rational(0));
  for (int j = 0; j < p.num_vars && j < static_cast<int>(p.objective.size()); ++j) {
    cost[static_cast<std::size_t>(j)] = p.objective[static_cast<std::size_t>(j)];
    cost[static_cast<std::size_t>(p.num_vars + j)] = -p.objective[static_cast<std::size_t>(j)];
  }
  red = tab.price_out(cost);
  if (!tab.optimize(red, false)) {
    return {Status::Unbounded, Rational(0), {}};
  }
  return {Status::Optimal, tab.objective_value(cost), tab.extract(p.num_vars)};
}

bool feasible(const Problem& p) {
  Problem q = p;
  q.objective.clear();
  return solve(q).status == Status::Optimal;
}

}  // namespace tropnn::lp
