#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

namespace tropnn::lp {

using Rational = boost::multiprecision::cpp_rational;

/// Exact conversion; every finite double is a dyadic rational.
Rational to_rational(double v);
double to_double(const Rational& r);

enum class Relation { LessEq, Equal };

struct Constraint {
  std::vector<Rational> coeffs;
  Relation rel;
  Rational rhs;
};

/// min objective . x subject to the rows; variables are free (unrestricted).
/// An empty objective solves a pure feasibility problem.
struct Problem {
  int num_vars = 0;
  std::vector<Constraint> rows;
  std::vector<Rational> objective;
};

enum class Status { Optimal, Infeasible, Unbounded };

struct Solution {
  Status status;
  Rational value;
  std::vector<Rational> x;
};

/// Two-phase dense simplex with Bland's rule; exact over rationals.
Solution solve(const Problem& p);

bool feasible(const Problem& p);

}  // namespace tropnn::lp
