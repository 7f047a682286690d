#pragma once

#include <optional>
#include <vector>

#include "positroids/rational.hpp"

namespace positroids {

// Exact-rational linear programs over free variables.
//
//   maximize c.x   subject to   a_i.x (<=|=|>=) b_i
//
// Tiny dense two-phase simplex; all pivoting exact.
enum class Rel { LE, EQ, GE };

struct LpRow {
  std::vector<Rat> a;
  Rel rel;
  Rat b;
};

enum class LpStatus { Optimal, Unbounded, Infeasible };

struct LpResult {
  LpStatus status;
  Rat value;             // objective at optimum (Optimal only)
  std::vector<Rat> x;    // a maximizer (Optimal only)
};

class Lp {
 public:
  explicit Lp(int nvars) : nvars_(nvars) {}

  void add_row(const std::vector<Rat>& a, Rel rel, const Rat& b) {
    rows_.push_back({a, rel, b});
  }

  LpResult maximize(const std::vector<Rat>& c) const;

  bool feasible() const;

  // True iff there is a point satisfying every constraint with the <=/>= rows
  // strictly; decided by maximizing a shared slack. Unbounded slack counts as
  // strictly feasible. Optionally returns such a point.
  bool strictly_feasible(std::vector<Rat>* witness = nullptr) const;

  int nvars() const { return nvars_; }

 private:
  int nvars_;
  std::vector<LpRow> rows_;
};

}  // namespace positroids
