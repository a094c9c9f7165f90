#pragma once

// Dense two-phase primal simplex with Bland's anti-cycling rule, templated on
// the scalar so the same code runs over exact rationals and doubles.

#include "transdom/rational.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

namespace transdom::lp {

template <class Scalar>
struct ScalarOps;

template <>
struct ScalarOps<Rational> {
  static constexpr bool exact = true;
  static int sign(const Rational& x) { return sgn(x); }
};

template <>
struct ScalarOps<double> {
  static constexpr bool exact = false;
  static constexpr double eps = 1e-11;
  static constexpr double optimality = 1e-9;
  static constexpr double pivot_tolerance = 1e-9;
  static constexpr double feasibility = 1e-9;
  static int sign(double x) { return x > eps ? 1 : (x < -eps ? -1 : 0); }
};

enum class Sense { LessEqual, GreaterEqual, Equal };
enum class Status { Optimal, Infeasible, Unbounded, IterationLimit };

/// minimize (or maximize) objective . x  subject to  rows[i] . x (sense) rhs[i],  x >= 0.
template <class Scalar>
struct Problem {
  int variables = 0;
  std::vector<std::vector<Scalar>> rows;
  std::vector<Sense> senses;
  std::vector<Scalar> rhs;
  std::vector<Scalar> objective;
  bool maximize = false;
};

template <class Scalar>
struct Solution {
  Status status = Status::IterationLimit;
  Scalar value{};
  std::vector<Scalar> x;
  /// Row duals of an optimal solution (zero for equality rows).
  std::vector<Scalar> duals;
  std::size_t pivots = 0;
};

namespace detail {

template <class Scalar>
class Tableau {
 public:
  using Ops = ScalarOps<Scalar>;

  Tableau(const Problem<Scalar>& p) : vars_(p.variables) {
    const std::size_t m = p.rows.size();
    std::size_t slack_count = 0, artificial_count = 0;
    for (std::size_t i = 0; i < m; ++i) {
      Sense s = normalized_sense(p, i);
      if (s != Sense::Equal) ++slack_count;
      if (s != Sense::LessEqual) ++artificial_count;
    }
    first_artificial_ = vars_ + static_cast<int>(slack_count);
    cols_ = first_artificial_ + static_cast<int>(artificial_count);
    rows_.assign(m, std::vector<Scalar>(cols_ + 1, Scalar(0)));
    basis_.assign(m, -1);
    slack_.assign(m, -1);
    slack_sign_.assign(m, 1);
    flipped_.assign(m, false);

    int next_slack = vars_, next_art = first_artificial_;
    for (std::size_t i = 0; i < m; ++i) {
      const bool flip = Ops::sign(p.rhs[i]) < 0;
      flipped_[i] = flip;
      for (int j = 0; j < vars_; ++j) rows_[i][j] = flip ? Scalar(-p.rows[i][j]) : p.rows[i][j];
      rows_[i][cols_] = flip ? Scalar(-p.rhs[i]) : p.rhs[i];
      switch (normalized_sense(p, i)) {
        case Sense::LessEqual:
          slack_[i] = next_slack;
          rows_[i][next_slack] = 1;
          basis_[i] = next_slack++;
          break;
        case Sense::GreaterEqual:
          slack_[i] = next_slack;
          slack_sign_[i] = -1;
          rows_[i][next_slack++] = -1;
          rows_[i][next_art] = 1;
          basis_[i] = next_art++;
          break;
        case Sense::Equal:
          rows_[i][next_art] = 1;
          basis_[i] = next_art++;
          break;
      }
    }
    if constexpr (!Ops::exact) {
      original_ = rows_;
      initial_basis_ = basis_;
    }
  }

  Solution<Scalar> solve(const Problem<Scalar>& p, std::size_t max_pivots) {
    Solution<Scalar> out;
    // phase 1: minimise the sum of artificials
    if (first_artificial_ < cols_) {
      std::vector<Scalar> cost(cols_, Scalar(0));
      for (int j = first_artificial_; j < cols_; ++j) cost[j] = 1;
      const Status s = run(cost, cols_, max_pivots, out.pivots);
      if (s == Status::IterationLimit) return out.status = s, out;
      if (Ops::sign(objective_value(cost)) > 0) return out.status = Status::Infeasible, out;
      drive_out_artificials();
    }
    std::vector<Scalar> cost(cols_, Scalar(0));
    for (int j = 0; j < vars_; ++j) cost[j] = p.maximize ? Scalar(-p.objective[j]) : p.objective[j];
    out.status = run(cost, first_artificial_, max_pivots, out.pivots);
    if (out.status != Status::Optimal) return out;
    out.x.assign(vars_, Scalar(0));
    for (std::size_t i = 0; i < rows_.size(); ++i)
      if (basis_[i] >= 0 && basis_[i] < vars_) out.x[basis_[i]] = rows_[i][cols_];
    out.value = Scalar(0);
    for (int j = 0; j < vars_; ++j) out.value += p.objective[j] * out.x[j];
    std::vector<Scalar> reduced(cols_);
    reduced_costs(cost, reduced);
    out.duals.assign(rows_.size(), Scalar(0));
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (slack_[i] < 0) continue;
      Scalar pi = slack_sign_[i] > 0 ? Scalar(-reduced[slack_[i]]) : reduced[slack_[i]];
      if (flipped_[i]) pi = -pi;
      out.duals[i] = p.maximize ? Scalar(-pi) : pi;
    }
    return out;
  }

 private:
  static Sense normalized_sense(const Problem<Scalar>& p, std::size_t i) {
    if (Ops::sign(p.rhs[i]) >= 0 || p.senses[i] == Sense::Equal) return p.senses[i];
    return p.senses[i] == Sense::LessEqual ? Sense::GreaterEqual : Sense::LessEqual;
  }

  Scalar objective_value(const std::vector<Scalar>& cost) const {
    Scalar v(0);
    for (std::size_t i = 0; i < rows_.size(); ++i)
      if (basis_[i] >= 0) v += cost[basis_[i]] * rows_[i][cols_];
    return v;
  }

  // Columns >= `allowed` never enter.
  Status run(const std::vector<Scalar>& cost, int allowed, std::size_t max_pivots, std::size_t& pivots) {
    if constexpr (Ops::exact)
      return run_bland(cost, allowed, max_pivots, pivots);
    else
      return run_float(cost, allowed, max_pivots, pivots);
  }

  void reduced_costs(const std::vector<Scalar>& cost, std::vector<Scalar>& reduced) const {
    for (int j = 0; j < cols_; ++j) reduced[j] = cost[j];
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (basis_[i] < 0) continue;
      const Scalar& cb = cost[basis_[i]];
      if (Ops::sign(cb) == 0) continue;
      for (int j = 0; j < cols_; ++j)
        if (Ops::sign(rows_[i][j]) != 0) reduced[j] -= cb * rows_[i][j];
    }
  }

  Status run_bland(const std::vector<Scalar>& cost, int allowed, std::size_t max_pivots, std::size_t& pivots) {
    const std::size_t m = rows_.size();
    std::vector<Scalar> reduced(cols_);
    for (;;) {
      reduced_costs(cost, reduced);
      int entering = -1;
      for (int j = 0; j < allowed; ++j)
        if (Ops::sign(reduced[j]) < 0) {
          entering = j;
          break;
        }
      if (entering < 0) return Status::Optimal;

      int leaving = -1;
      Scalar best_ratio;
      for (std::size_t i = 0; i < m; ++i) {
        if (Ops::sign(rows_[i][entering]) <= 0) continue;
        Scalar ratio = rows_[i][cols_] / rows_[i][entering];
        if (leaving < 0) {
          leaving = static_cast<int>(i);
          best_ratio = ratio;
          continue;
        }
        const int cmp = Ops::sign(Scalar(ratio - best_ratio));
        if (cmp < 0 || (cmp == 0 && basis_[i] < basis_[leaving])) {
          leaving = static_cast<int>(i);
          best_ratio = ratio;
        }
      }
      if (leaving < 0) return Status::Unbounded;
      if (pivots++ >= max_pivots) return Status::IterationLimit;
      pivot(static_cast<std::size_t>(leaving), entering);
    }
  }

  // Dantzig pricing with a lexicographic ratio test (rows of B^-1 read off the
  // initial basis columns break ties) and periodic reinversion.
  Status run_float(const std::vector<Scalar>& cost, int allowed, std::size_t max_pivots, std::size_t& pivots) {
    const std::size_t m = rows_.size();
    std::vector<Scalar> reduced(cols_);
    std::size_t since_reinvert = 0;
    for (;;) {
      if (since_reinvert >= 64) {
        reinvert();
        since_reinvert = 0;
      }
      reduced_costs(cost, reduced);
      int entering = -1;
      for (int j = 0; j < allowed; ++j)
        if (reduced[j] < -Ops::optimality && (entering < 0 || reduced[j] < reduced[entering])) entering = j;
      if (entering < 0) return Status::Optimal;

      int leaving = -1;
      double best = 0;
      for (std::size_t i = 0; i < m; ++i) {
        const double a = rows_[i][entering];
        if (a <= Ops::pivot_tolerance) continue;
        const double ratio = std::max(rows_[i][cols_], 0.0) / a;
        if (leaving < 0 || ratio < best - Ops::feasibility) {
          leaving = static_cast<int>(i);
          best = ratio;
        } else if (ratio <= best + Ops::feasibility && lex_less(i, static_cast<std::size_t>(leaving), entering)) {
          leaving = static_cast<int>(i);
          best = std::min(best, ratio);
        }
      }
      if (leaving < 0) return Status::Unbounded;
      if (pivots++ >= max_pivots) return Status::IterationLimit;
      pivot(static_cast<std::size_t>(leaving), entering);
      ++since_reinvert;
    }
  }

  bool lex_less(std::size_t r, std::size_t s, int entering) const {
    const double ar = rows_[r][entering], as = rows_[s][entering];
    for (int col : initial_basis_) {
      const double x = rows_[r][col] / ar, y = rows_[s][col] / as;
      if (x < y - 1e-12) return true;
      if (x > y + 1e-12) return false;
    }
    return ar > as;
  }

  // Rebuilds the tableau for the current basis from the original rows with
  // partial pivoting; keeps the old tableau if the basis looks singular.
  void reinvert() {
    if constexpr (!Ops::exact) {
      const std::size_t m = rows_.size();
      for (int b : basis_)
        if (b < 0) return;
      auto saved = std::move(rows_);
      rows_ = original_;
      std::vector<int> columns = basis_;
      std::vector<int> assigned(m, -1);
      std::vector<bool> used(m, false);
      for (int c : columns) {
        int r = -1;
        for (std::size_t i = 0; i < m; ++i)
          if (!used[i] && (r < 0 || std::abs(rows_[i][c]) > std::abs(rows_[r][c]))) r = static_cast<int>(i);
        if (r < 0 || std::abs(rows_[r][c]) < 1e-9) {
          rows_ = std::move(saved);
          return;
        }
        used[r] = true;
        assigned[r] = c;
        pivot(static_cast<std::size_t>(r), c);
      }
      basis_ = std::move(assigned);
    }
  }

  void pivot(std::size_t r, int c) {
    std::vector<Scalar>& prow = rows_[r];
    const Scalar inv = Scalar(1) / prow[c];
    std::vector<int> support;
    for (int j = 0; j <= cols_; ++j)
      if (Ops::sign(prow[j]) != 0) {
        prow[j] *= inv;
        support.push_back(j);
      } else {
        prow[j] = 0;
      }
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i == r || Ops::sign(rows_[i][c]) == 0) continue;
      const Scalar f = rows_[i][c];
      for (int j : support) rows_[i][j] -= f * prow[j];
      rows_[i][c] = 0;
    }
    basis_[r] = c;
  }

  void drive_out_artificials() {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (basis_[i] < first_artificial_) continue;
      int col = -1;
      for (int j = 0; j < first_artificial_ && col < 0; ++j)
        if (Ops::sign(rows_[i][j]) != 0) col = j;
      if (col >= 0)
        pivot(i, col);
      else
        basis_[i] = -1;  // redundant row
    }
  }

  int vars_ = 0;
  int first_artificial_ = 0;
  int cols_ = 0;
  std::vector<std::vector<Scalar>> rows_;
  std::vector<int> basis_;
  std::vector<std::vector<Scalar>> original_;
  std::vector<int> initial_basis_;
  std::vector<int> slack_;
  std::vector<int> slack_sign_;
  std::vector<bool> flipped_;
};

}  // namespace detail

template <class Scalar>
Solution<Scalar> solve(const Problem<Scalar>& problem,
                       std::size_t max_pivots = std::numeric_limits<std::size_t>::max()) {
  detail::Tableau<Scalar> tableau(problem);
  return tableau.solve(problem, max_pivots);
}

}  // namespace transdom::lp
