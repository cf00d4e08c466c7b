#include "okounkov/lp.hpp"

#include "okounkov/errors.hpp"

namespace okounkov {

namespace {

struct Tableau {
  RatMat rows;                     // each row: coefficients then rhs
  std::vector<std::size_t> basis;  // basic column per row
  std::size_t cols = 0;            // number of structural + artificial columns

  void pivot(std::size_t r, std::size_t c) {
    Rat inv = 1 / rows[r][c];
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Rat f = rows[i][c];
      for (std::size_t j = 0; j <= cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    basis[r] = c;
  }

  // Runs simplex on objective `cost` over columns [0, usable). Returns false when unbounded.
  bool optimize(const RatVec& cost, std::size_t usable) {
    for (;;) {
      // reduced cost of column j: cost_j - sum_i cost_{basis_i} * rows[i][j]
      std::size_t enter = usable;
      for (std::size_t j = 0; j < usable; ++j) {
        Rat rc = cost[j];
        for (std::size_t i = 0; i < rows.size(); ++i) rc -= cost[basis[i]] * rows[i][j];
        if (rc < 0) {
          enter = j;
          break;
        }
      }
      if (enter == usable) return true;
      std::size_t leave = rows.size();
      Rat best;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i][enter] <= 0) continue;
        Rat ratio = rows[i][cols] / rows[i][enter];
        if (leave == rows.size() || ratio < best || (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == rows.size()) return false;
      pivot(leave, enter);
    }
  }
};

}  // namespace

LpResult lp_minimize(const RatMat& a, const RatVec& b, const RatVec& c) {
  const std::size_t m = a.size();
  const std::size_t n = c.size();
  if (b.size() != m) throw DimensionMismatch("lp: rhs length mismatch");
  for (const auto& row : a)
    if (row.size() != n) throw DimensionMismatch("lp: row length mismatch");

  Tableau t;
  t.cols = n + m;
  t.rows.assign(m, zeros(n + m + 1));
  t.basis.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    bool flip = b[i] < 0;
    for (std::size_t j = 0; j < n; ++j) t.rows[i][j] = flip ? Rat(-a[i][j]) : a[i][j];
    t.rows[i][n + i] = 1;
    t.rows[i][n + m] = flip ? Rat(-b[i]) : b[i];
    t.basis[i] = n + i;
  }

  RatVec phase1 = zeros(n + m);
  for (std::size_t i = 0; i < m; ++i) phase1[n + i] = 1;
  t.optimize(phase1, n + m);
  Rat infeas = 0;
  for (std::size_t i = 0; i < m; ++i)
    if (t.basis[i] >= n) infeas += t.rows[i][n + m];
  LpResult res;
  if (infeas > 0) {
    res.status = LpStatus::Infeasible;
    return res;
  }
  // Drive artificial columns out of the basis; drop redundant rows.
  for (std::size_t i = 0; i < t.rows.size();) {
    if (t.basis[i] < n) {
      ++i;
      continue;
    }
    std::size_t j = 0;
    while (j < n && t.rows[i][j] == 0) ++j;
    if (j < n) {
      t.pivot(i, j);
      ++i;
    } else {
      t.rows.erase(t.rows.begin() + static_cast<std::ptrdiff_t>(i));
      t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(i));
    }
  }
  RatVec cost = zeros(n + m);
  for (std::size_t j = 0; j < n; ++j) cost[j] = c[j];
  if (!t.optimize(cost, n)) {
    res.status = LpStatus::Unbounded;
    return res;
  }
  res.status = LpStatus::Optimal;
  res.x = zeros(n);
  for (std::size_t i = 0; i < t.rows.size(); ++i) res.x[t.basis[i]] = t.rows[i][n + m];
  res.value = dot(c, res.x);
  return res;
}

std::optional<RatVec> cone_combination(const std::vector<RatVec>& generators, const RatVec& target) {
  const std::size_t dim = target.size();
  RatMat a(dim, zeros(generators.size()));
  for (std::size_t j = 0; j < generators.size(); ++j) {
    if (generators[j].size() != dim) throw DimensionMismatch("cone: generator length mismatch");
    for (std::size_t i = 0; i < dim; ++i) a[i][j] = generators[j][i];
  }
  auto res = lp_minimize(a, target, zeros(generators.size()));
  if (res.status != LpStatus::Optimal) return std::nullopt;
  return res.x;
}

bool cone_contains(const std::vector<RatVec>& generators, const RatVec& target) {
  return cone_combination(generators, target).has_value();
}

}  // namespace okounkov
