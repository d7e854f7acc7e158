#include "acb/simplex.hpp"

#include <stdexcept>

namespace acb {

LpSolution simplex_max(const std::vector<std::vector<Rat>>& A,
                       const std::vector<Rat>& b, const std::vector<Rat>& c) {
  const int m = static_cast<int>(A.size());
  const int n = static_cast<int>(c.size());
  if (m == 0 || n == 0) throw InputError("empty linear program");
  for (const auto& row : A) {
    if (static_cast<int>(row.size()) != n) {
      throw InputError("ragged constraint matrix");
    }
  }
  for (const Rat& bi : b) {
    if (bi < 0) throw InputError("simplex_max needs b >= 0");
  }

  // Tableau over columns [structural 0..n-1 | slack n..n+m-1 | rhs].
  const int cols = n + m + 1;
  std::vector<std::vector<Rat>> tab(m, std::vector<Rat>(cols, Rat(0)));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) tab[i][j] = A[i][j];
    tab[i][n + i] = 1;
    tab[i][cols - 1] = b[i];
  }
  std::vector<Rat> z(cols, Rat(0));  // reduced costs; z[cols-1] = -objective
  for (int j = 0; j < n; ++j) z[j] = c[j];
  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) basis[i] = n + i;

  while (true) {
    int enter = -1;
    for (int j = 0; j < n + m; ++j) {
      if (z[j] > 0) {
        enter = j;
        break;
      }
    }
    if (enter < 0) break;
    int leave = -1;
    Rat best_ratio;
    for (int i = 0; i < m; ++i) {
      if (tab[i][enter] > 0) {
        const Rat ratio = tab[i][cols - 1] / tab[i][enter];
        if (leave < 0 || ratio < best_ratio ||
            (ratio == best_ratio && basis[i] < basis[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
    }
    if (leave < 0) throw std::runtime_error("unbounded linear program");

    const Rat pivot = tab[leave][enter];
    for (int j = 0; j < cols; ++j) tab[leave][j] /= pivot;
    for (int i = 0; i < m; ++i) {
      if (i == leave || tab[i][enter] == 0) continue;
      const Rat factor = tab[i][enter];
      for (int j = 0; j < cols; ++j) tab[i][j] -= factor * tab[leave][j];
    }
    const Rat zfactor = z[enter];
    if (zfactor != 0) {
      for (int j = 0; j < cols; ++j) z[j] -= zfactor * tab[leave][j];
    }
    basis[leave] = enter;
  }

  LpSolution sol;
  sol.objective = -z[cols - 1];
  sol.x.assign(n, Rat(0));
  for (int i = 0; i < m; ++i) {
    if (basis[i] < n) sol.x[basis[i]] = tab[i][cols - 1];
  }
  sol.dual.resize(m);
  for (int i = 0; i < m; ++i) sol.dual[i] = -z[n + i];
  return sol;
}

}  // namespace acb
