#pragma once

#include <cstddef>
#include <numeric>
#include <vector>

#include "weilrep/cyclo.hpp"
#include "weilrep/heisenberg.hpp"

namespace weilrep::detail {

// Linear system whose equations all have the form x_u = ratio * x_v. Solved by
// union-find carrying each variable's ratio to its root; a cycle that closes
// with ratio != 1 forces its whole component to vanish.
class BinomialSystem {
 public:
  BinomialSystem(std::size_t variables, int level)
      : parent_(variables), ratio_(variables, CycloNum(level, 1L)), dead_(variables, 0) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  // x_u = r * x_v
  void relate(std::size_t u, std::size_t v, const CycloNum& r) {
    auto [ru, fu] = find(u);
    auto [rv, fv] = find(v);
    // x_u = fu x_ru, x_v = fv x_rv, so x_ru = (r fv / fu) x_rv
    CycloNum link = r * fv / fu;
    if (ru == rv) {
      if (!link.is_one()) dead_[ru] = 1;
      return;
    }
    parent_[ru] = rv;
    ratio_[ru] = link;
    if (dead_[ru]) dead_[rv] = 1;
  }

  // x_u = 0
  void kill(std::size_t u) { dead_[find(u).first] = 1; }

  std::size_t dimension() {
    std::size_t dim = 0;
    for (std::size_t v = 0; v < parent_.size(); ++v) {
      if (find(v).first == v && !dead_[v]) ++dim;
    }
    return dim;
  }

  // With one live component, the solution taking the value 1 at its root.
  std::vector<CycloNum> solution(int level) {
    std::vector<CycloNum> x(parent_.size(), CycloNum(level));
    for (std::size_t v = 0; v < parent_.size(); ++v) {
      auto [root, f] = find(v);
      if (!dead_[root]) x[v] = f;
    }
    return x;
  }

 private:
  // roots carry ratio 1
  std::pair<std::size_t, CycloNum> find(std::size_t v) {
    if (parent_[v] == v) return {v, ratio_[v]};
    auto [root, f] = find(parent_[v]);
    if (!f.is_one()) ratio_[v] *= f;
    parent_[v] = root;
    return {root, ratio_[v]};
  }

  std::vector<std::size_t> parent_;
  std::vector<CycloNum> ratio_;
  std::vector<char> dead_;
};

// Adds the equations of M A = B M for monomial A, B (n x n), where M is the
// unknown n x n matrix with variable index i * n + j.
inline void add_intertwining(BinomialSystem& sys, const MonomialMatrix<CycloNum>& a,
                             const MonomialMatrix<CycloNum>& b) {
  const std::size_t n = a.col.size();
  std::vector<std::size_t> a_row_of_col(n);
  for (std::size_t k = 0; k < n; ++k) a_row_of_col[a.col[k]] = k;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      // (M A)[i][j] = M[i][k] a_k with col_A(k) = j; (B M)[i][j] = b_i M[col_B(i)][j]
      const std::size_t k = a_row_of_col[j];
      sys.relate(i * n + k, b.col[i] * n + j, b.coef[i] / a.coef[k]);
    }
  }
}

}  // namespace weilrep::detail
