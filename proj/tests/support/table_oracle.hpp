// Independent census oracle: enumerates every group operation table on the
// underlying set of G (identity fixed) by cell-by-cell backtracking with
// associativity propagation, maps each table to its left-translation
// subgroup of Perm(G), filters by regularity and normalization by
// lambda(G), and returns the distinct subgroup keys. Shares nothing with
// the assignment-propagation search in the library.

#ifndef HOPFGALOIS_TESTS_TABLE_ORACLE_HPP_
#define HOPFGALOIS_TESTS_TABLE_ORACLE_HPP_

#include <array>
#include <set>
#include <vector>

#include "hopfgalois/group.hpp"

namespace hopfgalois::testing {

class TableOracle {
 public:
  explicit TableOracle(const FiniteGroup& G)
      : G_(G), n_(G.order()), e_(G.identity()), t_(n_, std::vector<std::size_t>(n_, n_)),
        row_used_(n_, 0), col_used_(n_, 0) {
    for (std::size_t j = 0; j < n_; ++j) {
      place(e_, j, j);
      if (j != e_)
        place(j, e_, j);
    }
  }

  std::set<std::vector<std::size_t>> run() {
    dfs();
    return found_;
  }

 private:
  const FiniteGroup& G_;
  std::size_t n_, e_;
  std::vector<std::vector<std::size_t>> t_;
  std::vector<unsigned> row_used_, col_used_;
  std::set<std::vector<std::size_t>> found_;

  void place(std::size_t a, std::size_t b, std::size_t c) {
    t_[a][b] = c;
    row_used_[a] |= 1u << c;
    col_used_[b] |= 1u << c;
  }

  void unplace(std::size_t a, std::size_t b, std::size_t c) {
    t_[a][b] = n_;
    row_used_[a] &= ~(1u << c);
    col_used_[b] &= ~(1u << c);
  }

  bool can_place(std::size_t a, std::size_t b, std::size_t c) const {
    return t_[a][b] == n_ && !(row_used_[a] >> c & 1u) && !(col_used_[b] >> c & 1u);
  }

  // One full associativity sweep; checks every triple whose products are
  // sufficiently determined and forces single unknowns. Returns false on
  // contradiction; records every forced placement for unwinding.
  bool sweep(std::vector<std::array<std::size_t, 3>>& placed, bool& changed) {
    changed = false;
    for (std::size_t x = 0; x < n_; ++x)
      for (std::size_t y = 0; y < n_; ++y) {
        std::size_t xy = t_[x][y];
        for (std::size_t z = 0; z < n_; ++z) {
          std::size_t yz = t_[y][z];
          std::size_t lhs = (xy == n_) ? n_ : t_[xy][z];
          std::size_t rhs = (yz == n_) ? n_ : t_[x][yz];
          if (lhs != n_ && rhs != n_) {
            if (lhs != rhs)
              return false;
            continue;
          }
          if (lhs != n_ && yz != n_) {
            // t_[x][yz] is unknown and must equal lhs.
            if (!can_place(x, yz, lhs))
              return false;
            place(x, yz, lhs);
            placed.push_back({x, yz, lhs});
            changed = true;
          } else if (rhs != n_ && xy != n_) {
            if (!can_place(xy, z, rhs))
              return false;
            place(xy, z, rhs);
            placed.push_back({xy, z, rhs});
            changed = true;
          }
        }
      }
    return true;
  }

  bool propagate(std::vector<std::array<std::size_t, 3>>& placed) {
    bool changed = true;
    while (changed)
      if (!sweep(placed, changed))
        return false;
    return true;
  }

  void record() {
    std::vector<Perm> perms(n_);
    for (std::size_t x = 0; x < n_; ++x)
      perms[x] = Perm{t_[x]};
    RegularSubgroup N = RegularSubgroup::from_perms(perms, G_);
    // Regularity re-check: only the identity row fixes a point.
    for (std::size_t x = 0; x < n_; ++x)
      if (x != e_ && N.elements[x].has_fixed_point())
        return;
    if (!normalizes(N, G_))
      return;
    found_.insert(subgroup_key(N));
  }

  void dfs() {
    std::size_t a = n_, b = n_;
    for (std::size_t i = 0; i < n_ && a == n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        if (t_[i][j] == n_) {
          a = i;
          b = j;
          break;
        }
    if (a == n_) {
      record();
      return;
    }
    for (std::size_t c = 0; c < n_; ++c) {
      if (!can_place(a, b, c))
        continue;
      std::vector<std::array<std::size_t, 3>> placed;
      place(a, b, c);
      placed.push_back({a, b, c});
      if (propagate(placed))
        dfs();
      for (auto it = placed.rbegin(); it != placed.rend(); ++it)
        unplace((*it)[0], (*it)[1], (*it)[2]);
    }
  }
};

// Distinct regular subgroups of Perm(G) normalized by lambda(G), found by
// exhausting all group tables. Keys match subgroup_key.
inline std::set<std::vector<std::size_t>> table_oracle_census(const FiniteGroup& G) {
  return TableOracle(G).run();
}

}  // namespace hopfgalois::testing

#endif
