#include "hopfgalois/nbg.hpp"

#include <algorithm>
#include <bit>

namespace hopfgalois {

TransitionMatrix transition_matrix(const GaloisContext& ctx, const RegularSubgroup& N,
                                   const AlgElt& x) {
  const std::size_t n = ctx.dim();
  TransitionMatrix m;
  m.n = n;
  m.entry.assign(n, std::vector<AlgElt>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t g = 0; g < n; ++g)
      m.entry[i][g] = ctx.act(N.elements[i](g), x);
  return m;
}

AlgElt alg_det(const GaloisContext& ctx, const TransitionMatrix& m) {
  const std::size_t n = m.n;
  if (n == 0)
    fail("alg_det: empty matrix");
  if (n > 20)
    throw BudgetError("alg_det: dimension too large for subset expansion");
  // dp[S] with |S| = r+1 holds the minor determinant of rows 0..r on the
  // column set S. Levels are processed in increasing popcount, so a single
  // array indexed by mask never collides.
  std::vector<AlgElt> dp(std::size_t(1) << n);
  for (std::size_t c = 0; c < n; ++c)
    dp[std::size_t(1) << c] = m.entry[0][c];
  for (std::size_t r = 1; r < n; ++r) {
    // Masks with popcount r+1, ascending; rebuild from popcount-r minors.
    for (std::size_t mask = 0; mask < dp.size(); ++mask) {
      if (std::size_t(std::popcount(mask)) != r + 1)
        continue;
      AlgElt acc = ctx.zero();
      std::size_t pos = 0;  // index of column c within mask, ascending
      for (std::size_t c = 0; c < n; ++c) {
        if (!(mask >> c & 1))
          continue;
        const AlgElt& minor = dp[mask ^ (std::size_t(1) << c)];
        AlgElt term = ctx.mul(m.entry[r][c], minor);
        // Cofactor sign for entry (r, pos) of the (r+1)-square submatrix.
        if ((r + pos) % 2 == 0)
          acc = alg_add(acc, term);
        else
          acc = alg_sub(acc, term);
        ++pos;
      }
      dp[mask] = std::move(acc);
    }
    // Release the previous level.
    for (std::size_t mask = 0; mask < dp.size(); ++mask)
      if (std::size_t(std::popcount(mask)) == r)
        dp[mask] = AlgElt{};
  }
  return dp[(std::size_t(1) << n) - 1];
}

bool is_nonsingular_over_L(const GaloisContext& ctx, const TransitionMatrix& m) {
  return ctx.is_unit(alg_det(ctx, m));
}

bool is_generator(const GaloisContext& ctx, const RegularSubgroup& N, const AlgElt& x) {
  return is_nonsingular_over_L(ctx, transition_matrix(ctx, N, x));
}

bool theorem_nbg_check(const GaloisContext& ctx, const AlgElt& x) {
  bool via_lambda = is_generator(ctx, left_regular(ctx.group()), x);
  bool via_rho = is_generator(ctx, right_regular(ctx.group()), x);
  return via_lambda == via_rho;
}

std::vector<AlgElt> gl_embed(const GaloisContext& ctx, const AlgElt& x) {
  std::vector<AlgElt> f(ctx.dim());
  for (std::size_t g = 0; g < ctx.dim(); ++g)
    f[g] = ctx.act(g, x);
  return f;
}

namespace {

// Monic echelon form over the algebra L; valid when every nonzero pivot
// encountered is a unit, which holds in field mode.
std::vector<std::vector<AlgElt>> alg_echelon(const GaloisContext& ctx,
                                             std::vector<std::vector<AlgElt>> rows) {
  const std::size_t n = ctx.dim();
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
    std::size_t p = rows.size();
    for (std::size_t i = r; i < rows.size(); ++i)
      if (!alg_is_zero(rows[i][c])) {
        p = i;
        break;
      }
    if (p == rows.size())
      continue;
    std::swap(rows[r], rows[p]);
    if (!ctx.is_unit(rows[r][c]))
      fail("alg_echelon: pivot is not a unit");
    // Normalize the pivot to one by solving pivot * inv = one.
    RatMatrix mult_by(n, n);
    for (std::size_t j = 0; j < n; ++j) {
      AlgElt col = ctx.mul(rows[r][c], ctx.basis_elt(j));
      for (std::size_t i = 0; i < n; ++i)
        mult_by.at(i, j) = col.c[i];
    }
    RatMatrix inv = mat_inverse(mult_by);
    for (std::size_t j = 0; j < n; ++j)
      rows[r][j] = AlgElt{mat_apply(inv, rows[r][j].c)};
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || alg_is_zero(rows[i][c]))
        continue;
      AlgElt f = rows[i][c];
      for (std::size_t j = 0; j < n; ++j)
        rows[i][j] = alg_sub(rows[i][j], ctx.mul(f, rows[r][j]));
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

}  // namespace

bool row_spaces_match(const GaloisContext& ctx, const AlgElt& x) {
  const std::size_t n = ctx.dim();
  TransitionMatrix tl = transition_matrix(ctx, left_regular(ctx.group()), x);
  TransitionMatrix tr = transition_matrix(ctx, right_regular(ctx.group()), x);
  std::vector<std::vector<AlgElt>> rows_l(n, std::vector<AlgElt>(n)), rows_rt = rows_l;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      rows_l[i][j] = tl.entry[i][j];
      rows_rt[i][j] = tr.entry[j][i];  // transpose of T_rho
    }
  return alg_echelon(ctx, rows_l) == alg_echelon(ctx, rows_rt);
}

}  // namespace hopfgalois
