#include "hopfgalois/hopf.hpp"

namespace hopfgalois {

AlgElt kg_act(const GaloisContext& ctx, const KGElt& z, const AlgElt& x) {
  if (z.c.size() != ctx.dim())
    fail("kg_act: coefficient count mismatch");
  AlgElt r = ctx.zero();
  for (std::size_t s = 0; s < ctx.dim(); ++s)
    if (z.c[s] != 0)
      r = alg_add(r, alg_scale(z.c[s], ctx.act(s, x)));
  return r;
}

KGElt kg_mul(const GaloisContext& ctx, const KGElt& a, const KGElt& b) {
  const FiniteGroup& G = ctx.group();
  KGElt r{RatVec(ctx.dim(), Rat(0))};
  for (std::size_t s = 0; s < ctx.dim(); ++s) {
    if (a.c[s] == 0)
      continue;
    for (std::size_t t = 0; t < ctx.dim(); ++t)
      if (b.c[t] != 0)
        r.c[G.mul(s, t)] += a.c[s] * b.c[t];
  }
  return r;
}

namespace {

// Index of lambda(g) eta lambda(g)^{-1} inside N; throws if the conjugate
// is not an element of N (N not normalized).
std::size_t conj_index(const GaloisContext& ctx, const RegularSubgroup& N, std::size_t g,
                       std::size_t eta_index) {
  Perm c = conj_action(ctx.group(), g, N.elements[eta_index]);
  std::size_t idx = c(ctx.group().identity());
  if (!(c == N.elements[idx]))
    fail("g_twist: N is not normalized by lambda(G)");
  return idx;
}

}  // namespace

LNElt g_twist(const GaloisContext& ctx, const RegularSubgroup& N, std::size_t g, const LNElt& h) {
  const std::size_t n = ctx.dim();
  if (h.coeff.size() != n)
    fail("g_twist: coefficient count mismatch");
  LNElt r = ln_zero(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t j = conj_index(ctx, N, g, i);
    AlgElt moved = ctx.act(g, AlgElt{h.coeff[i]});
    for (std::size_t k = 0; k < n; ++k)
      r.coeff[j][k] += moved.c[k];
  }
  return r;
}

bool is_fixed(const GaloisContext& ctx, const RegularSubgroup& N, const LNElt& h) {
  for (std::size_t g = 0; g < ctx.dim(); ++g)
    if (!(g_twist(ctx, N, g, h) == h))
      return false;
  return true;
}

HopfElt orbit_sum(const GaloisContext& ctx, const RegularSubgroup& N, const AlgElt& y,
                  std::size_t eta_index) {
  const std::size_t n = ctx.dim();
  LNElt r = ln_zero(n);
  for (std::size_t g = 0; g < n; ++g) {
    std::size_t j = conj_index(ctx, N, g, eta_index);
    AlgElt moved = ctx.act(g, y);
    for (std::size_t k = 0; k < n; ++k)
      r.coeff[j][k] += moved.c[k];
  }
  HopfElt out{r, false};
  if (!is_fixed(ctx, N, r))
    fail("orbit_sum: output not G-fixed");
  out.fixed_verified = true;
  return out;
}

RatVec flatten(const LNElt& h) {
  RatVec flat;
  for (const auto& v : h.coeff)
    flat.insert(flat.end(), v.begin(), v.end());
  return flat;
}

LNElt unflatten(std::size_t n, const RatVec& flat) {
  if (flat.size() != n * n)
    fail("unflatten: length mismatch");
  LNElt h;
  h.coeff.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    h.coeff[i] = RatVec(flat.begin() + i * n, flat.begin() + (i + 1) * n);
  return h;
}

LNElt ln_zero(std::size_t n) {
  LNElt h;
  h.coeff.assign(n, RatVec(n, Rat(0)));
  return h;
}

std::vector<HopfElt> hopf_basis(const GaloisContext& ctx, const RegularSubgroup& N) {
  const std::size_t n = ctx.dim();
  RatMatrix span(n * n, n * n);
  std::size_t row = 0;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) {
      HopfElt os = orbit_sum(ctx, N, ctx.basis_elt(i), j);
      RatVec flat = flatten(os.val);
      for (std::size_t k = 0; k < n * n; ++k)
        span.at(row, k) = flat[k];
      ++row;
    }
  RatMatrix red = rref(span);
  if (red.rows != n)
    fail("hopf_basis: H_N has rank " + std::to_string(red.rows) + ", expected " +
         std::to_string(n));
  std::vector<HopfElt> basis;
  basis.reserve(n);
  for (std::size_t r = 0; r < n; ++r) {
    RatVec flat(n * n);
    for (std::size_t k = 0; k < n * n; ++k)
      flat[k] = red.at(r, k);
    LNElt val = unflatten(n, flat);
    if (!is_fixed(ctx, N, val))
      fail("hopf_basis: echelon combination left the fixed subspace");
    basis.push_back(HopfElt{std::move(val), true});
  }
  return basis;
}

AlgElt hopf_act(const GaloisContext& ctx, const RegularSubgroup& N, const HopfElt& h,
                const AlgElt& x) {
  if (!h.fixed_verified)
    fail("hopf_act: element is not verified G-fixed");
  const std::size_t n = ctx.dim();
  const std::size_t e = ctx.group().identity();
  AlgElt r = ctx.zero();
  for (std::size_t i = 0; i < n; ++i) {
    if (alg_is_zero(AlgElt{h.val.coeff[i]}))
      continue;
    // (eta^{-1})(1_G) as a group element index.
    std::size_t gidx = N.elements[i].inverse()(e);
    r = alg_add(r, ctx.mul(AlgElt{h.val.coeff[i]}, ctx.act(gidx, x)));
  }
  return r;
}

HopfElt hopf_mul(const GaloisContext& ctx, const RegularSubgroup& N, const HopfElt& a,
                 const HopfElt& b) {
  const std::size_t n = ctx.dim();
  LNElt r = ln_zero(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (alg_is_zero(AlgElt{a.val.coeff[i]}))
      continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (alg_is_zero(AlgElt{b.val.coeff[j]}))
        continue;
      std::size_t k = N.compose_index(i, j);
      AlgElt prod = ctx.mul(AlgElt{a.val.coeff[i]}, AlgElt{b.val.coeff[j]});
      for (std::size_t t = 0; t < n; ++t)
        r.coeff[k][t] += prod.c[t];
    }
  }
  HopfElt out{std::move(r), false};
  out.fixed_verified = is_fixed(ctx, N, out.val);
  return out;
}

bool interchange_check(const GaloisContext& ctx, const RegularSubgroup& N, const HopfElt& h,
                       const KGElt& z, const AlgElt& t) {
  if (!(N == left_regular(ctx.group())))
    fail("interchange_check: N must be lambda(G)");
  AlgElt left = hopf_act(ctx, N, h, kg_act(ctx, z, t));
  AlgElt right = kg_act(ctx, z, hopf_act(ctx, N, h, t));
  return left == right;
}

RatVec HopfStructure::to_basis_coords(const LNElt& h) const {
  RatVec flat = flatten(h);
  auto sol = solve_right(flat_basis, flat);
  if (!sol)
    fail("to_basis_coords: element is not in H_N");
  return *sol;
}

HopfElt HopfStructure::from_basis_coords(const RatVec& w) const {
  const std::size_t n = N.order();
  if (w.size() != n)
    fail("from_basis_coords: coordinate count mismatch");
  LNElt r = ln_zero(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (w[k] == 0)
      continue;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        r.coeff[i][j] += w[k] * basis[k].val.coeff[i][j];
  }
  return HopfElt{std::move(r), true};
}

RatMatrix HopfStructure::action_matrix(const RatVec& w) const {
  const std::size_t n = N.order();
  RatMatrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    if (w[k] == 0)
      continue;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        m.at(i, j) += w[k] * action[k].at(i, j);
  }
  return m;
}

HopfStructure make_hopf_structure(const GaloisContext& ctx, const RegularSubgroup& N) {
  const std::size_t n = ctx.dim();
  HopfStructure hs;
  hs.N = N;
  hs.is_lambda = (N == left_regular(ctx.group()));
  hs.basis = hopf_basis(ctx, N);
  hs.action.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    RatMatrix m(n, n);
    for (std::size_t j = 0; j < n; ++j) {
      AlgElt col = hopf_act(ctx, N, hs.basis[k], ctx.basis_elt(j));
      for (std::size_t i = 0; i < n; ++i)
        m.at(i, j) = col.c[i];
    }
    hs.action[k] = std::move(m);
  }
  hs.flat_basis = RatMatrix(n * n, n);
  for (std::size_t k = 0; k < n; ++k) {
    RatVec flat = flatten(hs.basis[k].val);
    for (std::size_t r = 0; r < n * n; ++r)
      hs.flat_basis.at(r, k) = flat[r];
  }
  LNElt id = ln_zero(n);
  std::size_t id_idx = ctx.group().identity();
  // The identity permutation of N sits at the index of 1_G.
  if (!N.elements[id_idx].is_identity())
    fail("make_hopf_structure: identity indexing broken");
  id.coeff[id_idx] = ctx.one();
  hs.identity_coords = hs.to_basis_coords(id);
  return hs;
}

}  // namespace hopfgalois
