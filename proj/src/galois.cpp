#include "hopfgalois/galois.hpp"

namespace hopfgalois {

AlgElt alg_add(const AlgElt& a, const AlgElt& b) {
  if (a.c.size() != b.c.size())
    fail("alg_add: dimension mismatch");
  AlgElt r = a;
  for (std::size_t i = 0; i < r.c.size(); ++i)
    r.c[i] += b.c[i];
  return r;
}

AlgElt alg_sub(const AlgElt& a, const AlgElt& b) {
  if (a.c.size() != b.c.size())
    fail("alg_sub: dimension mismatch");
  AlgElt r = a;
  for (std::size_t i = 0; i < r.c.size(); ++i)
    r.c[i] -= b.c[i];
  return r;
}

AlgElt alg_scale(const Rat& c, const AlgElt& a) {
  AlgElt r = a;
  for (auto& x : r.c)
    x *= c;
  return r;
}

bool alg_is_zero(const AlgElt& a) {
  for (const auto& x : a.c)
    if (x != 0)
      return false;
  return true;
}

AlgElt GaloisContext::basis_elt(std::size_t i) const {
  AlgElt e = zero();
  e.c[i] = 1;
  return e;
}

AlgElt GaloisContext::mul(const AlgElt& a, const AlgElt& b) const {
  if (a.c.size() != dim_ || b.c.size() != dim_)
    fail("GaloisContext::mul: dimension mismatch");
  AlgElt r = zero();
  for (std::size_t i = 0; i < dim_; ++i) {
    if (a.c[i] == 0)
      continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (b.c[j] == 0)
        continue;
      Rat f = a.c[i] * b.c[j];
      const RatVec& m = mult_[i][j];
      for (std::size_t k = 0; k < dim_; ++k)
        if (m[k] != 0)
          r.c[k] += f * m[k];
    }
  }
  return r;
}

AlgElt GaloisContext::act(std::size_t sigma, const AlgElt& a) const {
  return AlgElt{mat_apply(autos_[sigma], a.c)};
}

Rat GaloisContext::trace(const AlgElt& a) const {
  if (a.c.size() != dim_)
    fail("GaloisContext::trace: dimension mismatch");
  Rat t(0);
  for (std::size_t i = 0; i < dim_; ++i)
    if (a.c[i] != 0)
      t += a.c[i] * basis_trace_[i];
  return t;
}

bool GaloisContext::is_unit(const AlgElt& a) const {
  // Multiplication-by-a in the regular representation; unit iff invertible.
  RatMatrix m(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    AlgElt col = mul(a, basis_elt(j));
    for (std::size_t i = 0; i < dim_; ++i)
      m.at(i, j) = col.c[i];
  }
  return det_and_nonsingular(m).second;
}

AlgElt GaloisContext::dual_generator(const AlgElt& x) const {
  // Solve trace(x_hat * g(x)) = delta_{identity, g} for the coords of
  // x_hat: row g, column i is trace(e_i * g(x)) = <gram row i, g(x)>.
  RatMatrix sys(dim_, dim_);
  RatVec rhs(dim_, Rat(0));
  rhs[group_.identity()] = 1;
  for (std::size_t g = 0; g < dim_; ++g) {
    AlgElt gx = act(g, x);
    RatVec row = mat_apply(gram_, gx.c);
    for (std::size_t i = 0; i < dim_; ++i)
      sys.at(g, i) = row[i];
  }
  if (!det_and_nonsingular(sys).second)
    fail("dual_generator: translates of x do not form a basis");
  auto sol = solve_right(sys, rhs);
  return AlgElt{*sol};
}

GaloisContext GaloisContext::split(const FiniteGroup& G) {
  const std::size_t n = G.order();
  GaloisContext ctx;
  ctx.group_ = G;
  ctx.dim_ = n;
  ctx.mode_ = Mode::Split;
  ctx.mult_.assign(n, std::vector<RatVec>(n, RatVec(n, Rat(0))));
  for (std::size_t i = 0; i < n; ++i)
    ctx.mult_[i][i][i] = 1;
  ctx.one_.assign(n, Rat(1));
  ctx.autos_.resize(n);
  for (std::size_t s = 0; s < n; ++s) {
    RatMatrix m(n, n);
    for (std::size_t g = 0; g < n; ++g)
      m.at(G.mul(s, g), g) = 1;
    ctx.autos_[s] = std::move(m);
  }
  ctx.validate();
  return ctx;
}

GaloisContext GaloisContext::field(FiniteGroup G, std::vector<std::vector<RatVec>> mult, RatVec one,
                                   std::vector<RatMatrix> autos) {
  GaloisContext ctx;
  ctx.dim_ = G.order();
  ctx.group_ = std::move(G);
  ctx.mode_ = Mode::Field;
  ctx.mult_ = std::move(mult);
  ctx.one_ = std::move(one);
  ctx.autos_ = std::move(autos);
  ctx.validate();
  return ctx;
}

void GaloisContext::validate() {
  const std::size_t n = dim_;
  auto reject = [](const std::string& identity) {
    throw FixtureError("context invalid: " + identity);
  };

  if (mult_.size() != n || one_.size() != n || autos_.size() != n)
    reject("dimension bookkeeping (|G| = dim)");
  for (const auto& row : mult_) {
    if (row.size() != n)
      reject("structure tensor shape");
    for (const auto& v : row)
      if (v.size() != n)
        reject("structure tensor shape");
  }
  for (const auto& m : autos_)
    if (m.rows != n || m.cols != n)
      reject("automorphism matrix shape");

  // Commutativity: e_i e_j = e_j e_i.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (mult_[i][j] != mult_[j][i])
        reject("commutativity e_" + std::to_string(i) + "*e_" + std::to_string(j) +
               " = e_" + std::to_string(j) + "*e_" + std::to_string(i));

  // Unit: one * e_j = e_j.
  for (std::size_t j = 0; j < n; ++j) {
    AlgElt r = mul(AlgElt{one_}, basis_elt(j));
    if (!(r == basis_elt(j)))
      reject("unit law one*e_" + std::to_string(j) + " = e_" + std::to_string(j));
  }

  // Associativity on basis triples: (e_i e_j) e_k = e_i (e_j e_k).
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        AlgElt left = mul(AlgElt{mult_[i][j]}, basis_elt(k));
        AlgElt right = mul(basis_elt(i), AlgElt{mult_[j][k]});
        if (!(left == right))
          reject("associativity (e_" + std::to_string(i) + " e_" + std::to_string(j) + ") e_" +
                 std::to_string(k));
      }

  // Identity automorphism.
  if (!(autos_[group_.identity()] == RatMatrix::identity(n)))
    reject("M_{1_G} = identity");

  // sigma -> M_sigma is a homomorphism matching the group table.
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t)
      if (!(mat_mul(autos_[s], autos_[t]) == autos_[group_.mul(s, t)]))
        reject("homomorphism M_" + group_.label(s) + " M_" + group_.label(t) + " = M_" +
               group_.label(group_.mul(s, t)));

  // Invertibility (implied by the homomorphism law, but checked directly
  // so a corrupted fixture names the right identity).
  for (std::size_t s = 0; s < n; ++s)
    if (!det_and_nonsingular(autos_[s]).second)
      reject("invertibility of M_" + group_.label(s));

  // Each automorphism fixes one and is multiplicative on basis pairs.
  for (std::size_t s = 0; s < n; ++s) {
    if (!(mat_apply(autos_[s], one_) == one_))
      reject("M_" + group_.label(s) + " fixes one");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        AlgElt lhs = mul(act(s, basis_elt(i)), act(s, basis_elt(j)));
        AlgElt rhs = act(s, AlgElt{mult_[i][j]});
        if (!(lhs == rhs))
          reject("multiplicativity of M_" + group_.label(s) + " on (e_" + std::to_string(i) +
                 ", e_" + std::to_string(j) + ")");
      }
  }

  // Fixed subspace is exactly the line through one (L^G = K).
  RatMatrix stacked(n * n, n);
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        stacked.at(s * n + i, j) = autos_[s].at(i, j) - Rat(i == j ? 1 : 0);
  if (rank(stacked) != n - 1)
    reject("fixed subspace has dimension 1");

  // Basis traces; the G-orbit sum of each basis vector must lie on the
  // fixed line, which gives the trace functional.
  basis_trace_.assign(n, Rat(0));
  std::size_t pivot = n;
  for (std::size_t j = 0; j < n; ++j)
    if (one_[j] != 0) {
      pivot = j;
      break;
    }
  if (pivot == n)
    reject("one is nonzero");
  for (std::size_t i = 0; i < n; ++i) {
    RatVec s(n, Rat(0));
    for (std::size_t g = 0; g < n; ++g) {
      AlgElt im = act(g, basis_elt(i));
      for (std::size_t j = 0; j < n; ++j)
        s[j] += im.c[j];
    }
    Rat t = s[pivot] / one_[pivot];
    for (std::size_t j = 0; j < n; ++j)
      if (s[j] != t * one_[j])
        reject("orbit sum of e_" + std::to_string(i) + " lies on the fixed line");
    basis_trace_[i] = t;
  }

  // Trace form Gram matrix; nondegeneracy is required for dual bases.
  gram_ = RatMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rat t(0);
      const RatVec& m = mult_[i][j];
      for (std::size_t k = 0; k < n; ++k)
        if (m[k] != 0)
          t += m[k] * basis_trace_[k];
      gram_.at(i, j) = t;
    }
  if (!det_and_nonsingular(gram_).second)
    reject("trace form nondegenerate");
}

}  // namespace hopfgalois
