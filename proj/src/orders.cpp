#include "hopfgalois/orders.hpp"

namespace hopfgalois {

namespace {

// Matrix whose columns are B's basis vectors; converts B-coordinates to
// L-coordinates. Its inverse decides membership constraints exactly.
RatMatrix basis_columns(const Lattice& B) {
  const std::size_t n = B.dim();
  RatMatrix p(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    RatVec bj = B.basis_vector(j);
    for (std::size_t i = 0; i < n; ++i)
      p.at(i, j) = bj[i];
  }
  return p;
}

// The dual-lattice construction behind every multiplier order: given the
// stacked rational constraint matrix M (m x n, full column rank), the set
// { z : M z integral } is the dual of the row lattice of M. Denominators
// are cleared once globally, one HNF follows.
Lattice multiplier_lattice(const RatMatrix& constraints) {
  const std::size_t n = constraints.cols;
  Int den(1);
  for (const auto& e : constraints.entries)
    den = lcm(den, e.get_den());
  IntMatrix m(constraints.rows, n);
  for (std::size_t i = 0; i < constraints.entries.size(); ++i) {
    Rat scaled = constraints.entries[i] * Rat(den);
    m.entries[i] = scaled.get_num();
  }
  IntMatrix h = hnf(m);
  if (h.rows != n)
    fail("multiplier_lattice: constraints do not have full rank");
  // Dual basis rows: den * (H^T)^{-1}.
  RatMatrix ht(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      ht.at(i, j) = Rat(h.at(j, i));
  RatMatrix dual = mat_scale(Rat(den), mat_inverse(ht));
  std::vector<RatVec> rows(n, RatVec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      rows[i][j] = dual.at(i, j);
  return Lattice::from_rat_rows(rows);
}

// Multiplication of two ambient elements in ambient coordinates.
RatVec ambient_mul(const GaloisContext& ctx, const HopfStructure* hl, Ambient ambient,
                   const RatVec& a, const RatVec& b) {
  if (ambient == Ambient::GroupAlgebra)
    return kg_mul(ctx, KGElt{a}, KGElt{b}).c;
  HopfElt prod = hopf_mul(ctx, hl->N, hl->from_basis_coords(a), hl->from_basis_coords(b));
  return hl->to_basis_coords(prod.val);
}

RatVec ambient_identity(const GaloisContext& ctx, const HopfStructure* hl, Ambient ambient) {
  if (ambient == Ambient::GroupAlgebra) {
    RatVec id(ctx.dim(), Rat(0));
    id[ctx.group().identity()] = 1;
    return id;
  }
  return hl->identity_coords;
}

// Ring checks shared by both associated orders: identity membership and
// closure of basis products.
void verify_ring(const GaloisContext& ctx, const HopfStructure* hl, OrderLattice& A) {
  const std::size_t n = A.lattice.dim();
  if (!A.lattice.contains(ambient_identity(ctx, hl, A.ambient)))
    fail("order: identity element missing");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      RatVec prod = ambient_mul(ctx, hl, A.ambient, A.lattice.basis_vector(i),
                                A.lattice.basis_vector(j));
      if (!A.lattice.contains(prod))
        fail("order: basis products not closed at (" + std::to_string(i) + "," +
             std::to_string(j) + ")");
    }
  A.ring_verified = true;
}

OrderLattice associated_order(const GaloisContext& ctx, const HopfStructure* hl, Ambient ambient,
                              const GStableLattice& B) {
  if (!B.stability_verified)
    fail("associated_order: lattice stability not verified");
  const std::size_t n = ctx.dim();
  RatMatrix to_b_coords = mat_inverse(basis_columns(B.lattice));
  // Action of the k-th ambient basis element on L.
  std::vector<RatMatrix> unit_action(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (ambient == Ambient::GroupAlgebra)
      unit_action[k] = ctx.auto_matrix(k);
    else
      unit_action[k] = hl->action[k];
  }
  // Stack, per B-basis vector b_j, the matrix taking ambient coordinates z
  // to the B-coordinates of z(b_j); the order is the integrality locus.
  RatMatrix constraints(n * n, n);
  for (std::size_t j = 0; j < n; ++j) {
    RatVec bj = B.lattice.basis_vector(j);
    for (std::size_t k = 0; k < n; ++k) {
      RatVec img = mat_apply(to_b_coords, mat_apply(unit_action[k], bj));
      for (std::size_t i = 0; i < n; ++i)
        constraints.at(j * n + i, k) = img[i];
    }
  }
  OrderLattice A;
  A.ambient = ambient;
  A.lattice = multiplier_lattice(constraints);
  verify_ring(ctx, hl, A);
  return A;
}

}  // namespace

GStableLattice check_g_stable(const GaloisContext& ctx, const Lattice& B) {
  const std::size_t n = ctx.dim();
  if (B.dim() != n)
    fail("check_g_stable: dimension mismatch");
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t j = 0; j < n; ++j) {
      RatVec img = mat_apply(ctx.auto_matrix(s), B.basis_vector(j));
      if (!B.contains(img))
        throw FixtureError("lattice is not G-stable: sigma = " + ctx.group().label(s) +
                           ", basis vector " + std::to_string(j));
    }
  return GStableLattice{B, true};
}

OrderLattice associated_order_kg(const GaloisContext& ctx, const GStableLattice& B) {
  return associated_order(ctx, nullptr, Ambient::GroupAlgebra, B);
}

OrderLattice associated_order_hlambda(const GaloisContext& ctx, const HopfStructure& hl,
                                      const GStableLattice& B) {
  if (!hl.is_lambda)
    fail("associated_order_hlambda: structure is not over lambda(G)");
  return associated_order(ctx, &hl, Ambient::HopfLambda, B);
}

RatMatrix ambient_action_matrix(const GaloisContext& ctx, const HopfStructure* hl, Ambient ambient,
                                const RatVec& coords) {
  const std::size_t n = ctx.dim();
  if (ambient == Ambient::HopfLambda)
    return hl->action_matrix(coords);
  RatMatrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    if (coords[k] == 0)
      continue;
    const RatMatrix& mk = ctx.auto_matrix(k);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (mk.at(i, j) != 0)
          m.at(i, j) += coords[k] * mk.at(i, j);
  }
  return m;
}

std::optional<FreenessCertificate> verify_freeness(const GaloisContext& ctx,
                                                   const HopfStructure* hl, const OrderLattice& A,
                                                   const GStableLattice& B, const AlgElt& x) {
  const std::size_t n = ctx.dim();
  if (!B.lattice.contains(x.c))
    fail("verify_freeness: x is not in B");
  std::vector<RatVec> images(n);
  for (std::size_t i = 0; i < n; ++i) {
    RatMatrix act = ambient_action_matrix(ctx, hl, A.ambient, A.lattice.basis_vector(i));
    images[i] = mat_apply(act, x.c);
  }
  // The images span B exactly iff their lattice equals B.
  RatMatrix im(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      im.at(i, j) = images[i][j];
  if (!det_and_nonsingular(im).second)
    return std::nullopt;
  if (!(Lattice::from_rat_rows(images) == B.lattice))
    return std::nullopt;
  FreenessCertificate cert;
  cert.generator = x.c;
  cert.order_basis.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    cert.order_basis[i] = A.lattice.basis_vector(i);
  cert.images = std::move(images);
  return cert;
}

std::optional<AlgElt> search_generator(const GaloisContext& ctx, const HopfStructure* hl,
                                       const OrderLattice& A, const GStableLattice& B, long box) {
  if (box < 0)
    fail("search_generator: box must be >= 0");
  const std::size_t n = ctx.dim();
  if (box == 0)
    return std::nullopt;
  // Hoisted per-search data: the action matrix of each order basis element.
  std::vector<RatMatrix> acts(n);
  for (std::size_t i = 0; i < n; ++i)
    acts[i] = ambient_action_matrix(ctx, hl, A.ambient, A.lattice.basis_vector(i));
  // Quick necessity filter: x must generate L over K[G], i.e. the Galois
  // translates of x must be linearly independent.
  auto is_nbg = [&](const RatVec& v) {
    RatMatrix t(n, n);
    for (std::size_t s = 0; s < n; ++s) {
      RatVec img = mat_apply(ctx.auto_matrix(s), v);
      for (std::size_t j = 0; j < n; ++j)
        t.at(s, j) = img[j];
    }
    return det_and_nonsingular(t).second;
  };
  auto certifies = [&](const RatVec& x) {
    std::vector<RatVec> images(n);
    RatMatrix im(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      images[i] = mat_apply(acts[i], x);
      for (std::size_t j = 0; j < n; ++j)
        im.at(i, j) = images[i][j];
    }
    if (!det_and_nonsingular(im).second)
      return false;
    return Lattice::from_rat_rows(images) == B.lattice;
  };
  std::vector<long> coeff(n, -box);
  while (true) {
    bool all_zero = true;
    for (long c : coeff)
      if (c != 0) {
        all_zero = false;
        break;
      }
    if (!all_zero) {
      RatVec x(n, Rat(0));
      for (std::size_t j = 0; j < n; ++j) {
        if (coeff[j] == 0)
          continue;
        RatVec bj = B.lattice.basis_vector(j);
        for (std::size_t k = 0; k < n; ++k)
          x[k] += Rat(coeff[j]) * bj[k];
      }
      if (is_nbg(x) && certifies(x))
        return AlgElt{x};
    }
    // Next lexicographic coefficient vector.
    std::size_t pos = n;
    while (pos > 0) {
      --pos;
      if (coeff[pos] < box) {
        ++coeff[pos];
        for (std::size_t j = pos + 1; j < n; ++j)
          coeff[j] = -box;
        break;
      }
      if (pos == 0)
        return std::nullopt;
    }
  }
}

bool revalidate_certificate(const GaloisContext& ctx, const HopfStructure* hl,
                            const OrderLattice& A, const GStableLattice& B,
                            const FreenessCertificate& cert) {
  const std::size_t n = ctx.dim();
  if (cert.order_basis.size() != n || cert.images.size() != n)
    return false;
  if (!B.lattice.contains(cert.generator))
    return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (!A.lattice.contains(cert.order_basis[i]))
      return false;
    RatMatrix act = ambient_action_matrix(ctx, hl, A.ambient, cert.order_basis[i]);
    if (!(mat_apply(act, cert.generator) == cert.images[i]))
      return false;
    if (!B.lattice.contains(cert.images[i]))
      return false;
  }
  RatMatrix im(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      im.at(i, j) = cert.images[i][j];
  if (!det_and_nonsingular(im).second)
    return false;
  return Lattice::from_rat_rows(cert.images) == B.lattice;
}

namespace {

// Tensor-square lattice of A in its own coordinates: rows are Kronecker
// products of basis vectors.
Lattice tensor_square(const Lattice& A) {
  const std::size_t n = A.dim();
  std::vector<RatVec> rows;
  rows.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      RatVec vi = A.basis_vector(i), vj = A.basis_vector(j);
      RatVec r(n * n);
      for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q)
          r[p * n + q] = vi[p] * vj[q];
      rows.push_back(std::move(r));
    }
  return Lattice::from_rat_rows(rows);
}

}  // namespace

bool is_hopf_order(const GaloisContext& ctx, const HopfStructure* hl, const OrderLattice& A) {
  if (!A.ring_verified)
    fail("is_hopf_order: order ring structure not verified");
  const std::size_t n = ctx.dim();
  const FiniteGroup& G = ctx.group();
  Lattice aa = tensor_square(A.lattice);

  if (A.ambient == Ambient::GroupAlgebra) {
    for (std::size_t i = 0; i < n; ++i) {
      RatVec z = A.lattice.basis_vector(i);
      // Comultiplication: sigma -> sigma (x) sigma.
      RatVec delta(n * n, Rat(0));
      for (std::size_t s = 0; s < n; ++s)
        delta[s * n + s] = z[s];
      if (!aa.contains(delta))
        return false;
      // Counit: sigma -> 1 must take integer values on the order.
      Rat eps(0);
      for (std::size_t s = 0; s < n; ++s)
        eps += z[s];
      if (!is_integer(eps))
        return false;
      // Antipode: sigma -> sigma^{-1}.
      RatVec anti(n, Rat(0));
      for (std::size_t s = 0; s < n; ++s)
        anti[G.inv(s)] = z[s];
      if (!A.lattice.contains(anti))
        return false;
    }
    return true;
  }

  // H_lambda ambient. Work in L[N] (x)_L L[N], flattened to K-coordinates
  // of length n^3 (pair (eta_i, eta_j) major, L-basis minor). The images
  // of basis_p (x) basis_q give the embedding of H (x)_K H.
  if (hl == nullptr)
    fail("is_hopf_order: hopf structure required for the H_lambda ambient");
  const std::size_t nn = n * n;
  RatMatrix tensor_images(n * nn, nn);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      // Block (i, j) of basis_p (x) basis_q is c_i^{(p)} * c_j^{(q)} in L.
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          AlgElt prod = ctx.mul(AlgElt{hl->basis[p].val.coeff[i]},
                                AlgElt{hl->basis[q].val.coeff[j]});
          for (std::size_t k = 0; k < n; ++k)
            tensor_images.at((i * n + j) * n + k, p * n + q) = prod.c[k];
        }
    }
  for (std::size_t r = 0; r < n; ++r) {
    RatVec w = A.lattice.basis_vector(r);
    HopfElt h = hl->from_basis_coords(w);
    // Comultiplication on L[N]: c_eta eta -> c_eta (eta (x) eta).
    RatVec delta_flat(n * nn, Rat(0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        delta_flat[(i * n + i) * n + k] = h.val.coeff[i][k];
    auto coords = solve_right(tensor_images, delta_flat);
    if (!coords)
      fail("is_hopf_order: comultiplication image left H (x) H");
    if (!aa.contains(*coords))
      return false;
    // Counit: sum of the L-coefficients must be an integer multiple of one.
    AlgElt total = ctx.zero();
    for (std::size_t i = 0; i < n; ++i)
      total = alg_add(total, AlgElt{h.val.coeff[i]});
    std::size_t pivot = 0;
    while (pivot < n && ctx.one()[pivot] == 0)
      ++pivot;
    Rat eps = total.c[pivot] / ctx.one()[pivot];
    for (std::size_t k = 0; k < n; ++k)
      if (total.c[k] != eps * ctx.one()[k])
        fail("is_hopf_order: counit image is not scalar");
    if (!is_integer(eps))
      return false;
    // Antipode: c_eta eta -> c_eta eta^{-1}.
    LNElt anti = ln_zero(n);
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t inv_i = hl->N.elements[i].inverse()(G.identity());
      for (std::size_t k = 0; k < n; ++k)
        anti.coeff[inv_i][k] += h.val.coeff[i][k];
    }
    RatVec anti_coords = hl->to_basis_coords(anti);
    if (!A.lattice.contains(anti_coords))
      return false;
  }
  return true;
}

}  // namespace hopfgalois
