// The group algebra K[G] with its classical action on L, the L-algebra
// L[N] carrying the twisted G-action (Galois on coefficients, conjugation
// through the left regular embedding on N), and the fixed Hopf algebra
// H_N = L[N]^G with a canonical K-basis.
//
// The Greither-Pareigis action formula (sum c_eta eta) . x =
// sum c_eta (eta^{-1}(1_G))[x] is only a module action on fixed elements,
// so HopfElt carries a verified-fixed flag and every action demands it.

#ifndef HOPFGALOIS_HOPF_HPP_
#define HOPFGALOIS_HOPF_HPP_

#include <vector>

#include "hopfgalois/galois.hpp"

namespace hopfgalois {

// Element of K[G], coefficients indexed by group element.
struct KGElt {
  RatVec c;
  bool operator==(const KGElt& o) const = default;
};

// Element of L[N]: one L-coefficient per element of N, indexed the same
// way RegularSubgroup indexes its elements.
struct LNElt {
  std::vector<RatVec> coeff;
  bool operator==(const LNElt& o) const = default;
};

struct HopfElt {
  LNElt val;
  bool fixed_verified = false;
};

// z(x) = sum_sigma z_sigma sigma(x).
AlgElt kg_act(const GaloisContext& ctx, const KGElt& z, const AlgElt& x);

// Product in K[G] (convolution over the group table).
KGElt kg_mul(const GaloisContext& ctx, const KGElt& a, const KGElt& b);

// The twisted G-action on L[N]: coefficient c_eta moves to the conjugate
// position with its value mapped through the Galois action.
LNElt g_twist(const GaloisContext& ctx, const RegularSubgroup& N, std::size_t g, const LNElt& h);

bool is_fixed(const GaloisContext& ctx, const RegularSubgroup& N, const LNElt& h);

// T(y * eta) = sum_g g(y * eta); always lands in L[N]^G.
HopfElt orbit_sum(const GaloisContext& ctx, const RegularSubgroup& N, const AlgElt& y,
                  std::size_t eta_index);

// Canonical K-basis of L[N]^G of size |G|: the reduced row echelon form of
// the orbit-sum span in flattened coordinates (eta-index major, L-basis
// index minor). Throws when the rank is not |G|.
std::vector<HopfElt> hopf_basis(const GaloisContext& ctx, const RegularSubgroup& N);

// The Greither-Pareigis action; requires h.fixed_verified.
AlgElt hopf_act(const GaloisContext& ctx, const RegularSubgroup& N, const HopfElt& h,
                const AlgElt& x);

// Product in L[N]; fixedness of the result is re-verified.
HopfElt hopf_mul(const GaloisContext& ctx, const RegularSubgroup& N, const HopfElt& a,
                 const HopfElt& b);

// h . z(t) = z(h . t); h must live over N = lambda(G).
bool interchange_check(const GaloisContext& ctx, const RegularSubgroup& N, const HopfElt& h,
                       const KGElt& z, const AlgElt& t);

RatVec flatten(const LNElt& h);
LNElt unflatten(std::size_t n, const RatVec& flat);
LNElt ln_zero(std::size_t n);

// A regular subgroup together with the canonical basis of H_N, the action
// matrix of each basis element on L, and an exact coordinate solver for
// expressing fixed elements in that basis. Built once, shared by the
// order and transfer computations.
struct HopfStructure {
  RegularSubgroup N;
  bool is_lambda = false;
  std::vector<HopfElt> basis;
  std::vector<RatMatrix> action;  // action[k] is x -> basis[k] . x
  RatMatrix flat_basis;           // n^2 x n, column k = flatten(basis[k])

  // Coordinates of a fixed element in `basis`; throws if h is not in the
  // span (i.e. not actually fixed).
  RatVec to_basis_coords(const LNElt& h) const;

  // Linear combination of basis elements; fixed by linearity.
  HopfElt from_basis_coords(const RatVec& w) const;

  // Action matrix of the element with the given basis coordinates.
  RatMatrix action_matrix(const RatVec& w) const;

  // Identity of H_N (the identity of N with coefficient one) in basis
  // coordinates.
  RatVec identity_coords;
};

HopfStructure make_hopf_structure(const GaloisContext& ctx, const RegularSubgroup& N);

}  // namespace hopfgalois

#endif
