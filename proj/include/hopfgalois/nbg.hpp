// Normal basis generator testing through the transition matrix
// T_N(x) = ( eta(g)[x] ) with entries in L. Nonsingularity over L decides
// L[N]-generation of Map(G, L), hence (after descent) H_N-generation of L;
// for N = rho(G) this is the classical K[G] criterion.

#ifndef HOPFGALOIS_NBG_HPP_
#define HOPFGALOIS_NBG_HPP_

#include <vector>

#include "hopfgalois/hopf.hpp"

namespace hopfgalois {

// Rows indexed by eta in N, columns by g in G; entries are elements of L.
struct TransitionMatrix {
  std::size_t n = 0;
  std::vector<std::vector<AlgElt>> entry;  // entry[eta_index][g]
};

TransitionMatrix transition_matrix(const GaloisContext& ctx, const RegularSubgroup& N,
                                   const AlgElt& x);

// Division-free determinant of a square matrix with entries in L, by
// Laplace expansion with shared minors over column subsets.
AlgElt alg_det(const GaloisContext& ctx, const TransitionMatrix& m);

// Unit test of the determinant: all idempotent components nonzero in
// split mode, nonzero in field mode; both are exactly invertibility of
// multiplication by the determinant.
bool is_nonsingular_over_L(const GaloisContext& ctx, const TransitionMatrix& m);

bool is_generator(const GaloisContext& ctx, const RegularSubgroup& N, const AlgElt& x);

// The generator verdicts for N = lambda(G) and N = rho(G) must agree for
// every x; returns that agreement so a plumbing bug can falsify it.
bool theorem_nbg_check(const GaloisContext& ctx, const AlgElt& x);

// f_x in Map(G, L): the coefficient family g -> g(x).
std::vector<AlgElt> gl_embed(const GaloisContext& ctx, const AlgElt& x);

// Row spaces over L of T_lambda(x) and of the transpose of T_rho(x),
// compared via monic echelon forms. Field mode only (division by nonzero
// entries requires a field).
bool row_spaces_match(const GaloisContext& ctx, const AlgElt& x);

}  // namespace hopfgalois

#endif
