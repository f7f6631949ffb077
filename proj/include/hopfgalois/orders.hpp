// G-stable lattices in L, associated orders in K[G] and in H_lambda as
// multiplier lattices, freeness certificates with full re-validation,
// bounded generator search, and the Hopf-order membership test
// (group-like comultiplication, counit integrality, antipode stability).

#ifndef HOPFGALOIS_ORDERS_HPP_
#define HOPFGALOIS_ORDERS_HPP_

#include <optional>
#include <vector>

#include "hopfgalois/hopf.hpp"
#include "hopfgalois/lattice.hpp"

namespace hopfgalois {

struct GStableLattice {
  Lattice lattice;
  bool stability_verified = false;
};

enum class Ambient { GroupAlgebra, HopfLambda };

struct OrderLattice {
  Ambient ambient = Ambient::GroupAlgebra;
  Lattice lattice;  // in G-coordinates or hopf-basis coordinates
  bool ring_verified = false;
};

// A generator plus order elements whose images form a basis of the target
// lattice; machine-checkable from scratch.
struct FreenessCertificate {
  RatVec generator;                 // AlgElt coordinates
  std::vector<RatVec> order_basis;  // ambient coordinates, one per rank
  std::vector<RatVec> images;       // AlgElt coordinates of order_basis[i](generator)
};

// Verifies act(sigma, v) in B for every basis vector and sigma; throws
// with the witnessing (sigma, vector index) on instability.
GStableLattice check_g_stable(const GaloisContext& ctx, const Lattice& B);

// Multiplier order { z in K[G] : z(B) contained in B }, ring closure
// verified; always contains the integral group ring.
OrderLattice associated_order_kg(const GaloisContext& ctx, const GStableLattice& B);

// Multiplier order inside H_lambda in hopf-basis coordinates.
OrderLattice associated_order_hlambda(const GaloisContext& ctx, const HopfStructure& hl,
                                      const GStableLattice& B);

// Action matrix on L of the ambient element with the given coordinates.
RatMatrix ambient_action_matrix(const GaloisContext& ctx, const HopfStructure* hl,
                                Ambient ambient, const RatVec& coords);

// Applies each HNF basis element of A to x; certificate iff the images
// span exactly B. Throws if x is not in B. `hl` may be null for the
// group-algebra ambient.
std::optional<FreenessCertificate> verify_freeness(const GaloisContext& ctx,
                                                   const HopfStructure* hl, const OrderLattice& A,
                                                   const GStableLattice& B, const AlgElt& x);

// First integer combination of B's basis with coefficients in [-box, box]
// (lexicographic order) that certifies freeness; absence proves nothing.
std::optional<AlgElt> search_generator(const GaloisContext& ctx, const HopfStructure* hl,
                                       const OrderLattice& A, const GStableLattice& B, long box);

// Re-runs every check a certificate promises: each image lies in B, the
// images span B exactly, each order element lies in A, and the images
// really are the order elements applied to the generator.
bool revalidate_certificate(const GaloisContext& ctx, const HopfStructure* hl,
                            const OrderLattice& A, const GStableLattice& B,
                            const FreenessCertificate& cert);

// Group-like comultiplication, counit and antipode stability of the order.
// Requires ring_verified.
bool is_hopf_order(const GaloisContext& ctx, const HopfStructure* hl, const OrderLattice& A);

}  // namespace hopfgalois

#endif
