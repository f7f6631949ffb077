// Transfer of freeness generators between the classical order in K[G] and
// the order in H_lambda, in both directions, with every intermediate claim
// checked twice: directly, and along the algebraic route the construction
// promises. At exact arithmetic a mismatch can only mean a plumbing bug,
// and the dual check localizes it.

#ifndef HOPFGALOIS_TRANSFER_HPP_
#define HOPFGALOIS_TRANSFER_HPP_

#include <optional>
#include <string>
#include <vector>

#include "hopfgalois/orders.hpp"

namespace hopfgalois {

enum class TransferDirection { KgToHlambda, HlambdaToKg };

struct ClaimRecord {
  std::size_t element;  // which x_i the claim concerns
  std::string claim;
  bool ok = false;
  std::string witness;  // populated on failure
};

struct TransferReport {
  TransferDirection direction = TransferDirection::KgToHlambda;
  FreenessCertificate input;
  std::vector<RatVec> output_elements;  // ambient coordinates on the target side
  std::vector<ClaimRecord> claims;
  bool order_basis_matches = false;  // outputs span the independently computed order
  std::optional<FreenessCertificate> output_certificate;

  bool success() const { return output_certificate.has_value(); }
};

// sum_g (sigma g)(x_hat) (tau g)(x) = delta_{sigma,tau} for all sigma, tau.
bool inside_out_check(const GaloisContext& ctx, const AlgElt& x, const AlgElt& xhat);

// h_i = sum_g ( sum_rho rho(x_i) (g^{-1} rho)(x_hat) ) lambda(g), as a raw
// element of L[lambda(G)]; fixedness is the caller's first claim.
HopfElt build_h(const GaloisContext& ctx, const RegularSubgroup& lambda, const AlgElt& x_i,
                const AlgElt& xhat);

// a_i = sum_g Tr(x_i g(x_hat)) g in K[G].
KGElt build_a(const GaloisContext& ctx, const AlgElt& x_i, const AlgElt& xhat);

// Given a valid K[G]-side certificate for B, builds the h_i, checks the
// three claims (fixedness, h_i . x = x_i, h_i . x_j in B plus the
// interchange route), and certifies the H_lambda side.
TransferReport transfer_kg_to_hlambda(const GaloisContext& ctx, const HopfStructure& hl,
                                      const GStableLattice& B, const FreenessCertificate& cert);

// The reverse pass with a_i = build_a(x_i, x_hat) and its two claims.
TransferReport transfer_hlambda_to_kg(const GaloisContext& ctx, const HopfStructure& hl,
                                      const GStableLattice& B, const FreenessCertificate& cert);

enum class MainVerdict { BothFree, NeitherFoundWithinBox, Contradiction };

struct MainTheoremReport {
  MainVerdict verdict = MainVerdict::NeitherFoundWithinBox;
  OrderLattice order_kg;
  OrderLattice order_hlambda;
  std::optional<FreenessCertificate> cert_kg;
  std::optional<FreenessCertificate> cert_hlambda;
  std::string cert_kg_source;       // "search" | "transfer" | ""
  std::string cert_hlambda_source;  // likewise
  std::vector<TransferReport> transfers;
  std::string failure;  // populated on contradiction
};

// Computes both associated orders, searches both sides within the box and
// transfers whatever certificate appears. A contradiction verdict means an
// implementation bug, never a refutation: the transfer theorems leave no
// room at exact arithmetic.
MainTheoremReport theorem_main_check(const GaloisContext& ctx, const HopfStructure& hl,
                                     const GStableLattice& B, long box);

}  // namespace hopfgalois

#endif
