#include <doctest.h>

#include <fstream>
#include <set>

#include "hopfgalois/cli.hpp"
#include "hopfgalois/rng.hpp"

using namespace hopfgalois;

namespace {

Json load_fixture(const char* name) {
  Json j;
  std::ifstream in(std::string(HOPFGALOIS_FIXTURE_DIR) + "/" + name);
  REQUIRE(in.good());
  in >> j;
  return j;
}

}  // namespace

TEST_CASE("check_g_stable: standard, scaled, corrupted") {
  GaloisContext ctx = GaloisContext::split(symmetric_3());
  GStableLattice B = check_g_stable(ctx, Lattice::standard(6));
  CHECK(B.stability_verified);
  CHECK(check_g_stable(ctx, Lattice::standard(6).scaled(make_rat(1, 2))).stability_verified);
  // Replace u_e by 2 u_e: act(sigma, u_{sigma^{-1}}) = u_e escapes.
  IntMatrix m = IntMatrix::identity(6);
  m.at(ctx.group().identity(), ctx.group().identity()) = 2;
  try {
    check_g_stable(ctx, Lattice::from_int_rows(m));
    FAIL("instability not detected");
  } catch (const FixtureError& e) {
    CHECK(std::string(e.what()).find("not G-stable") != std::string::npos);
  }
}

TEST_CASE("associated order in K[G] of the standard split lattice is Z[G]") {
  for (const FiniteGroup& G : {symmetric_3(), dihedral_4()}) {
    GaloisContext ctx = GaloisContext::split(G);
    GStableLattice B = check_g_stable(ctx, Lattice::standard(G.order()));
    OrderLattice A = associated_order_kg(ctx, B);
    CHECK(A.ring_verified);
    CHECK(A.lattice == Lattice::standard(G.order()));
  }
}

TEST_CASE("multiplier brute force oracle for the standard lattice") {
  // Independent check on a small grid: z with coordinates in {-1,-1/2,0,
  // 1/2,1} preserves the standard lattice iff z is integral.
  GaloisContext ctx = GaloisContext::split(symmetric_3());
  GStableLattice B = check_g_stable(ctx, Lattice::standard(6));
  OrderLattice A = associated_order_kg(ctx, B);
  std::vector<Rat> grid = {Rat(-1), make_rat(-1, 2), Rat(0), make_rat(1, 2), Rat(1)};
  SplitMix64 rng(41);
  for (int iter = 0; iter < 200; ++iter) {
    KGElt z{RatVec(6)};
    for (auto& c : z.c)
      c = grid[std::size_t(rng.uniform(0, 4))];
    bool preserves = true;
    for (std::size_t j = 0; j < 6 && preserves; ++j)
      preserves = B.lattice.contains(kg_act(ctx, z, AlgElt{B.lattice.basis_vector(j)}).c);
    CHECK(preserves == A.lattice.contains(z.c));
  }
}

TEST_CASE("associated orders are scale invariant") {
  GaloisContext ctx = GaloisContext::split(symmetric_3());
  HopfStructure hl = make_hopf_structure(ctx, left_regular(ctx.group()));
  GStableLattice B = check_g_stable(ctx, Lattice::standard(6));
  OrderLattice A = associated_order_kg(ctx, B);
  OrderLattice Ah = associated_order_hlambda(ctx, hl, B);
  for (Rat c : {Rat(3), make_rat(1, 2), make_rat(-5, 3)}) {
    GStableLattice Bc = check_g_stable(ctx, B.lattice.scaled(c));
    CHECK(associated_order_kg(ctx, Bc).lattice == A.lattice);
    CHECK(associated_order_hlambda(ctx, hl, Bc).lattice == Ah.lattice);
  }
}

TEST_CASE("associated order in H_lambda: rank and ring closure") {
  GaloisContext ctx = GaloisContext::split(symmetric_3());
  HopfStructure hl = make_hopf_structure(ctx, left_regular(ctx.group()));
  GStableLattice B = check_g_stable(ctx, Lattice::standard(6));
  OrderLattice A = associated_order_hlambda(ctx, hl, B);
  CHECK(A.ring_verified);
  CHECK(A.lattice.dim() == 6);
  CHECK(A.ambient == Ambient::HopfLambda);
  CHECK(A.lattice.contains(hl.identity_coords));
}

TEST_CASE("field fixture: associated orders verify ring closure") {
  Json fx = load_fixture("field_s3.json");
  GaloisContext ctx = json_context(fx.at("context"));
  HopfStructure hl = make_hopf_structure(ctx, left_regular(ctx.group()));
  GStableLattice B = check_g_stable(ctx, json_lattice(fx.at("lattice")));
  CHECK(associated_order_kg(ctx, B).ring_verified);
  CHECK(associated_order_hlambda(ctx, hl, B).ring_verified);
}

TEST_CASE("verify_freeness: standard split lattice with u_e") {
  GaloisContext ctx = GaloisContext::split(symmetric_3());
  GStableLattice B = check_g_stable(ctx, Lattice::standard(6));
  OrderLattice A = associated_order_kg(ctx, B);
  AlgElt u0 = ctx.basis_elt(ctx.group().identity());
  auto cert = verify_freeness(ctx, nullptr, A, B, u0);
  REQUIRE(cert.has_value());
  // The images are exactly the idempotent basis, permuted.
  std::set<RatVec> images(cert->images.begin(), cert->images.end());
  for (std::size_t g = 0; g < 6; ++g)
    CHECK(images.count(ctx.basis_elt(g).c) == 1);
  CHECK(revalidate_certificate(ctx, nullptr, A, B, *cert));
  // x = 0 is in B but certifies nothing.
  CHECK_FALSE(verify_freeness(ctx, nullptr, A, B, ctx.zero()).has_value());
  // x outside B errors.
  CHECK_THROWS_AS(
      verify_freeness(ctx, nullptr, A, B, AlgElt{RatVec(6, make_rat(1, 2))}), Error);
}

TEST_CASE("verify_freeness agrees with a brute-force combination search") {
  // For x = u_e + u_g the verdict must match an oracle that looks for ANY
  // small integer combination of order basis images spanning B.
  GaloisContext ctx = GaloisContext::split(symmetric_3());
  GStableLattice B = check_g_stable(ctx, Lattice::standard(6));
  OrderLattice A = associated_order_kg(ctx, B);
  for (std::size_t g = 1; g < 6; ++g) {
    AlgElt x = alg_add(ctx.basis_elt(0), ctx.basis_elt(g));
    auto cert = verify_freeness(ctx, nullptr, A, B, x);
    // Oracle: images of the order basis applied to x; B is spanned iff
    // the image lattice has the same determinant, checked by membership
    // of every standard basis vector among small combinations.
    std::vector<RatVec> images;
    for (std::size_t i = 0; i < 6; ++i)
      images.push_back(kg_act(ctx, KGElt{A.lattice.basis_vector(i)}, x).c);
    bool spans = true;
    RatMatrix im(6, 6);
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = 0; j < 6; ++j)
        im.at(i, j) = images[i][j];
    auto [det, nonsing] = det_and_nonsingular(im);
    if (!nonsing || (det != 1 && det != -1))
      spans = false;  // index > 1 or rank deficient: cannot equal B
    CHECK(cert.has_value() == spans);
  }
}

TEST_CASE("search_generator basics") {
  GaloisContext ctx = GaloisContext::split(symmetric_3());
  GStableLattice B = check_g_stable(ctx, Lattice::standard(6));
  OrderLattice A = associated_order_kg(ctx, B);
  CHECK_FALSE(search_generator(ctx, nullptr, A, B, 0).has_value());
  auto found = search_generator(ctx, nullptr, A, B, 1);
  REQUIRE(found.has_value());
  CHECK(verify_freeness(ctx, nullptr, A, B, *found).has_value());
  // Deterministic: two runs find the same element.
  CHECK(search_generator(ctx, nullptr, A, B, 1)->c == found->c);
}

TEST_CASE("is_hopf_order: integral group ring is a Hopf order") {
  for (const FiniteGroup& G : {symmetric_3(), quaternion_8()}) {
    GaloisContext ctx = GaloisContext::split(G);
    GStableLattice B = check_g_stable(ctx, Lattice::standard(G.order()));
    OrderLattice A = associated_order_kg(ctx, B);
    CHECK(is_hopf_order(ctx, nullptr, A));
  }
}

TEST_CASE("is_hopf_order: hand-built non-Hopf order over C2") {
  // A = Z<1, 2 sigma> in Q[C2] is a ring (4 = (2 sigma)^2 is integral) but
  // Delta(2 sigma) = (1/2)(2 sigma (x) 2 sigma) is not in A (x) A.
  GaloisContext ctx = GaloisContext::split(cyclic_group(2));
  IntMatrix m(2, 2);
  m.at(0, 0) = 1;
  m.at(1, 1) = 2;
  OrderLattice A;
  A.ambient = Ambient::GroupAlgebra;
  A.lattice = Lattice::from_int_rows(m);
  A.ring_verified = false;
  CHECK_THROWS_AS(is_hopf_order(ctx, nullptr, A), Error);  // precondition
  A.ring_verified = true;  // verified by the comment above
  CHECK_FALSE(is_hopf_order(ctx, nullptr, A));
}

TEST_CASE("is_hopf_order: maximal order in Q[C2] is a Hopf order") {
  // Z<(1/2)(1 + sigma), (1/2)(1 - sigma)> is the maximal order in Q[C2];
  // it is a Hopf order iff comultiplication, counit and antipode all stay
  // integral. Counit of (1/2)(1 - sigma) is 0, of (1/2)(1 + sigma) is 1;
  // antipode fixes both; Delta((1/2)(1+sigma)) = e1 (x) e1 expands fine.
  GaloisContext ctx = GaloisContext::split(cyclic_group(2));
  std::vector<RatVec> rows = {{make_rat(1, 2), make_rat(1, 2)},
                              {make_rat(1, 2), make_rat(-1, 2)}};
  OrderLattice A;
  A.ambient = Ambient::GroupAlgebra;
  A.lattice = Lattice::from_rat_rows(rows);
  A.ring_verified = true;  // idempotents: e^2 = e
  CHECK(is_hopf_order(ctx, nullptr, A));
}

TEST_CASE("the canonical hopf basis integrally spans A_lambda of the standard lattice") {
  GaloisContext ctx = GaloisContext::split(symmetric_3());
  HopfStructure hl = make_hopf_structure(ctx, left_regular(ctx.group()));
  GStableLattice B = check_g_stable(ctx, Lattice::standard(6));
  OrderLattice A = associated_order_hlambda(ctx, hl, B);
  CHECK(A.lattice == Lattice::standard(6));
}

TEST_CASE("abelian cross-check: H_lambda ambient verdicts match K[G] verdicts") {
  // For abelian G the two embeddings coincide and H_lambda is literally
  // K[G] under the canonical basis, so the tensor-space Hopf-order test
  // must agree with the direct group-algebra test on the same lattices.
  GaloisContext ctx = GaloisContext::split(cyclic_group(2));
  HopfStructure hl = make_hopf_structure(ctx, left_regular(ctx.group()));
  // The canonical basis maps to the group elements, so coordinates agree.
  REQUIRE(hl.identity_coords == RatVec{Rat(1), Rat(0)});

  auto both_verdicts = [&](const Lattice& lat) {
    OrderLattice kg{Ambient::GroupAlgebra, lat, true};
    OrderLattice hla{Ambient::HopfLambda, lat, true};
    return std::pair{is_hopf_order(ctx, nullptr, kg), is_hopf_order(ctx, &hl, hla)};
  };

  // Integral group ring: Hopf on both routes.
  auto [kg1, hl1] = both_verdicts(Lattice::standard(2));
  CHECK(kg1);
  CHECK(hl1);
  // Maximal order (idempotents): Hopf on both routes.
  std::vector<RatVec> idem = {{make_rat(1, 2), make_rat(1, 2)},
                              {make_rat(1, 2), make_rat(-1, 2)}};
  auto [kg2, hl2] = both_verdicts(Lattice::from_rat_rows(idem));
  CHECK(kg2);
  CHECK(hl2);
  // Z<1, 2 sigma>: not Hopf on either route.
  IntMatrix m(2, 2);
  m.at(0, 0) = 1;
  m.at(1, 1) = 2;
  auto [kg3, hl3] = both_verdicts(Lattice::from_int_rows(m));
  CHECK_FALSE(kg3);
  CHECK_FALSE(hl3);
}

TEST_CASE("abelian end to end: C4 split standard lattice") {
  // The transfer machinery must still run when lambda = rho.
  GaloisContext ctx = GaloisContext::split(cyclic_group(4));
  HopfStructure hl = make_hopf_structure(ctx, left_regular(ctx.group()));
  GStableLattice B = check_g_stable(ctx, Lattice::standard(4));
  MainTheoremReport rep = theorem_main_check(ctx, hl, B, 1);
  CHECK(rep.verdict == MainVerdict::BothFree);
}

TEST_CASE("certificate json round trip revalidates") {
  GaloisContext ctx = GaloisContext::split(symmetric_3());
  GStableLattice B = check_g_stable(ctx, Lattice::standard(6));
  OrderLattice A = associated_order_kg(ctx, B);
  auto cert = verify_freeness(ctx, nullptr, A, B, ctx.basis_elt(0));
  REQUIRE(cert.has_value());
  Json doc = certificate_json(*cert);
  FreenessCertificate back = json_certificate(doc);
  CHECK(revalidate_certificate(ctx, nullptr, A, B, back));
  // Tamper with an image: revalidation must fail.
  back.images[0][0] += 1;
  CHECK_FALSE(revalidate_certificate(ctx, nullptr, A, B, back));
}
