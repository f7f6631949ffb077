#include "hopfgalois/transfer.hpp"

namespace hopfgalois {

bool inside_out_check(const GaloisContext& ctx, const AlgElt& x, const AlgElt& xhat) {
  const std::size_t n = ctx.dim();
  const FiniteGroup& G = ctx.group();
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t) {
      AlgElt sum = ctx.zero();
      for (std::size_t g = 0; g < n; ++g) {
        AlgElt a = ctx.act(G.mul(s, g), xhat);
        AlgElt b = ctx.act(G.mul(t, g), x);
        sum = alg_add(sum, ctx.mul(a, b));
      }
      AlgElt expect = (s == t) ? ctx.one_elt() : ctx.zero();
      if (!(sum == expect))
        return false;
    }
  return true;
}

HopfElt build_h(const GaloisContext& ctx, const RegularSubgroup& lambda, const AlgElt& x_i,
                const AlgElt& xhat) {
  const std::size_t n = ctx.dim();
  const FiniteGroup& G = ctx.group();
  LNElt h = ln_zero(n);
  for (std::size_t g = 0; g < n; ++g) {
    AlgElt coeff = ctx.zero();
    for (std::size_t rho = 0; rho < n; ++rho) {
      AlgElt left = ctx.act(rho, x_i);
      AlgElt right = ctx.act(G.mul(G.inv(g), rho), xhat);
      coeff = alg_add(coeff, ctx.mul(left, right));
    }
    // lambda(g) sits at index g in the lambda subgroup.
    if (!(lambda.elements[g](G.identity()) == g))
      fail("build_h: lambda indexing broken");
    h.coeff[g] = coeff.c;
  }
  return HopfElt{std::move(h), false};
}

KGElt build_a(const GaloisContext& ctx, const AlgElt& x_i, const AlgElt& xhat) {
  const std::size_t n = ctx.dim();
  KGElt a{RatVec(n, Rat(0))};
  for (std::size_t g = 0; g < n; ++g)
    a.c[g] = ctx.trace(ctx.mul(x_i, ctx.act(g, xhat)));
  return a;
}

namespace {

std::string coords_string(const RatVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i)
    s += (i ? "," : "") + rat_to_string(v[i]);
  return s + ")";
}

}  // namespace

TransferReport transfer_kg_to_hlambda(const GaloisContext& ctx, const HopfStructure& hl,
                                      const GStableLattice& B, const FreenessCertificate& cert) {
  const std::size_t n = ctx.dim();
  TransferReport rep;
  rep.direction = TransferDirection::KgToHlambda;
  rep.input = cert;

  AlgElt x{cert.generator};
  AlgElt xhat = ctx.dual_generator(x);
  std::vector<AlgElt> xs(n);
  for (std::size_t i = 0; i < n; ++i)
    xs[i] = AlgElt{cert.images[i]};

  std::vector<HopfElt> hs(n);
  bool all_ok = true;
  for (std::size_t i = 0; i < n; ++i) {
    hs[i] = build_h(ctx, hl.N, xs[i], xhat);
    // Claim 1: h_i is G-fixed, so it lives in H_lambda.
    ClaimRecord c1{i, "h_i is G-fixed (h_i in H_lambda)", false, ""};
    c1.ok = is_fixed(ctx, hl.N, hs[i].val);
    if (!c1.ok) {
      c1.witness = "g_twist moves h_" + std::to_string(i);
      all_ok = false;
      rep.claims.push_back(c1);
      continue;
    }
    hs[i].fixed_verified = true;
    rep.claims.push_back(c1);

    // Claim 2: h_i . x = x_i.
    ClaimRecord c2{i, "h_i . x = x_i", false, ""};
    AlgElt hx = hopf_act(ctx, hl.N, hs[i], x);
    c2.ok = (hx == xs[i]);
    if (!c2.ok) {
      c2.witness = "h_i . x = " + coords_string(hx.c);
      all_ok = false;
    }
    rep.claims.push_back(c2);

    // Claim 3: h_i . x_j lies in B for every j; checked directly and along
    // the interchange route h_i . a_j(x) = a_j(h_i . x) = a_j(x_i).
    ClaimRecord c3{i, "h_i . x_j in B for all j (with interchange route)", true, ""};
    for (std::size_t j = 0; j < n && c3.ok; ++j) {
      AlgElt hxj = hopf_act(ctx, hl.N, hs[i], xs[j]);
      if (!B.lattice.contains(hxj.c)) {
        c3.ok = false;
        c3.witness = "h_" + std::to_string(i) + " . x_" + std::to_string(j) + " outside B";
        break;
      }
      AlgElt route = kg_act(ctx, KGElt{cert.order_basis[j]}, xs[i]);
      if (!(hxj == route)) {
        c3.ok = false;
        c3.witness = "route mismatch at j = " + std::to_string(j);
      }
    }
    if (!c3.ok)
      all_ok = false;
    rep.claims.push_back(c3);
  }
  if (!all_ok)
    return rep;

  for (std::size_t i = 0; i < n; ++i)
    rep.output_elements.push_back(hl.to_basis_coords(hs[i].val));

  // The construction promises that {h_i} is a basis of the associated
  // order in H_lambda; compare against the independent computation
  // rather than trusting the proof.
  OrderLattice independent = associated_order_hlambda(ctx, hl, B);
  Lattice from_outputs = Lattice::from_rat_rows(rep.output_elements);
  rep.order_basis_matches = (from_outputs == independent.lattice);
  rep.claims.push_back(ClaimRecord{n, "{h_i} spans the independently computed order in H_lambda",
                                   rep.order_basis_matches,
                                   rep.order_basis_matches ? "" : "lattice mismatch"});
  if (!rep.order_basis_matches)
    return rep;

  FreenessCertificate out;
  out.generator = cert.generator;
  out.order_basis = rep.output_elements;
  out.images.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    out.images[i] = xs[i].c;
  rep.output_certificate = std::move(out);
  return rep;
}

TransferReport transfer_hlambda_to_kg(const GaloisContext& ctx, const HopfStructure& hl,
                                      const GStableLattice& B, const FreenessCertificate& cert) {
  const std::size_t n = ctx.dim();
  TransferReport rep;
  rep.direction = TransferDirection::HlambdaToKg;
  rep.input = cert;

  AlgElt x{cert.generator};
  if (alg_is_zero(x))
    fail("transfer_hlambda_to_kg: generator is zero");
  AlgElt xhat = ctx.dual_generator(x);
  std::vector<AlgElt> xs(n);
  std::vector<HopfElt> input_hs(n);
  for (std::size_t i = 0; i < n; ++i) {
    xs[i] = AlgElt{cert.images[i]};
    input_hs[i] = hl.from_basis_coords(cert.order_basis[i]);
  }

  std::vector<KGElt> as(n);
  bool all_ok = true;
  for (std::size_t i = 0; i < n; ++i) {
    as[i] = build_a(ctx, xs[i], xhat);

    // Claim 1: a_i(x) = x_i.
    ClaimRecord c1{i, "a_i(x) = x_i", false, ""};
    AlgElt ax = kg_act(ctx, as[i], x);
    c1.ok = (ax == xs[i]);
    if (!c1.ok) {
      c1.witness = "a_i(x) = " + coords_string(ax.c);
      all_ok = false;
    }
    rep.claims.push_back(c1);

    // Claim 2: a_i(x_j) lies in B for every j, and equals h_j . x_i along
    // the interchange route.
    ClaimRecord c2{i, "a_i(x_j) in B for all j (with interchange route)", true, ""};
    for (std::size_t j = 0; j < n && c2.ok; ++j) {
      AlgElt axj = kg_act(ctx, as[i], xs[j]);
      if (!B.lattice.contains(axj.c)) {
        c2.ok = false;
        c2.witness = "a_" + std::to_string(i) + "(x_" + std::to_string(j) + ") outside B";
        break;
      }
      AlgElt route = hopf_act(ctx, hl.N, input_hs[j], xs[i]);
      if (!(axj == route)) {
        c2.ok = false;
        c2.witness = "route mismatch at j = " + std::to_string(j);
      }
    }
    if (!c2.ok)
      all_ok = false;
    rep.claims.push_back(c2);
  }
  if (!all_ok)
    return rep;

  for (std::size_t i = 0; i < n; ++i)
    rep.output_elements.push_back(as[i].c);

  OrderLattice independent = associated_order_kg(ctx, B);
  Lattice from_outputs = Lattice::from_rat_rows(rep.output_elements);
  rep.order_basis_matches = (from_outputs == independent.lattice);
  rep.claims.push_back(ClaimRecord{n, "{a_i} spans the independently computed order in K[G]",
                                   rep.order_basis_matches,
                                   rep.order_basis_matches ? "" : "lattice mismatch"});
  if (!rep.order_basis_matches)
    return rep;

  FreenessCertificate out;
  out.generator = cert.generator;
  out.order_basis = rep.output_elements;
  out.images.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    out.images[i] = xs[i].c;
  rep.output_certificate = std::move(out);
  return rep;
}

MainTheoremReport theorem_main_check(const GaloisContext& ctx, const HopfStructure& hl,
                                     const GStableLattice& B, long box) {
  MainTheoremReport rep;
  rep.order_kg = associated_order_kg(ctx, B);
  rep.order_hlambda = associated_order_hlambda(ctx, hl, B);

  auto kg_gen = search_generator(ctx, nullptr, rep.order_kg, B, box);
  auto hl_gen = search_generator(ctx, &hl, rep.order_hlambda, B, box);

  if (kg_gen) {
    rep.cert_kg = verify_freeness(ctx, nullptr, rep.order_kg, B, *kg_gen);
    rep.cert_kg_source = "search";
  }
  if (hl_gen) {
    rep.cert_hlambda = verify_freeness(ctx, &hl, rep.order_hlambda, B, *hl_gen);
    rep.cert_hlambda_source = "search";
  }

  if (!rep.cert_kg && !rep.cert_hlambda) {
    rep.verdict = MainVerdict::NeitherFoundWithinBox;
    return rep;
  }

  if (rep.cert_kg) {
    TransferReport fwd = transfer_kg_to_hlambda(ctx, hl, B, *rep.cert_kg);
    bool ok = fwd.success() &&
              revalidate_certificate(ctx, &hl, rep.order_hlambda, B, *fwd.output_certificate);
    if (!ok) {
      rep.transfers.push_back(std::move(fwd));
      rep.verdict = MainVerdict::Contradiction;
      rep.failure = "K[G]-side certificate did not transfer to H_lambda";
      return rep;
    }
    if (!rep.cert_hlambda) {
      rep.cert_hlambda = fwd.output_certificate;
      rep.cert_hlambda_source = "transfer";
    }
    rep.transfers.push_back(std::move(fwd));
  }
  if (rep.cert_hlambda && rep.cert_hlambda_source == "search") {
    TransferReport bwd = transfer_hlambda_to_kg(ctx, hl, B, *rep.cert_hlambda);
    bool ok = bwd.success() &&
              revalidate_certificate(ctx, nullptr, rep.order_kg, B, *bwd.output_certificate);
    if (!ok) {
      rep.transfers.push_back(std::move(bwd));
      rep.verdict = MainVerdict::Contradiction;
      rep.failure = "H_lambda-side certificate did not transfer to K[G]";
      return rep;
    }
    if (!rep.cert_kg) {
      rep.cert_kg = bwd.output_certificate;
      rep.cert_kg_source = "transfer";
    }
    rep.transfers.push_back(std::move(bwd));
  }
  rep.verdict = MainVerdict::BothFree;
  return rep;
}

}  // namespace hopfgalois
