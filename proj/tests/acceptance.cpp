// Acceptance suite: every headline property of the library, one pass/fail
// line each, with runtime budgets enforced where stated. All comparisons
// are exact; there are no tolerances to tune. Exit code is the number of
// failed criteria.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <vector>

#include "hopfgalois/cli.hpp"
#include "hopfgalois/nbg.hpp"
#include "hopfgalois/rng.hpp"
#include "support/table_oracle.hpp"

using namespace hopfgalois;

namespace {

int failures = 0;

void criterion(const std::string& name, double budget_seconds,
               const std::function<bool(std::string&)>& body) {
  auto start = std::chrono::steady_clock::now();
  bool ok = false;
  std::string detail;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  bool in_budget = budget_seconds <= 0 || elapsed < budget_seconds;
  if (!in_budget && detail.empty())
    detail = "over time budget";
  bool pass = ok && in_budget;
  std::printf("%s  %s  (%.2fs%s)%s%s\n", pass ? "PASS" : "FAIL", name.c_str(), elapsed,
              budget_seconds > 0 ? (" / budget " + std::to_string(int(budget_seconds)) + "s").c_str()
                                 : "",
              detail.empty() ? "" : "  -- ", detail.c_str());
  if (!pass)
    ++failures;
}

Json load_fixture(const char* name) {
  Json j;
  std::ifstream in(std::string(HOPFGALOIS_FIXTURE_DIR) + "/" + name);
  if (!in)
    throw Error(std::string("missing fixture ") + name);
  in >> j;
  return j;
}

GaloisContext field_s3() { return json_context(load_fixture("field_s3.json").at("context")); }

// Deterministic normal basis generator from the seeded sampling stream.
AlgElt seeded_nbg(const GaloisContext& ctx, std::uint64_t seed) {
  SplitMix64 rng(seed);
  for (int tries = 0; tries < 1000; ++tries) {
    AlgElt x = random_elt(ctx, rng);
    try {
      (void)ctx.dual_generator(x);
      return x;
    } catch (const Error&) {
    }
  }
  throw Error("seeded_nbg: no generator found (degenerate context?)");
}

bool census_criterion(const FiniteGroup& G, std::string& detail) {
  auto census = enumerate_regular_subgroups(G);
  RegularSubgroup lam = left_regular(G), rho = right_regular(G);
  bool has_lam = false, has_rho = false;
  std::set<std::vector<std::size_t>> keys;
  for (const auto& N : census) {
    if (N == lam)
      has_lam = true;
    if (N == rho)
      has_rho = true;
    if (!normalizes(N, G)) {
      detail = "member fails normalization re-verification";
      return false;
    }
    for (std::size_t g = 0; g < G.order(); ++g)
      if (N.elements[g](G.identity()) != g ||
          (g != G.identity() && N.elements[g].has_fixed_point())) {
        detail = "member fails regularity re-verification";
        return false;
      }
    keys.insert(subgroup_key(N));
  }
  if (!has_lam || !has_rho || lam == rho) {
    detail = "lambda/rho not distinct members";
    return false;
  }
  auto oracle = testing::table_oracle_census(G);
  if (keys != oracle) {
    detail = "census (" + std::to_string(keys.size()) + ") != table oracle (" +
             std::to_string(oracle.size()) + ")";
    return false;
  }
  detail = std::to_string(census.size()) + " subgroups, oracle agrees";
  return true;
}

bool nbg_criterion(const GaloisContext& ctx, std::string& detail) {
  SplitMix64 rng(2024);
  for (int i = 0; i < 200; ++i) {
    AlgElt x = random_elt(ctx, rng);
    if (!theorem_nbg_check(ctx, x)) {
      detail = "lambda/rho verdicts disagree at sample " + std::to_string(i);
      return false;
    }
  }
  detail = "200/200 agree";
  return true;
}

bool lemma_suite(const GaloisContext& ctx, const AlgElt& x, std::string& detail) {
  const std::size_t n = ctx.dim();
  const FiniteGroup& G = ctx.group();
  AlgElt xhat = ctx.dual_generator(x);
  // Dual-basis grid: trace(sigma(xhat) tau(x)) = delta over all n^2 pairs.
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t)
      if (ctx.trace(ctx.mul(ctx.act(s, xhat), ctx.act(t, x))) != Rat(s == t ? 1 : 0)) {
        detail = "dual-basis grid fails";
        return false;
      }
  // Inside-out grid, elementwise.
  if (!inside_out_check(ctx, x, xhat)) {
    detail = "inside-out grid fails";
    return false;
  }
  // Matrix route: with X = ((g_i g_j)(x)) and Xhat likewise,
  // X^T Xhat = I and Xhat X^T = I.
  std::vector<std::vector<AlgElt>> X(n, std::vector<AlgElt>(n)), Xh = X;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      X[i][j] = ctx.act(G.mul(i, j), x);
      Xh[i][j] = ctx.act(G.mul(i, j), xhat);
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      AlgElt a = ctx.zero(), b = ctx.zero();
      for (std::size_t k = 0; k < n; ++k) {
        a = alg_add(a, ctx.mul(X[k][i], Xh[k][j]));
        b = alg_add(b, ctx.mul(Xh[i][k], X[j][k]));
      }
      AlgElt expect = (i == j) ? ctx.one_elt() : ctx.zero();
      if (!(a == expect) || !(b == expect)) {
        detail = "matrix route fails";
        return false;
      }
    }
  // Interchange law over hopf basis x G x context basis (n^3 triples).
  RegularSubgroup lam = left_regular(G);
  auto basis = hopf_basis(ctx, lam);
  for (const auto& h : basis)
    for (std::size_t s = 0; s < n; ++s) {
      KGElt z{RatVec(n, Rat(0))};
      z.c[s] = 1;
      for (std::size_t j = 0; j < n; ++j)
        if (!interchange_check(ctx, lam, h, z, ctx.basis_elt(j))) {
          detail = "interchange law fails";
          return false;
        }
    }
  return true;
}

struct PropositionsCase {
  std::string name;
  GaloisContext ctx;
  Lattice lattice;
};

bool propositions_criterion(std::vector<PropositionsCase>& cases, std::string& detail) {
  std::size_t certified = 0;
  for (auto& pc : cases) {
    GStableLattice B = check_g_stable(pc.ctx, pc.lattice);
    OrderLattice A = associated_order_kg(pc.ctx, B);
    auto gen = search_generator(pc.ctx, nullptr, A, B, 2);
    if (!gen)
      continue;  // no known/found generator: criterion is vacuous here
    ++certified;
    auto cert = verify_freeness(pc.ctx, nullptr, A, B, *gen);
    if (!cert) {
      detail = pc.name + ": search result failed verification";
      return false;
    }
    HopfStructure hl = make_hopf_structure(pc.ctx, left_regular(pc.ctx.group()));
    TransferReport fwd = transfer_kg_to_hlambda(pc.ctx, hl, B, *cert);
    for (const auto& c : fwd.claims)
      if (!c.ok) {
        detail = pc.name + ": forward claim failed: " + c.claim;
        return false;
      }
    if (!fwd.order_basis_matches || !fwd.success()) {
      detail = pc.name + ": {h_i} does not span the independent H_lambda order";
      return false;
    }
    TransferReport bwd = transfer_hlambda_to_kg(pc.ctx, hl, B, *fwd.output_certificate);
    for (const auto& c : bwd.claims)
      if (!c.ok) {
        detail = pc.name + ": reverse claim failed: " + c.claim;
        return false;
      }
    if (!bwd.order_basis_matches || !bwd.success()) {
      detail = pc.name + ": {a_i} does not span the independent K[G] order";
      return false;
    }
    if (!(Lattice::from_rat_rows(bwd.output_elements) == A.lattice)) {
      detail = pc.name + ": round trip left the original order";
      return false;
    }
  }
  detail = std::to_string(certified) + "/" + std::to_string(cases.size()) +
           " fixtures had a findable generator; all claims exact";
  return certified > 0;
}

bool theorem_criterion(std::string& detail) {
  GaloisContext ctx = GaloisContext::split(symmetric_3());
  HopfStructure hl = make_hopf_structure(ctx, left_regular(ctx.group()));
  std::vector<std::pair<std::string, Lattice>> lattices;
  lattices.emplace_back("standard", Lattice::standard(6));
  lattices.emplace_back("scaled", Lattice::standard(6).scaled(Rat(3)));
  lattices.emplace_back("sublattice",
                        json_lattice(load_fixture("split_s3_sublattice.json").at("lattice")));
  std::string verdicts;
  for (auto& [name, lat] : lattices) {
    GStableLattice B = check_g_stable(ctx, lat);
    MainTheoremReport rep = theorem_main_check(ctx, hl, B, 2);
    if (rep.verdict == MainVerdict::Contradiction) {
      detail = name + ": CONTRADICTION - " + rep.failure;
      return false;
    }
    if (rep.cert_kg.has_value() != rep.cert_hlambda.has_value()) {
      detail = name + ": one-sided certificate without transfer";
      return false;
    }
    verdicts += (verdicts.empty() ? "" : ", ") + name + "=" +
                (rep.verdict == MainVerdict::BothFree ? "both-free" : "neither-found");
  }
  detail = verdicts;
  return true;
}

bool ground_truth_criterion(std::string& detail) {
  GaloisContext ctx = GaloisContext::split(symmetric_3());
  GStableLattice B = check_g_stable(ctx, Lattice::standard(6));
  OrderLattice A = associated_order_kg(ctx, B);
  if (!(A.lattice == Lattice::standard(6))) {
    detail = "associated order of the standard lattice is not the integral group ring";
    return false;
  }
  auto cert = verify_freeness(ctx, nullptr, A, B, ctx.basis_elt(ctx.group().identity()));
  if (!cert || !revalidate_certificate(ctx, nullptr, A, B, *cert)) {
    detail = "u_e does not certify freeness";
    return false;
  }
  if (!is_hopf_order(ctx, nullptr, A)) {
    detail = "integral group ring not recognized as a Hopf order";
    return false;
  }
  return true;
}

bool infrastructure_criterion(std::string& detail) {
  // HNF idempotence and span preservation, 1000 random integer matrices.
  SplitMix64 rng(99);
  for (int iter = 0; iter < 1000; ++iter) {
    std::size_t n = std::size_t(rng.uniform(1, 6));
    std::size_t rows = std::size_t(rng.uniform(1, 6));
    IntMatrix m(rows, n);
    for (auto& e : m.entries)
      e = rng.uniform(-9, 9);
    IntMatrix h = hnf(m);
    if (!(hnf(h) == h)) {
      detail = "hnf not idempotent";
      return false;
    }
    if (h.rows == n && rows == n) {
      // Square nonsingular case: membership via rational solve against the
      // original rows must agree with membership in the HNF lattice.
      RatMatrix mt(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          mt.at(i, j) = Rat(m.at(j, i));
      Lattice lat = Lattice::from_int_rows(m);
      for (int probe = 0; probe < 5; ++probe) {
        RatVec v(n);
        for (auto& e : v)
          e = rng.uniform(-15, 15);
        auto sol = solve_right(mt, v);
        bool expect = sol.has_value();
        if (expect)
          for (const auto& q : *sol)
            if (!is_integer(q))
              expect = false;
        if (lat.contains(v) != expect) {
          detail = "hnf changed the span";
          return false;
        }
      }
    }
  }
  // Certificate re-validation round trip through JSON.
  GaloisContext ctx = GaloisContext::split(symmetric_3());
  GStableLattice B = check_g_stable(ctx, Lattice::standard(6));
  OrderLattice A = associated_order_kg(ctx, B);
  auto cert = verify_freeness(ctx, nullptr, A, B, ctx.basis_elt(0));
  if (!cert) {
    detail = "certificate construction failed";
    return false;
  }
  FreenessCertificate back = json_certificate(certificate_json(*cert));
  if (!revalidate_certificate(ctx, nullptr, A, B, back)) {
    detail = "certificate does not survive a JSON round trip";
    return false;
  }
  // Byte-identical reports under fixed seeds.
  for (const char* cmd : {"enumerate", "nbg", "theorem", "hopf-order"}) {
    RunConfig c;
    c.command = cmd;
    c.fixture_path = std::string(HOPFGALOIS_FIXTURE_DIR) + "/split_s3.json";
    c.seed = 5;
    c.samples = 10;
    c.box = 1;
    std::string a = render_report(run_command(c).report, "json");
    std::string b = render_report(run_command(c).report, "json");
    if (a != b) {
      detail = std::string("report bytes differ for ") + cmd;
      return false;
    }
  }
  return true;
}

}  // namespace

int main() {
  std::printf("acceptance: exact Hopf-Galois machinery\n");

  criterion("1a census S3 (lambda/rho, oracle count, re-verification)", 60, [](std::string& d) {
    return census_criterion(symmetric_3(), d);
  });
  criterion("1b census D4 (lambda/rho, oracle count, re-verification)", 60, [](std::string& d) {
    return census_criterion(dihedral_4(), d);
  });
  criterion("1c census Q8 (lambda/rho, oracle count, re-verification)", 60, [](std::string& d) {
    return census_criterion(quaternion_8(), d);
  });

  criterion("2a generator-verdict agreement, split S3, 200 samples", 30, [](std::string& d) {
    return nbg_criterion(GaloisContext::split(symmetric_3()), d);
  });
  criterion("2b generator-verdict agreement, split D4, 200 samples", 30, [](std::string& d) {
    return nbg_criterion(GaloisContext::split(dihedral_4()), d);
  });
  criterion("2c generator-verdict agreement, split Q8, 200 samples", 30, [](std::string& d) {
    return nbg_criterion(GaloisContext::split(quaternion_8()), d);
  });
  criterion("2d generator-verdict agreement, field S3, 200 samples", 30, [](std::string& d) {
    return nbg_criterion(field_s3(), d);
  });

  criterion("3a lemma suite (dual grid, inside-out, interchange), split S3", 0,
            [](std::string& d) {
              GaloisContext ctx = GaloisContext::split(symmetric_3());
              return lemma_suite(ctx, seeded_nbg(ctx, 1000), d);
            });
  criterion("3b lemma suite, split D4", 0, [](std::string& d) {
    GaloisContext ctx = GaloisContext::split(dihedral_4());
    return lemma_suite(ctx, seeded_nbg(ctx, 1001), d);
  });
  criterion("3c lemma suite, split Q8", 0, [](std::string& d) {
    GaloisContext ctx = GaloisContext::split(quaternion_8());
    return lemma_suite(ctx, seeded_nbg(ctx, 1002), d);
  });
  criterion("3d lemma suite, field S3", 0, [](std::string& d) {
    GaloisContext ctx = field_s3();
    AlgElt x{json_vec(load_fixture("field_s3.json").at("known_generator"))};
    return lemma_suite(ctx, x, d);
  });

  criterion("4 proposition claims + order-basis equality, all fixtures", 0, [](std::string& d) {
    std::vector<PropositionsCase> cases;
    cases.push_back({"split-s3-standard", GaloisContext::split(symmetric_3()),
                     Lattice::standard(6)});
    cases.push_back({"split-s3-scaled", GaloisContext::split(symmetric_3()),
                     Lattice::standard(6).scaled(Rat(3))});
    cases.push_back({"split-s3-sublattice", GaloisContext::split(symmetric_3()),
                     json_lattice(load_fixture("split_s3_sublattice.json").at("lattice"))});
    cases.push_back({"field-s3", field_s3(),
                     json_lattice(load_fixture("field_s3.json").at("lattice"))});
    return propositions_criterion(cases, d);
  });

  criterion("5 main theorem end-to-end, split S3 x 3 lattices", 120,
            [](std::string& d) { return theorem_criterion(d); });

  criterion("6 split ground truths (Z[G], u_e certificate, Hopf order)", 0,
            [](std::string& d) { return ground_truth_criterion(d); });

  criterion("7 infrastructure (HNF x1000, cert round trip, byte-identical reports)", 0,
            [](std::string& d) { return infrastructure_criterion(d); });

  std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
