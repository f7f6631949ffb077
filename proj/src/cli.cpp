#include "hopfgalois/cli.hpp"

#include <fstream>
#include <sstream>

#include "hopfgalois/nbg.hpp"
#include "hopfgalois/rng.hpp"

namespace hopfgalois {

namespace {

Json config_echo(const RunConfig& c) {
  Json j;
  j["command"] = c.command;
  j["fixture"] = c.fixture_path;
  j["seed"] = c.seed;
  j["samples"] = c.samples;
  j["box"] = c.box;
  j["format"] = c.format;
  if (!c.verify_only.empty())
    j["verify_only"] = c.verify_only;
  return j;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw FixtureError("cannot open '" + path + "'");
  Json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw FixtureError("cannot parse '" + path + "': " + e.what());
  }
  return j;
}

Json cmd_enumerate(const RunConfig& config, const Json& fixture) {
  FiniteGroup G = fixture_group(fixture);
  auto census = enumerate_regular_subgroups(G);
  RegularSubgroup lam = left_regular(G);
  RegularSubgroup rho = right_regular(G);
  Json entries = Json::array();
  for (std::size_t i = 0; i < census.size(); ++i) {
    const auto& N = census[i];
    Json e;
    e["index"] = i;
    e["order"] = N.order();
    e["is_lambda"] = (N == lam);
    e["is_rho"] = (N == rho);
    e["normalized_by_lambda"] = normalizes(N, G);
    bool regular = true;
    for (std::size_t g = 0; g < N.order(); ++g)
      if (N.elements[g](G.identity()) != g ||
          (!N.elements[g].is_identity() && N.elements[g].has_fixed_point()))
        regular = false;
    e["regular"] = regular;
    bool abelian = true;
    for (std::size_t a = 0; a < N.order() && abelian; ++a)
      for (std::size_t b = a + 1; b < N.order(); ++b)
        if (N.closure[a][b] != N.closure[b][a]) {
          abelian = false;
          break;
        }
    e["abelian"] = abelian;
    e["elements"] = subgroup_json(N);
    entries.push_back(std::move(e));
  }
  Json r;
  r["group"] = group_json(G);
  r["count"] = census.size();
  r["census"] = std::move(entries);
  (void)config;
  return r;
}

Json cmd_nbg(const RunConfig& config, const Json& fixture, int& exit_code) {
  GaloisContext ctx = fixture_context(fixture);
  SplitMix64 rng(config.seed);
  Json rows = Json::array();
  std::size_t agreements = 0;
  for (std::size_t i = 0; i < config.samples; ++i) {
    AlgElt x = random_elt(ctx, rng);
    bool via_lambda = is_generator(ctx, left_regular(ctx.group()), x);
    bool via_rho = is_generator(ctx, right_regular(ctx.group()), x);
    bool agree = (via_lambda == via_rho);
    if (agree)
      ++agreements;
    Json row;
    row["sample"] = i;
    row["x"] = vec_json(x.c);
    row["lambda_generator"] = via_lambda;
    row["rho_generator"] = via_rho;
    row["agree"] = agree;
    rows.push_back(std::move(row));
  }
  Json r;
  r["samples"] = config.samples;
  r["agreements"] = agreements;
  r["all_agree"] = (agreements == config.samples);
  r["rows"] = std::move(rows);
  // A disagreement would falsify the generator-transfer theorem, which at
  // exact arithmetic can only mean a bug.
  if (agreements != config.samples)
    exit_code = kExitContradiction;
  return r;
}

struct TheoremSetup {
  GaloisContext ctx;
  HopfStructure hl;
  GStableLattice B;
};

TheoremSetup theorem_setup(const Json& fixture) {
  GaloisContext ctx = fixture_context(fixture);
  Lattice lat = fixture_lattice(fixture, ctx.dim());
  GStableLattice B = check_g_stable(ctx, lat);
  HopfStructure hl = make_hopf_structure(ctx, left_regular(ctx.group()));
  return TheoremSetup{std::move(ctx), std::move(hl), std::move(B)};
}

Json cmd_theorem(const RunConfig& config, const Json& fixture, int& exit_code) {
  TheoremSetup s = theorem_setup(fixture);
  MainTheoremReport rep = theorem_main_check(s.ctx, s.hl, s.B, config.box);
  if (rep.verdict == MainVerdict::Contradiction)
    exit_code = kExitContradiction;
  Json r = main_report_json(rep);
  r["lattice"] = lattice_json(s.B.lattice);
  return r;
}

Json cmd_verify_only(const RunConfig& config, const Json& fixture, int& exit_code) {
  TheoremSetup s = theorem_setup(fixture);
  Json prior = read_json_file(config.verify_only);
  if (!prior.contains("results"))
    throw FixtureError("verify: report has no results section");
  const Json& results = prior.at("results");
  OrderLattice okg = associated_order_kg(s.ctx, s.B);
  OrderLattice ohl = associated_order_hlambda(s.ctx, s.hl, s.B);
  Json r;
  bool all_ok = true;
  std::size_t checked = 0;
  if (results.contains("cert_kg")) {
    FreenessCertificate cert = json_certificate(results.at("cert_kg"));
    bool ok = revalidate_certificate(s.ctx, nullptr, okg, s.B, cert);
    r["cert_kg_valid"] = ok;
    all_ok = all_ok && ok;
    ++checked;
  }
  if (results.contains("cert_hlambda")) {
    FreenessCertificate cert = json_certificate(results.at("cert_hlambda"));
    bool ok = revalidate_certificate(s.ctx, &s.hl, ohl, s.B, cert);
    r["cert_hlambda_valid"] = ok;
    all_ok = all_ok && ok;
    ++checked;
  }
  r["certificates_checked"] = checked;
  r["all_valid"] = all_ok;
  if (!all_ok)
    exit_code = kExitContradiction;
  return r;
}

Json cmd_hopf_order(const RunConfig& config, const Json& fixture) {
  (void)config;
  TheoremSetup s = theorem_setup(fixture);
  OrderLattice okg = associated_order_kg(s.ctx, s.B);
  OrderLattice ohl = associated_order_hlambda(s.ctx, s.hl, s.B);
  Json r;
  Json kg;
  kg["order"] = order_json(okg);
  kg["is_hopf_order"] = is_hopf_order(s.ctx, nullptr, okg);
  r["kg"] = std::move(kg);
  Json hlj;
  hlj["order"] = order_json(ohl);
  hlj["is_hopf_order"] = is_hopf_order(s.ctx, &s.hl, ohl);
  // The canonical basis of H_lambda that the order coordinates refer to.
  Json basis = Json::array();
  for (const auto& h : s.hl.basis)
    basis.push_back(hopf_elt_json(s.hl.N, h));
  hlj["basis"] = std::move(basis);
  r["hlambda"] = std::move(hlj);
  r["lattice"] = lattice_json(s.B.lattice);
  return r;
}

}  // namespace

FiniteGroup fixture_group(const Json& fixture) {
  if (fixture.contains("group"))
    return json_group(fixture.at("group"));
  if (fixture.contains("context"))
    return json_group(fixture.at("context").at("group"));
  throw FixtureError("fixture provides no group");
}

GaloisContext fixture_context(const Json& fixture) {
  if (fixture.contains("context"))
    return json_context(fixture.at("context"));
  if (fixture.contains("group"))
    return GaloisContext::split(json_group(fixture.at("group")));
  throw FixtureError("fixture provides no context");
}

Lattice fixture_lattice(const Json& fixture, std::size_t dim) {
  if (fixture.contains("lattice"))
    return json_lattice(fixture.at("lattice"));
  return Lattice::standard(dim);
}

RunResult run_command(const RunConfig& config, const Json& fixture) {
  RunResult res;
  res.report["config"] = config_echo(config);
  int exit_code = kExitOk;
  try {
    if (config.command == "enumerate")
      res.report["results"] = cmd_enumerate(config, fixture);
    else if (config.command == "nbg")
      res.report["results"] = cmd_nbg(config, fixture, exit_code);
    else if (config.command == "theorem" && config.verify_only.empty())
      res.report["results"] = cmd_theorem(config, fixture, exit_code);
    else if (config.command == "theorem")
      res.report["results"] = cmd_verify_only(config, fixture, exit_code);
    else if (config.command == "hopf-order")
      res.report["results"] = cmd_hopf_order(config, fixture);
    else
      throw FixtureError("unknown command '" + config.command + "'");
  } catch (const BudgetError& e) {
    res.report["error"] = e.what();
    res.exit_code = kExitBudgetExceeded;
    return res;
  } catch (const FixtureError& e) {
    res.report["error"] = e.what();
    res.exit_code = kExitFixtureInvalid;
    return res;
  } catch (const nlohmann::json::exception& e) {
    res.report["error"] = std::string("malformed fixture: ") + e.what();
    res.exit_code = kExitFixtureInvalid;
    return res;
  }
  res.exit_code = exit_code;
  return res;
}

RunResult run_command(const RunConfig& config) {
  Json fixture;
  try {
    fixture = read_json_file(config.fixture_path);
  } catch (const FixtureError& e) {
    RunResult res;
    res.report["config"] = config_echo(config);
    res.report["error"] = e.what();
    res.exit_code = kExitFixtureInvalid;
    return res;
  }
  return run_command(config, fixture);
}

namespace {

void markdown_value(std::ostringstream& os, const Json& v, int depth);

void markdown_object(std::ostringstream& os, const Json& obj, int depth) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    os << std::string(std::size_t(depth) * 2, ' ') << "- **" << it.key() << "**:";
    if (it.value().is_object() || it.value().is_array()) {
      os << "\n";
      markdown_value(os, it.value(), depth + 1);
    } else {
      os << " " << it.value().dump() << "\n";
    }
  }
}

void markdown_value(std::ostringstream& os, const Json& v, int depth) {
  if (v.is_object()) {
    markdown_object(os, v, depth);
  } else if (v.is_array()) {
    // Compact leaf arrays, one bullet per structured entry.
    bool structured = false;
    for (const auto& e : v)
      if (e.is_object() || e.is_array())
        structured = true;
    if (!structured) {
      os << std::string(std::size_t(depth) * 2, ' ') << "- " << v.dump() << "\n";
      return;
    }
    for (std::size_t i = 0; i < v.size(); ++i) {
      os << std::string(std::size_t(depth) * 2, ' ') << "- [" << i << "]\n";
      markdown_value(os, v.at(i), depth + 1);
    }
  } else {
    os << std::string(std::size_t(depth) * 2, ' ') << "- " << v.dump() << "\n";
  }
}

}  // namespace

std::string render_report(const Json& report, const std::string& format) {
  if (format == "json")
    return report.dump(2) + "\n";
  if (format != "markdown")
    throw FixtureError("unknown format '" + format + "'");
  std::ostringstream os;
  os << "# report\n\n";
  markdown_object(os, report, 0);
  return os.str();
}

}  // namespace hopfgalois
