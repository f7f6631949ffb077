// Python bindings for the main operations. Scalars cross the boundary as
// "p/q" strings so nothing is ever rounded; whole reports cross as JSON
// strings ready for json.loads.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hopfgalois/cli.hpp"
#include "hopfgalois/nbg.hpp"

namespace py = pybind11;
using namespace hopfgalois;

namespace {

RatVec parse_coords(const std::vector<std::string>& coords) {
  RatVec v;
  v.reserve(coords.size());
  for (const auto& s : coords)
    v.push_back(rat_from_string(s));
  return v;
}

std::vector<std::string> format_coords(const RatVec& v) {
  std::vector<std::string> out;
  out.reserve(v.size());
  for (const auto& q : v)
    out.push_back(rat_to_string(q));
  return out;
}

AlgElt parse_elt(const GaloisContext& ctx, const std::vector<std::string>& coords) {
  RatVec v = parse_coords(coords);
  if (v.size() != ctx.dim())
    fail("coordinate count does not match the context dimension");
  return AlgElt{std::move(v)};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact Hopf-Galois module theory: regular subgroups, associated "
            "orders, freeness transfer between K[G] and H_lambda.";

  py::register_exception<BudgetError>(m, "BudgetError");
  py::register_exception<FixtureError>(m, "FixtureError");

  py::class_<FiniteGroup>(m, "Group")
      .def_static("from_json",
                  [](const std::string& doc) { return json_group(Json::parse(doc)); })
      .def_static("trivial", &trivial_group)
      .def_static("cyclic", &cyclic_group, py::arg("n"))
      .def_static("symmetric_3", &symmetric_3)
      .def_static("dihedral_4", &dihedral_4)
      .def_static("quaternion_8", &quaternion_8)
      .def_property_readonly("order", &FiniteGroup::order)
      .def_property_readonly("identity", &FiniteGroup::identity)
      .def("mul", &FiniteGroup::mul, py::arg("a"), py::arg("b"))
      .def("inv", &FiniteGroup::inv, py::arg("a"))
      .def("label", &FiniteGroup::label, py::arg("a"))
      .def("is_abelian", &FiniteGroup::is_abelian)
      .def("to_json", [](const FiniteGroup& g) { return group_json(g).dump(); });

  py::class_<GaloisContext>(m, "Context")
      .def_static("split", &GaloisContext::split, py::arg("group"))
      .def_static("from_json",
                  [](const std::string& doc) { return json_context(Json::parse(doc)); })
      .def_property_readonly("dim", &GaloisContext::dim)
      .def_property_readonly("group", &GaloisContext::group)
      .def_property_readonly("is_split",
                             [](const GaloisContext& c) { return c.mode() == GaloisContext::Mode::Split; })
      .def("mul",
           [](const GaloisContext& c, const std::vector<std::string>& a,
              const std::vector<std::string>& b) {
             return format_coords(c.mul(parse_elt(c, a), parse_elt(c, b)).c);
           })
      .def("act",
           [](const GaloisContext& c, std::size_t sigma, const std::vector<std::string>& a) {
             if (sigma >= c.dim())
               fail("group element index out of range");
             return format_coords(c.act(sigma, parse_elt(c, a)).c);
           })
      .def("trace",
           [](const GaloisContext& c, const std::vector<std::string>& a) {
             return rat_to_string(c.trace(parse_elt(c, a)));
           })
      .def("dual_generator",
           [](const GaloisContext& c, const std::vector<std::string>& x) {
             return format_coords(c.dual_generator(parse_elt(c, x)).c);
           })
      .def("to_json", [](const GaloisContext& c) { return context_json(c).dump(); });

  m.def("enumerate_regular_subgroups",
        [](const FiniteGroup& g) {
          std::vector<std::vector<std::vector<std::size_t>>> out;
          for (const auto& N : enumerate_regular_subgroups(g)) {
            std::vector<std::vector<std::size_t>> elems;
            for (const auto& p : N.elements)
              elems.push_back(p.images);
            out.push_back(std::move(elems));
          }
          return out;
        },
        py::arg("group"), "Census of regular subgroups normalized by lambda(G).");

  m.def("is_generator_lambda",
        [](const GaloisContext& c, const std::vector<std::string>& x) {
          return is_generator(c, left_regular(c.group()), parse_elt(c, x));
        });
  m.def("is_generator_rho", [](const GaloisContext& c, const std::vector<std::string>& x) {
    return is_generator(c, right_regular(c.group()), parse_elt(c, x));
  });
  m.def("theorem_nbg_check", [](const GaloisContext& c, const std::vector<std::string>& x) {
    return theorem_nbg_check(c, parse_elt(c, x));
  });

  m.def("theorem_main_check",
        [](const GaloisContext& ctx, const std::string& lattice_doc, long box) {
          Lattice lat = lattice_doc.empty() ? Lattice::standard(ctx.dim())
                                            : json_lattice(Json::parse(lattice_doc));
          GStableLattice B = check_g_stable(ctx, lat);
          HopfStructure hl = make_hopf_structure(ctx, left_regular(ctx.group()));
          MainTheoremReport rep = theorem_main_check(ctx, hl, B, box);
          return main_report_json(rep).dump();
        },
        py::arg("context"), py::arg("lattice_json") = std::string(), py::arg("box") = 2,
        "Runs the freeness-transfer check; returns the JSON report.");

  m.def("hopf_order_check",
        [](const GaloisContext& ctx, const std::string& lattice_doc) {
          Lattice lat = lattice_doc.empty() ? Lattice::standard(ctx.dim())
                                            : json_lattice(Json::parse(lattice_doc));
          GStableLattice B = check_g_stable(ctx, lat);
          HopfStructure hl = make_hopf_structure(ctx, left_regular(ctx.group()));
          OrderLattice okg = associated_order_kg(ctx, B);
          OrderLattice ohl = associated_order_hlambda(ctx, hl, B);
          Json r;
          r["kg_is_hopf_order"] = is_hopf_order(ctx, nullptr, okg);
          r["hlambda_is_hopf_order"] = is_hopf_order(ctx, &hl, ohl);
          return r.dump();
        },
        py::arg("context"), py::arg("lattice_json") = std::string());

  m.def("run_command",
        [](const std::string& command, const std::string& fixture_doc, std::uint64_t seed,
           std::size_t samples, long box) {
          RunConfig c;
          c.command = command;
          c.seed = seed;
          c.samples = samples;
          c.box = box;
          RunResult res = run_command(c, Json::parse(fixture_doc));
          return py::make_tuple(render_report(res.report, "json"), res.exit_code);
        },
        py::arg("command"), py::arg("fixture_json"), py::arg("seed") = 0,
        py::arg("samples") = 100, py::arg("box") = 2,
        "Runs a CLI command against an in-memory fixture document; returns "
        "(report_json, exit_code).");
}
