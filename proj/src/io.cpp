#include "hopfgalois/io.hpp"

namespace hopfgalois {

namespace {

[[noreturn]] void bad(const std::string& what) { throw FixtureError("fixture: " + what); }

const Json& need(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    bad(std::string("missing key '") + key + "'");
  return j.at(key);
}

}  // namespace

Json rat_json(const Rat& q) { return rat_to_string(q); }

Rat json_rat(const Json& j) {
  if (j.is_number_integer())
    return Rat(j.get<long>());
  if (!j.is_string())
    bad("scalar must be a string like \"p/q\"");
  try {
    return rat_from_string(j.get<std::string>());
  } catch (const Error& e) {
    bad(e.what());
  }
}

Json vec_json(const RatVec& v) {
  Json a = Json::array();
  for (const auto& q : v)
    a.push_back(rat_json(q));
  return a;
}

RatVec json_vec(const Json& j) {
  if (!j.is_array())
    bad("vector must be an array");
  RatVec v;
  v.reserve(j.size());
  for (const auto& e : j)
    v.push_back(json_rat(e));
  return v;
}

Json mat_json(const RatMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows; ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols; ++j)
      row.push_back(rat_json(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

RatMatrix json_mat(const Json& j) {
  if (!j.is_array() || j.empty())
    bad("matrix must be a non-empty array of rows");
  RatMatrix m(j.size(), j.at(0).size());
  for (std::size_t i = 0; i < m.rows; ++i) {
    const Json& row = j.at(i);
    if (!row.is_array() || row.size() != m.cols)
      bad("matrix rows must have equal length");
    for (std::size_t c = 0; c < m.cols; ++c)
      m.at(i, c) = json_rat(row.at(c));
  }
  return m;
}

Json lattice_json(const Lattice& lat) {
  Json j;
  j["dim"] = lat.dim();
  if (!lat.den().fits_slong_p())
    bad("lattice denominator too large to serialize");
  j["den"] = lat.den().get_si();
  Json rows = Json::array();
  for (std::size_t i = 0; i < lat.dim(); ++i) {
    Json row = Json::array();
    for (std::size_t c = 0; c < lat.dim(); ++c)
      row.push_back(lat.basis().at(i, c).get_str());
    rows.push_back(std::move(row));
  }
  j["basis"] = std::move(rows);
  return j;
}

Lattice json_lattice(const Json& j) {
  std::size_t dim = need(j, "dim").get<std::size_t>();
  long den = j.contains("den") ? j.at("den").get<long>() : 1;
  if (den <= 0)
    bad("lattice denominator must be positive");
  const Json& basis = need(j, "basis");
  if (!basis.is_array() || basis.empty())
    bad("lattice basis must be a non-empty array");
  IntMatrix m(basis.size(), dim);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const Json& row = basis.at(i);
    if (!row.is_array() || row.size() != dim)
      bad("lattice basis rows must have length dim");
    for (std::size_t c = 0; c < dim; ++c) {
      Rat q = json_rat(row.at(c));
      if (!is_integer(q))
        bad("lattice basis entries must be integers");
      m.at(i, c) = q.get_num();
    }
  }
  try {
    return Lattice::from_int_rows(m, Int(den));
  } catch (const Error& e) {
    bad(e.what());
  }
}

Json group_json(const FiniteGroup& G) {
  Json j;
  j["order"] = G.order();
  j["identity"] = G.identity();
  j["table"] = G.table();
  j["labels"] = G.labels();
  return j;
}

FiniteGroup json_group(const Json& j) {
  std::size_t order = need(j, "order").get<std::size_t>();
  std::size_t identity = need(j, "identity").get<std::size_t>();
  auto table = need(j, "table").get<std::vector<std::vector<std::size_t>>>();
  std::vector<std::string> labels;
  if (j.contains("labels"))
    labels = j.at("labels").get<std::vector<std::string>>();
  if (table.size() != order)
    bad("group order does not match table size");
  return FiniteGroup(std::move(table), identity, std::move(labels));
}

Json subgroup_json(const RegularSubgroup& N) {
  Json a = Json::array();
  for (const auto& p : N.elements)
    a.push_back(p.images);
  return a;
}

Json context_json(const GaloisContext& ctx) {
  Json j;
  j["mode"] = ctx.mode() == GaloisContext::Mode::Split ? "split" : "field";
  j["group"] = group_json(ctx.group());
  if (ctx.mode() == GaloisContext::Mode::Field) {
    const std::size_t n = ctx.dim();
    Json mult = Json::array();
    for (std::size_t i = 0; i < n; ++i) {
      Json row = Json::array();
      for (std::size_t k = 0; k < n; ++k)
        row.push_back(vec_json(ctx.mult_row(i)[k]));
      mult.push_back(std::move(row));
    }
    j["mult"] = std::move(mult);
    j["one"] = vec_json(ctx.one());
    Json autos;
    for (std::size_t s = 0; s < n; ++s)
      autos[ctx.group().label(s)] = mat_json(ctx.auto_matrix(s));
    j["auto"] = std::move(autos);
  }
  return j;
}

GaloisContext json_context(const Json& j) {
  std::string mode = need(j, "mode").get<std::string>();
  FiniteGroup G = json_group(need(j, "group"));
  if (mode == "split")
    return GaloisContext::split(G);
  if (mode != "field")
    bad("mode must be \"split\" or \"field\"");
  const std::size_t n = G.order();
  const Json& mult_doc = need(j, "mult");
  if (!mult_doc.is_array() || mult_doc.size() != n)
    bad("mult tensor must have |G| rows");
  std::vector<std::vector<RatVec>> mult(n, std::vector<RatVec>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (!mult_doc.at(i).is_array() || mult_doc.at(i).size() != n)
      bad("mult tensor rows must have |G| entries");
    for (std::size_t k = 0; k < n; ++k) {
      mult[i][k] = json_vec(mult_doc.at(i).at(k));
      if (mult[i][k].size() != n)
        bad("mult tensor vectors must have length |G|");
    }
  }
  RatVec one = json_vec(need(j, "one"));
  const Json& autos_doc = need(j, "auto");
  std::vector<RatMatrix> autos(n);
  std::vector<bool> seen(n, false);
  for (auto it = autos_doc.begin(); it != autos_doc.end(); ++it) {
    std::size_t idx = n;
    for (std::size_t s = 0; s < n; ++s)
      if (G.label(s) == it.key()) {
        idx = s;
        break;
      }
    if (idx == n)
      bad("auto key '" + it.key() + "' is not a group element label");
    autos[idx] = json_mat(it.value());
    seen[idx] = true;
  }
  for (std::size_t s = 0; s < n; ++s)
    if (!seen[s])
      bad("auto matrix missing for element '" + G.label(s) + "'");
  return GaloisContext::field(std::move(G), std::move(mult), std::move(one), std::move(autos));
}

Json hopf_elt_json(const RegularSubgroup& N, const HopfElt& h) {
  Json j;
  j["N"] = subgroup_json(N);
  Json coeffs;
  for (std::size_t i = 0; i < h.val.coeff.size(); ++i)
    coeffs[std::to_string(i)] = vec_json(h.val.coeff[i]);
  j["coeffs"] = std::move(coeffs);
  return j;
}

Json order_json(const OrderLattice& A) {
  Json j;
  j["ambient"] = A.ambient == Ambient::GroupAlgebra ? "kg" : "hlambda";
  j["lattice"] = lattice_json(A.lattice);
  return j;
}

Json certificate_json(const FreenessCertificate& cert) {
  Json j;
  j["generator"] = vec_json(cert.generator);
  Json basis = Json::array();
  for (const auto& b : cert.order_basis)
    basis.push_back(vec_json(b));
  j["order_basis"] = std::move(basis);
  Json images = Json::array();
  for (const auto& im : cert.images)
    images.push_back(vec_json(im));
  j["images"] = std::move(images);
  return j;
}

FreenessCertificate json_certificate(const Json& j) {
  FreenessCertificate cert;
  cert.generator = json_vec(need(j, "generator"));
  for (const auto& b : need(j, "order_basis"))
    cert.order_basis.push_back(json_vec(b));
  for (const auto& im : need(j, "images"))
    cert.images.push_back(json_vec(im));
  return cert;
}

Json transfer_report_json(const TransferReport& rep) {
  Json j;
  j["direction"] =
      rep.direction == TransferDirection::KgToHlambda ? "kg-to-hlambda" : "hlambda-to-kg";
  j["input_certificate"] = certificate_json(rep.input);
  Json claims = Json::array();
  for (const auto& c : rep.claims) {
    Json cj;
    cj["element"] = c.element;
    cj["claim"] = c.claim;
    cj["ok"] = c.ok;
    if (!c.witness.empty())
      cj["witness"] = c.witness;
    claims.push_back(std::move(cj));
  }
  j["claims"] = std::move(claims);
  Json outs = Json::array();
  for (const auto& o : rep.output_elements)
    outs.push_back(vec_json(o));
  j["output_elements"] = std::move(outs);
  j["order_basis_matches"] = rep.order_basis_matches;
  if (rep.output_certificate)
    j["output_certificate"] = certificate_json(*rep.output_certificate);
  return j;
}

Json main_report_json(const MainTheoremReport& rep) {
  Json j;
  switch (rep.verdict) {
    case MainVerdict::BothFree:
      j["verdict"] = "both-free";
      break;
    case MainVerdict::NeitherFoundWithinBox:
      j["verdict"] = "neither-found-within-box";
      break;
    case MainVerdict::Contradiction:
      j["verdict"] = "contradiction";
      break;
  }
  j["order_kg"] = order_json(rep.order_kg);
  j["order_hlambda"] = order_json(rep.order_hlambda);
  if (rep.cert_kg) {
    j["cert_kg"] = certificate_json(*rep.cert_kg);
    j["cert_kg_source"] = rep.cert_kg_source;
  }
  if (rep.cert_hlambda) {
    j["cert_hlambda"] = certificate_json(*rep.cert_hlambda);
    j["cert_hlambda_source"] = rep.cert_hlambda_source;
  }
  Json transfers = Json::array();
  for (const auto& t : rep.transfers)
    transfers.push_back(transfer_report_json(t));
  j["transfers"] = std::move(transfers);
  if (!rep.failure.empty())
    j["failure"] = rep.failure;
  return j;
}

}  // namespace hopfgalois
