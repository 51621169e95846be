#include "foldtri/json_io.hpp"

#include <json.hpp>

#include "foldtri/error.hpp"

namespace foldtri {

using ordered_json = nlohmann::ordered_json;

namespace {

long long require_int(const ordered_json& j, const std::string& field) {
  if (!j.is_number_integer())
    fail(Errc::parse_error, "field '" + field + "' must be an integer");
  return j.get<long long>();
}

Rat require_rational(const ordered_json& j, const std::string& field) {
  if (j.is_number_integer()) return Rat(j.get<long long>());
  if (j.is_string()) return rat_from_string(j.get<std::string>());
  fail(Errc::parse_error, "field '" + field + "' must be a rational string");
}

Int require_bigint(const ordered_json& j, const std::string& field) {
  Rat r = require_rational(j, field);
  if (rat_den(r) != 1) fail(Errc::parse_error, "field '" + field + "' must be an integer");
  return rat_num(r);
}

const ordered_json& require_array(const ordered_json& j, const std::string& field) {
  if (!j.is_array()) fail(Errc::parse_error, "field '" + field + "' must be an array");
  return j;
}

Triangulation triangulation_from_document(const ordered_json& doc) {
  if (!doc.is_object()) fail(Errc::parse_error, "top level must be an object");
  if (!doc.contains("dim")) fail(Errc::parse_error, "field 'dim' is missing");
  if (!doc.contains("vertices")) fail(Errc::parse_error, "field 'vertices' is missing");
  if (!doc.contains("facets")) fail(Errc::parse_error, "field 'facets' is missing");

  PointConfiguration config;
  config.dim = static_cast<int>(require_int(doc["dim"], "dim"));
  for (const auto& vertex : require_array(doc["vertices"], "vertices")) {
    LatticePoint p;
    for (const auto& coord : require_array(vertex, "vertices"))
      p.push_back(Int(require_int(coord, "vertices")));
    config.points.push_back(std::move(p));
  }

  if (doc.contains("facet_description")) {
    const auto& fd = doc["facet_description"];
    if (!fd.is_object() || !fd.contains("normals") || !fd.contains("offsets"))
      fail(Errc::parse_error, "field 'facet_description' needs 'normals' and 'offsets'");
    std::vector<FacetInequality> facets;
    const auto& normals = require_array(fd["normals"], "facet_description.normals");
    const auto& offsets = require_array(fd["offsets"], "facet_description.offsets");
    if (normals.size() != offsets.size())
      fail(Errc::parse_error, "facet_description normals and offsets differ in length");
    for (std::size_t i = 0; i < normals.size(); ++i) {
      FacetInequality ineq;
      for (const auto& c : require_array(normals[i], "facet_description.normals"))
        ineq.normal.push_back(Int(require_int(c, "facet_description.normals")));
      ineq.offset = require_bigint(offsets[i], "facet_description.offsets");
      facets.push_back(std::move(ineq));
    }
    config.facets = std::move(facets);
  }
  if (doc.contains("hull_volume"))
    config.hull_volume = require_bigint(doc["hull_volume"], "hull_volume");

  std::vector<std::vector<int>> facets;
  for (const auto& facet : require_array(doc["facets"], "facets")) {
    std::vector<int> f;
    for (const auto& v : require_array(facet, "facets"))
      f.push_back(static_cast<int>(require_int(v, "facets")));
    facets.push_back(std::move(f));
  }

  std::optional<std::vector<int>> coloring;
  if (doc.contains("coloring")) {
    std::vector<int> c;
    for (const auto& v : require_array(doc["coloring"], "coloring"))
      c.push_back(static_cast<int>(require_int(v, "coloring")));
    coloring = std::move(c);
  }

  std::optional<TwoLevelLifting> lifting;
  if (doc.contains("lifting")) {
    const auto& lf = doc["lifting"];
    if (!lf.is_object() || !lf.contains("base"))
      fail(Errc::parse_error, "field 'lifting' needs a 'base' array");
    TwoLevelLifting values;
    const auto& base = require_array(lf["base"], "lifting.base");
    for (const auto& v : base)
      values.values.push_back(TwoLevel{require_rational(v, "lifting.base"), Rat(0)});
    if (lf.contains("eps")) {
      const auto& eps = require_array(lf["eps"], "lifting.eps");
      if (eps.size() != values.values.size())
        fail(Errc::parse_error, "lifting.eps length does not match lifting.base");
      for (std::size_t i = 0; i < eps.size(); ++i)
        values.values[i].eps = require_rational(eps[i], "lifting.eps");
    }
    lifting = std::move(values);
  }

  try {
    return make_triangulation(std::move(config), std::move(facets), std::move(coloring),
                              std::move(lifting));
  } catch (const Error& e) {
    if (e.code() == Errc::parse_error) throw;
    fail(Errc::parse_error, e.what());
  }
}

}  // namespace

std::string triangulation_to_json(const Triangulation& k) {
  ordered_json doc;
  doc["dim"] = k.config.dim;
  ordered_json vertices = ordered_json::array();
  for (const LatticePoint& p : k.config.points) {
    ordered_json vertex = ordered_json::array();
    for (const Int& c : p) vertex.push_back(to_int64(c));
    vertices.push_back(std::move(vertex));
  }
  doc["vertices"] = std::move(vertices);
  ordered_json facets = ordered_json::array();
  for (const LatticeSimplex& f : k.facets) facets.push_back(f.vertices);
  doc["facets"] = std::move(facets);
  if (k.coloring) doc["coloring"] = *k.coloring;
  if (k.lifting) {
    ordered_json lifting;
    ordered_json base = ordered_json::array();
    for (const TwoLevel& v : k.lifting->values) base.push_back(rat_to_string(v.base));
    lifting["base"] = std::move(base);
    if (!k.lifting->single_level()) {
      ordered_json eps = ordered_json::array();
      for (const TwoLevel& v : k.lifting->values) eps.push_back(rat_to_string(v.eps));
      lifting["eps"] = std::move(eps);
    }
    doc["lifting"] = std::move(lifting);
  }
  if (k.config.facets) {
    ordered_json fd;
    ordered_json normals = ordered_json::array();
    ordered_json offsets = ordered_json::array();
    for (const FacetInequality& ineq : *k.config.facets) {
      ordered_json normal = ordered_json::array();
      for (const Int& c : ineq.normal) normal.push_back(to_int64(c));
      normals.push_back(std::move(normal));
      offsets.push_back(to_int64(ineq.offset));
    }
    fd["normals"] = std::move(normals);
    fd["offsets"] = std::move(offsets);
    doc["facet_description"] = std::move(fd);
  }
  if (k.config.hull_volume) doc["hull_volume"] = k.config.hull_volume->str();
  return doc.dump(2) + "\n";
}

Triangulation triangulation_from_json(const std::string& text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const std::exception& e) {
    fail(Errc::parse_error, e.what());
  }
  return triangulation_from_document(doc);
}

TemplateFile template_from_json(const std::string& text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const std::exception& e) {
    fail(Errc::parse_error, e.what());
  }
  TemplateFile out;
  out.triangulation = triangulation_from_document(doc);
  if (doc.contains("matching")) {
    TemplateMatching matching;
    for (const auto& row : require_array(doc["matching"], "matching")) {
      std::vector<int> perm;
      for (const auto& v : require_array(row, "matching"))
        perm.push_back(static_cast<int>(require_int(v, "matching")));
      matching.push_back(std::move(perm));
    }
    out.matching = std::move(matching);
  }
  return out;
}

}  // namespace foldtri
