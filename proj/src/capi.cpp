#include "foldtri.h"

#include <cstring>
#include <string>

#include <json.hpp>

#include "foldtri/cube.hpp"
#include "foldtri/error.hpp"
#include "foldtri/json_io.hpp"
#include "foldtri/lifting.hpp"
#include "foldtri/product.hpp"
#include "foldtri/staircase.hpp"
#include "foldtri/wronski.hpp"

using foldtri::Errc;
using foldtri::Error;
using ordered_json = nlohmann::ordered_json;

struct foldtri_triangulation {
  foldtri::Triangulation value;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

int fail_status(const std::exception& e) {
  g_last_error = e.what();
  if (auto* err = dynamic_cast<const Error*>(&e)) {
    (void)err;
    return FOLDTRI_EINVAL;
  }
  return FOLDTRI_EINTERNAL;
}

template <typename Fn>
int guarded(Fn&& fn) {
  try {
    g_last_error.clear();
    return fn();
  } catch (const std::exception& e) {
    return fail_status(e);
  } catch (...) {
    g_last_error = "unknown error";
    return FOLDTRI_EINTERNAL;
  }
}

// Ordering spec strings: kind[:payload] with payload a comma list of indices.
foldtri::VertexOrdering parse_ordering(const foldtri::Triangulation& t, const char* text) {
  if (text == nullptr) foldtri::fail(Errc::invalid_argument, "ordering string is null");
  std::string spec(text);
  std::string kind_name = spec;
  std::vector<int> payload;
  if (auto colon = spec.find(':'); colon != std::string::npos) {
    kind_name = spec.substr(0, colon);
    std::string rest = spec.substr(colon + 1);
    std::size_t pos = 0;
    while (pos < rest.size()) {
      std::size_t comma = rest.find(',', pos);
      if (comma == std::string::npos) comma = rest.size();
      try {
        payload.push_back(std::stoi(rest.substr(pos, comma - pos)));
      } catch (const std::exception&) {
        foldtri::fail(Errc::invalid_argument, "ordering payload must be a comma list of integers");
      }
      pos = comma + 1;
    }
  }
  auto kind = foldtri::ordering_kind_from_name(kind_name);
  if (!kind) foldtri::fail(Errc::invalid_argument, "unknown ordering kind '" + kind_name + "'");
  switch (*kind) {
    case foldtri::OrderingKind::almost_color_consecutive:
      return foldtri::make_ordering(t, *kind, payload, {});
    case foldtri::OrderingKind::explicit_order:
      return foldtri::make_ordering(t, *kind, {}, payload);
    default:
      if (!payload.empty())
        foldtri::fail(Errc::invalid_argument, "ordering kind takes no payload");
      return foldtri::make_ordering(t, *kind, {}, {});
  }
}

std::string witness_json(const foldtri::OddCycleWitness& w) {
  ordered_json j;
  j["odd_cycle"] = w.facets;
  return j.dump();
}

}  // namespace

extern "C" {

int foldtri_parse(const char* json, foldtri_triangulation** out) {
  return guarded([&]() {
    if (json == nullptr || out == nullptr)
      foldtri::fail(Errc::invalid_argument, "null argument");
    auto t = foldtri::triangulation_from_json(json);
    *out = new foldtri_triangulation{std::move(t)};
    return FOLDTRI_OK;
  });
}

int foldtri_staircase(long m, long n, foldtri_triangulation** out) {
  return guarded([&]() {
    if (out == nullptr) foldtri::fail(Errc::invalid_argument, "null argument");
    *out = new foldtri_triangulation{foldtri::staircase(static_cast<int>(m), static_cast<int>(n))};
    return FOLDTRI_OK;
  });
}

int foldtri_cube(long d, const char* template_json, foldtri_triangulation** out) {
  return guarded([&]() {
    if (out == nullptr) foldtri::fail(Errc::invalid_argument, "null argument");
    if (template_json == nullptr) {
      *out = new foldtri_triangulation{foldtri::rdf_cube(static_cast<int>(d)).triangulation};
    } else {
      foldtri::TemplateFile tf = foldtri::template_from_json(template_json);
      *out = new foldtri_triangulation{
          foldtri::rdf_cube(static_cast<int>(d), &tf.triangulation, tf.matching).triangulation};
    }
    return FOLDTRI_OK;
  });
}

int foldtri_simplicial_product(const foldtri_triangulation* a, const char* order_a,
                               const foldtri_triangulation* b, const char* order_b,
                               foldtri_triangulation** out) {
  return guarded([&]() {
    if (a == nullptr || b == nullptr || out == nullptr)
      foldtri::fail(Errc::invalid_argument, "null argument");
    foldtri::VertexOrdering oa = parse_ordering(a->value, order_a);
    foldtri::VertexOrdering ob = parse_ordering(b->value, order_b);
    foldtri::Triangulation product = foldtri::simplicial_product(a->value, oa, b->value, ob);
    // Attach the product lifting when both factors carry single-level ones;
    // color mode needs color-consecutive orderings and 0..dim labels.
    if (a->value.lifting && b->value.lifting && a->value.lifting->single_level() &&
        b->value.lifting->single_level()) {
      auto colors_in_range = [](const foldtri::Triangulation& t) {
        if (!t.coloring) return false;
        for (int c : *t.coloring)
          if (c < 0 || c > t.dim()) return false;
        return true;
      };
      const bool color_mode = colors_in_range(a->value) && colors_in_range(b->value) &&
                              oa.kind == foldtri::OrderingKind::color_consecutive &&
                              ob.kind == foldtri::OrderingKind::color_consecutive;
      product.lifting = foldtri::product_lifting(
          a->value, oa, b->value, ob,
          color_mode ? foldtri::LiftingMode::color : foldtri::LiftingMode::lexrev);
    }
    *out = new foldtri_triangulation{std::move(product)};
    return FOLDTRI_OK;
  });
}

int foldtri_to_json(const foldtri_triangulation* t, char** out) {
  return guarded([&]() {
    if (t == nullptr || out == nullptr) foldtri::fail(Errc::invalid_argument, "null argument");
    *out = dup_string(foldtri::triangulation_to_json(t->value));
    return FOLDTRI_OK;
  });
}

int foldtri_fold(const foldtri_triangulation* t, char** verdict) {
  return guarded([&]() {
    if (t == nullptr || verdict == nullptr) foldtri::fail(Errc::invalid_argument, "null argument");
    foldtri::FoldResult result = foldtri::fold(t->value);
    ordered_json j;
    j["property"] = "foldable";
    j["ok"] = result.foldable();
    if (result.foldable()) {
      j["colors"] = t->value.dim() + 1;
      j["coloring"] = *result.coloring;
    } else {
      ordered_json w;
      w["facet_a"] = result.conflict->facet_a;
      w["facet_b"] = result.conflict->facet_b;
      w["vertex"] = result.conflict->vertex;
      w["existing_color"] = result.conflict->existing_color;
      w["forced_color"] = result.conflict->forced_color;
      j["witness"] = std::move(w);
    }
    *verdict = dup_string(j.dump(2) + "\n");
    return result.foldable() ? FOLDTRI_OK : FOLDTRI_FALSE;
  });
}

int foldtri_signature(const foldtri_triangulation* t, char** verdict) {
  return guarded([&]() {
    if (t == nullptr || verdict == nullptr) foldtri::fail(Errc::invalid_argument, "null argument");
    foldtri::SignatureResult result = foldtri::signature(t->value);
    ordered_json j;
    j["property"] = "signature";
    j["ok"] = result.ok();
    if (result.ok()) {
      j["signature"] = result.report->value.str();
      j["odd_black"] = result.report->odd_black;
      j["odd_white"] = result.report->odd_white;
    } else {
      j["witness"] = ordered_json::parse(witness_json(*result.witness));
    }
    *verdict = dup_string(j.dump(2) + "\n");
    return result.ok() ? FOLDTRI_OK : FOLDTRI_FALSE;
  });
}

int foldtri_regular(const foldtri_triangulation* t, char** verdict) {
  return guarded([&]() {
    if (t == nullptr || verdict == nullptr) foldtri::fail(Errc::invalid_argument, "null argument");
    foldtri::RegularityCertificate cert = foldtri::induces_triangulation(t->value);
    ordered_json j;
    j["property"] = "regular";
    j["ok"] = cert.certified;
    j["ridge_checks"] = cert.checks;
    if (!cert.certified && cert.failure) {
      ordered_json w;
      w["facet"] = cert.failure->facet;
      w["neighbor"] = cert.failure->neighbor;
      w["kind"] = cert.degenerate ? "degenerate" : "not_locally_convex";
      j["witness"] = std::move(w);
    }
    *verdict = dup_string(j.dump(2) + "\n");
    return cert.certified ? FOLDTRI_OK : FOLDTRI_FALSE;
  });
}

int foldtri_cox(const foldtri_triangulation* t, char** verdict) {
  return guarded([&]() {
    if (t == nullptr || verdict == nullptr) foldtri::fail(Errc::invalid_argument, "null argument");
    foldtri::CoxReport report = foldtri::cox_oriented(t->value.config);
    ordered_json j;
    j["property"] = "cox_oriented";
    j["ok"] = report.oriented();
    j["checks"] = {{"point_lattice_odd_index", report.point_lattice_odd_index},
                   {"normal_lattice_odd_index", report.normal_lattice_odd_index},
                   {"odd_vector_in_span", report.odd_vector_in_span}};
    *verdict = dup_string(j.dump(2) + "\n");
    return report.oriented() ? FOLDTRI_OK : FOLDTRI_FALSE;
  });
}

int foldtri_fvector(const foldtri_triangulation* t, char** out) {
  return guarded([&]() {
    if (t == nullptr || out == nullptr) foldtri::fail(Errc::invalid_argument, "null argument");
    ordered_json j;
    j["f_vector"] = foldtri::f_vector(t->value);
    *out = dup_string(j.dump(2) + "\n");
    return FOLDTRI_OK;
  });
}

int foldtri_wronski(const foldtri_triangulation* t, int normalize, const char* format,
                    char** out) {
  return guarded([&]() {
    if (t == nullptr || out == nullptr || format == nullptr)
      foldtri::fail(Errc::invalid_argument, "null argument");
    foldtri::EmitFormat fmt;
    if (std::string(format) == "txt")
      fmt = foldtri::EmitFormat::text;
    else if (std::string(format) == "json")
      fmt = foldtri::EmitFormat::json;
    else
      foldtri::fail(Errc::unsupported_format, "format must be 'txt' or 'json'");
    foldtri::WronskiSystem system = foldtri::coefficient_polynomials(t->value, normalize != 0);
    *out = dup_string(foldtri::emit_system(system, fmt));
    return FOLDTRI_OK;
  });
}

const char* foldtri_error_message(void) { return g_last_error.c_str(); }

void foldtri_free_string(char* s) { delete[] s; }

void foldtri_free(foldtri_triangulation* t) { delete t; }

}  // extern "C"
