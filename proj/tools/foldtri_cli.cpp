// Command-line front end; talks to the library through the C API only.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "foldtri.h"

namespace {

struct Handle {
  foldtri_triangulation* t = nullptr;
  ~Handle() { foldtri_free(t); }
};

struct OwnedString {
  char* s = nullptr;
  ~OwnedString() { foldtri_free_string(s); }
};

int report_failure(int status) {
  std::cerr << "error: " << foldtri_error_message() << "\n";
  return status;
}

bool read_input(const std::string& path, std::string& out) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    out = buffer.str();
    return true;
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) {
    std::cerr << "error: cannot open '" << path << "'\n";
    return false;
  }
  std::ostringstream buffer;
  buffer << file.rdbuf();
  out = buffer.str();
  return true;
}

int load(const std::string& path, Handle& handle) {
  std::string text;
  if (!read_input(path, text)) return FOLDTRI_EINVAL;
  int status = foldtri_parse(text.c_str(), &handle.t);
  if (status != FOLDTRI_OK) return report_failure(status);
  return FOLDTRI_OK;
}

int print_string(int status, const OwnedString& out) {
  if (out.s != nullptr) std::cout << out.s;
  if (status != FOLDTRI_OK && status != FOLDTRI_FALSE) return report_failure(status);
  return status;
}

int emit_triangulation(const Handle& handle) {
  OwnedString json;
  int status = foldtri_to_json(handle.t, &json.s);
  return print_string(status, json);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact constructions and certificates for regular, dense, foldable "
               "lattice triangulations"};
  app.require_subcommand(1);

  long m = 0, n = 0, d = 0;
  std::string file_a, file_b, order_a = "color_consecutive", order_b = "color_consecutive";
  std::string template_file, format = "txt";
  bool normalize = false;

  auto* cmd_staircase = app.add_subcommand("staircase", "Staircase triangulation of a product of simplices");
  cmd_staircase->add_option("m", m, "dimension of the first simplex")->required();
  cmd_staircase->add_option("n", n, "dimension of the second simplex")->required();

  auto* cmd_product = app.add_subcommand("product", "Simplicial product of two triangulations");
  cmd_product->add_option("A", file_a, "first factor (JSON file or -)")->required();
  cmd_product->add_option("B", file_b, "second factor (JSON file or -)")->required();
  cmd_product->add_option("--order-a", order_a,
                          "ordering of A: color_consecutive | symmetric | "
                          "almost_color_consecutive:i,j,... | explicit:p0,p1,...");
  cmd_product->add_option("--order-b", order_b, "ordering of B (same forms)");

  auto* cmd_fold = app.add_subcommand("fold", "Try to color the complex with dim+1 colors");
  cmd_fold->add_option("FILE", file_a, "triangulation (JSON file or -)")->required();

  auto* cmd_signature = app.add_subcommand("signature", "Signature of the dual-graph bipartition");
  cmd_signature->add_option("FILE", file_a, "triangulation (JSON file or -)")->required();

  auto* cmd_regular = app.add_subcommand("regular", "Certify that the lifting induces the triangulation");
  cmd_regular->add_option("FILE", file_a, "triangulation (JSON file or -)")->required();

  auto* cmd_cube = app.add_subcommand("cube", "Recursive cube triangulation with certified signature");
  cmd_cube->add_option("d", d, "cube dimension")->required();
  cmd_cube->add_option("--template-s", template_file,
                       "template triangulation of simplex(4) x cube(2), needed for d = 2 mod 4");

  auto* cmd_wronski = app.add_subcommand("wronski", "Coefficient polynomials of a colored lifted triangulation");
  cmd_wronski->add_option("FILE", file_a, "triangulation (JSON file or -)")->required();
  cmd_wronski->add_flag("--normalize", normalize, "divide each polynomial by its least s power");
  cmd_wronski->add_option("--format", format, "txt or json")->check(CLI::IsMember({"txt", "json"}));

  auto* cmd_cox = app.add_subcommand("cox", "Mod-2 orientation checks on the facet description");
  cmd_cox->add_option("FILE", file_a, "triangulation (JSON file or -)")->required();

  auto* cmd_fvector = app.add_subcommand("fvector", "Face counts per dimension");
  cmd_fvector->add_option("FILE", file_a, "triangulation (JSON file or -)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : FOLDTRI_EINVAL;
  }

  if (cmd_staircase->parsed()) {
    Handle handle;
    int status = foldtri_staircase(m, n, &handle.t);
    if (status != FOLDTRI_OK) return report_failure(status);
    return emit_triangulation(handle);
  }

  if (cmd_product->parsed()) {
    if (file_a == "-" && file_b == "-") {
      std::cerr << "error: only one factor may come from standard input\n";
      return FOLDTRI_EINVAL;
    }
    Handle a, b;
    if (int status = load(file_a, a); status != FOLDTRI_OK) return status;
    if (int status = load(file_b, b); status != FOLDTRI_OK) return status;
    Handle product;
    int status =
        foldtri_simplicial_product(a.t, order_a.c_str(), b.t, order_b.c_str(), &product.t);
    if (status != FOLDTRI_OK) return report_failure(status);
    return emit_triangulation(product);
  }

  if (cmd_cube->parsed()) {
    Handle handle;
    int status;
    if (template_file.empty()) {
      status = foldtri_cube(d, nullptr, &handle.t);
    } else {
      std::string text;
      if (!read_input(template_file, text)) return FOLDTRI_EINVAL;
      status = foldtri_cube(d, text.c_str(), &handle.t);
    }
    if (status != FOLDTRI_OK) return report_failure(status);
    return emit_triangulation(handle);
  }

  // Single-input verbs.
  Handle handle;
  if (int status = load(file_a, handle); status != FOLDTRI_OK) return status;

  if (cmd_fold->parsed()) {
    OwnedString verdict;
    return print_string(foldtri_fold(handle.t, &verdict.s), verdict);
  }
  if (cmd_signature->parsed()) {
    OwnedString verdict;
    return print_string(foldtri_signature(handle.t, &verdict.s), verdict);
  }
  if (cmd_regular->parsed()) {
    OwnedString verdict;
    return print_string(foldtri_regular(handle.t, &verdict.s), verdict);
  }
  if (cmd_cox->parsed()) {
    OwnedString verdict;
    return print_string(foldtri_cox(handle.t, &verdict.s), verdict);
  }
  if (cmd_fvector->parsed()) {
    OwnedString out;
    return print_string(foldtri_fvector(handle.t, &out.s), out);
  }
  if (cmd_wronski->parsed()) {
    OwnedString out;
    return print_string(foldtri_wronski(handle.t, normalize ? 1 : 0, format.c_str(), &out.s),
                        out);
  }
  return FOLDTRI_EINVAL;
}
