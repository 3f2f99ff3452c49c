#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "gkm/arrangements.hpp"
#include "gkm/errors.hpp"
#include "gkm/report.hpp"

using namespace gkm;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Input {
  std::string file;
  std::string fixture;
};

void add_input(CLI::App* sub, Input& in) {
  sub->add_option("file", in.file, "Graph JSON file; '-' or nothing reads standard input");
  sub->add_option("--fixture", in.fixture, "Built-in fixture id, e.g. fig2_left or local_model(3)");
}

GkmGraph load(const Input& in) {
  if (!in.fixture.empty() && !in.file.empty()) throw UsageError("give either a file or --fixture, not both");
  if (!in.fixture.empty()) {
    try {
      return fixture(in.fixture);
    } catch (const UnknownFixture& e) {
      throw UsageError(e.what());
    }
  }
  std::string text;
  if (in.file.empty() || in.file == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream f(in.file);
    if (!f) throw UsageError("cannot read " + in.file);
    text.assign(std::istreambuf_iterator<char>(f), {});
  }
  return load_graph(text);
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

void write_graph(const GkmGraph& g, const std::string& out) {
  std::string text = serialize_graph(g);
  if (out.empty() || out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(out);
  if (!f) throw UsageError("cannot write " + out);
  f << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equivariant cohomology of T*C^n-modeled GKM graphs"};
  app.require_subcommand(1);

  Input in;
  int max_degree = 4;
  bool forgetful = false, ordinary = false;
  std::string poly, out;
  KlmSpec spec;
  std::string fixture_id;

  auto* validate = app.add_subcommand("validate", "Check the axial function and connection");
  auto* hyper = app.add_subcommand("hyperplanes", "List hyperplanes");
  auto* assume = app.add_subcommand("assumptions", "Check assumptions (1) and (2)");
  auto* cohom = app.add_subcommand("cohomology", "Z-bases of the graded pieces of graph cohomology");
  auto* iso = app.add_subcommand("verify-iso", "Compare solver ranks with the presentation ring");
  auto* basis = app.add_subcommand("basis", "Shelling and module basis");
  auto* sc = app.add_subcommand("structure-constants", "Products of basis elements in the basis");
  auto* expr = app.add_subcommand("express", "Expand a polynomial in the hyperplanes in the module basis");
  auto* gen = app.add_subcommand("gen", "Generate graphs");
  gen->require_subcommand(1);
  auto* klm = gen->add_subcommand("klm", "Arrangement of k horizontal, l vertical and m diagonal lines");
  auto* fix = gen->add_subcommand("fixture", "Write a built-in fixture");

  for (auto* s : {validate, hyper, assume, cohom, iso, basis, sc, expr}) add_input(s, in);
  for (auto* s : {cohom, iso}) {
    s->add_option("--max-degree", max_degree, "Largest degree k of H^{2k}")->check(CLI::Range(0, 12));
    s->add_flag("--forgetful", forgetful, "Use the x-forgetful graph");
  }
  sc->add_flag("--ordinary", ordinary, "Set e1..en to zero");
  expr->add_option("--poly", poly, "Polynomial in hyperplane names and e1..en")->required();
  klm->add_option("--k", spec.k, "Horizontal lines")->required()->check(CLI::PositiveNumber);
  klm->add_option("--l", spec.l, "Vertical lines")->required()->check(CLI::PositiveNumber);
  klm->add_option("--m", spec.m, "Diagonal lines")->required()->check(CLI::PositiveNumber);
  klm->add_option("-o,--output", out, "Output file (default standard output)");
  fix->add_option("id", fixture_id, "Fixture id")->required();
  fix->add_option("-o,--output", out, "Output file (default standard output)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (klm->parsed()) {
      write_graph(gen_klm(spec), out);
      return 0;
    }
    if (fix->parsed()) {
      try {
        write_graph(fixture(fixture_id), out);
      } catch (const UnknownFixture& e) {
        throw UsageError(e.what());
      }
      return 0;
    }
    GkmGraph g = load(in);
    if (validate->parsed()) {
      auto rep = validate_axial(g);
      emit(validation_json(rep));
      return rep.ok() ? 0 : 1;
    }
    ValidGraph vg = prepare(g);
    if (hyper->parsed()) {
      emit(hyperplanes_json(vg, all_hyperplanes(vg)));
      return 0;
    }
    if (assume->parsed()) {
      auto hs = all_hyperplanes(vg);
      auto rep = check_assumptions(vg, hs);
      emit(assumptions_json(hs, rep));
      return rep.ok1() && rep.ok2() ? 0 : 1;
    }
    if (cohom->parsed()) {
      std::vector<GradedPiece> pieces(max_degree + 1);
      for_each_index(pieces.size(), Exec::parallel,
                     [&](std::size_t k) { pieces[k] = cohomology_basis(vg, static_cast<int>(k), forgetful); });
      emit(cohomology_json(vg, pieces));
      return 0;
    }
    Arrangement arr = build_arrangement(vg);
    if (iso->parsed()) {
      auto rep = verify_iso(vg, arr, max_degree, forgetful);
      emit(iso_json(rep, arr.orientation));
      return rep.ok() ? 0 : 1;
    }
    SimplicialComplex c = build_complex(vg, arr.hs);
    ShellingData s = shell(vg, arr, c);
    if (basis->parsed()) {
      emit(basis_json(vg, arr, c, s));
      return 0;
    }
    if (sc->parsed()) {
      emit(structure_json(arr, structure_constants(vg, arr, c, s, ordinary)));
      return 0;
    }
    if (expr->parsed()) {
      Polynomial f;
      try {
        f = parse_polynomial(poly, module_vars(vg, arr));
      } catch (const ParseError& e) {
        throw UsageError(std::string("--poly: ") + e.what());
      }
      auto e = express_in_basis(vg, arr, c, s, f);
      auto b = module_basis(vg, arr, s);
      Json bj = Json::array();
      for (const auto& x : b) bj.push_back(x.to_string());
      emit(Json{{"poly", f.to_string()},
                {"basis", bj},
                {"coefficients", expansion_json(b, e)},
                {"orientation", arr.orientation}});
      return 0;
    }
  } catch (const UsageError& e) {
    emit(error_json("UsageError", e.what()));
    return 2;
  } catch (const Error& e) {
    emit(error_json(e.kind(), e.what()));
    return 1;
  } catch (const std::exception& e) {
    emit(error_json("InternalError", e.what()));
    return 1;
  }
  return 2;
}
