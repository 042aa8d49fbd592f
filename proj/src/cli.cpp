#include "sposet/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "sposet/error.hpp"
#include "sposet/gluing.hpp"
#include "sposet/poset_io.hpp"
#include "sposet/random_model.hpp"
#include "sposet/simplicial_complex.hpp"
#include "sposet/stanley_ideal.hpp"

namespace sposet::cli {
namespace {

std::string read_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Poset load_poset(const std::string& path) { return poset_from_json(read_json_file(path)); }

// JSON object, or the facet shorthand "a*b*c,b*c*d".
SimplicialComplex load_complex(const std::string& path) {
  const std::string text = read_text(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    return complex_from_json(parse_json_text(text));
  }
  return complex_from_facet_string(text);
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
  } else {
    write_text_file(out_path, text);
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Simplicial posets: checks, gluings, Stanley ideals and random sampling",
               "sposet"};
  app.require_subcommand(1, 1);

  std::string poset_path, complex_path, test_name;
  auto* check = app.add_subcommand("check", "Test a poset (or a complex's face poset)");
  auto* check_poset = check->add_option("--poset", poset_path, "Poset JSON file");
  auto* check_complex = check->add_option("--complex", complex_path, "Complex JSON or facet file");
  check_poset->excludes(check_complex);
  check->add_option("--test", test_name, "simplicial | faceposet")
      ->required()
      ->check(CLI::IsMember({"simplicial", "faceposet"}));

  std::string a_path, b_path, spec_path, out_path;
  auto* glue_delta = app.add_subcommand("glue-delta", "Glue two posets along an ideal isomorphism");
  glue_delta->add_option("--a", a_path, "Poset JSON file A")->required();
  glue_delta->add_option("--b", b_path, "Poset JSON file B")->required();
  glue_delta->add_option("--spec", spec_path, "Gluing spec JSON file")->required();
  glue_delta->add_option("--out", out_path, "Output poset JSON (default: stdout)");

  auto* glue_theta = app.add_subcommand("glue-theta", "Theta-glue two simplicial complexes");
  glue_theta->add_option("--a", a_path, "Complex file D1")->required();
  glue_theta->add_option("--b", b_path, "Complex file D2")->required();
  glue_theta->add_option("--out", out_path, "Output poset JSON (default: stdout)");

  auto* ideal = app.add_subcommand("ideal", "Print the Stanley poset ideal generators");
  ideal->add_option("--poset", poset_path, "Poset JSON file")->required();

  auto* reduce = app.add_subcommand("reduce", "Print the reduced monomial ideal of a face poset");
  reduce->add_option("--poset", poset_path, "Poset JSON file")->required();

  RandomModelParams params;
  std::size_t count = 1;
  bool tally = false;
  auto* random = app.add_subcommand("random", "Sample random simplicial posets");
  random->add_option("--n", params.n, "Number of points")->required();
  random->add_option("--p1", params.p1, "Edge probability of D1")->required();
  random->add_option("--p2", params.p2, "Edge probability of D2")->required();
  random->add_option("--seed", params.seed, "Base seed")->required();
  random->add_option("--count", count, "Number of samples");
  random->add_flag("--tally", tally, "Print the face-poset tally");
  random->add_option("--out", out_path, "Batch JSON output file");

  auto* export_dot = app.add_subcommand("export-dot", "Write a poset as Graphviz DOT");
  export_dot->add_option("--poset", poset_path, "Poset JSON file")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream cli_out, cli_err;
    const int code = app.exit(e, cli_out, cli_err);
    out << cli_out.str();
    err << cli_err.str();
    return code == 0 ? kOk : kIoOrParse;
  }

  try {
    if (check->parsed()) {
      if (poset_path.empty() && complex_path.empty()) {
        err << "check needs --poset or --complex\n";
        return kIoOrParse;
      }
      const Poset p = poset_path.empty() ? face_poset(load_complex(complex_path)) : load_poset(poset_path);
      const bool result = test_name == "simplicial" ? is_simplicial(p) : is_face_poset(p);
      out << (result ? "true" : "false") << "\n";
    } else if (glue_delta->parsed()) {
      const Poset glued = delta_glue(load_poset(a_path), load_poset(b_path),
                                     gluing_spec_from_json(read_json_file(spec_path)));
      emit(dump_json(poset_to_json(glued)), out_path, out);
    } else if (glue_theta->parsed()) {
      const Poset glued = theta_glue(load_complex(a_path), load_complex(b_path));
      emit(dump_json(poset_to_json(glued)), out_path, out);
    } else if (ideal->parsed()) {
      for (const auto& line : stanley_poset_ideal(load_poset(poset_path)).render()) out << line << "\n";
    } else if (reduce->parsed()) {
      for (const auto& line : reduce_face_poset_ideal(load_poset(poset_path)).render()) out << line << "\n";
    } else if (random->parsed()) {
      const BatchResult batch = run_batch(params, count);
      const std::string json = dump_json(batch.to_json());
      if (tally) {
        out << "faceposet: " << batch.face_poset_count << "/" << count << "\n";
        if (!out_path.empty()) write_text_file(out_path, json);
      } else {
        emit(json, out_path, out);
      }
    } else if (export_dot->parsed()) {
      out << poset_to_dot(load_poset(poset_path));
    }
  } catch (const GluingSpecError& e) {
    err << e.what() << "\n" << "detail: " << e.detail() << "\n";
    return kGluingSpec;
  } catch (const PreconditionError& e) {
    err << "precondition failed: " << e.what() << "\n";
    return kPrecondition;
  } catch (const DomainError& e) {
    err << "invalid argument: " << e.what() << "\n";
    return kPrecondition;
  } catch (const SizeLimitError& e) {
    err << "size limit: " << e.what() << "\n";
    return kPrecondition;
  } catch (const ParseError& e) {
    err << "input error: " << e.what() << "\n";
    return kIoOrParse;
  } catch (const LookupError& e) {
    err << "input error: " << e.what() << "\n";
    return kIoOrParse;
  } catch (const StructureError& e) {
    err << "input error: " << e.what() << "\n";
    return kIoOrParse;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kOk;
}

}  // namespace sposet::cli
