// Command-line front end: classify 3-form files, compute stabilizers, emit
// Cartan 3-forms, and run the level-set verification pipeline.
//
// Exit codes: 0 success, 1 verification failure, 2 input error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <string>

#include "g2forms/json_io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInputError = 2;

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    if (!content.empty() && content.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw g2f::InputError("cannot write file: " + path);
  out << content;
}

g2f::KForm load_form7(const std::string& path) {
  g2f::KForm w = g2f::kform_from_json(g2f::load_json_file(path));
  if (w.dim() != 7 || w.degree() != 3)
    throw g2f::InputError("expected a 3-form on a 7-dimensional space, got "
                          "degree " + std::to_string(w.degree()) + " on dim " +
                          std::to_string(w.dim()));
  return w;
}

int cmd_classify(const std::string& path, const std::string& out) {
  g2f::TypeReport report = g2f::classify(load_form7(path));
  write_output(out, g2f::type_report_to_json(report).dump(2));
  return kExitOk;
}

int cmd_stabilizer(const std::string& path, bool dump_basis,
                   const std::string& out) {
  auto basis = g2f::stabilizer(load_form7(path));
  g2f::Json j{{"stabilizer_dim", (int)basis.size()}};
  if (dump_basis) {
    g2f::Json arr = g2f::Json::array();
    for (const auto& m : basis) {
      g2f::Json rows = g2f::Json::array();
      for (std::size_t i = 0; i < m.rows(); ++i) {
        g2f::Json row = g2f::Json::array();
        for (std::size_t jcol = 0; jcol < m.cols(); ++jcol)
          row.push_back(m(i, jcol).str());
        rows.push_back(row);
      }
      arr.push_back(rows);
    }
    j["basis"] = arr;
  }
  write_output(out, j.dump(2));
  return kExitOk;
}

int cmd_cartan(const std::string& algebra, bool check_closed,
               bool check_multisymplectic, const std::string& out) {
  g2f::LieAlgebra g = [&] {
    if (algebra == "su2") return g2f::build_su2();
    if (algebra == "su3") return g2f::build_su3();
    return g2f::lie_algebra_from_json(g2f::load_json_file(algebra));
  }();
  g2f::Matrix metric = g.has_realization() ? g2f::negative_trace_form(g)
                                           : g2f::killing_form(g);
  g2f::KForm w = g2f::cartan_3form(g, metric);
  bool ok = true;
  g2f::Json checks = g2f::Json::object();
  if (check_closed) {
    bool closed = g2f::ce_differential(g, w).is_zero();
    checks["closed"] = closed ? "pass" : "fail";
    ok &= closed;
  }
  if (check_multisymplectic) {
    bool ms = g2f::is_multisymplectic(w);
    checks["multisymplectic"] = ms ? "pass" : "fail";
    ok &= ms;
  }
  g2f::Json j = g2f::kform_to_json(w);
  if (!checks.empty()) j["checks"] = checks;
  write_output(out, j.dump(2));
  return ok ? kExitOk : kExitVerifyFailed;
}

int cmd_verify_x7(int samples, std::uint64_t seed, const std::string& out,
                  const std::string& format) {
  g2f::VerifyOptions opts;
  opts.samples = samples;
  opts.seed = seed;
  g2f::VerifyRun run = g2f::run_verification(opts);
  if (format == "text")
    write_output(out, g2f::verify_run_to_text(run));
  else
    write_output(out, g2f::verify_run_to_json(run).dump(2));
  bool ok = run.all_split_stable && run.identity_restriction_matches &&
            run.translate_checks_pass;
  if (!ok && !out.empty()) {
    for (const auto& r : run.results)
      if (!(r.in_x7 && r.tangent_rank == 7 &&
            r.report.verdict == g2f::Verdict::SplitStable))
        std::cerr << "verification failed at sample " << r.index << "\n";
    if (!run.identity_restriction_matches)
      std::cerr << "identity restriction does not match the expected "
                   "coefficients\n";
    if (!run.translate_checks_pass)
      std::cerr << "left-translation subspace check failed on the rotation "
                   "subgroup sub-samples\n";
  }
  return ok ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact classifier for 3-forms on 7-dimensional space and "
               "verification pipeline for the level set Im(g11) = 0 in SU(3)"};
  app.require_subcommand(1);

  std::string path, out;
  bool dump_basis = false;

  auto* classify = app.add_subcommand("classify", "Classify a 3-form file");
  classify->add_option("file", path, "3-form JSON file")->required();
  classify->add_option("-o,--output", out, "Output path (default stdout)");

  auto* stab = app.add_subcommand("stabilizer",
                                  "Stabilizer dimension of a 3-form file");
  stab->add_option("file", path, "3-form JSON file")->required();
  stab->add_flag("--basis", dump_basis, "Dump a basis of the stabilizer");
  stab->add_option("-o,--output", out, "Output path (default stdout)");

  std::string algebra;
  bool check_closed = false, check_ms = false;
  auto* cartan = app.add_subcommand("cartan", "Emit a Cartan 3-form");
  cartan->add_option("--algebra", algebra, "su2, su3, or an algebra JSON file")
      ->required();
  cartan->add_flag("--check-closed", check_closed,
                   "Verify the form is closed");
  cartan->add_flag("--check-multisymplectic", check_ms,
                   "Verify the interior map has full rank");
  cartan->add_option("-o,--output", out, "Output path (default stdout)");

  int samples = 100;
  std::uint64_t seed = 0;
  std::string format = "json";
  auto* verify = app.add_subcommand("verify-x7",
                                    "Run the pointwise verification pipeline");
  verify->add_option("--samples", samples, "Number of sample points")
      ->check(CLI::PositiveNumber);
  verify->add_option("--seed", seed, "Sampling seed");
  verify->add_option("-o,--output", out, "Report path (default stdout)");
  verify->add_option("--format", format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (classify->parsed()) return cmd_classify(path, out);
    if (stab->parsed()) return cmd_stabilizer(path, dump_basis, out);
    if (cartan->parsed())
      return cmd_cartan(algebra, check_closed, check_ms, out);
    if (verify->parsed()) return cmd_verify_x7(samples, seed, out, format);
  } catch (const g2f::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const g2f::SingularPointError& e) {
    std::cerr << "singular point: " << e.what() << "\n";
    return kExitVerifyFailed;
  } catch (const g2f::InternalCheckError& e) {
    std::cerr << "internal consistency failure: " << e.what() << "\n";
    return kExitVerifyFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
