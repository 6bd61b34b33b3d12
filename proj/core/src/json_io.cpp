#include "g2forms/json_io.hpp"

#include <fstream>
#include <sstream>

namespace g2f {

namespace {

int get_int(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer())
    throw InputError(std::string("missing or non-integer field '") + key + "'");
  return j[key].get<int>();
}

}  // namespace

KForm kform_from_json(const Json& j) {
  int dim = get_int(j, "dim");
  int degree = get_int(j, "degree");
  KForm w(dim, degree);
  if (!j.contains("terms") || !j["terms"].is_array())
    throw InputError("missing 'terms' array");
  for (const auto& term : j["terms"]) {
    if (!term.contains("indices") || !term["indices"].is_array() ||
        !term.contains("coeff") || !term["coeff"].is_string())
      throw InputError("each term needs 'indices' and a string 'coeff'");
    std::vector<int> indices = term["indices"].get<std::vector<int>>();
    if ((int)indices.size() != degree)
      throw InputError("term index tuple has wrong length");
    Blade b = blade::from_indices(indices, dim);
    if (!w.coeff(b).is_zero())
      throw InputError("duplicate index tuple in term " + term.dump());
    w.set_term(b, RealScalar::parse(term["coeff"].get<std::string>()));
  }
  return w;
}

Json kform_to_json(const KForm& w) {
  Json terms = Json::array();
  for (const auto& [b, c] : w.terms())
    terms.push_back({{"indices", blade::to_indices(b)}, {"coeff", c.str()}});
  return Json{{"dim", w.dim()}, {"degree", w.degree()}, {"terms", terms}};
}

Json type_report_to_json(const TypeReport& r) {
  return Json{{"verdict", to_string(r.verdict)},
              {"signature", {r.signature.pos, r.signature.neg}},
              {"stabilizer_dim", r.stabilizer_dim},
              {"b_rank", r.b_rank}};
}

LieAlgebra lie_algebra_from_json(const Json& j) {
  int dim = get_int(j, "dim");
  LieAlgebra::BracketTable table;
  if (j.contains("brackets")) {
    if (!j["brackets"].is_array()) throw InputError("'brackets' must be an array");
    for (const auto& entry : j["brackets"]) {
      int i = get_int(entry, "i");
      int jj = get_int(entry, "j");
      if (!entry.contains("coeffs") || !entry["coeffs"].is_array() ||
          (int)entry["coeffs"].size() != dim)
        throw InputError("bracket entry needs a dim-length 'coeffs' array");
      RVector c;
      for (const auto& s : entry["coeffs"]) {
        if (!s.is_string()) throw InputError("coeffs must be scalar strings");
        c.push_back(RealScalar::parse(s.get<std::string>()));
      }
      if (table.count({i, jj})) throw InputError("duplicate bracket entry");
      table[{i, jj}] = std::move(c);
    }
  }
  LieAlgebra g(dim, std::move(table));
  if (!jacobi_check(g))
    throw InputError("structure constants violate the Jacobi identity");
  return g;
}

namespace {

Json sample_result_to_json(const SampleResult& r) {
  auto rational_str = [](const Rational& q) { return to_string(q); };
  Json params{
      {"q1", {rational_str(r.params.q1.a), rational_str(r.params.q1.b),
              rational_str(r.params.q1.c), rational_str(r.params.q1.d)}},
      {"p", {rational_str(r.params.p.c), rational_str(r.params.p.s)}},
      {"q2", {rational_str(r.params.q2.a), rational_str(r.params.q2.b),
              rational_str(r.params.q2.c), rational_str(r.params.q2.d)}}};
  return Json{{"index", r.index},
              {"params", params},
              {"in_x7", r.in_x7},
              {"tangent_rank", r.tangent_rank},
              {"report", type_report_to_json(r.report)}};
}

}  // namespace

Json verify_run_to_json(const VerifyRun& run) {
  Json records = Json::array();
  for (const auto& r : run.results) records.push_back(sample_result_to_json(r));
  Json summary{{"samples", (int)run.results.size()},
               {"all_split_stable", run.all_split_stable},
               {"seed", run.seed}};
  Json checks{{"identity_restriction_matches", run.identity_restriction_matches},
              {"translate_points", run.translate_points},
              {"translate_checks_pass", run.translate_checks_pass}};
  return Json{{"records", records}, {"summary", summary}, {"checks", checks}};
}

std::string verify_run_to_text(const VerifyRun& run) {
  std::ostringstream out;
  for (const auto& r : run.results) {
    out << "sample " << r.index << ": in_x7=" << (r.in_x7 ? "yes" : "no")
        << " tangent_rank=" << r.tangent_rank
        << " verdict=" << to_string(r.report.verdict) << " signature=("
        << r.report.signature.pos << "," << r.report.signature.neg << ")"
        << " stabilizer_dim=" << r.report.stabilizer_dim << "\n";
  }
  out << "samples: " << run.results.size() << "\n"
      << "seed: " << run.seed << "\n"
      << "all_split_stable: " << (run.all_split_stable ? "true" : "false") << "\n"
      << "identity_restriction_matches: "
      << (run.identity_restriction_matches ? "true" : "false") << "\n"
      << "translate_checks_pass (" << run.translate_points
      << " points): " << (run.translate_checks_pass ? "true" : "false") << "\n";
  return out.str();
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open file: " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError("JSON parse error in " + path + ": " + e.what());
  }
}

}  // namespace g2f
