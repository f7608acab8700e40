#include "bentgraph/cli/report.h"

#include <sstream>

#include "bentgraph/transform.h"

namespace bentgraph::cli {

namespace {

Json warning(const std::string& code, const std::string& message) {
  return Json{{"code", code}, {"message", message}};
}

Json check_json(const SrgCheck& check, int n) {
  Json j;
  j["srg"] = check.is_srg();
  if (check.is_srg()) {
    j["params"] = params_json(*check.params);
    j["lambda_eq_mu"] = check.params->lambda_equals_mu();
  } else {
    j["params"] = nullptr;
    j["lambda_eq_mu"] = false;
    j["violation"] = check.violation->to_string(n);
  }
  j["loops_dropped"] = check.loops_dropped;
  return j;
}

}  // namespace

Json params_json(const SrgParams& p) {
  Json j;
  j["v"] = p.v;
  j["k"] = p.k;
  j["lambda"] = p.lambda_defined ? Json(p.lambda) : Json(nullptr);
  j["mu"] = p.mu_defined ? Json(p.mu) : Json(nullptr);
  return j;
}

Json analysis_report(const std::string& function_id, const BooleanFunction& f,
                     const ResourceLimits& limits) {
  const int n = f.arity();
  const auto fourier_spectrum = fourier(f, limits);
  const auto eig = cayley_eigenvalues(f, limits);
  const auto bent = is_bent(f, limits);
  const auto symmetry = spectrum_symmetry_report(f, limits);

  Json r;
  Json warnings = Json::array();
  r["function_id"] = function_id;
  r["n"] = n;
  r["support_size"] = f.weight();
  r["nonlinearity"] = nonlinearity(f, limits);
  r["is_bent"] = bent.bent;
  if (!bent.bent) r["bent_reason"] = bent.reason;
  r["fourier_numerators"] = fourier_spectrum.numerators;
  r["eigenvalues"] = eig.sorted;
  r["components"] = component_count(f);
  r["adjacency_rank"] = adjacency_rank(f, limits);
  r["symmetry"] = Json{{"connected", symmetry.connected},
                       {"has_minus_lambda0", symmetry.has_minus_lambda0},
                       {"spectrum_symmetric", symmetry.spectrum_symmetric}};

  if (f(0)) {
    warnings.push_back(warning("loops", "f(0)=1 puts a loop on every vertex; srg counting uses Omega_f \\ {0}"));
  }
  if (n <= limits.max_srg_arity) {
    const auto verdict = is_srg_lambda_eq_mu(f, limits);
    Json g = check_json(verdict.check, n);
    g["has_loops"] = f(0) != 0;
    g["family"] = nullptr;
    if (verdict.check.is_srg() && n % 2 == 0) {
      const auto predicted = predicted_bent_params(n);
      const auto& counted = *verdict.check.params;
      if (matches_prediction(counted, predicted.plus)) g["family"] = "plus";
      if (matches_prediction(counted, predicted.minus)) g["family"] = "minus";
      if (auto d = find_table_discrepancy(n, counted)) {
        warnings.push_back(warning("reference_table_discrepancy", d->message));
      }
    }
    if (verdict.holds && !bent.bent) {
      warnings.push_back(warning("degenerate_srg",
                                 "graph is strongly regular with lambda=mu only in the trivial sense "
                                 "(disjoint edges or a complete graph); f is not bent"));
    }
    r["graph"] = std::move(g);
  } else {
    r["graph"] = nullptr;
    warnings.push_back(warning("srg_skipped", "srg pair counting limited to n <= " +
                                                  std::to_string(limits.max_srg_arity)));
  }
  r["warnings"] = std::move(warnings);
  return r;
}

std::string spectrum_csv(const BooleanFunction& f, const ResourceLimits& limits) {
  const auto eig = cayley_eigenvalues(f, limits);
  std::ostringstream out;
  out << "index,i_bits,lambda_i\n";
  for (std::uint32_t i = 0; i < eig.indexed.size(); ++i) {
    out << i << ',' << bit_string(i, f.arity()) << ',' << eig.indexed[i] << '\n';
  }
  return out.str();
}

std::string graph_dot(const CayleyGraph& g) {
  const int n = g.arity();
  std::ostringstream out;
  out << "graph cayley {\n";
  for (std::uint32_t u = 0; u < g.vertex_count(); ++u) {
    out << "  v" << u << " [label=\"" << bit_string(u, n) << "\"];\n";
  }
  g.for_each_loop([&](std::uint32_t u) { out << "  v" << u << " -- v" << u << ";\n"; });
  g.for_each_edge([&](std::uint32_t u, std::uint32_t w) { out << "  v" << u << " -- v" << w << ";\n"; });
  out << "}\n";
  return out.str();
}

Json predict_report(int n) {
  const auto p = predicted_bent_params(n);
  Json r;
  r["n"] = n;
  auto family = [](const SrgParams& params) {
    Json j = params_json(params);
    const auto s = spectrum_from_params(params);
    j["spectrum"] = Json{{"k", s.k}, {"theta1", s.theta1}, {"m1", s.m1}, {"theta2", s.theta2}, {"m2", s.m2}};
    j["fundamental_identity"] = check_fundamental_identity(params);
    return j;
  };
  r["plus"] = family(p.plus);
  r["minus"] = family(p.minus);
  Json warnings = Json::array();
  for (const auto& d : table_discrepancies(n)) warnings.push_back(warning("reference_table_discrepancy", d.message));
  r["warnings"] = std::move(warnings);
  return r;
}

Json vectorial_report(const std::vector<std::string>& function_ids, const VectorialFunction& F,
                      const ResourceLimits& limits) {
  const int n = F.input_arity();
  const auto verdict = is_vectorial_bent(F, limits);
  const auto condition = check_support_srg_condition(F);
  Json r;
  r["components"] = function_ids;
  r["n"] = n;
  r["m"] = F.output_arity();
  r["nl"] = nl(F, limits);
  r["is_vectorial_bent"] = verdict.bent;
  r["witness"] = verdict.witness ? Json(bit_string(*verdict.witness, F.output_arity())) : Json(nullptr);
  Json subsets = Json::array();
  for (const auto& s : condition.subsets) {
    Json j;
    j["subset"] = s.indices;
    j["support_size"] = s.support.size();
    j["matches_combination"] = s.matches_combination;
    Json c = check_json(s.check, n);
    for (auto it = c.begin(); it != c.end(); ++it) j[it.key()] = it.value();
    subsets.push_back(std::move(j));
  }
  r["subsets"] = std::move(subsets);
  r["all_subsets_pass"] = condition.all_pass();
  Json warnings = Json::array();
  for (const auto& w : condition.warnings) warnings.push_back(warning("precondition", w));
  r["warnings"] = std::move(warnings);
  return r;
}

Json enumerate_report(int n, const std::vector<BooleanFunction>& functions) {
  return Json{{"n", n}, {"count", functions.size()}};
}

std::string enumerate_csv(const std::vector<BooleanFunction>& functions) {
  std::ostringstream out;
  out << "index,truth_table\n";
  for (std::size_t i = 0; i < functions.size(); ++i) out << i << ',' << functions[i].to_bit_string() << '\n';
  return out.str();
}

}  // namespace bentgraph::cli
