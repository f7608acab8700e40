#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "bentgraph/boolean_function.h"
#include "bentgraph/cayley.h"
#include "bentgraph/srg.h"
#include "bentgraph/vectorial.h"

namespace bentgraph::cli {

// Key order is insertion order, so identical inputs serialise byte for byte.
using Json = nlohmann::ordered_json;

Json params_json(const SrgParams& p);

// Full analysis of one function: support, nonlinearity, bentness, spectrum,
// components, rank and the srg check of its Cayley graph.
Json analysis_report(const std::string& function_id, const BooleanFunction& f,
                     const ResourceLimits& limits = {});

// index,i_bits,lambda_i with one row per index.
std::string spectrum_csv(const BooleanFunction& f, const ResourceLimits& limits = {});

// Undirected DOT graph: one node per vertex labelled by its bit string, edges
// u -- w with u < w, loops as self-edges.
std::string graph_dot(const CayleyGraph& g);

Json predict_report(int n);

Json vectorial_report(const std::vector<std::string>& function_ids, const VectorialFunction& F,
                      const ResourceLimits& limits = {});

Json enumerate_report(int n, const std::vector<BooleanFunction>& functions);

// index,truth_table with one row per function.
std::string enumerate_csv(const std::vector<BooleanFunction>& functions);

}  // namespace bentgraph::cli
