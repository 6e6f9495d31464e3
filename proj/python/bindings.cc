// Copyright 2026 The Semmut Project Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "semmut/cli/cli.h"
#include "semmut/cli/stub_predict.h"
#include "semmut/codemodel/parser.h"
#include "semmut/ensemble/aggregate.h"
#include "semmut/transforms/operator.h"
#include "semmut/transforms/registry.h"
#include "semmut/verify/checks.h"

namespace py = pybind11;

namespace {

using semmut::codemodel::ParseFunction;
using semmut::codemodel::ParseResult;

const semmut::codemodel::SyntaxUnit& ParseOrThrow(const ParseResult& result) {
  if (!result.ok()) {
    throw py::value_error("parse failure at byte " +
                          std::to_string(result.failure().position) + ": " +
                          result.failure().message);
  }
  return result.unit();
}

py::list Operators() {
  py::list out;
  for (const auto* op : semmut::transforms::ListOperators()) {
    py::dict entry;
    entry["id"] = op->id();
    entry["category"] = std::string(semmut::transforms::CategoryName(op->category()));
    entry["description"] = op->info().description;
    out.append(entry);
  }
  return out;
}

py::list Mutate(const std::string& func, uint32_t max_sites_per_op) {
  const ParseResult parsed = ParseFunction(func);
  const auto& unit = ParseOrThrow(parsed);
  const auto result = semmut::transforms::ApplyAll(unit, "fn", {max_sites_per_op});
  py::list out;
  for (const auto& variant : result.variants) {
    py::dict entry;
    entry["variant_id"] = variant.variant_id;
    entry["operator_id"] = variant.operator_id;
    entry["site"] = variant.site;
    entry["func"] = variant.text;
    out.append(entry);
  }
  return out;
}

py::tuple Verdict(const semmut::verify::Verdict& verdict) {
  py::list reasons;
  for (const auto& reason : verdict.reasons()) {
    reasons.append(py::make_tuple(reason.check, reason.message));
  }
  return py::make_tuple(std::string(semmut::verify::StatusName(verdict.status())), reasons);
}

py::tuple CheckStatic(const std::string& original, const std::string& variant) {
  const ParseResult parsed_original = ParseFunction(original);
  const ParseResult parsed_variant = ParseFunction(variant);
  return Verdict(semmut::verify::CheckStatic(ParseOrThrow(parsed_original),
                                             ParseOrThrow(parsed_variant)));
}

semmut::ensemble::TieRule ParseTieRule(const std::string& name) {
  if (name == "ties0") return semmut::ensemble::TieRule::kTies0;
  if (name == "ties1") return semmut::ensemble::TieRule::kTies1;
  throw py::value_error("tie rule must be ties0 or ties1");
}

std::tuple<int, std::string, std::string> RunCli(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  int code;
  {
    py::gil_scoped_release release;
    code = semmut::cli::RunCli(args, out, err);
  }
  return {code, out.str(), err.str()};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Semantic-preserving mutation of C functions and ensemble voting.";
  py::register_exception<semmut::ensemble::EmptyInput>(m, "EmptyInput", PyExc_ValueError);
  py::register_exception<semmut::ensemble::OutOfRange>(m, "OutOfRange", PyExc_ValueError);
  py::register_exception<semmut::ensemble::DimensionMismatch>(m, "DimensionMismatch",
                                                             PyExc_ValueError);

  m.def("operators", &Operators, "The registered operators in id order.");
  m.def("mutate", &Mutate, py::arg("func"), py::arg("max_sites_per_op") = 4,
        "Every variant of one C function.");
  m.def("check_static", &CheckStatic, py::arg("original"), py::arg("variant"),
        "Static preservation verdict as (status, [(check, message)]).");
  m.def("majority_vote",
        [](const std::vector<int>& labels, const std::string& tie_rule) {
          return semmut::ensemble::MajorityVote(labels, ParseTieRule(tie_rule));
        },
        py::arg("labels"), py::arg("tie_rule") = "ties0");
  m.def("average_probability",
        [](const std::vector<double>& probabilities) {
          const auto result = semmut::ensemble::AverageProbability(probabilities);
          return py::make_tuple(result.label, result.mean_p1);
        },
        py::arg("probabilities"));
  m.def("weighted_predict",
        [](const std::vector<double>& model_weights, const std::vector<double>& transform_weights,
           const std::vector<double>& orig_scores, const std::vector<double>& op_scores) {
          semmut::ensemble::EnsembleWeights weights;
          for (size_t i = 0; i < model_weights.size(); ++i) {
            weights.model_ids.push_back("m" + std::to_string(i));
          }
          for (size_t i = 0; i < transform_weights.size(); ++i) {
            weights.transform_ids.push_back("t" + std::to_string(i));
          }
          weights.weights = model_weights;
          weights.weights.insert(weights.weights.end(), transform_weights.begin(),
                                 transform_weights.end());
          return semmut::ensemble::WeightedPredict(weights, orig_scores, op_scores);
        },
        py::arg("model_weights"), py::arg("transform_weights"), py::arg("orig_scores"),
        py::arg("op_scores"));
  m.def("stub_probability", &semmut::cli::StubProbability, py::arg("model_id"),
        py::arg("text"), py::arg("seed") = 42);
  m.def("run_cli", &RunCli, py::arg("args"),
        "Runs the command-line tool in-process; returns (exit_code, stdout, stderr).");
}
