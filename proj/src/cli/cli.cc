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

#include "semmut/cli/cli.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "semmut/cli/config.h"
#include "semmut/cli/stub_predict.h"
#include "semmut/codemodel/parser.h"
#include "semmut/corpus/dataset.h"
#include "semmut/corpus/stats.h"
#include "semmut/corpus/transform.h"
#include "semmut/ensemble/evaluate.h"
#include "semmut/ensemble/predictions.h"
#include "semmut/ensemble/report.h"
#include "semmut/transforms/registry.h"
#include "semmut/verify/checks.h"
#include "semmut/verify/differential.h"
#include "semmut/verify/gate.h"
#include "semmut/verify/review.h"

#ifndef SEMMUT_DEFAULT_MICROCORPUS_DIR
#define SEMMUT_DEFAULT_MICROCORPUS_DIR "data/microcorpus"
#endif

namespace semmut::cli {
namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Writes `lines`, each followed by a newline.
void WriteLines(const std::string& path, const std::vector<std::string>& lines) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  for (const std::string& line : lines) out << line << '\n';
  if (!out) throw IoError("write error on " + path);
}

void WriteText(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  out << text;
  if (!out) throw IoError("write error on " + path);
}

std::string JsonPathFor(const std::string& path) {
  std::filesystem::path json = path;
  json.replace_extension(".json");
  if (json == std::filesystem::path(path)) json += ".json";
  return json.string();
}

// Markdown to `path` with a JSON twin, or Markdown to `out` without a path.
void EmitReport(const std::string& path, const std::string& markdown,
                const std::string& json, std::ostream& out) {
  if (path.empty()) {
    out << markdown;
    return;
  }
  WriteText(path, markdown);
  WriteText(JsonPathFor(path), json);
  out << "wrote " << path << " and " << JsonPathFor(path) << "\n";
}

void ReportMalformed(const std::string& path,
                     const std::vector<corpus::MalformedLine>& malformed,
                     std::ostream& err) {
  for (const corpus::MalformedLine& line : malformed) {
    err << path << ":" << line.line << ": skipped: " << line.message << "\n";
  }
}

std::string CatalogJson() {
  Json catalog = Json::array();
  for (const auto* op : transforms::ListOperators()) {
    catalog.push_back({{"id", op->id()},
                       {"category", transforms::CategoryName(op->category())},
                       {"description", op->info().description},
                       {"attribution", op->info().attribution}});
  }
  return catalog.dump(2) + "\n";
}

struct TransformArgs {
  std::string in;
  std::string out;
  std::string skips;
  bool list = false;
};

int RunTransform(const TransformArgs& args, const Config& config,
                 std::ostream& out, std::ostream& err) {
  if (args.list) {
    if (args.out.empty()) {
      out << CatalogJson();
    } else {
      WriteText(args.out, CatalogJson());
    }
    return kExitOk;
  }
  if (args.in.empty() || args.out.empty()) {
    throw UsageError("transform needs --in and --out (or --list)");
  }
  corpus::LoadResult loaded;
  try {
    loaded = corpus::LoadJsonl(args.in);
  } catch (const corpus::DatasetError& e) {
    throw IoError(e.what());
  }
  ReportMalformed(args.in, loaded.malformed, err);
  corpus::TransformConfig transform_config;
  transform_config.max_sites_per_op = config.max_sites_per_op;
  transform_config.workers = config.workers;
  const corpus::TransformResult result =
      corpus::TransformCorpus(loaded.records, transform_config);
  std::vector<std::string> lines;
  for (const auto& variant : result.variants) {
    lines.push_back(corpus::ToJsonLine(variant));
  }
  WriteLines(args.out, lines);
  const std::string skips_path =
      args.skips.empty() ? args.out + ".skips.jsonl" : args.skips;
  lines.clear();
  for (const auto& skip : result.skips) lines.push_back(corpus::ToJsonLine(skip));
  WriteLines(skips_path, lines);
  out << "records " << loaded.records.size() << ", transformed "
      << result.transformed_records << ", lines " << result.variants.size()
      << ", skip entries " << result.skips.size() << "\n";
  if (result.transformed_records == 0) {
    err << "every record was skipped; see " << skips_path << "\n";
    return kExitEmpty;
  }
  return kExitOk;
}

struct VerifyArgs {
  std::string in;
  std::string out;
  bool compile = false;
  bool differential = false;
  bool static_only = false;
  std::string review;
  size_t review_n = 20;
};

int RunDifferentialGate(const VerifyArgs& args, const Config& config,
                        std::ostream& out, std::ostream& err) {
  const std::string dir = config.microcorpus_dir.empty()
                              ? SEMMUT_DEFAULT_MICROCORPUS_DIR
                              : config.microcorpus_dir;
  const auto cases = verify::LoadDifferentialCases(dir);
  if (cases.empty()) throw IoError("no micro-corpus cases in " + dir);
  verify::GateOptions options;
  options.static_only = args.static_only;
  options.differential.compiler_cmd = config.compiler_cmd;
  options.differential.timeout = std::chrono::milliseconds(config.timeout_ms);
  const verify::GateSummary summary =
      verify::RunPreservationGate(cases, transforms::Registry::Default(), options);
  std::vector<std::string> lines;
  for (const verify::GateEntry& entry : summary.entries) {
    const std::string id = entry.case_name + "#" + entry.operator_id;
    lines.push_back(entry.verdict.ToJsonLine(id));
    if (!entry.verdict.preserved()) {
      err << id << ": " << verify::StatusName(entry.verdict.status());
      for (const auto& reason : entry.verdict.reasons()) {
        err << "\n  " << reason.check << ": " << reason.message;
      }
      err << "\n";
    }
  }
  if (!args.out.empty()) WriteLines(args.out, lines);
  out << cases.size() << " cases, " << summary.entries.size()
      << " applicable operator/case pairs ("
      << (summary.differential ? "static + differential" : "static only")
      << "): preserved " << summary.preserved << ", broken " << summary.broken
      << ", unknown " << summary.unknown << "\n";
  if (summary.broken > 0) return kExitBroken;
  return summary.entries.empty() ? kExitEmpty : kExitOk;
}

int RunVerify(const VerifyArgs& args, const Config& config, std::ostream& out,
              std::ostream& err) {
  if (args.differential) return RunDifferentialGate(args, config, out, err);
  if (args.in.empty()) throw UsageError("verify needs --in or --differential");
  corpus::VariantsLoadResult loaded;
  try {
    loaded = corpus::LoadVariantsJsonl(args.in);
  } catch (const corpus::DatasetError& e) {
    throw IoError(e.what());
  }
  if (!loaded.malformed.empty()) {
    ReportMalformed(args.in, loaded.malformed, err);
    throw IoError(args.in + " has malformed lines");
  }
  std::map<int64_t, const corpus::VariantRecord*> originals;
  for (const auto& variant : loaded.variants) {
    if (variant.is_original()) originals[variant.parent_idx] = &variant;
  }
  std::map<int64_t, std::optional<codemodel::SyntaxUnit>> parsed_originals;
  std::vector<std::string> lines;
  std::vector<transforms::Variant> checked;
  size_t counts[3] = {0, 0, 0};
  for (const auto& variant : loaded.variants) {
    if (variant.is_original()) continue;
    verify::Verdict verdict;
    auto orig = originals.find(variant.parent_idx);
    if (orig == originals.end()) {
      verdict.MarkUnknown("input", "no orig line for parent " +
                                       std::to_string(variant.parent_idx));
    } else {
      auto [slot, inserted] = parsed_originals.try_emplace(variant.parent_idx);
      if (inserted) {
        codemodel::ParseResult parsed = codemodel::ParseFunction(orig->second->func);
        if (parsed.ok()) slot->second = parsed.unit();
      }
      const codemodel::ParseResult parsed_variant =
          codemodel::ParseFunction(variant.func);
      if (!slot->second) {
        verdict.MarkUnknown("parse", "original does not parse");
      } else if (!parsed_variant.ok()) {
        verdict.Fail("parse", "variant does not parse: " +
                                  parsed_variant.failure().message);
      } else {
        verify::StaticCheckOptions options;
        if (const auto* op = transforms::Registry::Default().Find(variant.transform_id)) {
          options.category = op->category();
        }
        verdict.Merge(verify::CheckStatic(*slot->second, parsed_variant.unit(), options));
      }
      if (args.compile && !verdict.broken()) {
        verdict.Merge(verify::CheckCompile(variant.func, config.compiler_cmd,
                                           std::string_view(orig->second->func)));
      }
      transforms::Variant v;
      v.parent_id = std::to_string(variant.parent_idx);
      v.operator_id = variant.transform_id;
      v.site = variant.site;
      v.variant_id = variant.variant_id;
      v.text = variant.func;
      checked.push_back(std::move(v));
    }
    ++counts[static_cast<int>(verdict.status())];
    lines.push_back(verdict.ToJsonLine(variant.variant_id));
  }
  if (!args.out.empty()) {
    WriteLines(args.out, lines);
  } else {
    for (const std::string& line : lines) out << line << "\n";
  }
  if (!args.review.empty()) {
    std::map<std::string, std::string> texts;
    for (const auto& [idx, record] : originals) {
      texts[std::to_string(idx)] = record->func;
    }
    WriteText(args.review,
              verify::RenderReviewMarkdown(verify::SampleForReview(
                  checked, texts, args.review_n, config.seed)));
  }
  err << "preserved " << counts[static_cast<int>(verify::Status::kPreserved)]
      << ", broken " << counts[static_cast<int>(verify::Status::kBroken)]
      << ", unknown " << counts[static_cast<int>(verify::Status::kUnknown)] << "\n";
  if (counts[static_cast<int>(verify::Status::kBroken)] > 0) return kExitBroken;
  return lines.empty() ? kExitEmpty : kExitOk;
}

struct StatsArgs {
  std::string variants;
  std::string in;
  std::string out;
};

int RunStats(const StatsArgs& args, std::ostream& out, std::ostream& err) {
  corpus::LoadResult records;
  corpus::VariantsLoadResult variants;
  try {
    records = corpus::LoadJsonl(args.in);
    variants = corpus::LoadVariantsJsonl(args.variants);
  } catch (const corpus::DatasetError& e) {
    throw IoError(e.what());
  }
  ReportMalformed(args.in, records.malformed, err);
  if (!variants.malformed.empty()) {
    ReportMalformed(args.variants, variants.malformed, err);
    throw IoError(args.variants + " has malformed lines");
  }
  const corpus::ApplicabilityStats stats =
      corpus::ComputeStats(variants.variants, records.records);
  EmitReport(args.out, corpus::StatsToMarkdown(stats), corpus::StatsToJson(stats),
             out);
  return stats.parseable == 0 ? kExitEmpty : kExitOk;
}

struct StubArgs {
  std::string in;
  std::string out;
  std::string model_id;
};

int RunStubPredict(const StubArgs& args, const Config& config, std::ostream& out,
                   std::ostream& err) {
  corpus::VariantsLoadResult loaded;
  try {
    loaded = corpus::LoadVariantsJsonl(args.in);
  } catch (const corpus::DatasetError& e) {
    throw IoError(e.what());
  }
  if (!loaded.malformed.empty()) {
    ReportMalformed(args.in, loaded.malformed, err);
    throw IoError(args.in + " has malformed lines");
  }
  std::vector<std::string> lines;
  for (const auto& variant : loaded.variants) {
    lines.push_back(ensemble::ToJsonLine(StubPredict(variant, args.model_id, config.seed)));
  }
  WriteLines(args.out, lines);
  out << "predicted " << lines.size() << " lines with model " << args.model_id
      << "\n";
  return lines.empty() ? kExitEmpty : kExitOk;
}

struct EnsembleArgs {
  std::string mode;
  std::vector<std::string> predictions;
  std::string truth;
  std::string strategy;
  std::string scope = "data-and-model";
  std::string model;
  std::string weights;
  std::string encoding;
  std::string out;
  // report only
  std::vector<std::string> val_predictions;
  std::string val_truth;
};

ensemble::PredictionSet LoadSet(const std::vector<std::string>& paths) {
  std::vector<ensemble::Prediction> all;
  for (const std::string& path : paths) {
    std::vector<ensemble::Prediction> some = ensemble::LoadPredictions(path);
    std::move(some.begin(), some.end(), std::back_inserter(all));
  }
  return ensemble::PredictionSet::Build(std::move(all));
}

ensemble::Strategy ResolveStrategy(const std::string& name, const Config& config) {
  if (name == "majority") {
    return config.tie_rule == ensemble::TieRule::kTies1
               ? ensemble::Strategy::kMajorityTies1
               : ensemble::Strategy::kMajorityTies0;
  }
  if (name == "weighted") {
    return config.encoding == ensemble::Encoding::kProbability
               ? ensemble::Strategy::kWeightedProbability
               : ensemble::Strategy::kWeightedLabels;
  }
  if (auto strategy = ensemble::ParseStrategy(name)) return *strategy;
  throw UsageError("unknown strategy \"" + name +
                   "\"; expected majority, weighted, majority-ties0, "
                   "majority-ties1, average, weighted-labels or "
                   "weighted-probability");
}

ensemble::Scope ResolveScope(const EnsembleArgs& args,
                             const ensemble::PredictionSet& set) {
  const auto kind = ensemble::ParseScopeKind(args.scope);
  if (!kind) {
    throw UsageError("unknown scope \"" + args.scope +
                     "\"; expected original, data, model or data-and-model");
  }
  ensemble::Scope scope{*kind, ""};
  if (scope.single_model()) {
    if (args.model.empty()) throw UsageError("scope " + args.scope + " needs --model");
    const auto& ids = set.model_ids();
    if (std::find(ids.begin(), ids.end(), args.model) == ids.end()) {
      throw UsageError("no predictions of model " + args.model);
    }
    scope.model_id = args.model;
  }
  return scope;
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

int RunEnsemble(const EnsembleArgs& args, const Config& config,
                std::ostream& out, std::ostream& /*err*/) {
  if (args.mode != "fit" && args.mode != "eval" && args.mode != "transitions") {
    throw UsageError("unknown mode \"" + args.mode + "\"; expected fit, eval or transitions");
  }
  const ensemble::PredictionSet set = LoadSet(args.predictions);
  if (set.size() == 0) {
    out << "no predictions\n";
    return kExitEmpty;
  }

  if (args.mode == "transitions") {
    std::string markdown = "# Prediction transitions\n";
    Json json = Json::object();
    for (const std::string& model : set.model_ids()) {
      if (!args.model.empty() && model != args.model) continue;
      markdown += "\n## " + model +
                  "\n\n| Transform | 0->0 | 0->1 | 1->0 | 1->1 |\n"
                  "|---|---:|---:|---:|---:|\n";
      Json per = Json::object();
      for (const auto& [transform, m] : ensemble::TransitionsByTransform(set, model)) {
        markdown += "| " + transform + " | " + std::to_string(m.c00) + " | " +
                    std::to_string(m.c01) + " | " + std::to_string(m.c10) +
                    " | " + std::to_string(m.c11) + " |\n";
        per[transform] = {{"c00", m.c00}, {"c01", m.c01}, {"c10", m.c10}, {"c11", m.c11}};
      }
      json[model] = std::move(per);
    }
    EmitReport(args.out, markdown, json.dump(2) + "\n", out);
    return kExitOk;
  }

  if (args.truth.empty()) throw UsageError("ensemble " + args.mode + " needs --truth");
  const std::map<int64_t, int> truth = ensemble::LoadTruth(args.truth);
  const ensemble::Scope scope = ResolveScope(args, set);

  if (args.mode == "fit") {
    if (args.out.empty()) throw UsageError("ensemble fit needs --out for the weights");
    ensemble::Encoding encoding = config.encoding;
    if (args.encoding == "labels") {
      encoding = ensemble::Encoding::kLabels;
    } else if (args.encoding == "probability") {
      encoding = ensemble::Encoding::kProbability;
    } else if (!args.encoding.empty()) {
      throw UsageError("unknown encoding \"" + args.encoding + "\"");
    }
    ensemble::FitConfig fit_config;
    fit_config.seed = config.seed;
    const ensemble::FitResult fit =
        ensemble::FitWeights(set, truth, encoding, scope, fit_config);
    WriteText(args.out, ensemble::WeightsToJson(fit.weights));
    out << "validation accuracy " << ensemble::FormatAccuracy(fit.validation.value())
        << " (" << fit.validation.correct << "/" << fit.validation.total
        << "), restart " << fit.restart << ", wrote " << args.out << "\n";
    return kExitOk;
  }

  if (args.strategy.empty()) throw UsageError("ensemble eval needs --strategy");
  const ensemble::Strategy strategy = ResolveStrategy(args.strategy, config);
  std::optional<ensemble::EnsembleWeights> weights;
  if (ensemble::IsWeighted(strategy)) {
    if (args.weights.empty()) {
      throw UsageError(std::string(ensemble::StrategyKey(strategy)) + " needs --weights");
    }
    weights = ensemble::WeightsFromJson(ReadFile(args.weights));
  }
  const ensemble::Accuracy accuracy = ensemble::Evaluate(
      set, truth, strategy, scope, weights ? &*weights : nullptr);
  const std::string model = scope.model_id.empty() ? "all" : scope.model_id;
  const std::string markdown =
      "# Ensemble evaluation\n\n| Scope | Model | Strategy | Correct | Total | "
      "Accuracy |\n|---|---|---|---:|---:|---:|\n| " +
      std::string(ensemble::ScopeKey(scope.kind)) + " | " + model + " | " +
      std::string(ensemble::StrategyLabel(strategy)) + " | " +
      std::to_string(accuracy.correct) + " | " + std::to_string(accuracy.total) +
      " | " + ensemble::FormatAccuracy(accuracy.value()) + " |\n";
  Json json;
  json["scope"] = ensemble::ScopeKey(scope.kind);
  json["model_id"] = scope.model_id;
  json["strategy"] = ensemble::StrategyKey(strategy);
  json["correct"] = accuracy.correct;
  json["total"] = accuracy.total;
  json["accuracy"] = accuracy.value();
  EmitReport(args.out, markdown, json.dump(2) + "\n", out);
  return kExitOk;
}

int RunReport(const EnsembleArgs& args, const Config& config, std::ostream& out) {
  const ensemble::PredictionSet test = LoadSet(args.predictions);
  if (test.size() == 0) {
    out << "no predictions\n";
    return kExitEmpty;
  }
  const std::map<int64_t, int> truth = ensemble::LoadTruth(args.truth);
  ensemble::FitConfig fit_config;
  fit_config.seed = config.seed;
  std::optional<ensemble::PredictionSet> validation;
  std::optional<std::map<int64_t, int>> validation_truth;
  if (!args.val_predictions.empty()) {
    if (args.val_truth.empty()) throw UsageError("--val-predictions needs --val-truth");
    validation = LoadSet(args.val_predictions);
    validation_truth = ensemble::LoadTruth(args.val_truth);
  }
  const ensemble::EnsembleReport report = ensemble::BuildReport(
      test, truth, validation ? &*validation : nullptr,
      validation_truth ? &*validation_truth : nullptr, fit_config);
  EmitReport(args.out, ensemble::ReportToMarkdown(report),
             ensemble::ReportToJson(report), out);
  return kExitOk;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app("Semantic-preserving mutation of C functions, verification of "
               "the mutations, and ensembles over classifier predictions.",
               "semmut");
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  std::optional<uint64_t> seed;
  std::optional<uint32_t> max_sites;
  std::optional<unsigned> workers;
  std::optional<std::string> compiler_cmd;
  std::optional<std::string> microcorpus;
  app.add_option("--config", config_path, "Flat key = value config file");
  app.add_option("--seed", seed, "Seed for stub predictions, fitting and review sampling");

  TransformArgs transform_args;
  auto* transform = app.add_subcommand("transform", "Apply every operator to a dataset JSONL file");
  transform->add_option("--in", transform_args.in, "Dataset JSONL");
  transform->add_option("--out", transform_args.out, "Variants JSONL (catalog JSON with --list)");
  transform->add_option("--skips", transform_args.skips, "Skip report JSONL (default <out>.skips.jsonl)");
  transform->add_option("--max-sites", max_sites, "Sites per operator and function");
  transform->add_option("--workers", workers, "Worker threads (0 = all cores)");
  transform->add_flag("--list", transform_args.list, "Print the operator catalog as JSON");

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "Check that variants preserve semantics");
  verify_cmd->add_option("--in", verify_args.in, "Variants JSONL with orig lines");
  verify_cmd->add_option("--out", verify_args.out, "Verdicts JSONL");
  verify_cmd->add_flag("--compile", verify_args.compile, "Also compile every variant");
  verify_cmd->add_flag("--differential", verify_args.differential,
                       "Run every operator on the micro-corpus and compare program output");
  verify_cmd->add_flag("--static-only", verify_args.static_only,
                       "With --differential, skip compilation and execution");
  verify_cmd->add_option("--microcorpus", microcorpus, "Micro-corpus directory");
  verify_cmd->add_option("--compiler-cmd", compiler_cmd, "Compiler command");
  verify_cmd->add_option("--review", verify_args.review, "Write a Markdown review sample");
  verify_cmd->add_option("--review-n", verify_args.review_n, "Review pairs per operator");

  StatsArgs stats_args;
  auto* stats = app.add_subcommand("stats", "Operator applicability statistics");
  stats->add_option("--variants", stats_args.variants, "Variants JSONL")->required();
  stats->add_option("--in", stats_args.in, "Dataset JSONL")->required();
  stats->add_option("--out", stats_args.out, "Markdown report; JSON goes next to it");

  StubArgs stub_args;
  auto* stub = app.add_subcommand("stub-predict", "Deterministic hash-based predictions");
  stub->add_option("--in", stub_args.in, "Variants JSONL")->required();
  stub->add_option("--out", stub_args.out, "Predictions JSONL")->required();
  stub->add_option("--model-id", stub_args.model_id, "Model id to stamp")->required();

  EnsembleArgs ensemble_args;
  auto* ensemble_cmd = app.add_subcommand("ensemble", "Fit weights, evaluate a strategy, or count transitions");
  ensemble_cmd->add_option("--mode", ensemble_args.mode, "fit, eval or transitions")->required();
  ensemble_cmd->add_option("--predictions", ensemble_args.predictions, "Prediction JSONL files")
      ->required();
  ensemble_cmd->add_option("--truth", ensemble_args.truth, "Dataset JSONL with targets");
  ensemble_cmd->add_option("--strategy", ensemble_args.strategy,
                           "majority, weighted, majority-ties0, majority-ties1, average, "
                           "weighted-labels or weighted-probability");
  ensemble_cmd->add_option("--scope", ensemble_args.scope,
                           "original, data, model or data-and-model");
  ensemble_cmd->add_option("--model", ensemble_args.model, "Model for single-model scopes");
  ensemble_cmd->add_option("--weights", ensemble_args.weights, "Weights JSON for weighted strategies");
  ensemble_cmd->add_option("--encoding", ensemble_args.encoding, "labels or probability (fit)");
  ensemble_cmd->add_option("--out", ensemble_args.out, "Output path");

  EnsembleArgs report_args;
  auto* report = app.add_subcommand("report", "Accuracy table of every scope and strategy");
  report->add_option("--predictions", report_args.predictions, "Test prediction JSONL files")
      ->required();
  report->add_option("--truth", report_args.truth, "Test dataset JSONL")->required();
  report->add_option("--val-predictions", report_args.val_predictions,
                     "Validation prediction JSONL files for weight fitting");
  report->add_option("--val-truth", report_args.val_truth, "Validation dataset JSONL");
  report->add_option("--out", report_args.out, "Markdown report; JSON goes next to it");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    Config config;
    if (!config_path.empty()) LoadConfig(config_path, config);
    ApplyEnvironment(config);
    if (seed) config.seed = *seed;
    if (max_sites) {
      if (*max_sites == 0) throw UsageError("--max-sites must be positive");
      config.max_sites_per_op = *max_sites;
    }
    if (workers) config.workers = *workers;
    if (compiler_cmd) config.compiler_cmd = *compiler_cmd;
    if (microcorpus) config.microcorpus_dir = *microcorpus;

    if (transform->parsed()) return RunTransform(transform_args, config, out, err);
    if (verify_cmd->parsed()) return RunVerify(verify_args, config, out, err);
    if (stats->parsed()) return RunStats(stats_args, out, err);
    if (stub->parsed()) return RunStubPredict(stub_args, config, out, err);
    if (ensemble_cmd->parsed()) return RunEnsemble(ensemble_args, config, out, err);
    if (report->parsed()) return RunReport(report_args, config, out);
  } catch (const UsageError& e) {
    const auto parsed = app.get_subcommands();
    err << "error: " << e.what() << "\n\n"
        << (parsed.empty() ? app.help() : parsed.front()->help());
    return kExitError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

}  // namespace semmut::cli
