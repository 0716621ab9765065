// Copyright 2026 The TYPIC Toolkit Authors.
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

// typic: command-line entry point of the toolkit.
//
// Exit codes: 0 success, 1 validation or metric failure, 2 usage error.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "typic/agreement.h"
#include "typic/benchmark.h"
#include "typic/corpus.h"
#include "typic/error.h"
#include "typic/http_api.h"
#include "typic/metrics.h"
#include "typic/reliability.h"
#include "typic/service.h"
#include "typic/template.h"

#ifndef TYPIC_DATA_DIR
#define TYPIC_DATA_DIR "data"
#endif

namespace typic {
namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string corpus;
  std::string out;
  std::string tokenizer;
};

std::string Fixed(double value, int decimals = 4) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.*f", decimals, value);
  return buffer;
}

std::string Share(const Fraction &f) { return f.Ratio() + " = " + f.Percent(); }

std::filesystem::path CorpusDir(const Options &options) {
  if (options.corpus.empty()) {
    throw UsageError("no corpus: pass --corpus or set TYPIC_CORPUS_DIR");
  }
  return options.corpus;
}

std::filesystem::path DefaultTemplatesPath() {
  return std::filesystem::path(TYPIC_DATA_DIR) / "templates" /
         "typic_templates.json";
}

void WriteReport(const Options &options, const json &report) {
  if (options.out.empty()) return;
  std::ofstream out(options.out, std::ios::binary);
  out << report.dump(2) << "\n";
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + options.out);
}

void WriteText(const std::string &path, const std::string &text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + path);
}

// Main-layer diagnoses of the eval split, or all of them without a split.
std::vector<TemplatedDiagnosis> EvalDiagnoses(const Corpus &corpus,
                                              std::string *scope) {
  if (!corpus.split()) {
    *scope = "all";
    return corpus.diagnoses();
  }
  *scope = "eval";
  return FilterByComments(corpus.diagnoses(), corpus.split()->eval);
}

std::map<std::string, Fraction> ExtractabilityShares(const Corpus &corpus) {
  std::vector<Filler> fillers = CollectFillers(corpus.diagnoses());
  std::map<std::string, Fraction> out;
  for (const auto &[kind, share] : ExtractabilityDistribution(fillers)) {
    out[std::string(ExtractabilityName(kind))] = share;
  }
  return out;
}

std::map<std::string, Fraction> PerTargetShares(const Corpus &corpus,
                                                int64_t *groups) {
  std::vector<TargetGroup> g = GroupByTarget(corpus, corpus.diagnoses());
  std::map<std::string, Fraction> out;
  *groups = 0;
  for (const auto &[k, share] : DiagnosesPerTarget(g)) {
    out[std::to_string(k)] = share;
    *groups = share.denominator;
  }
  return out;
}

std::map<std::string, Fraction> InformativenessShares(const Corpus &corpus,
                                                      int64_t *items) {
  std::vector<AggregatedScore> aggregated =
      AggregateJudgments(corpus.judgments());
  *items = static_cast<int64_t>(aggregated.size());
  std::map<std::string, Fraction> out;
  for (const auto &[score, share] : InformativenessDistribution(aggregated)) {
    out[std::to_string(score)] = share;
  }
  return out;
}

int RunValidate(const Options &options, const std::string &templates_path) {
  if (!templates_path.empty()) {
    TemplateSet set = LoadTemplateSetFile(templates_path);
    std::cout << "ok: " << set.size() << " templates, version "
              << set.version() << "\n";
    WriteReport(options, {{"templates", set.size()}, {"issues", json::array()}});
    return kExitOk;
  }
  std::vector<Issue> issues = ValidateCorpusDir(CorpusDir(options));
  json report = json::array();
  for (const Issue &issue : issues) {
    std::cout << FormatIssue(issue) << "\n";
    report.push_back({{"code", ErrorCodeName(issue.code)},
                      {"where", issue.where},
                      {"message", issue.message}});
  }
  if (issues.empty()) {
    std::cout << "ok: " << CorpusDir(options).string() << "\n";
  } else {
    std::cout << issues.size() << " issue(s)\n";
  }
  WriteReport(options, {{"issues", report}});
  return issues.empty() ? kExitOk : kExitFailure;
}

int RunStats(const Options &options) {
  Corpus corpus = LoadCorpus(CorpusDir(options));
  std::string tokenizer = options.tokenizer.empty()
                              ? corpus.manifest().tokenizer
                              : options.tokenizer;
  StatsReport stats = CorpusStats(corpus, tokenizer);
  json report = {{"corpus", corpus.manifest().name}, {"stats", ToJson(stats)}};

  std::printf("corpus              %s\n", corpus.manifest().name.c_str());
  std::printf("topics              %lld\n",
              static_cast<long long>(stats.topics));
  std::printf("counterarguments    %lld (expert %lld, crowd %lld)\n",
              static_cast<long long>(stats.counterarguments),
              static_cast<long long>(stats.expert_counterarguments),
              static_cast<long long>(stats.crowd_counterarguments));
  std::printf("sentences           %lld (avg %s per counterargument)\n",
              static_cast<long long>(stats.sentences),
              Fixed(stats.AvgSentences().value(), 2).c_str());
  std::printf("tokens              %lld (avg %s, %s)\n",
              static_cast<long long>(stats.tokens),
              Fixed(stats.AvgTokens().value(), 2).c_str(), tokenizer.c_str());
  std::printf("comments            %lld on %lld counterarguments (avg %s)\n",
              static_cast<long long>(stats.comments),
              static_cast<long long>(stats.annotated_counterarguments),
              Fixed(stats.AvgCommentsPerAnnotated().value(), 2).c_str());
  std::printf("diagnoses           %lld main, %zu overlap\n",
              static_cast<long long>(stats.diagnoses),
              corpus.overlap_diagnoses().size());
  std::printf("judgments           %lld\n",
              static_cast<long long>(stats.judgments));

  std::string scope;
  std::vector<TemplatedDiagnosis> eval = EvalDiagnoses(corpus, &scope);
  if (!eval.empty()) {
    Fraction coverage = Coverage(eval);
    std::printf("coverage            %s (%s diagnoses)\n",
                Share(coverage).c_str(), scope.c_str());
    report["coverage"] = ToJson(coverage);
    report["coverage"]["scope"] = scope;
  }
  std::map<std::string, Fraction> extractability = ExtractabilityShares(corpus);
  if (!extractability.empty()) {
    std::printf("extractability\n");
    json j = json::object();
    for (const auto &[name, share] : extractability) {
      std::printf("  %-22s %s\n", name.c_str(), Share(share).c_str());
      j[name] = ToJson(share);
    }
    report["extractability"] = j;
  }
  int64_t groups = 0;
  std::map<std::string, Fraction> per_target = PerTargetShares(corpus, &groups);
  if (!per_target.empty()) {
    std::printf("templates per target (%lld groups)\n",
                static_cast<long long>(groups));
    json j = json::object();
    for (const auto &[k, share] : per_target) {
      std::printf("  %-22s %s\n", k.c_str(), Share(share).c_str());
      j[k] = ToJson(share);
    }
    report["diagnoses_per_target"] = {{"groups", groups}, {"distribution", j}};
  }
  WriteReport(options, report);
  return kExitOk;
}

ReliabilityData WithoutNotApplicable(const ReliabilityData &data) {
  ReliabilityData out;
  for (const ReliabilityItem &item : data.items) {
    bool has_na = false;
    for (const auto &[annotator, value] : item.ratings) {
      has_na |= value == kNotApplicable;
    }
    if (!has_na) out.items.push_back(item);
  }
  return out;
}

int RunAgreement(const Options &options, bool overlap_only,
                 const std::string &adjudication_flag) {
  std::filesystem::path dir = CorpusDir(options);
  Corpus corpus = LoadCorpus(dir);
  ReliabilityData data = TemplateSelectionData(corpus, overlap_only);
  json report = {{"corpus", corpus.manifest().name},
                 {"overlap_only", overlap_only}};

  ReliabilityData paired;
  for (const ReliabilityItem &item : data.items) {
    if (item.ratings.size() >= 2) paired.items.push_back(item);
  }
  KappaResult kappa = CohenKappa(paired);
  std::printf("template selection: %lld items rated by both annotators\n",
              static_cast<long long>(kappa.items));
  std::printf("  Cohen's kappa     %s (p_o %s, p_e %s)\n",
              Fixed(kappa.kappa, 3).c_str(), Fixed(kappa.observed).c_str(),
              Fixed(kappa.chance).c_str());
  report["kappa"] = ToJson(kappa);
  report["kappa"]["includes_not_applicable"] = true;

  ReliabilityData without_na = WithoutNotApplicable(paired);
  try {
    KappaResult k = CohenKappa(without_na);
    std::printf("  without NotApplicable items: kappa %s over %lld items\n",
                Fixed(k.kappa, 3).c_str(), static_cast<long long>(k.items));
    report["kappa_without_not_applicable"] = ToJson(k);
  } catch (const Error &e) {
    std::printf("  without NotApplicable items: %s\n", e.what());
    report["kappa_without_not_applicable"] = nullptr;
  }
  if (!overlap_only) {
    AlphaResult alpha = KrippendorffAlpha(data, Distance::kNominal);
    std::printf("  nominal alpha     %s over %lld units\n",
                Fixed(alpha.alpha, 3).c_str(),
                static_cast<long long>(alpha.units));
    report["nominal_alpha"] = ToJson(alpha);
  }

  std::filesystem::path adjudication = adjudication_flag;
  if (adjudication.empty()) {
    auto it = corpus.manifest().files.find("slot_adjudication");
    if (it != corpus.manifest().files.end()) adjudication = dir / it->second;
  }
  if (!adjudication.empty()) {
    Fraction slots = PercentAgreement(LoadReliabilityFile(adjudication));
    std::printf("slot filling: %s of agreed slots judged the same\n",
                Share(slots).c_str());
    report["slot_agreement"] = ToJson(slots);
  }
  WriteReport(options, report);
  return kExitOk;
}

int RunInformativeness(const Options &options) {
  Corpus corpus = LoadCorpus(CorpusDir(options));
  int64_t items = 0;
  std::map<std::string, Fraction> shares =
      InformativenessShares(corpus, &items);
  AlphaResult alpha = KrippendorffAlpha(InformativenessData(corpus),
                                        Distance::kOrdinal, {"1", "2", "3"});
  std::printf("informativeness: %lld templated diagnoses, %zu judgments\n",
              static_cast<long long>(items), corpus.judgments().size());
  json distribution = json::object();
  for (auto it = shares.rbegin(); it != shares.rend(); ++it) {
    std::printf("  score %s  %s\n", it->first.c_str(),
                Share(it->second).c_str());
    distribution[it->first] = ToJson(it->second);
  }
  std::printf("  ordinal Krippendorff's alpha %s\n",
              Fixed(alpha.alpha, 3).c_str());
  WriteReport(options, {{"corpus", corpus.manifest().name},
                        {"items", items},
                        {"distribution", distribution},
                        {"ordinal_alpha", ToJson(alpha)}});
  return kExitOk;
}

int RunEval(const Options &options, BenchmarkOptions bench) {
  Corpus corpus = LoadCorpus(CorpusDir(options));
  if (!options.tokenizer.empty()) bench.tokenizer = options.tokenizer;
  BenchmarkReport report = RunBenchmark(corpus, bench);
  std::cout << FormatTable(report);
  WriteReport(options, ToJson(report, corpus.templates()));
  return kExitOk;
}

TemplateSet LoadTemplatesFor(const Options &options,
                             const std::string &templates_path) {
  if (!templates_path.empty()) return LoadTemplateSetFile(templates_path);
  if (!options.corpus.empty()) return LoadCorpus(options.corpus).templates();
  return LoadTemplateSetFile(DefaultTemplatesPath());
}

int RunRender(const Options &options, const std::string &templates_path,
              const std::string &id, const std::string &locale,
              const std::map<std::string, std::string> &slots) {
  TemplateSet set = LoadTemplatesFor(options, templates_path);
  FillerMap fillers;
  for (const auto &[slot, text] : slots) {
    if (!text.empty()) fillers[slot] = text;
  }
  std::string rendered = Render(set.Get(id), locale, fillers);
  std::cout << rendered << "\n";
  WriteReport(options, {{"template", id},
                        {"locale", locale},
                        {"fillers", fillers},
                        {"rendered", rendered}});
  return kExitOk;
}

int RunServe(const std::string &host, int port, const std::string &log,
             const std::string &admin_token, const std::string &templates) {
  AnnotationService service(log);
  TemplateSet set = LoadTemplateSetFile(
      templates.empty() ? DefaultTemplatesPath()
                        : std::filesystem::path(templates));
  HttpApi api(service, TemplateSetToJson(set), admin_token);
  std::fprintf(stderr, "serving on http://%s:%d/api/v1\n", host.c_str(), port);
  if (!api.Listen(host, port)) {
    throw Error(ErrorCode::kIoError, "cannot listen on " + host + ":" +
                                         std::to_string(port));
  }
  return kExitOk;
}

int RunExport(const std::string &log, const std::string &project,
              const std::string &dir) {
  AnnotationService service(log);
  service.Export(project, dir);
  std::cout << "exported " << project << " to " << dir << "\n";
  return kExitOk;
}

int RunPlotData(const Options &options, const std::string &kind) {
  Corpus corpus = LoadCorpus(CorpusDir(options));
  std::string tsv;
  if (kind == "informativeness") {
    int64_t items = 0;
    tsv = DistributionTsv("score", InformativenessShares(corpus, &items));
  } else if (kind == "templates") {
    tsv = DistributionTsv("label", TemplateDistribution(corpus.diagnoses()));
  } else if (kind == "extractability") {
    tsv = DistributionTsv("extractability", ExtractabilityShares(corpus));
  } else if (kind == "per-target") {
    int64_t groups = 0;
    tsv = DistributionTsv("templates", PerTargetShares(corpus, &groups));
  } else {
    throw UsageError("unknown plot-data kind " + kind);
  }
  if (options.out.empty()) {
    std::cout << tsv;
  } else {
    WriteText(options.out, tsv);
  }
  return kExitOk;
}

int Main(int argc, char **argv) {
  CLI::App app{"TYPIC toolkit: templated diagnostic comments on arguments"};
  app.require_subcommand(1);
  Options options;
  app.add_option("--corpus", options.corpus, "Corpus directory")
      ->envname("TYPIC_CORPUS_DIR");
  app.add_option("--out", options.out, "Write a structured report here");
  app.add_option("--tokenizer", options.tokenizer,
                 "Tokenizer id (default: the corpus manifest's)");

  std::string templates_path;
  auto *validate = app.add_subcommand("validate", "Check a corpus directory");
  validate->add_option("--templates", templates_path,
                       "Check a template-set file instead");

  auto *stats = app.add_subcommand("stats", "Corpus statistics and analyses");

  bool overlap_only = false;
  std::string adjudication;
  auto *agreement =
      app.add_subcommand("agreement", "Template-selection agreement");
  agreement->add_flag("--overlap-only", overlap_only,
                      "Only double-annotated comments");
  agreement->add_option("--adjudication", adjudication,
                        "Slot adjudication file (reliability JSON Lines)");

  auto *informativeness = app.add_subcommand(
      "informativeness", "Aggregated judgments and worker agreement");

  BenchmarkOptions bench;
  auto *eval = app.add_subcommand("eval", "Run the baseline benchmark");
  eval->add_option("--model", bench.models, "Models to run")
      ->check(CLI::IsMember(AvailableModels()));
  eval->add_option("--k", bench.majority_k, "Labels predicted by majority")
      ->check(CLI::PositiveNumber);
  eval->add_option("--knn-k", bench.knn_k, "Neighbours used by knn")
      ->check(CLI::PositiveNumber);
  eval->add_option("--ngram", bench.ngram, "Slot overlap n-gram order")
      ->check(CLI::PositiveNumber);
  eval->add_option("--seed", bench.seed, "Split seed without a stored split");
  eval->add_option("--dev-ratio", bench.dev_ratio,
                   "Dev share without a stored split")
      ->check(CLI::Range(0.0, 1.0));

  std::string template_id, locale = "en";
  std::map<std::string, std::string> slots;
  auto *render = app.add_subcommand("render", "Render a template");
  render->add_option("--template", template_id, "Template id")->required();
  render->add_option("--locale", locale, "Surface-form locale");
  render->add_option("--templates", templates_path, "Template-set file");
  render->add_option("-x", slots["x"], "Filler of slot x");
  render->add_option("-y", slots["y"], "Filler of slot y");
  render->add_option("-z", slots["z"], "Filler of slot z");

  std::string host = "127.0.0.1", log, admin_token, project, export_dir;
  int port = 8080;
  auto *serve = app.add_subcommand("serve", "Run the annotation service");
  serve->add_option("--host", host, "Bind address");
  serve->add_option("--port", port, "Port")->check(CLI::Range(0, 65535));
  serve->add_option("--log", log, "Event log file")->required();
  serve->add_option("--admin-token", admin_token,
                    "Token required for project and export routes")
      ->envname("TYPIC_ADMIN_TOKEN");
  serve->add_option("--templates", templates_path,
                    "Template set served at /api/v1/templates");

  auto *export_cmd =
      app.add_subcommand("export", "Export a project as corpus files");
  export_cmd->add_option("--log", log, "Event log file")->required();
  export_cmd->add_option("--project", project, "Project id")->required();
  export_cmd->add_option("--dir", export_dir, "Output directory")->required();

  std::string kind;
  auto *plot = app.add_subcommand("plot-data", "Histogram tables as TSV");
  plot->add_option("kind", kind,
                   "informativeness | templates | extractability | "
                   "per-target")
      ->required()
      ->check(CLI::IsMember(
          {"informativeness", "templates", "extractability", "per-target"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*validate) return RunValidate(options, templates_path);
    if (*stats) return RunStats(options);
    if (*agreement) return RunAgreement(options, overlap_only, adjudication);
    if (*informativeness) return RunInformativeness(options);
    if (*eval) return RunEval(options, bench);
    if (*render) {
      return RunRender(options, templates_path, template_id, locale, slots);
    }
    if (*serve) return RunServe(host, port, log, admin_token, templates_path);
    if (*export_cmd) return RunExport(log, project, export_dir);
    if (*plot) return RunPlotData(options, kind);
  } catch (const UsageError &e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error &e) {
    std::cerr << "error: " << ErrorCodeName(e.code()) << ": " << e.what()
              << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace
}  // namespace typic

int main(int argc, char **argv) { return typic::Main(argc, argv); }
