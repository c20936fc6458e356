// Copyright 2026 The brex Authors.
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

#include "brex/pipeline.h"

#include <openssl/evp.h>

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "brex/error.h"
#include "brex/evaluate.h"
#include "brex/scoring.h"
#include "json.hpp"

namespace brex {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;
using nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Configuration

double ParseNumber(const std::string &key, const std::string &value) {
  double out = 0.0;
  auto [ptr, ec] =
      std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    throw UsageError(key + ": '" + value + "' is not a number");
  }
  return out;
}

int ParseInt(const std::string &key, const std::string &value) {
  int out = 0;
  auto [ptr, ec] =
      std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    throw UsageError(key + ": '" + value + "' is not an integer");
  }
  return out;
}

bool ParseBool(const std::string &key, const std::string &value) {
  if (value == "true" || value == "1" || value == "on") return true;
  if (value == "false" || value == "0" || value == "off") return false;
  throw UsageError(key + ": '" + value + "' is not a boolean");
}

using Setter = std::function<void(RunConfig &, const std::string &)>;

struct Key {
  const char *name;
  std::string RunOptions::*field;
  Setter set;
};

const std::vector<Key> &Keys() {
  static const std::vector<Key> keys = {
      {"mode", &RunOptions::mode,
       [](RunConfig &c, const std::string &v) {
         auto m = ParseMode(v);
         if (!m) {
           throw UsageError("unknown mode '" + v +
                            "'; valid values: bree, bret, brej");
         }
         c.mode = *m;
       }},
      {"sim", &RunOptions::sim,
       [](RunConfig &c, const std::string &v) {
         auto k = ParseKind(v);
         if (!k) {
           throw UsageError("unknown similarity '" + v +
                            "'; valid values: match, cc-asym, cc-sym1, "
                            "cc-sym2");
         }
         c.measure.kind = *k;
       }},
      {"tau-sim", &RunOptions::tau_sim,
       [](RunConfig &c, const std::string &v) {
         c.tau_sim = ParseNumber("tau-sim", v);
       }},
      {"tau-cnf", &RunOptions::tau_cnf,
       [](RunConfig &c, const std::string &v) {
         c.tau_cnf = ParseNumber("tau-cnf", v);
       }},
      {"wn", &RunOptions::wn,
       [](RunConfig &c, const std::string &v) {
         c.w_neg = ParseNumber("wn", v);
       }},
      {"wu", &RunOptions::wu,
       [](RunConfig &c, const std::string &v) {
         c.w_unknown = ParseNumber("wu", v);
       }},
      {"iters", &RunOptions::iters,
       [](RunConfig &c, const std::string &v) {
         c.iterations = ParseInt("iters", v);
       }},
      {"pairing", &RunOptions::pairing,
       [](RunConfig &c, const std::string &v) {
         auto p = ParsePairing(v);
         if (!p) {
           throw UsageError("unknown pairing '" + v +
                            "'; valid values: ordered, biset");
         }
         c.pairing = *p;
       }},
      {"max-before", &RunOptions::max_before,
       [](RunConfig &c, const std::string &v) {
         c.limits.max_before = ParseInt("max-before", v);
       }},
      {"max-between", &RunOptions::max_between,
       [](RunConfig &c, const std::string &v) {
         c.limits.max_between = ParseInt("max-between", v);
       }},
      {"max-after", &RunOptions::max_after,
       [](RunConfig &c, const std::string &v) {
         c.limits.max_after = ParseInt("max-after", v);
       }},
      {"w-before", &RunOptions::w_before,
       [](RunConfig &c, const std::string &v) {
         c.measure.weights[0] = ParseNumber("w-before", v);
       }},
      {"w-between", &RunOptions::w_between,
       [](RunConfig &c, const std::string &v) {
         c.measure.weights[1] = ParseNumber("w-between", v);
       }},
      {"w-after", &RunOptions::w_after,
       [](RunConfig &c, const std::string &v) {
         c.measure.weights[2] = ParseNumber("w-after", v);
       }},
      {"threshold", &RunOptions::threshold,
       [](RunConfig &c, const std::string &v) {
         c.output_threshold = ParseNumber("threshold", v);
       }},
      {"score-against", &RunOptions::score_against,
       [](RunConfig &c, const std::string &v) {
         auto s = ParseScoreAgainst(v);
         if (!s) {
           throw UsageError("unknown score-against '" + v +
                            "'; valid values: yield, original");
         }
         c.score_against = *s;
       }},
      {"threads", &RunOptions::threads,
       [](RunConfig &c, const std::string &v) {
         int t = ParseInt("threads", v);
         if (t < 0) throw UsageError("threads must be >= 0");
         c.threads = static_cast<unsigned>(t);
       }},
      {"passive", &RunOptions::passive,
       [](RunConfig &c, const std::string &v) {
         c.reorder_passive = ParseBool("passive", v);
       }},
  };
  return keys;
}

std::string ReadText(const std::string &path, const char *what) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path, 0, std::string("cannot open ") + what);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string JsonScalar(const json &v) {
  return v.is_string() ? v.get<std::string>() : v.dump();
}

void ApplyConfigFile(const std::string &path, RunConfig &cfg) {
  json doc;
  try {
    doc = json::parse(ReadText(path, "config file"));
  } catch (const json::parse_error &e) {
    throw InputError(path, 0, std::string("malformed config: ") + e.what());
  }
  if (!doc.is_object()) throw InputError(path, 0, "config must be an object");
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    std::string key = it.key();
    std::replace(key.begin(), key.end(), '_', '-');
    auto k = std::find_if(Keys().begin(), Keys().end(),
                          [&](const Key &c) { return key == c.name; });
    if (k == Keys().end()) {
      throw UsageError("config file " + path + ": unknown key '" + it.key() +
                       "'");
    }
    k->set(cfg, JsonScalar(it.value()));
  }
}

ordered_json ConfigJson(const RunConfig &cfg) {
  ordered_json j;
  j["mode"] = ModeName(cfg.mode);
  j["sim"] = KindName(cfg.measure.kind);
  j["weights"] = {cfg.measure.weights[0], cfg.measure.weights[1],
                  cfg.measure.weights[2]};
  j["tau_sim"] = cfg.tau_sim;
  j["tau_cnf"] = cfg.tau_cnf;
  j["wn"] = cfg.w_neg;
  j["wu"] = cfg.w_unknown;
  j["iters"] = cfg.iterations;
  j["pairing"] = PairingName(cfg.pairing);
  j["max_before"] = cfg.limits.max_before;
  j["max_between"] = cfg.limits.max_between;
  j["max_after"] = cfg.limits.max_after;
  j["threshold"] = cfg.output_threshold;
  j["score_against"] = ScoreAgainstName(cfg.score_against);
  j["passive"] = cfg.reorder_passive;
  return j;
}

void AddRunOptions(CLI::App *app, RunOptions *o) {
  app->add_option("--config", o->config, "JSON config file");
  app->add_option("--mode", o->mode, "bree | bret | brej (default brej)");
  app->add_option("--sim", o->sim,
                  "match | cc-asym | cc-sym1 | cc-sym2 (default cc-asym)");
  app->add_option("--tau-sim", o->tau_sim, "similarity threshold (0.7)");
  app->add_option("--tau-cnf", o->tau_cnf, "confidence threshold (0.7)");
  app->add_option("--wn", o->wn, "weight of negative hits (0.5)");
  app->add_option("--wu", o->wu, "weight of unknown members (0.0001)");
  app->add_option("--iters", o->iters, "bootstrapping iterations (3)");
  app->add_option("--pairing", o->pairing, "ordered | biset (ordered)");
  app->add_option("--max-before", o->max_before, "before window (2)");
  app->add_option("--max-between", o->max_between, "between window (6)");
  app->add_option("--max-after", o->max_after, "after window (2)");
  app->add_option("--w-before", o->w_before, "match weight, before (0.2)");
  app->add_option("--w-between", o->w_between, "match weight, between (0.6)");
  app->add_option("--w-after", o->w_after, "match weight, after (0.2)");
  app->add_option("--threshold", o->threshold,
                  "evaluation confidence threshold (0.5)");
  app->add_option("--score-against", o->score_against,
                  "yield | original (yield)");
  app->add_option("--threads", o->threads, "worker threads, 0 = all cores");
  app->add_option("--passive", o->passive,
                  "reorder passive-voice output pairs (true)");
}

// ---------------------------------------------------------------------------
// Files

std::string Sha256File(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return "";
  EVP_MD_CTX *ctx = EVP_MD_CTX_new();
  EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr);
  char buf[1 << 16];
  while (in) {
    in.read(buf, sizeof(buf));
    EVP_DigestUpdate(ctx, buf, static_cast<std::size_t>(in.gcount()));
  }
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_DigestFinal_ex(ctx, digest, &len);
  EVP_MD_CTX_free(ctx);
  std::ostringstream hex;
  for (unsigned int k = 0; k < len; ++k) {
    hex << std::hex << std::setw(2) << std::setfill('0')
        << static_cast<int>(digest[k]);
  }
  return hex.str();
}

void WriteText(const fs::path &path, const std::string &text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

std::string Fixed(double v, int digits = 4) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}

std::string Join(const std::vector<std::string> &tokens) {
  std::string out;
  for (const std::string &t : tokens) {
    if (!out.empty()) out += ' ';
    out += t;
  }
  return out;
}

ordered_json StatsJson(const IterationStats &s) {
  ordered_json j;
  j["iteration"] = s.iteration;
  j["hits"] = s.hits;
  j["clusters"] = s.clusters;
  j["extractors"] = s.extractors;
  j["candidates"] = s.candidates;
  j["accepted"] = s.accepted;
  j["yield_pairs"] = s.yield_pairs;
  j["yield_templates"] = s.yield_templates;
  return j;
}

ordered_json ReportJson(const PrecisionRecall &r, const GoldKB &gold,
                        double threshold) {
  ordered_json j;
  j["relation"] = gold.relation();
  j["threshold"] = threshold;
  j["out"] = r.out_count;
  j["correct"] = r.correct;
  j["gold"] = gold.size();
  j["precision"] = r.precision;
  j["recall"] = r.recall;
  j["f1"] = r.f1;
  return j;
}

std::string ReportTable(const PrecisionRecall &r, const GoldKB &gold) {
  std::ostringstream t;
  t << std::left << std::setw(16) << "relation" << std::right
    << std::setw(8) << "#out" << std::setw(8) << "P" << std::setw(8) << "R"
    << std::setw(8) << "F1" << "\n";
  t << std::left << std::setw(16)
    << (gold.relation().empty() ? "-" : gold.relation()) << std::right
    << std::setw(8) << r.out_count << std::setw(8) << Fixed(r.precision, 2)
    << std::setw(8) << Fixed(r.recall, 2) << std::setw(8) << Fixed(r.f1, 2)
    << "\n";
  return t.str();
}

std::vector<ScoredPair> ReadAccepted(const fs::path &path,
                                     std::string *relation) {
  std::string text = ReadText(path.string(), "accepted file");
  std::vector<ScoredPair> out;
  std::istringstream in(text);
  std::size_t line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (line.empty()) continue;
    try {
      json j = json::parse(line);
      ScoredPair s;
      s.pair.e1 = {j.at("e1").get<std::string>(),
                   j.value("e1_type", std::string())};
      s.pair.e2 = {j.at("e2").get<std::string>(),
                   j.value("e2_type", std::string())};
      s.confidence = j.at("confidence").get<double>();
      if (relation != nullptr && relation->empty()) {
        *relation = j.value("relation", std::string());
      }
      out.push_back(std::move(s));
    } catch (const json::exception &e) {
      throw InputError(path.string(), line_no, e.what());
    }
  }
  return out;
}

std::optional<json> ReadManifest(const fs::path &run_dir) {
  fs::path p = run_dir / "manifest.json";
  if (!fs::exists(p)) return std::nullopt;
  try {
    return json::parse(ReadText(p.string(), "manifest"));
  } catch (const json::exception &) {
    return std::nullopt;
  }
}

int ExitCodeFor(const std::exception_ptr &e, std::string *message) {
  try {
    std::rethrow_exception(e);
  } catch (const UsageError &u) {
    *message = u.what();
    return kExitUsage;
  } catch (const InputError &i) {
    *message = i.what();
    return kExitInput;
  } catch (const std::exception &x) {
    *message = x.what();
    return kExitRuntime;
  }
}

// ---------------------------------------------------------------------------
// Subcommands

int RunStats(const std::string &run_dir, const std::string &labels_path,
             const std::string &tau_cnf_flag, const std::string &out_path,
             std::ostream &out) {
  fs::path dir(run_dir);
  std::string text =
      ReadText((dir / "extractors.jsonl").string(), "extractor dump");
  std::vector<ExtractorSummary> summaries;
  std::istringstream in(text);
  std::size_t line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (line.empty()) continue;
    try {
      json j = json::parse(line);
      summaries.push_back({j.at("signature").get<std::string>(),
                           j.at("size").get<std::size_t>(),
                           j.at("n_pos").get<double>(),
                           j.at("n_neg").get<double>(),
                           j.at("confidence").get<double>()});
    } catch (const json::exception &e) {
      throw InputError((dir / "extractors.jsonl").string(), line_no, e.what());
    }
  }

  double tau_cnf = 0.7;
  if (auto m = ReadManifest(dir); m && m->contains("config")) {
    tau_cnf = (*m)["config"].value("tau_cnf", tau_cnf);
  }
  if (!tau_cnf_flag.empty()) tau_cnf = ParseNumber("tau-cnf", tau_cnf_flag);

  NoiseLabels labels;
  const NoiseLabels *label_ptr = nullptr;
  if (!labels_path.empty()) {
    labels = LoadNoiseLabels(labels_path);
    label_ptr = &labels;
  }
  ExtractorStats s = ComputeExtractorStats(summaries, label_ptr);

  ordered_json j;
  j["count"] = s.count;
  j["aie"] = s.aie;
  j["aes"] = s.aes;
  auto opt = [](const std::optional<double> &v) {
    return v ? ordered_json(*v) : ordered_json(nullptr);
  };
  j["ane"] = opt(s.ane);
  j["anne"] = opt(s.anne);
  j["annlc"] = opt(s.annlc);
  j["ap"] = s.ap;
  j["an"] = s.an;
  j["anp"] = opt(s.anp);
  if (label_ptr != nullptr) {
    std::map<std::string, std::size_t> cats = {
        {"NNHC", 0}, {"NNLC", 0}, {"NHC", 0}, {"NLC", 0}};
    RunConfig cfg;
    cfg.tau_cnf = tau_cnf;
    for (const ExtractorSummary &e : summaries) {
      auto it = labels.find(e.signature);
      if (it == labels.end()) continue;
      Extractor probe;
      probe.confidence = e.confidence;
      auto c = CategorizeExtractor(probe, it->second, cfg);
      if (c) ++cats[std::string(CategoryName(*c))];
    }
    j["categories"] = cats;
  }

  auto cell = [](const std::optional<double> &v) {
    return v ? Fixed(*v, 2) : std::string("-");
  };
  std::ostringstream t;
  t << std::right << std::setw(6) << "|L|" << std::setw(9) << "AIE"
    << std::setw(7) << "AES" << std::setw(7) << "ANE" << std::setw(7)
    << "ANNE" << std::setw(7) << "ANNLC" << std::setw(9) << "AP"
    << std::setw(9) << "AN" << std::setw(7) << "ANP" << "\n";
  t << std::setw(6) << s.count << std::setw(9) << Fixed(s.aie, 1)
    << std::setw(7) << Fixed(s.aes, 2) << std::setw(7) << cell(s.ane)
    << std::setw(7) << cell(s.anne) << std::setw(7) << cell(s.annlc)
    << std::setw(9) << Fixed(s.ap, 1) << std::setw(9) << Fixed(s.an, 1)
    << std::setw(7) << cell(s.anp) << "\n";
  out << t.str();

  fs::path target =
      out_path.empty() ? dir / "extractor_stats.json" : fs::path(out_path);
  WriteText(target, j.dump(2) + "\n");
  return kExitOk;
}

int RunHits(const RunConfig &cfg, const std::string &corpus_path,
            const std::string &emb_path, const std::string &seeds_path,
            const std::string &out_path, std::ostream &out) {
  SeedSpec spec = LoadSeedSpec(seeds_path);
  EmbeddingStore emb = LoadEmbeddings(emb_path);
  CorpusLoad corpus =
      LoadCorpus(corpus_path, {spec.types.first, spec.types.second});
  ExtractionResult ex =
      ExtractInstances(corpus.sentences, emb, cfg.limits, spec.types);
  SeedState seeds = BuildSeedState(spec, emb, cfg.pairing);
  HitCount h = CountHits(ex.instances, seeds, cfg);

  out << std::left << std::setw(16) << "relation" << std::right
      << std::setw(8) << "E" << std::setw(8) << "T" << std::setw(8) << "J"
      << "\n";
  out << std::left << std::setw(16) << spec.relation << std::right
      << std::setw(8) << h.by_pair << std::setw(8) << h.by_template
      << std::setw(8) << h.either << "\n";
  if (!out_path.empty()) {
    ordered_json j;
    j["relation"] = spec.relation;
    j["by_pair"] = h.by_pair;
    j["by_template"] = h.by_template;
    j["either"] = h.either;
    j["overlap"] = h.by_pair + h.by_template - h.either;
    WriteText(out_path, j.dump(2) + "\n");
  }
  return kExitOk;
}

std::vector<std::string> SplitList(const std::string &value) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : value) {
    if (c == ',') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

int RunSweep(const RunOptions &base, const RunPaths &paths, std::ostream &log) {
  // Fields that may carry comma-separated lists.
  const std::vector<std::pair<const char *, std::string RunOptions::*>>
      sweepable = {{"mode", &RunOptions::mode},
                   {"sim", &RunOptions::sim},
                   {"tau-sim", &RunOptions::tau_sim},
                   {"tau-cnf", &RunOptions::tau_cnf},
                   {"wn", &RunOptions::wn},
                   {"wu", &RunOptions::wu},
                   {"iters", &RunOptions::iters},
                   {"pairing", &RunOptions::pairing}};
  std::vector<std::pair<std::size_t, std::vector<std::string>>> axes;
  for (std::size_t k = 0; k < sweepable.size(); ++k) {
    const std::string &v = base.*(sweepable[k].second);
    if (v.find(',') != std::string::npos) axes.emplace_back(k, SplitList(v));
  }

  std::size_t cells = 1;
  for (const auto &axis : axes) cells *= axis.second.size();
  // Validate every cell before running any of them.
  std::vector<std::pair<RunOptions, std::string>> plan;
  for (std::size_t c = 0; c < cells; ++c) {
    RunOptions o = base;
    std::string name;
    std::size_t rest = c;
    for (const auto &[field, values] : axes) {
      const std::string &v = values[rest % values.size()];
      rest /= values.size();
      o.*(sweepable[field].second) = v;
      if (!name.empty()) name += '_';
      name += std::string(sweepable[field].first) + "=" + v;
    }
    if (name.empty()) name = "default";
    ResolveConfig(o);
    plan.emplace_back(std::move(o), std::move(name));
  }

  fs::create_directories(paths.out_dir);
  ordered_json summary = ordered_json::array();
  int worst = kExitOk;
  for (const auto &[options, name] : plan) {
    RunPaths cell = paths;
    cell.out_dir = (fs::path(paths.out_dir) / name).string();
    log << "sweep cell " << name << "\n";
    int rc = RunPipeline(ResolveConfig(options), cell, log);
    worst = std::max(worst, rc);
    ordered_json entry;
    entry["cell"] = name;
    entry["dir"] = cell.out_dir;
    entry["exit"] = rc;
    fs::path report = fs::path(cell.out_dir) / "report.json";
    if (fs::exists(report)) {
      entry["report"] = json::parse(ReadText(report.string(), "report"));
    }
    summary.push_back(entry);
  }
  WriteText(fs::path(paths.out_dir) / "sweep.json", summary.dump(2) + "\n");
  return worst;
}

}  // namespace

RunConfig ResolveConfig(const RunOptions &options) {
  RunConfig cfg;
  if (!options.config.empty()) ApplyConfigFile(options.config, cfg);
  for (const Key &k : Keys()) {
    const std::string &v = options.*(k.field);
    if (!v.empty()) k.set(cfg, v);
  }
  ValidateConfig(cfg);
  return cfg;
}

RunConfig ParseConfigArgs(const std::vector<std::string> &args) {
  CLI::App app("brex run options");
  RunOptions options;
  AddRunOptions(&app, &options);
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    throw UsageError(e.what());
  }
  return ResolveConfig(options);
}

int RunPipeline(const RunConfig &cfg, const RunPaths &paths,
                std::ostream &log) {
  const fs::path out_dir(paths.out_dir);
  ordered_json manifest;
  manifest["tool"] = "brex";
  manifest["version"] = kVersion;
  manifest["config"] = ConfigJson(cfg);
  ordered_json inputs;
  for (const auto &[name, path] :
       std::vector<std::pair<std::string, std::string>>{
           {"corpus", paths.corpus},
           {"embeddings", paths.embeddings},
           {"seeds", paths.seeds},
           {"gold", paths.gold}}) {
    if (path.empty()) continue;
    ordered_json entry;
    entry["path"] = path;
    std::string digest = Sha256File(path);
    entry["sha256"] = digest.empty() ? ordered_json(nullptr) : ordered_json(digest);
    inputs[name] = entry;
  }
  manifest["inputs"] = inputs;

  int rc = kExitOk;
  std::string error;
  try {
    fs::create_directories(out_dir);
  } catch (const fs::filesystem_error &e) {
    log << "error: " << e.what() << "\n";
    return kExitRuntime;
  }

  try {
    ValidateConfig(cfg);
    SeedSpec spec = LoadSeedSpec(paths.seeds);
    EmbeddingStore emb = LoadEmbeddings(paths.embeddings);
    CorpusLoad corpus =
        LoadCorpus(paths.corpus, {spec.types.first, spec.types.second});
    ExtractionResult ex =
        ExtractInstances(corpus.sentences, emb, cfg.limits, spec.types);
    SeedState seeds = BuildSeedState(spec, emb, cfg.pairing);
    log << "ingested " << corpus.sentences.size() << " sentences, "
        << ex.instances.size() << " instances (" << ex.skipped
        << " pairs over the between limit)\n";

    BootstrapResult result = Bootstrap(ex.instances, seeds, cfg);
    if (!result.diagnostic.empty()) log << "note: " << result.diagnostic << "\n";

    std::map<std::size_t, const TaggedSentence *> by_ref;
    for (const TaggedSentence &s : corpus.sentences) by_ref[s.ref] = &s;

    std::string accepted_text;
    std::vector<ScoredPair> scored;
    for (const AcceptedInstance &a : result.accepted) {
      Instance inst = *a.instance;
      if (cfg.reorder_passive) {
        inst = ReorderPassive(inst, by_ref.at(inst.sentence_ref)->pos);
      }
      ordered_json j;
      j["relation"] = spec.relation;
      j["e1"] = inst.pair.e1.surface;
      j["e2"] = inst.pair.e2.surface;
      j["e1_type"] = inst.pair.e1.type;
      j["e2_type"] = inst.pair.e2.type;
      j["confidence"] = a.confidence;
      j["sentence_ref"] = inst.sentence_ref;
      accepted_text += j.dump() + "\n";
      scored.push_back({inst.pair, a.confidence});
    }
    WriteText(out_dir / "accepted.jsonl", accepted_text);

    std::string extractor_text;
    for (const Extractor &e : result.extractors) {
      ordered_json j;
      j["id"] = e.id;
      j["size"] = e.size();
      j["n_pos"] = e.n_pos;
      j["n_neg"] = e.n_neg;
      j["n_unknown"] = e.n_unknown;
      j["confidence"] = e.confidence;
      std::vector<std::string> samples;
      for (const Instance *m : e.members) {
        std::string between = Join(m->tokens_between);
        if (std::find(samples.begin(), samples.end(), between) ==
            samples.end()) {
          samples.push_back(between);
        }
        if (samples.size() == 3) break;
      }
      j["sample_between_contexts"] = samples;
      j["signature"] = ExtractorSignature(e);
      std::vector<std::size_t> ids;
      for (const Instance *m : e.members) ids.push_back(m->id);
      j["members"] = ids;
      extractor_text += j.dump() + "\n";
    }
    WriteText(out_dir / "extractors.jsonl", extractor_text);

    ordered_json stats;
    stats["relation"] = spec.relation;
    stats["sentences"] = corpus.sentences.size();
    stats["instances"] = ex.instances.size();
    stats["skipped_pairs"] = ex.skipped;
    stats["dropped_entities"] = corpus.dropped_entities;
    stats["rejected_records"] = corpus.rejected_records;
    stats["diagnostic"] = result.diagnostic;
    ordered_json iters = ordered_json::array();
    for (const IterationStats &s : result.iterations) iters.push_back(StatsJson(s));
    stats["iterations"] = iters;
    stats["accepted"] = result.accepted.size();
    WriteText(out_dir / "stats.json", stats.dump(2) + "\n");
    manifest["iterations"] = iters;

    if (!paths.gold.empty()) {
      GoldKB gold = LoadGold(paths.gold, cfg.pairing, spec.relation);
      PrecisionRecall r = Prf1(scored, gold, cfg.output_threshold);
      WriteText(out_dir / "report.json",
                ReportJson(r, gold, cfg.output_threshold).dump(2) + "\n");
      WriteText(out_dir / "report.txt", ReportTable(r, gold));
      log << ReportTable(r, gold);
    }
    log << "accepted " << result.accepted.size() << " instances -> "
        << out_dir.string() << "\n";
  } catch (...) {
    rc = ExitCodeFor(std::current_exception(), &error);
    log << "error: " << error << "\n";
  }

  manifest["status"] = rc == kExitOk ? "ok" : "failed";
  manifest["exit_code"] = rc;
  if (!error.empty()) manifest["error"] = error;
  try {
    WriteText(out_dir / "manifest.json", manifest.dump(2) + "\n");
  } catch (const std::exception &e) {
    log << "error: " << e.what() << "\n";
    if (rc == kExitOk) rc = kExitRuntime;
  }
  return rc;
}

int EvaluateRun(const std::string &run_dir, const std::string &gold_path,
                double threshold, std::optional<Pairing> pairing,
                const std::string &out_dir, std::ostream &log) {
  fs::path dir(run_dir);
  if (!pairing) {
    pairing = Pairing::kOrdered;
    if (auto m = ReadManifest(dir); m && m->contains("config")) {
      auto p = ParsePairing((*m)["config"].value("pairing", "ordered"));
      if (p) pairing = *p;
    }
  }
  std::string relation;
  std::vector<ScoredPair> scored =
      ReadAccepted(dir / "accepted.jsonl", &relation);
  GoldKB gold = LoadGold(gold_path, *pairing, relation);
  PrecisionRecall r = Prf1(scored, gold, threshold);
  fs::path target = out_dir.empty() ? dir : fs::path(out_dir);
  fs::create_directories(target);
  WriteText(target / "report.json", ReportJson(r, gold, threshold).dump(2) + "\n");
  WriteText(target / "report.txt", ReportTable(r, gold));
  log << ReportTable(r, gold);
  return kExitOk;
}

int Main(const std::vector<std::string> &args, std::ostream &out,
         std::ostream &err) {
  CLI::App app("brex: bootstrapping relation extraction");
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  RunOptions run_opts;
  RunPaths run_paths;
  CLI::App *run = app.add_subcommand("run", "bootstrap a relation");
  run->add_option("--corpus", run_paths.corpus, "tagged corpus (jsonl)")
      ->required();
  run->add_option("--embeddings", run_paths.embeddings,
                  "GloVe-style text vectors")
      ->required();
  run->add_option("--seeds", run_paths.seeds, "seed file (json)")->required();
  run->add_option("--out", run_paths.out_dir, "output directory")->required();
  run->add_option("--gold", run_paths.gold, "gold pairs for evaluation");
  AddRunOptions(run, &run_opts);

  RunOptions sweep_opts;
  RunPaths sweep_paths;
  CLI::App *sweep = app.add_subcommand(
      "sweep", "run a grid; list values as comma-separated, e.g. "
               "--tau-sim 0.6,0.7,0.8");
  sweep->add_option("--corpus", sweep_paths.corpus)->required();
  sweep->add_option("--embeddings", sweep_paths.embeddings)->required();
  sweep->add_option("--seeds", sweep_paths.seeds)->required();
  sweep->add_option("--out", sweep_paths.out_dir, "root output directory")
      ->required();
  sweep->add_option("--gold", sweep_paths.gold);
  AddRunOptions(sweep, &sweep_opts);

  std::string eval_run, eval_gold, eval_out, eval_pairing;
  double eval_threshold = 0.5;
  CLI::App *eval = app.add_subcommand("eval", "score a run against gold");
  eval->add_option("--run", eval_run, "run directory")->required();
  eval->add_option("--gold", eval_gold, "gold pairs, e1<TAB>e2")->required();
  eval->add_option("--threshold", eval_threshold, "confidence cut (0.5)");
  eval->add_option("--pairing", eval_pairing, "ordered | biset");
  eval->add_option("--out", eval_out, "report directory (run dir)");

  std::string stats_run, stats_labels, stats_tau, stats_out;
  CLI::App *stats = app.add_subcommand("stats", "extractor analytics");
  stats->add_option("--run", stats_run, "run directory")->required();
  stats->add_option("--labels", stats_labels,
                    "signature<TAB>noisy annotations");
  stats->add_option("--tau-cnf", stats_tau, "split for categories");
  stats->add_option("--out", stats_out, "report file");

  RunOptions hits_opts;
  RunPaths hits_paths;
  std::string hits_out;
  CLI::App *hits = app.add_subcommand("hits", "count seed hits at k_it = 1");
  hits->add_option("--corpus", hits_paths.corpus)->required();
  hits->add_option("--embeddings", hits_paths.embeddings)->required();
  hits->add_option("--seeds", hits_paths.seeds)->required();
  hits->add_option("--out", hits_out, "JSON report file");
  AddRunOptions(hits, &hits_opts);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*run) {
      return RunPipeline(ResolveConfig(run_opts), run_paths, err);
    }
    if (*sweep) return RunSweep(sweep_opts, sweep_paths, err);
    if (*eval) {
      std::optional<Pairing> pairing;
      if (!eval_pairing.empty()) {
        pairing = ParsePairing(eval_pairing);
        if (!pairing) throw UsageError("unknown pairing '" + eval_pairing + "'");
      }
      return EvaluateRun(eval_run, eval_gold, eval_threshold, pairing,
                         eval_out, out);
    }
    if (*stats) return RunStats(stats_run, stats_labels, stats_tau, stats_out, out);
    if (*hits) {
      return RunHits(ResolveConfig(hits_opts), hits_paths.corpus,
                     hits_paths.embeddings, hits_paths.seeds, hits_out, out);
    }
  } catch (...) {
    std::string message;
    int rc = ExitCodeFor(std::current_exception(), &message);
    err << "error: " << message << "\n";
    return rc;
  }
  return kExitUsage;
}

}  // namespace brex
