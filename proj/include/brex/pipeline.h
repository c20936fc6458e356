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

#ifndef BREX_PIPELINE_H_
#define BREX_PIPELINE_H_

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "brex/config.h"
#include "brex/corpus.h"
#include "brex/engine.h"

namespace brex {

inline constexpr const char *kVersion = "0.1.0";

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitRuntime = 3;

// Raw option values as given on the command line; an empty string means
// "not given". Every key may also appear in a JSON config file, spelled
// either with dashes or underscores.
struct RunOptions {
  std::string config;
  std::string mode;
  std::string sim;
  std::string tau_sim;
  std::string tau_cnf;
  std::string wn;
  std::string wu;
  std::string iters;
  std::string pairing;
  std::string max_before;
  std::string max_between;
  std::string max_after;
  std::string w_before;
  std::string w_between;
  std::string w_after;
  std::string threshold;
  std::string score_against;
  std::string threads;
  std::string passive;
};

// Defaults, then the config file, then explicit flags. Throws UsageError on
// unknown names, unparsable numbers or out-of-range values; InputError when
// the config file cannot be read.
RunConfig ResolveConfig(const RunOptions &options);

// Parses run-style flags (e.g. {"--mode", "bree", "--tau-sim", "0.8"}) into a
// validated config.
RunConfig ParseConfigArgs(const std::vector<std::string> &args);

struct RunPaths {
  std::string corpus;
  std::string embeddings;
  std::string seeds;
  std::string out_dir;
  // Optional gold file; when set an evaluation report is written too.
  std::string gold;
};

// Ingest, bootstrap and write accepted.jsonl, extractors.jsonl, stats.json
// and manifest.json into paths.out_dir. The manifest is written even when
// the run fails. Returns one of the kExit* codes.
int RunPipeline(const RunConfig &cfg, const RunPaths &paths,
                std::ostream &log);

// Scores a finished run directory against a gold file and writes
// report.json and report.txt into out_dir (the run directory when empty).
int EvaluateRun(const std::string &run_dir, const std::string &gold_path,
                double threshold, std::optional<Pairing> pairing,
                const std::string &out_dir, std::ostream &log);

// Entry point of the `brex` tool. args excludes the program name.
int Main(const std::vector<std::string> &args, std::ostream &out,
         std::ostream &err);

}  // namespace brex

#endif  // BREX_PIPELINE_H_
