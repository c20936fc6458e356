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

#include "brex/config.h"

#include "brex/error.h"

namespace brex {
namespace {

void CheckUnit(double v, const char *name) {
  if (!(v > 0.0 && v <= 1.0)) {
    throw UsageError(std::string(name) + " must lie in (0, 1], got " +
                     std::to_string(v));
  }
}

}  // namespace

void ValidateConfig(const RunConfig &cfg) {
  CheckUnit(cfg.tau_sim, "tau-sim");
  CheckUnit(cfg.tau_cnf, "tau-cnf");
  CheckUnit(cfg.output_threshold, "output threshold");
  if (!(cfg.w_neg >= 0.0)) throw UsageError("wn must be >= 0");
  if (!(cfg.w_unknown >= 0.0)) throw UsageError("wu must be >= 0");
  if (cfg.iterations < 1) throw UsageError("iters must be >= 1");
  if (cfg.limits.max_before < 0 || cfg.limits.max_between < 0 ||
      cfg.limits.max_after < 0) {
    throw UsageError("window limits must be >= 0");
  }
  ValidateMeasure(cfg.measure);
}

std::string_view ModeName(Mode mode) {
  switch (mode) {
    case Mode::kBree:
      return "bree";
    case Mode::kBret:
      return "bret";
    case Mode::kBrej:
      return "brej";
  }
  return "?";
}

std::optional<Mode> ParseMode(std::string_view name) {
  for (Mode m : {Mode::kBree, Mode::kBret, Mode::kBrej}) {
    if (ModeName(m) == name) return m;
  }
  return std::nullopt;
}

std::string_view PairingName(Pairing pairing) {
  return pairing == Pairing::kOrdered ? "ordered" : "biset";
}

std::optional<Pairing> ParsePairing(std::string_view name) {
  if (name == "ordered") return Pairing::kOrdered;
  if (name == "biset") return Pairing::kBiset;
  return std::nullopt;
}

std::string_view ScoreAgainstName(ScoreAgainst s) {
  return s == ScoreAgainst::kYield ? "yield" : "original";
}

std::optional<ScoreAgainst> ParseScoreAgainst(std::string_view name) {
  if (name == "yield") return ScoreAgainst::kYield;
  if (name == "original") return ScoreAgainst::kOriginal;
  return std::nullopt;
}

}  // namespace brex
