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

#include "brex/evaluate.h"

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "brex/error.h"
#include "brex/similarity.h"

namespace brex {
namespace {

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == ' ')) {
    s.remove_suffix(1);
  }
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  return s;
}

template <typename Fn>
void ForEachLine(std::string_view text, Fn &&fn) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = Trim(text.substr(pos, eol - pos));
    pos = eol + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    fn(line, line_no);
  }
}

std::string ReadFile(const std::string &path, const char *what) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path, 0, std::string("cannot open ") + what);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

EntityPair SurfacePair(const std::string &e1, const std::string &e2) {
  return EntityPair{{e1, ""}, {e2, ""}};
}

}  // namespace

GoldKB::GoldKB(std::string relation, Pairing pairing)
    : relation_(std::move(relation)), pairing_(pairing) {}

void GoldKB::Add(const std::string &e1, const std::string &e2) {
  keys_.emplace(PairKey(SurfacePair(e1, e2), pairing_, false), keys_.size());
}

bool GoldKB::Contains(const EntityPair &pair) const {
  return keys_.count(PairKey(pair, pairing_, false)) > 0;
}

GoldKB ParseGold(std::string_view text, Pairing pairing,
                 const std::string &relation, const std::string &origin) {
  GoldKB gold(relation, pairing);
  ForEachLine(text, [&](std::string_view line, std::size_t line_no) {
    std::size_t tab = line.find('\t');
    if (tab == std::string_view::npos || tab == 0 || tab + 1 >= line.size()) {
      throw InputError(origin, line_no, "expected 'e1<TAB>e2'");
    }
    gold.Add(std::string(Trim(line.substr(0, tab))),
             std::string(Trim(line.substr(tab + 1))));
  });
  return gold;
}

GoldKB LoadGold(const std::string &path, Pairing pairing,
                const std::string &relation) {
  return ParseGold(ReadFile(path, "gold file"), pairing, relation, path);
}

PrecisionRecall Prf1(std::span<const ScoredPair> extracted, const GoldKB &gold,
                     double threshold) {
  if (gold.size() == 0) {
    throw std::invalid_argument("gold set is empty; recall is undefined");
  }
  std::set<std::string> out;
  std::set<std::string> hit;
  for (const ScoredPair &s : extracted) {
    if (s.confidence < threshold) continue;
    std::string key = PairKey(s.pair, gold.pairing(), false);
    out.insert(key);
    if (gold.Contains(s.pair)) hit.insert(key);
  }
  PrecisionRecall r;
  r.out_count = out.size();
  r.correct = hit.size();
  if (!out.empty()) {
    r.precision = static_cast<double>(hit.size()) / out.size();
  }
  r.recall = static_cast<double>(hit.size()) / gold.size();
  if (r.precision + r.recall > 0.0) {
    r.f1 = 2.0 * r.precision * r.recall / (r.precision + r.recall);
  }
  return r;
}

PrecisionRecall Prf1(std::span<const AcceptedInstance> accepted,
                     const GoldKB &gold, double threshold) {
  std::vector<ScoredPair> pairs;
  pairs.reserve(accepted.size());
  for (const AcceptedInstance &a : accepted) {
    pairs.push_back({a.instance->pair, a.confidence});
  }
  return Prf1(pairs, gold, threshold);
}

HitCount CountHits(std::span<const Instance> gamma, const SeedState &seeds,
                   const RunConfig &cfg) {
  HitCount h;
  for (const Instance &i : gamma) {
    bool pair = seeds.positive_pairs.Contains(i.pair);
    bool tmpl = SimInstanceTemplateSet(i, seeds.positive_templates.templates(),
                                       cfg.measure) >= cfg.tau_sim;
    h.by_pair += pair;
    h.by_template += tmpl;
    h.either += pair || tmpl;
  }
  return h;
}

ExtractorSummary Summarize(const Extractor &e) {
  return {ExtractorSignature(e), e.size(), e.n_pos, e.n_neg, e.confidence};
}

ExtractorStats ComputeExtractorStats(std::span<const ExtractorSummary> summaries,
                                     const NoiseLabels *labels) {
  ExtractorStats s;
  s.count = summaries.size();
  if (summaries.empty()) return s;

  std::size_t labeled = 0;
  std::size_t noisy = 0;
  std::size_t clean_low = 0;
  for (const ExtractorSummary &e : summaries) {
    s.aie += static_cast<double>(e.size);
    s.aes += e.confidence;
    s.ap += e.n_pos;
    s.an += e.n_neg;
    if (labels == nullptr) continue;
    auto it = labels->find(e.signature);
    if (it == labels->end()) continue;
    ++labeled;
    if (it->second) {
      ++noisy;
    } else if (e.confidence < 0.5) {
      ++clean_low;
    }
  }
  const double n = static_cast<double>(summaries.size());
  s.aie /= n;
  s.aes /= n;
  s.ap /= n;
  s.an /= n;
  if (s.ap > 0.0) s.anp = s.an / s.ap;
  if (labeled > 0) {
    const double l = static_cast<double>(labeled);
    s.ane = noisy / l;
    s.anne = (labeled - noisy) / l;
    s.annlc = clean_low / l;
  }
  return s;
}

ExtractorStats ComputeExtractorStats(std::span<const Extractor> extractors,
                                     const NoiseLabels *labels) {
  std::vector<ExtractorSummary> summaries;
  summaries.reserve(extractors.size());
  for (const Extractor &e : extractors) summaries.push_back(Summarize(e));
  return ComputeExtractorStats(summaries, labels);
}

NoiseLabels LoadNoiseLabels(const std::string &path) {
  NoiseLabels labels;
  ForEachLine(ReadFile(path, "label file"),
              [&](std::string_view line, std::size_t line_no) {
                std::size_t tab = line.find('\t');
                if (tab == std::string_view::npos) {
                  throw InputError(path, line_no,
                                   "expected 'signature<TAB>noisy'");
                }
                std::string sig(Trim(line.substr(0, tab)));
                std::string flag(Trim(line.substr(tab + 1)));
                bool noisy;
                if (flag == "1" || flag == "true" || flag == "noisy") {
                  noisy = true;
                } else if (flag == "0" || flag == "false" || flag == "clean") {
                  noisy = false;
                } else {
                  throw InputError(path, line_no, "bad noisy flag '" + flag + "'");
                }
                labels[sig] = noisy;
              });
  return labels;
}

}  // namespace brex
