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

#include "brex/corpus.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <tuple>

#include "brex/error.h"
#include "json.hpp"

namespace brex {
namespace {

using nlohmann::json;

std::string ReadFile(const std::string &path, const char *what) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path, 0, std::string("cannot open ") + what);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string JoinTokens(std::span<const std::string> tokens) {
  std::string out;
  for (const std::string &t : tokens) {
    if (!out.empty()) out += ' ';
    out += t;
  }
  return out;
}

std::vector<std::string> Slice(const std::vector<std::string> &tokens,
                               int begin, int end) {
  return std::vector<std::string>(tokens.begin() + begin,
                                  tokens.begin() + end);
}

TaggedSentence ParseRecord(const json &record, std::size_t line,
                           const std::string &origin) {
  auto fail = [&](const std::string &msg) {
    throw InputError(origin, line, msg);
  };
  if (!record.is_object()) fail("record is not an object");
  if (!record.contains("tokens") || !record["tokens"].is_array()) {
    fail("missing \"tokens\" array");
  }
  if (!record.contains("entities") || !record["entities"].is_array()) {
    fail("missing \"entities\" array");
  }

  TaggedSentence s;
  s.ref = line;
  for (const json &t : record["tokens"]) {
    if (!t.is_string()) fail("token is not a string");
    s.tokens.push_back(t.get<std::string>());
  }
  const int n = static_cast<int>(s.tokens.size());
  for (const json &e : record["entities"]) {
    if (!e.is_object() || !e.contains("start") || !e.contains("end") ||
        !e.contains("type") || !e["start"].is_number_integer() ||
        !e["end"].is_number_integer() || !e["type"].is_string()) {
      fail("entity needs integer start/end and string type");
    }
    int start = e["start"].get<int>();
    int end = e["end"].get<int>();
    if (start < 0 || start >= end || end > n) {
      fail("invalid entity span (" + std::to_string(start) + "," +
           std::to_string(end) + ") for " + std::to_string(n) + " tokens");
    }
    s.entities.push_back({{start, end}, e["type"].get<std::string>()});
  }
  if (record.contains("pos") && !record["pos"].is_null()) {
    if (!record["pos"].is_array()) fail("\"pos\" is not an array");
    for (const json &t : record["pos"]) {
      if (!t.is_string()) fail("POS tag is not a string");
      s.pos.push_back(t.get<std::string>());
    }
    if (static_cast<int>(s.pos.size()) != n) {
      fail("POS tags do not align with tokens");
    }
  }
  return s;
}

bool HasOverlap(std::vector<EntityMention> entities) {
  std::sort(entities.begin(), entities.end(),
            [](const EntityMention &a, const EntityMention &b) {
              return a.span.start < b.span.start;
            });
  for (std::size_t k = 1; k < entities.size(); ++k) {
    if (entities[k].span.start < entities[k - 1].span.end) return true;
  }
  return false;
}

bool IsBeForm(std::string word) {
  for (char &c : word) {
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  static const char *const kForms[] = {"am",  "is",   "are",  "was",
                                       "were", "be", "been", "being"};
  for (const char *f : kForms) {
    if (word == f) return true;
  }
  return false;
}

}  // namespace

CorpusLoad ParseCorpus(std::string_view text,
                       const std::set<std::string> &type_vocab,
                       const std::string &origin) {
  CorpusLoad load;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;

    json record;
    try {
      record = json::parse(line);
    } catch (const json::parse_error &e) {
      throw InputError(origin, line_no, std::string("malformed record: ") +
                                            e.what());
    }
    TaggedSentence s = ParseRecord(record, line_no, origin);
    if (HasOverlap(s.entities)) {
      ++load.rejected_records;
      continue;
    }
    if (!type_vocab.empty()) {
      auto unknown = [&](const EntityMention &m) {
        return type_vocab.count(m.type) == 0;
      };
      std::size_t before = s.entities.size();
      std::erase_if(s.entities, unknown);
      load.dropped_entities += before - s.entities.size();
    }
    load.sentences.push_back(std::move(s));
  }
  return load;
}

CorpusLoad LoadCorpus(const std::string &path,
                      const std::set<std::string> &type_vocab) {
  return ParseCorpus(ReadFile(path, "corpus file"), type_vocab, path);
}

ExtractionResult ExtractInstances(std::span<const TaggedSentence> sentences,
                                  const EmbeddingStore &emb,
                                  const WindowLimits &limits,
                                  const TypePair &types) {
  ExtractionResult result;
  std::set<std::tuple<std::size_t, int, int, int, int>> seen;
  for (const TaggedSentence &s : sentences) {
    std::vector<EntityMention> ents = s.entities;
    std::stable_sort(ents.begin(), ents.end(),
                     [](const EntityMention &a, const EntityMention &b) {
                       return a.span.start < b.span.start;
                     });
    const int n = static_cast<int>(s.tokens.size());
    for (std::size_t a = 0; a < ents.size(); ++a) {
      for (std::size_t b = a + 1; b < ents.size(); ++b) {
        const EntityMention &left = ents[a];
        const EntityMention &right = ents[b];
        if (left.type != types.first || right.type != types.second) continue;
        if (right.span.start - left.span.end > limits.max_between) {
          ++result.skipped;
          continue;
        }
        auto key = std::make_tuple(s.ref, left.span.start, left.span.end,
                                   right.span.start, right.span.end);
        if (!seen.insert(key).second) continue;

        Instance inst;
        inst.id = result.instances.size();
        inst.sentence_ref = s.ref;
        inst.e1_span = left.span;
        inst.e2_span = right.span;
        inst.pair.e1 = {JoinTokens(Slice(s.tokens, left.span.start,
                                         left.span.end)),
                        left.type};
        inst.pair.e2 = {JoinTokens(Slice(s.tokens, right.span.start,
                                         right.span.end)),
                        right.type};
        inst.tokens_before =
            Slice(s.tokens, std::max(0, left.span.start - limits.max_before),
                  left.span.start);
        inst.tokens_between =
            Slice(s.tokens, left.span.end, right.span.start);
        inst.tokens_after =
            Slice(s.tokens, right.span.end,
                  std::min(n, right.span.end + limits.max_after));
        inst.context.before = ContextVector(inst.tokens_before, emb);
        inst.context.between = ContextVector(inst.tokens_between, emb);
        inst.context.after = ContextVector(inst.tokens_after, emb);
        inst.context.types = inst.pair.types();
        result.instances.push_back(std::move(inst));
      }
    }
  }
  return result;
}

Instance ReorderPassive(const Instance &instance,
                        std::span<const std::string> pos) {
  if (pos.empty() || instance.reordered) return instance;
  const std::vector<std::string> &between = instance.tokens_between;
  const std::size_t k = between.size();
  if (k < 3 || between[k - 1] != "by" || !IsBeForm(between[k - 3])) {
    return instance;
  }
  // Tag of the verb right before "by", in sentence coordinates.
  const int gap_start =
      std::min(instance.e1_span.end, instance.e2_span.end);
  const std::size_t verb = static_cast<std::size_t>(gap_start) + k - 2;
  if (verb >= pos.size()) return instance;
  if (pos[verb] != "VBD" && pos[verb] != "VBN") return instance;

  Instance out = instance;
  out.pair = instance.pair.Swapped();
  std::swap(out.e1_span, out.e2_span);
  out.context.types = out.pair.types();
  out.reordered = true;
  return out;
}

Template ParseSeedTemplate(std::string_view raw, const EmbeddingStore &emb,
                           const TypePair &types) {
  std::vector<std::string> words;
  std::istringstream in{std::string(raw)};
  for (std::string w; in >> w;) words.push_back(w);

  auto x = std::find(words.begin(), words.end(), "[X]");
  auto y = std::find(words.begin(), words.end(), "[Y]");
  bool once = std::count(words.begin(), words.end(), "[X]") == 1 &&
              std::count(words.begin(), words.end(), "[Y]") == 1;
  if (!once || x > y) {
    throw InputError("seed template", 0,
                     "'" + std::string(raw) +
                         "' must contain [X] and [Y] once each, [X] first");
  }
  std::vector<std::string> before(words.begin(), x);
  std::vector<std::string> between(x + 1, y);
  std::vector<std::string> after(y + 1, words.end());

  Template t;
  t.before = ContextVector(before, emb);
  t.between = ContextVector(between, emb);
  t.after = ContextVector(after, emb);
  t.types = types;
  return t;
}

std::vector<Template> ParseSeedTemplates(std::span<const std::string> raw,
                                         const EmbeddingStore &emb,
                                         const TypePair &types) {
  std::vector<Template> out;
  out.reserve(raw.size());
  for (const std::string &r : raw) out.push_back(ParseSeedTemplate(r, emb, types));
  return out;
}

SeedSpec ParseSeedSpec(std::string_view text, const std::string &origin) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error &e) {
    throw InputError(origin, 0, std::string("malformed seed file: ") + e.what());
  }
  auto fail = [&](const std::string &msg) { throw InputError(origin, 0, msg); };
  if (!doc.is_object()) fail("seed file must hold a JSON object");

  SeedSpec spec;
  try {
    spec.relation = doc.value("relation", std::string("relation"));
    if (!doc.contains("type_pair") || !doc["type_pair"].is_array() ||
        doc["type_pair"].size() != 2) {
      fail("\"type_pair\" must be a two-element array");
    }
    spec.types = {doc["type_pair"][0].get<std::string>(),
                  doc["type_pair"][1].get<std::string>()};
    auto pairs = [&](const char *key) {
      std::vector<std::pair<std::string, std::string>> out;
      if (!doc.contains(key)) return out;
      for (const json &p : doc[key]) {
        if (!p.is_array() || p.size() != 2) {
          fail(std::string("entries of \"") + key + "\" must be [e1, e2]");
        }
        out.emplace_back(p[0].get<std::string>(), p[1].get<std::string>());
      }
      return out;
    };
    auto strings = [&](const char *key) {
      std::vector<std::string> out;
      if (doc.contains(key)) out = doc[key].get<std::vector<std::string>>();
      return out;
    };
    spec.positive_pairs = pairs("positive_pairs");
    spec.negative_pairs = pairs("negative_pairs");
    spec.positive_templates = strings("positive_templates");
    spec.negative_templates = strings("negative_templates");
  } catch (const json::exception &e) {
    fail(std::string("bad seed file field: ") + e.what());
  }
  return spec;
}

SeedSpec LoadSeedSpec(const std::string &path) {
  return ParseSeedSpec(ReadFile(path, "seed file"), path);
}

SeedState BuildSeedState(const SeedSpec &spec, const EmbeddingStore &emb,
                         Pairing pairing) {
  SeedState state(pairing);
  auto entity_pair = [&](const std::pair<std::string, std::string> &p) {
    return EntityPair{{p.first, spec.types.first}, {p.second, spec.types.second}};
  };
  for (const auto &p : spec.positive_pairs) {
    state.positive_pairs.Insert(entity_pair(p));
  }
  for (const auto &p : spec.negative_pairs) {
    state.negative_pairs.Insert(entity_pair(p));
  }
  for (const Template &t :
       ParseSeedTemplates(spec.positive_templates, emb, spec.types)) {
    state.positive_templates.Insert(t);
  }
  for (const Template &t :
       ParseSeedTemplates(spec.negative_templates, emb, spec.types)) {
    state.negative_templates.Insert(t);
  }
  return state;
}

}  // namespace brex
