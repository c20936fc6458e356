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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <array>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "brex/corpus.h"
#include "brex/embeddings.h"
#include "brex/engine.h"
#include "brex/error.h"
#include "brex/evaluate.h"
#include "brex/pipeline.h"
#include "brex/scoring.h"
#include "brex/similarity.h"

namespace py = pybind11;

namespace brex {
namespace {

// Keyword options with Python spelling (tau_sim=0.8) onto raw option strings.
RunOptions ToOptions(const py::kwargs &kwargs) {
  RunOptions o;
  const std::map<std::string, std::string RunOptions::*> fields = {
      {"config", &RunOptions::config},
      {"mode", &RunOptions::mode},
      {"sim", &RunOptions::sim},
      {"tau_sim", &RunOptions::tau_sim},
      {"tau_cnf", &RunOptions::tau_cnf},
      {"wn", &RunOptions::wn},
      {"wu", &RunOptions::wu},
      {"iters", &RunOptions::iters},
      {"pairing", &RunOptions::pairing},
      {"max_before", &RunOptions::max_before},
      {"max_between", &RunOptions::max_between},
      {"max_after", &RunOptions::max_after},
      {"w_before", &RunOptions::w_before},
      {"w_between", &RunOptions::w_between},
      {"w_after", &RunOptions::w_after},
      {"threshold", &RunOptions::threshold},
      {"score_against", &RunOptions::score_against},
      {"threads", &RunOptions::threads},
      {"passive", &RunOptions::passive}};
  for (auto item : kwargs) {
    std::string key = py::str(item.first);
    auto it = fields.find(key);
    if (it == fields.end()) throw py::type_error("unknown option '" + key + "'");
    py::handle v = item.second;
    std::string text;
    if (py::isinstance<py::bool_>(v)) {
      text = v.cast<bool>() ? "true" : "false";
    } else if (py::isinstance<py::float_>(v)) {
      std::ostringstream s;
      s.precision(17);
      s << v.cast<double>();
      text = s.str();
    } else {
      text = py::str(v);
    }
    o.*(it->second) = text;
  }
  return o;
}

Template ToTemplate(const Vector &before, const Vector &between,
                    const Vector &after, const std::pair<std::string, std::string> &types) {
  return {before, between, after, {types.first, types.second}};
}

py::dict BootstrapFiles(const std::string &corpus_path, const std::string &emb_path,
                   const std::string &seeds_path, const py::kwargs &kwargs) {
  RunConfig cfg = ResolveConfig(ToOptions(kwargs));
  SeedSpec spec = LoadSeedSpec(seeds_path);
  EmbeddingStore emb = LoadEmbeddings(emb_path);
  CorpusLoad corpus = LoadCorpus(corpus_path, {spec.types.first, spec.types.second});
  ExtractionResult ex = ExtractInstances(corpus.sentences, emb, cfg.limits, spec.types);
  SeedState seeds = BuildSeedState(spec, emb, cfg.pairing);
  BootstrapResult r;
  {
    py::gil_scoped_release release;
    r = brex::Bootstrap(ex.instances, seeds, cfg);
  }
  py::list accepted;
  for (const AcceptedInstance &a : r.accepted) {
    py::dict d;
    d["e1"] = a.instance->pair.e1.surface;
    d["e2"] = a.instance->pair.e2.surface;
    d["confidence"] = a.confidence;
    d["iteration"] = a.iteration;
    d["sentence_ref"] = a.instance->sentence_ref;
    accepted.append(d);
  }
  py::list extractors;
  for (const Extractor &e : r.extractors) {
    py::dict d;
    d["size"] = e.size();
    d["n_pos"] = e.n_pos;
    d["n_neg"] = e.n_neg;
    d["n_unknown"] = e.n_unknown;
    d["confidence"] = e.confidence;
    d["signature"] = ExtractorSignature(e);
    extractors.append(d);
  }
  py::list iterations;
  for (const IterationStats &s : r.iterations) {
    py::dict d;
    d["iteration"] = s.iteration;
    d["hits"] = s.hits;
    d["clusters"] = s.clusters;
    d["candidates"] = s.candidates;
    d["accepted"] = s.accepted;
    d["yield_pairs"] = s.yield_pairs;
    d["yield_templates"] = s.yield_templates;
    iterations.append(d);
  }
  py::dict out;
  out["instances"] = ex.instances.size();
  out["accepted"] = accepted;
  out["extractors"] = extractors;
  out["iterations"] = iterations;
  out["diagnostic"] = r.diagnostic;
  return out;
}

}  // namespace
}  // namespace brex

PYBIND11_MODULE(_brex, m) {
  using namespace brex;
  m.doc() = "Bootstrapping relation extraction with entity-pair and template seeds";
  m.attr("__version__") = kVersion;

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<UsageError>(m, "UsageError", PyExc_ValueError);

  py::class_<EmbeddingStore>(m, "EmbeddingStore")
      .def_property_readonly("dimension", &EmbeddingStore::dimension)
      .def("__len__", &EmbeddingStore::size)
      .def("__contains__", [](const EmbeddingStore &e, const std::string &w) {
        return e.Contains(w);
      })
      .def("lookup", [](const EmbeddingStore &e, const std::string &w) {
        auto v = e.Lookup(w);
        return Vector(v.begin(), v.end());
      })
      .def("context_vector",
           [](const EmbeddingStore &e, const std::vector<std::string> &tokens) {
             return ContextVector(tokens, e);
           },
           py::arg("tokens"));
  m.def("load_embeddings", &LoadEmbeddings, py::arg("path"));

  m.def("confidence_from_counts", &ConfidenceFromCounts, py::arg("p"),
        py::arg("n"), py::arg("u"), py::arg("wn") = 0.5,
        py::arg("wu") = 0.0001);
  m.def("combine_confidences",
        [](const std::vector<double> &c) { return CombineConfidences(c); },
        py::arg("confidences"));
  m.def(
      "template_similarity",
      [](const Vector &a_before, const Vector &a_between, const Vector &a_after,
         const Vector &b_before, const Vector &b_between, const Vector &b_after,
         const std::string &kind, std::array<double, 3> weights,
         std::pair<std::string, std::string> a_types,
         std::pair<std::string, std::string> b_types) {
        auto k = ParseKind(kind);
        if (!k) throw UsageError("unknown similarity '" + kind + "'");
        SimilarityMeasure measure{*k, weights};
        return SimTemplates(ToTemplate(a_before, a_between, a_after, a_types),
                            ToTemplate(b_before, b_between, b_after, b_types),
                            measure);
      },
      py::arg("a_before"), py::arg("a_between"), py::arg("a_after"),
      py::arg("b_before"), py::arg("b_between"), py::arg("b_after"),
      py::arg("kind") = "cc-asym",
      py::arg("weights") = std::array<double, 3>{0.2, 0.6, 0.2},
      py::arg("a_types") = std::make_pair(std::string("ORG"), std::string("ORG")),
      py::arg("b_types") = std::make_pair(std::string("ORG"), std::string("ORG")));

  m.def("bootstrap", &BootstrapFiles, py::arg("corpus"), py::arg("embeddings"),
        py::arg("seeds"));

  m.def(
      "run",
      [](const std::string &corpus, const std::string &embeddings,
         const std::string &seeds, const std::string &out_dir,
         const std::string &gold, const py::kwargs &kwargs) {
        RunConfig cfg = ResolveConfig(ToOptions(kwargs));
        std::ostringstream log;
        int rc;
        {
          py::gil_scoped_release release;
          rc = RunPipeline(cfg, {corpus, embeddings, seeds, out_dir, gold}, log);
        }
        return py::make_tuple(rc, log.str());
      },
      py::arg("corpus"), py::arg("embeddings"), py::arg("seeds"),
      py::arg("out_dir"), py::arg("gold") = "");

  m.def(
      "main",
      [](const std::vector<std::string> &args) {
        std::ostringstream out, err;
        int rc = Main(args, out, err);
        return py::make_tuple(rc, out.str(), err.str());
      },
      py::arg("args"));
}
