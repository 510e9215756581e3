// Copyright 2026 The nsra Authors.
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

#include <optional>
#include <string>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nsra/compiler.h"
#include "nsra/error.h"
#include "nsra/ir.h"
#include "nsra/metrics.h"
#include "nsra/parser.h"
#include "nsra/qlgen.h"
#include "nsra/registry.h"

namespace py = pybind11;

namespace {

nsra::Registry registry_for(const std::optional<std::string>& profile) {
  nsra::Registry reg = nsra::builtin_crypto_profile();
  if (profile) reg = nsra::overlay_profile(std::move(reg), *profile);
  return reg;
}

py::dict counts_dict(const nsra::HalsteadCounts& c) {
  py::dict d;
  d["n1"] = c.n1;
  d["n2"] = c.n2;
  d["N1"] = c.N1;
  d["N2"] = c.N2;
  d["vocabulary"] = c.vocabulary();
  d["length"] = c.length();
  d["volume"] = c.volume();
  d["difficulty"] = c.difficulty();
  d["effort"] = c.effort();
  d["time"] = c.time();
  return d;
}

nsra::HalsteadCounts counts_from(const py::dict& d) {
  nsra::HalsteadCounts c;
  c.n1 = d["n1"].cast<long>();
  c.n2 = d["n2"].cast<long>();
  c.N1 = d["N1"].cast<long>();
  c.N2 = d["N2"].cast<long>();
  return c;
}

}  // namespace

PYBIND11_MODULE(_nsra, m) {
  m.doc() = "Natural-language static analysis queries compiled to CodeQL";

  // The module keeps the type alive for the interpreter's lifetime.
  static PyObject* error_type = py::exception<nsra::Error>(m, "NsraError").ptr();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const nsra::Error& e) {
      py::object exc =
          py::reinterpret_borrow<py::object>(error_type)(e.what());
      exc.attr("kind") = std::string(nsra::error_kind_name(e.kind()));
      if (e.span()) {
        exc.attr("span") = py::make_tuple(e.span()->start, e.span()->end);
      } else {
        exc.attr("span") = py::none();
      }
      exc.attr("line") = e.line() ? py::cast(*e.line()) : py::none();
      PyErr_SetObject(error_type, exc.ptr());
    }
  });

  m.def(
      "compile",
      [](const std::string& text, const std::optional<std::string>& profile,
         const std::string& emit, const std::string& header) {
        nsra::RenderOptions opts;
        opts.header = header;
        nsra::Compilation c = nsra::compile(text, registry_for(profile), opts);
        if (emit == "ir") return nsra::dump_ir(c.ir);
        if (emit != "ql") throw py::value_error("emit must be 'ql' or 'ir'");
        return c.ql;
      },
      py::arg("text"), py::arg("profile") = py::none(), py::arg("emit") = "ql",
      py::arg("header") = "",
      "Compile a query to QL text (or the IR dump with emit='ir').");

  m.def(
      "warnings",
      [](const std::string& text, const std::optional<std::string>& profile) {
        py::list out;
        for (const auto& w :
             nsra::compile(text, registry_for(profile)).warnings) {
          out.append(w.message);
        }
        return out;
      },
      py::arg("text"), py::arg("profile") = py::none());

  m.def(
      "to_english",
      [](const std::string& text) {
        return nsra::to_english(nsra::parse_text(text));
      },
      py::arg("text"), "Canonical English form of a parsed query.");

  m.def("normalize_ql", [](const std::string& text) {
    return nsra::normalize_ql(text);
  });

  m.def("halstead_nsra", [](const std::string& text) {
    return counts_dict(nsra::halstead_nsra(text));
  });
  m.def("halstead_ql", [](const std::string& text) {
    return counts_dict(nsra::halstead_ql(text));
  });
  m.def("compare", [](const py::dict& nsra_counts, const py::dict& ql_counts) {
    nsra::ComparisonRow r =
        nsra::compare(counts_from(nsra_counts), counts_from(ql_counts));
    py::dict d;
    d["vocabNsra"] = r.nsra.vocabulary();
    d["vocabQl"] = r.ql.vocabulary();
    d["lengthNsra"] = r.nsra.length();
    d["lengthQl"] = r.ql.length();
    d["reductionPct"] = r.length_reduction_pct;
    d["vocabularyReductionPct"] = r.vocabulary_reduction_pct;
    d["effortRatio"] = r.effort_ratio;
    d["timeRatio"] = r.time_ratio;
    return d;
  });

  m.def("dump_profile", [](const std::optional<std::string>& profile) {
    return nsra::dump_profile(registry_for(profile));
  }, py::arg("profile") = py::none());
}
