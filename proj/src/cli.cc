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

#include "nsra/cli.h"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "nsra/compiler.h"
#include "nsra/error.h"
#include "nsra/metrics.h"
#include "nsra/qlgen.h"
#include "nsra/registry.h"

namespace nsra {
namespace {

namespace fs = std::filesystem;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(path + ": error: cannot read file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Writes through a sibling temporary and renames it into place, so the
// destination is either the old file or the complete new one.
void write_atomic(const fs::path& path, const std::string& content) {
  static std::atomic<unsigned> counter{0};
  fs::path tmp = path;
  tmp += ".tmp" + std::to_string(counter++);
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << content;
    out.flush();
    if (!out) {
      std::error_code ec;
      fs::remove(tmp, ec);
      throw IoError(path.string() + ": error: cannot write file");
    }
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw IoError(path.string() + ": error: cannot write file");
  }
}

std::string describe(const Error& e) {
  return std::string(error_kind_name(e.kind())) + ": " + e.what();
}

std::string diagnostic(const std::string& file, const std::string& text,
                       const Error& e) {
  if (e.line()) {
    return file + ":" + std::to_string(*e.line()) + ":1: error: " + describe(e);
  }
  return format_diagnostic(file, text, e.span(), "error", describe(e));
}

Registry load_registry(const std::optional<std::string>& profile_path) {
  Registry reg = builtin_crypto_profile();
  std::string path;
  if (profile_path) {
    path = *profile_path;
  } else if (const char* env = std::getenv("NSRA_PROFILE"); env && *env) {
    path = env;
  }
  if (path.empty()) return reg;
  std::string text = read_file(path);
  try {
    return overlay_profile(std::move(reg), text);
  } catch (const Error& e) {
    throw IoError(diagnostic(path, text, e));
  }
}

struct FileResult {
  bool ok = false;
  std::string output;
  std::string diagnostics;
};

FileResult compile_file(const std::string& path, const Registry& reg,
                        const RenderOptions& opts, bool emit_ir) {
  FileResult r;
  std::string text;
  try {
    text = read_file(path);
    Compilation c = compile(text, reg, opts);
    for (const Warning& w : c.warnings) {
      r.diagnostics +=
          format_diagnostic(path, text, w.span, "warning", w.message) + "\n";
    }
    r.output = emit_ir ? dump_ir(c.ir) : c.ql;
    r.ok = true;
  } catch (const Error& e) {
    r.diagnostics += diagnostic(path, text, e) + "\n";
  } catch (const IoError& e) {
    r.diagnostics += std::string(e.what()) + "\n";
  }
  return r;
}

struct CompileArgs {
  std::vector<std::string> inputs;
  std::string output;
  std::string emit = "ql";
  std::optional<std::string> profile;
  std::string header;
};

int run_compile(const CompileArgs& a, std::ostream& out, std::ostream& err) {
  const Registry reg = load_registry(a.profile);
  RenderOptions opts;
  opts.header = a.header;
  bool emit_ir = a.emit == "ir";

  std::vector<std::future<FileResult>> jobs;
  for (const std::string& path : a.inputs) {
    jobs.push_back(std::async(std::launch::async, compile_file, path,
                              std::cref(reg), opts, emit_ir));
  }
  std::vector<FileResult> results;
  for (auto& j : jobs) results.push_back(j.get());

  bool batch = a.inputs.size() > 1;
  fs::path out_dir;
  if (batch && !a.output.empty()) {
    out_dir = a.output;
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec) throw IoError(a.output + ": error: cannot create directory");
  }

  int failed = 0;
  for (std::size_t i = 0; i < results.size(); ++i) {
    FileResult& r = results[i];
    err << r.diagnostics;
    if (!r.ok) {
      ++failed;
      continue;
    }
    try {
      if (a.output.empty()) {
        out << r.output;
      } else if (batch) {
        fs::path target =
            out_dir / fs::path(a.inputs[i]).stem().concat(emit_ir ? ".ir" : ".ql");
        write_atomic(target, r.output);
      } else {
        write_atomic(a.output, r.output);
      }
    } catch (const IoError& e) {
      err << e.what() << "\n";
      r.ok = false;
      ++failed;
    }
  }
  if (batch) {
    for (std::size_t i = 0; i < results.size(); ++i) {
      err << (results[i].ok ? "ok     " : "failed ") << a.inputs[i] << "\n";
    }
    err << results.size() - failed << " compiled, " << failed << " failed\n";
  }
  return failed ? kExitFailure : kExitOk;
}

int run_check(const std::string& input, const std::string& golden,
              const std::optional<std::string>& profile, std::ostream& out,
              std::ostream& err) {
  const Registry reg = load_registry(profile);
  FileResult r = compile_file(input, reg, {}, false);
  err << r.diagnostics;
  if (!r.ok) return kExitFailure;
  std::string expected = normalize_ql(read_file(golden));
  std::string actual = normalize_ql(r.output);
  if (expected == actual) {
    out << input << ": matches " << golden << "\n";
    return kExitOk;
  }
  std::istringstream es(expected), as(actual);
  std::string el, al;
  int line = 1;
  while (true) {
    bool more_e = static_cast<bool>(std::getline(es, el));
    bool more_a = static_cast<bool>(std::getline(as, al));
    if (!more_e && !more_a) break;
    if (!more_e) el.clear();
    if (!more_a) al.clear();
    if (el != al) {
      err << input << ": error: differs from " << golden
          << " (normalized line " << line << ")\n  expected: " << el
          << "\n  actual:   " << al << "\n";
      break;
    }
    ++line;
  }
  return kExitFailure;
}

int run_metrics(const std::vector<std::string>& inputs,
                const std::vector<std::string>& refs, bool json,
                std::ostream& out, std::ostream& err) {
  if (!refs.empty() && refs.size() != inputs.size()) {
    err << "error: --ql must be given once per input\n";
    return kExitUsage;
  }
  std::map<std::string, ComparisonRow> rows;
  std::map<std::string, HalsteadCounts> counts;
  int failed = 0;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    std::string file = inputs[i];
    std::string text;
    try {
      text = read_file(file);
      HalsteadCounts n = halstead_nsra(text);
      if (refs.empty()) {
        counts[inputs[i]] = n;
        continue;
      }
      file = refs[i];
      text = read_file(file);
      rows[inputs[i]] = compare(n, halstead_ql(text));
    } catch (const Error& e) {
      err << diagnostic(file, text, e) << "\n";
      ++failed;
    } catch (const IoError& e) {
      err << e.what() << "\n";
      ++failed;
    }
  }
  if (refs.empty()) {
    for (const auto& [name, c] : counts) {
      out << name << ": vocabulary " << c.vocabulary() << ", length "
          << c.length() << " (n1 " << c.n1 << ", n2 " << c.n2 << ", N1 "
          << c.N1 << ", N2 " << c.N2 << ")\n";
    }
  } else {
    out << (json ? rows_to_json(rows) : format_rows(rows));
  }
  return failed ? kExitFailure : kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"nsra: compile natural-language analysis queries to CodeQL",
               "nsra"};
  app.require_subcommand(1);

  CompileArgs ca;
  CLI::App* compile_cmd = app.add_subcommand("compile", "Compile queries to QL");
  compile_cmd->add_option("inputs", ca.inputs, "Query files")->required();
  compile_cmd->add_option("-o,--output", ca.output,
                          "Output file, or directory for several inputs");
  compile_cmd->add_option("--emit", ca.emit, "Output form")
      ->check(CLI::IsMember({"ql", "ir"}));
  compile_cmd->add_option("--profile", ca.profile, "Attribute profile");
  compile_cmd->add_option("--header", ca.header, "Text emitted before the query");

  std::vector<std::string> m_inputs, m_refs;
  bool m_json = false;
  CLI::App* metrics_cmd =
      app.add_subcommand("metrics", "Halstead comparison against QL");
  metrics_cmd->add_option("inputs", m_inputs, "Query files")->required();
  metrics_cmd->add_option("--ql", m_refs, "Reference QL, one per input");
  metrics_cmd->add_flag("--json", m_json, "JSON report");

  std::string c_input, c_golden;
  std::optional<std::string> c_profile;
  CLI::App* check_cmd =
      app.add_subcommand("check", "Compare compiled output with a golden file");
  check_cmd->add_option("input", c_input, "Query file")->required();
  check_cmd->add_option("--golden", c_golden, "Golden QL")->required();
  check_cmd->add_option("--profile", c_profile, "Attribute profile");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*compile_cmd) return run_compile(ca, out, err);
    if (*metrics_cmd) return run_metrics(m_inputs, m_refs, m_json, out, err);
    return run_check(c_input, c_golden, c_profile, out, err);
  } catch (const IoError& e) {
    err << e.what() << "\n";
    return kExitFailure;
  } catch (const std::exception& e) {
    err << "nsra: error: " << e.what() << "\n";
    return kExitFailure;
  }
}

}  // namespace nsra
