// Copyright 2026 The cnadsl Authors
// SPDX-License-Identifier: Apache-2.0

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "cnadsl/cnadsl.hpp"

namespace {

namespace fs = std::filesystem;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitIo = 2;
constexpr int kExitStrictGap = 3;

bool use_color() {
  if (std::getenv("CNADSL_NO_COLOR")) return false;
  return isatty(fileno(stderr)) != 0;
}

void print_diagnostics(const std::vector<cnadsl::Diagnostic>& diags,
                       const std::string& filename) {
  const bool color = use_color();
  for (const auto& d : diags)
    std::cerr << cnadsl::render(d, filename, color) << "\n";
}

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct Pipeline {
  cnadsl::ApplicationModel model;
  cnadsl::ValidationReport report;
};

// parse + validate; prints diagnostics, returns the model or an exit code.
std::variant<Pipeline, int> load_model(const std::string& file) {
  auto source = read_file(file);
  if (!source) {
    std::cerr << "error: no such file: " << file << "\n";
    return kExitIo;
  }
  cnadsl::ParseResult parsed = cnadsl::parse(*source);
  print_diagnostics(parsed.diagnostics, file);
  if (!parsed.ok()) return kExitIo;

  Pipeline pipeline;
  pipeline.report = cnadsl::validate(*parsed.model, &parsed.index);
  print_diagnostics(pipeline.report.diagnostics, file);
  if (!pipeline.report.resolved) return kExitValidation;
  pipeline.model = std::move(*parsed.model);
  return pipeline;
}

bool report_has_warnings(const cnadsl::ValidationReport& report) {
  for (const auto& d : report.diagnostics)
    if (d.severity == cnadsl::Severity::Warning) return true;
  return false;
}

int cmd_validate(const std::string& file) {
  auto loaded = load_model(file);
  if (auto* code = std::get_if<int>(&loaded)) return *code;
  return kExitOk;
}

int cmd_generate(const std::string& file, const std::string& target,
                 const std::string& out_dir, const std::string& ns, bool strict) {
  if (!cnadsl::is_dns1123_label(ns)) {
    std::cerr << "error: namespace \"" << ns << "\" is not a valid DNS-1123 label\n";
    return kExitIo;
  }
  auto loaded = load_model(file);
  if (auto* code = std::get_if<int>(&loaded)) return *code;
  const Pipeline& pipeline = std::get<Pipeline>(loaded);

  std::vector<std::string> targets;
  if (target == "all")
    targets = {"kubernetes", "compose", "marathon"};
  else
    targets = {target};

  // Generators are pure; run them concurrently on the shared model.
  std::vector<std::future<cnadsl::ManifestSet>> futures;
  for (const auto& t : targets) {
    futures.push_back(std::async(std::launch::async, [&, t] {
      return cnadsl::generate_for_target(pipeline.model, t, ns);
    }));
  }

  bool any_gap = false;
  for (std::size_t i = 0; i < targets.size(); ++i) {
    cnadsl::ManifestSet set = futures[i].get();
    const fs::path dir = fs::path(out_dir) / targets[i];
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) {
      std::cerr << "error: cannot create output directory " << dir.string()
                << ": " << ec.message() << "\n";
      return kExitIo;
    }
    for (const auto& doc : set.documents) {
      const fs::path path = dir / doc.filename;
      std::ofstream outfile(path, std::ios::binary);
      if (!outfile) {
        std::cerr << "error: cannot write " << path.string() << "\n";
        return kExitIo;
      }
      outfile << doc.body;
      std::cout << "wrote " << path.string() << "\n";
    }
    for (const auto& gap : set.gaps) {
      any_gap = true;
      std::cout << "gap[" << cnadsl::to_string(gap.kind) << "] target="
                << gap.target << ": " << gap.detail << "\n";
    }
  }

  if (strict && (any_gap || report_has_warnings(pipeline.report)))
    return kExitStrictGap;
  return kExitOk;
}

int cmd_fmt(const std::string& file, bool write_in_place, bool check) {
  auto source = read_file(file);
  if (!source) {
    std::cerr << "error: no such file: " << file << "\n";
    return kExitIo;
  }
  cnadsl::ParseResult parsed = cnadsl::parse(*source);
  print_diagnostics(parsed.diagnostics, file);
  if (!parsed.ok()) return kExitIo;

  const std::string canonical = cnadsl::format(*parsed.model);
  if (check) {
    if (canonical == *source) return kExitOk;
    std::cout << file << " is not canonically formatted\n";
    return kExitValidation;
  }
  if (write_in_place) {
    std::ofstream outfile(file, std::ios::binary);
    if (!outfile) {
      std::cerr << "error: cannot write " << file << "\n";
      return kExitIo;
    }
    outfile << canonical;
    return kExitOk;
  }
  std::cout << canonical;
  return kExitOk;
}

int cmd_inspect(const std::string& file) {
  auto loaded = load_model(file);
  if (auto* code = std::get_if<int>(&loaded)) return *code;
  std::cout << cnadsl::render_inspect(cnadsl::inspect(std::get<Pipeline>(loaded).model));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cnadsl - compile cloud-native application definitions into "
               "platform-native deployment descriptors"};
  app.require_subcommand(1);

  std::string file;
  std::string target = "kubernetes";
  std::string out_dir = "out";
  std::string ns = "default";
  bool strict = false;
  bool write_in_place = false;
  bool check = false;

  CLI::App* validate = app.add_subcommand("validate", "parse and validate a definition");
  validate->add_option("file", file, "definition file (.cna)")->required();

  CLI::App* generate =
      app.add_subcommand("generate", "generate deployment descriptors");
  generate->add_option("file", file, "definition file (.cna)")->required();
  generate->add_option("--target", target, "kubernetes, compose, marathon or all")
      ->check(CLI::IsMember({"kubernetes", "compose", "marathon", "all"}));
  generate->add_option("--out", out_dir, "output directory (default: out)");
  generate->add_option("--namespace", ns, "namespace for kubernetes objects");
  generate->add_flag("--strict", strict,
                     "treat capability gaps and warnings as failures (exit 3)");

  CLI::App* fmt = app.add_subcommand("fmt", "canonically format a definition");
  fmt->add_option("file", file, "definition file (.cna)")->required();
  fmt->add_flag("--write", write_in_place, "rewrite the file in place");
  fmt->add_flag("--check", check, "exit 0 iff the file is already canonical");

  CLI::App* inspect = app.add_subcommand("inspect", "summarize concept usage");
  inspect->add_option("file", file, "definition file (.cna)")->required();

  CLI11_PARSE(app, argc, argv);

  if (validate->parsed()) return cmd_validate(file);
  if (generate->parsed()) return cmd_generate(file, target, out_dir, ns, strict);
  if (fmt->parsed()) return cmd_fmt(file, write_in_place, check);
  if (inspect->parsed()) return cmd_inspect(file);
  return kExitOk;
}
