// conductor-lab: command-line front end for the conductor library.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "conductor/jobs.hpp"

namespace {

using conductor::Error;
using conductor::ErrorCode;
using conductor::jobs::Job;
using conductor::jobs::JobFile;
using conductor::jobs::json;

constexpr int kExitOk = 0;
constexpr int kExitJobErrors = 1;
constexpr int kExitUsage = 2;

std::string slurp(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), {}};
  }
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParseError, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// A subcommand input is one payload, an array of payloads, or a report
// produced by an earlier invocation (each entry becomes a job, so that
// `kodaira | ctame` works).
JobFile jobs_from_input(const std::string& kind, const json& doc) {
  JobFile file;
  auto add = [&](const json& payload, std::string label) {
    file.jobs.push_back({kind, payload, std::move(label)});
  };
  if (doc.is_object() && doc.contains("entries") && doc.at("entries").is_array()) {
    std::size_t i = 0;
    for (const auto& entry : doc.at("entries")) {
      const std::string label =
          entry.contains("label") && entry.at("label").is_string()
              ? entry.at("label").get<std::string>()
              : kind + "#" + std::to_string(i);
      add(entry, label);
      ++i;
    }
  } else if (doc.is_array()) {
    for (std::size_t i = 0; i < doc.size(); ++i) {
      add(doc[i], kind + "#" + std::to_string(i));
    }
  } else {
    add(doc, kind);
  }
  return file;
}

struct Options {
  std::string input = "-";
  std::string jobs_path;
  std::string output = "json";
  bool parallel = false;
  unsigned threads = 0;
  std::string kodaira_type;
};

int emit(const json& report, const Options& opt) {
  if (opt.output == "table") {
    std::cout << conductor::jobs::render_table(report);
  } else {
    std::cout << report.dump(2) << "\n";
  }
  return conductor::jobs::error_count(report) == 0 ? kExitOk : kExitJobErrors;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact invariants of degenerating curves: base change conductors, "
               "Milnor numbers of quotient singularities, Swan conductors."};
  app.require_subcommand(0, 1);
  Options opt;
  auto add_common = [&opt](CLI::App* cmd) {
    cmd->add_option("--output", opt.output, "json or table")
        ->check(CLI::IsMember({"json", "table"}));
    cmd->add_flag("--parallel", opt.parallel, "run jobs on several threads");
    cmd->add_option("--threads", opt.threads, "worker count for --parallel");
  };
  add_common(&app);
  app.add_option("--jobs", opt.jobs_path, "batch job file (- for stdin)");

  // Subcommand name -> job kind.
  std::vector<std::pair<CLI::App*, std::string>> commands;
  auto leaf = [&](CLI::App* parent, const std::string& name,
                  const std::string& kind, const std::string& help) {
    auto* cmd = parent->add_subcommand(name, help);
    cmd->add_option("--input", opt.input, "payload file (- for stdin)");
    add_common(cmd);
    commands.emplace_back(cmd, kind);
    return cmd;
  };
  leaf(&app, "graph", "graph", "validate a dual graph and compute its invariants");
  leaf(&app, "ctame", "ctame", "tame base change conductor of a dual graph");
  leaf(&app, "pipeline", "pipeline", "term-by-term conductor pipeline for a graph");
  auto* kod = leaf(&app, "kodaira", "kodaira", "catalog graph of a Kodaira type");
  kod->add_option("--type", opt.kodaira_type, "Kodaira label, e.g. IV or I3*");
  auto* quot = app.add_subcommand("quotsing", "quotient singularities");
  quot->require_subcommand(1);
  leaf(quot, "tame", "quotsing-tame", "tame cyclic quotient (e, r)");
  leaf(quot, "wild", "quotsing-wild", "weak wild quotient or p-cyclic chart");
  leaf(quot, "resolve", "quotsing-resolve", "discrepancy, mu, nu of a resolution");
  leaf(&app, "ramification", "ramification", "Swan and Artin conductors");
  auto* bcc = app.add_subcommand("bcc", "base change conductor engines");
  bcc->require_subcommand(1);
  leaf(bcc, "tame-good", "bcc-tame-good", "potential good reduction, tame cover");
  leaf(bcc, "wild-weak", "bcc-wild-weak", "potential good reduction, weakly wild cover");
  leaf(bcc, "eval", "bcc-eval", "evaluate a form of the base change formula");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const CLI::App* chosen = nullptr;
    std::string kind;
    for (const auto& [cmd, k] : commands) {
      if (cmd->parsed()) {
        chosen = cmd;
        kind = k;
      }
    }
    if (!opt.jobs_path.empty()) {
      if (chosen != nullptr) {
        std::cerr << "error: --jobs cannot be combined with a subcommand\n";
        return kExitUsage;
      }
      const auto file = conductor::jobs::read_job_file(
          conductor::io::parse_text(slurp(opt.jobs_path)));
      return emit(conductor::jobs::batch(file, opt.parallel, opt.threads), opt);
    }
    if (chosen == nullptr) {
      std::cerr << app.help();
      return kExitUsage;
    }
    JobFile file;
    if (kind == "kodaira" && !opt.kodaira_type.empty()) {
      file.jobs.push_back({kind, json{{"type", opt.kodaira_type}}, opt.kodaira_type});
    } else {
      file = jobs_from_input(kind, conductor::io::parse_text(slurp(opt.input)));
    }
    return emit(conductor::jobs::batch(file, opt.parallel, opt.threads), opt);
  } catch (const Error& err) {
    std::cerr << "error: " << conductor::error_code_name(err.code()) << ": "
              << err.what() << "\n";
    return kExitUsage;
  }
}
