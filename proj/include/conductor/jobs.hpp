#pragma once

#include <string>
#include <vector>

#include "conductor/json_io.hpp"

namespace conductor::jobs {

using io::json;

struct Job {
  std::string kind;
  json payload;
  std::string label;
};

struct JobFile {
  std::string version = "1";
  std::vector<Job> jobs;
};

const std::vector<std::string>& known_kinds();

// Reads {"version": "1", "jobs": [...]}. Throws kParseError for a
// structurally malformed file (the CLI maps this to exit code 2).
JobFile read_job_file(const json& doc);

// Parses the payload against the kind's schema without computing anything.
// Throws kSchemaError.
void check_payload(const Job& job);

// One report entry: {label, kind, status, result | error, provenance}.
// Never throws for job-level failures.
json run(const Job& job);

// Validates every payload, then runs the jobs that passed, in parallel when
// asked. Output order follows input order regardless of scheduling.
json batch(const JobFile& file, bool parallel, unsigned threads = 0);

// Number of entries with status "error".
std::size_t error_count(const json& report);

// Plain-text rendering of a report.
std::string render_table(const json& report);

}  // namespace conductor::jobs
