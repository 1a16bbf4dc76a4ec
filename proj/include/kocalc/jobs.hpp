#pragma once

#include "kocalc/json_io.hpp"

#include <string>

namespace kocalc {

// A parsed job. Spaces and twists resolve builtin names or explicit JSON;
// see the schema (kocalc --schema) for the exact input format.
struct JobResult {
    json report;
    int exit_code = 0;  // 0 ok, 2 validation error, 3 unsupported combination
};

// Runs a job given as a JSON document. Never throws; errors are encoded in
// the report and exit code. Deterministic: identical input yields
// byte-identical serialized output.
JobResult run_job(const json& job);

std::string job_schema();

// Worker-thread bound for embarrassingly parallel sweeps (verify matrix).
void set_worker_threads(int n);
int worker_threads();

}  // namespace kocalc
