#pragma once

#include <string>
#include <vector>

#include "dca/json_io.hpp"

namespace dca {

// Outcome record for one CLI run. Everything except elapsed_ms is a pure
// function of the command line and the input file, so reports can be
// compared byte-for-byte in tests after masking the timing field.
struct RunReport {
    std::string command;                     // e.g. "mcmf solve"
    std::string instance_digest;             // fnv1a_hex of the canonical input encoding
    int status = 0;                          // 0 ok, 1 infeasible/rejected, 2 verification failed, 3 bad input
    std::string message;                     // human-readable detail for nonzero status
    Json payload = Json::object();           // command-specific result document
    std::vector<std::string> verifications;  // "<name>: ok" or "<name>: FAILED (<detail>)"
    double elapsed_ms = 0.0;
};

// 64-bit FNV-1a digest rendered as 16 lowercase hex digits.
std::string fnv1a_hex(const std::string& bytes);

// Marks the report as failed-verification unless every line ends in ": ok".
void finalize_status(RunReport& r);

Json report_to_json(const RunReport& r);
std::string report_to_text(const RunReport& r);

}  // namespace dca
