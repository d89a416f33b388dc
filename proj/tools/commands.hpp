#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "quadfrac/decomposition.hpp"

// Command layer behind the CLI: each returns the process exit code.
// Exit codes: 0 success/true, 1 error/false, 2 exceptional-set rejection.
namespace quadfrac::cli {

inline const char* kSchemaVersion = "1";

struct CommonOptions {
    bool pretty = false;
};

int cmd_decompose(std::ostream& out, std::ostream& err, long d, const std::string& element,
                  bool pad_three, const CommonOptions& common);

int cmd_verify(std::ostream& out, std::ostream& err, long d, const std::string& element,
               const std::vector<std::string>& term_texts, const CommonOptions& common);

int cmd_pell(std::ostream& out, std::ostream& err, long d, int max_power,
             const std::string& max_coord, const CommonOptions& common);

int cmd_scan(std::ostream& out, std::ostream& err, long d, const std::string& norm_bound,
             bool conjecture, const std::string& den_bound, int jobs, const CommonOptions& common);

// Applies the QUADFRAC_JOBS environment cap.
int effective_jobs(int requested);

}  // namespace quadfrac::cli
