#pragma once

#include <iosfwd>

namespace xover {

/// Entry point of the `xover` tool: run-nsga2, run-ga, verify, tables.
/// Returns the process exit code.
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace xover
