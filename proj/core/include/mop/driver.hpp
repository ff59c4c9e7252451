#pragma once

#include <string>
#include <vector>

namespace mop {

// Command-line driver. Exit codes: 0 all certificates pass, 1 a certificate
// failed (the report is still written), 2 usage or parse error, 3 a check
// was inconclusive (window exhausted).
int run_cli(const std::vector<std::string>& args);

}  // namespace mop
