#ifndef NILREP_CLI_HPP
#define NILREP_CLI_HPP

#include <json.hpp>

#include <string>
#include <vector>

namespace nilrep {
namespace cli {

/// Entry point for the nilrep tool. Returns the process exit code:
/// 0 success, 1 domain error (reported as {"error": {...}} on stderr),
/// 2 usage error.
int run(int argc, char** argv);

/// Same, driven by argument strings (for tests). Report bytes land in
/// out, error JSON in err.
int run_capture(const std::vector<std::string>& args, std::string& out, std::string& err);

} // namespace cli
} // namespace nilrep

#endif
