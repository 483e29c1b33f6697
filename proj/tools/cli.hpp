#pragma once

#include <ostream>

namespace sl3t::cli {

enum Exit { kOk = 0, kDomainError = 1, kVerifyFailed = 2 };

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sl3t::cli
