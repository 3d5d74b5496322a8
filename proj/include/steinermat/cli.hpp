#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace steinermat::cli {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

/// Runs one command line (without the program name).
///
///   gen path --n N
///   gen caterpillar --n N --leaves a,b,...
///   dk --k K [--tree FILE] [--format csv|json] [--order lex|canonical]
///   rank [--tree FILE]
///   verify --check NAME [--n N] [--leaves a,b,...] [--tree FILE] [--no-timing]
///   survey --max N [--jobs J]
///
/// Trees are read from stdin when no source is given. Returns 0 on success,
/// 1 when a verification fails, 2 on usage or input errors.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace steinermat::cli
