#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lpb {

/// Process exit statuses of the `lpb` tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitNegative = 1,
  kExitExpression = 2,
  kExitUsage = 3,
  kExitIo = 4,
  kExitMalformed = 5,
  kExitInternal = 6,
};

/// Runs the tool with argv-style arguments (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct CorpusLine {
  int line_number;
  std::string expression;
  enum class Expect { None, Internal, NotInternal } expect = Expect::None;
};

/// Parses the line-oriented corpus format. Throws MalformedInput with the line number.
std::vector<CorpusLine> parse_corpus(std::istream& in);

}  // namespace lpb
