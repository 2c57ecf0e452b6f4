#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace hookblock {

/// A computed structure disagreed with an independent computation.
class CrossCheckFailure : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

struct Check
{
  std::string name;
  bool passed = false;
  std::string detail;
};

struct Report
{
  std::string suite;
  std::vector<Check> checks;
  bool skipped = false;
  std::string skip_reason;

  void add(std::string name, bool passed, std::string detail = {})
  {
    checks.push_back({std::move(name), passed, std::move(detail)});
  }

  bool passed() const
  {
    return skipped
           || std::all_of(checks.begin(), checks.end(),
                          [](const Check &c) { return c.passed; });
  }
};

} // namespace hookblock
