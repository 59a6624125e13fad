#pragma once

#include <functional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace domgame {

struct SuiteItem {
  int number;
  std::string name;   // short tag used by --only, e.g. "cycles"
  std::string claim;  // one-line description
  // Returns a short detail line; throws SuiteFailure on the first failed check.
  std::function<std::string()> run;
};

class SuiteFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ItemOutcome {
  int number = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

std::vector<SuiteItem> acceptance_items();

// `only` is empty (everything) or a comma separated list of item numbers
// and names.
bool item_selected(const SuiteItem& item, std::string_view only);

// Runs the selected items in order, writing one line per item to `out` as
// it finishes.
std::vector<ItemOutcome> run_suite(std::string_view only, std::ostream& out);

std::string format_outcome(const ItemOutcome& o);

}  // namespace domgame
