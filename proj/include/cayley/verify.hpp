#ifndef CAYLEY_VERIFY_HPP
#define CAYLEY_VERIFY_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace cayley::verify {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

// Runs the whole acceptance suite; one result per criterion.
std::vector<CriterionResult> run_all(std::ostream* progress = nullptr);

// Prints one pass/fail line per criterion; returns the failure count.
int print_table(const std::vector<CriterionResult>& results, std::ostream& os);

} // namespace cayley::verify

#endif
