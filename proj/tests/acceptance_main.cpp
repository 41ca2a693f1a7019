#include <iostream>

#include "cayley/verify.hpp"

int main() {
  auto results = cayley::verify::run_all(&std::cout);
  std::cout << "\n";
  int failures = cayley::verify::print_table(results, std::cout);
  return failures == 0 ? 0 : 1;
}
