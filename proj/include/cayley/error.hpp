#ifndef CAYLEY_ERROR_HPP
#define CAYLEY_ERROR_HPP

#include <stdexcept>
#include <string>

namespace cayley {

// Domain-level failure with a stable machine-readable code, e.g.
// "not-a-latin-square" or "level-too-large".  The CLI maps these to
// exit code 1; usage problems are handled separately (exit code 2).
class DomainError : public std::runtime_error {
public:
  DomainError(std::string code, const std::string& what)
      : std::runtime_error(code + ": " + what), code_(std::move(code)) {}

  const std::string& code() const { return code_; }

private:
  std::string code_;
};

} // namespace cayley

#endif
