#pragma once

#include <stdexcept>
#include <string>

namespace lrf {

/// Invalid input, malformed file, or a guard refusal. The message is a
/// single-line diagnostic naming the offending token.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace lrf
