#pragma once

#include <stdexcept>

namespace lpalie {

/// An operation was called outside the hypotheses it is defined for.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace lpalie
