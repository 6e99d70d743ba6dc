#pragma once

#include <stdexcept>
#include <string>

namespace pbw {

// Raised for malformed input (bad ranks, non-reduced words, illegal moves...).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The simply-braided search ran out of its node budget before deciding.
class SearchBudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace pbw
