#ifndef RANKCODES_ERRORS_HPP
#define RANKCODES_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rankcodes {

// Caller passed parameters outside an operation's contract.
struct usage_error : std::invalid_argument {
  explicit usage_error(const std::string& what) : std::invalid_argument(what) {}
};

// An exact computation would exceed its configured budget. The message names
// the cap so scripts can distinguish honest limits from bugs.
struct capacity_error : std::runtime_error {
  explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

// A stamped claim (code file header, witness) failed revalidation.
struct verify_error : std::runtime_error {
  explicit verify_error(const std::string& what) : std::runtime_error(what) {}
};

struct io_error : std::runtime_error {
  explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace rankcodes

#endif
