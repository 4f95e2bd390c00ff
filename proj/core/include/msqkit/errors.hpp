#pragma once

#include <stdexcept>
#include <string>

namespace msqkit {

// Base for everything thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Unreadable, malformed or inconsistent input data (bad embedding file,
// duplicate ids in a gold file, missing prediction ids, ...).
struct DataError : Error {
  using Error::Error;
};

// A verified property of the toolkit was violated, e.g. a user-supplied
// mask table that is not mutually exclusive.
struct InvariantError : Error {
  using Error::Error;
};

}  // namespace msqkit
