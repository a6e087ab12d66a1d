#pragma once

#include <stdexcept>
#include <string>

namespace misrecon {

// Bad input from a caller or a file. Maps to exit status 2 in the CLI.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A construction produced something it should not have. Exit status 3.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

// The simulator hit its round cap before every node produced output.
struct SimTimeout : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace misrecon
