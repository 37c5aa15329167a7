#pragma once

#include <stdexcept>
#include <string>

namespace hmc {

// Bad arguments or malformed input data; maps to CLI exit code 2.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Input is structurally fine but carries too little information for the
// requested analysis (e.g. a tail fit with fewer than four usable levels);
// maps to CLI exit code 3.
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

// A quantitative bound that the library promises to maintain was violated
// beyond its stated tolerance; maps to CLI exit code 4.
class BoundViolation : public std::runtime_error {
 public:
  explicit BoundViolation(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace hmc
