#ifndef SPNI_ERRORS_HPP
#define SPNI_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace spni {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Bad user input: unknown ids, malformed JSON, invalid generator parameters.
class InputError : public Error {
public:
  using Error::Error;
};

class ParseError : public InputError {
public:
  using InputError::InputError;
};

class ParameterError : public InputError {
public:
  using InputError::InputError;
};

// The finite range of a coordinate would be exceeded.
class OverflowError : public Error {
public:
  using Error::Error;
};

// Vertices or arcs off every s-t path, self-loops, unreachable sink.
class MalformedInstance : public Error {
public:
  using Error::Error;
};

class NotSeriesParallel : public Error {
public:
  using Error::Error;
};

class InstanceTooLarge : public Error {
public:
  InstanceTooLarge(std::uint64_t estimate, std::uint64_t cap, bool exact)
      : Error("instance too large for exhaustive enumeration: " +
              std::string(exact ? "" : "at least ") + std::to_string(estimate) +
              " feasible strategies exceed cap " + std::to_string(cap)),
        estimate_(estimate), cap_(cap), exact_(exact) {}

  // Count of cost-feasible strategies, saturated at UINT64_MAX; a lower
  // bound when !exact().
  std::uint64_t estimate() const noexcept { return estimate_; }
  std::uint64_t cap() const noexcept { return cap_; }
  bool exact() const noexcept { return exact_; }

private:
  std::uint64_t estimate_;
  std::uint64_t cap_;
  bool exact_;
};

} // namespace spni

#endif // SPNI_ERRORS_HPP
