#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ltlwb {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

class NotExpressible : public Error {
 public:
  using Error::Error;
};

class FragmentMismatch : public Error {
 public:
  using Error::Error;
};

class LimitExceeded : public Error {
 public:
  using Error::Error;
};

class InvalidInstance : public Error {
 public:
  using Error::Error;
};

}  // namespace ltlwb
