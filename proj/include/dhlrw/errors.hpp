#pragma once

#include <stdexcept>
#include <string>

namespace dhlrw {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& msg)
      : Error("line " + std::to_string(line) + ": " + msg), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

class SelfLoop : public ParseError {
 public:
  using ParseError::ParseError;
};

class NotDistanceHereditary : public Error {
 public:
  using Error::Error;
};

class NotConnected : public Error {
 public:
  using Error::Error;
};

class BranchWidthTooLarge : public Error {
 public:
  using Error::Error;
};

class OracleInconsistent : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class InternalError : public Error {
 public:
  using Error::Error;
};

#define DHLRW_CHECK(cond, msg)                                              \
  do {                                                                      \
    if (!(cond))                                                            \
      throw ::dhlrw::InternalError(std::string(msg) + " (" __FILE__ ":" +   \
                                   std::to_string(__LINE__) + ")");         \
  } while (0)

}  // namespace dhlrw
