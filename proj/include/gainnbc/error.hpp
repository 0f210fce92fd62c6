#pragma once

#include <stdexcept>
#include <string>

namespace gainnbc {

enum class ErrorKind {
  kInvalidArgument,  // malformed or inconsistent input
  kOutOfScope,       // valid input outside an operation's domain (e.g. a+b not in {0,1})
  kGuard,            // instance too large for an exhaustive path
  kParse,            // text / JSON that cannot be decoded
  kInternal,         // broken internal consistency check
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void require(bool cond, const std::string& what) {
  if (!cond) fail(ErrorKind::kInvalidArgument, what);
}

}  // namespace gainnbc
