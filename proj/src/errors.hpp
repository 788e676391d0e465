#pragma once

#include <stdexcept>
#include <string>

namespace etcons {

enum class ErrorKind {
  Dimension,
  Domain,
  NoSpanningTree,
  Infeasible,
  Diverged,
  Io,
  Invalid,
  Internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string msg)
      : std::runtime_error(std::move(msg)), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void throw_dim(const std::string& msg) {
  throw Error(ErrorKind::Dimension, msg);
}
[[noreturn]] inline void throw_domain(const std::string& msg) {
  throw Error(ErrorKind::Domain, msg);
}

}  // namespace etcons
