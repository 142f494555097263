#pragma once

#include <stdexcept>
#include <string>

namespace cohomlab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands carry different coefficient modules (or live on different spaces).
class ModuleMismatch : public Error {
 public:
  using Error::Error;
};

/// A graph passed to the metric builder is not connected.
class DisconnectedGraph : public Error {
 public:
  DisconnectedGraph(std::size_t u, std::size_t v)
      : Error("graph is disconnected: vertex " + std::to_string(v) +
              " is unreachable from vertex " + std::to_string(u)),
        from(u),
        unreachable(v) {}

  std::size_t from;
  std::size_t unreachable;
};

}  // namespace cohomlab
