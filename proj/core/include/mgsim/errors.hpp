#ifndef MGSIM_ERRORS_HPP
#define MGSIM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mgsim {

/// Base class for all mgsim failures.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// -- dataflow kernel --
class CyclicWithoutDelay : public Error {
 public:
  using Error::Error;
};
class InconsistentTimestep : public Error {
 public:
  using Error::Error;
};
class RateMismatch : public Error {
 public:
  using Error::Error;
};
class GraphError : public Error {
 public:
  using Error::Error;
};

// -- electrical network --
class NonPositiveParameter : public Error {
 public:
  using Error::Error;
};
class SingularMatrix : public Error {
 public:
  using Error::Error;
};
class NonFiniteSolution : public Error {
 public:
  using Error::Error;
};

// -- signal blocks / components --
class ImproperTransferFunction : public Error {
 public:
  using Error::Error;
};
class InvalidParams : public Error {
 public:
  using Error::Error;
};

// -- metrics --
class LengthMismatch : public Error {
 public:
  using Error::Error;
};
class NeverSettles : public Error {
 public:
  using Error::Error;
};

// -- dc plant / co-simulation --
class NonFiniteState : public Error {
 public:
  using Error::Error;
};
class TransportClosed : public Error {
 public:
  using Error::Error;
};
class PeerUnreachable : public Error {
 public:
  using Error::Error;
};

// -- configuration --
class ParseError : public Error {
 public:
  using Error::Error;
};
class UnknownKey : public Error {
 public:
  using Error::Error;
};
class OutOfRange : public Error {
 public:
  using Error::Error;
};

}  // namespace mgsim

#endif
