#pragma once

#include <stdexcept>
#include <string>

namespace confhodge {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input documents, graph specs, rationals.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Input that parses but violates a mathematical precondition.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// A request outside what a route supports (e.g. the E2 model on a partial graph).
class ScopeError : public Error {
 public:
  using Error::Error;
};

// An internal identity that must hold exactly did not (d^2 != 0, ill-defined
// quotient map). Always indicates a sign or presentation bug upstream.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace confhodge
