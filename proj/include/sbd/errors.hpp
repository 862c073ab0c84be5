#ifndef SBD_ERRORS_HPP
#define SBD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sbd {

// Base for everything thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParamViolation : public Error {
 public:
  using Error::Error;
};

// Names the first violated design axiom (1..4; 0 = the k-subset requirement)
// together with a concrete witness.
class AxiomViolation : public Error {
 public:
  AxiomViolation(int which, const std::string& what)
      : Error("axiom " + std::to_string(which) + ": " + what),
        axiom(which),
        witness(what) {}
  int axiom;
  std::string witness;
};

class ParseError : public Error {
 public:
  ParseError(int line_no, const std::string& what)
      : Error("line " + std::to_string(line_no) + ": " + what), line(line_no) {}
  int line;
};

class RangeError : public Error {
 public:
  using Error::Error;
};
class RepeatError : public Error {
 public:
  using Error::Error;
};
class DegreeMismatch : public Error {
 public:
  using Error::Error;
};
class CapExceeded : public Error {
 public:
  using Error::Error;
};
class MissingFixCount : public Error {
 public:
  using Error::Error;
};

class NotAutomorphism : public Error {
 public:
  using Error::Error;
};
class NotPrimeOrder : public Error {
 public:
  using Error::Error;
};
class NotPrime : public Error {
 public:
  using Error::Error;
};
class HypothesisViolation : public Error {
 public:
  using Error::Error;
};

class UnsupportedExponent : public Error {
 public:
  using Error::Error;
};
class MissingFact : public Error {
 public:
  using Error::Error;
};
class EqualPrimes : public Error {
 public:
  using Error::Error;
};

class NotDifferenceSet : public Error {
 public:
  using Error::Error;
};
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace sbd

#endif
