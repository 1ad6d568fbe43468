#pragma once

#include <stdexcept>
#include <string>

namespace surfenum {

// Malformed PD text or JSON.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Well-formed syntax that does not describe a diagram (label multiplicity,
// non-planar rotation data).
class StructureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An operation was handed input outside its contract, e.g. enumerating on a
// diagram that failed validation.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// The search-space guard tripped; partial output must not be reported as
// complete.
class GuardAbort : public std::runtime_error {
 public:
  GuardAbort(const std::string& what, unsigned long long visited)
      : std::runtime_error(what), visited_(visited) {}
  unsigned long long visited() const noexcept { return visited_; }

 private:
  unsigned long long visited_;
};

// A proven bound was violated by the enumerator: always a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace surfenum
