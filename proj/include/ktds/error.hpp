#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ktds {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad argument to a constructor or operation (out-of-range sizes, self-loops, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// No k-tuple (total) dominating set exists: some vertex has too few neighbors.
class Infeasible : public Error {
 public:
  Infeasible(int k, int min_degree, bool total);

  int k() const noexcept { return k_; }
  int min_degree() const noexcept { return min_degree_; }

 private:
  int k_;
  int min_degree_;
};

/// Instance larger than the configured limit of the chosen solver.
class SizeCapExceeded : public Error {
 public:
  SizeCapExceeded(std::string what_solver, std::size_t size, std::size_t cap);

  std::size_t size() const noexcept { return size_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t size_;
  std::size_t cap_;
};

/// A documented precondition of an operation does not hold; the message names the clause.
class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position);

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Internal defect: a construction that the theory guarantees could not be produced.
class NoConstructionFound : public Error {
 public:
  using Error::Error;
};

}  // namespace ktds
