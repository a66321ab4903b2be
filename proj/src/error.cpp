#include "ktds/error.hpp"

namespace ktds {

namespace {

std::string infeasible_message(int k, int min_degree, bool total) {
  std::string msg = "infeasible: minimum degree " + std::to_string(min_degree) + " < " +
                    std::to_string(total ? k : k - 1);
  msg += total ? " (a k-tuple total dominating set needs delta(G) >= k, k = "
               : " (a k-tuple dominating set needs delta(G) >= k-1, k = ";
  msg += std::to_string(k) + ")";
  return msg;
}

}  // namespace

Infeasible::Infeasible(int k, int min_degree, bool total)
    : Error(infeasible_message(k, min_degree, total)), k_(k), min_degree_(min_degree) {}

SizeCapExceeded::SizeCapExceeded(std::string what_solver, std::size_t size, std::size_t cap)
    : Error(what_solver + ": instance size " + std::to_string(size) + " exceeds cap " +
            std::to_string(cap)),
      size_(size),
      cap_(cap) {}

ParseError::ParseError(const std::string& message, std::size_t position)
    : Error("parse error at position " + std::to_string(position) + ": " + message),
      position_(position) {}

}  // namespace ktds
