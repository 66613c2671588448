#pragma once

#include <stdexcept>
#include <string>

namespace wilton {

// Argument outside a documented table or parameter range.
class range_error : public std::out_of_range {
 public:
  explicit range_error(const std::string& what) : std::out_of_range(what) {}
};

// Evaluation requested at a pole of a meromorphic function.
class pole_error : public std::domain_error {
 public:
  explicit pole_error(const std::string& what) : std::domain_error(what) {}
};

// An integrator exhausted its subdivision budget. Carries the partial value
// and the error estimate it had reached, so callers can decide to keep going.
class convergence_error : public std::runtime_error {
 public:
  convergence_error(const std::string& what, double partial_re,
                    double partial_im, double err)
      : std::runtime_error(what),
        partial_re(partial_re),
        partial_im(partial_im),
        err_estimate(err) {}
  double partial_re;
  double partial_im;
  double err_estimate;
};

// A guard (breakpoint count, table size, ...) would be exceeded.
class resource_error : public std::runtime_error {
 public:
  explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace wilton
