// paracomp/errors.hpp
//
// Exception types shared across the library. InputError covers anything
// attributable to user-supplied data or configuration (bad UTF-8, malformed
// TSV rows, out-of-range settings); InternalError covers violated internal
// assumptions.

#ifndef PARACOMP_ERRORS_HPP_
#define PARACOMP_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace paracomp {

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace paracomp

#endif  // PARACOMP_ERRORS_HPP_
