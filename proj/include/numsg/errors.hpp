// Exception types thrown by the numsg library.

#ifndef NUMSG_ERRORS_HPP_
#define NUMSG_ERRORS_HPP_

#include <stdexcept>  // for runtime_error
#include <string>     // for string

namespace numsg {

  class error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Bad arguments at the API boundary (F < 1, t < 1, malformed input, ...).
  class invalid_parameters : public error {
   public:
    using error::error;
  };

  // A proposed gap set whose complement is not closed under addition:
  // a and b are non-gaps with a + b a gap.
  class closure_violation : public invalid_parameters {
   public:
    closure_violation(int a, int b);

    int a() const noexcept {
      return _a;
    }
    int b() const noexcept {
      return _b;
    }

   private:
    int _a;
    int _b;
  };

  // Generators with gcd different from 1.
  class not_numerical : public invalid_parameters {
   public:
    using invalid_parameters::invalid_parameters;
  };

  // Request beyond a configured resource bound (the oracle's F limit).
  class limit_exceeded : public error {
   public:
    using error::error;
  };

  // A violated internal invariant. Always a bug.
  class internal_error : public error {
   public:
    using error::error;
  };

}  // namespace numsg

#ifdef NUMSG_CHECKS
#define NUMSG_ASSERT(cond, what)                                         \
  do {                                                                   \
    if (!(cond)) {                                                       \
      throw ::numsg::internal_error(std::string("invariant failed: ")    \
                                    + (what) + " [" #cond "]");          \
    }                                                                    \
  } while (false)
#else
#define NUMSG_ASSERT(cond, what) \
  do {                           \
  } while (false)
#endif

#endif  // NUMSG_ERRORS_HPP_
