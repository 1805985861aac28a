/*
  This is errors.hpp, part of smallchar.

  One exception type for the whole library. Every failure carries a stable
  category so the C layer can map it to an error code without parsing text.
*/

#pragma once

#include <stdexcept>
#include <string>

namespace smallchar {

enum class errc {
  ok = 0,
  invalid_argument = 1,
  unsupported_characteristic = 2,
  precondition = 3,
  resource_limit = 4,
  not_implemented = 5,
  invalid_datum = 6,
  inconsistency = 7,
  internal = 8,
};

class error : public std::runtime_error {
 public:
  error(errc c, const std::string& what) : std::runtime_error(what), code_(c) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc c, const std::string& what) {
  throw error(c, what);
}

/* Internal consistency assertions. These must hold whenever the input data
   is a valid root system or Lie algebra; a firing check is not a user error
   and construction is not recoverable past it. */
inline void check(bool ok, const char* what) {
  if (!ok) throw error(errc::inconsistency, what);
}

}  // namespace smallchar
