#pragma once

#include <stdexcept>
#include <string>

namespace hbcells {

// Every failure raised by the library derives from hbcells::error so callers
// (the CLI in particular) can map them onto exit codes in one place.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ambient_mismatch : public error {
 public:
  ambient_mismatch() : error("polynomials live over different variable sets") {}
  explicit ambient_mismatch(const std::string& what) : error(what) {}
};

class division_error : public error {
 public:
  using error::error;
};

class shape_error : public error {
 public:
  using error::error;
};

class degenerate_resultant : public error {
 public:
  using error::error;
};

class parse_error : public error {
 public:
  using error::error;
};

class validation_error : public error {
 public:
  using error::error;
};

class unknown_parameter : public error {
 public:
  using error::error;
};

class not_finite : public error {
 public:
  using error::error;
};

}  // namespace hbcells
