#pragma once

#include <string>

#include "hbcells/errors.hpp"
#include "hbcells/polynomial.hpp"

namespace hbcells {

// One-parameter subgroup t -> (t^alpha, t^beta) of the two-torus acting on
// the plane; equivalently the grading deg x = alpha, deg y = beta.
class Cocharacter {
 public:
  Cocharacter(long long alpha, long long beta) : alpha_(alpha), beta_(beta) {
    if (alpha == 0 && beta == 0) throw validation_error("cocharacter (0,0) is not allowed");
  }

  long long alpha() const { return alpha_; }
  long long beta() const { return beta_; }

  long long pair(const Weight& w) const { return alpha_ * w.wx + beta_ * w.wy; }

  std::string to_string() const { return "(" + std::to_string(alpha_) + "," + std::to_string(beta_) + ")"; }

  friend bool operator==(const Cocharacter&, const Cocharacter&) = default;

 private:
  long long alpha_;
  long long beta_;
};

}  // namespace hbcells
