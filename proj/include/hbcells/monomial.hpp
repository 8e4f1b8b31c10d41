#pragma once

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace hbcells {

// Exponent vector over an ambient VariableSet; the total degree is cached.
class Monomial {
 public:
  using exponent_type = std::uint32_t;
  // Inline storage covers x, y, t, u and the parameters of small staircases.
  using exponent_vector = boost::container::small_vector<exponent_type, 24>;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(exponent_vector exps) : exps_(std::move(exps)) {
    for (auto e : exps_) degree_ += e;
  }
  explicit Monomial(const std::vector<exponent_type>& exps) : Monomial(exponent_vector(exps.begin(), exps.end())) {}

  static Monomial unit(std::size_t nvars, std::size_t var, exponent_type power = 1) {
    Monomial m(nvars);
    m.exps_[var] = power;
    m.degree_ = power;
    return m;
  }

  std::size_t size() const { return exps_.size(); }
  exponent_type operator[](std::size_t i) const { return exps_[i]; }
  std::uint64_t degree() const { return degree_; }
  const exponent_vector& exponents() const { return exps_; }
  bool is_one() const { return degree_ == 0; }

  void set(std::size_t i, exponent_type e) {
    degree_ = degree_ - exps_[i] + e;
    exps_[i] = e;
  }

  bool divides(const Monomial& other) const {
    assert(size() == other.size());
    if (degree_ > other.degree_) return false;
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] > other.exps_[i]) return false;
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    assert(a.size() == b.size());
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r.exps_[i] = a.exps_[i] + b.exps_[i];
    r.degree_ = a.degree_ + b.degree_;
    return r;
  }

  // Precondition: b divides a.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    assert(b.divides(a));
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r.exps_[i] = a.exps_[i] - b.exps_[i];
    r.degree_ = a.degree_ - b.degree_;
    return r;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
      r.degree_ += r.exps_[i];
    }
    return r;
  }

  friend bool coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a.exps_[i] && b.exps_[i]) return false;
    return true;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

 private:
  exponent_vector exps_;
  std::uint64_t degree_ = 0;
};

// Graded lexicographic comparison on the ambient variable order: <0, 0, >0.
inline int compare_grlex(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (auto e : m.exponents()) h = (h ^ e) * 0x100000001b3ull;
    return h;
  }
};

}  // namespace hbcells
