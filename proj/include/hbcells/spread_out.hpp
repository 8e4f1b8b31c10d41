#pragma once

#include <compare>
#include <cstdio>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hbcells/poly_matrix.hpp"
#include "hbcells/staircase.hpp"

namespace hbcells {

// Position of a parameter a[i,j,k]: matrix entry (i, j) (1-based), coefficient
// of y^k in that entry.
struct ParamKey {
  unsigned i = 0, j = 0, k = 0;

  std::string name() const {
    return "a[" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + "]";
  }

  static ParamKey parse(std::string_view text) {
    std::string s;
    for (char c : text)
      if (c != ' ') s += c;
    ParamKey key;
    char tail = 0;
    int consumed = 0;
    if (std::sscanf(s.c_str(), "a[%u,%u,%u%c%n", &key.i, &key.j, &key.k, &tail, &consumed) != 4 || tail != ']' ||
        static_cast<std::size_t>(consumed) != s.size())
      throw parse_error("bad parameter name '" + std::string(text) + "', expected a[i,j,k]");
    return key;
  }

  friend auto operator<=>(const ParamKey&, const ParamKey&) = default;
};

struct ParamIndex {
  ParamKey key;
  Weight weight;  // (i - j, m_j - m_{i-1} - k)
  std::string name() const { return key.name(); }
};

// Rational values for (a subset of) the parameters; missing ones mean 0.
using Assignment = std::map<ParamKey, Rational>;

// Parameters allowed by the degree bounds: deg_y a[i,j] < d_j below the
// diagonal and < d_i on or above it. Empty ranges carry no parameters.
inline std::vector<ParamIndex> parameter_registry(const Staircase& e) {
  std::vector<ParamIndex> out;
  const unsigned t = e.t();
  for (unsigned i = 1; i <= t + 1; ++i)
    for (unsigned j = 1; j <= t; ++j) {
      const unsigned bound = i > j ? e.d(j) : e.d(i);
      for (unsigned k = 0; k < bound; ++k) {
        Weight w{static_cast<long long>(i) - static_cast<long long>(j),
                 static_cast<long long>(e.m_at(j)) - static_cast<long long>(e.m_at(i - 1)) - static_cast<long long>(k)};
        out.push_back({{i, j, k}, w});
      }
    }
  return out;
}

struct DegreeMatrices {
  std::vector<std::vector<long long>> ux;  // i - j
  std::vector<std::vector<long long>> uy;  // m_j - m_{i-1}
};

inline DegreeMatrices degree_matrices(const Staircase& e) {
  DegreeMatrices out;
  for (unsigned i = 1; i <= e.t() + 1; ++i) {
    std::vector<long long> rx, ry;
    for (unsigned j = 1; j <= e.t(); ++j) {
      rx.push_back(static_cast<long long>(i) - static_cast<long long>(j));
      ry.push_back(static_cast<long long>(e.m_at(j)) - static_cast<long long>(e.m_at(i - 1)));
    }
    out.ux.push_back(std::move(rx));
    out.uy.push_back(std::move(ry));
  }
  return out;
}

inline VariableSet plane_ring() { return VariableSet{"x", "y"}; }

// The Hilbert-Burch matrix: y^{d_i} on (i,i), -x on (i+1,i), zero elsewhere.
inline PolyMatrix hilbert_burch_matrix(const Staircase& e, const VariableSet& ring) {
  PolyMatrix m(ring, e.t() + 1, e.t());
  for (unsigned i = 1; i <= e.t(); ++i) {
    m(i - 1, i - 1) = Polynomial::variable(ring, "y", e.d(i));
    if (e.d(i) == 0) m(i - 1, i - 1) = Polynomial::constant(ring, 1);
    m(i, i - 1) = -Polynomial::variable(ring, "x");
  }
  return m;
}

inline PolyMatrix hilbert_burch_matrix(const Staircase& e) { return hilbert_burch_matrix(e, plane_ring()); }

// The spread-out matrix: the Hilbert-Burch matrix plus a[i,j,k] y^k in every
// slot allowed by the registry. The symbolic ring is x, y, t, u followed by
// the parameters in (i, j, k) order.
class SpreadOutMatrix {
 public:
  explicit SpreadOutMatrix(Staircase e)
      : staircase_(std::move(e)), registry_(parameter_registry(staircase_)), plane_(plane_ring()) {
    std::vector<std::string> names{"x", "y", "t", "u"};
    for (const auto& p : registry_) {
      slot_.emplace(p.key, slot_.size());
      names.push_back(p.name());
    }
    ring_ = VariableSet(std::move(names));
    symbolic_ = build(ring_, [&](std::size_t idx) { return Polynomial::variable(ring_, registry_[idx].name()); });
  }

  const Staircase& staircase() const { return staircase_; }
  const std::vector<ParamIndex>& registry() const { return registry_; }
  const VariableSet& ring() const { return ring_; }
  const VariableSet& plane() const { return plane_; }
  const PolyMatrix& symbolic() const { return symbolic_; }

  std::optional<std::size_t> find(const ParamKey& key) const {
    auto it = slot_.find(key);
    if (it == slot_.end()) return std::nullopt;
    return it->second;
  }

  std::size_t slot(const ParamKey& key) const {
    auto s = find(key);
    if (!s) throw unknown_parameter("parameter " + key.name() + " is not in the registry of E=" + staircase_.to_string());
    return *s;
  }

  // Symbolic matrix with every parameter outside `keep` set to zero.
  PolyMatrix restricted(const std::vector<bool>& keep) const {
    if (keep.size() != registry_.size()) throw validation_error("restriction mask has the wrong size");
    return build(ring_, [&](std::size_t idx) {
      return keep[idx] ? Polynomial::variable(ring_, registry_[idx].name()) : Polynomial(ring_);
    });
  }

  PolyMatrix restricted(const std::vector<ParamKey>& keep) const {
    std::vector<bool> mask(registry_.size(), false);
    for (const auto& k : keep) mask[slot(k)] = true;
    return restricted(mask);
  }

  // Numeric matrix over the plane ring k[x, y].
  PolyMatrix specialized(const Assignment& values) const {
    std::vector<Rational> v(registry_.size(), Rational(0));
    for (const auto& [key, value] : values) v[slot(key)] = value;
    return build(plane_, [&](std::size_t idx) { return Polynomial::constant(plane_, v[idx]); });
  }

  // x -> (1,0), y -> (0,1), t, u -> (0,0), a[i,j,k] -> its registry weight.
  WeightAssignment weights() const {
    std::map<std::string, Weight, std::less<>> w{{"x", {1, 0}}, {"y", {0, 1}}, {"t", {0, 0}}, {"u", {0, 0}}};
    for (const auto& p : registry_) w.emplace(p.name(), p.weight);
    return WeightAssignment(ring_, w);
  }

 private:
  template <class ParamValue>
  PolyMatrix build(const VariableSet& ring, ParamValue&& value) const {
    PolyMatrix m = hilbert_burch_matrix(staircase_, ring);
    for (std::size_t idx = 0; idx < registry_.size(); ++idx) {
      const auto& [i, j, k] = registry_[idx].key;
      Polynomial coeff = value(idx);
      if (coeff.is_zero()) continue;
      if (k > 0) coeff = coeff * Polynomial::variable(ring, "y", k);
      m(i - 1, j - 1) += coeff;
    }
    return m;
  }

  Staircase staircase_;
  std::vector<ParamIndex> registry_;
  std::map<ParamKey, std::size_t> slot_;
  VariableSet ring_;
  VariableSet plane_;
  PolyMatrix symbolic_{VariableSet{}, 0, 0};
};

}  // namespace hbcells
