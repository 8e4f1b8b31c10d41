#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "hbcells/cocharacter.hpp"
#include "hbcells/polynomial.hpp"
#include "hbcells/text.hpp"

namespace hbcells {

// Global monomial orders over a fixed ring. `priority` lists variables from
// most to least significant; omitted variables follow in ring order.
class MonomialOrder {
 public:
  enum class Kind { lex, deglex, elimination };

  static MonomialOrder lex(const VariableSet& ring, const std::vector<std::string>& priority = {}) {
    return MonomialOrder(ring, Kind::lex, Kind::lex, priority, {});
  }
  static MonomialOrder deglex(const VariableSet& ring, const std::vector<std::string>& priority = {}) {
    return MonomialOrder(ring, Kind::deglex, Kind::deglex, priority, {});
  }
  // Block order: `front` variables (deglex among themselves) dominate; ties
  // are broken by `back` (lex or deglex) on the remaining variables.
  static MonomialOrder elimination(const VariableSet& ring, const std::vector<std::string>& front,
                                   Kind back = Kind::deglex) {
    if (back == Kind::elimination) throw validation_error("nested elimination orders are not supported");
    return MonomialOrder(ring, Kind::elimination, back, front, front);
  }

  Kind kind() const { return kind_; }
  const VariableSet& ring() const { return ring_; }

  int compare(const Monomial& a, const Monomial& b) const {
    switch (kind_) {
      case Kind::lex:
        return compare_lex(a, b, Block::all);
      case Kind::deglex:
        return compare_deglex(a, b, Block::all);
      case Kind::elimination: {
        int c = compare_deglex(a, b, Block::front);
        if (c != 0) return c;
        return back_ == Kind::lex ? compare_lex(a, b, Block::back) : compare_deglex(a, b, Block::back);
      }
    }
    return 0;
  }

  std::string name() const {
    auto vars = [&](Block block) {
      std::string s;
      for (auto v : perm_)
        if (in(block, v)) s += (s.empty() ? "" : ">") + ring_.name(v);
      return s;
    };
    switch (kind_) {
      case Kind::lex:
        return "lex(" + vars(Block::all) + ")";
      case Kind::deglex:
        return "deglex(" + vars(Block::all) + ")";
      case Kind::elimination:
        return "elim(" + vars(Block::front) + ";" + (back_ == Kind::lex ? "lex(" : "deglex(") + vars(Block::back) + "))";
    }
    return {};
  }

 private:
  enum class Block { all, front, back };

  MonomialOrder(const VariableSet& ring, Kind kind, Kind back, const std::vector<std::string>& priority,
                const std::vector<std::string>& front)
      : ring_(ring), kind_(kind), back_(back), front_(ring.size(), false) {
    std::vector<bool> used(ring.size(), false);
    for (const auto& name : priority) {
      auto v = ring.index(name);
      if (used[v]) throw validation_error("variable '" + name + "' listed twice in a monomial order");
      used[v] = true;
      perm_.push_back(v);
    }
    for (std::size_t v = 0; v < ring.size(); ++v)
      if (!used[v]) perm_.push_back(v);
    for (const auto& name : front) front_[ring.index(name)] = true;
  }

  bool in(Block block, std::size_t v) const {
    return block == Block::all || (block == Block::front) == static_cast<bool>(front_[v]);
  }

  int compare_lex(const Monomial& a, const Monomial& b, Block block) const {
    for (auto v : perm_) {
      if (!in(block, v) || a[v] == b[v]) continue;
      return a[v] < b[v] ? -1 : 1;
    }
    return 0;
  }

  int compare_deglex(const Monomial& a, const Monomial& b, Block block) const {
    std::uint64_t da = 0, db = 0;
    if (block == Block::all) {
      da = a.degree(), db = b.degree();
    } else {
      for (std::size_t v = 0; v < a.size(); ++v)
        if (in(block, v)) da += a[v], db += b[v];
    }
    if (da != db) return da < db ? -1 : 1;
    return compare_lex(a, b, block);
  }

  VariableSet ring_;
  Kind kind_;
  Kind back_;
  std::vector<std::size_t> perm_;
  std::vector<bool> front_;
};

class Ideal {
 public:
  explicit Ideal(VariableSet ring) : ring_(std::move(ring)) {}
  Ideal(VariableSet ring, const std::vector<Polynomial>& generators) : ring_(std::move(ring)) {
    for (const auto& g : generators) add(g);
  }

  const VariableSet& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }

  void add(const Polynomial& g) {
    if (!(g.ring() == ring_)) throw ambient_mismatch("ideal generator over a foreign ring");
    if (!g.is_zero()) gens_.push_back(g);
  }

 private:
  VariableSet ring_;
  std::vector<Polynomial> gens_;
};

namespace detail {

// Terms sorted descending under a MonomialOrder.
using OrderedTerms = std::vector<Term>;

inline OrderedTerms order_terms(const Polynomial& p, const MonomialOrder& ord) {
  OrderedTerms t = p.terms();
  std::sort(t.begin(), t.end(), [&](const Term& a, const Term& b) { return ord.compare(a.monomial, b.monomial) > 0; });
  return t;
}

inline void make_monic(OrderedTerms& p) {
  if (p.empty() || p.front().coeff == 1) return;
  Rational inv = Rational(1) / p.front().coeff;
  for (auto& t : p) t.coeff *= inv;
}

struct OrderGreater {
  const MonomialOrder* ord;
  bool operator()(const Monomial& a, const Monomial& b) const { return ord->compare(a, b) > 0; }
};

// Full reduction of p by the monic polynomials in `reducers`.
inline OrderedTerms reduce(const OrderedTerms& p, const std::vector<const OrderedTerms*>& reducers,
                           const MonomialOrder& ord) {
  std::map<Monomial, Rational, OrderGreater> rem(OrderGreater{&ord});
  for (const auto& t : p) rem.emplace(t.monomial, t.coeff);
  OrderedTerms out;
  while (!rem.empty()) {
    auto lead = rem.begin();
    const OrderedTerms* divisor = nullptr;
    for (const auto* g : reducers)
      if (g->front().monomial.divides(lead->first)) {
        divisor = g;
        break;
      }
    if (!divisor) {
      out.push_back({lead->first, lead->second});
      rem.erase(lead);
      continue;
    }
    Monomial shift = lead->first / divisor->front().monomial;
    Rational c = lead->second;  // divisor is monic
    rem.erase(lead);
    for (std::size_t k = 1; k < divisor->size(); ++k) {
      const auto& t = (*divisor)[k];
      auto key = t.monomial * shift;
      auto it = rem.find(key);
      if (it == rem.end()) {
        rem.emplace(std::move(key), -c * t.coeff);
      } else {
        it->second -= c * t.coeff;
        if (it->second == 0) rem.erase(it);
      }
    }
  }
  return out;
}

inline OrderedTerms s_polynomial(const OrderedTerms& f, const OrderedTerms& g, const Monomial& l,
                                 const MonomialOrder& ord) {
  Monomial sf = l / f.front().monomial, sg = l / g.front().monomial;
  std::map<Monomial, Rational, OrderGreater> acc(OrderGreater{&ord});
  for (std::size_t k = 1; k < f.size(); ++k) acc[f[k].monomial * sf] += f[k].coeff;
  for (std::size_t k = 1; k < g.size(); ++k) acc[g[k].monomial * sg] -= g[k].coeff;
  OrderedTerms out;
  for (auto& [m, c] : acc)
    if (c != 0) out.push_back({m, c});
  return out;
}

struct CriticalPair {
  std::size_t i, j;
  Monomial lcm;
};

// Buchberger's algorithm with the Gebauer-Moeller installation of both
// criteria; pairs are processed by (lcm degree, i, j). Returns the reduced
// basis sorted by descending leading monomial.
inline std::vector<OrderedTerms> buchberger(const std::vector<Polynomial>& input, const MonomialOrder& ord) {
  std::vector<OrderedTerms> polys;
  std::vector<bool> active;
  std::vector<CriticalPair> pairs;

  auto lm = [&](std::size_t i) -> const Monomial& { return polys[i].front().monomial; };

  auto install = [&](OrderedTerms h) {
    make_monic(h);
    const std::size_t hi = polys.size();
    polys.push_back(std::move(h));
    active.push_back(true);
    const Monomial& hm = lm(hi);

    std::vector<CriticalPair> fresh;
    for (std::size_t g = 0; g < hi; ++g)
      if (active[g]) fresh.push_back({g, hi, lcm(lm(g), hm)});
    // chain criterion among the new pairs
    std::vector<CriticalPair> kept;
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      if (coprime(lm(fresh[a].i), hm)) {
        kept.push_back(fresh[a]);
        continue;
      }
      bool redundant = false;
      for (std::size_t b = 0; b < fresh.size() && !redundant; ++b) {
        if (a == b) continue;
        bool divides = fresh[b].lcm.divides(fresh[a].lcm);
        if (!divides) continue;
        // equal lcms: keep exactly one representative
        if (fresh[b].lcm == fresh[a].lcm) redundant = b < a && !coprime(lm(fresh[b].i), hm);
        else redundant = true;
      }
      if (!redundant) kept.push_back(fresh[a]);
    }
    // product criterion
    std::erase_if(kept, [&](const CriticalPair& p) { return coprime(lm(p.i), hm); });
    // prune old pairs made redundant by h
    std::erase_if(pairs, [&](const CriticalPair& p) {
      return hm.divides(p.lcm) && !(lcm(lm(p.i), hm) == p.lcm) && !(lcm(lm(p.j), hm) == p.lcm);
    });
    pairs.insert(pairs.end(), kept.begin(), kept.end());
    for (std::size_t g = 0; g < hi; ++g)
      if (active[g] && hm.divides(lm(g))) active[g] = false;
  };

  auto reducers = [&] {
    std::vector<const OrderedTerms*> r;
    for (std::size_t i = 0; i < polys.size(); ++i)
      if (active[i]) r.push_back(&polys[i]);
    return r;
  };

  for (const auto& p : input) {
    if (p.is_zero()) continue;
    auto h = reduce(order_terms(p, ord), reducers(), ord);
    if (!h.empty()) install(std::move(h));
  }

  while (!pairs.empty()) {
    auto best = std::min_element(pairs.begin(), pairs.end(), [](const CriticalPair& a, const CriticalPair& b) {
      if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
      if (a.i != b.i) return a.i < b.i;
      return a.j < b.j;
    });
    CriticalPair p = *best;
    pairs.erase(best);
    auto h = reduce(s_polynomial(polys[p.i], polys[p.j], p.lcm, ord), reducers(), ord);
    if (!h.empty()) install(std::move(h));
  }

  // minimal basis, then inter-reduction of tails
  std::vector<OrderedTerms> basis;
  for (std::size_t i = 0; i < polys.size(); ++i)
    if (active[i]) basis.push_back(polys[i]);
  std::vector<OrderedTerms> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool drop = false;
    for (std::size_t j = 0; j < basis.size() && !drop; ++j) {
      if (i == j) continue;
      const auto& a = basis[j].front().monomial;
      const auto& b = basis[i].front().monomial;
      drop = a.divides(b) && (!(a == b) || j < i);
    }
    if (!drop) minimal.push_back(basis[i]);
  }
  std::vector<OrderedTerms> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<const OrderedTerms*> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(&minimal[j]);
    OrderedTerms tail(minimal[i].begin() + 1, minimal[i].end());
    OrderedTerms r{minimal[i].front()};
    for (auto& t : reduce(tail, others, ord)) r.push_back(std::move(t));
    reduced.push_back(std::move(r));
  }
  std::sort(reduced.begin(), reduced.end(), [&](const OrderedTerms& a, const OrderedTerms& b) {
    return ord.compare(a.front().monomial, b.front().monomial) > 0;
  });
  return reduced;
}

}  // namespace detail

// Unique reduced Groebner basis of `source` under `order`.
class GroebnerBasis {
 public:
  GroebnerBasis(const Ideal& source, MonomialOrder order) : order_(std::move(order)), source_(source) {
    if (!(order_.ring() == source.ring())) throw ambient_mismatch("order and ideal live over different rings");
    ordered_ = detail::buchberger(source.generators(), order_);
    for (const auto& g : ordered_) {
      basis_.push_back(Polynomial::from_terms(source.ring(), g));
      leading_.push_back(g.front().monomial);
    }
  }

  const MonomialOrder& order() const { return order_; }
  const Ideal& source() const { return source_; }
  const std::vector<Polynomial>& basis() const { return basis_; }
  const std::vector<Monomial>& leading_monomials() const { return leading_; }
  const VariableSet& ring() const { return source_.ring(); }
  bool is_unit() const { return leading_.size() == 1 && leading_.front().is_one(); }

  Polynomial normal_form(const Polynomial& p) const {
    if (!(p.ring() == ring())) throw ambient_mismatch();
    std::vector<const detail::OrderedTerms*> reducers;
    for (const auto& g : ordered_) reducers.push_back(&g);
    return Polynomial::from_terms(ring(), detail::reduce(detail::order_terms(p, order_), reducers, order_));
  }

  bool contains(const Polynomial& p) const { return normal_form(p).is_zero(); }

  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) { return a.basis_ == b.basis_; }

 private:
  MonomialOrder order_;
  Ideal source_;
  std::vector<detail::OrderedTerms> ordered_;
  std::vector<Polynomial> basis_;
  std::vector<Monomial> leading_;
};

inline GroebnerBasis reduced_groebner(const Ideal& ideal, const MonomialOrder& order) { return {ideal, order}; }

inline GroebnerBasis reduced_groebner(const Ideal& ideal) {
  return {ideal, MonomialOrder::deglex(ideal.ring())};
}

inline Polynomial normal_form(const Polynomial& p, const GroebnerBasis& g) { return g.normal_form(p); }

// Standard monomials outside a monomial ideal given by its generators, when
// that set is finite. Every ring variable must have a pure power among them.
inline std::optional<std::vector<Monomial>> standard_monomials(const std::vector<Monomial>& leading,
                                                               std::size_t nvars) {
  for (const auto& m : leading)
    if (m.is_one()) return std::vector<Monomial>{};
  std::vector<std::uint32_t> bound(nvars, 0);
  for (const auto& m : leading) {
    std::size_t support = 0, var = 0;
    for (std::size_t v = 0; v < nvars; ++v)
      if (m[v] > 0) ++support, var = v;
    if (support == 1 && (bound[var] == 0 || m[var] < bound[var])) bound[var] = m[var];
  }
  for (auto b : bound)
    if (b == 0) return std::nullopt;
  std::vector<Monomial> out;
  std::vector<std::uint32_t> e(nvars, 0);
  for (;;) {
    Monomial m(e);
    if (std::none_of(leading.begin(), leading.end(), [&](const Monomial& l) { return l.divides(m); }))
      out.push_back(m);
    std::size_t v = 0;
    while (v < nvars && ++e[v] == bound[v]) e[v++] = 0;
    if (v == nvars) break;
  }
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) { return compare_grlex(a, b) < 0; });
  return out;
}

// Dimension of k[ring]/I; nullopt means infinite.
inline std::optional<std::uint64_t> colength(const GroebnerBasis& g) {
  auto std_monos = standard_monomials(g.leading_monomials(), g.ring().size());
  if (!std_monos) return std::nullopt;
  return std_monos->size();
}

inline std::optional<std::uint64_t> colength(const Ideal& ideal) {
  if (ideal.is_zero()) return ideal.ring().size() == 0 ? std::optional<std::uint64_t>(1) : std::nullopt;
  return colength(reduced_groebner(ideal));
}

inline bool ideal_equal(const Ideal& a, const Ideal& b) {
  if (!(a.ring() == b.ring())) throw ambient_mismatch();
  return reduced_groebner(a).basis() == reduced_groebner(b).basis();
}

inline bool ideal_contains(const Ideal& ideal, const Polynomial& p) { return reduced_groebner(ideal).contains(p); }

// Generators of I intersected with the subring free of `front`.
inline Ideal eliminate(const Ideal& ideal, const std::vector<std::string>& front) {
  if (front.empty()) return ideal;
  GroebnerBasis g(ideal, MonomialOrder::elimination(ideal.ring(), front));
  std::vector<std::size_t> idx;
  for (const auto& name : front) idx.push_back(ideal.ring().index(name));
  Ideal out(ideal.ring());
  for (const auto& p : g.basis())
    if (std::none_of(idx.begin(), idx.end(), [&](std::size_t v) { return p.involves(v); })) out.add(p);
  return out;
}

// I : f^infinity via a fresh Rabinowitsch variable.
inline Ideal saturate(const Ideal& ideal, const Polynomial& f) {
  if (f.is_zero()) throw validation_error("saturation by the zero polynomial");
  if (f.is_constant()) return ideal;
  const auto& ring = ideal.ring();
  const auto u = ring.fresh_name("u");
  const auto ext = ring.extended({u});
  Ideal lifted(ext);
  for (const auto& g : ideal.generators()) lifted.add(rebase(g, ext));
  lifted.add(Polynomial::variable(ext, u) * rebase(f, ext) - Polynomial::constant(ext, 1));
  Ideal eliminated = eliminate(lifted, {u});
  Ideal out(ring);
  for (const auto& g : eliminated.generators()) out.add(rebase(g, ring));
  return out;
}

// Flat limit as t -> 0 of psi(t).I, where psi(t) moves points of the plane by
// (x, y) -> (t^alpha x, t^beta y). On generators this keeps the part of
// maximal psi-weight: each f becomes t^{W(f)} f(t^{-alpha} x, t^{-beta} y),
// W(f) the largest weight among its terms; the family is closed up by
// saturating in t and the fibre at t = 0 is returned as a reduced deglex basis.
inline Ideal gm_limit(const Ideal& ideal, const Cocharacter& psi) {
  const auto& ring = ideal.ring();
  const GroebnerBasis gb(ideal, MonomialOrder::deglex(ring));
  if (!colength(gb)) throw not_finite("flat limit needs an ideal of finite colength");
  const auto xi = ring.find("x"), yi = ring.find("y");
  const auto tname = ring.fresh_name("t");
  const auto ext = ring.extended({tname});
  const auto ti = ext.index(tname);

  auto weight = [&](const Monomial& m) {
    long long w = 0;
    if (xi) w += psi.alpha() * static_cast<long long>(m[*xi]);
    if (yi) w += psi.beta() * static_cast<long long>(m[*yi]);
    return w;
  };

  Ideal family(ext);
  for (const auto& f : gb.basis()) {
    long long top = weight(f.terms().front().monomial);
    for (const auto& t : f.terms()) top = std::max(top, weight(t.monomial));
    std::vector<Term> lifted;
    for (const auto& t : f.terms()) {
      auto e = rebase(Polynomial::monomial(ring, t.monomial), ext).terms().front().monomial.exponents();
      e[ti] = static_cast<Monomial::exponent_type>(top - weight(t.monomial));
      lifted.push_back({Monomial(std::move(e)), t.coeff});
    }
    family.add(Polynomial::from_terms(ext, std::move(lifted)));
  }
  Ideal closed = saturate(family, Polynomial::variable(ext, tname));
  Bindings at_zero{{tname, Polynomial(ext)}};
  Ideal fibre(ring);
  for (const auto& g : closed.generators()) fibre.add(rebase(substitute(g, at_zero), ring));
  return Ideal(ring, reduced_groebner(fibre).basis());
}

// ---------------------------------------------------------------------------
// JSON forms

inline nlohmann::ordered_json to_json(const Ideal& ideal) {
  auto j = nlohmann::ordered_json::array();
  for (const auto& g : ideal.generators()) j.push_back(to_string(g));
  return j;
}

inline Ideal ideal_from_json(const nlohmann::json& j, const VariableSet& ring) {
  if (!j.is_array()) throw parse_error("ideal JSON must be a list of polynomial strings");
  Ideal ideal(ring);
  for (const auto& g : j) {
    if (!g.is_string()) throw parse_error("ideal JSON must be a list of polynomial strings");
    ideal.add(parse_polynomial(g.get<std::string>(), ring));
  }
  return ideal;
}

inline nlohmann::ordered_json to_json(const GroebnerBasis& g) {
  nlohmann::ordered_json j;
  j["order"] = g.order().name();
  j["basis"] = nlohmann::ordered_json::array();
  for (const auto& p : g.basis()) j["basis"].push_back(to_string(p));
  return j;
}

}  // namespace hbcells
