#ifndef COCYCLE_TESTS_ORACLES_HPP
#define COCYCLE_TESTS_ORACLES_HPP

// Reference implementations written directly from the defining formulas. They
// share no code with the library beyond the value types, so agreement between
// the two is a real check.

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "cocycle/cochain.hpp"
#include "cocycle/sparse_matrix.hpp"

namespace oracle {

using cocycle::GeneratorId;
using cocycle::HomogeneousCochain;
using cocycle::ModuleBasis;
using cocycle::ModuleTag;
using cocycle::Rational;

using Value = std::map<ModuleBasis, Rational>;

inline Rational alpha(std::int64_t n, std::int64_t m) {
  if (n + m != 0) return 0;
  return cocycle::make_rational(-(n * n * n - n), 12);
}

// [x, y] as a map from basis generator to coefficient.
inline std::map<GeneratorId, Rational> bracket(bool virasoro, GeneratorId x, GeneratorId y) {
  std::map<GeneratorId, Rational> out;
  if (x.is_central() || y.is_central()) return out;
  const auto n = x.index(), m = y.index();
  if (m != n) out[GeneratorId::witt(n + m)] = cocycle::make_rational(m - n);
  if (virasoro && !cocycle::is_zero(alpha(n, m))) out[GeneratorId::central()] = alpha(n, m);
  return out;
}

inline void add_to(Value& v, const ModuleBasis& b, const Rational& c) {
  v[b] += c;
  if (cocycle::is_zero(v[b])) v.erase(b);
}

inline Value scaled(const Value& v, const Rational& s) {
  Value out;
  for (const auto& [b, c] : v) add_to(out, b, s * c);
  return out;
}

// x . v for the module of psi.
inline Value act(const HomogeneousCochain& psi, const GeneratorId& x, const Value& v) {
  Value out;
  const auto tag = psi.space().tag();
  if (tag == ModuleTag::TrivialK || x.is_central()) return out;
  const bool vir = psi.space().algebra().has_central();
  for (const auto& [b, c] : v) {
    if (b.kind() != ModuleBasis::Kind::Witt) continue;  // t is central; never acted on
    const auto n = x.index(), m = b.index();
    if (m != n) add_to(out, ModuleBasis::witt(n + m), c * cocycle::make_rational(m - n));
    if (vir && tag == ModuleTag::Adjoint && !cocycle::is_zero(alpha(n, m)))
      add_to(out, ModuleBasis::central(), c * alpha(n, m));
  }
  return out;
}

// psi(args) by sorting the arguments with an explicit swap count.
inline Value value(const HomogeneousCochain& psi, std::vector<GeneratorId> args) {
  int swaps = 0;
  for (std::size_t i = 1; i < args.size(); ++i)
    for (std::size_t j = i; j > 0 && args[j] < args[j - 1]; --j) {
      std::swap(args[j], args[j - 1]);
      ++swaps;
    }
  for (std::size_t i = 1; i < args.size(); ++i)
    if (args[i] == args[i - 1]) return {};
  cocycle::CochainKey key;
  std::int64_t sum = 0;
  for (const auto& g : args) {
    if (g.is_central())
      key.central = true;
    else
      key.witt.push_back(g.index());
    sum += g.degree();
  }
  const Rational sign = swaps % 2 ? -1 : 1;
  Value out;
  const auto tag = psi.space().tag();
  const Rational main = psi.coefficient({key, cocycle::ValueSlot::Main});
  if (tag == ModuleTag::TrivialK)
    add_to(out, ModuleBasis::unit(), sign * main);
  else
    add_to(out, ModuleBasis::witt(sum + psi.space().degree()), sign * main);
  add_to(out, ModuleBasis::central(), sign * psi.coefficient({key, cocycle::ValueSlot::Central}));
  return out;
}

// (delta psi)(x_1..x_{q+1}) = sum_{i<j} (-1)^{i+j+1} psi([x_i,x_j], x_1..^i..^j..)
//                           + sum_i (-1)^i x_i . psi(x_1..^i..), indices from 1.
inline Value coboundary(const HomogeneousCochain& psi, const std::vector<GeneratorId>& x) {
  const bool vir = psi.space().algebra().has_central();
  Value out;
  const std::size_t n = x.size();
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j) {
      const Rational sign = (i + j + 1) % 2 ? -1 : 1;
      for (const auto& [g, c] : bracket(vir, x[i - 1], x[j - 1])) {
        std::vector<GeneratorId> args{g};
        for (std::size_t k = 1; k <= n; ++k)
          if (k != i && k != j) args.push_back(x[k - 1]);
        for (const auto& [b, v] : value(psi, args)) add_to(out, b, sign * c * v);
      }
    }
  for (std::size_t i = 1; i <= n; ++i) {
    const Rational sign = i % 2 ? -1 : 1;
    std::vector<GeneratorId> rest;
    for (std::size_t k = 1; k <= n; ++k)
      if (k != i) rest.push_back(x[k - 1]);
    for (const auto& [b, v] : act(psi, x[i - 1], value(psi, rest))) add_to(out, b, sign * v);
  }
  return out;
}

inline Value to_value(const cocycle::ModuleElement& e) {
  Value out;
  for (const auto& [b, c] : e.terms()) out[b] = c;
  return out;
}

// Rank by plain Gaussian elimination on a dense copy.
inline std::size_t dense_rank(const cocycle::RationalSparseMatrix& m) {
  std::vector<std::vector<Rational>> a(m.n_rows(), std::vector<Rational>(m.n_cols()));
  for (std::size_t r = 0; r < m.n_rows(); ++r)
    for (const auto& [c, v] : m.row(r)) a[r][c] = v;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.n_cols() && rank < a.size(); ++c) {
    std::size_t p = rank;
    while (p < a.size() && cocycle::is_zero(a[p][c])) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == rank || cocycle::is_zero(a[r][c])) continue;
      const Rational f = a[r][c] / a[rank][c];
      for (std::size_t k = c; k < m.n_cols(); ++k) a[r][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

// All strictly ascending tuples of `len` integers in [-w, w] with the given sum.
inline std::vector<std::vector<std::int64_t>> ascending(std::int64_t w, std::size_t len, std::int64_t sum) {
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> cur;
  auto rec = [&](auto&& self, std::int64_t from) -> void {
    if (cur.size() == len) {
      std::int64_t s = 0;
      for (auto v : cur) s += v;
      if (s == sum) out.push_back(cur);
      return;
    }
    for (std::int64_t v = from; v <= w; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, -w);
  return out;
}

}  // namespace oracle

#endif  // COCYCLE_TESTS_ORACLES_HPP
