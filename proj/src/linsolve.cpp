#include "cocycle/linsolve.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <optional>

namespace cocycle {

IntegerRow to_integer_row(const SparseVector& row) {
  Integer den = 1;
  for (const auto& [c, v] : row) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
  IntegerRow out;
  out.reserve(row.size());
  Integer content = 0;
  for (const auto& [c, v] : row) {
    Integer x = v.get_num() * (den / v.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), x.get_mpz_t());
    out.emplace_back(c, std::move(x));
  }
  if (content > 1)
    for (auto& e : out) mpz_divexact(e.second.get_mpz_t(), e.second.get_mpz_t(), content.get_mpz_t());
  return out;
}

namespace {

// Arithmetic for the two row entry types. The 128-bit path reports overflow and
// the caller restarts with GMP integers, so results never depend on the path.
struct Overflow {};

using Wide = __int128;

inline bool is_zero_num(const Integer& x) { return sgn(x) == 0; }
inline bool is_zero_num(Wide x) { return x == 0; }
inline bool is_one(const Integer& x) { return x == 1; }
inline bool is_one(Wide x) { return x == 1; }
inline std::size_t bit_size(const Integer& x) { return mpz_sizeinbase(x.get_mpz_t(), 2); }
inline std::size_t bit_size(Wide x) {
  unsigned __int128 u = x < 0 ? -static_cast<unsigned __int128>(x) : static_cast<unsigned __int128>(x);
  std::size_t n = 0;
  while (u) {
    u >>= 1;
    ++n;
  }
  return n;
}

inline void mul(Integer& out, const Integer& a, const Integer& b) { mpz_mul(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t()); }
inline void mul(Wide& out, Wide a, Wide b) {
  if (__builtin_mul_overflow(a, b, &out)) throw Overflow{};
}
// out = a*x - b*y
inline void mul_sub(Integer& out, const Integer& a, const Integer& x, const Integer& b, const Integer& y,
                    Integer& tmp) {
  mpz_mul(out.get_mpz_t(), a.get_mpz_t(), x.get_mpz_t());
  mpz_mul(tmp.get_mpz_t(), b.get_mpz_t(), y.get_mpz_t());
  mpz_sub(out.get_mpz_t(), out.get_mpz_t(), tmp.get_mpz_t());
}
inline void mul_sub(Wide& out, Wide a, Wide x, Wide b, Wide y, Wide& tmp) {
  if (__builtin_mul_overflow(a, x, &out) || __builtin_mul_overflow(b, y, &tmp) ||
      __builtin_sub_overflow(out, tmp, &out))
    throw Overflow{};
}
inline void gcd(Integer& out, const Integer& a, const Integer& b) { mpz_gcd(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t()); }
inline void gcd(Wide& out, Wide a, Wide b) {
  unsigned __int128 x = a < 0 ? -static_cast<unsigned __int128>(a) : static_cast<unsigned __int128>(a);
  unsigned __int128 y = b < 0 ? -static_cast<unsigned __int128>(b) : static_cast<unsigned __int128>(b);
  while (y) {
    const unsigned __int128 t = x % y;
    x = y;
    y = t;
  }
  if (x >> 127) throw Overflow{};
  out = static_cast<Wide>(x);
}
inline void divexact(Integer& out, const Integer& a, const Integer& b) {
  mpz_divexact(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}
inline void divexact(Wide& out, Wide a, Wide b) { out = a / b; }
inline bool greater_than_one(const Integer& x) { return x > 1; }
inline bool greater_than_one(Wide x) { return x > 1; }

Wide to_wide(const Integer& x) {
  if (mpz_sizeinbase(x.get_mpz_t(), 2) > 120) throw Overflow{};
  Integer mag = abs(x);
  const Integer hi = mag >> 64;
  const Integer lo = mag - (hi << 64);
  unsigned __int128 u = (static_cast<unsigned __int128>(mpz_get_ui(hi.get_mpz_t())) << 64) | mpz_get_ui(lo.get_mpz_t());
  return sgn(x) < 0 ? -static_cast<Wide>(u) : static_cast<Wide>(u);
}

Integer to_integer(Wide x) {
  unsigned __int128 u = x < 0 ? -static_cast<unsigned __int128>(x) : static_cast<unsigned __int128>(x);
  Integer out = static_cast<unsigned long>(u >> 64);
  out <<= 64;
  out += static_cast<unsigned long>(static_cast<std::uint64_t>(u));
  return x < 0 ? Integer(-out) : out;
}

inline Integer to_integer(const Integer& x) { return x; }

template <class Num>
using Row = std::vector<std::pair<std::size_t, Num>>;

template <class Num>
const Num* find_entry(const Row<Num>& row, std::size_t c) {
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const auto& e, std::size_t k) { return e.first < k; });
  return (it != row.end() && it->first == c) ? &it->second : nullptr;
}

template <class Num>
void make_primitive(Row<Num>& row) {
  Num content{0};
  for (const auto& e : row) {
    gcd(content, content, e.second);
    if (is_one(content)) return;
  }
  if (greater_than_one(content))
    for (auto& e : row) divexact(e.second, e.second, content);
}

// out = a * x - b * p over the union of supports.
template <class Num>
void merge(const Row<Num>& x, const Num& a, const Num& b, const Row<Num>& p, Row<Num>& out) {
  out.clear();
  out.reserve(x.size() + p.size());
  const bool unit = is_one(a);
  const Num zero{0};
  Num t{0}, tmp{0};
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < p.size()) {
    if (j == p.size() || (i < x.size() && x[i].first < p[j].first)) {
      if (unit) {
        out.emplace_back(x[i].first, x[i].second);
      } else {
        mul(t, a, x[i].second);
        out.emplace_back(x[i].first, t);
      }
      ++i;
    } else if (i == x.size() || p[j].first < x[i].first) {
      mul_sub(t, zero, zero, b, p[j].second, tmp);
      out.emplace_back(p[j].first, t);
      ++j;
    } else {
      mul_sub(t, a, x[i].second, b, p[j].second, tmp);
      if (!is_zero_num(t)) out.emplace_back(x[i].first, t);
      ++i;
      ++j;
    }
  }
}

Row<Integer> widen(const Row<Wide>& row) {
  Row<Integer> out;
  out.reserve(row.size());
  for (const auto& [c, v] : row) out.emplace_back(c, to_integer(v));
  return out;
}

// Entries stay 128-bit until an update overflows; that row then moves to GMP and
// comes back once its entries are small again.
struct HybridRow {
  Row<Wide> small;
  Row<Integer> big;
  bool wide = true;

  std::size_t size() const { return wide ? small.size() : big.size(); }
  std::size_t column(std::size_t k) const { return wide ? small[k].first : big[k].first; }
  bool has(std::size_t c) const { return wide ? find_entry(small, c) != nullptr : find_entry(big, c) != nullptr; }
  std::size_t bits_at(std::size_t c) const { return wide ? bit_size(*find_entry(small, c)) : bit_size(*find_entry(big, c)); }
  IntegerRow to_integer_row() const { return wide ? widen(small) : big; }

  void assign_big(Row<Integer>&& row) {
    constexpr std::size_t kDemoteBits = 100;
    bool fits = true;
    for (const auto& e : row)
      if (bit_size(e.second) > kDemoteBits) {
        fits = false;
        break;
      }
    if (fits) {
      small.clear();
      small.reserve(row.size());
      for (const auto& [c, v] : row) small.emplace_back(c, to_wide(v));
      big.clear();
      wide = true;
    } else {
      big = std::move(row);
      small.clear();
      wide = false;
    }
  }
};

class Eliminator {
 public:
  Eliminator(const RationalSparseMatrix& m, const EliminationOptions& options)
      : n_cols_(m.n_cols()), tier_(options.column_tier) {
    if (tier_.empty()) tier_.assign(n_cols_, 0);
    if (tier_.size() != n_cols_) throw std::invalid_argument("column_tier length does not match columns");
    for (int t : tier_) n_tiers_ = std::max(n_tiers_, t + 1);
    count_.assign(n_cols_, 0);
    col_rows_.resize(n_cols_);
    rows_.resize(m.n_rows());
    for (std::size_t r = 0; r < m.n_rows(); ++r) rows_[r].assign_big(to_integer_row(m.row(r)));
    active_.assign(rows_.size(), 0);
    seen_.assign(rows_.size(), SIZE_MAX);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (rows_[r].size() == 0) continue;
      active_[r] = 1;
      for (std::size_t k = 0; k < rows_[r].size(); ++k) {
        const std::size_t c = rows_[r].column(k);
        ++count_[c];
        col_rows_[c].push_back(r);
      }
    }
  }

  EchelonForm run() {
    EchelonForm out;
    out.n_cols = n_cols_;
    out.rank_by_tier.assign(n_tiers_, 0);
    std::vector<std::size_t> tier_cols;
    for (int tier = 0; tier < n_tiers_; ++tier) {
      tier_cols.clear();
      for (std::size_t c = 0; c < n_cols_; ++c)
        if (tier_[c] == tier) tier_cols.push_back(c);
      while (true) {
        std::size_t col = SIZE_MAX, prow = 0;
        std::vector<std::size_t> holders;
        if (!select_pivot(tier_cols, col, prow, holders)) break;
        active_[prow] = 0;
        HybridRow pivot = std::move(rows_[prow]);
        for (std::size_t k = 0; k < pivot.size(); ++k) --count_[pivot.column(k)];
        std::optional<Row<Integer>> pivot_big;
        for (std::size_t r : holders)
          if (r != prow) update(r, col, pivot, pivot_big);
        col_rows_[col].clear();
        col_rows_[col].shrink_to_fit();
        out.pivot_columns.push_back(col);
        out.pivot_rows.push_back(pivot.to_integer_row());
        ++out.rank_by_tier[tier];
      }
    }
    for (std::size_t r = 0; r < rows_.size(); ++r)
      if (active_[r]) out.residual_rows.push_back(rows_[r].to_integer_row());
    return out;
  }

 private:
  // Active rows holding col, ascending. col_rows_ may contain stale or repeated ids.
  std::vector<std::size_t> live_rows(std::size_t col) {
    std::vector<std::size_t> out;
    for (std::size_t r : col_rows_[col]) {
      if (!active_[r] || seen_[r] == col || !rows_[r].has(col)) continue;
      seen_[r] = col;
      out.push_back(r);
    }
    std::sort(out.begin(), out.end());
    for (std::size_t r : out) seen_[r] = SIZE_MAX;
    return out;
  }

  // Markowitz search over the few lowest-count columns: minimise
  // (count - 1) * (row length - 1); ties go to the lower column.
  bool select_pivot(const std::vector<std::size_t>& tier_cols, std::size_t& col, std::size_t& prow,
                    std::vector<std::size_t>& holders) {
    candidates_.clear();
    for (std::size_t c : tier_cols)
      if (count_[c] > 0) candidates_.emplace_back(count_[c], c);
    if (candidates_.empty()) return false;
    const std::size_t k = std::min<std::size_t>(kSearchColumns, candidates_.size());
    std::partial_sort(candidates_.begin(), candidates_.begin() + k, candidates_.end());
    std::size_t best_cost = SIZE_MAX;
    for (std::size_t i = 0; i < k && best_cost != 0; ++i) {
      const std::size_t c = candidates_[i].second;
      auto rows = live_rows(c);
      const std::size_t r = choose_row(rows, c);
      const std::size_t cost = (rows.size() - 1) * (rows_[r].size() - 1);
      if (cost < best_cost || (cost == best_cost && c < col)) {
        best_cost = cost;
        col = c;
        prow = r;
        holders = std::move(rows);
      }
    }
    return true;
  }

  // Shortest row, then smallest pivot, then lowest index.
  std::size_t choose_row(const std::vector<std::size_t>& holders, std::size_t col) const {
    std::size_t best = holders.front();
    std::size_t best_len = rows_[best].size();
    std::size_t best_bits = rows_[best].bits_at(col);
    for (std::size_t r : holders) {
      const std::size_t len = rows_[r].size();
      if (len > best_len) continue;
      const std::size_t bits = rows_[r].bits_at(col);
      if (len < best_len || bits < best_bits) {
        best = r;
        best_len = len;
        best_bits = bits;
      }
    }
    return best;
  }

  // rows_[r] <- (p/g) rows_[r] - (x/g) pivot with p, x the entries at col and
  // g = gcd(p, x); then made primitive. Column counts follow the support change.
  void update(std::size_t r, std::size_t col, const HybridRow& pivot, std::optional<Row<Integer>>& pivot_big) {
    HybridRow& row = rows_[r];
    HybridRow next;
    bool done = false;
    if (row.wide && pivot.wide) {
      try {
        const Wide pv = *find_entry(pivot.small, col), rv = *find_entry(row.small, col);
        Wide g{0}, a{0}, b{0};
        gcd(g, pv, rv);
        divexact(a, pv, g);
        divexact(b, rv, g);
        merge(row.small, a, b, pivot.small, next.small);
        make_primitive(next.small);
        done = true;
      } catch (const Overflow&) {
      }
    }
    if (!done) {
      if (!pivot_big) pivot_big = pivot.wide ? widen(pivot.small) : pivot.big;
      const Row<Integer> xb = row.wide ? widen(row.small) : row.big;
      const Integer& pv = *find_entry(*pivot_big, col);
      const Integer& rv = *find_entry(xb, col);
      Integer g, a, b;
      gcd(g, pv, rv);
      divexact(a, pv, g);
      divexact(b, rv, g);
      Row<Integer> out;
      merge(xb, a, b, *pivot_big, out);
      make_primitive(out);
      next.assign_big(std::move(out));
    }
    std::size_t i = 0, j = 0;
    const std::size_t n_old = row.size(), n_new = next.size();
    while (i < n_old || j < n_new) {
      const std::size_t co = i < n_old ? row.column(i) : SIZE_MAX;
      const std::size_t cn = j < n_new ? next.column(j) : SIZE_MAX;
      if (co == cn) {
        ++i;
        ++j;
      } else if (co < cn) {
        --count_[co];
        ++i;
      } else {
        ++count_[cn];
        col_rows_[cn].push_back(r);
        ++j;
      }
    }
    row = std::move(next);
    if (row.size() == 0) active_[r] = 0;
  }

  std::size_t n_cols_;
  std::vector<int> tier_;
  int n_tiers_ = 0;
  std::vector<HybridRow> rows_;
  std::vector<char> active_;
  std::vector<std::size_t> count_;
  std::vector<std::vector<std::size_t>> col_rows_;
  std::vector<std::size_t> seen_;
  std::vector<std::pair<std::size_t, std::size_t>> candidates_;
  static constexpr std::size_t kSearchColumns = 4;
};

// Back-substitution. `free_values` fixes the non-pivot columns; `rhs_col` (if set)
// holds the right-hand side: sum_c a_c x_c = a_rhs.
std::vector<Rational> back_substitute(const EchelonForm& e, std::vector<Rational> x,
                                      std::optional<std::size_t> rhs_col) {
  for (std::size_t k = e.rank(); k-- > 0;) {
    const std::size_t pc = e.pivot_columns[k];
    Rational acc = 0;
    Integer pv;
    for (const auto& [c, v] : e.pivot_rows[k]) {
      if (c == pc)
        pv = v;
      else if (rhs_col && c == *rhs_col)
        acc += v;
      else if (sgn(x[c]) != 0)
        acc -= v * x[c];
    }
    x[pc] = acc / pv;
  }
  return x;
}

}  // namespace

EchelonForm eliminate(const RationalSparseMatrix& m, const EliminationOptions& options) {
  return Eliminator(m, options).run();
}

std::size_t rank(const RationalSparseMatrix& m) { return eliminate(m).rank(); }

std::vector<SparseVector> kernel_basis(const RationalSparseMatrix& m) {
  const EchelonForm e = eliminate(m);
  std::vector<bool> is_pivot(m.n_cols(), false);
  for (auto c : e.pivot_columns) is_pivot[c] = true;
  std::vector<SparseVector> out;
  for (std::size_t f = 0; f < m.n_cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> x(m.n_cols());
    x[f] = 1;
    x = back_substitute(e, std::move(x), std::nullopt);
    SparseVector v;
    for (std::size_t c = 0; c < x.size(); ++c)
      if (sgn(x[c]) != 0) v.emplace_back(c, x[c]);
    for (const auto& y : m.multiply(v))
      if (sgn(y) != 0) throw std::logic_error("kernel vector failed verification");
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<std::vector<Rational>> solve_or_none(const RationalSparseMatrix& m,
                                                   const std::vector<Rational>& v) {
  if (v.size() != m.n_rows()) throw std::invalid_argument("right-hand side length does not match rows");
  const std::size_t rhs = m.n_cols();
  std::vector<RationalSparseMatrix::Row> rows = m.rows();
  for (std::size_t r = 0; r < rows.size(); ++r)
    if (sgn(v[r]) != 0) rows[r].emplace_back(rhs, v[r]);
  EliminationOptions options;
  options.column_tier.assign(m.n_cols() + 1, 0);
  options.column_tier[rhs] = -1;
  const EchelonForm e = eliminate(RationalSparseMatrix::from_rows(m.n_cols() + 1, std::move(rows)), options);
  if (!e.residual_rows.empty()) return std::nullopt;
  std::vector<Rational> x = back_substitute(e, std::vector<Rational>(m.n_cols() + 1), rhs);
  x.pop_back();
  if (m.multiply(std::span<const Rational>(x)) != v) throw std::logic_error("solution failed verification");
  return x;
}

}  // namespace cocycle
