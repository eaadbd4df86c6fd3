#include "cocycle/cochain.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "cocycle/errors.hpp"

namespace cocycle {

std::int64_t CochainKey::index_sum() const {
  std::int64_t s = 0;
  for (auto i : witt) s += i;
  return s;
}

std::int64_t CochainKey::max_abs_index() const {
  std::int64_t m = 0;
  for (auto i : witt) m = std::max(m, i < 0 ? -i : i);
  return m;
}

std::vector<GeneratorId> CochainKey::arguments() const {
  std::vector<GeneratorId> out;
  out.reserve(arity());
  for (auto i : witt) out.push_back(GeneratorId::witt(i));
  if (central) out.push_back(GeneratorId::central());
  return out;
}

std::string CochainKey::to_string() const {
  std::string out;
  for (auto i : witt) {
    if (!out.empty()) out += ' ';
    out += std::to_string(i);
  }
  if (central) out += out.empty() ? "t" : " t";
  return out;
}

std::optional<CanonicalArguments> canonicalize(std::span<const GeneratorId> args) {
  std::vector<GeneratorId> sorted(args.begin(), args.end());
  int inversions = 0;
  for (std::size_t i = 0; i < sorted.size(); ++i)
    for (std::size_t j = i + 1; j < sorted.size(); ++j)
      if (sorted[j] < sorted[i]) ++inversions;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return std::nullopt;

  CanonicalArguments out{inversions % 2 == 0 ? 1 : -1, {}};
  for (const auto& g : sorted) {
    if (g.is_central())
      out.key.central = true;
    else
      out.key.witt.push_back(g.index());
  }
  return out;
}

CochainSpace::CochainSpace(LieAlgebra algebra, ModuleTag tag, int arity, std::int64_t degree)
    : module_(std::move(algebra), tag), arity_(arity), degree_(degree) {
  if (arity < 0) throw ShapeMismatch("negative cochain arity");
}

std::optional<ModuleBasis> CochainSpace::value_basis(const CoefficientId& id) const {
  if (id.key.arity() != static_cast<std::size_t>(arity_)) return std::nullopt;
  if (id.key.central && !algebra().has_central()) return std::nullopt;
  const auto basis = module_.basis_of_degree(id.key.index_sum() + degree_);
  for (const auto& b : basis) {
    const bool is_t = b.kind() == ModuleBasis::Kind::Central;
    if ((id.slot == ValueSlot::Central) == is_t) return b;
  }
  return std::nullopt;
}

bool CochainSpace::admits(const CoefficientId& id) const {
  if (!std::is_sorted(id.key.witt.begin(), id.key.witt.end()) ||
      std::adjacent_find(id.key.witt.begin(), id.key.witt.end()) != id.key.witt.end())
    return false;
  return value_basis(id).has_value();
}

std::vector<CoefficientId> CochainSpace::coefficients_of(const CochainKey& key) const {
  std::vector<CoefficientId> out;
  for (ValueSlot slot : {ValueSlot::Main, ValueSlot::Central}) {
    CoefficientId id{key, slot};
    if (value_basis(id)) out.push_back(std::move(id));
  }
  return out;
}

bool CochainSpace::in_window(const CoefficientId& id, std::int64_t window) const {
  const auto vb = value_basis(id);
  if (!vb) return false;
  if (id.key.max_abs_index() > window) return false;
  return std::abs(vb->degree()) <= window;
}

namespace {

// Strictly ascending tuples of length `len` in [-window, window] whose sum s satisfies
// lo <= s <= hi.
void ascending_tuples(std::int64_t window, std::size_t len, std::int64_t lo, std::int64_t hi,
                      const std::function<void(const std::vector<std::int64_t>&)>& emit) {
  std::vector<std::int64_t> cur;
  std::function<void(std::int64_t, std::int64_t)> rec = [&](std::int64_t next, std::int64_t partial) {
    const std::size_t remaining = len - cur.size();
    if (remaining == 0) {
      if (partial >= lo && partial <= hi) emit(cur);
      return;
    }
    if (remaining == 1) {
      const std::int64_t from = std::max(next, lo - partial);
      const std::int64_t to = std::min(window, hi - partial);
      for (std::int64_t v = from; v <= to; ++v) {
        cur.push_back(v);
        emit(cur);
        cur.pop_back();
      }
      return;
    }
    for (std::int64_t v = next; v <= window; ++v) {
      cur.push_back(v);
      rec(v + 1, partial + v);
      cur.pop_back();
    }
  };
  rec(-window, 0);
}

}  // namespace

std::vector<CoefficientId> CochainSpace::enumerate(std::int64_t window) const {
  std::vector<CoefficientId> out;
  // Value degree s + d must be 0 for K and within the window otherwise.
  const bool trivial = tag() == ModuleTag::TrivialK;
  const std::int64_t lo = trivial ? -degree_ : -window - degree_;
  const std::int64_t hi = trivial ? -degree_ : window - degree_;
  auto emit_key = [&](CochainKey key) {
    for (auto& id : coefficients_of(key))
      if (in_window(id, window)) out.push_back(std::move(id));
  };
  const std::size_t q = static_cast<std::size_t>(arity_);
  ascending_tuples(window, q, lo, hi, [&](const std::vector<std::int64_t>& t) {
    emit_key(CochainKey{t, false});
  });
  if (algebra().has_central() && q >= 1)
    ascending_tuples(window, q - 1, lo, hi, [&](const std::vector<std::int64_t>& t) {
      emit_key(CochainKey{t, true});
    });
  std::sort(out.begin(), out.end());
  return out;
}

std::map<ModuleBasis, CoefficientForm> expand_coboundary(const CochainSpace& source,
                                                         std::span<const GeneratorId> args) {
  const std::size_t n = args.size();
  if (n != static_cast<std::size_t>(source.arity()) + 1)
    throw ShapeMismatch("coboundary of a " + std::to_string(source.arity()) +
                        "-cochain takes " + std::to_string(source.arity() + 1) + " arguments");
  const LieAlgebra& algebra = source.algebra();
  for (const auto& g : args) algebra.require_valid(g);

  std::map<ModuleBasis, CoefficientForm> out;
  std::vector<GeneratorId> scratch;
  scratch.reserve(n);

  // sum_{i<j} (-1)^{i+j+1} psi([x_i, x_j], x_1, ..^i..^j.., x_{q+1})   (1-based i, j)
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const int sign = ((i + j + 1) % 2 == 0) ? 1 : -1;  // 0-based i+j+1 has the parity of 1-based i+j+1
      const Element bracket = algebra.bracket(args[i], args[j]);
      for (const auto& [g, c] : bracket.terms()) {
        scratch.clear();
        scratch.push_back(g);
        for (std::size_t k = 0; k < n; ++k)
          if (k != i && k != j) scratch.push_back(args[k]);
        const auto canon = canonicalize(scratch);
        if (!canon) continue;
        for (const auto& id : source.coefficients_of(canon->key)) {
          const auto vb = *source.value_basis(id);
          out[vb].add(id, Rational{c * (sign * canon->sign)});
        }
      }
    }

  // sum_i (-1)^i x_i . psi(x_1, ..^i.., x_{q+1})   (1-based i)
  for (std::size_t i = 0; i < n; ++i) {
    const int sign = (i % 2 == 0) ? -1 : 1;
    scratch.clear();
    for (std::size_t k = 0; k < n; ++k)
      if (k != i) scratch.push_back(args[k]);
    const auto canon = canonicalize(scratch);
    if (!canon) continue;
    for (const auto& id : source.coefficients_of(canon->key)) {
      const auto vb = *source.value_basis(id);
      const ModuleElement image = source.module().act(args[i], vb);
      for (const auto& [ob, oc] : image.terms())
        out[ob].add(id, Rational{oc * (sign * canon->sign)});
    }
  }

  for (auto it = out.begin(); it != out.end();) it = it->second.empty() ? out.erase(it) : std::next(it);
  return out;
}

ModuleElement evaluate_with(const CochainSpace& space, std::span<const GeneratorId> args,
                            const CoefficientLookup& lookup) {
  ModuleElement out;
  const auto canon = canonicalize(args);
  if (!canon) return out;
  for (const auto& id : space.coefficients_of(canon->key))
    out.add(*space.value_basis(id), Rational{lookup(id) * canon->sign});
  return out;
}

ModuleElement coboundary_with(const CochainSpace& source, std::span<const GeneratorId> args,
                              const CoefficientLookup& lookup) {
  ModuleElement out;
  for (const auto& [basis, form] : expand_coboundary(source, args)) {
    Rational v = 0;
    for (const auto& [id, c] : form.terms()) v += c * lookup(id);
    out.add(basis, v);
  }
  return out;
}

void HomogeneousCochain::set(const CoefficientId& id, const Rational& value) {
  if (!space_.admits(id))
    throw ShapeMismatch("coefficient at (" + id.key.to_string() + ")" +
                        (id.slot == ValueSlot::Central ? " @t" : "") +
                        " violates the support law of this cochain space");
  if (cocycle::is_zero(value))
    coeffs_.erase(id);
  else
    coeffs_[id] = value;
}

void HomogeneousCochain::set(std::span<const GeneratorId> args, const Rational& value,
                             ValueSlot slot) {
  if (args.size() != static_cast<std::size_t>(arity()))
    throw ShapeMismatch("wrong number of arguments for a " + std::to_string(arity()) + "-cochain");
  for (const auto& g : args) space_.algebra().require_valid(g);
  const auto canon = canonicalize(args);
  if (!canon) {
    if (!cocycle::is_zero(value)) throw ShapeMismatch("an alternating cochain vanishes on repeated arguments");
    return;
  }
  set(CoefficientId{canon->key, slot}, Rational{value * canon->sign});
}

Rational HomogeneousCochain::coefficient(const CoefficientId& id) const {
  auto it = coeffs_.find(id);
  return it == coeffs_.end() ? Rational{0} : it->second;
}

CoefficientLookup HomogeneousCochain::lookup() const {
  return [this](const CoefficientId& id) { return coefficient(id); };
}

ModuleElement HomogeneousCochain::evaluate(std::span<const GeneratorId> args) const {
  if (args.size() != static_cast<std::size_t>(arity()))
    throw ShapeMismatch("wrong number of arguments for a " + std::to_string(arity()) + "-cochain");
  for (const auto& g : args) space_.algebra().require_valid(g);
  return evaluate_with(space_, args, lookup());
}

HomogeneousCochain add(const HomogeneousCochain& a, const HomogeneousCochain& b) {
  if (!(a.space() == b.space())) throw ShapeMismatch("adding cochains from different spaces");
  HomogeneousCochain out = a;
  for (const auto& [id, v] : b.coefficients()) out.set(id, a.coefficient(id) + v);
  return out;
}

HomogeneousCochain scale(const HomogeneousCochain& a, const Rational& r) {
  HomogeneousCochain out{a.space()};
  if (is_zero(r)) return out;
  for (const auto& [id, v] : a.coefficients()) out.set(id, v * r);
  return out;
}

HomogeneousCochain subtract(const HomogeneousCochain& a, const HomogeneousCochain& b) {
  return add(a, scale(b, Rational{-1}));
}

HomogeneousCochain coboundary(const HomogeneousCochain& psi, std::int64_t window) {
  const CochainSpace target = psi.space().with_arity(psi.arity() + 1);
  HomogeneousCochain out{target};
  const auto lookup = psi.lookup();
  std::optional<CochainKey> cached_key;
  ModuleElement cached;
  for (const auto& id : target.enumerate(window)) {
    if (!cached_key || *cached_key != id.key) {
      const auto args = id.key.arguments();
      cached = coboundary_with(psi.space(), args, lookup);
      cached_key = id.key;
    }
    out.set(id, cached.coefficient(*target.value_basis(id)));
  }
  return out;
}

ModuleElement coboundary_at(const HomogeneousCochain& psi, std::span<const GeneratorId> args) {
  return coboundary_with(psi.space(), args, psi.lookup());
}

std::vector<ModuleElement> cocycle_residuals(const HomogeneousCochain& psi,
                                             const std::vector<std::vector<GeneratorId>>& tuples) {
  std::vector<ModuleElement> out;
  out.reserve(tuples.size());
  const auto lookup = psi.lookup();
  for (const auto& t : tuples) out.push_back(coboundary_with(psi.space(), t, lookup));
  return out;
}

AlgebraKind parse_algebra(std::string_view name) {
  if (name == "witt" || name == "W") return AlgebraKind::Witt;
  if (name == "virasoro" || name == "V") return AlgebraKind::Virasoro;
  throw std::invalid_argument("unknown algebra '" + std::string(name) + "'");
}

ModuleTag parse_module(std::string_view name) {
  if (name == "trivial" || name == "K") return ModuleTag::TrivialK;
  if (name == "adjoint") return ModuleTag::Adjoint;
  if (name == "witt") return ModuleTag::WittQuotient;
  throw std::invalid_argument("unknown module '" + std::string(name) + "'");
}

std::string to_text(const HomogeneousCochain& psi) {
  const auto& s = psi.space();
  std::ostringstream os;
  os << "# algebra=" << to_string(s.algebra().kind()) << " module=" << to_string(s.tag())
     << " q=" << s.arity() << " d=" << s.degree() << '\n';
  for (const auto& [id, v] : psi.coefficients()) {
    const std::string key = id.key.to_string();
    os << key << (key.empty() ? "" : " ") << "-> " << to_fraction_string(v);
    if (id.slot == ValueSlot::Central) os << " @t";
    os << '\n';
  }
  return os.str();
}

namespace {

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream is{std::string(s)};
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

std::int64_t parse_int(const std::string& tok) {
  std::size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(tok, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != tok.size() || tok.empty()) throw std::invalid_argument("malformed index '" + tok + "'");
  return v;
}

}  // namespace

HomogeneousCochain parse_cochain(std::string_view text, const std::optional<CochainSpace>& defaults) {
  std::optional<AlgebraKind> algebra;
  std::optional<ModuleTag> tag;
  std::optional<int> q;
  std::optional<std::int64_t> d;
  if (defaults) {
    algebra = defaults->algebra().kind();
    tag = defaults->tag();
    q = defaults->arity();
    d = defaults->degree();
  }

  std::optional<HomogeneousCochain> out;
  std::istringstream lines{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(lines, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#') {
      if (out) throw std::invalid_argument("header after data on line " + std::to_string(lineno));
      for (const auto& tok : split_ws(std::string_view(line).substr(first + 1))) {
        const auto eq = tok.find('=');
        if (eq == std::string::npos) continue;
        const std::string k = tok.substr(0, eq), v = tok.substr(eq + 1);
        if (k == "algebra") algebra = parse_algebra(v);
        else if (k == "module") tag = parse_module(v);
        else if (k == "q") q = static_cast<int>(parse_int(v));
        else if (k == "d") d = parse_int(v);
      }
      continue;
    }
    if (!out) {
      if (!algebra || !tag || !q || !d)
        throw std::invalid_argument("cochain text lacks algebra/module/q/d and no defaults were given");
      const LieAlgebra alg = *algebra == AlgebraKind::Witt ? LieAlgebra::witt() : LieAlgebra::virasoro();
      out.emplace(CochainSpace{alg, *tag, *q, *d});
    }
    const auto arrow = line.find("->");
    if (arrow == std::string::npos)
      throw std::invalid_argument("missing '->' on line " + std::to_string(lineno));
    std::vector<GeneratorId> args;
    for (const auto& tok : split_ws(std::string_view(line).substr(0, arrow)))
      args.push_back(tok == "t" ? GeneratorId::central() : GeneratorId::witt(parse_int(tok)));
    auto rhs = split_ws(std::string_view(line).substr(arrow + 2));
    if (rhs.empty() || rhs.size() > 2 || (rhs.size() == 2 && rhs[1] != "@t"))
      throw std::invalid_argument("malformed value on line " + std::to_string(lineno));
    const ValueSlot slot = rhs.size() == 2 ? ValueSlot::Central : ValueSlot::Main;
    const auto canon = canonicalize(args);
    if (!canon) throw std::invalid_argument("repeated argument on line " + std::to_string(lineno));
    const CoefficientId id{canon->key, slot};
    out->set(args, out->coefficient(id) * canon->sign + parse_rational(rhs[0]), slot);
  }
  if (!out) {
    if (!algebra || !tag || !q || !d)
      throw std::invalid_argument("cochain text lacks algebra/module/q/d and no defaults were given");
    const LieAlgebra alg = *algebra == AlgebraKind::Witt ? LieAlgebra::witt() : LieAlgebra::virasoro();
    out.emplace(CochainSpace{alg, *tag, *q, *d});
  }
  return *out;
}

}  // namespace cocycle
