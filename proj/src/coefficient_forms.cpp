#include "cocycle/coefficient_forms.hpp"

namespace cocycle {

namespace {

CoefficientForm signed_key(std::vector<GeneratorId> args) {
  std::int64_t sum = 0;
  for (const auto& g : args) sum += g.degree();
  if (sum != 0) return {};
  const auto canon = canonicalize(args);
  if (!canon) return {};
  return CoefficientForm{CoefficientId{canon->key, ValueSlot::Main}, Rational{canon->sign}};
}

Rational alpha(std::int64_t i) { return make_rational(-(i * i * i - i), 12); }

Rational delta(std::int64_t a, std::int64_t b) { return Rational{a == b ? 1 : 0}; }

Rational r(std::int64_t n) { return make_rational(n); }

}  // namespace

CoefficientForm psi_coefficient(std::int64_t i, std::int64_t j, std::int64_t k) {
  return signed_key({GeneratorId::witt(i), GeneratorId::witt(j), GeneratorId::witt(k)});
}

CoefficientForm c_coefficient(std::int64_t i, std::int64_t j) {
  return signed_key({GeneratorId::witt(i), GeneratorId::witt(j), GeneratorId::central()});
}

CoefficientForm phi_coefficient(std::int64_t i, std::int64_t j) {
  return signed_key({GeneratorId::witt(i), GeneratorId::witt(j)});
}

CoefficientForm b_coefficient(std::int64_t i) {
  return signed_key({GeneratorId::witt(i), GeneratorId::central()});
}

CoefficientForm cocycle_condition(const LieAlgebra& algebra, std::int64_t i, std::int64_t j,
                                  std::int64_t k, std::int64_t l) {
  CoefficientForm f;
  f += r(j - i) * psi_coefficient(i + j, k, l);
  f -= r(k - i) * psi_coefficient(i + k, j, l);
  f += r(l - i) * psi_coefficient(i + l, j, k);
  f += r(k - j) * psi_coefficient(j + k, i, l);
  f -= r(l - j) * psi_coefficient(l + j, i, k);
  f += r(l - k) * psi_coefficient(l + k, i, j);
  if (algebra.has_central()) {
    f += Rational{alpha(i) * delta(i, -j)} * c_coefficient(k, l);
    f -= Rational{alpha(i) * delta(i, -k)} * c_coefficient(j, l);
    f += Rational{alpha(i) * delta(i, -l)} * c_coefficient(j, k);
    f += Rational{alpha(j) * delta(j, -k)} * c_coefficient(i, l);
    f -= Rational{alpha(j) * delta(j, -l)} * c_coefficient(i, k);
    f += Rational{alpha(k) * delta(k, -l)} * c_coefficient(i, j);
  }
  return f;
}

CoefficientForm cocycle_condition_central(std::int64_t i, std::int64_t j, std::int64_t k) {
  CoefficientForm f;
  f += r(j - i) * c_coefficient(i + j, k);
  f -= r(k - i) * c_coefficient(i + k, j);
  f += r(k - j) * c_coefficient(j + k, i);
  return f;
}

CoefficientForm coboundary_condition(const LieAlgebra& algebra, std::int64_t i, std::int64_t j,
                                     std::int64_t k) {
  CoefficientForm f;
  f += r(j - i) * phi_coefficient(i + j, k);
  f -= r(k - i) * phi_coefficient(i + k, j);
  f += r(k - j) * phi_coefficient(j + k, i);
  if (algebra.has_central()) {
    f -= Rational{alpha(i) * delta(i, -j)} * b_coefficient(k);
    f += Rational{alpha(i) * delta(i, -k)} * b_coefficient(j);
    f -= Rational{alpha(j) * delta(j, -k)} * b_coefficient(i);
  }
  return f;
}

CoefficientForm coboundary_condition_central(std::int64_t i, std::int64_t j) {
  return r(j - i) * b_coefficient(i + j);
}

Rational apply_form(const CoefficientForm& form, const CoefficientLookup& lookup) {
  Rational v = 0;
  for (const auto& [id, c] : form.terms()) v += c * lookup(id);
  return v;
}

}  // namespace cocycle
