#ifndef COCYCLE_COEFFICIENT_FORMS_HPP
#define COCYCLE_COEFFICIENT_FORMS_HPP

// Degree-0, trivial-module cocycle and coboundary conditions written out term by
// term in the coefficients psi_{i,j,k} = psi(e_i,e_j,e_k), c_{i,j} = psi(e_i,e_j,t),
// phi_{i,j} = phi(e_i,e_j) and b_i = phi(e_i,t). This is a second route to the same
// linear forms that expand_coboundary produces; the tests compare the two.
//
// alpha_i = -(i^3 - i)/12. Central terms only appear for the Virasoro algebra.

#include <cstdint>

#include "cocycle/cochain.hpp"

namespace cocycle {

/// Coefficient psi(e_i, e_j, e_k) (or psi(e_i, e_j, t) with central = true) as a
/// signed canonical coefficient; empty when it vanishes by alternation or degree.
CoefficientForm psi_coefficient(std::int64_t i, std::int64_t j, std::int64_t k);
CoefficientForm c_coefficient(std::int64_t i, std::int64_t j);
CoefficientForm phi_coefficient(std::int64_t i, std::int64_t j);
CoefficientForm b_coefficient(std::int64_t i);

/// (delta_3 psi)(e_i, e_j, e_k, e_l).
CoefficientForm cocycle_condition(const LieAlgebra& algebra, std::int64_t i, std::int64_t j,
                                  std::int64_t k, std::int64_t l);
/// (delta_3 psi)(e_i, e_j, e_k, t) = (j-i)c_{i+j,k} - (k-i)c_{i+k,j} + (k-j)c_{j+k,i}.
CoefficientForm cocycle_condition_central(std::int64_t i, std::int64_t j, std::int64_t k);
/// (delta_2 phi)(e_i, e_j, e_k).
CoefficientForm coboundary_condition(const LieAlgebra& algebra, std::int64_t i, std::int64_t j,
                                     std::int64_t k);
/// (delta_2 phi)(e_i, e_j, t) = (j-i) b_{i+j}.
CoefficientForm coboundary_condition_central(std::int64_t i, std::int64_t j);

Rational apply_form(const CoefficientForm& form, const CoefficientLookup& lookup);

}  // namespace cocycle

#endif  // COCYCLE_COEFFICIENT_FORMS_HPP
