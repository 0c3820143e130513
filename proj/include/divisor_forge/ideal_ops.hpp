#pragma once

#include <span>
#include <vector>

#include "divisor_forge/ideal.hpp"

namespace dforge {

Ideal idealSum(const Ideal& I, const Ideal& J);
Ideal idealProduct(const Ideal& I, const Ideal& J);
Ideal idealPower(const Ideal& I, unsigned n);
Ideal idealIntersection(const Ideal& I, const Ideal& J);

// Ideal generated by the n-th powers of the stored generators.
Ideal bracketPower(const Ideal& I, unsigned n);

// I : g and I : J.
Ideal idealQuotient(const Ideal& I, const Polynomial& g);
Ideal idealQuotient(const Ideal& I, const Ideal& J);

// I : J^infinity, computed generator by generator with the Rabinowitsch
// trick. The iterated-quotient variant is slower and serves as a cross-check.
Ideal saturate(const Ideal& I, const Polynomial& g);
Ideal saturate(const Ideal& I, const Ideal& J);
Ideal saturateByQuotients(const Ideal& I, const Ideal& J);

// Preimage of I intersected with the subring generated by the variables not
// listed. The result lives in a fresh polynomial ring on the kept variables,
// taken in their original order.
Ideal eliminate(const Ideal& I, std::span<const size_t> variables);

// Ideal generated by every variable of positive degree.
Ideal irrelevantIdeal(const RingPtr& ring);

bool isHomogeneous(const Ideal& I);

// Basis of the degree-d piece of a homogeneous ideal: each element is monic,
// in normal form, with pairwise distinct leading monomials, sorted by
// increasing leading monomial.
std::vector<Polynomial> gradedPieceBasis(const Ideal& I, const Degree& d, bool parallel = true);

// All monomials of the ambient ring of multidegree d, in decreasing order.
std::vector<Monomial> monomialsOfDegree(const Grading& grading, const Degree& d);

// Linear-algebra helper: brings a list of polynomials to reduced row echelon
// form over their monomials.
std::vector<Polynomial> rowEchelon(std::vector<Polynomial> rows);

}  // namespace dforge
