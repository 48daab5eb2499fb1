#pragma once

#include "krc/affine.hpp"

namespace krc {

/// Minimal element b with eps(b) = lambda in type-A B^{r,s}, built from the
/// closed-form row counts.
Tableau minimal_type_A(const KRIndex& idx, const Weight& lambda);

/// Minimal element for the vertical family: the f-string composite applied
/// to Phi(diagram(lambda)). Returns the element id in the built crystal.
int minimal_family(const AffineCrystal& c, const Weight& lambda);

/// Spin-case constructors (classical validation only; the affine structure
/// of these crystals is out of scope).
Tableau minimal_Dn_spin(const KRIndex& idx, const Weight& lambda);   // D_n^(1), r=n or n-1
Tableau minimal_D2_spin(const KRIndex& idx, const Weight& lambda);   // D_{n+1}^(2), r=n
int minimal_Cn_spin(const AffineCrystal& c, const Weight& lambda);   // C_n^(1), r=n

/// Non-perfectness witnesses: two elements of the ambient realization with
/// equal eps of level 2s+2. For type B_n^(1) B^{n,2s+1} the ambient is
/// A_{2n-1}^(2) B^{n,2s+1}; for C_n^(1) B^{r,2s+1} (r<n) it is
/// A_{2n+1}^(2) B^{r,2s+1}.
std::pair<int, int> witness_pair_B(int n, int s, CrystalPtr* ambient_out = nullptr);
std::pair<int, int> witness_pair_C(int n, int r, int s, CrystalPtr* ambient_out = nullptr);

/// Brute-force oracle: all element ids with eps(v) == lambda.
std::vector<int> elements_with_eps(const AffineCrystal& c, const Weight& lambda);

/// Dispatch the right constructor for the crystal's family: the type-A row
/// counts, the vertical-family f-string composite, or (for the realized
/// fixed-point/virtual crystals) the unique eps-preimage. Throws for the
/// spin cases without affine structure.
int minimal_element_id(const AffineCrystal& c, const Weight& lambda);

}  // namespace krc
