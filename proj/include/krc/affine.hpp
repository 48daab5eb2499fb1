#pragma once

#include <memory>
#include <unordered_map>

#include "krc/crystal.hpp"
#include "krc/pm_diagram.hpp"

namespace krc {

/// Schuetzenberger promotion on rectangular type-A tableaux over 1..rank+1,
/// realizing the affine diagram rotation i -> i+1. Order rank+1 on rectangles.
Tableau promotion(const Tableau& t);
Tableau promotion_inverse(const Tableau& t);

/// Shapes (row partitions) of the classical decomposition of B^{r,s}.
std::vector<Partition> classical_decomposition_shapes(const KRIndex& idx);

/// Same data as dominant classical weights (coefficient vector over
/// Lambda_0..Lambda_n with Lambda_0-entry zero).
std::vector<Weight> classical_decomposition(const KRIndex& idx);

/// A KR crystal: vertex set plus operators. Crystals for the spin cases
/// D_n^(1) r in {n-1,n}, C_n^(1) r=n and D_{n+1}^(2) r=n carry only the
/// classical operators (has_affine() == false).
struct AffineCrystal {
    KRIndex idx;
    CrystalGraph g;

    // vertical family (B/D/A2odd) data
    std::vector<int> hw2n;                            // {2..n}-highest ids
    std::vector<PMDiagram> hw_diagram;                // parallel to hw2n
    std::unordered_map<std::string, int> diagram_to_hw;
    std::vector<int> sigma;                           // empty unless vertical

    // realization internals
    std::shared_ptr<const AffineCrystal> ambient;
    std::vector<int> to_ambient;    // own id -> ambient id
    std::vector<int> from_ambient;  // ambient id -> own id or -1
    std::vector<int> m_embed;       // multiplicities (virtual realizations)
    bool is_virtual = false;

    AffineCrystal(KRIndex i, CrystalGraph graph) : idx(i), g(std::move(graph)) {}

    int size() const { return g.size(); }
    bool has_affine() const { return g.has_affine; }

    Weight eps(int v) const;   // full affine eps vector
    Weight phi(int v) const;
    Weight wt(int v) const;    // affine weight (virtual: ambient weight / m)

    int min_eps_level() const;
};

using CrystalPtr = std::shared_ptr<const AffineCrystal>;

/// Build (and memoize) the KR crystal B^{r,s}.
CrystalPtr build_kr(const KRIndex& idx);

/// Phi: the +/- diagram <-> {2..n}-highest-weight bijection of the built
/// vertical-family crystal. Throws on inadmissible diagrams.
int phi_of_diagram(const AffineCrystal& c, const PMDiagram& p);
PMDiagram diagram_of_element(const AffineCrystal& c, int v);  // v must be {2..n}-hw

/// Shortest operator string f_{i_1} f_{i_2} ... (applied left to right)
/// moving source to target inside the crystal, using only ops in J.
std::vector<int> derive_operator_string(const AffineCrystal& c, int source,
                                        int target, const std::vector<int>& J);

/// Apply an operator string (f ops, left to right); -1 when it dies.
int apply_f_string(const AffineCrystal& c, int v, const std::vector<int>& ops);

/// T(Lambda_k): the tableau the vertical family assigns to Lambda_k
/// (the per-case table), or the C_n^(1) r=n column rule.
Tableau tableau_of_fundamental(const KRIndex& idx, int k);

}  // namespace krc
