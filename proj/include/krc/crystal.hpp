#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "krc/cartan.hpp"
#include "krc/tableau.hpp"

namespace krc {

/// Finite crystal with edges labeled by i in {0,...,num_ops-1}. Vertices are
/// tableaux; operator evaluation is stored explicitly once built. Crystals
/// with only classical operators set has_affine = false and index their ops
/// 1..n (slot 0 unused).
struct CrystalGraph {
    AffineType type;          // ambient affine type (for weights/levels)
    bool has_affine = false;  // whether op 0 is populated

    explicit CrystalGraph(AffineType t) : type(t) {}
    std::vector<Tableau> elements;
    std::vector<std::vector<int>> fop;  // fop[i][v] = f_i(v) or -1
    std::vector<std::vector<int>> eop;

    std::unordered_map<std::string, int> index_of;

    int size() const { return (int)elements.size(); }
    int n_ops() const { return (int)fop.size(); }

    int f(int i, int v) const { return fop[i][v]; }
    int e(int i, int v) const { return eop[i][v]; }

    int eps(int i, int v) const;
    int phi(int i, int v) const;

    /// Full eps/phi vectors (affine crystals only).
    Weight eps_wt(int v) const;
    Weight phi_wt(int v) const;

    /// Affine weight in Lambda-coordinates: classical pairings on nodes
    /// 1..n, node 0 forced by level zero.
    Weight weight(int v) const;

    int find(const Tableau& t) const;

    std::string dot() const;
    std::string json() const;
};

/// BFS closure of the seeds under the given operator indices (both e and f).
/// `classical_only` crystals use ops 1..n of the tableau signature rule.
CrystalGraph generate_classical(AffineType type, const std::vector<Tableau>& seeds);

/// Tensor square B (x) B with the two-factor rule on cached eps/phi; used by
/// the perfectness condition (2) connectivity check.
struct TensorSquare {
    const CrystalGraph* base;
    /// Is B (x) B connected as an undirected graph over all ops (incl. 0)?
    bool connected() const;
};

/// Elements with eps_j = 0 for all j in J.
std::vector<int> subalgebra_highest(const CrystalGraph& g, const std::vector<int>& J);

}  // namespace krc
