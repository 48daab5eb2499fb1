#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace krc {

/// The seven nonexceptional affine families. A2even / A2odd are the twisted
/// types A_{2n}^(2) and A_{2n-1}^(2); D2 is D_{n+1}^(2). The rank n counts
/// the classical Dynkin nodes, so the affine index set is {0,...,n}.
enum class Family { A1, B1, C1, D1, A2even, A2odd, D2 };

enum class ClassicalFamily : char { A = 'A', B = 'B', C = 'C', D = 'D' };

struct AffineType {
    Family family;
    int rank;

    AffineType(Family f, int n);

    int nodes() const { return rank + 1; }

    /// Classical subalgebra acting through nodes {1,...,n}.
    ClassicalFamily classical_family() const;

    /// Cartan matrix a[i][j] = <alpha_j, alpha_i^vee>, indices 0..n.
    std::vector<std::vector<int>> cartan_matrix() const;

    /// Dual Kac labels a_i^vee; level(Lambda) = sum a_i^vee l_i.
    std::vector<int> dual_kac_labels() const;

    /// Parse/print in the form "C3~1", "A5~2", "D4~2" (letter, subscript,
    /// '~', twist order).
    static AffineType parse(const std::string& s);
    std::string to_string() const;

    bool operator==(const AffineType& o) const = default;
};

/// Integer weight in Lambda-coordinates (l_0,...,l_n), delta dropped.
struct Weight {
    std::vector<int> coeffs;
    AffineType type;

    Weight(AffineType t) : coeffs(t.nodes(), 0), type(t) {}
    Weight(AffineType t, std::vector<int> c);

    int& operator[](int i) { return coeffs[i]; }
    int operator[](int i) const { return coeffs[i]; }

    long level() const;
    bool dominant() const;

    Weight operator+(const Weight& o) const;
    Weight operator-(const Weight& o) const;
    bool operator==(const Weight& o) const { return coeffs == o.coeffs; }
    bool operator!=(const Weight& o) const { return !(*this == o); }

    std::string to_string() const;  // e.g. "L0+2L2"
};

/// Fundamental weight Lambda_i.
Weight fundamental(AffineType t, int i);

struct KRIndex {
    AffineType type;
    int r;  // classical node 1..n
    int s;  // width >= 1

    KRIndex(AffineType t, int r_, int s_);
    bool operator==(const KRIndex& o) const = default;
};

/// Table entry c_r; the perfectness-level candidate is s / c_r.
int c_r(const KRIndex& idx);

/// All dominant weights of exact level ell, ordered lexicographically
/// decreasing on (l_0,...,l_n) (matches the tables' ordering).
std::vector<Weight> enumerate_dominant(AffineType t, int ell);

/// Column i of the Cartan matrix: alpha_i expressed in Lambda-coordinates.
Weight simple_root_in_lambda_coords(AffineType t, int i);

/// The level-preserving permutation tau = eps o phi^{-1} of P^+_ell predicted
/// for a perfect B^{r,s}. Throws if s/c_r is not an integer (crystal not
/// perfect) or if w is not dominant.
Weight tau(const KRIndex& idx, const Weight& w);

}  // namespace krc
