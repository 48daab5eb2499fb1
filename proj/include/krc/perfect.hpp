#pragma once

#include <map>

#include "krc/affine.hpp"

namespace krc {

/// Definition-2.2 checks and the conjecture verdict for one B^{r,s}.
struct PerfectnessReport {
    PerfectnessReport(KRIndex i) : idx(i) {}
    KRIndex idx;
    // verdict: "perfect" | "not_perfect" | "partial" (affine ops out of scope)
    std::string verdict;
    int level = -1;          // the perfect level when verdict == "perfect"
    int min_eps_level = -1;
    bool cond2 = false;      // B (x) B connected
    bool cond3 = false;      // extremal classical weight unique
    bool cond4 = false;      // lev(eps(b)) >= min level = s/c_r
    bool cond5 = false;      // eps, phi bijections on minimal elements
    bool conjecture_predicts_perfect = false;
    bool agrees_with_conjecture = false;
    // eps-classes of minimal elements, in enumerate_dominant order
    std::vector<std::pair<Weight, std::vector<int>>> minimal_classes;
    std::vector<int> tau_perm;  // empirical tau as index permutation (perfect only)

    std::string to_json(const AffineCrystal& c) const;
};

bool check_condition_2(const AffineCrystal& c);
bool check_condition_3(const AffineCrystal& c);

/// Level of eps over the crystal plus the grouping of the argmin set by eps.
std::pair<int, std::vector<std::pair<Weight, std::vector<int>>>> classify_minimal(
    const AffineCrystal& c);

PerfectnessReport verdict(const KRIndex& idx);

/// tau = eps o phi^{-1} restricted to minimal elements, as a permutation of
/// enumerate_dominant(type, level) indices. Requires a perfect report.
std::vector<int> tau_empirical(const AffineCrystal& c, const PerfectnessReport& report);

}  // namespace krc
