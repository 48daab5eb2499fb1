#pragma once

#include <optional>
#include <string>
#include <vector>

#include "krc/cartan.hpp"
#include "krc/tableau.hpp"

namespace krc {

/// A +/- diagram: nested partitions inner <= inter <= outer (stored as row
/// lengths) where outer/inter and inter/inner are horizontal strips. Cells
/// of inter/inner carry '+', cells of outer/inter carry '-'.
struct PMDiagram {
    Partition inner, inter, outer;

    bool operator==(const PMDiagram& o) const = default;

    /// Per-column triples (inner', inter', outer') of column heights,
    /// widest column first.
    std::vector<std::array<int, 3>> column_triples() const;

    int width() const { return outer.empty() ? 0 : outer[0]; }

    bool valid() const;  // nesting + horizontal strips

    std::string key() const;

    /// Text rendering as a skew picture: '+', '-', '.'
    /// for sign-free cells, one row per line (top row first).
    std::string render() const;

    static PMDiagram from_column_triples(std::vector<std::array<int, 3>> cols);
};

/// The node-0/1 symmetry on +/- diagrams inside B^{r,s}: swaps the number
/// of + and - decorations at each inner height, and the number of (-+)
/// pairs with the number of undecorated columns (height-0 columns counted
/// as s - width virtual blanks).
PMDiagram pm_sigma(const PMDiagram& p, int r, int s);

/// The diagram attached to Lambda_k for the vertical family (B/D/A2odd).
PMDiagram diagram_of_fundamental(const KRIndex& idx, int k);

/// Column-wise concatenation of l_k copies of diagram_of_fundamental.
PMDiagram diagram_of_weight(const KRIndex& idx, const Weight& w);

/// All +/- diagrams with the given outer shape.
std::vector<PMDiagram> enumerate_pm(const Partition& outer);

}  // namespace krc
