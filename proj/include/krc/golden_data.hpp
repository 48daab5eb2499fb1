#pragma once

#include <string>
#include <vector>

#include "krc/tableau.hpp"

namespace krc {

/// Parse "1,2;-2,-1" into a tableau (columns bottom-to-top, ';' separated;
/// "u" is the empty tableau).
Tableau parse_tableau(ClassicalType t, const std::string& s, bool spin = false);

namespace golden {

struct Edge {
    const char* src;
    int label;
    const char* dst;
};

/// C_3^(1) B^{2,1}: the full crystal graph (14 vertices, 20 edges).
extern const std::vector<Edge> b21_graph;

struct F0Row {
    const char* b;
    const char* f0;  // nullptr = no arrow
};

/// C_3^(1) B^{2,2}: the 0-arrow table on all seventeen {2,3}-highest
/// elements (stored in the raising orientation, see the acceptance suite).
extern const std::vector<F0Row> b22_zero_arrows;

struct MinRow {
    const char* b;
    int eps_node;  // eps(b) = Lambda_{eps_node}
};

/// C_3^(1) B^{2,2} and B^{2,1}: minimal element tables.
extern const std::vector<MinRow> b22_minimal;
extern const std::vector<MinRow> b21_minimal;

/// C_3^(1) B^{2,3}: eps classes of the 32 minimal elements.
struct MinRow2 {
    const char* b;
    int node_a, node_b;  // eps = Lambda_a + Lambda_b (a == b means 2 Lambda_a)
};
extern const std::vector<MinRow2> b23_minimal;

/// The two designated B^{2,3} elements and their images under S in
/// A_7^(2) B^{2,3}.
struct SImage {
    const char* source;  // C_3^(1) element
    const char* image;   // A_7^(2) element
};
extern const std::vector<SImage> b23_s_images;

}  // namespace golden
}  // namespace krc
