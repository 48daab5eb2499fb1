#pragma once

#include <optional>
#include <string>
#include <vector>

#include "krc/letters.hpp"

namespace krc {

/// Partition stored as weakly decreasing row lengths.
using Partition = std::vector<int>;

Partition conjugate(const Partition& p);
bool contains(const Partition& outer, const Partition& inner);
/// Column heights (h_1 >= h_2 >= ...) of a partition given by rows.
Partition column_heights(const Partition& rows);
Partition rows_from_column_heights(const Partition& cols);

/// A filling with columns of weakly decreasing heights; column entries are
/// stored bottom to top. Spin tableaux (flag set) hold one of {k, kbar} per
/// column and their operators act column-wise through the spin rule; all
/// other tableaux act letter-wise through the signature rule.
struct Tableau {
    ClassicalType type;
    bool spin = false;
    std::vector<std::vector<Letter>> cols;

    bool operator==(const Tableau& o) const {
        return spin == o.spin && cols == o.cols;
    }

    int width() const { return (int)cols.size(); }
    Partition shape_cols() const;   // column heights
    Partition shape_rows() const;   // row lengths

    /// Scan-order word: columns right to left, bottom to top inside.
    Word reading_word() const;

    /// Content in e-coordinates; doubled (x2) for spin tableaux so that it
    /// stays integral.
    std::vector<int> content2() const;

    std::string to_string() const;      // rows, top row first
    std::string one_line() const;       // compact single-line form
};

/// Rebuild a tableau from its scan-order word and the column heights.
Tableau tableau_from_word(ClassicalType t, const Word& w, const Partition& heights);

int tab_eps(const Tableau& t, int i);
int tab_phi(const Tableau& t, int i);
std::optional<Tableau> tab_f(const Tableau& t, int i);
std::optional<Tableau> tab_e(const Tableau& t, int i);

/// Highest-weight tableau of shape lambda (rows): column j filled
/// 1..height bottom to top.
Tableau highest_weight_tableau(ClassicalType t, const Partition& rows);

/// Highest-weight spin tableau: s columns, all signs +; for D-type
/// B(s Lambda_{n-1}) pass minus_last=true to flip position n in every column.
Tableau highest_weight_spin(ClassicalType t, int s, bool minus_last = false);

/// <content-weight, h_i> pairing for the classical type (content doubled).
int content2_pairing(ClassicalType t, const std::vector<int>& c2, int i);

/// Assemble a tableau from row letter-multisets (row 1 = bottom); each row
/// is sorted by letter order and column c takes the c-th entry of each row.
Tableau tableau_from_rows(ClassicalType t, bool spin,
                          const std::vector<std::vector<Letter>>& rows);

}  // namespace krc
