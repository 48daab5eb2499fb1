#pragma once

#include <cstdint>
#include <tuple>
#include <optional>
#include <string>
#include <vector>

#include "krc/cartan.hpp"

namespace krc {

/// Classical type for the letter alphabets.
struct ClassicalType {
    ClassicalFamily family;
    int rank;
    bool operator==(const ClassicalType& o) const = default;
};

/// Letters are encoded as int8: unbarred k -> +k, barred k -> -k, and the
/// type-B zero letter -> 0. Type A uses 1..rank+1 (no bars).
using Letter = int8_t;

/// Order value of a letter in its alphabet (smaller = earlier). For type D
/// the letters n and nbar share the same value (they are incomparable).
int letter_order(ClassicalType t, Letter x);

bool letter_valid(ClassicalType t, Letter x);

std::string letter_str(Letter x);

/// All labeled edges x -> f_i(x) of the letter crystal.
std::vector<std::tuple<Letter, int, Letter>> letter_crystal_edges(ClassicalType t);

/// eps_i / phi_i of a single letter, i in {1,...,rank}.
int letter_eps(ClassicalType t, Letter x, int i);
int letter_phi(ClassicalType t, Letter x, int i);

/// f_i / e_i on a single letter; nullopt when undefined.
std::optional<Letter> letter_f(ClassicalType t, Letter x, int i);
std::optional<Letter> letter_e(ClassicalType t, Letter x, int i);

/// A word is a finite sequence of letters in *scan order*: the signature
/// rule reads it left to right. A rectangular tableau with columns
/// c_1..c_s scans as c_s,...,c_1 (rightmost column first), each column
/// bottom to top; as a tensor product this is c_s x ... x c_1 with every
/// column read top-to-bottom.
struct Word {
    ClassicalType type;
    std::vector<Letter> letters;

    std::string to_string() const;  // comma-separated, tensor display order
};

/// Outcome of one signature-rule pass at index i.
struct Signature {
    int eps = 0;
    int phi = 0;
    int e_pos = -1;  // scan position holding the rightmost surviving minus
    int f_pos = -1;  // scan position holding the leftmost surviving plus
};

/// Run the bracketing rule over per-position (eps,phi) sign counts.
/// Positions contribute eps many '-' then phi many '+'; adjacent "+-"
/// pairs cancel; eps/phi are the surviving counts.
Signature signature_scan(const std::vector<std::pair<int, int>>& eps_phi);

Signature word_signature(const Word& w, int i);
int word_eps(const Word& w, int i);
int word_phi(const Word& w, int i);
std::optional<Word> word_f(const Word& w, int i);
std::optional<Word> word_e(const Word& w, int i);

/// Letter content in e-coordinates (c_1,...,c_rank): +1 per unbarred k,
/// -1 per barred k, zero letters contribute nothing. Type A letters k
/// count into c_k (rank+1 coordinates there).
std::vector<int> word_content(const Word& w);

/// Spin column for types B_n / D_n: signs[k] = +1 if letter k+1 present,
/// -1 if its bar is present (0-indexed positions 0..n-1).
struct SpinColumn {
    std::vector<int8_t> signs;
    bool operator==(const SpinColumn& o) const = default;
};

int spin_eps(ClassicalType t, const SpinColumn& c, int i);
int spin_phi(ClassicalType t, const SpinColumn& c, int i);
std::optional<SpinColumn> spin_f(ClassicalType t, const SpinColumn& c, int i);
std::optional<SpinColumn> spin_e(ClassicalType t, const SpinColumn& c, int i);

}  // namespace krc
