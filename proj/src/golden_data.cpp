#include "krc/golden_data.hpp"

#include <sstream>
#include <stdexcept>

namespace krc {

Tableau parse_tableau(ClassicalType t, const std::string& s, bool spin) {
    Tableau out{t, spin, {}};
    if (s == "u" || s.empty()) return out;
    std::stringstream ss(s);
    std::string colstr;
    while (std::getline(ss, colstr, ';')) {
        std::vector<Letter> col;
        std::stringstream cs(colstr);
        std::string cell;
        while (std::getline(cs, cell, ',')) col.push_back((Letter)std::stoi(cell));
        out.cols.push_back(col);
    }
    return out;
}

namespace golden {

// Hand-transcribed fixtures; columns are written bottom-to-top.

const std::vector<Edge> b21_graph = {
    {"-2,-1", 0, "1,-2"}, {"2,-1", 0, "1,2"},   {"2,-1", 2, "3,-1"},
    {"1,-2", 1, "2,-2"},  {"1,2", 2, "1,3"},    {"-3,-1", 2, "-2,-1"},
    {"-3,-1", 0, "1,-3"}, {"3,-1", 3, "-3,-1"}, {"3,-1", 0, "1,3"},
    {"2,-2", 1, "2,-1"},  {"1,-3", 2, "1,-2"},  {"1,-3", 1, "2,-3"},
    {"1,3", 3, "1,-3"},   {"1,3", 1, "2,3"},    {"-3,-2", 1, "-3,-1"},
    {"3,-2", 1, "3,-1"},  {"3,-2", 3, "-3,-2"}, {"2,-3", 2, "3,-3"},
    {"2,3", 3, "2,-3"},   {"3,-3", 2, "3,-2"},
};

const std::vector<F0Row> b22_zero_arrows = {
    {"1,2;1,2", "2;2"},
    {"1,2;2,3", "2,3;2,-1"},
    {"2,3;2,3", nullptr},
    {"1,2;2,-2", "2;-1"},
    {"1,2;2,-1", nullptr},
    {"1,3;2,-1", nullptr},
    {"2,3;2,-1", nullptr},
    {"1,2;-2,-1", nullptr},
    {"2,-2;2,-1", nullptr},
    {"2,-1;2,-1", nullptr},
    {"1;2", "2,-2;2,-1"},
    {"2;2", "2,-1;2,-1"},
    {"1;-1", nullptr},
    {"2;-1", nullptr},
    {"-1;-1", nullptr},
    {"1;1", "u"},
    {"u", "-1;-1"},
};

const std::vector<MinRow> b22_minimal = {
    {"u", 0},
    {"1;-1", 1},
    {"1,2;-2,-1", 2},
    {"2,3;-3,-2", 3},
};

const std::vector<MinRow> b21_minimal = {
    {"1,2", 0},
    {"2,3", 1},
    {"2,-2", 1},
    {"3,-3", 2},
    {"-2,-1", 2},
    {"-3,-2", 3},
};

const std::vector<MinRow2> b23_minimal = {
    {"1,2", 0, 0},
    {"1,2;1;-1", 0, 1},
    {"2,-2", 0, 1},
    {"2,3", 0, 1},
    {"1,2;1,2;-2,-1", 0, 2},
    {"-2,-1", 0, 2},
    {"3,-3", 0, 2},
    {"1,-2;2;-2", 0, 2},
    {"1,3;2;-2", 0, 2},
    {"1,2;2,3;-3,-2", 0, 3},
    {"-3,-2", 0, 3},
    {"1,-3;3;-3", 0, 3},
    {"1,3;2;-1", 1, 1},
    {"1,-2;2;-1", 1, 1},
    {"1,2;-1;-1", 1, 1},
    {"1,2;2,3;-2,-1", 1, 2},
    {"1,2;2,-2;-2,-1", 1, 2},
    {"1,-3;3;-1", 1, 2},
    {"2,-2;-2;-1", 1, 2},
    {"2,3;-2;-1", 1, 2},
    {"1,3;3,-3;-3,-1", 1, 3},
    {"2,3;2,3;-3,-2", 1, 3},
    {"1,2;3,-3;-3,-1", 1, 3},
    {"1,-2;-3;-1", 1, 3},
    {"3,-3;-3;-1", 1, 3},
    {"1,2;-2,-1;-2,-1", 2, 2},
    {"1,2;3,-3;-2,-1", 2, 2},
    {"1,3;3,-3;-2,-1", 2, 2},
    {"2,3;-3,-2;-2,-1", 2, 3},
    {"2,3;3,-3;-3,-2", 2, 3},
    {"1,2;-3,-2;-2,-1", 2, 3},
    {"2,3;-3,-2;-3,-2", 3, 3},
};

const std::vector<SImage> b23_s_images = {
    {"2,-2;-2;-1", "1,2;-3,-2;-2,-1"},
    {"1,-3;3;-1", "1,2;4,-4;-2,-1"},
};

}  // namespace golden
}  // namespace krc
