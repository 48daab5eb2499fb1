// Command line front end: build crystals, export graphs, print minimal
// element tables, run perfectness verdicts, reproduce the bundled golden
// cases. Exit codes: 0 success (check: perfect), 2 usage error, 3 check
// found a non-perfect crystal, 4 request out of scope.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <set>

#include "krc/golden_data.hpp"
#include "krc/minimal.hpp"
#include "krc/perfect.hpp"

using namespace krc;

namespace {

struct CommonOpts {
    std::string cartan;
    int r = 0, s = 0;
};

KRIndex parse_index(const CommonOpts& o) {
    auto type = AffineType::parse(o.cartan);
    return KRIndex{type, o.r, o.s};
}

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--cartan", o.cartan, "affine type, e.g. C3~1, A5~2, D4~2")
        ->required();
    cmd->add_option("--r", o.r, "Dynkin node r")->required();
    cmd->add_option("--s", o.s, "width s")->required();
}

int cmd_build(const CommonOpts& o) {
    auto idx = parse_index(o);
    auto c = build_kr(idx);
    std::cout << idx.type.to_string() << " B^{" << idx.r << "," << idx.s << "}: "
              << c->size() << " vertices, affine operators "
              << (c->has_affine() ? "0.." : "1..") << idx.type.rank << "\n";
    std::cout << "classical decomposition:";
    for (auto& w : classical_decomposition(idx)) std::cout << " B(" << w.to_string() << ")";
    std::cout << "\n";
    return 0;
}

int cmd_graph(const CommonOpts& o, const std::string& format, const std::string& out) {
    auto c = build_kr(parse_index(o));
    std::string data = format == "json" ? c->g.json() : c->g.dot();
    if (out.empty()) {
        std::cout << data;
    } else {
        std::ofstream f(out);
        f << data;
    }
    return 0;
}

int cmd_minimal(const CommonOpts& o, const std::string& weight) {
    auto idx = parse_index(o);
    auto c = build_kr(idx);
    if (!c->has_affine()) {
        std::cerr << "affine structure out of scope for this crystal; the spin-case\n"
                     "minimal-element constructors are available through the library\n";
        return 4;
    }
    auto print_elem = [&](int v) { std::cout << c->g.elements[v].to_string() << "\n"; };
    if (!weight.empty()) {
        Weight lam(idx.type);
        std::stringstream ss(weight);
        std::string cell;
        int i = 0;
        for (; std::getline(ss, cell, ','); ++i) {
            if (i > idx.type.rank) break;
            lam[i] = std::stoi(cell);
        }
        if (i != idx.type.rank + 1) {
            std::cerr << "expected " << idx.type.rank + 1 << " weight coefficients\n";
            return 2;
        }
        int v = idx.type.family == Family::A1 ? c->g.find(minimal_type_A(idx, lam))
                                              : minimal_family(*c, lam);
        std::cout << "minimal element with eps = " << lam.to_string() << ":\n";
        print_elem(v);
        return 0;
    }
    auto [lev, classes] = classify_minimal(*c);
    std::cout << "minimal level " << lev << "\n";
    for (auto& [w, elems] : classes) {
        std::cout << "eps = " << w.to_string() << "  (" << elems.size() << " element"
                  << (elems.size() == 1 ? "" : "s") << ")\n";
        for (int v : elems) print_elem(v);
    }
    return 0;
}

int cmd_check(const CommonOpts& o, bool json) {
    auto idx = parse_index(o);
    auto rep = verdict(idx);
    auto c = build_kr(idx);
    if (json) {
        std::cout << rep.to_json(*c);
    } else if (rep.verdict == "perfect") {
        std::cout << "perfect, level " << rep.level << "\n";
    } else if (rep.verdict == "not_perfect") {
        std::cout << "not perfect (min eps level " << rep.min_eps_level << ", "
                  << "conjecture predicts "
                  << (rep.conjecture_predicts_perfect ? "perfect" : "not perfect") << ")\n";
    } else {
        std::cout << "partial: affine operators out of scope for this case\n";
    }
    if (rep.verdict == "partial") return 4;
    return rep.verdict == "perfect" ? 0 : 3;
}

int cmd_golden(const std::string& which) {
    ClassicalType ct{ClassicalFamily::C, 3};
    int diffs = 0;
    if (which == "B21") {
        auto c = build_kr({{Family::C1, 3}, 2, 1});
        std::cout << c->g.dot();
        std::set<std::tuple<int, int, int>> expected, actual;
        for (auto& e : golden::b21_graph)
            expected.insert({c->g.find(parse_tableau(ct, e.src)), e.label,
                             c->g.find(parse_tableau(ct, e.dst))});
        for (int i = 0; i <= 3; ++i)
            for (int v = 0; v < c->size(); ++v)
                if (c->g.f(i, v) >= 0) actual.insert({v, i, c->g.f(i, v)});
        diffs = expected == actual && c->size() == 14 ? 0 : 1;
    } else if (which == "B22") {
        auto c = build_kr({{Family::C1, 3}, 2, 2});
        for (auto& row : golden::b22_zero_arrows) {
            int v = c->g.find(parse_tableau(ct, row.b));
            int ev = v < 0 ? -1 : c->g.e(0, v);
            int want = row.f0 ? c->g.find(parse_tableau(ct, row.f0)) : -1;
            std::cout << row.b << " -> "
                      << (ev < 0 ? std::string("(none)") : c->g.elements[ev].one_line())
                      << "\n";
            if (v < 0 || ev != want) ++diffs;
        }
    } else if (which == "B23") {
        auto c = build_kr({{Family::C1, 3}, 2, 3});
        for (auto& row : golden::b23_minimal) {
            int v = c->g.find(parse_tableau(ct, row.b));
            Weight w(c->idx.type);
            ++w.coeffs[row.node_a];
            ++w.coeffs[row.node_b];
            bool ok = v >= 0 && c->eps(v) == w;
            std::cout << row.b << "  eps = " << w.to_string() << (ok ? "" : "  MISMATCH")
                      << "\n";
            if (!ok) ++diffs;
        }
    } else {
        std::cerr << "unknown golden case (use B21, B22 or B23)\n";
        return 2;
    }
    if (diffs) {
        std::cerr << diffs << " difference(s) against the bundled fixture\n";
        return 1;
    }
    std::cerr << "matches the bundled fixture\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Kirillov-Reshetikhin crystal toolkit"};
    app.require_subcommand(1);

    CommonOpts bo, go, mo, co;
    std::string format = "dot", out, weight, golden_case;
    bool json = false;

    auto* b = app.add_subcommand("build", "build a crystal and print a summary");
    add_common(b, bo);
    auto* g = app.add_subcommand("graph", "export the crystal graph");
    add_common(g, go);
    g->add_option("--format", format, "dot or json")
        ->check(CLI::IsMember({"dot", "json"}));
    g->add_option("--out", out, "output file (default stdout)");
    auto* m = app.add_subcommand("minimal", "print the minimal-element table");
    add_common(m, mo);
    m->add_option("--weight", weight, "comma-separated l_0,...,l_n");
    auto* ch = app.add_subcommand("check", "perfectness verdict");
    add_common(ch, co);
    ch->add_flag("--json", json, "emit the full JSON report");
    auto* gd = app.add_subcommand("golden", "reproduce a bundled golden case");
    gd->add_option("--case", golden_case, "B21, B22 or B23")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (b->parsed()) return cmd_build(bo);
        if (g->parsed()) return cmd_graph(go, format, out);
        if (m->parsed()) return cmd_minimal(mo, weight);
        if (ch->parsed()) return cmd_check(co, json);
        if (gd->parsed()) return cmd_golden(golden_case);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
    return 2;
}
