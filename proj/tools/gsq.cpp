// gsq: squareness decisions, square roots and verbal-width reports for
// permutations, 2x2 matrix groups over prime fields, and small groups.
//
// Exit codes: 0 computed (true / exists), 1 computed (false / does not
// exist), 2 usage error, 3 oracle mismatch.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gsq/builtin_groups.hpp"
#include "gsq/mat2.hpp"
#include "gsq/perm_squares.hpp"
#include "gsq/width.hpp"

using json = nlohmann::ordered_json;
using namespace gsq;

namespace {

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;
constexpr int kExitOracle = 3;

json cycle_type_json(const CycleType& ct) {
    json arr = json::array();
    for (auto [len, m] : ct.multiplicities()) arr.push_back(json::array({len, m}));
    return arr;
}

int oracle_failure(const std::string& message) {
    std::cerr << "oracle mismatch: " << message << "\n";
    return kExitOracle;
}

// ---------------------------------------------------------------- perm ----

struct PermArgs {
    std::string text;
    int degree = 0;
    std::string group = "an";
    std::string mode = "constructive";
    int shift = 0;
    bool json_out = false;
    bool oracle = false;
};

Perm parse_perm_arg(const PermArgs& a) { return Perm::parse(a.text, a.degree); }

/// Brute-force existence of a root with the requested parity (degree <= 10).
bool brute_force_square_in(const Perm& g, Ambient ambient) {
    for (const Perm& h : enumerate_roots(g, RootMode::BruteForce))
        if (ambient == Ambient::Sn || parity(h) == Parity::Even) return true;
    return false;
}

json root_report_json(const Perm& g, const RootReport& rep, Ambient ambient) {
    bool exists = ambient == Ambient::An ? rep.exists_in_an : rep.exists_in_sn;
    json j;
    j["schema"] = 1;
    j["degree"] = g.degree();
    j["cycle_type"] = cycle_type_json(CycleType(g));
    j["square_in_sn"] = rep.exists_in_sn;
    j["square_in_an"] = rep.exists_in_an;
    j["witness"] = rep.witness ? json(rep.witness->to_cycle_string()) : json(nullptr);
    j["obstruction"] =
        exists ? json(nullptr) : json(obstruction_name(rep.obstruction));
    return j;
}

int cmd_perm_root(const PermArgs& a, bool want_witness) {
    Perm g = parse_perm_arg(a);
    Ambient ambient = a.group == "sn" ? Ambient::Sn : Ambient::An;
    RootReport rep = sqrt_permutation(g, ambient);
    bool exists = ambient == Ambient::An ? rep.exists_in_an : rep.exists_in_sn;
    if (a.oracle) {
        if (g.degree() > 10) {
            std::cerr << "--oracle needs degree <= 10\n";
            return kExitUsage;
        }
        if (brute_force_square_in(g, ambient) != exists)
            return oracle_failure("criterion disagrees with brute force for " + g.to_cycle_string());
        if (rep.witness && compose(*rep.witness, *rep.witness) != g)
            return oracle_failure("witness does not square to the input");
    }
    if (a.json_out) {
        std::cout << root_report_json(g, rep, ambient).dump() << "\n";
    } else {
        const char* gname = ambient == Ambient::An ? "A_n" : "S_n";
        if (exists) {
            std::cout << g.to_cycle_string() << " is a square in " << gname << " (degree "
                      << g.degree() << ")\n";
            if (want_witness && rep.witness) {
                std::cout << "root: " << rep.witness->to_cycle_string() << " ("
                          << (parity(*rep.witness) == Parity::Even ? "even" : "odd") << ")\n";
            }
        } else {
            std::cout << g.to_cycle_string() << " is not a square in " << gname << " (degree "
                      << g.degree() << "): " << obstruction_name(rep.obstruction) << "\n";
        }
    }
    return exists ? kExitTrue : kExitFalse;
}

int cmd_perm_roots(const PermArgs& a) {
    Perm g = parse_perm_arg(a);
    RootMode mode = a.mode == "brute-force" ? RootMode::BruteForce : RootMode::Constructive;
    std::vector<Perm> roots = enumerate_roots(g, mode);
    if (a.oracle) {
        if (g.degree() > 10) {
            std::cerr << "--oracle needs degree <= 10\n";
            return kExitUsage;
        }
        RootMode other = mode == RootMode::BruteForce ? RootMode::Constructive : RootMode::BruteForce;
        if (enumerate_roots(g, other) != roots)
            return oracle_failure("constructive and brute-force root sets differ");
    }
    if (a.json_out) {
        json j;
        j["schema"] = 1;
        j["degree"] = g.degree();
        j["cycle_type"] = cycle_type_json(CycleType(g));
        j["mode"] = a.mode;
        j["count"] = roots.size();
        json arr = json::array();
        for (const Perm& r : roots) arr.push_back(r.to_cycle_string());
        j["roots"] = arr;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << roots.size() << " root(s) of " << g.to_cycle_string() << "\n";
        for (const Perm& r : roots) std::cout << "  " << r.to_cycle_string() << "\n";
    }
    return roots.empty() ? kExitFalse : kExitTrue;
}

int cmd_perm_decompose2(const PermArgs& a) {
    Perm g = parse_perm_arg(a);
    TwoSquareDecomposition dec = decompose_two_squares(g, a.shift);
    Perm check = compose(power(dec.h, 2), power(dec.t, 2));
    if (check != g || parity(dec.h) != Parity::Even || parity(dec.t) != Parity::Even)
        return oracle_failure("h^2 t^2 does not reproduce the input");
    if (a.oracle && g.degree() <= 10) {
        if (brute_force_square_in(g, Ambient::An) != is_square_in_an(CycleType(g)))
            return oracle_failure("criterion disagrees with brute force for " + g.to_cycle_string());
    }
    if (a.json_out) {
        json j;
        j["schema"] = 1;
        j["degree"] = g.degree();
        j["cycle_type"] = cycle_type_json(CycleType(g));
        j["h"] = dec.h.to_cycle_string();
        j["t"] = dec.t.to_cycle_string();
        j["shift"] = a.shift;
        j["shift_count"] = two_square_shift_count(g);
        std::cout << j.dump() << "\n";
    } else {
        std::cout << g.to_cycle_string() << " = h^2 t^2 with\n  h = " << dec.h.to_cycle_string()
                  << "\n  t = " << dec.t.to_cycle_string() << "\n";
    }
    return kExitTrue;
}

// ----------------------------------------------------------------- mat ----

struct MatArgs {
    std::string text;
    std::uint64_t prime = 0;
    std::string group = "sl2";
    bool json_out = false;
    bool oracle = false;
};

MatGroup parse_mat_group(const std::string& s) {
    if (s == "gl2") return MatGroup::GL2;
    if (s == "sl2") return MatGroup::SL2;
    if (s == "psl2") return MatGroup::PSL2;
    throw CLI::ValidationError("--group must be gl2, sl2 or psl2");
}

std::pair<PrimeField, Mat2> parse_mat_arg(const MatArgs& a) {
    Mat2Text raw = parse_mat2_text(a.text);
    std::uint64_t p = a.prime;
    if (raw.modulus) {
        if (p != 0 && p != *raw.modulus)
            throw std::invalid_argument("--prime disagrees with the 'mod' suffix");
        p = *raw.modulus;
    }
    if (p == 0) throw std::invalid_argument("prime modulus required (--prime or 'mod p' suffix)");
    PrimeField f(p);
    Mat2 m{f.reduce(raw.a), f.reduce(raw.b), f.reduce(raw.c), f.reduce(raw.d)};
    return {f, m};
}

json criterion_values_json(const PrimeField& f, const Mat2& m) {
    json j;
    j["trace"] = mat_trace(f, m);
    j["det"] = mat_det(f, m);
    if (f.p() == 2) {
        j["tr_plus_2_legendre"] = nullptr;
        j["tr_minus_2_legendre"] = nullptr;
    } else {
        j["tr_plus_2_legendre"] = f.legendre(f.add(mat_trace(f, m), 2));
        j["tr_minus_2_legendre"] = f.legendre(f.sub(mat_trace(f, m), 2 % f.p()));
    }
    return j;
}

int cmd_mat_classify(const MatArgs& a) {
    auto [f, m] = parse_mat_arg(a);
    MatrixClass cls = classify(f, m);
    if (a.json_out) {
        json j;
        j["schema"] = 1;
        j["p"] = f.p();
        j["matrix"] = format_mat2(m);
        j["class"] = mat_kind_name(cls.kind);
        if (cls.kind == MatKind::Irreducible)
            j["eigenvalues"] = nullptr;
        else
            j["eigenvalues"] = json::array({cls.lambda1, cls.lambda2});
        j["criterion_values"] = criterion_values_json(f, m);
        std::cout << j.dump() << "\n";
    } else {
        std::cout << format_mat2(m) << " mod " << f.p() << ": " << mat_kind_name(cls.kind);
        if (cls.kind != MatKind::Irreducible)
            std::cout << " (eigenvalues " << cls.lambda1 << ", " << cls.lambda2 << ")";
        std::cout << "\n";
    }
    return kExitTrue;
}

int cmd_mat_root(const MatArgs& a, bool want_witness) {
    auto [f, m] = parse_mat_arg(a);
    MatGroup group = parse_mat_group(a.group);
    if (!in_group(f, m, group)) throw std::invalid_argument("matrix is not in the requested group");
    bool exists = has_sqrt(f, m, group);
    std::optional<Mat2> witness = sqrt(f, m, group);
    if (exists != witness.has_value())
        return oracle_failure("has_sqrt and sqrt disagree for " + format_mat2(m));
    if (witness) {
        Mat2 sq = mat_mul(f, *witness, *witness);
        if (!mat_equal_in(f, group, sq, m))
            return oracle_failure("witness does not square to the input");
    }
    if (a.oracle) {
        if (f.p() > 17) {
            std::cerr << "--oracle needs p <= 17\n";
            return kExitUsage;
        }
        bool brute = !brute_force_roots(f, m, group).empty();
        if (brute != exists)
            return oracle_failure("criterion disagrees with brute force for " + format_mat2(m));
    }
    if (a.json_out) {
        json j;
        j["schema"] = 1;
        j["p"] = f.p();
        j["group"] = mat_group_name(group);
        j["matrix"] = format_mat2(m);
        j["class"] = mat_kind_name(classify(f, m).kind);
        j["has_sqrt"] = exists;
        j["witness"] = witness ? json(format_mat2(*witness)) : json(nullptr);
        j["criterion_values"] = criterion_values_json(f, m);
        std::cout << j.dump() << "\n";
    } else {
        std::cout << format_mat2(m) << " mod " << f.p() << " in " << mat_group_name(group) << ": "
                  << (exists ? "square" : "not a square") << "\n";
        if (want_witness && witness) std::cout << "root: " << format_mat2(*witness) << "\n";
    }
    return exists ? kExitTrue : kExitFalse;
}

// --------------------------------------------------------------- group ----

struct GroupArgs {
    std::string name;
    std::size_t limit = 1000000;
    std::string data_dir = default_data_dir();
    bool json_out = false;
    bool oracle = false;
    bool full = false;
};

/// Independent width check by direct product-set expansion (small groups).
int forward_width(const GroupTable& g, const std::vector<std::uint32_t>& squares,
                  std::size_t subgroup_order) {
    std::vector<bool> cur(g.order(), false);
    std::uint32_t e = g.find(Perm::identity(g.degree()).images().data());
    cur[e] = true;
    std::size_t covered = 1;
    int m = 0;
    std::vector<std::uint8_t> scratch;
    while (covered < subgroup_order) {
        ++m;
        std::vector<bool> next = cur;
        for (std::uint32_t x = 0; x < g.order(); ++x) {
            if (!cur[x]) continue;
            for (std::uint32_t s : squares) {
                std::uint32_t y = g.compose_index(x, s, scratch);
                if (!next[y]) {
                    next[y] = true;
                    ++covered;
                }
            }
        }
        cur = std::move(next);
        if (m > 64) throw std::logic_error("forward_width: no convergence");
    }
    return m;
}

int cmd_group_width(const GroupArgs& a) {
    auto t0 = std::chrono::steady_clock::now();
    BuiltinGroup bg = builtin_group(a.name, a.data_dir);
    GroupTable g = GroupTable::enumerate(bg.generators, a.limit);
    if (g.order() != bg.order)
        throw std::runtime_error("enumerated order " + std::to_string(g.order()) +
                                 " does not match documented order " + std::to_string(bg.order));
    WidthReport rep = width_by_squares(g);
    if (a.oracle) {
        if (g.order() > 10000) {
            std::cerr << "--oracle needs |G| <= 10000\n";
            return kExitUsage;
        }
        std::vector<std::uint32_t> squares = squares_set(g);
        int fw = forward_width(g, squares, rep.squares_subgroup);
        if (fw != rep.width)
            return oracle_failure("product-set width " + std::to_string(fw) +
                                  " != BFS width " + std::to_string(rep.width));
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    if (a.json_out) {
        json j;
        j["schema"] = 1;
        j["name"] = bg.name;
        j["order"] = rep.order;
        j["squares_order"] = rep.squares_subgroup;
        j["generates"] = rep.generates;
        j["width"] = rep.width;
        j["diameter"] = rep.diameter ? json(*rep.diameter) : json(nullptr);
        j["runtime_ms"] = ms;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << bg.name << ": order " << rep.order << ", |S(G)| = " << rep.squares_count
                  << ", |<S(G)>| = " << rep.squares_subgroup
                  << ", generates = " << (rep.generates ? "true" : "false")
                  << ", width = " << rep.width << ", diameter = "
                  << (rep.diameter ? std::to_string(*rep.diameter) : std::string("inf")) << " ("
                  << ms << " ms)\n";
    }
    return rep.generates ? kExitTrue : kExitFalse;
}

int cmd_group_squares(const GroupArgs& a) {
    BuiltinGroup bg = builtin_group(a.name, a.data_dir);
    GroupTable g = GroupTable::enumerate(bg.generators, a.limit);
    if (g.order() != bg.order)
        throw std::runtime_error("enumerated order does not match documented order");
    std::vector<std::uint32_t> squares = squares_set(g);
    std::size_t subgroup_order = 0;
    detail::subgroup_closure(g, squares, subgroup_order);
    bool list = a.full || squares.size() <= 64;
    std::vector<std::string> elems;
    if (list) {
        for (std::uint32_t s : squares) elems.push_back(g.element(s).to_cycle_string());
        std::sort(elems.begin(), elems.end());
    }
    if (a.json_out) {
        json j;
        j["schema"] = 1;
        j["name"] = bg.name;
        j["order"] = g.order();
        j["squares_count"] = squares.size();
        j["subgroup_order"] = subgroup_order;
        j["elements"] = list ? json(elems) : json(nullptr);
        std::cout << j.dump() << "\n";
    } else {
        std::cout << bg.name << ": |S(G)| = " << squares.size() << " of " << g.order()
                  << ", |<S(G)>| = " << subgroup_order << "\n";
        if (list)
            for (const auto& e : elems) std::cout << "  " << e << "\n";
    }
    return kExitTrue;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"squares and square roots in permutation and 2x2 matrix groups"};
    app.require_subcommand(1);

    PermArgs pa;
    MatArgs ma;
    GroupArgs ga;
    int action = 0;  // dispatcher index set by the chosen subcommand

    CLI::App* perm = app.add_subcommand("perm", "permutation squareness and roots");
    perm->require_subcommand(1);
    auto add_perm_common = [&](CLI::App* cmd) {
        cmd->add_option("perm", pa.text, "permutation in cycle notation, e.g. \"(1,2,3)(4,5)\"")
            ->required();
        cmd->add_option("--degree", pa.degree, "degree n (default: largest moved point)");
        cmd->add_flag("--json", pa.json_out, "emit JSON");
        cmd->add_flag("--oracle", pa.oracle, "cross-check against brute force");
    };
    CLI::App* p_issq = perm->add_subcommand("is-square", "decide squareness");
    add_perm_common(p_issq);
    p_issq->add_option("--group", pa.group, "ambient group: an or sn")
        ->check(CLI::IsMember({"an", "sn"}));
    p_issq->callback([&] { action = 1; });
    CLI::App* p_sqrt = perm->add_subcommand("sqrt", "construct a square root");
    add_perm_common(p_sqrt);
    p_sqrt->add_option("--group", pa.group, "ambient group: an or sn")
        ->check(CLI::IsMember({"an", "sn"}));
    p_sqrt->callback([&] { action = 2; });
    CLI::App* p_roots = perm->add_subcommand("roots", "enumerate all square roots");
    add_perm_common(p_roots);
    p_roots->add_option("--mode", pa.mode, "constructive or brute-force")
        ->check(CLI::IsMember({"constructive", "brute-force"}));
    p_roots->callback([&] { action = 3; });
    CLI::App* p_dec = perm->add_subcommand("decompose2", "write an even permutation as h^2 t^2");
    add_perm_common(p_dec);
    p_dec->add_option("--shift", pa.shift, "index into the joint-cycle family");
    p_dec->callback([&] { action = 4; });

    CLI::App* mat = app.add_subcommand("mat", "2x2 matrices over F_p");
    mat->require_subcommand(1);
    auto add_mat_common = [&](CLI::App* cmd, bool with_group) {
        cmd->add_option("matrix", ma.text, "matrix, e.g. \"[[1,1],[0,1]]\" or \"... mod p\"")
            ->required();
        cmd->add_option("--prime", ma.prime, "prime modulus");
        if (with_group)
            cmd->add_option("--group", ma.group, "gl2, sl2 or psl2")
                ->check(CLI::IsMember({"gl2", "sl2", "psl2"}));
        cmd->add_flag("--json", ma.json_out, "emit JSON");
        cmd->add_flag("--oracle", ma.oracle, "cross-check against brute force");
    };
    CLI::App* m_cls = mat->add_subcommand("classify", "spectral classification");
    add_mat_common(m_cls, false);
    m_cls->callback([&] { action = 5; });
    CLI::App* m_issq = mat->add_subcommand("is-square", "decide squareness");
    add_mat_common(m_issq, true);
    m_issq->callback([&] { action = 6; });
    CLI::App* m_sqrt = mat->add_subcommand("sqrt", "construct a square root");
    add_mat_common(m_sqrt, true);
    m_sqrt->callback([&] { action = 7; });

    CLI::App* grp = app.add_subcommand("group", "verbal width over the square set");
    grp->require_subcommand(1);
    auto add_group_common = [&](CLI::App* cmd) {
        cmd->add_option("name", ga.name, "builtin group name (A4..A10, S3..S10, M8..M23)")
            ->required();
        cmd->add_option("--limit", ga.limit, "element limit for enumeration");
        cmd->add_option("--data-dir", ga.data_dir, "directory with generator files");
        cmd->add_flag("--json", ga.json_out, "emit JSON");
    };
    CLI::App* g_width = grp->add_subcommand("width", "width and diameter by squares");
    add_group_common(g_width);
    g_width->add_flag("--oracle", ga.oracle, "re-derive the width by product-set expansion");
    g_width->callback([&] { action = 8; });
    CLI::App* g_squares = grp->add_subcommand("squares", "the set of squares S(G)");
    add_group_common(g_squares);
    g_squares->add_flag("--full", ga.full, "list all elements of S(G)");
    g_squares->callback([&] { action = 9; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        switch (action) {
            case 1: return cmd_perm_root(pa, false);
            case 2: return cmd_perm_root(pa, true);
            case 3: return cmd_perm_roots(pa);
            case 4: return cmd_perm_decompose2(pa);
            case 5: return cmd_mat_classify(ma);
            case 6: return cmd_mat_root(ma, false);
            case 7: return cmd_mat_root(ma, true);
            case 8: return cmd_group_width(ga);
            case 9: return cmd_group_squares(ga);
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
