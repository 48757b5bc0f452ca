#pragma once

// Named generator sets: Carmichael generators for A_n, the standard pair for
// S_n, and the Mathieu groups M8..M23 loaded from shipped data files whose
// header documents the expected order (the integrity check for enumeration).

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "gsq/perm.hpp"

namespace gsq {

struct BuiltinGroup {
    std::string name;
    std::size_t order = 0;
    int degree = 0;
    std::vector<Perm> generators;
};

/// Carmichael generating set of A_n: t = (1,2,3) together with
/// (3,4,...,n) for odd n and (1,2)(3,...,n) for even n.
inline std::vector<Perm> alternating_generators(int n) {
    if (n < 4) throw std::invalid_argument("alternating_generators: n >= 4 required");
    std::vector<int> tail;
    for (int i = 3; i <= n; ++i) tail.push_back(i);
    std::vector<std::vector<int>> s_cycles;
    if (n % 2 == 0) s_cycles.push_back({1, 2});
    s_cycles.push_back(tail);
    return {Perm::from_cycles(n, {{1, 2, 3}}), Perm::from_cycles(n, s_cycles)};
}

inline std::vector<Perm> symmetric_generators(int n) {
    if (n < 2) throw std::invalid_argument("symmetric_generators: n >= 2 required");
    std::vector<int> full;
    for (int i = 1; i <= n; ++i) full.push_back(i);
    return {Perm::from_cycles(n, {{1, 2}}), Perm::from_cycles(n, {full})};
}

/// Generator file format: `# name order degree` header, one permutation in
/// cycle notation per line, further `#` lines ignored.
inline BuiltinGroup load_generator_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open generator file: " + path);
    BuiltinGroup group;
    std::string line;
    bool have_header = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            if (!have_header) {
                std::istringstream hs(line.substr(1));
                if (!(hs >> group.name >> group.order >> group.degree))
                    throw std::runtime_error("bad generator file header: " + path);
                have_header = true;
            }
            continue;
        }
        if (!have_header) throw std::runtime_error("generator file missing header: " + path);
        group.generators.push_back(Perm::parse(line, group.degree));
    }
    if (!have_header || group.generators.empty())
        throw std::runtime_error("generator file has no generators: " + path);
    return group;
}

inline std::string default_data_dir() {
    if (const char* env = std::getenv("GSQ_DATA_DIR")) return env;
#ifdef GSQ_DATA_DIR
    return GSQ_DATA_DIR;
#else
    return "data";
#endif
}

inline std::vector<std::string> builtin_group_names(bool include_optional = false) {
    std::vector<std::string> names;
    for (int n = 4; n <= 10; ++n) names.push_back("A" + std::to_string(n));
    for (int n = 3; n <= 10; ++n) names.push_back("S" + std::to_string(n));
    for (int n : {8, 9, 10, 11, 12, 20, 21, 22}) names.push_back("M" + std::to_string(n));
    if (include_optional) names.push_back("M23");
    return names;
}

inline std::size_t factorial(int n) {
    std::size_t r = 1;
    for (int i = 2; i <= n; ++i) r *= static_cast<std::size_t>(i);
    return r;
}

inline BuiltinGroup builtin_group(std::string name, const std::string& data_dir = default_data_dir()) {
    for (char& c : name) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    if (name.size() >= 2 && (name[0] == 'A' || name[0] == 'S')) {
        int n = std::atoi(name.c_str() + 1);
        if (name[0] == 'A' && n >= 4 && n <= 10)
            return {name, factorial(n) / 2, n, alternating_generators(n)};
        if (name[0] == 'S' && n >= 3 && n <= 10)
            return {name, factorial(n), n, symmetric_generators(n)};
    }
    if (name.size() >= 2 && name[0] == 'M') {
        int n = std::atoi(name.c_str() + 1);
        bool known = n == 8 || n == 9 || n == 10 || n == 11 || n == 12 || n == 20 || n == 21 ||
                     n == 22 || n == 23;
        if (known) {
            std::string file = data_dir + "/m" + std::to_string(n) + ".gens";
            BuiltinGroup group = load_generator_file(file);
            if (group.name != name)
                throw std::runtime_error("generator file " + file + " declares group " + group.name);
            return group;
        }
    }
    throw std::invalid_argument("unknown group name: " + name);
}

}  // namespace gsq
