#include "ambt/x3c.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace ambt {

Triple make_triple(std::uint32_t a, std::uint32_t b, std::uint32_t c) {
    Triple t{a, b, c};
    std::sort(t.begin(), t.end());
    if (t[0] == t[1] || t[1] == t[2]) throw std::invalid_argument("triple elements must be distinct");
    return t;
}

void X3CFamily::validate() const {
    if (universe == 0 || universe % 3 != 0)
        throw std::invalid_argument("universe size must be a positive multiple of 3, got " + std::to_string(universe));
    if (instances.empty()) throw std::invalid_argument("family has no instances");
    std::set<std::vector<Triple>> seen;
    for (std::size_t i = 0; i < instances.size(); ++i) {
        std::vector<Triple> sorted = instances[i].sets;
        for (const Triple& t : sorted) {
            if (!(t[0] < t[1] && t[1] < t[2])) throw std::invalid_argument("instance " + std::to_string(i + 1) + ": triple not strictly ascending");
            if (t[0] < 1 || t[2] > universe) throw std::invalid_argument("instance " + std::to_string(i + 1) + ": element outside [1, n]");
        }
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw std::invalid_argument("instance " + std::to_string(i + 1) + ": repeated triple");
        if (!seen.insert(sorted).second) throw std::invalid_argument("instance " + std::to_string(i + 1) + " repeats an earlier instance");
    }
}

std::vector<Triple> X3CFamily::union_sets() const {
    std::vector<Triple> all;
    for (const auto& inst : instances) all.insert(all.end(), inst.sets.begin(), inst.sets.end());
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    return all;
}

X3CFamily random_x3c_family(std::uint32_t universe, std::size_t t, std::size_t m, bool plant, Rng& rng) {
    if (universe == 0 || universe % 3 != 0) throw std::invalid_argument("universe size must be a positive multiple of 3");
    if (t == 0) throw std::invalid_argument("need at least one instance");
    const std::uint64_t n = universe;
    const std::uint64_t total = n * (n - 1) * (n - 2) / 6;
    if (m == 0 || m > total) throw std::invalid_argument("sets per instance must be in [1, C(n,3)]");
    if (plant && m < universe / 3) throw std::invalid_argument("a planted cover needs at least n/3 sets");

    auto random_triple = [&] {
        for (;;) {
            auto a = static_cast<std::uint32_t>(rng.below(n) + 1);
            auto b = static_cast<std::uint32_t>(rng.below(n) + 1);
            auto c = static_cast<std::uint32_t>(rng.below(n) + 1);
            if (a != b && b != c && a != c) return make_triple(a, b, c);
        }
    };

    X3CFamily fam;
    fam.universe = universe;
    std::set<std::vector<Triple>> seen;
    std::size_t attempts = 0;
    while (fam.instances.size() < t) {
        if (++attempts > 1000 * t) throw std::invalid_argument("could not draw pairwise different instances");
        std::set<Triple> chosen;
        if (plant && fam.instances.empty()) {
            std::vector<std::uint32_t> perm(universe);
            std::iota(perm.begin(), perm.end(), 1u);
            for (std::size_t i = perm.size(); i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
            for (std::size_t i = 0; i < perm.size(); i += 3) chosen.insert(make_triple(perm[i], perm[i + 1], perm[i + 2]));
        }
        while (chosen.size() < m) chosen.insert(random_triple());
        std::vector<Triple> sets(chosen.begin(), chosen.end());
        if (!seen.insert(sets).second) continue;
        fam.instances.push_back({std::move(sets)});
    }
    return fam;
}

}  // namespace ambt
