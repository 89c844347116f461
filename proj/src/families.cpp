#include "heaplab/families.hpp"

#include <stdexcept>
#include <string>

namespace heaplab {

namespace {

std::vector<std::string> numbered(const std::string& prefix, int count, int from = 1) {
    std::vector<std::string> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) out.push_back(prefix + std::to_string(from + i));
    return out;
}

} // namespace

StructurePtr make_path(int n) {
    if (n < 1) throw std::invalid_argument("path needs at least one piece");
    auto pieces = numbered("", n);
    std::vector<std::pair<std::string, std::string>> conc;
    for (int i = 1; i < n; ++i) conc.emplace_back(pieces[static_cast<std::size_t>(i - 1)], pieces[static_cast<std::size_t>(i)]);
    return make_structure(std::move(pieces), conc);
}

StructurePtr make_complete(int n) {
    if (n < 1) throw std::invalid_argument("complete graph needs at least one piece");
    auto pieces = numbered("", n);
    std::vector<std::pair<std::string, std::string>> conc;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) conc.emplace_back(pieces[static_cast<std::size_t>(i)], pieces[static_cast<std::size_t>(j)]);
    return make_structure(std::move(pieces), conc);
}

StructurePtr make_cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least three pieces");
    auto pieces = numbered("g", n);
    std::vector<std::pair<std::string, std::string>> conc;
    for (int i = 0; i < n; ++i) conc.emplace_back(pieces[static_cast<std::size_t>(i)], pieces[static_cast<std::size_t>((i + 1) % n)]);
    return make_structure(std::move(pieces), conc);
}

StructurePtr make_star(int leaves) {
    if (leaves < 1) throw std::invalid_argument("star needs at least one leaf");
    std::vector<std::string> pieces{"c"};
    auto xs = numbered("x", leaves);
    pieces.insert(pieces.end(), xs.begin(), xs.end());
    std::vector<std::pair<std::string, std::string>> conc;
    for (const auto& x : xs) conc.emplace_back("c", x);
    return make_structure(std::move(pieces), conc);
}

StructurePtr make_gamma(int p, int q, int r) {
    if (p < 1 || q < 1 || r < 1) throw std::invalid_argument("gamma arms must be nonempty");
    std::vector<std::string> pieces{"c"};
    std::vector<std::pair<std::string, std::string>> conc;
    const std::pair<std::string, int> arms[] = {{"a", p}, {"b", q}, {"d", r}};
    for (const auto& [prefix, len] : arms) {
        auto arm = numbered(prefix, len);
        conc.emplace_back("c", arm.front());
        for (int i = 1; i < len; ++i) conc.emplace_back(arm[static_cast<std::size_t>(i - 1)], arm[static_cast<std::size_t>(i)]);
        pieces.insert(pieces.end(), arm.begin(), arm.end());
    }
    return make_structure(std::move(pieces), conc);
}

StructurePtr make_affine_e6() {
    return make_structure({"a", "b", "c", "d", "e", "f", "g"},
                          {{"c", "b"}, {"c", "d"}, {"c", "f"}, {"b", "a"}, {"d", "e"}, {"f", "g"}});
}

StructurePtr make_diamond() {
    return make_structure({"1", "2", "3", "4"},
                          {{"1", "2"}, {"2", "3"}, {"3", "4"}, {"4", "1"}, {"2", "4"}});
}

StructurePtr make_paw() {
    return make_structure({"5", "6", "7", "8"}, {{"6", "7"}, {"7", "8"}, {"8", "6"}, {"5", "6"}});
}

} // namespace heaplab
