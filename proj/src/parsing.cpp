#include "cgflz/parsing.hpp"

#include <charconv>
#include <map>
#include <stdexcept>

namespace cgflz {

ParsingCheck verify_parsing(const SymbolSequence& x, const Parsing& p) {
    const auto n = x.size();
    if (p.boundaries.empty())
        return n == 0 ? ParsingCheck{}
                      : ParsingCheck{false, "empty parsing does not tile a nonempty sequence"};
    std::size_t prev = 0;
    for (std::size_t i = 0; i < p.boundaries.size(); ++i) {
        auto b = p.boundaries[i];
        if (b <= prev)
            return {false, "boundary " + std::to_string(i + 1) + " not strictly increasing"};
        prev = b;
    }
    if (prev != n)
        return {false, "boundaries cover " + std::to_string(prev) + " of " +
                           std::to_string(n) + " symbols (does not tile)"};
    if (p.distinct) {
        std::map<std::vector<Symbol>, std::size_t> seen;
        auto phrases = split_phrases(x, p);
        for (std::size_t i = 0; i < phrases.size(); ++i) {
            auto [it, fresh] = seen.emplace(phrases[i], i);
            if (!fresh) {
                bool exempt = p.last_incomplete && i + 1 == phrases.size();
                if (!exempt)
                    return {false, "phrase " + std::to_string(i + 1) + " repeats phrase " +
                                       std::to_string(it->second + 1) +
                                       " and is not last-exempt"};
            }
        }
    }
    return {};
}

std::vector<std::vector<Symbol>> split_phrases(const SymbolSequence& x, const Parsing& p) {
    std::vector<std::vector<Symbol>> out;
    out.reserve(p.boundaries.size());
    std::size_t start = 0;
    for (auto b : p.boundaries) {
        out.emplace_back(x.symbols.begin() + static_cast<std::ptrdiff_t>(start),
                         x.symbols.begin() + static_cast<std::ptrdiff_t>(b));
        start = b;
    }
    return out;
}

Parsing load_parsing(std::string_view text, const SymbolSequence& x) {
    Parsing p;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        std::size_t start = i;
        while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start) break;
        std::size_t v = 0;
        auto piece = text.substr(start, i - start);
        auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), v);
        if (ec != std::errc() || ptr != piece.data() + piece.size())
            throw std::invalid_argument("bad boundary token '" + std::string(piece) + "'");
        p.boundaries.push_back(v);
    }
    // The final phrase may legitimately repeat an earlier one (incomplete tail);
    // derive the flag before verifying distinctness of the rest.
    if (p.boundaries.size() >= 2) {
        auto tiling = p;
        tiling.distinct = false;
        if (verify_parsing(x, tiling).ok) {
            auto phrases = split_phrases(x, p);
            for (std::size_t k = 0; k + 1 < phrases.size(); ++k)
                if (phrases[k] == phrases.back()) { p.last_incomplete = true; break; }
        }
    }
    auto check = verify_parsing(x, p);
    if (!check.ok) throw std::invalid_argument("invalid parsing: " + check.violation);
    return p;
}

std::optional<std::size_t> PhraseDictionary::child(std::size_t node, Symbol a) const {
    const auto& ch = nodes_.at(node).children;
    auto it = ch.find(a);
    if (it == ch.end()) return std::nullopt;
    return it->second;
}

std::size_t PhraseDictionary::insert(std::size_t node, Symbol a) {
    auto id = nodes_.size();
    nodes_[node].children.emplace(a, id);
    nodes_.push_back(Node{node, a, {}});
    return id;
}

std::vector<Symbol> PhraseDictionary::phrase(std::size_t node) const {
    std::vector<Symbol> out;
    while (node != 0) {
        out.push_back(nodes_.at(node).sym);
        node = nodes_.at(node).parent;
    }
    return {out.rbegin(), out.rend()};
}

std::optional<std::size_t> PhraseDictionary::find(std::span<const Symbol> w) const {
    std::size_t node = 0;
    for (auto a : w) {
        auto next = child(node, a);
        if (!next) return std::nullopt;
        node = *next;
    }
    return node;
}

}  // namespace cgflz
