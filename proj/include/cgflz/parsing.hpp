#ifndef CGFLZ_PARSING_HPP
#define CGFLZ_PARSING_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cgflz/sequence.hpp"

namespace cgflz {

/// Segmentation of x into consecutive phrases, recorded as cumulative end
/// positions (1-based; the last boundary equals n). `distinct` claims all
/// phrases are pairwise distinct except that a `last_incomplete` final phrase
/// may repeat an earlier one (it ran out of input).
struct Parsing {
    std::vector<std::size_t> boundaries;
    bool distinct = true;
    bool last_incomplete = false;

    std::size_t phrase_count() const { return boundaries.size(); }

    /// Number of pairwise-distinct phrase strings: a repeated final phrase
    /// carries no new string, and converse floors that count distinct source
    /// words must exclude it.
    std::size_t distinct_phrase_count() const {
        return boundaries.size() - (last_incomplete ? 1 : 0);
    }
};

struct ParsingCheck {
    bool ok = true;
    std::string violation;  // empty when ok
};

/// Validates tiling (strictly increasing boundaries covering exactly n) and,
/// when claimed, distinctness with the last-phrase exemption.
ParsingCheck verify_parsing(const SymbolSequence& x, const Parsing& p);

std::vector<std::vector<Symbol>> split_phrases(const SymbolSequence& x, const Parsing& p);

/// Parses whitespace-separated cumulative boundaries, derives last_incomplete,
/// and verifies; throws std::invalid_argument on violation.
Parsing load_parsing(std::string_view text, const SymbolSequence& x);

/// Prefix-closed phrase trie. Node 0 is the root (empty phrase); node i >= 1 is
/// the i-th inserted phrase, so node ids double as 1-based insertion indices.
class PhraseDictionary {
public:
    PhraseDictionary() { nodes_.push_back(Node{0, 0, {}}); }

    /// Number of phrases (root excluded).
    std::size_t size() const { return nodes_.size() - 1; }

    std::optional<std::size_t> child(std::size_t node, Symbol a) const;
    std::size_t insert(std::size_t node, Symbol a);

    std::size_t parent(std::size_t node) const { return nodes_.at(node).parent; }
    Symbol last_symbol(std::size_t node) const { return nodes_.at(node).sym; }
    std::vector<Symbol> phrase(std::size_t node) const;
    std::optional<std::size_t> find(std::span<const Symbol> w) const;

private:
    struct Node {
        std::size_t parent;
        Symbol sym;
        std::map<Symbol, std::size_t> children;
    };
    std::vector<Node> nodes_;
};

}  // namespace cgflz

#endif
