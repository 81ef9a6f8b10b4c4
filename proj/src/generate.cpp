#include "cgflz/generate.hpp"

#include <stdexcept>
#include <string>

namespace cgflz {

GenKind parse_gen_kind(std::string_view name) {
    if (name == "uniform") return GenKind::UniformRandom;
    if (name == "markov") return GenKind::Markov;
    if (name == "periodic") return GenKind::Periodic;
    if (name == "constant") return GenKind::Constant;
    throw std::invalid_argument("unknown generator kind '" + std::string(name) +
                                "' (expected uniform|markov|periodic|constant)");
}

const char* gen_kind_name(GenKind kind) {
    switch (kind) {
        case GenKind::UniformRandom: return "uniform";
        case GenKind::Markov: return "markov";
        case GenKind::Periodic: return "periodic";
        case GenKind::Constant: return "constant";
    }
    return "?";
}

SymbolSequence generate_sequence(GenKind kind, std::size_t n, std::size_t alpha,
                                 std::uint64_t seed, double persistence) {
    if (n == 0) throw std::invalid_argument("sequence length must be positive");
    if (alpha < 2) throw std::invalid_argument("alphabet size must be at least 2");
    if (persistence < 0.0 || persistence > 1.0)
        throw std::invalid_argument("persistence must lie in [0, 1]");

    SymbolSequence x{Alphabet::indexed(alpha), {}};
    x.symbols.reserve(n);
    Rng rng(seed);
    switch (kind) {
        case GenKind::UniformRandom:
            for (std::size_t t = 0; t < n; ++t)
                x.symbols.push_back(static_cast<Symbol>(rng.below(alpha)));
            break;
        case GenKind::Markov: {
            Symbol state = static_cast<Symbol>(rng.below(alpha));
            x.symbols.push_back(state);
            for (std::size_t t = 1; t < n; ++t) {
                if (rng.unit() >= persistence) {
                    auto step = rng.below(alpha - 1) + 1;  // skip the current state
                    state = static_cast<Symbol>((state + step) % alpha);
                }
                x.symbols.push_back(state);
            }
            break;
        }
        case GenKind::Periodic:
            for (std::size_t t = 0; t < n; ++t)
                x.symbols.push_back(static_cast<Symbol>(t % alpha));
            break;
        case GenKind::Constant:
            x.symbols.assign(n, 0);
            break;
    }
    return x;
}

}  // namespace cgflz
