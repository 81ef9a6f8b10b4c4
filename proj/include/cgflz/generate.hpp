#ifndef CGFLZ_GENERATE_HPP
#define CGFLZ_GENERATE_HPP

#include <cstdint>
#include <string_view>

#include "cgflz/rng.hpp"
#include "cgflz/sequence.hpp"

namespace cgflz {

enum class GenKind { UniformRandom, Markov, Periodic, Constant };

GenKind parse_gen_kind(std::string_view name);
const char* gen_kind_name(GenKind kind);

/// Deterministic generator over Alphabet::indexed(alpha). Markov is first-order
/// with stay probability `persistence` (otherwise uniform over the remaining
/// symbols); Periodic cycles 0,1,...,alpha-1; Constant is all zeros.
SymbolSequence generate_sequence(GenKind kind, std::size_t n, std::size_t alpha,
                                 std::uint64_t seed, double persistence = 0.9);

}  // namespace cgflz

#endif
