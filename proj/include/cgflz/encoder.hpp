#ifndef CGFLZ_ENCODER_HPP
#define CGFLZ_ENCODER_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cgflz/sequence.hpp"

namespace cgflz {

/// One transition: emitted binary word (possibly empty) and successor state.
struct EncoderRow {
    std::string out;        // characters '0'/'1'
    std::size_t next = 0;
};

/// Finite-state encoder table y_i = f(z_i, x_i[, u_i]), z_{i+1} = g(z_i, x_i[, u_i]).
/// Rows are stored row-major over (state, symbol[, side]).
struct EncoderSpec {
    std::size_t states = 0;
    std::size_t alpha = 0;
    std::optional<std::size_t> side_alpha;
    std::vector<EncoderRow> table;

    bool has_side() const { return side_alpha.has_value(); }
    std::size_t side() const { return side_alpha.value_or(1); }

    const EncoderRow& row(std::size_t z, Symbol a, Symbol u = 0) const {
        return table[(z * alpha + a) * side() + u];
    }
    EncoderRow& row(std::size_t z, Symbol a, Symbol u = 0) {
        return table[(z * alpha + a) * side() + u];
    }

    void validate() const;  // throws std::invalid_argument
};

/// Text config: "states N", "alphabet N", optional "side_alphabet N", then rows
/// "state, symbol[, side] -> bits, next_state" (bits may be empty). '#' comments.
EncoderSpec parse_encoder_spec(std::string_view text);
std::string format_encoder_spec(const EncoderSpec& spec);

struct EncoderRun {
    std::vector<std::size_t> states;       // z_1 .. z_{n+1}
    std::vector<std::string> outputs;      // y_1 .. y_n as 0/1 words
    std::vector<std::uint64_t> lengths;    // |y_i|
    std::uint64_t total_bits = 0;
};

/// Runs the table from z1. A side-input table requires `side` of equal length;
/// a plain table requires side == nullptr.
EncoderRun run_encoder(const EncoderSpec& spec, const SymbolSequence& x, std::size_t z1,
                       const SymbolSequence* side = nullptr);

std::uint64_t min_length_over_states(const EncoderSpec& spec, const SymbolSequence& x,
                                     const SymbolSequence* side = nullptr);

/// Bounded-depth information-losslessness certificate. Certified means: over
/// all inputs of length <= depth from every start state (and, with side info,
/// for each fixed side word), the triple (start state, concatenated output
/// bits, final state) determines the input. Inputs of different lengths may
/// collide too — an encoder whose output stream cannot be told apart across
/// lengths is lossy. On refutation the two witnesses may differ in length;
/// refuted_length is the length of the later-found witness.
struct IlCheck {
    bool certified = false;
    std::size_t depth = 0;
    // populated on refutation:
    std::size_t z1 = 0;
    std::size_t refuted_length = 0;
    std::vector<Symbol> witness_a, witness_b, witness_side;
};

IlCheck check_il(const EncoderSpec& spec, std::size_t depth);

/// Lexicographic enumeration of all side-free tables with states in 1..max_states,
/// the given alphabet, output words up to max_output_len bits (word order:
/// by length then value), yielding exactly those certified at `depth`.
void enumerate_small_il_encoders(std::size_t max_states, std::size_t alpha,
                                 std::size_t max_output_len, std::size_t depth,
                                 const std::function<void(const EncoderSpec&)>& yield);

std::vector<EncoderSpec> enumerate_small_il_encoders(std::size_t max_states,
                                                     std::size_t alpha,
                                                     std::size_t max_output_len,
                                                     std::size_t depth);

}  // namespace cgflz

#endif
