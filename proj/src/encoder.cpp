#include "cgflz/encoder.hpp"

#include <charconv>
#include <stdexcept>
#include <unordered_map>

namespace cgflz {
namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

std::size_t parse_size(std::string_view s, const char* what) {
    std::size_t v = 0;
    auto t = trim(s);
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc() || ptr != t.data() + t.size())
        throw std::invalid_argument(std::string("bad ") + what + " '" + std::string(t) + "'");
    return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        auto pos = s.find(sep, start);
        if (pos == std::string_view::npos) {
            parts.push_back(s.substr(start));
            return parts;
        }
        parts.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

}  // namespace

void EncoderSpec::validate() const {
    if (states == 0) throw std::invalid_argument("encoder needs at least one state");
    if (alpha < 2) throw std::invalid_argument("alphabet size must be at least 2");
    if (side_alpha && *side_alpha < 2)
        throw std::invalid_argument("side alphabet size must be at least 2");
    if (table.size() != states * alpha * side())
        throw std::invalid_argument("encoder table has " + std::to_string(table.size()) +
                                    " rows, expected " +
                                    std::to_string(states * alpha * side()));
    for (const auto& row : table) {
        if (row.next >= states)
            throw std::invalid_argument("next state " + std::to_string(row.next) +
                                        " out of range");
        for (char c : row.out)
            if (c != '0' && c != '1')
                throw std::invalid_argument("output words must be 0/1 strings");
    }
}

EncoderSpec parse_encoder_spec(std::string_view text) {
    EncoderSpec spec;
    std::vector<bool> defined;
    bool dims_known = false;
    auto ensure_dims = [&] {
        if (dims_known) return;
        if (spec.states == 0 || spec.alpha == 0)
            throw std::invalid_argument("rows before states/alphabet declaration");
        spec.table.assign(spec.states * spec.alpha * spec.side(), EncoderRow{});
        defined.assign(spec.table.size(), false);
        dims_known = true;
    };

    std::size_t line_no = 0, start = 0;
    while (start <= text.size()) {
        auto nl = text.find('\n', start);
        auto raw = nl == std::string_view::npos ? text.substr(start)
                                                : text.substr(start, nl - start);
        ++line_no;
        if (auto hash = raw.find('#'); hash != std::string_view::npos)
            raw = raw.substr(0, hash);
        auto line = trim(raw);
        auto fail = [&](const std::string& msg) {
            throw std::invalid_argument("encoder spec line " + std::to_string(line_no) +
                                        ": " + msg);
        };
        if (!line.empty()) {
            if (line.starts_with("states")) {
                spec.states = parse_size(line.substr(6), "state count");
            } else if (line.starts_with("side_alphabet")) {
                spec.side_alpha = parse_size(line.substr(13), "side alphabet size");
            } else if (line.starts_with("alphabet")) {
                spec.alpha = parse_size(line.substr(8), "alphabet size");
            } else {
                ensure_dims();
                auto arrow = line.find("->");
                if (arrow == std::string_view::npos) fail("missing '->'");
                auto lhs = split(line.substr(0, arrow), ',');
                auto rhs = split(line.substr(arrow + 2), ',');
                std::size_t expected_lhs = spec.has_side() ? 3 : 2;
                if (lhs.size() != expected_lhs)
                    fail("expected 'state, symbol" +
                         std::string(spec.has_side() ? ", side" : "") + "' before '->'");
                if (rhs.size() != 2) fail("expected 'bits, next_state' after '->'");
                std::size_t z = parse_size(lhs[0], "state");
                std::size_t a = parse_size(lhs[1], "symbol");
                std::size_t u = spec.has_side() ? parse_size(lhs[2], "side symbol") : 0;
                if (z >= spec.states) fail("state out of range");
                if (a >= spec.alpha) fail("symbol out of range");
                if (u >= spec.side()) fail("side symbol out of range");
                auto bits = trim(rhs[0]);
                for (char c : bits)
                    if (c != '0' && c != '1') fail("output word must be a 0/1 string");
                std::size_t idx = (z * spec.alpha + a) * spec.side() + u;
                if (defined[idx]) fail("duplicate row");
                defined[idx] = true;
                spec.table[idx] = EncoderRow{std::string(bits),
                                             parse_size(rhs[1], "next state")};
            }
        }
        if (nl == std::string_view::npos) break;
        start = nl + 1;
    }
    ensure_dims();
    for (std::size_t i = 0; i < defined.size(); ++i)
        if (!defined[i])
            throw std::invalid_argument("encoder spec: missing row for cell " +
                                        std::to_string(i));
    spec.validate();
    return spec;
}

std::string format_encoder_spec(const EncoderSpec& spec) {
    std::string out;
    out += "states " + std::to_string(spec.states) + "\n";
    out += "alphabet " + std::to_string(spec.alpha) + "\n";
    if (spec.has_side())
        out += "side_alphabet " + std::to_string(*spec.side_alpha) + "\n";
    for (std::size_t z = 0; z < spec.states; ++z)
        for (Symbol a = 0; a < spec.alpha; ++a)
            for (Symbol u = 0; u < spec.side(); ++u) {
                const auto& row = spec.row(z, a, u);
                out += std::to_string(z) + ", " + std::to_string(a);
                if (spec.has_side()) out += ", " + std::to_string(u);
                out += " -> " + row.out + ", " + std::to_string(row.next) + "\n";
            }
    return out;
}

EncoderRun run_encoder(const EncoderSpec& spec, const SymbolSequence& x, std::size_t z1,
                       const SymbolSequence* side) {
    if (z1 >= spec.states) throw std::invalid_argument("start state out of range");
    if (spec.has_side() != (side != nullptr))
        throw std::invalid_argument(spec.has_side() ? "encoder requires side information"
                                                    : "encoder takes no side information");
    if (side && side->size() != x.size())
        throw std::invalid_argument("side information length mismatch");
    if (x.alpha() > spec.alpha)
        throw std::invalid_argument("sequence alphabet exceeds encoder alphabet");

    EncoderRun run;
    run.states.reserve(x.size() + 1);
    run.states.push_back(z1);
    std::size_t z = z1;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const auto& row = spec.row(z, x.symbols[i], side ? side->symbols[i] : 0);
        run.outputs.push_back(row.out);
        run.lengths.push_back(row.out.size());
        run.total_bits += row.out.size();
        z = row.next;
        run.states.push_back(z);
    }
    return run;
}

std::uint64_t min_length_over_states(const EncoderSpec& spec, const SymbolSequence& x,
                                     const SymbolSequence* side) {
    std::uint64_t best = ~std::uint64_t{0};
    for (std::size_t z1 = 0; z1 < spec.states; ++z1) {
        auto total = run_encoder(spec, x, z1, side).total_bits;
        if (total < best) best = total;
    }
    return best;
}

namespace {

/// DFS trace state for the bounded-depth IL certificate. Decodability rests on
/// the concatenated output stream: two inputs collide when the start state,
/// the emitted bits run together, and the final state all agree — word
/// boundaries carry no information. Inputs of different lengths compete in the
/// same pool (an encoder that maps both to the same triple is lossy), except
/// that side-input tables key on the side word as well, and differing lengths
/// there imply differing side words.
struct IlSearch {
    const EncoderSpec& spec;
    std::size_t depth;
    std::unordered_map<std::string, std::vector<Symbol>> seen;
    std::string bits, sides;
    std::vector<Symbol> xs, us;
    IlCheck* result;

    IlSearch(const EncoderSpec& s, std::size_t d, IlCheck* r)
        : spec(s), depth(d), result(r) {}

    bool dfs(std::size_t z, std::size_t z1) {
        if (xs.size() == depth) return true;
        for (Symbol a = 0; a < spec.alpha; ++a) {
            for (Symbol u = 0; u < spec.side(); ++u) {
                const auto& row = spec.row(z, a, u);
                auto bits_len = bits.size();
                bits += row.out;
                if (spec.has_side()) sides += static_cast<char>('a' + u);
                xs.push_back(a);
                if (spec.has_side()) us.push_back(u);

                auto key = bits + '#' + sides + '@' + static_cast<char>('0' + row.next);
                auto [it, fresh] = seen.try_emplace(std::move(key), xs);
                if (!fresh && it->second != xs) {
                    result->certified = false;
                    result->z1 = z1;
                    result->refuted_length = xs.size();
                    result->witness_a = it->second;
                    result->witness_b = xs;
                    result->witness_side = us;
                    return false;
                }
                if (!dfs(row.next, z1)) return false;

                xs.pop_back();
                if (spec.has_side()) us.pop_back();
                if (spec.has_side()) sides.pop_back();
                bits.resize(bits_len);
            }
        }
        return true;
    }
};

}  // namespace

IlCheck check_il(const EncoderSpec& spec, std::size_t depth) {
    spec.validate();
    IlCheck result;
    result.certified = true;
    result.depth = depth;
    for (std::size_t z1 = 0; z1 < spec.states; ++z1) {
        IlSearch search(spec, depth, &result);
        if (!search.dfs(z1, z1)) return result;
    }
    return result;
}

void enumerate_small_il_encoders(std::size_t max_states, std::size_t alpha,
                                 std::size_t max_output_len, std::size_t depth,
                                 const std::function<void(const EncoderSpec&)>& yield) {
    if (alpha < 2) throw std::invalid_argument("alphabet size must be at least 2");
    // Output words ordered by length then value: "", "0", "1", "00", ...
    std::vector<std::string> words{""};
    for (std::size_t len = 1; len <= max_output_len; ++len)
        for (std::uint64_t v = 0; v < (std::uint64_t{1} << len); ++v) {
            std::string w(len, '0');
            for (std::size_t b = 0; b < len; ++b)
                if ((v >> (len - 1 - b)) & 1) w[b] = '1';
            words.push_back(std::move(w));
        }

    for (std::size_t s = 1; s <= max_states; ++s) {
        const std::size_t cells = s * alpha;
        const std::size_t options = words.size() * s;  // word-major, next-state-minor
        std::vector<std::size_t> counter(cells, 0);
        EncoderSpec spec;
        spec.states = s;
        spec.alpha = alpha;
        spec.table.assign(cells, EncoderRow{});
        while (true) {
            for (std::size_t ci = 0; ci < cells; ++ci) {
                spec.table[ci].out = words[counter[ci] / s];
                spec.table[ci].next = counter[ci] % s;
            }
            if (check_il(spec, depth).certified) yield(spec);
            std::size_t ci = cells;
            while (ci > 0) {
                --ci;
                if (++counter[ci] < options) break;
                counter[ci] = 0;
                if (ci == 0) { ci = cells + 1; break; }
            }
            if (ci == cells + 1) break;
        }
    }
}

std::vector<EncoderSpec> enumerate_small_il_encoders(std::size_t max_states,
                                                     std::size_t alpha,
                                                     std::size_t max_output_len,
                                                     std::size_t depth) {
    std::vector<EncoderSpec> out;
    enumerate_small_il_encoders(max_states, alpha, max_output_len, depth,
                                [&](const EncoderSpec& spec) { out.push_back(spec); });
    return out;
}

}  // namespace cgflz
