#ifndef CGFLZ_ERRORS_HPP
#define CGFLZ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cgflz {

/// Raised when a serialized stream cannot be decoded.
class DecodeError : public std::runtime_error {
public:
    enum class Kind { Truncated, BadHeader, IndexOutOfRange, Corrupt };

    DecodeError(Kind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

/// Raised when an input token is not in the declared alphabet.
class UnknownSymbolError : public std::invalid_argument {
public:
    UnknownSymbolError(const std::string& token, std::size_t position)
        : std::invalid_argument("unknown symbol '" + token + "' at position " +
                                std::to_string(position)),
          token_(token), position_(position) {}

    const std::string& token() const { return token_; }
    std::size_t position() const { return position_; }

private:
    std::string token_;
    std::size_t position_;
};

/// Raised when a block operation needs ell | n and the caller did not truncate.
class DivisibilityError : public std::invalid_argument {
public:
    DivisibilityError(std::size_t n, std::size_t ell)
        : std::invalid_argument("block length " + std::to_string(ell) +
                                " does not divide sequence length " + std::to_string(n)) {}
};

}  // namespace cgflz

#endif
