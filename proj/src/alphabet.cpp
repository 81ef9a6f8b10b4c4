#include "cgflz/alphabet.hpp"

#include <stdexcept>

namespace cgflz {

Alphabet::Alphabet(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.size() < 2) throw std::invalid_argument("alphabet needs at least 2 symbols");
    single_char_ = true;
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        const auto& t = labels_[i];
        if (t.empty()) throw std::invalid_argument("empty alphabet token");
        if (t.size() != 1) single_char_ = false;
        auto [it, fresh] = index_.emplace(t, static_cast<Symbol>(i));
        if (!fresh) throw std::invalid_argument("duplicate alphabet token '" + t + "'");
    }
}

Alphabet Alphabet::indexed(std::size_t size) {
    static const char digits[] = "0123456789abcdefghijklmnopqrstuvwxyz";
    std::vector<std::string> labels;
    labels.reserve(size);
    for (std::size_t i = 0; i < size; ++i) {
        if (size <= 36) labels.emplace_back(1, digits[i]);
        else labels.push_back(std::to_string(i));
    }
    return Alphabet(std::move(labels));
}

std::optional<Symbol> Alphabet::index_of(std::string_view token) const {
    auto it = index_.find(token);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

Alphabet load_alphabet(std::string_view text) {
    std::vector<std::string> labels;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto nl = text.find('\n', start);
        auto line = nl == std::string_view::npos ? text.substr(start)
                                                 : text.substr(start, nl - start);
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.remove_suffix(1);
        while (!line.empty() && line.front() == ' ') line.remove_prefix(1);
        if (!line.empty()) labels.emplace_back(line);
        if (nl == std::string_view::npos) break;
        start = nl + 1;
    }
    return Alphabet(std::move(labels));
}

}  // namespace cgflz
