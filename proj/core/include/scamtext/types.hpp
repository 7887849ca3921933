#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

namespace scamtext {

enum class Label : std::uint8_t { not_scam = 0, scam = 1 };
enum class Lang : std::uint8_t { en = 0, pcm = 1 };
enum class NgramOrder : std::uint8_t { unigram = 1, bigram = 2 };
enum class SubDataset : std::uint8_t { A = 0, B = 1, C = 2, D = 3 };

std::string_view to_string(Label label) noexcept;
std::string_view to_string(Lang lang) noexcept;
std::string_view to_string(SubDataset sd) noexcept;

std::optional<Label> parse_label(std::string_view s) noexcept;
std::optional<Lang> parse_lang(std::string_view s) noexcept;
std::optional<SubDataset> parse_subdataset(std::string_view s) noexcept;

constexpr int as_int(NgramOrder order) noexcept { return static_cast<int>(order); }

}  // namespace scamtext
