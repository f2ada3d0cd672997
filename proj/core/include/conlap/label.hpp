#pragma once

#include <string>
#include <string_view>

namespace conlap {

// Vertex labels are opaque tokens. Integer-looking labels compare
// numerically and sort before everything else; the rest compare as strings.
using Label = std::string;

[[nodiscard]] bool label_less(std::string_view a, std::string_view b) noexcept;

struct LabelLess {
  bool operator()(std::string_view a, std::string_view b) const noexcept {
    return label_less(a, b);
  }
};

// Prefix used to force disjoint vertex sets in joins and unions.
[[nodiscard]] Label tag_label(std::string_view tag, std::string_view label);

// Removes one leading "L:" or "R:" tag, if present.
[[nodiscard]] Label strip_tag(std::string_view label);

}  // namespace conlap
