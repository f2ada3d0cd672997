#include "conlap/label.hpp"

#include <algorithm>

namespace conlap {
namespace {

bool is_integer(std::string_view s) {
  if (s.empty()) return false;
  std::size_t start = (s.front() == '-') ? 1 : 0;
  if (start == s.size()) return false;
  return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(start), s.end(),
                     [](char c) { return c >= '0' && c <= '9'; });
}

// Compares two decimal integer strings without converting them, so labels of
// any length are ordered correctly.
int compare_integers(std::string_view a, std::string_view b) {
  const bool neg_a = a.front() == '-';
  const bool neg_b = b.front() == '-';
  if (neg_a != neg_b) return neg_a ? -1 : 1;
  if (neg_a) {
    a.remove_prefix(1);
    b.remove_prefix(1);
  }
  auto strip = [](std::string_view s) {
    const auto nz = s.find_first_not_of('0');
    return nz == std::string_view::npos ? std::string_view("0") : s.substr(nz);
  };
  a = strip(a);
  b = strip(b);
  int cmp = 0;
  if (a.size() != b.size()) {
    cmp = a.size() < b.size() ? -1 : 1;
  } else {
    const int c = a.compare(b);
    cmp = (c < 0) ? -1 : (c > 0 ? 1 : 0);
  }
  return neg_a ? -cmp : cmp;
}

}  // namespace

bool label_less(std::string_view a, std::string_view b) noexcept {
  const bool int_a = is_integer(a);
  const bool int_b = is_integer(b);
  if (int_a && int_b) {
    const int c = compare_integers(a, b);
    if (c != 0) return c < 0;
    return a < b;  // "01" vs "1": fall back to a total order
  }
  if (int_a != int_b) return int_a;
  return a < b;
}

Label tag_label(std::string_view tag, std::string_view label) {
  Label out;
  out.reserve(tag.size() + 1 + label.size());
  out.append(tag);
  out.push_back(':');
  out.append(label);
  return out;
}

Label strip_tag(std::string_view label) {
  if (label.size() >= 2 && (label[0] == 'L' || label[0] == 'R') && label[1] == ':') {
    return Label(label.substr(2));
  }
  return Label(label);
}

}  // namespace conlap
