#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace igenum {

/// One character of the encoding alphabet. The numeric values double as the
/// arc index of a diagram node (L-arc = 0, R-arc = 1).
enum class Symbol : std::uint8_t { L = 0, R = 1 };

constexpr Symbol complement(Symbol c) noexcept {
  return c == Symbol::L ? Symbol::R : Symbol::L;
}

constexpr char to_char(Symbol c) noexcept { return c == Symbol::L ? 'L' : 'R'; }

/// Immutable string over {L, R}.
///
/// Rendered with the characters 'L' and 'R' and no separators. Construction
/// from text rejects any other character.
class BinaryString {
 public:
  BinaryString() = default;
  explicit BinaryString(std::string_view text);
  explicit BinaryString(const std::vector<Symbol>& symbols);

  /// `count` copies of `c`.
  static BinaryString repeat(Symbol c, std::size_t count);

  std::size_t size() const noexcept { return chars_.size(); }
  bool empty() const noexcept { return chars_.empty(); }

  Symbol operator[](std::size_t i) const noexcept {
    return chars_[i] == 'L' ? Symbol::L : Symbol::R;
  }
  Symbol front() const noexcept { return (*this)[0]; }
  Symbol back() const noexcept { return (*this)[size() - 1]; }

  std::size_t count(Symbol c) const noexcept;

  const std::string& str() const noexcept { return chars_; }

  BinaryString operator+(const BinaryString& other) const;
  BinaryString substr(std::size_t pos, std::size_t len = std::string::npos) const;

  friend bool operator==(const BinaryString&, const BinaryString&) = default;
  /// Plain lexicographic order with L < R (the diagram enumeration order).
  friend std::strong_ordering operator<=>(const BinaryString& a,
                                          const BinaryString& b) {
    return a.chars_ <=> b.chars_;
  }

 private:
  std::string chars_;
};

std::ostream& operator<<(std::ostream& os, const BinaryString& s);

/// h_s(0..|s|): running difference of L and R counts.
std::vector<int> height_profile(const BinaryString& s);

/// Maximum of the height profile (0 for the empty string).
int max_height(const BinaryString& s);

/// Final height equals zero.
bool is_balanced(const BinaryString& s);

/// Reversal with every character complemented.
BinaryString reverse_complement(const BinaryString& s);

/// Outside-in reordering c1 cn c2 cn-1 ...
BinaryString alternate(const BinaryString& s);

/// Undoes `alternate`.
BinaryString inverse_alternate(const BinaryString& t);

/// Height order: true iff at the first index where the strings differ, `s`
/// carries L. Throws std::invalid_argument on length mismatch.
bool height_greater(const BinaryString& s, const BinaryString& t);

/// `s` is larger than or equal to `t` in the height order.
bool height_greater_equal(const BinaryString& s, const BinaryString& t);

/// Position of the character read at `level` (0-based) of the alternate
/// order of a string of length `length`.
constexpr std::size_t alternate_position(std::size_t level,
                                         std::size_t length) noexcept {
  return level % 2 == 0 ? level / 2 : length - 1 - level / 2;
}

}  // namespace igenum

template <>
struct std::hash<igenum::BinaryString> {
  std::size_t operator()(const igenum::BinaryString& s) const noexcept {
    return std::hash<std::string>{}(s.str());
  }
};
