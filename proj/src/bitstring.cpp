#include "igenum/bitstring.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace igenum {

BinaryString::BinaryString(std::string_view text) : chars_(text) {
  for (char c : chars_) {
    if (c != 'L' && c != 'R') {
      throw std::invalid_argument("binary string may only contain 'L' and 'R': \"" +
                                  std::string(text) + "\"");
    }
  }
}

BinaryString::BinaryString(const std::vector<Symbol>& symbols) {
  chars_.reserve(symbols.size());
  for (Symbol c : symbols) chars_.push_back(to_char(c));
}

BinaryString BinaryString::repeat(Symbol c, std::size_t count) {
  BinaryString s;
  s.chars_.assign(count, to_char(c));
  return s;
}

std::size_t BinaryString::count(Symbol c) const noexcept {
  return static_cast<std::size_t>(std::count(chars_.begin(), chars_.end(), to_char(c)));
}

BinaryString BinaryString::operator+(const BinaryString& other) const {
  BinaryString s;
  s.chars_ = chars_ + other.chars_;
  return s;
}

BinaryString BinaryString::substr(std::size_t pos, std::size_t len) const {
  BinaryString s;
  s.chars_ = chars_.substr(pos, len);
  return s;
}

std::ostream& operator<<(std::ostream& os, const BinaryString& s) {
  return os << s.str();
}

std::vector<int> height_profile(const BinaryString& s) {
  std::vector<int> h(s.size() + 1, 0);
  for (std::size_t i = 0; i < s.size(); ++i) {
    h[i + 1] = h[i] + (s[i] == Symbol::L ? 1 : -1);
  }
  return h;
}

int max_height(const BinaryString& s) {
  const auto h = height_profile(s);
  return *std::max_element(h.begin(), h.end());
}

bool is_balanced(const BinaryString& s) {
  return s.count(Symbol::L) == s.count(Symbol::R);
}

BinaryString reverse_complement(const BinaryString& s) {
  std::vector<Symbol> out;
  out.reserve(s.size());
  for (std::size_t i = s.size(); i-- > 0;) out.push_back(complement(s[i]));
  return BinaryString(out);
}

BinaryString alternate(const BinaryString& s) {
  std::vector<Symbol> out;
  out.reserve(s.size());
  for (std::size_t level = 0; level < s.size(); ++level) {
    out.push_back(s[alternate_position(level, s.size())]);
  }
  return BinaryString(out);
}

BinaryString inverse_alternate(const BinaryString& t) {
  std::vector<Symbol> out(t.size(), Symbol::L);
  for (std::size_t level = 0; level < t.size(); ++level) {
    out[alternate_position(level, t.size())] = t[level];
  }
  return BinaryString(out);
}

bool height_greater(const BinaryString& s, const BinaryString& t) {
  if (s.size() != t.size()) {
    throw std::invalid_argument("height order compares strings of equal length only");
  }
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != t[i]) return s[i] == Symbol::L;
  }
  return false;
}

bool height_greater_equal(const BinaryString& s, const BinaryString& t) {
  return s == t || height_greater(s, t);
}

}  // namespace igenum
