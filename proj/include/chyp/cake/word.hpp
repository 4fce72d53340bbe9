#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "chyp/construction/mirror.hpp"

namespace chyp {

// A word in the generators R0..R3, read as a composition from left to right:
// "R3R1" is the map v -> R3(R1(v)).
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<int> letters);

  // Accepts "R3R1R2", "312", or "" for the empty word.
  static Word parse(std::string_view text);

  const std::vector<int>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  Word prefix(std::size_t n) const;
  // Every generator is an involution, so the inverse is the reversed word.
  Word inverse() const;
  // Number of antilinear letters mod 2.
  bool antilinear() const;
  std::string to_string() const;

  friend Word operator*(const Word& a, const Word& b);
  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<int> letters_;
};

Isometry<double> realize_word(const Word& w, const Realization& rz);

// R3R1R2R3R2R1 twice; its prefixes are the words W_0 .. W_12.
inline constexpr std::string_view kCakeRelator = "312321312321";

Word cake_prefix(std::size_t i);

}  // namespace chyp
