#include "chyp/cake/word.hpp"

#include <algorithm>
#include <cctype>

namespace chyp {

Word::Word(std::vector<int> letters) : letters_(std::move(letters)) {
  for (int l : letters_)
    if (l < 0 || l > 3) throw PreconditionError("word letters must be 0..3");
}

Word Word::parse(std::string_view text) {
  std::vector<int> out;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == 'R' || c == 'r' || std::isspace(static_cast<unsigned char>(c))) continue;
    if (c < '0' || c > '3') throw PreconditionError("bad letter in word: " + std::string(text));
    out.push_back(c - '0');
  }
  return Word(std::move(out));
}

Word Word::prefix(std::size_t n) const {
  if (n > letters_.size()) throw PreconditionError("prefix longer than word");
  return Word({letters_.begin(), letters_.begin() + static_cast<std::ptrdiff_t>(n)});
}

Word Word::inverse() const { return Word({letters_.rbegin(), letters_.rend()}); }

bool Word::antilinear() const { return std::count(letters_.begin(), letters_.end(), 3) % 2 == 1; }

std::string Word::to_string() const {
  if (letters_.empty()) return "1";
  std::string s;
  for (int l : letters_) {
    s += 'R';
    s += static_cast<char>('0' + l);
  }
  return s;
}

Word operator*(const Word& a, const Word& b) {
  std::vector<int> out = a.letters_;
  out.insert(out.end(), b.letters_.begin(), b.letters_.end());
  return Word(std::move(out));
}

Isometry<double> realize_word(const Word& w, const Realization& rz) {
  Isometry<double> out = Isometry<double>::identity();
  for (int l : w.letters()) out = out * rz.generator(l);
  return out;
}

Word cake_prefix(std::size_t i) { return Word::parse(kCakeRelator).prefix(i); }

}  // namespace chyp
