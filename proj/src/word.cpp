#include "pdsort/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <unordered_set>

#include "pdsort/error.hpp"

namespace pdsort {

Word::Word(std::vector<int> letters) : letters_(std::move(letters)) {
  std::unordered_set<int> seen;
  for (int x : letters_) {
    if (x < 1) throw DomainError("word letters must be positive");
    if (!seen.insert(x).second) {
      throw DomainError("repeated letter " + std::to_string(x) + " in word");
    }
  }
}

Word Word::parse(std::string_view text) {
  const bool separated = text.find_first_of(", ") != std::string_view::npos;
  std::vector<int> letters;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw ParseError("unexpected character in word", i);
    }
    if (!separated) {
      letters.push_back(c - '0');
      ++i;
      continue;
    }
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
    if (ec != std::errc{}) throw ParseError("bad integer in word", i);
    letters.push_back(value);
    i = static_cast<std::size_t>(ptr - text.data());
  }
  return Word(std::move(letters));
}

bool Word::is_permutation() const {
  const auto n = static_cast<int>(letters_.size());
  return std::all_of(letters_.begin(), letters_.end(),
                     [n](int x) { return x <= n; });
}

bool Word::is_increasing() const {
  return std::is_sorted(letters_.begin(), letters_.end());
}

std::string Word::to_string() const {
  const bool wide = std::any_of(letters_.begin(), letters_.end(),
                                [](int x) { return x > 9; });
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (wide && i > 0) out += ',';
    out += std::to_string(letters_[i]);
  }
  return out;
}

Word identity_permutation(int n) {
  std::vector<int> letters(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) letters[static_cast<std::size_t>(i)] = i + 1;
  return Word(std::move(letters));
}

PartitionDiagram embed_permutation(const Word& p) {
  if (!p.is_permutation()) {
    throw DomainError("'" + p.to_string() + "' is not a permutation");
  }
  const auto n = static_cast<int>(p.size());
  if (n > kMaxOrder) throw DomainError("permutation too long");
  std::vector<Block> blocks;
  blocks.reserve(p.size());
  for (int i = 1; i <= n; ++i) {
    blocks.push_back({index_bit(i), index_bit(p[static_cast<std::size_t>(i - 1)])});
  }
  return diagram_from_canonical(n, std::move(blocks));
}

}  // namespace pdsort
