#pragma once

#include <algorithm>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pdsort/diagram.hpp"

namespace pdsort {

// Sequence of pairwise distinct positive integers. A word whose letters are
// exactly {1..n} is a permutation in one-line notation.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<int> letters);  // throws DomainError on repeats
  Word(std::initializer_list<int> letters) : Word(std::vector<int>(letters)) {}

  // "231" (single digits) or "2,3,1" / "2 3 1".
  static Word parse(std::string_view text);

  std::span<const int> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  int operator[](std::size_t i) const { return letters_[i]; }

  bool is_permutation() const;
  bool is_increasing() const;

  friend bool operator==(const Word&, const Word&) = default;

  std::string to_string() const;

 private:
  std::vector<int> letters_;
};

Word identity_permutation(int n);

// Blocks {i, p(i)'} for i = 1..n.
PartitionDiagram embed_permutation(const Word& p);

// Calls fn on every permutation of {1..n} in lexicographic order.
template <typename Fn>
void for_each_permutation(int n, Fn&& fn) {
  std::vector<int> p(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i + 1;
  do {
    fn(Word(p));
  } while (std::next_permutation(p.begin(), p.end()));
}

}  // namespace pdsort
