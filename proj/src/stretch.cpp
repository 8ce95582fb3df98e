#include "pdsort/stretch.hpp"

#include <algorithm>
#include <charconv>

#include "pdsort/error.hpp"

namespace pdsort {

SetComposition::SetComposition(std::vector<IndexMask> parts) : parts_(std::move(parts)) {
  IndexMask seen = 0;
  for (IndexMask p : parts_) {
    if (p == 0) throw DomainError("set-composition parts must be nonempty");
    if (seen & p) throw DomainError("set-composition parts must be disjoint");
    seen |= p;
  }
}

SetComposition::SetComposition(std::initializer_list<std::initializer_list<int>> parts) {
  std::vector<IndexMask> masks;
  for (const auto& part : parts) {
    IndexMask m = 0;
    for (int x : part) {
      if (x < 1 || x > kMaxOrder) throw DomainError("set-composition element out of range");
      if (m & index_bit(x)) throw DomainError("repeated element in set-composition part");
      m |= index_bit(x);
    }
    masks.push_back(m);
  }
  *this = SetComposition(std::move(masks));
}

SetComposition SetComposition::parse(std::string_view text) {
  std::vector<IndexMask> parts;
  IndexMask current = 0;
  std::size_t i = 0;
  auto close_part = [&] {
    if (current == 0) throw ParseError("empty set-composition part", i);
    parts.push_back(current);
    current = 0;
  };
  while (i < text.size()) {
    const char c = text[i];
    if (c == ' ' || c == ',') {
      ++i;
    } else if (c == '|') {
      close_part();
      ++i;
    } else {
      int value = 0;
      auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
      if (ec != std::errc{}) throw ParseError("expected integer in set-composition", i);
      if (value < 1 || value > kMaxOrder) throw ParseError("set-composition element out of range", i);
      if (current & index_bit(value)) throw ParseError("repeated element in set-composition part", i);
      current |= index_bit(value);
      i = static_cast<std::size_t>(ptr - text.data());
    }
  }
  if (!parts.empty() || current != 0) close_part();
  return SetComposition(std::move(parts));
}

IndexMask SetComposition::cover() const {
  IndexMask m = 0;
  for (IndexMask p : parts_) m |= p;
  return m;
}

int SetComposition::max_element() const {
  const IndexMask c = cover();
  return c == 0 ? 0 : highest_index(c);
}

std::string SetComposition::to_string() const {
  std::string out;
  for (std::size_t j = 0; j < parts_.size(); ++j) {
    if (j > 0) out += '|';
    const auto xs = indices_of(parts_[j]);
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (i > 0) out += ',';
      out += std::to_string(xs[i]);
    }
  }
  return out;
}

PartitionDiagram delta_k(const std::vector<Block>& partial, int k) {
  IndexMask top_cover = 0;
  IndexMask bottom_cover = 0;
  for (const Block& b : partial) {
    if ((top_cover & b.top) || (bottom_cover & b.bottom)) throw DomainError("delta_k: blocks overlap");
    top_cover |= b.top;
    bottom_cover |= b.bottom;
  }
  if (top_cover != bottom_cover) {
    throw DomainError("delta_k: blocks must cover the same indices on both rows");
  }
  if (top_cover != 0 && highest_index(top_cover) > k) {
    throw DomainError("delta_k: k=" + std::to_string(k) + " is below the largest covered index");
  }
  std::vector<Block> blocks = partial;
  for (int i : indices_of(index_range(1, k) & ~top_cover)) {
    blocks.push_back({index_bit(i), index_bit(i)});
  }
  return PartitionDiagram(k, std::move(blocks));
}

PartitionDiagram stretch_map(const SetComposition& alpha, int k, const PartitionDiagram& d) {
  if (d.order() != alpha.length()) {
    throw DomainError("stretch: diagram order " + std::to_string(d.order()) +
                      " differs from composition length " + std::to_string(alpha.length()));
  }
  if (k < alpha.max_element()) throw DomainError("stretch: k below max of composition");
  std::vector<Block> image;
  image.reserve(d.block_count());
  for (const Block& b : d.blocks()) {
    Block out;
    for (int i : indices_of(b.top)) out.top |= alpha.part(i);
    for (int i : indices_of(b.bottom)) out.bottom |= alpha.part(i);
    image.push_back(out);
  }
  return delta_k(image, k);
}

bool is_stretch_of_identity(const PartitionDiagram& d) {
  const auto blocks = d.blocks();
  return std::all_of(blocks.begin(), blocks.end(),
                     [](const Block& b) { return b.top == b.bottom; });
}

}  // namespace pdsort
