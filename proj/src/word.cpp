#include "pquant/word.hpp"

#include <bit>
#include <string>

#include "pquant/errors.hpp"
#include "pquant/multi_index.hpp"

namespace pquant {

namespace {

void check_index(int i, int n) {
  if (i < 0 || i >= n) {
    throw ArgumentError("exterior index " + std::to_string(i) + " outside [0, " + std::to_string(n) + ")");
  }
}

}  // namespace

Word::Word(int n) : n_(static_cast<std::uint8_t>(n)) { check_dimension(n); }

Word Word::from_indices(int n, const std::vector<int>& indices) {
  Word w(n);
  int last = -1;
  for (int i : indices) {
    check_index(i, n);
    if (i <= last) throw ArgumentError("exterior word must be strictly increasing");
    w.mask_ |= 1U << i;
    last = i;
  }
  return w;
}

Word Word::full(int n) { return from_mask(n, (1U << n) - 1U); }

Word Word::from_mask(int n, std::uint32_t mask) {
  Word w(n);
  if (mask >> n) throw ArgumentError("word mask has bits beyond n");
  w.mask_ = mask;
  return w;
}

int Word::size() const { return std::popcount(mask_); }

std::vector<int> Word::indices() const {
  std::vector<int> out;
  for (int i = 0; i < n_; ++i) {
    if (contains(i)) out.push_back(i);
  }
  return out;
}

int Word::count_below(int i) const { return std::popcount(mask_ & ((1U << i) - 1U)); }

std::optional<SignedWord> wedge_insert(int i, const Word& w) {
  check_index(i, w.dim());
  if (w.contains(i)) return std::nullopt;
  const int sign = (w.count_below(i) % 2 == 0) ? 1 : -1;
  return SignedWord{sign, Word::from_mask(w.dim(), w.mask() | (1U << i))};
}

std::optional<SignedWord> interior_contract(int j, const Word& w) {
  check_index(j, w.dim());
  if (!w.contains(j)) return std::nullopt;
  const int sign = (w.count_below(j) % 2 == 0) ? 1 : -1;
  return SignedWord{sign, Word::from_mask(w.dim(), w.mask() & ~(1U << j))};
}

std::optional<SignedWord> replace_index(const Word& w, int from, int to) {
  auto removed = interior_contract(from, w);
  if (!removed) return std::nullopt;
  auto inserted = wedge_insert(to, removed->word);
  if (!inserted) return std::nullopt;
  return SignedWord{removed->sign * inserted->sign, inserted->word};
}

std::vector<Word> words_of_length(int n, int p) {
  std::vector<Word> out;
  if (p < 0 || p > n) return out;
  for (std::uint32_t m = 0; m < (1U << n); ++m) {
    if (std::popcount(m) != p) continue;
    std::vector<int> idx;
    for (int i = 0; i < n; ++i) {
      if ((m >> i) & 1U) idx.push_back(i);
    }
    out.push_back(Word::from_indices(n, idx));
  }
  return out;
}

}  // namespace pquant
