#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

namespace pquant {

/// Strictly increasing tuple of exterior indices, stored as a bit set.
/// The same type labels contravariant words v_w and covariant words dx^w.
class Word {
 public:
  Word() = default;
  explicit Word(int n);
  /// 0-based, strictly increasing indices; throws ArgumentError otherwise.
  static Word from_indices(int n, const std::vector<int>& indices);
  static Word full(int n);
  static Word from_mask(int n, std::uint32_t mask);

  int dim() const { return n_; }
  int size() const;
  bool contains(int i) const { return (mask_ >> i) & 1U; }
  std::uint32_t mask() const { return mask_; }
  std::vector<int> indices() const;
  /// Number of entries strictly smaller than i.
  int count_below(int i) const;

  friend auto operator<=>(const Word&, const Word&) = default;
  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::uint32_t mask_ = 0;
  std::uint8_t n_ = 0;
};

struct SignedWord {
  int sign;
  Word word;
};

/// e_i wedge w, normalized: i is prepended then moved into sorted position.
/// Empty when i already occurs in w.
std::optional<SignedWord> wedge_insert(int i, const Word& w);

/// Interior product by the i-th dual basis vector: removes j with sign
/// (-1)^(t-1), t the 1-based position of j. Empty when j is absent.
std::optional<SignedWord> interior_contract(int j, const Word& w);

/// e_to wedge i_from(w): the slot holding `from` is overwritten with `to`.
std::optional<SignedWord> replace_index(const Word& w, int from, int to);

/// All words of length p over {0..n-1}, increasing mask order.
std::vector<Word> words_of_length(int n, int p);

}  // namespace pquant
