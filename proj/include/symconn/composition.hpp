#pragma once

#include <algorithm>
#include <compare>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "symconn/rational.hpp"

namespace symconn {

/// An ordered tuple of positive integers summing to n. Indexes the face
/// W_c^lambda = {x_1 = .. = x_{lambda_1} <= x_{lambda_1+1} = .. } of the
/// canonical Weyl chamber; the face has dimension length().
class Composition {
 public:
  explicit Composition(std::vector<int> parts);

  /// Builds the composition of n whose cumulative sums (excluding n) are `breaks`.
  static Composition from_breaks(int n, const std::vector<int>& breaks);
  /// The composition (1,..,1,2,1,..,1) labelling the wall x_i = x_{i+1} (1-based i).
  static Composition wall(int n, int i);
  static Composition ones(int n) { return Composition(std::vector<int>(static_cast<size_t>(n), 1)); }

  int n() const { return n_; }
  int length() const { return static_cast<int>(parts_.size()); }
  const std::vector<int>& parts() const { return parts_; }
  int operator[](size_t k) const { return parts_[k]; }

  /// Cumulative sums lambda_1, lambda_1 + lambda_2, ... excluding n itself.
  std::vector<int> breaks() const;
  /// 0-based index of the first coordinate of every block.
  std::vector<int> block_starts() const;
  /// Block containing the 0-based coordinate `position`.
  int block_of(int position) const;

  std::string to_string() const;

  friend bool operator==(const Composition&, const Composition&) = default;
  friend auto operator<=>(const Composition& a, const Composition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

/// Which positions of a CompMax composition are pinned to 1. In the
/// increasing chamber the minimizer of p_{d+1} on a fiber sits on a Minimizer
/// face and the maximizer on a Mirrored face; Definition agrees with
/// Minimizer for even d and with Mirrored for odd d.
enum class CompMaxPattern {
  Definition,  ///< odd positions from the left: lambda_1 = lambda_3 = .. = 1
  Mirrored,    ///< counted from the right: lambda_d = lambda_{d-2} = .. = 1
  Minimizer,   ///< lambda_{d-1} = lambda_{d-3} = .. = 1
};

std::string to_string(CompMaxPattern pattern);
CompMaxPattern parse_pattern(const std::string& text);

/// All compositions of n into exactly `length` parts, lexicographic.
std::vector<Composition> enumerate_compositions(int n, int length);
/// All compositions of n, grouped by length then lexicographic.
std::vector<Composition> enumerate_compositions(int n);

/// Alternate odd compositions of n into d parts.
std::vector<Composition> enumerate_compmax(int n, int d, CompMaxPattern pattern = CompMaxPattern::Definition);

/// Smallest composition above both (common breaks).
Composition join(const Composition& a, const Composition& b);
/// a "precedes" b: b's breaks are a subset of a's, i.e. W^a contains W^b.
bool precedes(const Composition& a, const Composition& b);

/// Merges the blocks holding coordinates i and i+1 (1-based wall index).
Composition res(const Composition& lambda, int i);

/// Adjacent transpositions s_i = (i, i+1), 1-based, in application order.
struct PermutationWord {
  std::vector<int> transpositions;

  size_t size() const { return transpositions.size(); }
  bool empty() const { return transpositions.empty(); }
  friend bool operator==(const PermutationWord&, const PermutationWord&) = default;
};

template <class T>
struct SortedWithWord {
  PermutationWord word;
  std::vector<T> sorted;
};

/// Maximal pattern of consecutive equal coordinates.
template <class T>
Composition multiplicity_composition(std::span<const T> x) {
  if (x.empty()) throw DomainError("multiplicity_composition: empty vector");
  std::vector<int> parts{1};
  for (size_t i = 1; i < x.size(); ++i) {
    if (x[i] == x[i - 1])
      ++parts.back();
    else
      parts.push_back(1);
  }
  return Composition(std::move(parts));
}

template <class T>
Composition multiplicity_composition(const std::vector<T>& x) {
  return multiplicity_composition(std::span<const T>(x));
}

/// Bubble sort recording every swap; strict comparison so equal entries never move.
template <class T>
SortedWithWord<T> minimal_adjacent_transpositions(std::vector<T> x) {
  SortedWithWord<T> out;
  const size_t n = x.size();
  for (size_t i = 1; i + 1 <= n; ++i) {
    for (size_t j = 0; j + i < n; ++j) {
      if (x[j] > x[j + 1]) {
        std::swap(x[j], x[j + 1]);
        out.word.transpositions.push_back(static_cast<int>(j) + 1);
      }
    }
  }
  out.sorted = std::move(x);
  return out;
}

/// Applies the word's transpositions in order (s_i swaps positions i, i+1).
template <class T>
std::vector<T> apply_word(const PermutationWord& word, std::vector<T> x) {
  for (int i : word.transpositions) {
    if (i < 1 || static_cast<size_t>(i) >= x.size()) throw DomainError("apply_word: index out of range");
    std::swap(x[static_cast<size_t>(i) - 1], x[static_cast<size_t>(i)]);
  }
  return x;
}

/// Block expansion: z_k repeated lambda_k times.
template <class T>
std::vector<T> embed(const Composition& lambda, std::span<const T> z) {
  if (static_cast<int>(z.size()) != lambda.length())
    throw DomainError("embed: expected " + std::to_string(lambda.length()) + " coordinates, got " +
                      std::to_string(z.size()));
  std::vector<T> x;
  x.reserve(static_cast<size_t>(lambda.n()));
  for (int k = 0; k < lambda.length(); ++k)
    for (int r = 0; r < lambda[static_cast<size_t>(k)]; ++r) x.push_back(z[static_cast<size_t>(k)]);
  return x;
}

template <class T>
std::vector<T> embed(const Composition& lambda, const std::vector<T>& z) {
  return embed(lambda, std::span<const T>(z));
}

/// Inverse of embed on W^lambda: the first coordinate of every block.
template <class T>
std::vector<T> face_coordinates(const Composition& lambda, std::span<const T> x) {
  if (static_cast<int>(x.size()) != lambda.n()) throw DomainError("face_coordinates: size mismatch");
  std::vector<T> z;
  for (int s : lambda.block_starts()) z.push_back(x[static_cast<size_t>(s)]);
  return z;
}

template <class T>
std::vector<T> face_coordinates(const Composition& lambda, const std::vector<T>& x) {
  return face_coordinates(lambda, std::span<const T>(x));
}

int inversion_number(std::span<const Rational> x);

}  // namespace symconn
