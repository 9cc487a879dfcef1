#include "symconn/composition.hpp"

#include <numeric>
#include <sstream>

namespace symconn {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw DomainError("composition needs at least one part");
  for (int p : parts_) {
    if (p < 1) throw DomainError("composition parts must be positive");
    n_ += p;
  }
}

Composition Composition::from_breaks(int n, const std::vector<int>& breaks) {
  std::vector<int> parts;
  int previous = 0;
  for (int b : breaks) {
    if (b <= previous || b >= n) throw DomainError("from_breaks: breaks must increase within (0, n)");
    parts.push_back(b - previous);
    previous = b;
  }
  parts.push_back(n - previous);
  return Composition(std::move(parts));
}

Composition Composition::wall(int n, int i) {
  if (n < 2 || i < 1 || i > n - 1) throw DomainError("wall index out of range");
  std::vector<int> parts(static_cast<size_t>(n - 1), 1);
  parts[static_cast<size_t>(i) - 1] = 2;
  return Composition(std::move(parts));
}

std::vector<int> Composition::breaks() const {
  std::vector<int> out;
  int acc = 0;
  for (size_t k = 0; k + 1 < parts_.size(); ++k) {
    acc += parts_[k];
    out.push_back(acc);
  }
  return out;
}

std::vector<int> Composition::block_starts() const {
  std::vector<int> out;
  int acc = 0;
  for (int p : parts_) {
    out.push_back(acc);
    acc += p;
  }
  return out;
}

int Composition::block_of(int position) const {
  if (position < 0 || position >= n_) throw DomainError("block_of: position out of range");
  int acc = 0;
  for (size_t k = 0; k < parts_.size(); ++k) {
    acc += parts_[k];
    if (position < acc) return static_cast<int>(k);
  }
  return length() - 1;
}

std::string Composition::to_string() const {
  std::ostringstream os;
  os << '(';
  for (size_t k = 0; k < parts_.size(); ++k) os << (k ? "," : "") << parts_[k];
  os << ')';
  return os.str();
}

std::string to_string(CompMaxPattern pattern) {
  switch (pattern) {
    case CompMaxPattern::Definition: return "definition";
    case CompMaxPattern::Mirrored: return "mirrored";
    case CompMaxPattern::Minimizer: return "minimizer";
  }
  return "?";
}

CompMaxPattern parse_pattern(const std::string& text) {
  if (text == "definition") return CompMaxPattern::Definition;
  if (text == "mirrored") return CompMaxPattern::Mirrored;
  if (text == "minimizer") return CompMaxPattern::Minimizer;
  throw DomainError("unknown CompMax pattern '" + text + "' (expected definition|mirrored|minimizer)");
}

namespace {

void extend(int remaining, int slots, std::vector<int>& prefix, std::vector<Composition>& out) {
  if (slots == 1) {
    prefix.push_back(remaining);
    out.emplace_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int first = 1; first <= remaining - (slots - 1); ++first) {
    prefix.push_back(first);
    extend(remaining - first, slots - 1, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Composition> enumerate_compositions(int n, int length) {
  if (n < 1) throw DomainError("enumerate_compositions: n must be positive");
  if (length < 1 || length > n) throw DomainError("enumerate_compositions: need 1 <= length <= n");
  std::vector<Composition> out;
  std::vector<int> prefix;
  extend(n, length, prefix, out);
  return out;
}

std::vector<Composition> enumerate_compositions(int n) {
  std::vector<Composition> out;
  for (int length = 1; length <= n; ++length) {
    auto level = enumerate_compositions(n, length);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::vector<Composition> enumerate_compmax(int n, int d, CompMaxPattern pattern) {
  if (d < 1 || d > n) throw DomainError("enumerate_compmax: need 1 <= d <= n");
  if (d == 1) return {Composition({n})};
  std::vector<Composition> out;
  for (auto& lambda : enumerate_compositions(n, d)) {
    bool ok = true;
    for (int pos = 0; pos < d && ok; ++pos) {
      // 0-based pinned positions: 0,2,.. ; d-1,d-3,.. ; d-2,d-4,..
      bool pinned = false;
      switch (pattern) {
        case CompMaxPattern::Definition: pinned = pos % 2 == 0; break;
        case CompMaxPattern::Mirrored: pinned = (d - 1 - pos) % 2 == 0; break;
        case CompMaxPattern::Minimizer: pinned = pos <= d - 2 && (d - 2 - pos) % 2 == 0; break;
      }
      if (pinned && lambda[static_cast<size_t>(pos)] != 1) ok = false;
    }
    if (ok) out.push_back(lambda);
  }
  return out;
}

namespace {

void require_same_n(const Composition& a, const Composition& b, const char* what) {
  if (a.n() != b.n())
    throw DomainError(std::string(what) + ": compositions of different n (" + std::to_string(a.n()) + " vs " +
                      std::to_string(b.n()) + ")");
}

}  // namespace

Composition join(const Composition& a, const Composition& b) {
  require_same_n(a, b, "join");
  auto ba = a.breaks();
  auto bb = b.breaks();
  std::vector<int> common;
  std::set_intersection(ba.begin(), ba.end(), bb.begin(), bb.end(), std::back_inserter(common));
  return Composition::from_breaks(a.n(), common);
}

bool precedes(const Composition& a, const Composition& b) {
  require_same_n(a, b, "precedes");
  auto ba = a.breaks();
  auto bb = b.breaks();
  return std::includes(ba.begin(), ba.end(), bb.begin(), bb.end());
}

Composition res(const Composition& lambda, int i) {
  const int n = lambda.n();
  if (i < 1 || i > n - 1) throw DomainError("res: wall index must satisfy 1 <= i <= n-1");
  int k = lambda.block_of(i - 1);
  int k_next = lambda.block_of(i);
  if (k == k_next) return lambda;
  std::vector<int> parts;
  for (int b = 0; b < lambda.length(); ++b) {
    if (b == k_next) {
      parts.back() += lambda[static_cast<size_t>(b)];
      continue;
    }
    parts.push_back(lambda[static_cast<size_t>(b)]);
  }
  return Composition(std::move(parts));
}

int inversion_number(std::span<const Rational> x) {
  int count = 0;
  for (size_t i = 0; i < x.size(); ++i)
    for (size_t j = i + 1; j < x.size(); ++j)
      if (x[i] > x[j]) ++count;
  return count;
}

}  // namespace symconn
