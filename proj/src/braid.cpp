#include "curvedrift/braid.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace curvedrift {

BraidWord::BraidWord(int strands, std::vector<Letter> letters, Flavor flavor)
    : strands_(strands), letters_(std::move(letters)), flavor_(flavor) {
  if (strands_ < 2) throw BraidError("braid needs at least 2 strands");
  if (flavor_ == Flavor::Sphere && strands_ < 3)
    throw BraidError("sphere braid needs at least 3 strands");
  for (const auto& l : letters_) {
    if (l.index < 1 || l.index > strands_ - 1)
      throw BraidError("generator index " + std::to_string(l.index) + " out of range for " +
                       std::to_string(strands_) + " strands");
    if (l.sign != 1 && l.sign != -1) throw BraidError("letter sign must be +1 or -1");
  }
}

static void require_compatible(const BraidWord& u, const BraidWord& v) {
  if (u.strands() != v.strands()) throw BraidError("strand count mismatch");
  if (u.flavor() != v.flavor()) throw BraidError("flavor mismatch");
}

BraidWord product(const BraidWord& u, const BraidWord& v) {
  require_compatible(u, v);
  auto letters = u.letters();
  letters.insert(letters.end(), v.letters().begin(), v.letters().end());
  return BraidWord(u.strands(), std::move(letters), u.flavor());
}

BraidWord inverse(const BraidWord& u) {
  std::vector<Letter> letters;
  letters.reserve(u.length());
  for (auto it = u.letters().rbegin(); it != u.letters().rend(); ++it)
    letters.push_back({it->index, -it->sign});
  return BraidWord(u.strands(), std::move(letters), u.flavor());
}

BraidWord power(const BraidWord& u, int k) {
  const BraidWord base = k < 0 ? inverse(u) : u;
  std::vector<Letter> letters;
  for (int i = 0; i < std::abs(k); ++i)
    letters.insert(letters.end(), base.letters().begin(), base.letters().end());
  return BraidWord(u.strands(), std::move(letters), u.flavor());
}

BraidWord compose(const BraidWord& u, const BraidWord& v, ComposeMode mode, int k) {
  switch (mode) {
    case ComposeMode::Product: return product(u, v);
    case ComposeMode::Inverse: return inverse(u);
    case ComposeMode::Power: return power(u, k);
  }
  throw BraidError("unknown compose mode");
}

BraidWord free_reduce(const BraidWord& u) {
  std::vector<Letter> out;
  for (const auto& l : u.letters()) {
    if (!out.empty() && out.back().index == l.index && out.back().sign == -l.sign)
      out.pop_back();
    else
      out.push_back(l);
  }
  return BraidWord(u.strands(), std::move(out), u.flavor());
}

Permutation Permutation::identity(int n) {
  Permutation p;
  p.images.resize(n);
  std::iota(p.images.begin(), p.images.end(), 1);
  return p;
}

Permutation Permutation::compose(const Permutation& inner) const {
  Permutation p;
  p.images.resize(inner.images.size());
  for (std::size_t i = 0; i < inner.images.size(); ++i) p.images[i] = images.at(inner.images[i] - 1);
  return p;
}

Permutation Permutation::restrict_without(int s) const {
  const int t = (*this)(s);
  Permutation p;
  for (int i = 1; i <= size(); ++i) {
    if (i == s) continue;
    const int img = (*this)(i);
    p.images.push_back(img > t ? img - 1 : img);
  }
  return p;
}

int Permutation::cycle_count() const {
  std::vector<bool> seen(images.size(), false);
  int cycles = 0;
  for (int i = 1; i <= size(); ++i) {
    if (seen[i - 1]) continue;
    ++cycles;
    for (int j = i; !seen[j - 1]; j = (*this)(j)) seen[j - 1] = true;
  }
  return cycles;
}

Permutation underlying_permutation(const BraidWord& b) {
  // perm = t(L1) ∘ ... ∘ t(Lk): apply the rightmost transposition first.
  auto p = Permutation::identity(b.strands());
  for (auto it = b.letters().rbegin(); it != b.letters().rend(); ++it) {
    for (auto& img : p.images) {
      if (img == it->index)
        img = it->index + 1;
      else if (img == it->index + 1)
        img = it->index;
    }
  }
  return p;
}

ClosureInvariants closure_invariants(const BraidWord& b) {
  if (b.flavor() != Flavor::Disk) throw BraidError("closure invariants need a disk braid");
  const int c = underlying_permutation(b).cycle_count();
  // The braid axis adds one component; a link exterior has b1 equal to its component count.
  return {c, c + 1, c + 1};
}

BraidWord delete_strand(const BraidWord& b, int s) {
  if (s < 1 || s > b.strands()) throw BraidError("strand label out of range");
  if (b.strands() < 3) throw BraidError("cannot delete a strand from a 2-strand braid");
  std::vector<Letter> kept;
  int pos = s;
  for (auto it = b.letters().rbegin(); it != b.letters().rend(); ++it) {
    const int i = it->index;
    if (i == pos) {
      pos = i + 1;
    } else if (i + 1 == pos) {
      pos = i;
    } else {
      kept.push_back({i > pos ? i - 1 : i, it->sign});
    }
  }
  std::reverse(kept.begin(), kept.end());
  return BraidWord(b.strands() - 1, std::move(kept), b.flavor());
}

std::string to_string(const BraidWord& b) {
  if (b.empty()) return "e";
  std::ostringstream os;
  bool first = true;
  for (const auto& l : b.letters()) {
    if (!first) os << ' ';
    first = false;
    os << 's' << l.index;
    if (l.sign < 0) os << "^-1";
  }
  return os.str();
}

}  // namespace curvedrift
