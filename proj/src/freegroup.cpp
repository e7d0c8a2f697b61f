#include "curvedrift/freegroup.hpp"

#include <algorithm>
#include <numeric>

namespace curvedrift {

FreeWord free_reduce(const FreeWord& w) {
  FreeWord out;
  out.reserve(w.size());
  for (int l : w) {
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

FreeWord cyclic_reduce(const FreeWord& w) {
  FreeWord r = free_reduce(w);
  std::size_t lo = 0, hi = r.size();
  while (hi - lo >= 2 && r[lo] == -r[hi - 1]) {
    ++lo;
    --hi;
  }
  return FreeWord(r.begin() + lo, r.begin() + hi);
}

FreeWord inverse(const FreeWord& w) {
  FreeWord out(w.rbegin(), w.rend());
  for (int& l : out) l = -l;
  return out;
}

namespace {

FreeWord generator_image(int i, int s, int k) {
  if (s > 0) {
    if (k == i) return {i, i + 1, -i};
    if (k == i + 1) return {i};
  } else {
    if (k == i) return {i + 1};
    if (k == i + 1) return {-(i + 1), i, i + 1};
  }
  return {k};
}

FreeWord apply_letter(int i, int s, const FreeWord& w) {
  FreeWord out;
  out.reserve(w.size() + 4);
  for (int l : w) {
    FreeWord img = generator_image(i, s, std::abs(l));
    if (l < 0) img = inverse(img);
    out.insert(out.end(), img.begin(), img.end());
  }
  return free_reduce(out);
}

}  // namespace

FreeWord artin_action(const BraidWord& b, const FreeWord& w) {
  FreeWord cur = free_reduce(w);
  for (auto it = b.letters().rbegin(); it != b.letters().rend(); ++it) cur = apply_letter(it->index, it->sign, cur);
  return cur;
}

std::vector<FreeWord> artin_images(const BraidWord& b) {
  std::vector<FreeWord> out;
  for (int k = 1; k <= b.strands(); ++k) out.push_back(artin_action(b, {k}));
  return out;
}

FreeWord round_word(int i, int j) {
  FreeWord w(j - i + 1);
  std::iota(w.begin(), w.end(), i);
  return w;
}

}  // namespace curvedrift
