#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace curvedrift {

enum class Flavor { Disk, Sphere };

struct Letter {
  int index;  // generator sigma_index, 1 <= index <= strands-1
  int sign;   // +1 or -1
  bool operator==(const Letter&) const = default;
};

class BraidError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A word in the braid generators. Letters are stored exactly as given;
// free reduction only happens through free_reduce().
class BraidWord {
 public:
  BraidWord(int strands, std::vector<Letter> letters = {}, Flavor flavor = Flavor::Disk);

  int strands() const { return strands_; }
  Flavor flavor() const { return flavor_; }
  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  bool operator==(const BraidWord&) const = default;

 private:
  int strands_;
  std::vector<Letter> letters_;
  Flavor flavor_;
};

enum class ComposeMode { Product, Inverse, Power };

// PRODUCT: u·v (v acts first). INVERSE: u^-1 (v ignored). POWER: u^k (v ignored).
BraidWord compose(const BraidWord& u, const BraidWord& v, ComposeMode mode, int k = 1);
BraidWord product(const BraidWord& u, const BraidWord& v);
BraidWord inverse(const BraidWord& u);
BraidWord power(const BraidWord& u, int k);
BraidWord free_reduce(const BraidWord& u);

// images[i-1] is the image of strand i.
struct Permutation {
  std::vector<int> images;
  int size() const { return static_cast<int>(images.size()); }
  int operator()(int i) const { return images.at(i - 1); }
  bool operator==(const Permutation&) const = default;
  static Permutation identity(int n);
  Permutation compose(const Permutation& inner) const;  // (*this) after inner
  // Drop s from the domain and its image from the codomain, relabeling both.
  Permutation restrict_without(int s) const;
  int cycle_count() const;
};

// Homomorphism: perm(uv) = perm(u) ∘ perm(v).
Permutation underlying_permutation(const BraidWord& b);

struct ClosureInvariants {
  int closure_components;
  int braided_link_components;
  int betti;
};

ClosureInvariants closure_invariants(const BraidWord& b);

// Erase every crossing on the trajectory of the strand starting at s, tracked
// in the same order the permutation is read (rightmost letter first).
BraidWord delete_strand(const BraidWord& b, int s);

std::string to_string(const BraidWord& b);

}  // namespace curvedrift
