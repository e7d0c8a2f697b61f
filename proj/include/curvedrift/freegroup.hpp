#pragma once

#include <vector>

#include "curvedrift/braid.hpp"

namespace curvedrift {

// Words in the free group on x_1..x_N, the loops around the punctures seen
// from a basepoint on the boundary. Letter k stands for x_k, -k for its inverse.
using FreeWord = std::vector<int>;

FreeWord free_reduce(const FreeWord& w);
FreeWord cyclic_reduce(const FreeWord& w);
FreeWord inverse(const FreeWord& w);

// Artin action. sigma_i: x_i -> x_i x_{i+1} x_i^-1, x_{i+1} -> x_i.
// The rightmost letter of b acts first, so act(uv, w) = act(u, act(v, w)).
FreeWord artin_action(const BraidWord& b, const FreeWord& w);

// Free-group images of x_1..x_N under b.
std::vector<FreeWord> artin_images(const BraidWord& b);

// The boundary-parallel loop around punctures i..j.
FreeWord round_word(int i, int j);

}  // namespace curvedrift
