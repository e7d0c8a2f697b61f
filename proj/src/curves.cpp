#include "curvedrift/curves.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "curvedrift/homology.hpp"

namespace curvedrift {

namespace {

long long P(long long x) { return std::max(x, 0LL); }
long long M(long long x) { return std::min(x, 0LL); }

void check_size(const LaminationCoord& x) {
  if (x.punctures < 3) throw CurveError("laminations need at least 3 punctures");
  if (static_cast<int>(x.coords.size()) != 2 * x.punctures - 4)
    throw CurveError("coordinate vector must have length 2N-4");
}

// sigma_i^s on the pair of coordinate columns it touches.
void act_letter(int N, std::vector<long long>& v, int i, int s) {
  const int n = N - 2;
  auto a = [&](int k) -> long long& { return v[k - 1]; };
  auto b = [&](int k) -> long long& { return v[n + k - 1]; };
  if (i == 1) {
    const long long a1 = a(1), b1 = b(1);
    if (s < 0) {
      a(1) = -b1 + P(a1 + P(b1));
      b(1) = a1 + P(b1);
    } else {
      a(1) = b1 - P(P(b1) - a1);
      b(1) = P(b1) - a1;
    }
    return;
  }
  if (i == N - 1) {
    const long long an = a(n), bn = b(n);
    if (s < 0) {
      a(n) = -bn + M(an + M(bn));
      b(n) = an + M(bn);
    } else {
      a(n) = bn - M(M(bn) - an);
      b(n) = M(bn) - an;
    }
    return;
  }
  const int j = i - 1;
  const long long A0 = a(j), B0 = b(j), A1 = a(j + 1), B1 = b(j + 1);
  if (s > 0) {
    const long long z = A0 - M(B0) - A1 + P(B1);
    a(j) = A0 + P(B0) + P(P(B1) - z);
    b(j) = B1 - P(z);
    a(j + 1) = A1 + M(B1) + M(M(B0) + z);
    b(j + 1) = B0 + P(z);
  } else {
    const long long z = A0 + M(B0) - A1 - P(B1);
    a(j) = A0 - P(B0) - P(P(B1) + z);
    b(j) = B1 + M(z);
    a(j + 1) = A1 - M(B1) - M(M(B0) - z);
    b(j + 1) = B0 - M(z);
  }
}

// Cutting sequences: the horizontal line through the punctures is cut into
// edges 0..N; a closed curve alternates between the upper and lower half.
struct Cross {
  int edge;
  bool down;  // crossing from the upper half into the lower half
};
using CuttingSeq = std::vector<Cross>;

CuttingSeq cyclic_reduce_cs(const CuttingSeq& cs) {
  CuttingSeq out;
  for (const auto& c : cs) {
    if (!out.empty() && out.back().edge == c.edge)
      out.pop_back();
    else
      out.push_back(c);
  }
  std::size_t lo = 0, hi = out.size();
  while (hi - lo >= 2 && out[lo].edge == out[hi - 1].edge) {
    ++lo;
    --hi;
  }
  return CuttingSeq(out.begin() + lo, out.begin() + hi);
}

CuttingSeq word_to_cs(const FreeWord& w) {
  CuttingSeq cs;
  for (int l : w) {
    const int k = std::abs(l);
    if (l > 0) {
      cs.push_back({k - 1, true});
      cs.push_back({k, false});
    } else {
      cs.push_back({k, true});
      cs.push_back({k - 1, false});
    }
  }
  return cyclic_reduce_cs(cs);
}

CuttingSeq reverse_cs(const CuttingSeq& cs) {
  CuttingSeq out;
  for (auto it = cs.rbegin(); it != cs.rend(); ++it) out.push_back({it->edge, !it->down});
  return out;
}

// A passage through one half-plane: entered through `entry`, left through `exit`.
// For arcs the endpoints may also be punctures or infinity (see slot codes).
struct Visit {
  bool lower;
  int entry;
  int exit;
};

std::vector<Visit> visits(const CuttingSeq& cs) {
  std::vector<Visit> v;
  const std::size_t p = cs.size();
  for (std::size_t i = 0; i < p; ++i) v.push_back({cs[i].down, cs[i].edge, cs[(i + 1) % p].edge});
  return v;
}

// Boundary positions of a half-plane listed counterclockwise. Edge k has slot
// 2k, puncture k+1 has slot 2k+1 and infinity has slot 2N+1.
int slot_position(int N, bool lower, int slot) { return lower ? (2 * N + 1) - slot : slot; }
int slot_rank(int N, bool lower, int s, int e) {
  const int m = 2 * N + 2;
  return ((slot_position(N, lower, s) - slot_position(N, lower, e)) % m + m) % m;
}
bool slot_interleave(int N, bool lower, int a, int b, int c, int d) {
  const int m = 2 * N + 2;
  const int pa = slot_position(N, lower, a), pb = slot_position(N, lower, b);
  const int pc = slot_position(N, lower, c), pd = slot_position(N, lower, d);
  auto between = [&](int x) { return 0 < ((x - pa) % m + m) % m && ((x - pa) % m + m) % m < ((pb - pa) % m + m) % m; };
  return between(pc) != between(pd);
}

std::vector<Visit> slot_visits(const CuttingSeq& cs) {
  auto v = visits(cs);
  for (auto& x : v) {
    x.entry *= 2;
    x.exit *= 2;
  }
  return v;
}

// Each pair of visits whose paths run together and then split is tested once;
// the curves cross there exactly when the splits are on opposite sides.
long long curve_curve(int N, const CuttingSeq& x, const CuttingSeq& y) {
  long long total = 0;
  const auto vx = slot_visits(x);
  const std::size_t p = vx.size();
  for (int pass = 0; pass < 2; ++pass) {
    const bool forward = pass == 0;
    const auto vy = slot_visits(forward ? y : reverse_cs(y));
    const std::size_t q = vy.size();
    for (std::size_t i = 0; i < p; ++i)
      for (std::size_t j = 0; j < q; ++j) {
        if (vx[i].lower != vy[j].lower || vx[i].entry == vy[j].entry) continue;
        std::size_t t = 0;
        while (t <= p * q && vx[(i + t) % p].exit == vy[(j + t) % q].exit) ++t;
        if (t > p * q) continue;
        if (t == 0) {
          const auto& a = vx[i];
          const auto& b = vy[j];
          std::set<int> ends{a.entry, a.exit, b.entry, b.exit};
          if (ends.size() < 4 || !forward) continue;
          if (slot_interleave(N, a.lower, a.entry, a.exit, b.entry, b.exit)) ++total;
        } else {
          const auto& first = vx[i];
          const auto& lastx = vx[(i + t) % p];
          const auto& lasty = vy[(j + t) % q];
          const bool before = slot_rank(N, first.lower, first.entry, first.exit) <
                              slot_rank(N, first.lower, vy[j].entry, first.exit);
          const bool after = slot_rank(N, lastx.lower, lastx.exit, lastx.entry) <
                             slot_rank(N, lastx.lower, lasty.exit, lastx.entry);
          if (before == after) ++total;
        }
      }
  }
  return total;
}

// Same count against an arc that starts and ends away from the edges.
long long curve_arc(int N, const CuttingSeq& x, const std::vector<Visit>& arc) {
  long long total = 0;
  const auto vx = slot_visits(x);
  const std::size_t p = vx.size();
  std::vector<Visit> rev;
  for (auto it = arc.rbegin(); it != arc.rend(); ++it) rev.push_back({it->lower, it->exit, it->entry});
  for (int pass = 0; pass < 2; ++pass) {
    const bool forward = pass == 0;
    const auto& vy = forward ? arc : rev;
    const std::size_t q = vy.size();
    for (std::size_t i = 0; i < p; ++i)
      for (std::size_t j = 0; j < q; ++j) {
        if (vx[i].lower != vy[j].lower || vx[i].entry == vy[j].entry) continue;
        std::size_t t = 0;
        while (j + t < q && vx[(i + t) % p].exit == vy[j + t].exit) ++t;
        if (j + t >= q) continue;
        if (t == 0) {
          const auto& a = vx[i];
          const auto& b = vy[j];
          std::set<int> ends{a.entry, a.exit, b.entry, b.exit};
          if (ends.size() < 4 || !forward) continue;
          if (slot_interleave(N, a.lower, a.entry, a.exit, b.entry, b.exit)) ++total;
        } else {
          const auto& first = vx[i];
          const auto& lastx = vx[(i + t) % p];
          const bool before = slot_rank(N, first.lower, first.entry, first.exit) <
                              slot_rank(N, first.lower, vy[j].entry, first.exit);
          const bool after = slot_rank(N, lastx.lower, lastx.exit, lastx.entry) <
                             slot_rank(N, lastx.lower, vy[j + t].exit, lastx.entry);
          if (before == after) ++total;
        }
      }
  }
  return total;
}

struct Reconstruction {
  CrossingCounts counts;
  std::vector<long long> z, zp;  // arcs turning around puncture k on its left / right
  bool consistent = true;
};

Reconstruction reconstruct(const LaminationCoord& x) {
  check_size(x);
  const int N = x.punctures, n = N - 2;
  Reconstruction r;
  auto& c = r.counts;
  c.beta.assign(N, 0);
  c.up.assign(N + 1, 0);
  c.down.assign(N + 1, 0);
  r.z.assign(N + 1, 0);
  r.zp.assign(N + 1, 0);
  long long prefix = 0, best = 0;
  for (int i = 1; i <= n; ++i) {
    best = std::max(best, std::abs(x.a(i)) + P(x.b(i)) + prefix);
    prefix += x.b(i);
  }
  c.beta[1] = 2 * best;
  for (int i = 1; i <= n; ++i) c.beta[i + 1] = c.beta[i] - 2 * x.b(i);
  for (int k = 2; k <= N - 1; ++k) {
    const int i = k - 1;
    r.z[k] = P(-x.b(i));
    r.zp[k] = P(x.b(i));
    const long long t = c.beta[i] + 2 * r.z[k];
    c.down[k] = t / 2 + x.a(i);
    c.up[k] = t / 2 - x.a(i);
  }
  // the end punctures are crossed only by the U-turns
  c.up[1] = c.down[1] = c.beta[1] / 2;
  c.up[N] = c.down[N] = c.beta[N - 1] / 2;
  for (int j = 1; j < N; ++j)
    if (c.beta[j] < 0) r.consistent = false;
  for (int k = 2; k <= N - 1 && r.consistent; ++k) {
    const long long xl = c.up[k] - r.z[k], yl = c.down[k] - r.z[k];
    const long long xr = c.up[k] - r.zp[k], yr = c.down[k] - r.zp[k];
    if (xl < 0 || yl < 0 || xl + yl != c.beta[k - 1]) r.consistent = false;
    if (xr < 0 || yr < 0 || xr + yr != c.beta[k]) r.consistent = false;
  }
  return r;
}

}  // namespace

bool LaminationCoord::empty() const {
  return std::all_of(coords.begin(), coords.end(), [](long long v) { return v == 0; });
}

std::string to_string(const LaminationCoord& x) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < x.coords.size(); ++i) os << (i ? "," : "") << x.coords[i];
  os << ']';
  return os.str();
}

LaminationCoord standard_curve(int N, int i, int j) {
  if (N < 3) throw CurveError("need at least 3 punctures");
  if (i < 1 || j > N || i > j) throw CurveError("puncture range out of bounds");
  if (i == j) throw CurveError("a single puncture bounds a peripheral curve");
  if (i == 1 && j == N) throw CurveError("the curve around all punctures is peripheral");
  LaminationCoord x{N, std::vector<long long>(2 * N - 4, 0)};
  const int n = N - 2;
  if (i >= 2) x.coords[n + i - 2] = -1;
  if (j <= N - 1) x.coords[n + j - 2] = 1;
  return x;
}

LaminationCoord apply_braid(const LaminationCoord& x, const BraidWord& b) {
  check_size(x);
  if (b.strands() != x.punctures) throw CurveError("braid strand count differs from puncture count");
  if (b.flavor() != Flavor::Disk) throw CurveError("laminations need a disk braid");
  LaminationCoord out = x;
  for (auto it = b.letters().rbegin(); it != b.letters().rend(); ++it)
    act_letter(x.punctures, out.coords, it->index, it->sign);
  return out;
}

bool admissible(const LaminationCoord& x) {
  if (x.punctures < 3 || static_cast<int>(x.coords.size()) != 2 * x.punctures - 4) return false;
  return reconstruct(x).consistent;
}

CrossingCounts crossing_counts(const LaminationCoord& x) {
  auto r = reconstruct(x);
  if (!r.consistent) throw CurveError("inadmissible coordinates " + to_string(x));
  return r.counts;
}

std::vector<FreeWord> components(const LaminationCoord& x) {
  const auto r = reconstruct(x);
  if (!r.consistent) throw CurveError("inadmissible coordinates " + to_string(x));
  const int N = x.punctures;
  const auto& beta = r.counts.beta;
  const auto& U = r.counts.up;
  const auto& D = r.counts.down;

  // Points where the lamination meets the vertical lines and the rays; each
  // point has a partner on its left side and one on its right side.
  enum Kind { Line = 0, Up = 1, Down = 2 };
  struct Point {
    Kind kind;
    int index;
    long long t;
  };
  std::vector<Point> pts;
  std::vector<std::vector<long long>> off(3, std::vector<long long>(N + 1, 0));
  for (int j = 1; j < N; ++j) {
    off[Line][j] = static_cast<long long>(pts.size());
    for (long long t = 0; t < beta[j]; ++t) pts.push_back({Line, j, t});
  }
  for (int k = 2; k < N; ++k) {
    off[Up][k] = static_cast<long long>(pts.size());
    for (long long t = 0; t < U[k]; ++t) pts.push_back({Up, k, t});
    off[Down][k] = static_cast<long long>(pts.size());
    for (long long t = 0; t < D[k]; ++t) pts.push_back({Down, k, t});
  }
  auto id = [&](Kind kind, int idx, long long t) { return off[kind][idx] + t; };
  // partner[2*p + side] = 2*q + side'; side 0 is left, 1 is right
  std::vector<long long> partner(2 * pts.size(), -1);
  auto link = [&](long long p, int sp, long long q, int sq) {
    partner[2 * p + sp] = 2 * q + sq;
    partner[2 * q + sq] = 2 * p + sp;
  };
  for (long long t = 0; t < beta[1] / 2; ++t) link(id(Line, 1, t), 0, id(Line, 1, beta[1] - 1 - t), 0);
  for (long long t = 0; t < beta[N - 1] / 2; ++t)
    link(id(Line, N - 1, t), 1, id(Line, N - 1, beta[N - 1] - 1 - t), 1);
  for (int k = 2; k < N; ++k) {
    const long long xl = U[k] - r.z[k];
    for (long long t = 0; t < xl; ++t) link(id(Line, k - 1, t), 1, id(Up, k, U[k] - 1 - t), 0);
    for (long long s = 0; s < D[k] - r.z[k]; ++s) link(id(Line, k - 1, xl + s), 1, id(Down, k, r.z[k] + s), 0);
    for (long long u = 0; u < r.z[k]; ++u) link(id(Up, k, u), 0, id(Down, k, u), 0);
    const long long xr = U[k] - r.zp[k];
    for (long long t = 0; t < xr; ++t) link(id(Line, k, t), 0, id(Up, k, U[k] - 1 - t), 1);
    for (long long s = 0; s < D[k] - r.zp[k]; ++s) link(id(Line, k, xr + s), 0, id(Down, k, r.zp[k] + s), 1);
    for (long long u = 0; u < r.zp[k]; ++u) link(id(Up, k, u), 1, id(Down, k, u), 1);
  }

  std::vector<bool> seen(pts.size(), false);
  std::vector<FreeWord> out;
  for (long long start = 0; start < static_cast<long long>(pts.size()); ++start) {
    if (seen[start]) continue;
    FreeWord word;
    long long cur = start;
    int side = partner[2 * start] >= 0 ? 0 : 1;
    while (true) {
      seen[cur] = true;
      const long long link_to = partner[2 * cur + side];
      if (link_to < 0) throw CurveError("broken reconstruction for " + to_string(x));
      const long long q = link_to / 2;
      const int sq = static_cast<int>(link_to % 2);
      const Point& pc = pts[cur];
      const Point& pq = pts[q];
      if (pc.kind == Line && pq.kind == Line && pc.index == pq.index) {
        if (pq.index == 1 && side == 0) word.push_back(pc.t < pq.t ? 1 : -1);
        if (pq.index == N - 1 && side == 1) word.push_back(pc.t < pq.t ? -N : N);
      }
      if (pq.kind == Down) word.push_back(sq == 0 ? pq.index : -pq.index);
      cur = q;
      side = 1 - sq;
      if (cur == start) break;
    }
    out.push_back(cyclic_reduce(word));
  }
  return out;
}

LaminationCoord coordinates_of_word(int N, const FreeWord& w) {
  const auto cs = word_to_cs(cyclic_reduce(w));
  std::vector<long long> U(N + 1, 0), D(N + 1, 0), beta(N, 0);
  for (const auto& v : visits(cs)) {
    const int lo = std::min(v.entry, v.exit), hi = std::max(v.entry, v.exit);
    for (int i = lo + 1; i <= hi; ++i) (v.lower ? D : U)[i]++;
  }
  const int inf = 2 * N + 1;
  for (int j = 1; j < N; ++j) {
    // vertical line through edge j, from infinity down and back
    const std::vector<Visit> arc{{false, inf, 2 * j}, {true, 2 * j, inf}};
    beta[j] = curve_arc(N, cs, arc);
  }
  LaminationCoord x{N, std::vector<long long>(2 * N - 4, 0)};
  for (int i = 1; i <= N - 2; ++i) {
    x.coords[i - 1] = (D[i + 1] - U[i + 1]) / 2;
    x.coords[N - 2 + i - 1] = (beta[i] - beta[i + 1]) / 2;
  }
  return x;
}

long long word_intersection(int N, const FreeWord& x, const FreeWord& y) {
  return curve_curve(N, word_to_cs(cyclic_reduce(x)), word_to_cs(cyclic_reduce(y)));
}

long long intersection_number(const LaminationCoord& x, const LaminationCoord& y) {
  if (x.punctures != y.punctures) throw CurveError("puncture counts differ");
  const auto cx = components(x);
  const auto cy = components(y);
  long long total = 0;
  for (const auto& u : cx)
    for (const auto& v : cy) total += word_intersection(x.punctures, u, v);
  return total;
}

std::vector<std::vector<int>> crossing_sequences(const BraidWord& b, int cut) {
  const int N = b.strands();
  if (cut < 1 || cut > N) throw CurveError("cut label out of range");
  // the dual of c_cut is fixed exactly when e_cut * P = e_cut for the permutation action P
  const auto perm = underlying_permutation(b);
  IntMatrix pm(N, N);
  for (int k = 1; k <= N; ++k) pm(perm(k) - 1, k - 1) = 1;
  IntMatrix e(1, N);
  e(0, cut - 1) = 1;
  if (!(e * pm == e)) throw CurveError("cut class c" + std::to_string(cut) + " is not fixed by the braid");

  std::vector<std::vector<int>> out;
  for (int j = 1; j <= N; ++j) {
    FreeWord w = artin_action(b, {j});
    if (j == cut) {
      // w = u x_cut u^-1; only the conjugating path leaves the block
      const std::size_t half = (w.size() - 1) / 2;
      if (w.size() % 2 == 0 || w[half] != cut) throw CurveError("unexpected image of the cut loop");
      w.resize(half);
    }
    std::vector<int> seq;
    for (int l : w)
      if (std::abs(l) == cut) seq.push_back(l > 0 ? 1 : -1);
    out.push_back(seq);
  }
  return out;
}

SpreadInterval spread_interval(const BraidWord& b, int cut) {
  SpreadInterval s;
  for (const auto& seq : crossing_sequences(b, cut)) {
    int sum = 0;
    for (int c : seq) {
      sum += c;
      s.a = std::min(s.a, sum);
      s.b = std::max(s.b, sum);
    }
  }
  return s;
}

}  // namespace curvedrift
