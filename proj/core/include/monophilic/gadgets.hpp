#pragma once

#include <cstdint>
#include <vector>

#include "monophilic/count.hpp"

namespace monophilic {

struct GadgetInstance {
  Graph graph;
  ListAssignment lists;
};

// K_{n,n^n} (a_i = vertex i, b_k = vertex n + k) with the uncolorable
// n-list assignment: a_i gets {i*n+1, ..., i*n+n}; b_k takes from a_i the
// colour selected by the i-th base-n digit of k, the digit of a_{n-1}
// varying fastest. n >= 1.
GadgetInstance build_L0(int n);

// L_0 with every colour raised by `shift`, then j added to every list.
// Requires 1 <= j <= n and shift >= n so that 1..n stay unused.
ListAssignment build_Lj(int n, int j, int shift);
inline ListAssignment build_Lj(int n, int j) { return build_Lj(n, j, n); }

struct HGraphLayout {
  int n = 0;
  Count x;  // col(K_{n,n^n}, L_j)
  int p = 0;  // least p with n^p > x^(n^2)
  std::vector<Vertex> v;  // v_1..v_n
  std::vector<Vertex> w;  // w_1..w_p
  struct Copy {
    std::vector<Vertex> a;
    std::vector<Vertex> b;
  };
  // copies[i][j] is G_{i+1,j+1}.
  std::vector<std::vector<Copy>> copies;
};

struct HGraph {
  Graph graph;
  HGraphLayout layout;
};

// Vertex ids: v_i first, then w_k, then the copies G_{i,j} in row-major
// order, each copy listing its a side before its b side. Throws InputError
// for n < 2: with n = 1 no p satisfies 1^p > x.
HGraph build_H(int n);

// w_k: {n+1, ..., 2n+1}; v_i: {1..n, n+i}; G_{i,j}: L_j with the L_0
// colours shifted by 2n+1, so that they also avoid the colours of v and w.
ListAssignment build_lemma8_assignment(const HGraphLayout& layout);

struct HCountReport {
  Count x;
  int p = 0;
  Count x_power;  // x^(n^2)
  // col(H, L) as the product over copies once v and w are fixed.
  Count factored_count;
  // col(H, L) counted directly.
  Count direct_count;
  // Every other colour on any v_i or w_k leaves no coloring.
  bool forced_colours_verified = false;
  // Size of the explicit family of colorings from [n+1] (n^p) and whether
  // its members were checked to be proper.
  Count family_size;
  bool family_verified = false;
  Count uniform_count;  // col(H, n+1)
  bool holds = false;
};

HCountReport verify_H_counts(int n);

struct L0UniquenessReport {
  std::uint64_t classes = 0;
  std::uint64_t zero_classes = 0;
  // Zero classes equivalent to L_0 under colour renaming and automorphisms.
  std::uint64_t equivalent_to_L0 = 0;
  bool holds = false;
};

// Exhaustive over lists of size exactly n. n must be 1 or 2; larger n
// throws ResourceExhausted.
L0UniquenessReport verify_L0_uniqueness(int n);

struct MechanismReport {
  std::uint64_t apex_assignments = 0;
  int max_bad_colours = 0;
  bool adversarial_exactly_one = false;
  bool uniform_none = false;
  std::uint64_t greedy_attempts = 0;
  std::uint64_t greedy_successes = 0;
  bool holds = false;
};

// On K_{n,n^n} plus an apex: at most one apex colour kills every coloring,
// checked on the L_j assignments, on uniform lists and on `trials` random
// (n+1)-list assignments. Then the greedy coloring of H_{n+1} (apex colours
// first, then w, then the copies) is run on `trials` random assignments and
// on the adversarial one. Only n = 2 is supported.
MechanismReport verify_H_choosable_mechanism(int n, int trials = 500, std::uint64_t seed = 20240601);

// Vertices of K_{n,n^n} joined to an apex: the apex is the last vertex.
Graph build_apexed(int n);

// Apex colours c with no coloring once the apex is pinned to c.
std::vector<Color> bad_apex_colours(const Graph& apexed, const ListAssignment& lists);

}  // namespace monophilic
