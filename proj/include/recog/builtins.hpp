#pragma once

#include <vector>

#include "recog/tree.hpp"

namespace recog {

// The built-in 25-pattern universe: L=9, images a0..a3 given by the
// templates 1BB01B001 / 01B0011BB / 0011BB01B / 000000000.
Universe theorem1_universe();

// The built-in family for n >= 3: L=n^2, images a0..an. Image aj
// (j < n) is the cyclic block shift v_{j+1}..v_n v_1..v_j of the blocks
// v_i = 0^(i-1) 1 B^(n-i); image an is all zeros. Sizes are exact even
// when the universe stays symbolic.
// DomainError when n < 3; CapacityError when n(n-1)/2 > 62.
Universe theorem2_universe(int n);

// Recovers n from a universe shaped like theorem2_universe(n); throws
// DomainError otherwise. theorem1_universe() yields 3.
int theorem2_parameter(const Universe& u);

// Sign index testing position m of block i: n*i + m.
int sign_from_block(int n, int block, int position);

// The three cyclic recognizers of the 25-pattern universe.
DecisionTree algorithm_a();  // (P1 a0 (P2 a1 (P3 a2 a3)))
DecisionTree algorithm_b();  // (P4 a2 (P5 a0 (P6 a1 a3)))
DecisionTree algorithm_c();  // (P7 a1 (P8 a2 (P9 a0 a3)))
std::vector<LabeledTree> theorem1_algorithms();  // labels A, B, C

// Right-spine recognizer A_q of the n-family: tests signs n*q+1..n*q+n;
// the true leaf of level m names image (n-q+m-1) mod n, the final false
// leaf names image n. Recognition time is ((j+q) mod n)+1 on image j<n
// and n on image n.
DecisionTree spine_algorithm(int n, int q);
DecisionTree spine_algorithm(const Universe& u, int q);
std::vector<LabeledTree> spine_algorithms(int n);  // labels A0..A<n-1>

}  // namespace recog
