#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ainfty/algebra_a.hpp"
#include "ainfty/algebra_b.hpp"
#include "ainfty/diagonal.hpp"
#include "ainfty/tensor.hpp"

namespace ainfty {

// letter codes on the B side: rho_c -> 2(c-1), sigma_c -> 2(c-1)+1, in application order
std::vector<int> b_letters(const AlgebraB& B, const BWord& w);

// The AA bimodule Y. Generators {1}..{N}; bs = b_1..b_k (b_1 next to x), as = a_1..a_n.
class BimoduleY {
 public:
  BimoduleY(const AlgebraA& A, const AlgebraB& B) : A_(A), B_(B), N_(A.N()) {}

  const AlgebraA& A() const { return A_; }
  const AlgebraB& B() const { return B_; }

  // left side of the Maslov identity; operations need 0
  int maslov_defect(const Weight& w, const std::vector<BTerm>& bs, const std::vector<ATerm>& as) const;
  bool alexander_even(const Weight& w, const std::vector<BTerm>& bs, const std::vector<ATerm>& as) const;
  bool admits_matching(const Weight& w, const std::vector<BTerm>& bs, const std::vector<ATerm>& as) const;
  // output generator, if the sequence is an operation
  std::optional<int> recognize(const Weight& w, const std::vector<BTerm>& bs, int x,
                               const std::vector<ATerm>& as) const;

  // generators with odd multiplicity in the A-infinity relation; terms counts nonzero composites
  std::vector<int> relation_sum(const Weight& w, const std::vector<BTerm>& bs, int x,
                                const std::vector<ATerm>& as, long* terms = nullptr) const;

  std::string str(const Weight& w, const std::vector<BTerm>& bs, int x, const std::vector<ATerm>& as) const;

 private:
  const AlgebraA& A_;
  const AlgebraB& B_;
  int N_;
};

// DD bimodule X: generator i stands for the complement of {i}
struct DDStep {
  ATerm a;
  BTerm b;
  int next = 1;
};
std::vector<DDStep> dd_delta1(const AlgebraA& A, const AlgebraB& B, int i);
// all delta^n chains from generator i: n steps each
std::vector<std::vector<DDStep>> dd_chains(const AlgebraA& A, const AlgebraB& B, int i, int n);

struct DDCensusEntry {
  ABTerm out;
  int gen = 1;
  int count = 0;
  std::vector<std::string> sources;
};

struct DDCensus {
  std::vector<DDCensusEntry> entries;  // nonzero outputs before cancellation
  bool sumZero = true;
  long evaluations = 0;
  long gradingFailures = 0;
  long alexFailures = 0;
  long offIdempotent = 0;  // outputs whose idempotents disagree with the chain
  std::vector<std::string> gradingExamples;
};

// sum over n <= maxInputs and weights with n + 2|w| <= maxDegree
DDCensus dd_census(const Diagonal& d, const AlgebraA& A, const AlgebraB& B, int maxInputs, int maxDegree);
// expected census entries (output, generator): U_j V_j, s_{j,N} V_{N+1}, V_0 U_0; each should occur twice
std::vector<std::pair<ABTerm, int>> dd_expected(const AlgebraA& A, const AlgebraB& B);

// basic DA operations of the box tensor products, generator summed over idempotents
struct BoxCaps {
  int maxChain = 8;      // delta_X^i length
  int maxContracted = 3; // contracted weight
};
// X (x) Y: A-side DA operation with weight wa (colours 1..N+1) and j <= 1 inputs
AElem box_xy(const BimoduleY& Y, const Weight& wa, const std::vector<ATerm>& in, const BoxCaps& c);
// Y (x) X: B-side DA operation with weight w0 * e_0 and j <= 1 inputs
BElem box_yx(const BimoduleY& Y, int w0, const std::vector<BTerm>& in, const BoxCaps& c);

// all A elements (no V coefficient) with at most maxLetters letters, and B words up to maxLen
std::vector<ATerm> a_terms(const AlgebraA& A, int maxLetters);
std::vector<BTerm> b_terms(const AlgebraB& B, int maxLen);

// A elements with a given Alexander grading and idempotents (any V coefficient)
std::vector<ATerm> a_terms_with(const AlgebraA& A, const Alex& a, int from, int to);
// B terms (V coefficient times word) with given Alexander grading and idempotents
std::vector<BTerm> b_terms_with(const AlgebraB& B, const Alex& a, int from, int to);

// dim over F_2 of H(B) in one (Alexander, idempotents, Maslov) piece
int b_homology_dim(const AlgebraB& B, const Alex& a, int from, int to, int maslov);

struct BClass {
  BTerm rep;
  int dim = 0;         // dim H in the piece
  int decomposable = 0; // dim of the part in m * H
};
// nonzero pieces of H(B) among the multidegrees of non-unit words with at most maxLen sigmas
std::vector<BClass> b_homology_generators(const AlgebraB& B, int maxLen);

}  // namespace ainfty
