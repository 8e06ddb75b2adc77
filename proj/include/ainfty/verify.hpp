#pragma once

#include <cstdint>

#include <vector>

#include "ainfty/algebra_a.hpp"
#include "ainfty/algebra_b.hpp"
#include "ainfty/diagonal.hpp"
#include "ainfty/report.hpp"

namespace ainfty {

struct Caps {
  int N = 3;
  int maxInputs = 5;
  int maxWeight = 2;
  int maxLen = 8;
  long long samples = 10000;
  uint64_t seed = 1;
  int corruptChord = 0;  // mutation tests
};

Report verify_algebra_b(const Caps& c);
Report verify_algebra_a(const Caps& c);
Report verify_bimodule_y(const Caps& c);
Report verify_bimodule_dd(const Caps& c);
Report verify_diagonal(const Caps& c);
Report verify_duality(const Caps& c);

// accepted unweighted idempotent-chained sequences of j(2N-2)+2 basic letters
std::vector<AOp> a_census(const AlgebraA& A, int j, long long* checked = nullptr);
Check a_census_check(const AlgebraA& A);  // j = 1: the 2N rotations, output V_0
Check b_homology_check(const AlgebraB& B, int maxLen);

// axioms and chain-map identity on every covered tree with n <= maxInputs, |w| <= maxWeight
std::vector<Check> diagonal_checks(const Diagonal& d, int maxInputs, int maxWeight);

}  // namespace ainfty
