#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ainfty/algebra_a.hpp"
#include "ainfty/algebra_b.hpp"
#include "ainfty/diagonal.hpp"

namespace ainfty {

// a (x) b over the ground ring; the V coefficient is kept on the a side
struct ABTerm {
  ATerm a;
  BWord b;
  auto operator<=>(const ABTerm&) const = default;
  bool operator==(const ABTerm&) const = default;
};
using ABElem = std::vector<ABTerm>;
using ABInput = std::pair<ATerm, BTerm>;

// trees evaluated on algebra inputs; the stump is the unit (sum of idempotents)
AElem eval_tree_a(const AlgebraA& A, TreeId t, const std::vector<ATerm>& in);
BElem eval_tree_b(const AlgebraB& B, TreeId t, const std::vector<BTerm>& in);

// Y_1^{w - wt S} Y_2^{w - wt T} become V monomials on the output
ABElem eval_pair(const AlgebraA& A, const AlgebraB& B, const TreePair& p, const Weight& w,
                 const std::vector<ABInput>& in);

// mu_n^w on the tensor product, through Gamma(Psi_n^w)
ABElem tensor_mu(const Diagonal& d, const AlgebraA& A, const AlgebraB& B, const Weight& w,
                 const std::vector<ABInput>& in);
// same, keeping the individual nonzero contributions before cancellation
std::vector<std::pair<TreePair, ABElem>> tensor_mu_terms(const Diagonal& d, const AlgebraA& A,
                                                         const AlgebraB& B, const Weight& w,
                                                         const std::vector<ABInput>& in);

// bar-type differential: one block replaced by its operation, weight w spent on that block
std::vector<std::vector<BTerm>> total_differential_b(const AlgebraB& B, const std::vector<BTerm>& seq, int w0);
std::vector<std::vector<ATerm>> total_differential_a(const AlgebraA& A, const std::vector<ATerm>& seq,
                                                     const Weight& w);

std::string ab_str(const AlgebraA& A, const AlgebraB& B, const ABTerm& t);
std::string ab_str(const AlgebraA& A, const AlgebraB& B, const ABElem& e);

}  // namespace ainfty
