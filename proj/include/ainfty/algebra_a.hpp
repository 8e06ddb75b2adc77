#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ainfty/ring.hpp"

namespace ainfty {

struct ATerm {
  enum Kind : uint8_t { Idem = 0, UPow = 1, Chord = 2 };
  VMono v;
  Kind kind = Idem;
  uint8_t i = 1;     // idempotent, U colour, or chord start
  uint16_t p = 0;    // U power or chord length
  auto operator<=>(const ATerm&) const = default;
  bool operator==(const ATerm&) const = default;
};

using AElem = std::vector<ATerm>;  // sorted, pair-cancelled

void a_add(AElem& acc, const AElem& x);

class AlgebraA {
 public:
  explicit AlgebraA(int N, Grading g = {}) : N_(N), g_(g) { g_.N = N; }
  int N() const { return N_; }
  const Grading& grading() const { return g_; }

  ATerm idem(int i) const { return {VMono{}, ATerm::Idem, uint8_t(g_.idx(i)), 0}; }
  ATerm U(int c, int p = 1) const { return {VMono{}, ATerm::UPow, uint8_t(c), uint16_t(p)}; }
  ATerm s(int i, int len) const { return {VMono{}, ATerm::Chord, uint8_t(g_.idx(i)), uint16_t(len)}; }

  int initial(const ATerm& t) const { return t.i; }
  int final(const ATerm& t) const { return t.kind == ATerm::Chord ? g_.idx(t.i + t.p) : t.i; }
  int maslov(const ATerm& t) const { return g_.m(t.v); }
  Alex alex(const ATerm& t) const;

  std::optional<ATerm> mul(const ATerm& x, const ATerm& y) const;  // x then y
  // letter codes: U_c -> 2(c-1), s_c -> 2(c-1)+1
  std::vector<int> letters(const ATerm& t) const;
  ATerm from_letters(const std::vector<int>& l, size_t from, size_t to) const;

  AElem mu0(const Weight& w) const;
  // parses: number of graphs found (for uniqueness checks)
  AElem mu(const Weight& w, const std::vector<ATerm>& seq, int* parses = nullptr) const;
  // terms: number of nonzero composites before cancellation
  AElem relation_sum(const Weight& w, const std::vector<ATerm>& seq, long* terms = nullptr) const;

  // mutation tests only: chords starting here multiply to 0
  int corruptChord = 0;

  std::string str(const ATerm& t) const;
  std::string str(const AElem& e) const;
  std::string str(const std::vector<ATerm>& seq, bool) const;

 private:
  int N_;
  Grading g_;
};

// An internal e_{N+1} face: a ring of vertices, each giving a run of s-corners.
struct CycleShape {
  std::vector<int> ext;         // exterior sector codes, cyclic
  std::vector<char> fusedAfter; // gap after ext[k] is a ring edge
  std::vector<int> colours;     // weight used: N+1 plus inner petals
  int vertices = 0;
};
std::vector<CycleShape> cycle_shapes(int N);

struct AOp {
  Weight w;
  std::vector<ATerm> seq;
  AElem out;
};

struct AGenOpts {
  int maxVertices = 2;
  int maxWeight = 2;
  bool cycles = true;
  int maxInputs = 1000;
  // 0: none, 1: prefix, 2: suffix, -1: random
  int extension = -1;
  std::optional<ATerm> alpha;  // forced extension term
};

// Random accepted operation, generated from a graph. Empty seq on failure.
AOp random_op(const AlgebraA& A, std::mt19937_64& rng, const AGenOpts& o);

}  // namespace ainfty
