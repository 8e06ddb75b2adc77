#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace ainfty {

constexpr int kMaxN = 6;
constexpr int kSlots = kMaxN + 2;  // indices 0..N+1
constexpr int kAlex = 2 * kMaxN;

// Exponent vector over V_0..V_{N+1} (or weight e_0..e_{N+1}).
template <class Tag>
struct ExpVec {
  std::array<uint8_t, kSlots> e{};

  static ExpVec unit(int i) {
    ExpVec r;
    r.e[i] = 1;
    return r;
  }
  int total() const {
    int s = 0;
    for (auto x : e) s += x;
    return s;
  }
  bool zero() const { return total() == 0; }
  ExpVec operator+(const ExpVec& o) const {
    ExpVec r;
    for (int i = 0; i < kSlots; ++i) r.e[i] = uint8_t(e[i] + o.e[i]);
    return r;
  }
  ExpVec& operator+=(const ExpVec& o) { return *this = *this + o; }
  // caller must check leq first
  ExpVec operator-(const ExpVec& o) const {
    ExpVec r;
    for (int i = 0; i < kSlots; ++i) r.e[i] = uint8_t(e[i] - o.e[i]);
    return r;
  }
  bool leq(const ExpVec& o) const {
    for (int i = 0; i < kSlots; ++i)
      if (e[i] > o.e[i]) return false;
    return true;
  }
  auto operator<=>(const ExpVec&) const = default;
  bool operator==(const ExpVec&) const = default;
};

struct VTag {};
struct WTag {};
using VMono = ExpVec<VTag>;
using Weight = ExpVec<WTag>;

using Alex = std::array<int, kAlex>;

inline Alex operator+(Alex a, const Alex& b) {
  for (int i = 0; i < kAlex; ++i) a[i] += b[i];
  return a;
}

struct Grading {
  int N = 3;
  int m_e_last = 2;  // m(e_{N+1}); adjustable

  int mV(int i) const { return i == 0 ? 2 * N - 2 : -2; }
  int mW(int i) const {
    if (i == 0) return -(2 * N - 2);
    if (i == N + 1) return m_e_last;
    return 2;
  }
  int m(const VMono& v) const {
    int s = 0;
    for (int i = 0; i <= N + 1; ++i) s += v.e[i] * mV(i);
    return s;
  }
  int m(const Weight& w) const {
    int s = 0;
    for (int i = 0; i <= N + 1; ++i) s += w.e[i] * mW(i);
    return s;
  }
  // Alexander vector of V_i / e_i (same table)
  Alex aVar(int i) const {
    Alex a{};
    if (i == 0) {
      for (int k = 0; k < 2 * N; ++k) a[k] = 1;
    } else if (i == N + 1) {
      for (int k = 1; k < 2 * N; k += 2) a[k] = 1;
    } else {
      a[2 * i - 2] = 1;
    }
    return a;
  }
  Alex a(const VMono& v) const {
    Alex r{};
    for (int i = 0; i <= N + 1; ++i)
      for (int k = 0; k < v.e[i]; ++k) r = r + aVar(i);
    return r;
  }
  Alex a(const Weight& w) const {
    Alex r{};
    for (int i = 0; i <= N + 1; ++i)
      for (int k = 0; k < w.e[i]; ++k) r = r + aVar(i);
    return r;
  }
  // slot helpers: odd slot 2i-1 (1-based) holds U_i, rho_i, V_i; even slot 2i holds s_i, sigma_i
  Alex slotOdd(int i) const {
    Alex a{};
    a[2 * i - 2] = 1;
    return a;
  }
  Alex slotEven(int i) const {
    Alex a{};
    a[2 * i - 1] = 1;
    return a;
  }
  int idx(int i) const { return ((i - 1) % N + N) % N + 1; }
};

std::string vmono_str(const VMono& v, int N);
std::string weight_str(const Weight& w, int N);

// enumerate all weight vectors over colours [lo..hi] with total <= maxTotal
std::vector<Weight> weights_upto(int lo, int hi, int maxTotal);

// sort, then drop pairs; F_2 normal form of a multiset
template <class T>
void cancel_pairs(std::vector<T>& v) {
  std::sort(v.begin(), v.end());
  size_t out = 0;
  for (size_t i = 0; i < v.size();) {
    size_t j = i;
    while (j < v.size() && v[j] == v[i]) ++j;
    if ((j - i) & 1) v[out++] = v[i];
    i = j;
  }
  v.resize(out);
}

template <class T>
std::vector<T> chain_add(const std::vector<T>& a, const std::vector<T>& b) {
  std::vector<T> r;
  r.reserve(a.size() + b.size());
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}

}  // namespace ainfty
