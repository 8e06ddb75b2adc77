#include "ainfty/ring.hpp"

namespace ainfty {

std::string vmono_str(const VMono& v, int N) {
  std::string s;
  for (int i = 0; i <= N + 1; ++i) {
    if (!v.e[i]) continue;
    s += "V" + std::to_string(i);
    if (v.e[i] > 1) s += "^" + std::to_string(v.e[i]);
  }
  return s;
}

std::string weight_str(const Weight& w, int N) {
  std::string s;
  for (int i = 0; i <= N + 1; ++i) {
    for (int k = 0; k < w.e[i]; ++k) {
      if (!s.empty()) s += "+";
      s += "e" + std::to_string(i);
    }
  }
  return s.empty() ? "0" : s;
}

static void rec(int c, int hi, int left, Weight& cur, std::vector<Weight>& out) {
  if (c > hi) {
    out.push_back(cur);
    return;
  }
  for (int k = 0; k <= left; ++k) {
    cur.e[c] = uint8_t(k);
    rec(c + 1, hi, left - k, cur, out);
  }
  cur.e[c] = 0;
}

std::vector<Weight> weights_upto(int lo, int hi, int maxTotal) {
  std::vector<Weight> out;
  Weight cur;
  rec(lo, hi, maxTotal, cur, out);
  std::sort(out.begin(), out.end(), [](const Weight& a, const Weight& b) {
    if (a.total() != b.total()) return a.total() < b.total();
    return a < b;
  });
  return out;
}

}  // namespace ainfty
