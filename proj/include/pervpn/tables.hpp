#pragma once

#include <algorithm>
#include <cstdlib>

// Closed-form dimensions of Hom(X, Y[r]) between named objects of Perv(P^n).
// Every entry is 0 or 1.
namespace pervpn::expected {

inline bool even(int x) { return x % 2 == 0; }

// Hom(IC_k, IC_l[r])
inline int simple_simple(int k, int l, int r) {
  const int s = r - std::abs(k - l);
  return (s >= 0 && even(s) && s <= 2 * std::min(k, l)) ? 1 : 0;
}
// Hom(D_k, IC_l[r]) = Hom(IC_l, N_k[r])
inline int standard_simple(int k, int l, int r) { return (l >= k && r == l - k) ? 1 : 0; }
// Hom(D_k, D_l[r]) = Hom(N_l, N_k[r])
inline int standard_standard(int k, int l, int r) {
  if (l > k) return (r == l - k - 1 || r == l - k) ? 1 : 0;
  return (l == k && r == 0) ? 1 : 0;
}
// Hom(IC_l, D_k[r]) = Hom(N_k, IC_l[r])
inline int simple_standard(int l, int k, int r) { return (r == k + l || (l < k && r == k - l - 1)) ? 1 : 0; }
// Hom(IC_l, P_k[r]), k < n
inline int simple_projective(int l, int k, int r) { return (l == k && r == 0) ? 1 : 0; }

// Hom(Z+(a,b), IC_b[r]) = Hom(IC_b, Z-(a,b)[r])
inline int string_bottom(int a, int b, int r) {
  if (!even(a - b)) return 0;
  return (r >= 0 && r <= 2 * b && even(r)) ? 1 : 0;
}
// Hom(Z+(a,b), IC_a[r]) = Hom(IC_a, Z-(a,b)[r])
inline int string_top(int a, int b, int r) {
  const int top = even(a - b) ? a + b : a - b - 1;
  return (r >= 0 && r <= top && even(r)) ? 1 : 0;
}
// Hom(Z+(a,b), IC_{a+i}[r]), 0 <= i <= n-a
inline int string_top_shift(int a, int b, int i, int r) { return string_top(a, b, r - i); }
// Hom(IC_b, Z+(a,b)[r]) = Hom(Z-(a,b), IC_b[r])
inline int simple_string(int a, int b, int r) {
  if (even(a - b)) return (r >= a - b && r <= a + b && even(r)) ? 1 : 0;
  if (r >= 0 && r <= std::min(2 * b, a - b) && even(r)) return 1;
  if (r >= std::max(2 * b, a - b) && r <= a + b && !even(r)) return 1;
  return 0;
}
// Hom(D_{a-2i}, Z+(a,b)[r]) = Hom(Z-(a,b), N_{a-2i}[r]), 0 <= i < (a-b)/2
inline int standard_string(int i, int r) { return r == 2 * i ? 1 : 0; }
// Hom(Z+(a,b), D_a[r]) = Hom(N_a, Z-(a,b)[r])
inline int string_standard(int a, int b, int r) { return r == (even(a - b) ? a + b : a - b - 1) ? 1 : 0; }
// Hom(Z+(a-2i,b), Z+(a,b)[r]) = Hom(Z-(a,b), Z-(a-2i,b)[r]), 0 <= i <= (a-b)/2
inline int string_string(int a, int b, int i, int r) {
  const int top = even(a - b) ? a + b : a - b - 1;
  return (r >= 2 * i && r <= top && even(r)) ? 1 : 0;
}
// k with End*(Z(a,b)) = k[t]/t^{k+1}
inline int plike_degree(int a, int b) { return even(a - b) ? (a + b) / 2 : (a - b - 1) / 2; }

}  // namespace pervpn::expected
