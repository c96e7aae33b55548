#pragma once

#include <compare>
#include <string>

namespace ywall {

// Weights of U_q'(A_2^(2)) modulo the null direction, in the basis
// {cl(Lambda_0), cl(Lambda_1)}.
struct ClassicalWeight {
  int c0 = 0;
  int c1 = 0;

  friend constexpr auto operator<=>(const ClassicalWeight&, const ClassicalWeight&) = default;

  constexpr ClassicalWeight& operator+=(const ClassicalWeight& o) {
    c0 += o.c0;
    c1 += o.c1;
    return *this;
  }
  constexpr ClassicalWeight& operator-=(const ClassicalWeight& o) {
    c0 -= o.c0;
    c1 -= o.c1;
    return *this;
  }
  friend constexpr ClassicalWeight operator+(ClassicalWeight a, const ClassicalWeight& b) { return a += b; }
  friend constexpr ClassicalWeight operator-(ClassicalWeight a, const ClassicalWeight& b) { return a -= b; }
  friend constexpr ClassicalWeight operator*(int k, const ClassicalWeight& w) { return {k * w.c0, k * w.c1}; }
  friend constexpr ClassicalWeight operator-(const ClassicalWeight& w) { return {-w.c0, -w.c1}; }
};

// Affine weight c0*Lambda_0 + c1*Lambda_1 + cd*(delta/2).
//
// delta/2 rather than delta generates the null direction because d_0 = 2 for
// A_2^(2); with this basis every root, every weight of B(lambda) and every
// Young wall weight has integer coordinates.
struct Weight {
  int c0 = 0;
  int c1 = 0;
  int cd = 0;

  friend constexpr auto operator<=>(const Weight&, const Weight&) = default;

  constexpr Weight& operator+=(const Weight& o) {
    c0 += o.c0;
    c1 += o.c1;
    cd += o.cd;
    return *this;
  }
  constexpr Weight& operator-=(const Weight& o) {
    c0 -= o.c0;
    c1 -= o.c1;
    cd -= o.cd;
    return *this;
  }
  friend constexpr Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend constexpr Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend constexpr Weight operator*(int k, const Weight& w) { return {k * w.c0, k * w.c1, k * w.cd}; }
  friend constexpr Weight operator-(const Weight& w) { return {-w.c0, -w.c1, -w.cd}; }

  constexpr ClassicalWeight classical() const { return {c0, c1}; }
};

// Lift with zero null-direction component.
constexpr Weight as_weight(const ClassicalWeight& w) { return {w.c0, w.c1, 0}; }
constexpr Weight as_weight(const Weight& w) { return w; }

inline constexpr Weight kLambda0{1, 0, 0};
inline constexpr Weight kLambda1{0, 1, 0};
inline constexpr Weight kHalfDelta{0, 0, 1};
// <h_i, alpha_j> = a_ij with A = [[2, -4], [-1, 2]] and alpha_0(d) = 1.
inline constexpr Weight kAlpha0{2, -1, 1};
inline constexpr Weight kAlpha1{-4, 2, 0};
inline constexpr Weight kDelta{0, 0, 2};

inline constexpr int kCartan[2][2] = {{2, -4}, {-1, 2}};

// Simple root alpha_i; throws DomainError unless i is 0 or 1.
Weight simple_root(int i);

// <h_i, w>. The null direction pairs to zero.
int pair(int i, const Weight& w);
int pair(int i, const ClassicalWeight& w);

// <c, w> with c = h_0 + 2 h_1.
int level(const Weight& w);
int level(const ClassicalWeight& w);

// (l - 2a) Lambda_0 + a Lambda_1, the level-l dominant weights.
// Throws DomainError unless l >= 1 and 0 <= a <= floor(l/2).
Weight dominant(int l, int a);

bool is_dominant(const Weight& w);

// "2L0+L1-3d/2" style text.
std::string to_string(const Weight& w);
std::string to_string(const ClassicalWeight& w);

}  // namespace ywall
