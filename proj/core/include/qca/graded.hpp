#pragma once

#include <map>
#include <optional>
#include <vector>

#include "qca/quiver.hpp"

namespace qca {

// Degrees are stored doubled: integer degree a has deg2 = 2a, half-integer a has deg2 odd.
struct GradedKey {
  int vertex = 0;  // 1-based
  int deg2 = 0;
  friend auto operator<=>(const GradedKey&, const GradedKey&) = default;
};

// Finitely supported integer function on I x (1/2)Z.
class GradedVector {
 public:
  using Entries = std::map<GradedKey, long long>;

  GradedVector() = default;
  static GradedVector unit(int vertex, int deg2, long long value = 1);

  const Entries& entries() const { return e_; }
  long long get(int vertex, int deg2) const;
  void add(int vertex, int deg2, long long value);
  bool is_zero() const { return e_.empty(); }
  bool nonnegative() const;
  int min_deg2() const;
  int max_deg2() const;
  long long total() const;

  // x[s] with x[s](b) = x(b+s); s given doubled.
  GradedVector shifted(int s2) const;
  long long dot(const GradedVector& o) const;

  GradedVector& operator+=(const GradedVector& o);
  GradedVector& operator-=(const GradedVector& o);
  friend GradedVector operator+(GradedVector a, const GradedVector& b) { return a += b; }
  friend GradedVector operator-(GradedVector a, const GradedVector& b) { return a -= b; }
  friend GradedVector operator*(long long k, const GradedVector& a);
  friend bool operator==(const GradedVector&, const GradedVector&) = default;
  friend auto operator<=>(const GradedVector& a, const GradedVector& b) { return a.e_ <=> b.e_; }

 private:
  Entries e_;
};

// Nonnegative, integer degrees.
class WVector {
 public:
  WVector() = default;
  explicit WVector(GradedVector g);
  // Level-1 vector from w_i(-1) and w_i(0), i = 1..n.
  static WVector level1(const std::vector<long long>& at_minus1, const std::vector<long long>& at_zero);
  static WVector unit(int vertex, int degree) { return WVector(GradedVector::unit(vertex, 2 * degree)); }

  const GradedVector& graded() const { return g_; }
  long long at(int vertex, int degree) const { return g_.get(vertex, 2 * degree); }
  bool is_level1() const;
  long long size() const { return g_.total(); }

  friend WVector operator+(const WVector& a, const WVector& b) { return WVector(a.g_ + b.g_); }
  friend bool operator==(const WVector&, const WVector&) = default;
  friend auto operator<=>(const WVector& a, const WVector& b) { return a.g_ <=> b.g_; }

 private:
  GradedVector g_;
};

// Nonnegative, half-integer degrees.
class VHalfVector {
 public:
  VHalfVector() = default;
  explicit VHalfVector(GradedVector g);
  // v_i(-1/2), i = 1..n.
  static VHalfVector at_minus_half(const std::vector<long long>& v);

  const GradedVector& graded() const { return g_; }
  friend VHalfVector operator+(const VHalfVector& a, const VHalfVector& b) { return VHalfVector(a.g_ + b.g_); }
  friend bool operator==(const VHalfVector&, const VHalfVector&) = default;
  friend auto operator<=>(const VHalfVector& a, const VHalfVector& b) { return a.g_ <=> b.g_; }

 private:
  GradedVector g_;
};

// The q-Cartan matrix of an admissibly numbered quiver.
class QCartan {
 public:
  explicit QCartan(const Quiver& q);

  const Quiver& quiver() const { return q_; }
  int size() const { return q_.size(); }
  long long b(int i, int j) const { return b_[(i - 1) * q_.size() + (j - 1)]; }

  GradedVector apply(const GradedVector& eta) const;
  GradedVector apply(const VHalfVector& v) const { return apply(v.graded()); }

  // Unique finitely supported eta with C_q eta = target, if one exists.
  std::optional<GradedVector> solve(const GradedVector& target) const;

  // C_q^{-1}(e_{k,a}) on degrees up to top2 (doubled), by forward recursion.
  GradedVector inverse_recursive(int k, int a2, int top2) const;
  // Same vector from Euler pairings of Coxeter translates of projectives.
  GradedVector inverse_euler(int k, int a2, int top2) const;
  // C_q^{-1}(w) truncated at degree top2, for any finitely supported w.
  GradedVector inverse_apply(const GradedVector& w, int top2) const;

 private:
  Quiver q_;
  std::vector<long long> b_;
  GradedVector forward(const GradedVector& target, int from2, int top2) const;
};

}  // namespace qca
