#pragma once

#include <vector>

#include "qca/matrix.hpp"

namespace qca {

// Vertices are 1-based throughout the public API.
struct Arrow {
  int source = 0;
  int target = 0;
  friend auto operator<=>(const Arrow&, const Arrow&) = default;
};

// An acyclic quiver whose numbering is admissible: every arrow i->j has i<j.
class Quiver {
 public:
  Quiver() = default;
  Quiver(int n, std::vector<Arrow> arrows);

  int size() const { return n_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  int arrow_count(int i, int j) const;
  IntMatrix exchange_matrix() const;  // n x n, b_ij = #(i->j) - #(j->i)

  friend bool operator==(const Quiver&, const Quiver&) = default;

 private:
  int n_ = 0;
  std::vector<Arrow> arrows_;
};

// Relabels an acyclic quiver admissibly. `order[k]` is the old label of new vertex k+1.
struct Renumbering {
  Quiver quiver;
  std::vector<int> order;
};
Renumbering admissible_renumbering(int n, const std::vector<Arrow>& arrows);

// Vertices n+1..m are frozen.
class IceQuiver {
 public:
  IceQuiver() = default;
  IceQuiver(int m, int n, std::vector<Arrow> arrows);

  int total() const { return m_; }
  int mutable_count() const { return n_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  bool has_frozen_frozen_arrow() const;

  friend bool operator==(const IceQuiver&, const IceQuiver&) = default;

 private:
  int m_ = 0, n_ = 0;
  std::vector<Arrow> arrows_;
};

IceQuiver build_z(const Quiver& q, int level);
IntMatrix b_matrix(const IceQuiver& iq);       // m x n
IntMatrix full_b_matrix(const IceQuiver& iq);  // m x m
IntMatrix b_matrix(const Quiver& q);           // n x n
IntMatrix lambda_z(const IceQuiver& iq);
IntMatrix path_count_matrix(const Quiver& q);

// Class in K0(mod CQ) in the basis of simples.
class K0Class {
 public:
  K0Class() = default;
  explicit K0Class(std::size_t n) : c_(n) {}
  explicit K0Class(std::vector<Int> c) : c_(std::move(c)) {}
  static K0Class from(const std::vector<long long>& c);
  static K0Class simple(std::size_t n, int i);  // alpha_i, 1-based

  std::size_t size() const { return c_.size(); }
  Int& operator[](std::size_t i) { return c_[i]; }
  const Int& operator[](std::size_t i) const { return c_[i]; }
  const std::vector<Int>& coords() const { return c_; }

  K0Class& operator+=(const K0Class& o);
  K0Class& operator-=(const K0Class& o);
  friend K0Class operator+(K0Class a, const K0Class& b) { return a += b; }
  friend K0Class operator-(K0Class a, const K0Class& b) { return a -= b; }
  friend K0Class operator*(const Int& k, K0Class a);
  friend bool operator==(const K0Class&, const K0Class&) = default;
  friend auto operator<=>(const K0Class& a, const K0Class& b) { return a.c_ <=> b.c_; }

 private:
  std::vector<Int> c_;
};

// Euler form, Coxeter transformation and projective/injective classes of CQ-modules.
class Grothendieck {
 public:
  explicit Grothendieck(const Quiver& q);

  const Quiver& quiver() const { return q_; }
  int size() const { return q_.size(); }
  const IntMatrix& euler_matrix() const { return e_; }
  const IntMatrix& coxeter_matrix() const { return c_; }
  const IntMatrix& coxeter_inverse_matrix() const { return cinv_; }

  Int euler(const K0Class& d, const K0Class& e) const;
  Int symmetric(const K0Class& x, const K0Class& y) const;
  Int antisymmetric(const K0Class& x, const K0Class& y) const;
  K0Class coxeter_power(const K0Class& x, int k) const;
  K0Class projective(int i) const;
  K0Class injective(int i) const;

 private:
  Quiver q_;
  IntMatrix e_, c_, cinv_;
};

Int euler_form(const Quiver& q, const K0Class& d, const K0Class& e);
K0Class coxeter_power(const Quiver& q, const K0Class& x, int k);

}  // namespace qca
