#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qca/graded.hpp"
#include "qca/linalg.hpp"
#include "qca/quiver.hpp"

namespace qca {

// A representation of Q^op. For each arrow a: s -> t of Q the stored map goes M_t -> M_s,
// as a dims[s] x dims[t] matrix; maps[k] belongs to quiver.arrows()[k].
template <class F>
struct Representation {
  Quiver quiver;
  F field{};
  std::vector<int> dims;
  std::vector<DenseMatrix<F>> maps;

  int total_dim() const;
  void validate() const;
};

using RationalRep = Representation<RationalField>;
using ModularRep = Representation<PrimeField>;

// A morphism is one matrix per vertex (target dim x source dim).
template <class F>
using Morphism = std::vector<DenseMatrix<F>>;

template <class F>
Representation<F> zero_representation(const Quiver& q, F field = {});
template <class F>
Representation<F> direct_sum(const Representation<F>& a, const Representation<F>& b);

RationalRep build_injective(const Quiver& q, int i);
RationalRep build_projective(const Quiver& q, int i);
RationalRep build_simple(const Quiver& q, int i);
// sum_i mult[i] copies of the injective at i
RationalRep injective_sum(const Quiver& q, const std::vector<long long>& mult);

template <class F>
std::vector<Morphism<F>> hom_space(const Representation<F>& m, const Representation<F>& n);
template <class F>
int hom_dim(const Representation<F>& m, const Representation<F>& n);
// Euler form of Q^op on dimension vectors.
long long euler_op(const Quiver& q, const std::vector<int>& d, const std::vector<int>& e);
template <class F>
int ext1_dim(const Representation<F>& m, const Representation<F>& n);
template <class F>
bool is_rigid(const Representation<F>& m);

// Kernel of a morphism m -> n as a subrepresentation of m.
template <class F>
Representation<F> kernel(const Representation<F>& m, const Representation<F>& n, const Morphism<F>& z);

// Reduction modulo p; nullopt when p divides a denominator.
std::optional<ModularRep> reduce_mod(const RationalRep& m, std::int64_t p);

struct GenericOptions {
  std::uint64_t rng_seed = 20240601;
  int batch = 5;
  int coefficient_bound = 10;
  int attempts = 200;  // reseeds allowed when a kernel is not polynomial-count
};

struct GenericKernel {
  RationalRep module;
  std::vector<int> dims;
  bool confirmed = false;  // the minimal dimension vector was attained more than once
  std::uint64_t rng_seed = 0;
};

// Kernel of a random morphism I^{w(-1)} -> I^{w(0)}, minimal over a batch of samples.
GenericKernel generic_kernel(const Quiver& q, const WVector& w, const GenericOptions& opt = {});

}  // namespace qca
