#include "qca/rep.hpp"

#include <random>

namespace qca {

namespace {

struct Path {
  int source = 0, target = 0;
  std::vector<int> arrows;  // indices into quiver.arrows(), in order
};

std::vector<Path> all_paths(const Quiver& q) {
  std::vector<Path> out;
  std::vector<Path> stack;
  for (int v = 1; v <= q.size(); ++v) stack.push_back({v, v, {}});
  while (!stack.empty()) {
    Path p = std::move(stack.back());
    stack.pop_back();
    for (std::size_t k = 0; k < q.arrows().size(); ++k) {
      if (q.arrows()[k].source != p.target) continue;
      Path next = p;
      next.target = q.arrows()[k].target;
      next.arrows.push_back(static_cast<int>(k));
      stack.push_back(std::move(next));
    }
    out.push_back(std::move(p));
  }
  return out;
}

int index_of(const std::vector<const Path*>& basis, const Path& p) {
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (basis[i]->source == p.source && basis[i]->arrows == p.arrows) return static_cast<int>(i);
  throw Error("internal", "path not found in basis");
}

}  // namespace

template <class F>
int Representation<F>::total_dim() const {
  int s = 0;
  for (int d : dims) s += d;
  return s;
}

template <class F>
void Representation<F>::validate() const {
  if (static_cast<int>(dims.size()) != quiver.size()) throw Error("invalid_input", "dimension vector length mismatch");
  if (maps.size() != quiver.arrows().size()) throw Error("invalid_input", "one matrix per arrow is required");
  for (std::size_t k = 0; k < maps.size(); ++k) {
    const auto& a = quiver.arrows()[k];
    if (maps[k].rows() != static_cast<std::size_t>(dims[a.source - 1]) ||
        maps[k].cols() != static_cast<std::size_t>(dims[a.target - 1]))
      throw Error("invalid_input", "matrix shape does not match the dimension vector");
  }
  for (int d : dims)
    if (d < 0) throw Error("invalid_input", "negative dimension");
}

template <class F>
Representation<F> zero_representation(const Quiver& q, F field) {
  Representation<F> r{q, field, std::vector<int>(q.size(), 0), {}};
  for (std::size_t k = 0; k < q.arrows().size(); ++k) r.maps.emplace_back(field, 0, 0);
  return r;
}

template <class F>
Representation<F> direct_sum(const Representation<F>& a, const Representation<F>& b) {
  Representation<F> r{a.quiver, a.field, {}, {}};
  for (std::size_t j = 0; j < a.dims.size(); ++j) r.dims.push_back(a.dims[j] + b.dims[j]);
  for (std::size_t k = 0; k < a.maps.size(); ++k) {
    const auto& x = a.maps[k];
    const auto& y = b.maps[k];
    DenseMatrix<F> m(a.field, x.rows() + y.rows(), x.cols() + y.cols());
    for (std::size_t i = 0; i < x.rows(); ++i)
      for (std::size_t j = 0; j < x.cols(); ++j) m(i, j) = x(i, j);
    for (std::size_t i = 0; i < y.rows(); ++i)
      for (std::size_t j = 0; j < y.cols(); ++j) m(x.rows() + i, x.cols() + j) = y(i, j);
    r.maps.push_back(std::move(m));
  }
  return r;
}

RationalRep build_injective(const Quiver& q, int i) {
  if (i < 1 || i > q.size()) throw Error("invalid_input", "vertex out of range");
  // basis at j: paths i -> j; the map along a: l -> j removes a trailing a
  auto paths = all_paths(q);
  std::vector<std::vector<const Path*>> basis(q.size() + 1);
  for (const auto& p : paths)
    if (p.source == i) basis[p.target].push_back(&p);
  RationalRep r{q, {}, {}, {}};
  for (int j = 1; j <= q.size(); ++j) r.dims.push_back(static_cast<int>(basis[j].size()));
  for (std::size_t k = 0; k < q.arrows().size(); ++k) {
    const auto& a = q.arrows()[k];
    DenseMatrix<RationalField> m({}, basis[a.source].size(), basis[a.target].size());
    for (std::size_t c = 0; c < basis[a.target].size(); ++c) {
      const Path& p = *basis[a.target][c];
      if (p.arrows.empty() || p.arrows.back() != static_cast<int>(k)) continue;
      Path shorter{p.source, a.source, std::vector<int>(p.arrows.begin(), p.arrows.end() - 1)};
      m(index_of(basis[a.source], shorter), c) = 1;
    }
    r.maps.push_back(std::move(m));
  }
  return r;
}

RationalRep build_projective(const Quiver& q, int i) {
  if (i < 1 || i > q.size()) throw Error("invalid_input", "vertex out of range");
  // basis at j: paths j -> i; the map along a: l -> j prepends a
  auto paths = all_paths(q);
  std::vector<std::vector<const Path*>> basis(q.size() + 1);
  for (const auto& p : paths)
    if (p.target == i) basis[p.source].push_back(&p);
  RationalRep r{q, {}, {}, {}};
  for (int j = 1; j <= q.size(); ++j) r.dims.push_back(static_cast<int>(basis[j].size()));
  for (std::size_t k = 0; k < q.arrows().size(); ++k) {
    const auto& a = q.arrows()[k];
    DenseMatrix<RationalField> m({}, basis[a.source].size(), basis[a.target].size());
    for (std::size_t c = 0; c < basis[a.target].size(); ++c) {
      const Path& p = *basis[a.target][c];
      Path longer{a.source, i, {static_cast<int>(k)}};
      longer.arrows.insert(longer.arrows.end(), p.arrows.begin(), p.arrows.end());
      m(index_of(basis[a.source], longer), c) = 1;
    }
    r.maps.push_back(std::move(m));
  }
  return r;
}

RationalRep build_simple(const Quiver& q, int i) {
  if (i < 1 || i > q.size()) throw Error("invalid_input", "vertex out of range");
  RationalRep r{q, {}, std::vector<int>(q.size(), 0), {}};
  r.dims[i - 1] = 1;
  for (const auto& a : q.arrows())
    r.maps.emplace_back(RationalField{}, r.dims[a.source - 1], r.dims[a.target - 1]);
  return r;
}

RationalRep injective_sum(const Quiver& q, const std::vector<long long>& mult) {
  RationalRep r = zero_representation<RationalField>(q);
  for (std::size_t i = 0; i < mult.size(); ++i) {
    if (mult[i] < 0) throw Error("invalid_input", "negative multiplicity");
    if (mult[i] == 0) continue;
    RationalRep inj = build_injective(q, static_cast<int>(i) + 1);
    for (long long c = 0; c < mult[i]; ++c) r = direct_sum(r, inj);
  }
  return r;
}

template <class F>
std::vector<Morphism<F>> hom_space(const Representation<F>& m, const Representation<F>& n) {
  const F f = m.field;
  const int nv = m.quiver.size();
  std::vector<std::size_t> offset(nv + 1, 0);
  for (int j = 0; j < nv; ++j) offset[j + 1] = offset[j] + static_cast<std::size_t>(n.dims[j]) * m.dims[j];
  auto var = [&](int vertex, std::size_t r, std::size_t c) {
    return offset[vertex - 1] + r * m.dims[vertex - 1] + c;
  };
  std::size_t eqs = 0;
  for (const auto& a : m.quiver.arrows()) eqs += static_cast<std::size_t>(n.dims[a.source - 1]) * m.dims[a.target - 1];
  DenseMatrix<F> sys(f, eqs, offset[nv]);
  std::size_t row = 0;
  for (std::size_t k = 0; k < m.quiver.arrows().size(); ++k) {
    const auto& a = m.quiver.arrows()[k];
    const int s = a.source, t = a.target;
    // N_a phi_t - phi_s M_a = 0
    for (int r = 0; r < n.dims[s - 1]; ++r)
      for (int c = 0; c < m.dims[t - 1]; ++c, ++row) {
        for (int u = 0; u < n.dims[t - 1]; ++u)
          sys(row, var(t, u, c)) = f.add(sys(row, var(t, u, c)), n.maps[k](r, u));
        for (int u = 0; u < m.dims[s - 1]; ++u)
          sys(row, var(s, r, u)) = f.sub(sys(row, var(s, r, u)), m.maps[k](u, c));
      }
  }
  DenseMatrix<F> basis = nullspace(sys);
  std::vector<Morphism<F>> out;
  for (std::size_t b = 0; b < basis.cols(); ++b) {
    Morphism<F> phi;
    for (int j = 1; j <= nv; ++j) {
      DenseMatrix<F> x(f, n.dims[j - 1], m.dims[j - 1]);
      for (int r = 0; r < n.dims[j - 1]; ++r)
        for (int c = 0; c < m.dims[j - 1]; ++c) x(r, c) = basis(var(j, r, c), b);
      phi.push_back(std::move(x));
    }
    out.push_back(std::move(phi));
  }
  return out;
}

template <class F>
int hom_dim(const Representation<F>& m, const Representation<F>& n) {
  return static_cast<int>(hom_space(m, n).size());
}

long long euler_op(const Quiver& q, const std::vector<int>& d, const std::vector<int>& e) {
  long long s = 0;
  for (int i = 0; i < q.size(); ++i) s += static_cast<long long>(d[i]) * e[i];
  // Q^op has an arrow t -> s for each arrow s -> t of Q
  for (const auto& a : q.arrows()) s -= static_cast<long long>(d[a.target - 1]) * e[a.source - 1];
  return s;
}

template <class F>
int ext1_dim(const Representation<F>& m, const Representation<F>& n) {
  return static_cast<int>(hom_dim(m, n) - euler_op(m.quiver, m.dims, n.dims));
}

template <class F>
bool is_rigid(const Representation<F>& m) {
  return ext1_dim(m, m) == 0;
}

template <class F>
Representation<F> kernel(const Representation<F>& m, const Representation<F>& n, const Morphism<F>& z) {
  (void)n;
  const F f = m.field;
  const int nv = m.quiver.size();
  std::vector<DenseMatrix<F>> inc;
  Representation<F> k{m.quiver, f, {}, {}};
  for (int j = 0; j < nv; ++j) {
    inc.push_back(nullspace(z[j]));
    k.dims.push_back(static_cast<int>(inc.back().cols()));
  }
  for (std::size_t a = 0; a < m.quiver.arrows().size(); ++a) {
    const auto& arr = m.quiver.arrows()[a];
    DenseMatrix<F> image = mul(m.maps[a], inc[arr.target - 1]);
    auto x = solve_unique(inc[arr.source - 1], image);
    if (!x) throw Error("internal", "kernel is not a subrepresentation");
    k.maps.push_back(std::move(*x));
  }
  return k;
}

std::optional<ModularRep> reduce_mod(const RationalRep& m, std::int64_t p) {
  PrimeField f{p};
  ModularRep r{m.quiver, f, m.dims, {}};
  Int pz(static_cast<long>(p));
  for (const auto& x : m.maps) {
    DenseMatrix<PrimeField> y(f, x.rows(), x.cols());
    for (std::size_t i = 0; i < x.rows(); ++i)
      for (std::size_t j = 0; j < x.cols(); ++j) {
        const Rat& q = x(i, j);
        Int den = q.get_den() % pz;
        if (den == 0) return std::nullopt;
        Int num = q.get_num() % pz;
        if (num < 0) num += pz;
        y(i, j) = f.mul(num.get_si(), f.inv(den.get_si()));
      }
    r.maps.push_back(std::move(y));
  }
  return r;
}

GenericKernel generic_kernel(const Quiver& q, const WVector& w, const GenericOptions& opt) {
  if (!w.is_level1()) throw Error("outside_level1", "generic kernels need a level-1 vector");
  const int n = q.size();
  std::vector<long long> minus(n), zero(n);
  for (int i = 1; i <= n; ++i) {
    minus[i - 1] = w.at(i, -1);
    zero[i - 1] = w.at(i, 0);
  }
  RationalRep dom = injective_sum(q, minus), cod = injective_sum(q, zero);
  auto basis = hom_space(dom, cod);
  // integral spanning set
  for (auto& phi : basis) {
    Int l = 1;
    for (const auto& x : phi)
      for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j) l = lcm(l, Int(x(i, j).get_den()));
    for (auto& x : phi)
      for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j) x(i, j) *= l;
  }
  std::mt19937_64 rng(opt.rng_seed);
  std::uniform_int_distribution<int> coeff(-opt.coefficient_bound, opt.coefficient_bound);
  GenericKernel best;
  best.rng_seed = opt.rng_seed;
  int best_total = -1, hits = 0;
  for (int s = 0; s < std::max(1, opt.batch); ++s) {
    Morphism<RationalField> z;
    for (int j = 0; j < n; ++j) z.emplace_back(RationalField{}, cod.dims[j], dom.dims[j]);
    for (const auto& phi : basis) {
      Rat c = coeff(rng);
      for (int j = 0; j < n; ++j)
        for (std::size_t r = 0; r < phi[j].rows(); ++r)
          for (std::size_t col = 0; col < phi[j].cols(); ++col) z[j](r, col) += c * phi[j](r, col);
    }
    RationalRep k = kernel(dom, cod, z);
    int total = k.total_dim();
    if (best_total < 0 || total < best_total) {
      best_total = total;
      best.module = std::move(k);
      best.dims = best.module.dims;
      hits = 1;
    } else if (total == best_total) {
      ++hits;
    }
  }
  best.confirmed = hits >= 2 || opt.batch <= 1 || basis.empty();
  return best;
}

#define QCA_INSTANTIATE(F)                                                                             \
  template struct Representation<F>;                                                                   \
  template Representation<F> zero_representation<F>(const Quiver&, F);                                 \
  template Representation<F> direct_sum<F>(const Representation<F>&, const Representation<F>&);        \
  template std::vector<Morphism<F>> hom_space<F>(const Representation<F>&, const Representation<F>&); \
  template int hom_dim<F>(const Representation<F>&, const Representation<F>&);                         \
  template int ext1_dim<F>(const Representation<F>&, const Representation<F>&);                        \
  template bool is_rigid<F>(const Representation<F>&);                                                  \
  template Representation<F> kernel<F>(const Representation<F>&, const Representation<F>&, const Morphism<F>&);

QCA_INSTANTIATE(RationalField)
QCA_INSTANTIATE(PrimeField)

}  // namespace qca
