#include "qca/weyl.hpp"

#include <algorithm>
#include <cstdlib>

namespace qca {

namespace {

void check_index(int i, int n) {
  if (i < 1 || i > n) throw Error("invalid_input", "simple reflection index out of range");
}

}  // namespace

RootDatum::RootDatum(const Quiver& q) : c_(q.size(), std::vector<long long>(q.size(), 0)) {
  for (int i = 0; i < q.size(); ++i) c_[i][i] = 2;
  for (const auto& a : q.arrows()) {
    c_[a.source - 1][a.target - 1] -= 1;
    c_[a.target - 1][a.source - 1] -= 1;
  }
}

RootDatum::RootDatum(const IntMatrix& cartan) : c_(cartan.rows(), std::vector<long long>(cartan.cols())) {
  if (cartan.rows() != cartan.cols()) throw Error("invalid_input", "Cartan matrix must be square");
  for (std::size_t i = 0; i < cartan.rows(); ++i)
    for (std::size_t j = 0; j < cartan.cols(); ++j) c_[i][j] = to_ll(cartan(i, j));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i][i] != 2) throw Error("invalid_input", "Cartan diagonal must be 2");
    for (std::size_t j = 0; j < c_.size(); ++j)
      if (c_[i][j] != c_[j][i]) throw Error("invalid_input", "Cartan matrix must be symmetric");
  }
}

long long RootDatum::form(const RootVector& x, const RootVector& y) const {
  long long s = 0;
  for (int i = 0; i < rank(); ++i)
    for (int j = 0; j < rank(); ++j) s += x[i] * c_[i][j] * y[j];
  return s;
}

long long RootDatum::pairing(const RootVector& x, const std::vector<long long>& fundamental) const {
  long long s = 0;
  for (int i = 0; i < rank(); ++i) s += x[i] * fundamental[i];
  return s;
}

long long RootDatum::pairing(const RootVector& x, const Weight& lambda) const {
  return pairing(x, lambda.fundamental) - form(x, lambda.displacement);
}

RootVector RootDatum::reflect(int i, RootVector x) const {
  check_index(i, rank());
  long long h = 0;
  for (int j = 0; j < rank(); ++j) h += c_[i - 1][j] * x[j];
  x[i - 1] -= h;
  return x;
}

Weight RootDatum::reflect(int i, Weight mu) const {
  check_index(i, rank());
  // <h_i, lambda - r> = lambda_i - (C r)_i
  long long h = mu.fundamental[i - 1];
  for (int j = 0; j < rank(); ++j) h -= c_[i - 1][j] * mu.displacement[j];
  mu.displacement[i - 1] += h;
  return mu;
}

RootVector RootDatum::act(const std::vector<int>& word, RootVector x) const {
  for (auto it = word.rbegin(); it != word.rend(); ++it) x = reflect(*it, std::move(x));
  return x;
}

Weight RootDatum::act(const std::vector<int>& word, Weight mu) const {
  for (auto it = word.rbegin(); it != word.rend(); ++it) mu = reflect(*it, std::move(mu));
  return mu;
}

RootVector RootDatum::simple_root(int i) const {
  check_index(i, rank());
  RootVector x(rank(), 0);
  x[i - 1] = 1;
  return x;
}

Weight RootDatum::fundamental_weight(int i) const {
  check_index(i, rank());
  Weight w{std::vector<long long>(rank(), 0), RootVector(rank(), 0)};
  w.fundamental[i - 1] = 1;
  return w;
}

bool is_positive_root_vector(const RootVector& x) {
  return std::all_of(x.begin(), x.end(), [](long long c) { return c >= 0; }) &&
         std::any_of(x.begin(), x.end(), [](long long c) { return c > 0; });
}

std::vector<RootVector> RootDatum::beta_sequence(const std::vector<int>& word) const {
  std::vector<RootVector> out;
  for (std::size_t k = 0; k < word.size(); ++k) {
    std::vector<int> prefix(word.begin(), word.begin() + k);
    RootVector b = act(prefix, simple_root(word[k]));
    if (!is_positive_root_vector(b))
      throw Error("not_reduced", "word is not reduced: beta_" + std::to_string(k + 1) + " is not positive");
    out.push_back(std::move(b));
  }
  return out;
}

bool RootDatum::is_reduced(const std::vector<int>& word) const {
  for (std::size_t k = 0; k < word.size(); ++k) {
    std::vector<int> prefix(word.begin(), word.begin() + k);
    if (!is_positive_root_vector(act(prefix, simple_root(word[k])))) return false;
  }
  return true;
}

bool RootDatum::extends_length(const std::vector<int>& word, int i) const {
  if (!is_reduced(word)) throw Error("not_reduced", "length test needs a reduced word");
  return is_positive_root_vector(act(word, simple_root(i)));
}

TExponents tsys_exponents(const RootDatum& rd, const std::vector<int>& w1, const std::vector<int>& w2, int i) {
  if (!rd.extends_length(w1, i) || !rd.extends_length(w2, i))
    throw Error("length_condition", "l(w s_i) = l(w) + 1 fails for one of the words");
  const Weight pi = rd.fundamental_weight(i);
  const Weight spi = rd.reflect(i, pi);
  const Weight w1pi = rd.act(w1, pi), w2pi = rd.act(w2, pi), w2spi = rd.act(w2, spi);
  // differences of weights sharing lambda are root-lattice vectors r2 - r1
  auto diff = [&](const Weight& x, const Weight& y) {
    RootVector d(rd.rank());
    for (int j = 0; j < rd.rank(); ++j) d[j] = y.displacement[j] - x.displacement[j];
    return d;
  };
  return {rd.pairing(diff(w1pi, w2pi), w2spi), rd.pairing(diff(w1pi, w2spi), w2pi)};
}

TExponents tsys_for_minors(const RootDatum& rd, const std::vector<int>& word, int a, int b) {
  const int len = static_cast<int>(word.size());
  if (a < 1 || b < a || b > len) throw Error("invalid_input", "minor positions out of range");
  if (word[a - 1] != word[b - 1]) throw Error("invalid_input", "minor endpoints carry different letters");
  int am = 0;
  for (int p = a - 1; p >= 1; --p)
    if (word[p - 1] == word[a - 1]) {
      am = p;
      break;
    }
  if (am == 0) throw Error("invalid_input", "the left endpoint has no earlier occurrence");
  std::vector<int> w1(word.begin(), word.begin() + (am - 1));
  std::vector<int> w2(word.begin(), word.begin() + (b - 1));
  return tsys_exponents(rd, w1, w2, word[b - 1]);
}

std::vector<int> coxeter_square_word(int n) {
  std::vector<int> w;
  for (int r = 0; r < 2; ++r)
    for (int i = n; i >= 1; --i) w.push_back(i);
  return w;
}

TExponents tsys_exponents_euler(const Quiver& q, int k) {
  const int n = q.size();
  if (k < 1 || k > n) throw Error("invalid_input", "vertex out of range");
  Grothendieck k0(q);
  // beta_{xi(k)} = [P_k], beta_{xi(k)+n} = c^{-1}[P_k]
  K0Class p = k0.projective(k);
  K0Class cp = k0.coxeter_power(p, -1);
  return {to_ll(-1 - k0.symmetric(p, cp)), 0};
}

}  // namespace qca
