#include "rghw/hermitian.hpp"

#include <algorithm>
#include <stdexcept>

namespace rghw {

namespace {

constexpr int kSupportedQ[] = {2, 3, 4, 5, 7, 8, 9, 16};

// mu = i*q + j*(q+1) with 0 <= j < q; i < 0 exactly when mu is a gap.
std::pair<long, long> decompose(long mu, int q) {
  long j = mu % q;
  long i = (mu - j * (q + 1)) / q;
  return {i, j};
}

}  // namespace

long hermitian_correction(int q, int m) {
  long s = 0;
  for (int t = 0; t <= m - 2; ++t) s += q - t;
  return s;
}

long diff_value(int q, int m) {
  NumericalSemigroup h({q, q + 1});
  return hermitian_correction(q, m) - h.element(m);
}

std::vector<long> diff_table(int q) {
  std::vector<long> out;
  for (int m = 3; m <= q + 1; ++m) out.push_back(diff_value(q, m));
  return out;
}

HermitianFamily HermitianFamily::build(int q) {
  if (std::find(std::begin(kSupportedQ), std::end(kSupportedQ), q) ==
      std::end(kSupportedQ))
    throw std::invalid_argument("unsupported q for the Hermitian family");
  const FiniteField& f = FiniteField::get_order(static_cast<Word>(q) * q);
  std::vector<std::pair<Word, Word>> pts;
  for (Word a = 0; a < f.order(); ++a)
    for (Word b = 0; b < f.order(); ++b)
      if (f.norm(a) == f.trace(b)) pts.emplace_back(a, b);
  long n = static_cast<long>(q) * q * q;
  if (static_cast<long>(pts.size()) != n)
    throw std::logic_error("affine point count is not q^3");

  NumericalSemigroup h({static_cast<long>(q), static_cast<long>(q) + 1});
  long c = static_cast<long>(q) * (q - 1);
  auto eval = [&](long lambda) {
    auto [i, j] = decompose(lambda, q);
    GfVector v(n);
    for (long p = 0; p < n; ++p)
      v[p] = f.mul(f.pow(pts[p].first, i), f.pow(pts[p].second, j));
    return v;
  };
  OnePointCodeFamily fam =
      OnePointCodeFamily::build(f, static_cast<int>(n), h, eval, n + 2 * c + q);
  return HermitianFamily(q, std::move(pts), std::move(fam));
}

HermitianRghw HermitianFamily::rghw(long mu1, long mu2, int m) const {
  if (mu2 < -1 || mu2 >= mu1) throw std::invalid_argument("need -1 <= mu2 < mu1");
  HermitianRghw out;
  long mu = mu1 - mu2;
  if (mu <= q_ + 1 && m <= mu)
    out.closed = n() - mu1 + hermitian_correction(q_, m);
  out.best = rghw_bound_onepoint(h_star(), weierstrass(), mu1, mu2, m,
                                 BoundTier::ExactSet);
  out.equality = (conductor() - 1 <= mu2) && (mu1 < n() - conductor());
  return out;
}

GfVector HermitianFamily::evaluate(const WitnessFunction& w) const {
  const FiniteField& f = field();
  GfVector out(n(), 0);
  for (long p = 0; p < n(); ++p) {
    Word v = 1;
    for (Word r : w.x_roots) v = f.mul(v, f.sub(pts_[p].first, r));
    for (Word r : w.y_roots) v = f.mul(v, f.sub(pts_[p].second, r));
    out[p] = v;
  }
  return out;
}

WitnessReport HermitianFamily::witness_functions(long mu1, int m) const {
  long c = conductor();
  if (m < 1 || m > q_ + 1) throw std::invalid_argument("m out of range");
  if (!(mu1 < n() - c && c - 1 < mu1 - (m - 1)))
    throw std::invalid_argument("(mu1, m) outside the witness region");
  auto [i, j] = decompose(mu1, q_);
  if (i < 0) throw std::invalid_argument("mu1 is a gap of the Weierstrass semigroup");

  const FiniteField& f = field();
  std::vector<Word> alpha, beta, gamma;  // Tr = 1 / N != 1 / N = 1, encoding order
  for (Word e = 0; e < f.order(); ++e) {
    if (f.trace(e) == 1) alpha.push_back(e);
    if (f.norm(e) == 1)
      gamma.push_back(e);
    else
      beta.push_back(e);
  }

  WitnessReport rep;
  auto take = [](const std::vector<Word>& src, long count) {
    if (count < 0 || count > static_cast<long>(src.size()))
      throw std::invalid_argument("witness construction out of range");
    return std::vector<Word>(src.begin(), src.begin() + count);
  };
  if (m <= j + 1 && i < static_cast<long>(q_) * q_ - q_) {
    for (int t = 0; t < m; ++t) {
      WitnessFunction w;
      w.x_roots = take(beta, i);
      auto g = take(gamma, t);
      w.x_roots.insert(w.x_roots.end(), g.begin(), g.end());
      w.y_roots = take(alpha, j - t);
      rep.functions.push_back(std::move(w));
    }
  } else if (m >= j + 1 && m <= j + q_) {
    long nb = i - q_ + j;
    for (int t = 0; t < m; ++t) {
      WitnessFunction w;
      w.x_roots = take(beta, nb);
      long ng = (t <= j) ? (q_ - j + t) : (t - j - 1);
      long na = (t <= j) ? (j - t) : (q_ - (t - j));
      auto g = take(gamma, ng);
      w.x_roots.insert(w.x_roots.end(), g.begin(), g.end());
      w.y_roots = take(alpha, na);
      rep.functions.push_back(std::move(w));
    }
  } else {
    throw std::invalid_argument("m exceeds j + q");
  }

  rep.predicted = mu1 - hermitian_correction(q_, m);
  std::vector<GfVector> vals;
  for (const auto& w : rep.functions) vals.push_back(evaluate(w));
  for (long p = 0; p < n(); ++p) {
    bool all_zero = true;
    for (const auto& v : vals)
      if (v[p]) { all_zero = false; break; }
    if (all_zero) ++rep.common_zero_count;
  }
  return rep;
}

GhwReport HermitianFamily::ghw_master(long mu, int m) const {
  if (mu < 0) throw std::invalid_argument("mu must be non-negative");
  int dim = code_dim(mu);
  if (m < 1 || m > dim) throw std::invalid_argument("m out of range");
  const NumericalSemigroup& h = weierstrass();
  long riemann = 0;  // dim L(mu Q) = #{lambda in H : lambda <= mu}
  for (long x = 0; x <= mu; ++x)
    if (h.contains(x)) ++riemann;
  GhwReport rep;
  rep.mu = mu;
  rep.m = m;
  rep.abundance = riemann - dim;
  rep.bound = n() - mu + h.element(m) + rep.abundance;
  long shifted_rho = h.element(static_cast<int>(m + rep.abundance));
  rep.bound_shifted = n() - mu + shifted_rho;
  bool cond1 = std::binary_search(h_star().begin(), h_star().end(), mu);
  long v = n() - mu + shifted_rho;
  bool cond2 = h.contains(v);
  bool cond3 = false;
  if (cond2) {
    auto [i, j] = decompose(v, q_);
    cond3 = (i <= static_cast<long>(q_) * q_ - q_ - 1) || (j == 0);
  }
  rep.equality = cond1 && cond2 && cond3;
  return rep;
}

}  // namespace rghw
