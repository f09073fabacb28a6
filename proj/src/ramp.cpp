#include "rghw/ramp.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "rghw/combinatorics.hpp"

namespace rghw {

namespace {

GfMatrix transpose(const GfMatrix& m) {
  GfMatrix t(m.field(), m.cols(), m.rows());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) t.at(c, r) = m.at(r, c);
  return t;
}

// Reduce v against the reduced rows in work; append if independent.
// Returns true when the rank grew.
bool absorb(GfMatrix& work, std::vector<int>& lead, const GfVector& v) {
  const FiniteField& f = work.field();
  GfVector r = v;
  int n = work.cols();
  for (int i = 0; i < work.rows(); ++i) {
    Word c = r[lead[i]];
    if (c) {
      Word scale = f.neg(c);
      for (int j = 0; j < n; ++j)
        if (work.at(i, j)) r[j] = f.add(r[j], f.mul(scale, work.at(i, j)));
    }
  }
  int pivot = -1;
  for (int j = 0; j < n; ++j)
    if (r[j]) { pivot = j; break; }
  if (pivot < 0) return false;
  Word inv = f.inv(r[pivot]);
  GfMatrix grown(f, work.rows() + 1, n);
  for (int i = 0; i < work.rows(); ++i)
    std::copy(work.row(i), work.row(i) + n, grown.row(i));
  for (int j = 0; j < n; ++j) grown.at(work.rows(), j) = f.mul(inv, r[j]);
  work = std::move(grown);
  lead.push_back(pivot);
  return true;
}

}  // namespace

RampScheme RampScheme::make(LinearCode c1, LinearCode c2) {
  if (&c1.field() != &c2.field() || c1.length() != c2.length())
    throw std::invalid_argument("code pair mismatch");
  if (!c1.contains(c2) || c1.dim() == c2.dim())
    throw std::invalid_argument("need C2 strictly contained in C1");
  const FiniteField& f = c1.field();
  int n = c1.length();
  int ell = c1.dim() - c2.dim();

  // complement basis: rows of C1's generator that are independent of C2
  GfMatrix work(f, 0, n);
  std::vector<int> lead;
  for (int i = 0; i < c2.dim(); ++i)
    absorb(work, lead, GfVector(c2.generator().row(i), c2.generator().row(i) + n));
  GfMatrix l(f, ell, n);
  int taken = 0;
  for (int i = 0; i < c1.dim() && taken < ell; ++i) {
    GfVector row(c1.generator().row(i), c1.generator().row(i) + n);
    if (absorb(work, lead, row))
      std::copy(row.begin(), row.end(), l.row(taken++));
  }
  if (taken != ell) throw std::logic_error("complement completion failed");
  GfMatrix bmat = l.vstack(c2.generator());
  return RampScheme(std::move(c1), std::move(c2), std::move(l), std::move(bmat));
}

GfVector RampScheme::psi(const GfVector& secret) const {
  if (static_cast<int>(secret.size()) != ell())
    throw std::invalid_argument("secret length mismatch");
  const FiniteField& f = field();
  GfVector out(length(), 0);
  for (int i = 0; i < ell(); ++i)
    if (secret[i])
      for (int j = 0; j < length(); ++j)
        out[j] = f.add(out[j], f.mul(secret[i], l_.at(i, j)));
  return out;
}

GfVector RampScheme::extract_secret(const GfVector& word) const {
  auto coords = linalg::solve_left(bmat_, word);
  if (!coords) throw std::invalid_argument("word is not in C1");
  return GfVector(coords->begin(), coords->begin() + ell());
}

GfVector RampScheme::share(const GfVector& secret, std::uint64_t seed) const {
  const FiniteField& f = field();
  GfVector out = psi(secret);
  std::mt19937_64 rng(seed);
  for (int i = 0; i < c2_.dim(); ++i) {
    Word coeff = static_cast<Word>(rng() % f.order());
    if (coeff)
      for (int j = 0; j < length(); ++j)
        out[j] = f.add(out[j], f.mul(coeff, c2_.generator().at(i, j)));
  }
  return out;
}

RampScheme::Reconstruction RampScheme::reconstruct(
    const std::vector<std::pair<int, Word>>& observed) const {
  const FiniteField& f = field();
  std::vector<int> idx;
  GfVector obs;
  for (auto [i, v] : observed) {
    if (i < 0 || i >= length()) throw std::invalid_argument("share index out of range");
    if (v >= f.order()) throw std::invalid_argument("share value out of range");
    if (std::find(idx.begin(), idx.end(), i) != idx.end())
      throw std::invalid_argument("duplicate share index");
    idx.push_back(i);
    obs.push_back(v);
  }
  // order columns ascending so the system matches CoordinateSet conventions
  std::vector<int> perm(idx.size());
  for (size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
  std::sort(perm.begin(), perm.end(), [&](int a, int b) { return idx[a] < idx[b]; });
  std::vector<int> sidx(idx.size());
  GfVector sobs(idx.size());
  for (size_t i = 0; i < perm.size(); ++i) {
    sidx[i] = idx[perm[i]];
    sobs[i] = obs[perm[i]];
  }

  GfMatrix m = bmat_.select_columns(sidx);  // k1 x |I|
  auto a0 = linalg::solve_left(m, sobs);
  if (!a0) throw std::invalid_argument("observations are not consistent with any share");
  GfMatrix kernel = linalg::right_kernel(transpose(m));  // rows a with a*m = 0

  Reconstruction rec;
  rec.base_secret.assign(a0->begin(), a0->begin() + ell());
  GfMatrix amb(f, kernel.rows(), ell());
  for (int i = 0; i < kernel.rows(); ++i)
    for (int j = 0; j < ell(); ++j) amb.at(i, j) = kernel.at(i, j);
  int rank = linalg::rref(amb);
  GfMatrix trimmed(f, rank, ell());
  for (int i = 0; i < rank; ++i)
    std::copy(amb.row(i), amb.row(i) + ell(), trimmed.row(i));
  rec.ambiguity = std::move(trimmed);
  rec.determined = ell() - rank;
  return rec;
}

int RampScheme::mutual_information(const CoordinateSet& i) const {
  if (i.length() != length()) throw std::invalid_argument("coordinate set length mismatch");
  CoordinateSet comp(length(), i.complement());
  int eq2 = ell() - shortened_dim_quotient(c1_, c2_, comp);
  int eq3 = shortened_dim_quotient(c2_.dual(), c1_.dual(), i);
  if (eq2 != eq3) throw std::logic_error("mutual information formulas disagree");
  return eq2;
}

LeakageProfile RampScheme::profile_oracle(const OracleConfig& cfg) const {
  LeakageProfile p;
  p.ell = ell();
  LinearCode d1 = c2_.dual(), d2 = c1_.dual();
  for (int m = 1; m <= p.ell; ++m) {
    p.t.push_back(rghw_oracle(d1, d2, m, cfg) - 1);
    p.r.push_back(length() - rghw_oracle(c1_, c2_, p.ell - m + 1, cfg) + 1);
    p.t_tag.push_back(ProvenanceTag::Exact);
    p.r_tag.push_back(ProvenanceTag::Exact);
  }
  return p;
}

AccessSlice access_structure(const RampScheme& s, int m, int d) {
  int n = s.length();
  if (n > 16) throw std::invalid_argument("access structure enumeration capped at n = 16");
  if (m < 0 || m > s.ell() || d < 0 || d > n)
    throw std::invalid_argument("parameters out of range");
  auto mi_of = [&](const std::vector<int>& set) {
    return s.mutual_information(CoordinateSet(n, set));
  };
  AccessSlice slice;
  std::vector<int> comb(d);
  for (int i = 0; i < d; ++i) comb[i] = i;
  bool more = d <= n;
  if (d == 0) {
    if (mi_of({}) == m) slice.all.push_back({});
    more = false;
  }
  while (more) {
    if (mi_of(comb) == m) slice.all.push_back(comb);
    more = next_combination(comb, n);
  }
  for (const auto& set : slice.all) {
    bool minimal = true;
    for (size_t drop = 0; drop < set.size() && minimal; ++drop) {
      std::vector<int> sub;
      for (size_t i = 0; i < set.size(); ++i)
        if (i != drop) sub.push_back(set[i]);
      if (mi_of(sub) == m) minimal = false;
    }
    if (minimal) slice.minimal.push_back(set);
    bool maximal = true;
    for (int e = 0; e < n && maximal; ++e) {
      if (std::binary_search(set.begin(), set.end(), e)) continue;
      std::vector<int> sup = set;
      sup.insert(std::lower_bound(sup.begin(), sup.end(), e), e);
      if (mi_of(sup) == m) maximal = false;
    }
    if (maximal) slice.maximal.push_back(set);
  }
  return slice;
}

long ramp_g1(int q, int m) { return hermitian_correction(q, m); }

long ramp_g2(int q, long mu_tilde, int m) {
  long c = static_cast<long>(q) * (q - 1);
  return c + mu_tilde - 1 - hermitian_correction(q, static_cast<int>(mu_tilde) - m + 1);
}

LeakageProfile hermitian_profile_closed(int q, long mu, long mu_tilde) {
  long n = static_cast<long>(q) * q * q;
  long c = static_cast<long>(q) * (q - 1);
  if (mu_tilde < 1 || mu_tilde > q + 1)
    throw std::invalid_argument("mu_tilde out of range");
  if (!(c - 1 + mu_tilde <= mu && mu <= n - 1))
    throw std::invalid_argument("mu outside the closed-profile region");
  bool exact = (2 * c - 2 + mu_tilde < mu) && (mu < n - c);
  LeakageProfile p;
  p.ell = static_cast<int>(mu_tilde);
  for (int m = 1; m <= p.ell; ++m) {
    p.t.push_back(n - mu + ramp_g1(q, m) - 1);
    p.r.push_back(n - mu + ramp_g2(q, mu_tilde, m));
    p.t_tag.push_back(exact ? ProvenanceTag::Exact : ProvenanceTag::Bound);
    p.r_tag.push_back(exact ? ProvenanceTag::Exact : ProvenanceTag::Bound);
  }
  return p;
}

LeakageProfile hermitian_profile_bound(const HermitianFamily& fam, long mu1, long mu2) {
  long n = fam.n(), c = fam.conductor();
  int ell = fam.code_dim(mu1) - (mu2 < 0 ? 0 : fam.code_dim(mu2));
  if (ell < 1) throw std::invalid_argument("code pair has zero codimension");
  LeakageProfile p;
  p.ell = ell;

  long d2 = n + c - 2 - mu2;  // pole order of C2's dual
  long d1 = n + c - 2 - mu1;  // pole order of C1's dual
  auto nd2 = fam.normalize_mu(d2);
  auto nd1o = fam.normalize_mu(d1);
  long nd1 = nd1o ? *nd1o : -1;
  if (!nd2) throw std::invalid_argument("dual pair degenerates");
  for (int m = 1; m <= ell; ++m) {
    auto prim = fam.rghw(mu1, mu2, m);
    p.t.push_back(prim.best - 1);
    p.t_tag.push_back(prim.equality ? ProvenanceTag::Exact : ProvenanceTag::Bound);
    long dual_bound = rghw_bound_onepoint(fam.h_star(), fam.weierstrass(), *nd2, nd1,
                                          ell - m + 1, BoundTier::ExactSet);
    p.r.push_back(n - dual_bound + 1);
    bool dual_eq = (c - 1 <= nd1) && (*nd2 < n - c);
    p.r_tag.push_back(dual_eq ? ProvenanceTag::Exact : ProvenanceTag::Bound);
  }
  return p;
}

RampScheme hermitian_scheme(const HermitianFamily& fam, long mu1, long mu2) {
  LinearCode c2 = mu2 < 0 ? LinearCode::zero(fam.field(), static_cast<int>(fam.n()))
                          : fam.code(mu2);
  return RampScheme::make(fam.code(mu1), std::move(c2));
}

MdsScheme mds_scheme(const FiniteField& f, int n, int k1, int k2) {
  if (n > static_cast<int>(f.order()))
    throw std::invalid_argument("Reed-Solomon needs n <= q");
  if (!(0 <= k2 && k2 < k1 && k1 <= n))
    throw std::invalid_argument("need 0 <= k2 < k1 <= n");
  auto rs = [&](int k) {
    GfMatrix g(f, k, n);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < n; ++j) g.at(i, j) = f.pow(static_cast<Word>(j), i);
    return LinearCode::from_rows(f, n, g);
  };
  LinearCode c1 = rs(k1);
  LinearCode c2 = k2 == 0 ? LinearCode::zero(f, n) : rs(k2);
  MdsScheme out{RampScheme::make(std::move(c1), std::move(c2)), {}};
  out.profile.ell = k1 - k2;
  for (int m = 1; m <= out.profile.ell; ++m) {
    out.profile.t.push_back(k2 + m - 1);
    out.profile.r.push_back(k2 + m);
    out.profile.t_tag.push_back(ProvenanceTag::Exact);
    out.profile.r_tag.push_back(ProvenanceTag::Exact);
  }
  return out;
}

}  // namespace rghw
