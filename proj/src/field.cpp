#include "rghw/field.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

namespace rghw {

namespace {

constexpr Word kMaxOrder = 1u << 16;

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Fixed moduli for the fields the library actually exercises
// (lexicographically smallest primitive polynomial, high coefficient first
// in the lex order; stored low-degree-first). Other (p, k) fall back to a
// deterministic search that reproduces the same convention.
struct FixedModulus {
  int p, k;
  std::vector<int> coeffs;
};
const FixedModulus kFixed[] = {
    {2, 1, {1, 1}},
    {2, 2, {1, 1, 1}},
    {2, 3, {1, 1, 0, 1}},
    {2, 4, {1, 1, 0, 0, 1}},
    {2, 5, {1, 0, 1, 0, 0, 1}},
    {2, 6, {1, 1, 0, 0, 0, 0, 1}},
    {2, 7, {1, 1, 0, 0, 0, 0, 0, 1}},
    {2, 8, {1, 0, 1, 1, 1, 0, 0, 0, 1}},
    {3, 1, {1, 1}},
    {3, 2, {2, 1, 1}},
    {3, 4, {2, 1, 0, 0, 1}},
    {5, 1, {2, 1}},
    {5, 2, {2, 1, 1}},
    {7, 1, {2, 1}},
    {7, 2, {3, 1, 1}},
    {11, 1, {3, 1}},
    {13, 1, {2, 1}},
};

// Remainder of f by monic g over GF(p), both low-first.
std::vector<int> poly_mod(std::vector<int> f, const std::vector<int>& g, int p) {
  int d = static_cast<int>(g.size()) - 1;
  for (int i = static_cast<int>(f.size()) - 1; i >= d; --i) {
    int c = f[i];
    if (c == 0) continue;
    for (int j = 0; j <= d; ++j) {
      f[i - d + j] = ((f[i - d + j] - c * g[j]) % p + p) % p;
    }
  }
  f.resize(d);
  return f;
}

bool poly_is_irreducible(const std::vector<int>& f, int p) {
  int k = static_cast<int>(f.size()) - 1;
  if (k == 1) return true;
  std::vector<int> g;
  for (int d = 1; d <= k / 2; ++d) {
    g.assign(d + 1, 0);
    g[d] = 1;
    // enumerate all monic degree-d divisor candidates
    while (true) {
      auto r = poly_mod(f, g, p);
      if (std::all_of(r.begin(), r.end(), [](int x) { return x == 0; }))
        return false;
      int i = 0;
      while (i < d && g[i] == p - 1) g[i++] = 0;
      if (i == d) break;
      ++g[i];
    }
  }
  return true;
}

std::vector<long long> prime_factors(long long n) {
  std::vector<long long> fac;
  for (long long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      fac.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) fac.push_back(n);
  return fac;
}

}  // namespace

FiniteField::FiniteField(int p, int k) : p_(p), k_(k) {
  if (!is_prime(p)) throw std::invalid_argument("characteristic must be prime");
  if (k < 1) throw std::invalid_argument("extension degree must be >= 1");
  long long q = 1;
  for (int i = 0; i < k; ++i) {
    q *= p;
    if (q > kMaxOrder) throw std::invalid_argument("field order above 2^16 cap");
  }
  q_ = static_cast<Word>(q);

  for (const auto& fm : kFixed) {
    if (fm.p == p && fm.k == k) {
      modulus_ = fm.coeffs;
      break;
    }
  }
  if (modulus_.empty()) {
    // deterministic search: lexicographically smallest (by coefficient tuple,
    // highest degree first) monic polynomial, irreducible with x primitive
    std::vector<int> high(k, 0);  // high[0] = coeff of x^{k-1}, ..., high[k-1] = constant
    for (;;) {
      std::vector<int> cand(k + 1);
      cand[k] = 1;
      for (int i = 0; i < k; ++i) cand[k - 1 - i] = high[i];
      bool ok = cand[0] != 0 && poly_is_irreducible(cand, p);
      if (ok) {
        modulus_ = cand;
        build_tables();
        if (generator_ != 0) break;  // x (or the k=1 root) generates
        modulus_.clear();
      }
      int i = k - 1;
      while (i >= 0 && high[i] == p - 1) high[i--] = 0;
      if (i < 0) throw std::logic_error("no primitive polynomial found");
      ++high[i];
    }
  }
  if (log_.empty()) {
    build_tables();
    if (generator_ == 0)
      throw std::logic_error("fixed modulus is not primitive");
  }
  if (!poly_is_irreducible(modulus_, p))
    throw std::logic_error("stored modulus is reducible");
  if (k_ % 2 == 0) register_subfield();
}

Word FiniteField::mul_slow(Word a, Word b) const {
  // digit-vector polynomial product reduced by the modulus
  std::vector<int> fa(k_), fb(k_), prod(2 * k_ - 1, 0);
  Word ta = a, tb = b;
  for (int i = 0; i < k_; ++i) { fa[i] = ta % p_; ta /= p_; }
  for (int i = 0; i < k_; ++i) { fb[i] = tb % p_; tb /= p_; }
  for (int i = 0; i < k_; ++i)
    for (int j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + fa[i] * fb[j]) % p_;
  auto r = poly_mod(prod, modulus_, p_);
  Word out = 0;
  for (int i = k_ - 1; i >= 0; --i) out = out * p_ + r[i];
  return out;
}

void FiniteField::build_tables() {
  // generator: the residue of x for k > 1; the root of the linear modulus
  // for prime fields
  Word g = (k_ > 1) ? static_cast<Word>(p_)
                    : static_cast<Word>(((-modulus_[0]) % p_ + p_) % p_);
  // confirm order exactly q-1
  generator_ = 0;
  long long n = q_ - 1;
  for (long long r : prime_factors(n)) {
    Word acc = 1;
    long long e = n / r;
    Word base = g;
    while (e) {
      if (e & 1) acc = mul_slow(acc, base);
      base = mul_slow(base, base);
      e >>= 1;
    }
    if (acc == 1) return;  // not primitive
  }
  generator_ = g;
  log_.assign(q_, 0);
  antilog_.assign(q_ - 1, 0);
  Word cur = 1;
  for (Word i = 0; i + 1 < q_; ++i) {
    antilog_[i] = cur;
    log_[cur] = i;
    cur = mul_slow(cur, g);
  }
  if (cur != 1) throw std::logic_error("generator order mismatch");
}

void FiniteField::register_subfield() {
  const FiniteField& sub = FiniteField::get(p_, k_ / 2);
  // embedding determined by the smallest root of the subfield modulus here
  Word root = 0;
  bool found = false;
  for (Word e = 0; e < q_; ++e) {
    Word acc = 0, epow = 1;
    for (int i = 0; i <= sub.degree(); ++i) {
      int c = sub.modulus()[i];
      Word term = epow;
      Word cw = 0;
      for (int t = 0; t < c; ++t) cw = add(cw, 1);
      acc = add(acc, mul(cw, term));
      epow = mul(epow, e);
    }
    if (acc == 0) {
      root = e;
      found = true;
      break;
    }
  }
  if (!found) throw std::logic_error("subfield modulus has no root");
  embed_.assign(sub.order(), 0);
  unembed_.assign(q_, 0);
  for (Word s = 0; s < sub.order(); ++s) {
    Word img = 0, rpow = 1;
    Word ts = s;
    for (int i = 0; i < sub.degree(); ++i) {
      int digit = static_cast<int>(ts % sub.characteristic());
      ts /= sub.characteristic();
      Word dw = 0;
      for (int t = 0; t < digit; ++t) dw = add(dw, 1);
      img = add(img, mul(dw, rpow));
      rpow = mul(rpow, root);
    }
    embed_[s] = img;
    unembed_[img] = s + 1;
  }
  subfield_ = &sub;
}

Word FiniteField::add(Word a, Word b) const {
  if (p_ == 2) return a ^ b;
  Word out = 0, mul = 1;
  while (a || b) {
    int da = a % p_, db = b % p_;
    out += static_cast<Word>((da + db) % p_) * mul;
    a /= p_;
    b /= p_;
    mul *= p_;
  }
  return out;
}

Word FiniteField::sub(Word a, Word b) const { return add(a, neg(b)); }

Word FiniteField::neg(Word a) const {
  if (p_ == 2) return a;
  Word out = 0, mul = 1;
  while (a) {
    int d = a % p_;
    out += static_cast<Word>((p_ - d) % p_) * mul;
    a /= p_;
    mul *= p_;
  }
  return out;
}

Word FiniteField::pow(Word a, long long e) const {
  if (a == 0) {
    if (e < 0) throw std::domain_error("inverse of zero");
    return e == 0 ? 1 : 0;
  }
  long long n = q_ - 1;
  long long r = e % n;
  if (r < 0) r += n;
  return antilog_[(static_cast<long long>(log_[a]) * r) % n];
}

const FiniteField& FiniteField::quadratic_subfield() const {
  if (!subfield_)
    throw std::domain_error("field has no registered quadratic subfield");
  return *subfield_;
}

Word FiniteField::embed(Word sub_elem) const {
  quadratic_subfield();
  if (sub_elem >= subfield_->order())
    throw std::invalid_argument("subfield encoding out of range");
  return embed_[sub_elem];
}

Word FiniteField::unembed(Word elem) const {
  quadratic_subfield();
  if (elem >= q_ || unembed_[elem] == 0)
    throw std::domain_error("element not in the registered subfield");
  return unembed_[elem] - 1;
}

Word FiniteField::norm(Word e) const {
  Word q0 = quadratic_subfield().order();
  return unembed(pow(e, q0 + 1));
}

Word FiniteField::trace(Word e) const {
  Word q0 = quadratic_subfield().order();
  return unembed(add(pow(e, q0), e));
}

std::string FiniteField::name() const {
  if (k_ == 1) return "GF(" + std::to_string(p_) + ")";
  return "GF(" + std::to_string(p_) + "^" + std::to_string(k_) + ")";
}

const FiniteField& FiniteField::get(int p, int k) {
  // recursive: constructing GF(p^{2k}) registers its subfield via get()
  static std::recursive_mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<FiniteField>> registry;
  std::lock_guard<std::recursive_mutex> lock(mu);
  auto key = std::make_pair(p, k);
  auto it = registry.find(key);
  if (it == registry.end()) {
    // unique_ptr because the constructor is private to this class
    it = registry.emplace(key, std::unique_ptr<FiniteField>(new FiniteField(p, k))).first;
  }
  return *it->second;
}

const FiniteField& FiniteField::get_order(Word q) {
  if (q < 2) throw std::invalid_argument("field order must be >= 2");
  for (int p = 2; static_cast<Word>(p) <= q; ++p) {
    if (!is_prime(p)) continue;
    if (q % p == 0) {
      int k = 0;
      Word t = q;
      while (t % p == 0) { t /= p; ++k; }
      if (t != 1) throw std::invalid_argument("order is not a prime power");
      return get(p, k);
    }
  }
  throw std::invalid_argument("order is not a prime power");
}

const FiniteField& FiniteField::parse(const std::string& spec) {
  auto caret = spec.find('^');
  try {
    if (caret == std::string::npos) return get_order(static_cast<Word>(std::stoul(spec)));
    int p = std::stoi(spec.substr(0, caret));
    int k = std::stoi(spec.substr(caret + 1));
    return get(p, k);
  } catch (const std::logic_error&) {
    throw std::invalid_argument("bad field spec: " + spec);
  }
}

const FiniteField& FieldElement::field() const {
  if (!f_) throw std::logic_error("default-constructed field element");
  return *f_;
}

const FiniteField& FieldElement::same(const FieldElement& o) const {
  if (f_ != o.f_) throw std::invalid_argument("field mismatch");
  return field();
}

std::pair<FieldElement, FieldElement> norm_trace(const FieldElement& e) {
  const FiniteField& f = e.field();
  const FiniteField& sub = f.quadratic_subfield();
  return {FieldElement(sub, f.norm(e.value())),
          FieldElement(sub, f.trace(e.value()))};
}

}  // namespace rghw
