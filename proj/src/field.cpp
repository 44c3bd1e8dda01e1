#include "galpts/field.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace galpts {

namespace {

// Dense polynomials over F_p as coefficient vectors (low degree first). Only
// used to pick and verify the modulus, before any Field exists.
using PrimePoly = std::vector<uint32_t>;

void trim(PrimePoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

uint32_t inv_mod(uint32_t a, uint32_t p) {
  // p is prime and small: Fermat.
  uint64_t r = 1, b = a % p;
  for (uint64_t e = p - 2; e; e >>= 1) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
  }
  return static_cast<uint32_t>(r);
}

PrimePoly poly_mod(PrimePoly a, const PrimePoly& m, uint32_t p) {
  trim(a);
  const size_t dm = m.size() - 1;
  const uint64_t lc_inv = inv_mod(m.back(), p);
  while (a.size() > dm) {
    const uint64_t c = a.back() * lc_inv % p;
    const size_t shift = a.size() - 1 - dm;
    for (size_t i = 0; i <= dm; ++i) a[shift + i] = static_cast<uint32_t>((a[shift + i] + (p - c) * m[i]) % p);
    trim(a);
  }
  return a;
}

PrimePoly poly_mulmod(const PrimePoly& a, const PrimePoly& b, const PrimePoly& m, uint32_t p) {
  if (a.empty() || b.empty()) return {};
  PrimePoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = static_cast<uint32_t>((r[i + j] + uint64_t{a[i]} * b[j]) % p);
  }
  return poly_mod(std::move(r), m, p);
}

PrimePoly poly_powmod(PrimePoly base, uint64_t e, const PrimePoly& m, uint32_t p) {
  PrimePoly r{1};
  base = poly_mod(std::move(base), m, p);
  while (e) {
    if (e & 1) r = poly_mulmod(r, base, m, p);
    base = poly_mulmod(base, base, m, p);
    e >>= 1;
  }
  return poly_mod(std::move(r), m, p);
}

PrimePoly poly_gcd(PrimePoly a, PrimePoly b, uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    a = poly_mod(std::move(a), b, p);
    std::swap(a, b);
  }
  return a;
}

// Rabin's test.
bool is_irreducible(const PrimePoly& f, uint32_t p) {
  const unsigned k = static_cast<unsigned>(f.size() - 1);
  if (k == 1) return true;
  if (f[0] == 0) return false;
  std::vector<PrimePoly> frob(k + 1);  // x^(p^i) mod f
  frob[0] = poly_mod({0, 1}, f, p);
  for (unsigned i = 1; i <= k; ++i) frob[i] = poly_powmod(frob[i - 1], p, f, p);
  PrimePoly x = poly_mod({0, 1}, f, p);
  if (frob[k] != x) return false;
  for (uint64_t l : prime_factors(k)) {
    PrimePoly h = frob[k / l];
    h.resize(std::max<size_t>(h.size(), 2), 0);
    h[1] = (h[1] + p - 1) % p;
    trim(h);
    if (poly_gcd(f, h, p).size() != 1) return false;
  }
  return true;
}

uint64_t mulmod64(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

}  // namespace

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<uint64_t> prime_factors(uint64_t n) {
  std::vector<uint64_t> out;
  for (uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

uint64_t ipow(uint64_t b, unsigned e) {
  uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

FieldPtr Field::build(uint32_t p, unsigned k, uint64_t cap) {
  if (!is_prime(p)) throw ConfigError("field characteristic " + std::to_string(p) + " is not prime");
  if (k == 0) throw ConfigError("field degree must be at least 1");
  unsigned __int128 size = 1;
  for (unsigned i = 0; i < k; ++i) {
    size *= p;
    if (size > cap || size > (unsigned __int128)kDefaultFieldCap)
      throw ConfigError("field F_" + std::to_string(p) + "^" + std::to_string(k) + " exceeds the size cap");
  }

  static std::mutex mu;
  static std::map<std::pair<uint32_t, unsigned>, FieldPtr> cache;
  std::lock_guard lock(mu);
  if (auto it = cache.find({p, k}); it != cache.end()) return it->second;

  const uint64_t count = ipow(p, k);
  PrimePoly mod;
  for (uint64_t enc = 0; enc < count; ++enc) {
    PrimePoly cand(k + 1, 0);
    uint64_t e = enc;
    for (unsigned i = 0; i < k; ++i, e /= p) cand[i] = static_cast<uint32_t>(e % p);
    cand[k] = 1;
    if (is_irreducible(cand, p)) {
      mod = std::move(cand);
      break;
    }
  }
  if (mod.empty()) throw MathError("no irreducible polynomial found (impossible)");
  FieldPtr f(new Field(p, k, std::move(mod)));
  cache.emplace(std::pair{p, k}, f);
  return f;
}

FieldPtr build_field(uint32_t p, unsigned k, uint64_t cap) { return Field::build(p, k, cap); }

Field::Field(uint32_t p, unsigned k, std::vector<uint32_t> modulus)
    : p_(p), k_(k), order_(ipow(p, k)), modulus_(std::move(modulus)) {
  place_.resize(k_ + 1);
  place_[0] = 1;
  for (unsigned i = 1; i <= k_; ++i) place_[i] = place_[i - 1] * p_;
  find_primitive();
  if (order_ <= kTableLimit) build_tables();
}

std::string Field::name() const {
  std::ostringstream os;
  os << "F_" << p_;
  if (k_ > 1) os << "^" << k_;
  return os.str();
}

Elem Field::generator() const {
  if (k_ == 1) return Elem{0};
  return Elem{p_};
}

Elem Field::from_int(int64_t n) const {
  int64_t r = n % static_cast<int64_t>(p_);
  if (r < 0) r += p_;
  return Elem{static_cast<uint32_t>(r)};
}

Elem Field::from_digits(const std::vector<uint32_t>& d) const {
  if (d.size() > k_) throw MathError("too many digits for " + name());
  uint64_t v = 0;
  for (size_t i = d.size(); i-- > 0;) v = v * p_ + d[i] % p_;
  return Elem{static_cast<uint32_t>(v)};
}

std::vector<uint32_t> Field::digits(Elem a) const {
  std::vector<uint32_t> d(k_);
  uint64_t v = a.v;
  for (unsigned i = 0; i < k_; ++i, v /= p_) d[i] = static_cast<uint32_t>(v % p_);
  return d;
}

Elem Field::add_digits(Elem a, Elem b) const {
  if (p_ == 2) return Elem{a.v ^ b.v};
  uint64_t x = a.v, y = b.v, out = 0;
  for (unsigned i = 0; i < k_; ++i) {
    uint64_t s = x % p_ + y % p_;
    if (s >= p_) s -= p_;
    out += s * place_[i];
    x /= p_;
    y /= p_;
  }
  return Elem{static_cast<uint32_t>(out)};
}

Elem Field::add(Elem a, Elem b) const {
  if (p_ == 2) return Elem{a.v ^ b.v};
  if (a.v == 0) return b;
  if (b.v == 0) return a;
  if (log_.empty()) return add_digits(a, b);
  const uint64_t n1 = order_ - 1;
  const uint32_t la = log_[a.v], lb = log_[b.v];
  const uint32_t z = zech_[(lb + n1 - la) % n1];
  if (z == kNoLog) return Elem{0};
  return Elem{exp_[(la + uint64_t{z}) % n1]};
}

Elem Field::neg(Elem a) const {
  if (p_ == 2 || a.v == 0) return a;
  if (!log_.empty()) {
    const uint64_t n1 = order_ - 1;
    return Elem{exp_[(log_[a.v] + n1 / 2) % n1]};
  }
  uint64_t x = a.v, out = 0;
  for (unsigned i = 0; i < k_; ++i, x /= p_) {
    const uint64_t d = x % p_;
    out += (d ? p_ - d : 0) * place_[i];
  }
  return Elem{static_cast<uint32_t>(out)};
}

Elem Field::mul_slow(Elem a, Elem b) const {
  if (a.v == 0 || b.v == 0) return Elem{0};
  if (k_ == 1) return Elem{static_cast<uint32_t>(uint64_t{a.v} * b.v % p_)};
  const auto da = digits(a), db = digits(b);
  std::vector<uint64_t> r(2 * k_ - 1, 0);
  for (unsigned i = 0; i < k_; ++i) {
    if (!da[i]) continue;
    for (unsigned j = 0; j < k_; ++j) r[i + j] += uint64_t{da[i]} * db[j];
  }
  for (auto& c : r) c %= p_;
  for (size_t d = r.size(); d-- > k_;) {
    const uint64_t c = r[d];
    if (!c) continue;
    const size_t shift = d - k_;
    for (unsigned i = 0; i <= k_; ++i) r[shift + i] = (r[shift + i] + (p_ - c) * modulus_[i]) % p_;
  }
  uint64_t out = 0;
  for (unsigned i = k_; i-- > 0;) out = out * p_ + r[i];
  return Elem{static_cast<uint32_t>(out)};
}

Elem Field::mul(Elem a, Elem b) const {
  if (a.v == 0 || b.v == 0) return Elem{0};
  if (log_.empty()) return mul_slow(a, b);
  const uint64_t n1 = order_ - 1;
  return Elem{exp_[(uint64_t{log_[a.v]} + log_[b.v]) % n1]};
}

Elem Field::inv(Elem a) const {
  if (a.v == 0) throw MathError("division by zero in " + name());
  if (!log_.empty()) {
    const uint64_t n1 = order_ - 1;
    return Elem{exp_[(n1 - log_[a.v]) % n1]};
  }
  return pow(a, order_ - 2);
}

Elem Field::pow(Elem a, uint64_t e) const {
  if (e == 0) return Elem{1};
  if (a.v == 0) return Elem{0};
  const uint64_t n1 = order_ - 1;
  if (!log_.empty()) return Elem{exp_[mulmod64(log_[a.v], e % n1, n1)]};
  e %= n1;
  if (e == 0) return Elem{1};
  Elem r{1};
  while (e) {
    if (e & 1) r = mul_slow(r, a);
    a = mul_slow(a, a);
    e >>= 1;
  }
  return r;
}

Elem Field::frobenius(Elem a, uint64_t i) const { return pow(a, ipow(p_, static_cast<unsigned>(i % k_))); }

Elem Field::random(std::mt19937_64& rng) const {
  std::uniform_int_distribution<uint64_t> dist(0, order_ - 1);
  return Elem{static_cast<uint32_t>(dist(rng))};
}

void Field::find_primitive() {
  const uint64_t n1 = order_ - 1;
  if (n1 == 1) {
    primitive_ = Elem{1};
    return;
  }
  const auto factors = prime_factors(n1);
  auto slow_pow = [&](Elem a, uint64_t e) {
    Elem r{1};
    while (e) {
      if (e & 1) r = mul_slow(r, a);
      a = mul_slow(a, a);
      e >>= 1;
    }
    return r;
  };
  for (uint64_t c = 2; c < order_ + 1; ++c) {
    const Elem a{static_cast<uint32_t>(c % order_)};
    if (a.v == 0) continue;
    bool ok = true;
    for (uint64_t l : factors) {
      if (slow_pow(a, n1 / l) == Elem{1}) {
        ok = false;
        break;
      }
    }
    if (ok) {
      primitive_ = a;
      return;
    }
  }
  throw MathError("no primitive element in " + name());
}

void Field::build_tables() {
  const uint64_t n1 = order_ - 1;
  log_.assign(order_, 0);
  exp_.assign(n1, 0);
  Elem cur{1};
  for (uint64_t i = 0; i < n1; ++i) {
    exp_[i] = cur.v;
    log_[cur.v] = static_cast<uint32_t>(i);
    cur = mul_slow(cur, primitive_);
  }
  zech_.assign(n1, kNoLog);
  for (uint64_t i = 0; i < n1; ++i) {
    const Elem s = add_digits(Elem{1}, Elem{exp_[i]});
    zech_[i] = s.v == 0 ? kNoLog : log_[s.v];
  }
}

// --- homomorphisms -----------------------------------------------------------

FieldHom::FieldHom(FieldPtr src, FieldPtr dst, Elem generator_image)
    : src_(std::move(src)), dst_(std::move(dst)), gen_image_(generator_image) {
  if (src_->characteristic() != dst_->characteristic() || dst_->degree() % src_->degree() != 0)
    throw MathError("no embedding " + src_->name() + " -> " + dst_->name());
  Elem pw = dst_->one();
  for (unsigned i = 0; i < src_->degree(); ++i) {
    basis_images_.push_back(pw);
    pw = dst_->mul(pw, gen_image_);
  }
  if (src_->order() <= (uint64_t{1} << 16) && !is_identity()) {
    table_.resize(src_->order());
    for (uint64_t v = 0; v < src_->order(); ++v) {
      const auto d = src_->digits(Elem{static_cast<uint32_t>(v)});
      Elem acc = dst_->zero();
      for (unsigned i = 0; i < d.size(); ++i)
        if (d[i]) acc = dst_->add(acc, dst_->mul(dst_->from_int(d[i]), basis_images_[i]));
      table_[v] = acc;
    }
  }
}

Elem FieldHom::operator()(Elem a) const {
  if (is_identity()) return a;
  if (!table_.empty()) return table_[a.v];
  const auto d = src_->digits(a);
  Elem acc = dst_->zero();
  for (unsigned i = 0; i < d.size(); ++i)
    if (d[i]) acc = dst_->add(acc, dst_->mul(dst_->from_int(d[i]), basis_images_[i]));
  return acc;
}

// --- additive equations ------------------------------------------------------

std::vector<AdditiveTerm> artin_schreier_op(const Field& f, unsigned n) {
  return {{n, f.one()}, {0, f.one()}};
}

std::vector<Elem> solve_additive(const std::vector<AdditiveTerm>& op, Elem rhs, const Field& f) {
  const unsigned k = f.degree();
  const uint32_t p = f.characteristic();
  auto apply = [&](Elem t) {
    Elem acc = f.zero();
    for (const auto& term : op) acc = f.add(acc, f.mul(term.coeff, f.frobenius(t, term.frobenius_power)));
    return acc;
  };
  // Augmented k x (k+1) system over F_p; column j is L(p^j).
  std::vector<std::vector<uint32_t>> m(k, std::vector<uint32_t>(k + 1, 0));
  for (unsigned j = 0; j < k; ++j) {
    const auto col = f.digits(apply(Elem{static_cast<uint32_t>(ipow(p, j))}));
    for (unsigned i = 0; i < k; ++i) m[i][j] = col[i];
  }
  const auto r = f.digits(rhs);
  for (unsigned i = 0; i < k; ++i) m[i][k] = r[i];

  std::vector<int> pivot_col;
  unsigned row = 0;
  for (unsigned c = 0; c < k && row < k; ++c) {
    unsigned sel = row;
    while (sel < k && m[sel][c] == 0) ++sel;
    if (sel == k) continue;
    std::swap(m[sel], m[row]);
    const uint64_t iv = inv_mod(m[row][c], p);
    for (auto& v : m[row]) v = static_cast<uint32_t>(v * iv % p);
    for (unsigned i = 0; i < k; ++i) {
      if (i == row || m[i][c] == 0) continue;
      const uint64_t factor = m[i][c];
      for (unsigned j = 0; j <= k; ++j) m[i][j] = static_cast<uint32_t>((m[i][j] + (p - factor) * m[row][j]) % p);
    }
    pivot_col.push_back(static_cast<int>(c));
    ++row;
  }
  for (unsigned i = row; i < k; ++i)
    if (m[i][k] != 0) return {};

  std::vector<bool> is_pivot(k, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<unsigned> free_cols;
  for (unsigned c = 0; c < k; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  std::vector<Elem> out;
  const uint64_t combos = ipow(p, static_cast<unsigned>(free_cols.size()));
  for (uint64_t idx = 0; idx < combos; ++idx) {
    std::vector<uint32_t> x(k, 0);
    uint64_t e = idx;
    for (unsigned fc : free_cols) {
      x[fc] = static_cast<uint32_t>(e % p);
      e /= p;
    }
    for (size_t r2 = 0; r2 < pivot_col.size(); ++r2) {
      uint64_t v = m[r2][k];
      for (unsigned fc : free_cols) v = (v + (p - m[r2][fc]) * uint64_t{x[fc]}) % p;
      x[pivot_col[r2]] = static_cast<uint32_t>(v);
    }
    out.push_back(f.from_digits(x));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace galpts
