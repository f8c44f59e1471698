#include "core/gf.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "core/errors.hpp"

namespace rankcodes::gf {

namespace {

bool is_prime(unsigned p) {
  if (p < 2) return false;
  for (unsigned d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Polynomials over GF(p), coefficients low-to-high, trailing zeros trimmed.
using Poly = std::vector<unsigned>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b, unsigned p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  trim(r);
  return r;
}

unsigned unit_inv(unsigned a, unsigned p) {
  unsigned r = 1, b = a % p, e = p - 2;
  while (e) {
    if (e & 1) r = (r * b) % p;
    b = (b * b) % p;
    e >>= 1;
  }
  return r;
}

Poly poly_mod(Poly a, const Poly& f, unsigned p) {
  trim(a);
  while (a.size() >= f.size()) {
    unsigned lead = a.back();
    if (lead) {
      unsigned factor = (lead * unit_inv(f.back(), p)) % p;
      std::size_t shift = a.size() - f.size();
      for (std::size_t i = 0; i < f.size(); ++i)
        a[shift + i] = (a[shift + i] + (p - (factor * f[i]) % p)) % p;
    }
    trim(a);
    if (a.empty()) break;
  }
  return a;
}

Poly poly_powmod(const Poly& base, std::uint64_t e, const Poly& f, unsigned p) {
  Poly r{1}, b = poly_mod(base, f, p);
  while (e) {
    if (e & 1) r = poly_mod(poly_mul(r, b, p), f, p);
    b = poly_mod(poly_mul(b, b, p), f, p);
    e >>= 1;
  }
  return r;
}

Poly poly_gcd(Poly a, Poly b, unsigned p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::vector<unsigned> prime_divisors(unsigned m) {
  std::vector<unsigned> out;
  for (unsigned d = 2; d * d <= m; ++d)
    if (m % d == 0) {
      out.push_back(d);
      while (m % d == 0) m /= d;
    }
  if (m > 1) out.push_back(m);
  return out;
}

}  // namespace

bool Field::is_irreducible(const std::vector<unsigned>& poly, unsigned p) {
  Poly f = poly;
  trim(f);
  if (f.size() < 2) return false;
  unsigned m = static_cast<unsigned>(f.size()) - 1;
  if (m == 1) return true;
  // f irreducible over GF(p) iff x^{p^m} = x mod f and, for every prime l | m,
  // gcd(x^{p^{m/l}} - x, f) = 1.
  std::vector<bool> checkpoint(m + 1, false);
  for (unsigned l : prime_divisors(m)) checkpoint[m / l] = true;
  Poly h{0, 1};  // x
  for (unsigned i = 1; i <= m; ++i) {
    h = poly_powmod(h, p, f, p);
    if (i < m && checkpoint[i]) {
      Poly diff = h;
      if (diff.size() < 2) diff.resize(2, 0);
      diff[1] = (diff[1] + p - 1) % p;
      trim(diff);
      Poly g = poly_gcd(f, diff, p);
      if (g.size() != 1) return false;
    }
  }
  Poly x{0, 1};
  return h == x;
}

std::vector<unsigned> Field::least_irreducible(unsigned p, unsigned m) {
  static std::mutex mu;
  static std::map<std::pair<unsigned, unsigned>, std::vector<unsigned>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find({p, m});
  if (it != cache.end()) return it->second;
  // Scan the non-leading coefficients as a base-p counter, low digit first.
  std::vector<unsigned> poly(m + 1, 0);
  poly[m] = 1;
  while (true) {
    if (is_irreducible(poly, p)) break;
    unsigned i = 0;
    while (i < m && ++poly[i] == p) poly[i++] = 0;
    if (i == m) throw usage_error("no irreducible polynomial found (unreachable)");
  }
  cache[{p, m}] = poly;
  return poly;
}

std::string FieldSpec::to_string() const {
  if (p > 7) throw usage_error("field serialization supports single-digit coefficients (p <= 7)");
  std::ostringstream out;
  out << "gf:p=" << p << ",m=" << m << ",poly=";
  for (unsigned c : modulus) out << c;
  return out.str();
}

FieldSpec FieldSpec::parse(const std::string& text) {
  FieldSpec s;
  unsigned p = 0, m = 0;
  char polybuf[64] = {0};
  if (std::sscanf(text.c_str(), "gf:p=%u,m=%u,poly=%63s", &p, &m, polybuf) != 3)
    throw io_error("bad field spec: " + text);
  s.p = p;
  s.m = m;
  for (const char* c = polybuf; *c; ++c) {
    if (*c < '0' || *c > '9') throw io_error("bad field polynomial digit in: " + text);
    s.modulus.push_back(static_cast<unsigned>(*c - '0'));
  }
  if (s.modulus.size() != m + 1) throw io_error("field polynomial degree mismatch in: " + text);
  return s;
}

Field::Field(unsigned p, unsigned m) : Field(p, m, least_irreducible(p, m)) {}

Field::Field(unsigned p, unsigned m, std::vector<unsigned> modulus) {
  if (!is_prime(p)) throw usage_error("field characteristic must be prime, got " + std::to_string(p));
  if (m < 1) throw usage_error("extension degree must be >= 1");
  if (modulus.size() != m + 1 || modulus[m] != 1)
    throw usage_error("modulus must be monic of degree m");
  for (unsigned c : modulus)
    if (c >= p) throw usage_error("modulus coefficient out of range");
  if (!is_irreducible(modulus, p)) throw usage_error("modulus polynomial is reducible");
  spec_.p = p;
  spec_.m = m;
  spec_.modulus = std::move(modulus);
}

BigInt Field::order() const { return big_pow(spec_.p, spec_.m); }

Ext Field::zero() const { return Ext(this, std::vector<unsigned>(spec_.m, 0)); }

Ext Field::one() const {
  std::vector<unsigned> c(spec_.m, 0);
  c[0] = 1;
  return Ext(this, std::move(c));
}

Ext Field::gen() const {
  std::vector<unsigned> c(spec_.m, 0);
  if (spec_.m == 1)
    c[0] = 1;
  else
    c[1] = 1;
  return Ext(this, std::move(c));
}

Ext Field::from_coeffs(std::vector<unsigned> coeffs) const {
  if (coeffs.size() != spec_.m) throw usage_error("element needs exactly m coefficients");
  for (unsigned c : coeffs)
    if (c >= spec_.p) throw usage_error("element coefficient out of range");
  return Ext(this, std::move(coeffs));
}

Ext Field::from_index(std::uint64_t index) const {
  std::vector<unsigned> c(spec_.m, 0);
  for (unsigned i = 0; i < spec_.m; ++i) {
    c[i] = static_cast<unsigned>(index % spec_.p);
    index /= spec_.p;
  }
  if (index) throw usage_error("element index out of range");
  return Ext(this, std::move(c));
}

std::uint64_t Field::index_of(const Ext& e) const {
  check_element(e, "index_of");
  std::uint64_t idx = 0;
  for (unsigned i = spec_.m; i-- > 0;) idx = idx * spec_.p + e.c_[i];
  return idx;
}

void Field::check_element(const Ext& e, const char* op) const {
  if (e.field_ == nullptr) throw usage_error(std::string(op) + ": uninitialized field element");
  if (!(e.field_->spec_ == spec_)) throw usage_error(std::string(op) + ": mismatched field specs");
}

Ext Field::add(const Ext& a, const Ext& b) const {
  check_element(a, "add");
  check_element(b, "add");
  std::vector<unsigned> c(spec_.m);
  for (unsigned i = 0; i < spec_.m; ++i) c[i] = (a.c_[i] + b.c_[i]) % spec_.p;
  return Ext(this, std::move(c));
}

Ext Field::sub(const Ext& a, const Ext& b) const {
  check_element(a, "sub");
  check_element(b, "sub");
  std::vector<unsigned> c(spec_.m);
  for (unsigned i = 0; i < spec_.m; ++i) c[i] = (a.c_[i] + spec_.p - b.c_[i]) % spec_.p;
  return Ext(this, std::move(c));
}

Ext Field::raw_mul(const Ext& a, const Ext& b) const {
  unsigned p = spec_.p, m = spec_.m;
  std::vector<unsigned> prod(2 * m - 1, 0);
  for (unsigned i = 0; i < m; ++i) {
    if (!a.c_[i]) continue;
    for (unsigned j = 0; j < m; ++j)
      prod[i + j] = (prod[i + j] + a.c_[i] * b.c_[j]) % p;
  }
  // reduce by the monic modulus
  for (unsigned k = 2 * m - 2; k >= m && k < prod.size(); --k) {
    unsigned f = prod[k];
    if (!f) continue;
    prod[k] = 0;
    for (unsigned i = 0; i < m; ++i)
      prod[k - m + i] = (prod[k - m + i] + (p - (f * spec_.modulus[i]) % p)) % p;
  }
  prod.resize(m);
  return Ext(this, std::move(prod));
}

void Field::ensure_tables() const {
  std::call_once(table_once_, [this] {
    std::uint64_t q = 1;
    for (unsigned i = 0; i < spec_.m; ++i) q *= spec_.p;
    if (q > 4096 || q < 3) return;
    // Find a primitive element: order q-1 checked against all prime divisors.
    std::uint64_t group = q - 1;
    std::vector<std::uint64_t> divisors;
    {
      std::uint64_t g = group;
      for (std::uint64_t d = 2; d * d <= g; ++d)
        if (g % d == 0) {
          divisors.push_back(d);
          while (g % d == 0) g /= d;
        }
      if (g > 1) divisors.push_back(g);
    }
    Ext generator = zero();
    for (std::uint64_t cand = 2; cand < q; ++cand) {
      Ext a = from_index(cand);
      bool primitive = true;
      for (std::uint64_t l : divisors) {
        Ext t = one();
        std::uint64_t e = group / l;
        Ext b = a;
        while (e) {
          if (e & 1) t = raw_mul(t, b);
          b = raw_mul(b, b);
          e >>= 1;
        }
        if (t == one()) {
          primitive = false;
          break;
        }
      }
      if (primitive) {
        generator = a;
        break;
      }
    }
    if (generator.is_zero()) return;
    auto tab = std::make_unique<LogTables>();
    tab->exp.resize(group);
    tab->log.resize(q);
    Ext cur = one();
    for (std::uint64_t k = 0; k < group; ++k) {
      std::uint64_t idx = index_of(cur);
      tab->exp[k] = static_cast<std::uint16_t>(idx);
      tab->log[idx] = static_cast<std::uint16_t>(k);
      cur = raw_mul(cur, generator);
    }
    tables_ = std::move(tab);
  });
}

Ext Field::mul(const Ext& a, const Ext& b) const {
  check_element(a, "mul");
  check_element(b, "mul");
  ensure_tables();
  if (tables_) {
    if (a.is_zero() || b.is_zero()) return zero();
    std::uint64_t group = tables_->exp.size();
    std::uint64_t k = tables_->log[index_of(a)] + tables_->log[index_of(b)];
    if (k >= group) k -= group;
    return from_index(tables_->exp[k]);
  }
  return raw_mul(a, b);
}

Ext Field::inverse(const Ext& a) const {
  check_element(a, "inverse");
  if (a.is_zero()) throw usage_error("zero has no multiplicative inverse");
  // extended Euclid on (a, modulus) in GF(p)[x]
  unsigned p = spec_.p;
  Poly r0 = a.c_, r1 = spec_.modulus;
  trim(r0);
  Poly s0{1}, s1{};
  while (!r1.empty()) {
    // divide r0 by r1
    Poly quot;
    Poly rem = r0;
    trim(rem);
    if (rem.size() >= r1.size()) {
      quot.assign(rem.size() - r1.size() + 1, 0);
      while (rem.size() >= r1.size() && !rem.empty()) {
        unsigned lead = rem.back();
        std::size_t shift = rem.size() - r1.size();
        unsigned factor = (lead * unit_inv(r1.back(), p)) % p;
        quot[shift] = factor;
        for (std::size_t i = 0; i < r1.size(); ++i)
          rem[shift + i] = (rem[shift + i] + (p - (factor * r1[i]) % p)) % p;
        trim(rem);
      }
    }
    Poly s2 = s0;  // s2 = s0 - quot * s1
    Poly qs = poly_mul(quot, s1, p);
    if (qs.size() > s2.size()) s2.resize(qs.size(), 0);
    for (std::size_t i = 0; i < qs.size(); ++i) s2[i] = (s2[i] + p - qs[i]) % p;
    trim(s2);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 = gcd = nonzero constant (modulus irreducible, a nonzero)
  unsigned scale = unit_inv(r0[0], p);
  std::vector<unsigned> c(spec_.m, 0);
  for (std::size_t i = 0; i < s0.size() && i < c.size(); ++i) c[i] = (s0[i] * scale) % p;
  return Ext(this, std::move(c));
}

Ext Field::pow(const Ext& a, std::uint64_t e) const {
  check_element(a, "pow");
  Ext r = one(), b = a;
  while (e) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

Ext Field::frobenius(const Ext& a, unsigned i, unsigned a_param) const {
  check_element(a, "frobenius");
  if (std::gcd(a_param, spec_.m) != 1)
    throw usage_error("automorphism step must be coprime to the extension degree");
  unsigned steps = static_cast<unsigned>((static_cast<std::uint64_t>(a_param) * i) % spec_.m);
  Ext r = a;
  for (unsigned k = 0; k < steps; ++k) r = pow(r, spec_.p);
  return r;
}

Ext Ext::operator+(const Ext& o) const { return field_->add(*this, o); }
Ext Ext::operator-(const Ext& o) const { return field_->sub(*this, o); }
Ext Ext::operator*(const Ext& o) const { return field_->mul(*this, o); }
Ext Ext::inverse() const { return field_->inverse(*this); }
Ext Ext::pow(std::uint64_t e) const { return field_->pow(*this, e); }
Ext Ext::frobenius(unsigned i, unsigned a_param) const {
  return field_->frobenius(*this, i, a_param);
}

bool Ext::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](unsigned v) { return v == 0; });
}

bool Ext::operator==(const Ext& o) const {
  if (field_ == nullptr || o.field_ == nullptr) return c_ == o.c_ && field_ == o.field_;
  return field_->spec() == o.field_->spec() && c_ == o.c_;
}

linalg::Mat vec_to_matrix(const std::vector<Ext>& v) {
  if (v.empty()) throw usage_error("vec_to_matrix needs at least one coordinate");
  const Field& f = v[0].field();
  linalg::Mat out(f.p(), f.m(), static_cast<unsigned>(v.size()));
  for (unsigned j = 0; j < v.size(); ++j) {
    if (!(v[j].field().spec() == f.spec())) throw usage_error("vector coordinates from different fields");
    for (unsigned i = 0; i < f.m(); ++i) out.set(i, j, v[j].coeffs()[i]);
  }
  return out;
}

std::vector<Ext> matrix_to_vec(const linalg::Mat& m, const Field& field) {
  if (m.rows() != field.m() || m.p() != field.p())
    throw usage_error("matrix shape does not match the field");
  std::vector<Ext> v;
  v.reserve(m.cols());
  for (unsigned j = 0; j < m.cols(); ++j) {
    std::vector<unsigned> c(field.m());
    for (unsigned i = 0; i < field.m(); ++i) c[i] = m.at(i, j);
    v.push_back(field.from_coeffs(std::move(c)));
  }
  return v;
}

}  // namespace rankcodes::gf
