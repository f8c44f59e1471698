#ifndef RANKCODES_GF_HPP
#define RANKCODES_GF_HPP

#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "core/linalg.hpp"
#include "core/numeric.hpp"

namespace rankcodes::gf {

// Parameters of GF(p^m): prime p, extension degree m, and the monic
// irreducible modulus polynomial (coefficients low-to-high, length m+1) whose
// root powers {1, x, ..., x^{m-1}} form the basis used for the vector <->
// matrix view. Base fields q = p^k with k > 1 are out of scope.
struct FieldSpec {
  unsigned p = 2;
  unsigned m = 1;
  std::vector<unsigned> modulus;

  bool operator==(const FieldSpec&) const = default;

  // "gf:p=2,m=4,poly=11001", poly digits low-to-high. Single-digit
  // coefficients, so serialization requires p <= 7.
  std::string to_string() const;
  static FieldSpec parse(const std::string& text);
};

class Field;

// Element of GF(p^m) as its coefficient vector in the polynomial basis.
// Arithmetic goes through the owning Field, which must outlive the element.
class Ext {
 public:
  Ext() = default;
  const std::vector<unsigned>& coeffs() const { return c_; }
  const Field& field() const { return *field_; }

  Ext operator+(const Ext& o) const;
  Ext operator-(const Ext& o) const;
  Ext operator*(const Ext& o) const;
  Ext inverse() const;
  Ext pow(std::uint64_t e) const;
  // a^(q^(a_param * i)); requires gcd(a_param, m) = 1.
  Ext frobenius(unsigned i, unsigned a_param = 1) const;

  bool is_zero() const;
  bool operator==(const Ext& o) const;
  bool operator!=(const Ext& o) const { return !(*this == o); }
  bool operator<(const Ext& o) const { return c_ < o.c_; }

 private:
  friend class Field;
  Ext(const Field* f, std::vector<unsigned> c) : field_(f), c_(std::move(c)) {}
  const Field* field_ = nullptr;
  std::vector<unsigned> c_;
};

// GF(p^m) with fixed polynomial basis. Immutable; all operations are pure, so
// a Field may be shared across threads freely. For p^m <= 4096 a discrete
// exp/log table pair is cached lazily and used for products.
class Field {
 public:
  Field(unsigned p, unsigned m);  // least irreducible modulus for (p, m)
  Field(unsigned p, unsigned m, std::vector<unsigned> modulus);
  explicit Field(const FieldSpec& spec) : Field(spec.p, spec.m, spec.modulus) {}

  const FieldSpec& spec() const { return spec_; }
  unsigned p() const { return spec_.p; }
  unsigned m() const { return spec_.m; }
  BigInt order() const;  // p^m

  Ext zero() const;
  Ext one() const;
  Ext gen() const;  // the class of x; for m = 1 this is 1
  Ext from_coeffs(std::vector<unsigned> coeffs) const;
  // Elements correspond to integers in [0, p^m) with coefficient i as the
  // base-p digit of weight p^i; used as the message odometer in enumeration.
  Ext from_index(std::uint64_t index) const;
  std::uint64_t index_of(const Ext& e) const;

  Ext add(const Ext& a, const Ext& b) const;
  Ext sub(const Ext& a, const Ext& b) const;
  Ext mul(const Ext& a, const Ext& b) const;
  Ext inverse(const Ext& a) const;
  Ext pow(const Ext& a, std::uint64_t e) const;
  Ext frobenius(const Ext& a, unsigned i, unsigned a_param) const;

  static std::vector<unsigned> least_irreducible(unsigned p, unsigned m);
  static bool is_irreducible(const std::vector<unsigned>& poly, unsigned p);

 private:
  struct LogTables {
    std::vector<std::uint16_t> exp;  // exp[k] = index of g^k, k in [0, q-1)
    std::vector<std::uint16_t> log;  // log[index], index >= 1
  };

  void check_element(const Ext& e, const char* op) const;
  Ext raw_mul(const Ext& a, const Ext& b) const;
  void ensure_tables() const;

  FieldSpec spec_;
  mutable std::once_flag table_once_;
  mutable std::unique_ptr<LogTables> tables_;
};

// The basis map GF(p^m)^n -> GF(p)^{m x n}: column j holds the coefficients
// of v_j. Its inverse is matrix_to_vec; rank of the image equals the number
// of GF(p)-linearly independent coordinates of v.
linalg::Mat vec_to_matrix(const std::vector<Ext>& v);
std::vector<Ext> matrix_to_vec(const linalg::Mat& m, const Field& field);

}  // namespace rankcodes::gf

#endif
