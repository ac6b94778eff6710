#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace qmod {

// Exact rational scalar. GMP keeps everything canonical, so the alias is all
// we need; the rest of the library only assumes +,-,*,/ and comparison with 0.
using Rat = mpq_class;

// Prime field element with a process-wide modulus. The modulus is set once at
// startup (CLI or test fixture); mixing moduli inside one computation is not
// supported. Default 32003: larger than every algebra/End dimension reached at
// desk scale, which keeps the trace-form radical computation valid.
class Fp {
 public:
  Fp() : v_(0) {}
  Fp(long long x) {
    long long p = static_cast<long long>(p_);
    long long r = x % p;
    if (r < 0) r += p;
    v_ = static_cast<std::uint64_t>(r);
  }

  static void set_modulus(std::uint64_t p) {
    if (p < 2) throw std::invalid_argument("Fp modulus must be >= 2");
    p_ = p;
  }
  static std::uint64_t modulus() { return p_; }

  std::uint64_t value() const { return v_; }

  friend Fp operator+(Fp a, Fp b) { return from_raw((a.v_ + b.v_) % p_); }
  friend Fp operator-(Fp a, Fp b) { return from_raw((a.v_ + p_ - b.v_) % p_); }
  friend Fp operator*(Fp a, Fp b) { return from_raw((a.v_ * b.v_) % p_); }
  friend Fp operator/(Fp a, Fp b) { return a * b.inverse(); }
  Fp operator-() const { return from_raw(v_ == 0 ? 0 : p_ - v_); }

  Fp& operator+=(Fp b) { return *this = *this + b; }
  Fp& operator-=(Fp b) { return *this = *this - b; }
  Fp& operator*=(Fp b) { return *this = *this * b; }
  Fp& operator/=(Fp b) { return *this = *this / b; }

  friend bool operator==(Fp a, Fp b) { return a.v_ == b.v_; }
  friend bool operator!=(Fp a, Fp b) { return a.v_ != b.v_; }

  Fp inverse() const {
    if (v_ == 0) throw std::domain_error("Fp: division by zero");
    // Fermat; p_ is prime by contract.
    std::uint64_t e = p_ - 2, base = v_, acc = 1;
    while (e) {
      if (e & 1) acc = acc * base % p_;
      base = base * base % p_;
      e >>= 1;
    }
    return from_raw(acc);
  }

 private:
  static Fp from_raw(std::uint64_t v) {
    Fp x;
    x.v_ = v;
    return x;
  }
  std::uint64_t v_;
  inline static std::uint64_t p_ = 32003;
};

template <class K>
struct FieldTraits;

template <>
struct FieldTraits<Rat> {
  static std::string name() { return "Q"; }
  static std::string to_string(const Rat& x) { return x.get_str(); }
  static Rat from_int(long long x) { return Rat(static_cast<long>(x)); }
};

template <>
struct FieldTraits<Fp> {
  static std::string name() { return "F" + std::to_string(Fp::modulus()); }
  static std::string to_string(const Fp& x) { return std::to_string(x.value()); }
  static Fp from_int(long long x) { return Fp(x); }
};

template <class K>
K scalar_of(long long x) {
  return FieldTraits<K>::from_int(x);
}

template <class K>
bool is_zero(const K& x) {
  return x == K(0);
}

}  // namespace qmod
