#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace podles {

using Int = mpz_class;
using Rat = mpq_class;

struct DegreeCapError : std::runtime_error {
    explicit DegreeCapError(const std::string& what) : std::runtime_error(what) {}
};
struct DivisionByZero : std::runtime_error {
    explicit DivisionByZero(const std::string& what) : std::runtime_error(what) {}
};
struct PoleError : std::runtime_error {
    explicit PoleError(const std::string& what) : std::runtime_error(what) {}
};

// Global degree cap for intermediate polynomials in s. Guards against
// runaway expression swell; raise it for deep eliminations.
int scalar_degree_cap();
void set_scalar_degree_cap(int cap);

// Sparse univariate polynomial over Z in the variable s.
// Terms sorted by ascending exponent, no zero coefficients.
class IntPoly {
  public:
    struct Term {
        int exp;
        Int coef;
    };

    IntPoly() = default;
    static IntPoly zero() { return IntPoly(); }
    static IntPoly constant(Int v);
    static IntPoly monomial(Int coef, int exp);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].exp == 0); }
    bool is_monomial() const { return terms_.size() == 1; }
    int degree() const { return terms_.empty() ? -1 : terms_.back().exp; }
    int low_exp() const { return terms_.empty() ? 0 : terms_.front().exp; }
    const Int& leading_coef() const;
    const std::vector<Term>& terms() const { return terms_; }

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    IntPoly operator-() const;
    bool operator==(const IntPoly& o) const;

    IntPoly mul_monomial(const Int& coef, int exp) const;
    IntPoly shifted(int exp) const { return mul_monomial(1, exp); }

    Int content() const;                 // gcd of coefficients, >= 0 (0 for zero poly)
    IntPoly primitive_part() const;      // content divided out, leading coef > 0
    IntPoly div_exact(const Int& g) const;
    static IntPoly gcd(const IntPoly& a, const IntPoly& b);  // primitive, positive leading coef
    static bool div_exact_poly(const IntPoly& a, const IntPoly& b, IntPoly& quot);

    Rat eval(const Rat& s0) const;
    std::string str(const std::string& var) const;  // terms in decreasing degree

    static IntPoly from_terms(std::vector<Term> terms);  // sorts, merges, strips zeros

  private:
    std::vector<Term> terms_;
    void check_cap() const;
};

// Exact rational function in s over Q, stored as a canonical pair of
// integer-coefficient polynomials:
//   - numerator and denominator coprime,
//   - denominator nonzero with positive leading coefficient,
//   - joint integer content of the pair is 1,
//   - zero is 0/1.
// q = s^2 throughout.
class ScalarK {
  public:
    ScalarK() : num_(), den_(IntPoly::constant(1)) {}
    ScalarK(const IntPoly& num, const IntPoly& den);

    static ScalarK zero() { return ScalarK(); }
    static ScalarK one() { return from_int(1); }
    static ScalarK from_int(long v);
    static ScalarK from_ratio(long num, long den);
    static ScalarK from_rat(const Rat& r);
    static ScalarK s_pow(int k);          // s^k, k may be negative
    static ScalarK q_pow(int k);          // q^k = s^{2k}
    static ScalarK from_poly(IntPoly p) { return ScalarK(std::move(p), IntPoly::constant(1)); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;
    const IntPoly& num() const { return num_; }
    const IntPoly& den() const { return den_; }

    friend ScalarK operator+(const ScalarK& a, const ScalarK& b);
    friend ScalarK operator-(const ScalarK& a, const ScalarK& b);
    friend ScalarK operator*(const ScalarK& a, const ScalarK& b);
    friend ScalarK operator/(const ScalarK& a, const ScalarK& b);
    ScalarK operator-() const;
    ScalarK& operator+=(const ScalarK& o) { *this = *this + o; return *this; }
    ScalarK& operator-=(const ScalarK& o) { *this = *this - o; return *this; }
    ScalarK& operator*=(const ScalarK& o) { *this = *this * o; return *this; }
    ScalarK& operator/=(const ScalarK& o) { *this = *this / o; return *this; }
    bool operator==(const ScalarK& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const ScalarK& o) const { return !(*this == o); }

    ScalarK inv() const;
    ScalarK pow(int k) const;

    Rat eval_at(const Rat& s0) const;  // throws PoleError at poles

    // Canonical text form: q-variable when every exponent is even, else s.
    std::string str() const;

    // Parse a scalar literal: integer, a/b, q^k, s^k, or coef*q^k forms.
    static ScalarK parse(const std::string& text);

  private:
    IntPoly num_, den_;
    void normalize();
};

inline ScalarK operator*(long a, const ScalarK& b) { return ScalarK::from_int(a) * b; }

// Parameters (c, d) of the sphere algebra; c + d != 0 enforced.
struct Params {
    ScalarK c, d;
    Params(ScalarK c_, ScalarK d_);
    static Params standard() { return Params(ScalarK::one(), ScalarK::zero()); }
    bool cd_zero() const { return (c * d).is_zero(); }
    bool c_eq_d() const { return c == d; }
};

}  // namespace podles
