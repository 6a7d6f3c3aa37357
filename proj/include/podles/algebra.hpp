#pragma once

#include "podles/scalar.hpp"

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

namespace podles {

// PBW basis monomial of A(c,d): B^j A^k for j >= 0, (B*)^{-j} A^k for j < 0.
struct PodlesMonomial {
    int bexp = 0;  // signed B-exponent (negative = B*)
    int aexp = 0;  // A-exponent, >= 0

    int weight() const { return bexp; }
    int degree() const { return (bexp < 0 ? -bexp : bexp) + aexp; }
    bool is_unit() const { return bexp == 0 && aexp == 0; }
    auto operator<=>(const PodlesMonomial&) const = default;

    static PodlesMonomial one() { return {0, 0}; }
    static PodlesMonomial A(int k = 1) { return {0, k}; }
    static PodlesMonomial B(int j = 1) { return {j, 0}; }
    static PodlesMonomial Bstar(int j = 1) { return {-j, 0}; }

    std::string str() const;
};

// Sorted sparse linear combination with ScalarK coefficients.
template <class Key>
class LinComb {
  public:
    using Entry = std::pair<Key, ScalarK>;

    LinComb() = default;
    explicit LinComb(const Key& k, ScalarK c = ScalarK::one()) {
        if (!c.is_zero()) ents_.emplace_back(k, std::move(c));
    }

    bool is_zero() const { return ents_.empty(); }
    size_t size() const { return ents_.size(); }
    const std::vector<Entry>& entries() const { return ents_; }

    void add(const Key& k, const ScalarK& c) {
        if (c.is_zero()) return;
        auto it = std::lower_bound(ents_.begin(), ents_.end(), k,
                                   [](const Entry& e, const Key& kk) { return e.first < kk; });
        if (it != ents_.end() && it->first == k) {
            it->second += c;
            if (it->second.is_zero()) ents_.erase(it);
        } else {
            ents_.insert(it, {k, c});
        }
    }

    void add_scaled(const LinComb& o, const ScalarK& f) {
        if (f.is_zero()) return;
        for (const auto& [k, c] : o.ents_) add(k, c * f);
    }

    LinComb& operator+=(const LinComb& o) {
        add_scaled(o, ScalarK::one());
        return *this;
    }
    LinComb& operator-=(const LinComb& o) {
        add_scaled(o, ScalarK::from_int(-1));
        return *this;
    }
    friend LinComb operator+(LinComb a, const LinComb& b) { a += b; return a; }
    friend LinComb operator-(LinComb a, const LinComb& b) { a -= b; return a; }
    friend LinComb operator*(const ScalarK& f, LinComb a) {
        if (f.is_zero()) return LinComb();
        for (auto& [k, c] : a.ents_) c *= f;
        return a;
    }
    bool operator==(const LinComb& o) const { return ents_ == o.ents_; }

    ScalarK coeff(const Key& k) const {
        auto it = std::lower_bound(ents_.begin(), ents_.end(), k,
                                   [](const Entry& e, const Key& kk) { return e.first < kk; });
        return (it != ents_.end() && it->first == k) ? it->second : ScalarK::zero();
    }

  private:
    std::vector<Entry> ents_;
};

using AlgebraElement = LinComb<PodlesMonomial>;

enum class Gen { A, B, Bstar };

// Diagonal automorphism: B -> lambda B, B* -> lambda^{-1} B*, A -> sign * A.
// sign = -1 is an automorphism only when c = d.
class Automorphism {
  public:
    Automorphism(ScalarK lambda, int sign, const Params& params);
    static Automorphism sigma(ScalarK lambda, const Params& params) {
        return Automorphism(std::move(lambda), +1, params);
    }
    static Automorphism tau(ScalarK lambda, const Params& params) {
        return Automorphism(std::move(lambda), -1, params);
    }
    static Automorphism modular(const Params& params) {
        return Automorphism(ScalarK::q_pow(-2), +1, params);
    }
    static Automorphism identity(const Params& params) {
        return Automorphism(ScalarK::one(), +1, params);
    }

    const ScalarK& lambda() const { return lambda_; }
    int sign() const { return sign_; }

    ScalarK eigenvalue(const PodlesMonomial& m) const;
    AlgebraElement apply(const AlgebraElement& x) const;

  private:
    struct PowCache {
        std::vector<ScalarK> pos, neg;
        std::mutex mu;
    };
    ScalarK lambda_;
    ScalarK lambda_inv_;
    int sign_;
    std::shared_ptr<PowCache> cache_;  // shared across copies
};

// The coordinate algebra A(c,d) with its rewriting caches.
class AlgebraContext {
  public:
    explicit AlgebraContext(Params params) : params_(std::move(params)) {}
    const Params& params() const { return params_; }

    // Product of two basis monomials in PBW normal form.
    AlgebraElement mono_mul(const PodlesMonomial& a, const PodlesMonomial& b) const;
    AlgebraElement mul(const AlgebraElement& x, const AlgebraElement& y) const;
    AlgebraElement mul(const AlgebraElement& x, const AlgebraElement& y, const AlgebraElement& z) const {
        return mul(mul(x, y), z);
    }

    // PBW normal form of a generator word by leftmost-innermost rewriting of
    // adjacent out-of-order pairs (AB -> q^{-2}BA, AB* -> q^2 B*A,
    // B*B -> cd + (c-d)A - A^2, BB* -> cd + q^2(c-d)A - q^4 A^2).
    AlgebraElement normal_form(const std::vector<Gen>& word) const;

    static AlgebraElement gen(Gen g);
    static AlgebraElement unit() { return AlgebraElement(PodlesMonomial::one()); }

  private:
    Params params_;
    // cache of B-block merge polynomials: (j1, j2) -> element of weight j1+j2
    mutable std::map<std::pair<int, int>, AlgebraElement> merge_cache_;
    mutable std::mutex mu_;
    AlgebraElement bmerge(int j1, int j2) const;
};

// weight: common bexp over the support if homogeneous
std::optional<int> weight(const AlgebraElement& x);
int degree(const AlgebraElement& x);  // max |bexp| + aexp, -1 for zero

std::string to_string(const AlgebraElement& x);

}  // namespace podles
