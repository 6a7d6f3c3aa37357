#pragma once

#include "podles/algebra.hpp"

#include <array>
#include <functional>

namespace podles {

// Monomial tensor (a_0, ..., a_n), up to 6 slots.
struct Tuple {
    static constexpr int kMax = 6;
    std::array<PodlesMonomial, kMax> m{};
    uint8_t len = 0;

    Tuple() = default;
    Tuple(std::initializer_list<PodlesMonomial> ms) {
        for (const auto& x : ms) m[len++] = x;
    }
    int degree() const {
        int d = 0;
        for (int i = 0; i < len; ++i) d += m[i].degree();
        return d;
    }
    int weight() const {
        int w = 0;
        for (int i = 0; i < len; ++i) w += m[i].weight();
        return w;
    }
    int apar() const {  // total A-exponent mod 2
        int a = 0;
        for (int i = 0; i < len; ++i) a += m[i].aexp;
        return a & 1;
    }
    bool has_interior_unit() const {
        for (int i = 1; i < len; ++i)
            if (m[i].is_unit()) return true;
        return false;
    }
    auto operator<=>(const Tuple& o) const {
        if (auto c = len <=> o.len; c != 0) return c;
        for (int i = 0; i < len; ++i)
            if (auto c = m[i] <=> o.m[i]; c != 0) return c;
        return std::strong_ordering::equal;
    }
    bool operator==(const Tuple& o) const { return (*this <=> o) == 0; }
    std::string str() const;
};

// Element of A^{(x)(n+1)} in the PBW tuple basis.
struct TensorChain {
    int n = 0;  // tuples have n+1 slots
    LinComb<Tuple> terms;

    TensorChain() = default;
    explicit TensorChain(int deg) : n(deg) {}
    bool is_zero() const { return terms.is_zero(); }
    std::string str() const;
};

TensorChain chain_of(std::initializer_list<std::initializer_list<PodlesMonomial>> tuples);

// Hochschild b' (no wrap-around term).
TensorChain b_prime(const AlgebraContext& ctx, const TensorChain& x);

// Twisted Hochschild boundary b_sigma.
TensorChain b_sigma(const AlgebraContext& ctx, const Automorphism& aut, const TensorChain& x);

// Twisted cyclic operator lambda_sigma.
TensorChain cyclic_op(const Automorphism& aut, const TensorChain& x);

// Class in C_n^sigma: drops tuples whose sigma^{(x)(n+1)}-eigenvalue is not 1.
TensorChain project_sigma(const Automorphism& aut, const TensorChain& x);

// Connes B = (id - lambda_sigma) o s o N with s = prepend 1, N = sum lambda^i.
// Guarded against the closed-form degree-0/1 displays on first use.
TensorChain connes_B(const AlgebraContext& ctx, const Automorphism& aut, const TensorChain& x);

// Quotient by degenerate tuples (interior unit slots dropped).
TensorChain normalized(const TensorChain& x);

// Verifies b(sum_j alpha^j (t^j, t^{m-j}, t) - (t^{m+1},1,1))
//        == (sum_j alpha^j)(t^m, t) - (1, t^{m+1})
// for a sigma-eigenvector monomial t.
bool first_homology_relation_check(const AlgebraContext& ctx, const Automorphism& aut,
                                   const PodlesMonomial& t, int m);

// Linear functional on the PBW basis given by a closed-form rule.
class Functional0 {
  public:
    Functional0(std::string name, std::function<ScalarK(const PodlesMonomial&)> rule)
        : name_(std::move(name)), rule_(std::move(rule)) {}
    const std::string& name() const { return name_; }
    ScalarK operator()(const PodlesMonomial& m) const { return rule_(m); }
    ScalarK operator()(const AlgebraElement& x) const {
        ScalarK acc = ScalarK::zero();
        for (const auto& [m, c] : x.entries()) acc += c * rule_(m);
        return acc;
    }

    // invariant functional of Eq-(19) type, any (c,d)
    static Functional0 haar_h(const Params& params);
    // sigma-twisted 0-cocycles certifying HH_0 at lambda = q^{-(2b+2)}
    static Functional0 tau0(const Params& params, int b);
    static Functional0 tau_b1(int b);
    // standard-sphere 0-cocycle dual to [A] at lambda = q^2
    static Functional0 h_A();

  private:
    std::string name_;
    std::function<ScalarK(const PodlesMonomial&)> rule_;
};

// S-pairing: phi applied to the full product of the entries.
ScalarK S_pair(const AlgebraContext& ctx, const Functional0& phi, const TensorChain& x);

// Product collapse of a chain (the chain-level S image).
AlgebraElement product_collapse(const AlgebraContext& ctx, const TensorChain& x);

// The named 2-chains.
TensorChain make_eta();
TensorChain make_omega2(const Params& params, int b);

}  // namespace podles
