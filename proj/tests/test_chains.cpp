#include "doctest.h"
#include "podles/chains.hpp"

#include <random>

using namespace podles;

namespace {

const PodlesMonomial MA = PodlesMonomial::A();
const PodlesMonomial MB = PodlesMonomial::B();
const PodlesMonomial MBs = PodlesMonomial::Bstar();
const PodlesMonomial M1 = PodlesMonomial::one();

PodlesMonomial rand_mono(std::mt19937& rng, int d) {
    std::uniform_int_distribution<int> jd(-d, d);
    int j = jd(rng);
    std::uniform_int_distribution<int> kd(0, d - std::abs(j));
    return PodlesMonomial{j, kd(rng)};
}

TensorChain rand_chain(std::mt19937& rng, int n, int d, int terms = 3) {
    TensorChain x(n);
    for (int t = 0; t < terms; ++t) {
        Tuple tp;
        tp.len = n + 1;
        for (int i = 0; i <= n; ++i) tp.m[i] = rand_mono(rng, d);
        std::uniform_int_distribution<int> cd(-3, 3);
        x.terms.add(tp, ScalarK::from_int(cd(rng)));
    }
    return x;
}

}  // namespace

TEST_CASE("b_prime basics and b'^2 = 0") {
    AlgebraContext ctx(Params::standard());
    // b'(1,1) = 1
    TensorChain x = chain_of({{M1, M1}});
    TensorChain r = b_prime(ctx, x);
    CHECK(r.terms == LinComb<Tuple>(Tuple{M1}, ScalarK::one()));
    // b'(1,A,1) = (A,1) - (1,A)
    TensorChain y = chain_of({{M1, MA, M1}});
    TensorChain ry = b_prime(ctx, y);
    TensorChain expect(1);
    expect.terms.add(Tuple{MA, M1}, ScalarK::one());
    expect.terms.add(Tuple{M1, MA}, -ScalarK::one());
    CHECK(ry.terms == expect.terms);
    // b' o b' = 0 on random degree-3 chains
    std::mt19937 rng(1);
    for (int it = 0; it < 20; ++it) {
        TensorChain z = rand_chain(rng, 3, 2);
        CHECK(b_prime(ctx, b_prime(ctx, z)).is_zero());
    }
}

TEST_CASE("b_sigma examples and identities") {
    Params p = Params::standard();
    AlgebraContext ctx(p);
    Automorphism id = Automorphism::identity(p);
    // b_sigma(1, A) = A - sigma(A) = 0 for sign +1
    CHECK(b_sigma(ctx, id, chain_of({{M1, MA}})).is_zero());

    // b_sigma(eta) = (q^4 - q^{-2})(A,A) with sigma = sigma_{q^2}
    // (the source text displays coefficient 2(q^4-q^{-2}); direct expansion
    //  of the displayed eta gives coefficient 1, which is what we assert)
    Automorphism sq2 = Automorphism::sigma(ScalarK::q_pow(2), p);
    TensorChain be = b_sigma(ctx, sq2, make_eta());
    TensorChain expect(1);
    expect.terms.add(Tuple{MA, MA}, ScalarK::q_pow(4) - ScalarK::q_pow(-2));
    CHECK(be.terms == expect.terms);

    // b_sigma(omega_2) = 0 at lambda = q^{-(2b+2)}, b = 0..3, across params
    for (int pi = 0; pi < 3; ++pi) {
        Params pp = pi == 0   ? Params::standard()
                    : pi == 1 ? Params(ScalarK::one(), ScalarK::one())
                              : Params(ScalarK::from_int(2), ScalarK::one());
        AlgebraContext cc(pp);
        for (int b = 0; b <= 3; ++b) {
            Automorphism s = Automorphism::sigma(ScalarK::q_pow(-(2 * b + 2)), pp);
            CHECK(b_sigma(cc, s, make_omega2(pp, b)).is_zero());
        }
    }

    // b_sigma^2 = 0 and the intertwining b_sigma (id - lambda) = (id - lambda) b'
    std::mt19937 rng(7);
    for (int pi = 0; pi < 2; ++pi) {
        Params pp = pi == 0 ? Params::standard() : Params(ScalarK::from_int(2), ScalarK::one());
        AlgebraContext cc(pp);
        Automorphism s = Automorphism::sigma(ScalarK::q_pow(-4), pp);
        for (int n = 2; n <= 4; ++n) {
            TensorChain z = rand_chain(rng, n, 2);
            CHECK(b_sigma(cc, s, b_sigma(cc, s, z)).is_zero());
            TensorChain lhs = b_sigma(cc, s, z);
            lhs.terms -= b_sigma(cc, s, cyclic_op(s, z)).terms;
            TensorChain bp = b_prime(cc, z);
            TensorChain rhs = bp;
            rhs.terms -= cyclic_op(s, bp).terms;
            CHECK(lhs.terms == rhs.terms);
        }
    }
}

TEST_CASE("b_sigma preserves total weight") {
    Params p(ScalarK::from_int(2), ScalarK::one());
    AlgebraContext ctx(p);
    Automorphism s = Automorphism::sigma(ScalarK::q_pow(2), p);
    std::mt19937 rng(3);
    for (int it = 0; it < 25; ++it) {
        Tuple t;
        t.len = 4;
        for (int i = 0; i < 4; ++i) t.m[i] = rand_mono(rng, 2);
        TensorChain x(3);
        x.terms.add(t, ScalarK::one());
        TensorChain bx = b_sigma(ctx, s, x);
        for (const auto& [tt, c] : bx.terms.entries()) CHECK(tt.weight() == t.weight());
    }
}

TEST_CASE("cyclic operator") {
    Params p = Params::standard();
    AlgebraContext ctx(p);
    Automorphism id = Automorphism::identity(p);
    // lambda(1, A) = -(A, 1) for sigma(A) = A
    TensorChain r = cyclic_op(id, chain_of({{M1, MA}}));
    TensorChain expect(1);
    expect.terms.add(Tuple{MA, M1}, -ScalarK::one());
    CHECK(r.terms == expect.terms);

    Automorphism s = Automorphism::sigma(ScalarK::q_pow(-2), p);
    std::mt19937 rng(11);
    for (int n = 1; n <= 3; ++n) {
        TensorChain z = rand_chain(rng, n, 2);
        // lambda^{n+1} = sigma tensor-applied
        TensorChain acc = z;
        for (int i = 0; i <= n; ++i) acc = cyclic_op(s, acc);
        TensorChain sz(n);
        for (const auto& [t, c] : z.terms.entries()) {
            ScalarK e = ScalarK::one();
            for (int i = 0; i < t.len; ++i) e *= s.eigenvalue(t.m[i]);
            sz.terms.add(t, c * e);
        }
        CHECK(acc.terms == sz.terms);
        // b_sigma lambda^{n+2} = lambda^{n+1} b_sigma  on C_{n+1}... checked via chains of deg n
        TensorChain lhs = z;
        for (int i = 0; i <= n; ++i) lhs = cyclic_op(s, lhs);
        lhs = b_sigma(ctx, s, lhs);
        TensorChain rhs = b_sigma(ctx, s, z);
        for (int i = 0; i < n; ++i) rhs = cyclic_op(s, rhs);
        CHECK(lhs.terms == rhs.terms);
    }
}

TEST_CASE("project_sigma") {
    Params p = Params::standard();
    Automorphism s = Automorphism::sigma(ScalarK::q_pow(2), p);
    TensorChain x = chain_of({{MB, MA}});
    CHECK(project_sigma(s, x).is_zero());  // eigenvalue q^2 != 1
    TensorChain y = chain_of({{MB, MBs}});
    CHECK(project_sigma(s, y).terms == y.terms);  // weights cancel
    Automorphism id = Automorphism::identity(p);
    std::mt19937 rng(13);
    TensorChain z = rand_chain(rng, 2, 2);
    CHECK(project_sigma(id, z).terms == z.terms);
}

TEST_CASE("Connes B and mixed-complex identity") {
    Params p = Params::standard();
    AlgebraContext ctx(p);
    Automorphism s = Automorphism::sigma(ScalarK::q_pow(-2), p);
    // B_0[a_0] closed form (exercised through the guard) and b B + B b = 0 on classes
    std::mt19937 rng(17);
    for (int n = 1; n <= 2; ++n) {
        for (int it = 0; it < 10; ++it) {
            TensorChain z = project_sigma(s, rand_chain(rng, n, 2));
            TensorChain lhs = b_sigma(ctx, s, connes_B(ctx, s, z));
            lhs.terms += connes_B(ctx, s, b_sigma(ctx, s, z)).terms;
            CHECK(project_sigma(s, lhs).is_zero());
        }
    }
}

TEST_CASE("first homology relation") {
    Params p = Params::standard();
    AlgebraContext ctx(p);
    Automorphism id = Automorphism::identity(p);
    CHECK(first_homology_relation_check(ctx, id, MB, 1));
    Automorphism s = Automorphism::sigma(ScalarK::q_pow(2), p);
    CHECK(first_homology_relation_check(ctx, s, MA, 2));  // alpha = 1 case
    for (int m = 0; m <= 4; ++m) {
        CHECK(first_homology_relation_check(ctx, id, MA, m));
        CHECK(first_homology_relation_check(ctx, id, MB, m));
        CHECK(first_homology_relation_check(ctx, id, MBs, m));
        CHECK(first_homology_relation_check(ctx, s, MB, m));
    }
}

TEST_CASE("functionals: h, tau0, h_A") {
    Params p = Params::standard();
    AlgebraContext ctx(p);
    Functional0 h = Functional0::haar_h(p);
    // h(A^n) at (1,0) = (1-q^2)/(1-q^{2n+2})
    for (int n = 0; n <= 5; ++n) {
        ScalarK want = (ScalarK::one() - ScalarK::q_pow(2)) /
                       (ScalarK::one() - ScalarK::q_pow(2 * n + 2));
        CHECK(h(PodlesMonomial::A(n)) == want);
    }
    CHECK(h(PodlesMonomial{1, 2}) == ScalarK::zero());  // h(B A^2) = 0
    CHECK(h(PodlesMonomial::one()) == ScalarK::one());

    Functional0 hA = Functional0::h_A();
    CHECK(hA(PodlesMonomial::A(1)) == ScalarK::one());  // (1-q^4)/(1-q^4)
    CHECK(hA(PodlesMonomial::one()) == ScalarK::zero());

    // h = tau0 + (1+q^2)^{-1} h_A on monomials up to degree 8 at (1,0)
    Functional0 t0 = Functional0::tau0(p, 0);
    ScalarK f = (ScalarK::one() + ScalarK::q_pow(2)).inv();
    for (int j = -4; j <= 4; ++j)
        for (int k = 0; k + std::abs(j) <= 8; ++k) {
            PodlesMonomial m{j, k};
            CHECK(h(m) == t0(m) + f * hA(m));
        }

    // h modular property: h(xy) = h(y sigma_mod(x)) on random monomials, all grid params
    std::mt19937 rng(23);
    for (int pi = 0; pi < 3; ++pi) {
        Params pp = pi == 0   ? Params::standard()
                    : pi == 1 ? Params(ScalarK::one(), ScalarK::one())
                              : Params(ScalarK::from_int(2), ScalarK::one());
        AlgebraContext cc(pp);
        Functional0 hh = Functional0::haar_h(pp);
        Automorphism mod = Automorphism::modular(pp);
        for (int it = 0; it < 50; ++it) {
            PodlesMonomial x = rand_mono(rng, 3), y = rand_mono(rng, 3);
            ScalarK lhs = hh(cc.mul(AlgebraElement(x), AlgebraElement(y)));
            ScalarK rhs = hh(cc.mul(AlgebraElement(y), mod.apply(AlgebraElement(x))));
            CHECK(lhs == rhs);
        }
    }

    // worked instance: h(BB*) = q^{-2} h(B*B), both = q^2/((1+q^2)(1+q^2+q^4))
    Functional0 h10 = Functional0::haar_h(p);
    ScalarK hbbs = h10(ctx.mul(AlgebraContext::gen(Gen::B), AlgebraContext::gen(Gen::Bstar)));
    ScalarK hbsb = h10(ctx.mul(AlgebraContext::gen(Gen::Bstar), AlgebraContext::gen(Gen::B)));
    ScalarK want = ScalarK::q_pow(2) / ((ScalarK::one() + ScalarK::q_pow(2)) *
                                        (ScalarK::one() + ScalarK::q_pow(2) + ScalarK::q_pow(4)));
    CHECK(hbbs == want);
    CHECK(hbbs == ScalarK::q_pow(-2) * hbsb);
}

TEST_CASE("tau0 and tau_b1 are sigma-twisted 0-cocycles at lambda = q^{-(2b+2)}") {
    std::mt19937 rng(29);
    for (int pi = 0; pi < 3; ++pi) {
        Params pp = pi == 0   ? Params::standard()
                    : pi == 1 ? Params(ScalarK::one(), ScalarK::one())
                              : Params(ScalarK::from_int(2), ScalarK::one());
        AlgebraContext cc(pp);
        for (int b = 0; b <= 2; ++b) {
            Automorphism s = Automorphism::sigma(ScalarK::q_pow(-(2 * b + 2)), pp);
            Functional0 t0 = Functional0::tau0(pp, b);
            Functional0 tb = Functional0::tau_b1(b);
            for (int it = 0; it < 30; ++it) {
                PodlesMonomial x = rand_mono(rng, 3), y = rand_mono(rng, 3);
                AlgebraElement xy = cc.mul(AlgebraElement(x), AlgebraElement(y));
                AlgebraElement syx = cc.mul(s.apply(AlgebraElement(y)), AlgebraElement(x));
                CHECK(t0(xy) == t0(syx));
                CHECK(tb(xy) == tb(syx));
            }
        }
    }
    // h is sigma_{q^2}-twisted (sigma_mod^{-1}); equivalent to the modular identity
    Params p = Params::standard();
    AlgebraContext ctx(p);
    Automorphism sq2 = Automorphism::sigma(ScalarK::q_pow(2), p);
    Functional0 h = Functional0::haar_h(p);
    std::mt19937 rng2(31);
    for (int it = 0; it < 40; ++it) {
        PodlesMonomial x = rand_mono(rng2, 3), y = rand_mono(rng2, 3);
        AlgebraElement xy = ctx.mul(AlgebraElement(x), AlgebraElement(y));
        AlgebraElement syx = ctx.mul(sq2.apply(AlgebraElement(y)), AlgebraElement(x));
        CHECK(h(xy) == h(syx));
    }
}

TEST_CASE("S pairing and eta/omega shapes") {
    Params p = Params::standard();
    AlgebraContext ctx(p);
    // S tau_0 (1,1,1) = tau0(1) = 1
    Functional0 t0 = Functional0::tau0(p, 0);
    CHECK(S_pair(ctx, t0, chain_of({{M1, M1, M1}})) == ScalarK::one());
    // S eta = (q^4 - q^{-2}) A^2
    AlgebraElement Se = product_collapse(ctx, make_eta());
    AlgebraElement want;
    want.add(PodlesMonomial::A(2), ScalarK::q_pow(4) - ScalarK::q_pow(-2));
    CHECK(Se == want);
    // S h_A(eta) = q^2 - q^{-2}
    CHECK(S_pair(ctx, Functional0::h_A(), make_eta()) == ScalarK::q_pow(2) - ScalarK::q_pow(-2));

    // eta has 7 terms; coefficient of (A,A,A) is q^6 - q^{-2}
    TensorChain eta = make_eta();
    CHECK(eta.terms.size() == 7);
    CHECK(eta.terms.coeff(Tuple{MA, MA, MA}) == ScalarK::q_pow(6) - ScalarK::q_pow(-2));
    // omega2 at b=0, (1,0): the (A^b,1,1) term vanishes since cd = 0
    TensorChain w = make_omega2(p, 0);
    CHECK(w.terms.coeff(Tuple{M1, M1, M1}) == ScalarK::zero());
    // both are weight-0 chains: projection leaves them unchanged
    Automorphism sq2 = Automorphism::sigma(ScalarK::q_pow(2), p);
    CHECK(project_sigma(sq2, eta).terms == eta.terms);
    Automorphism sm2 = Automorphism::sigma(ScalarK::q_pow(-2), p);
    CHECK(project_sigma(sm2, w).terms == w.terms);
}
