#include "podles/resolution.hpp"

namespace podles {

namespace {

const int kRanks[5] = {1, 3, 4, 4, 4};

// weight offsets per (level, slot)
const int kWOff[5][4] = {
    {0, 0, 0, 0},
    {0, -1, 1, 0},    // e_A, e_B*, e_B
    {-1, 1, 0, 0},    // e_A^e_B*, e_A^e_B, thS1, thT1
    {0, 0, -1, 1},    // e_A^thS1, e_A^thT1, e_B*^thS1, e_B^thT1
    {-1, 1, 0, 0},    // e_A^e_B*^thS1, e_A^e_B^thT1, thS2, thT2
};

// degree offsets: e-generators 1, theta^1 and wedge pairs 2, level-4 3
const int kDOff[5] = {0, 1, 2, 2, 3};

const char* kLabels[5][4] = {
    {"e0", "", "", ""},
    {"e_A", "e_B*", "e_B", ""},
    {"e_A^e_B*", "e_A^e_B", "thS1", "thT1"},
    {"e_A^thS1", "e_A^thT1", "e_B*^thS1", "e_B^thT1"},
    {"e_A^e_B*^thS1", "e_A^e_B^thT1", "thS2", "thT2"},
};

AlgebraElement gA() { return AlgebraElement(PodlesMonomial::A()); }
AlgebraElement gB() { return AlgebraElement(PodlesMonomial::B()); }
AlgebraElement gBs() { return AlgebraElement(PodlesMonomial::Bstar()); }

}  // namespace

int module_rank(int level) { return kRanks[level]; }
int basis_weight_offset(int level, int slot) { return kWOff[level][slot]; }
int basis_degree_offset(int level, int slot) {
    (void)slot;
    return kDOff[level];
}
std::string basis_label(int level, int slot) { return kLabels[level][slot]; }

AlgebraElement twisted_action(const AlgebraContext& ctx, const Automorphism& aut,
                              const AlgebraElement& a, const AlgebraElement& t1,
                              const AlgebraElement& t2) {
    return ctx.mul(ctx.mul(aut.apply(t2), a), t1);
}

ModuleVector d1(const AlgebraContext& ctx, const Automorphism& aut, const ModuleVector& v) {
    const ScalarK lam = aut.lambda();
    const ScalarK mu = ScalarK::from_int(aut.sign());
    const auto& a1 = v.coord[0];
    const auto& a2 = v.coord[1];
    const auto& a3 = v.coord[2];
    ModuleVector out;
    out.level = 0;
    AlgebraElement r = ctx.mul(a1, gA());
    r.add_scaled(ctx.mul(gA(), a1), -mu);
    r += ctx.mul(a2, gBs());
    r.add_scaled(ctx.mul(gBs(), a2), -lam.inv());
    r += ctx.mul(a3, gB());
    r.add_scaled(ctx.mul(gB(), a3), -lam);
    out.coord[0] = std::move(r);
    return out;
}

ModuleVector d2(const AlgebraContext& ctx, const Automorphism& aut, const ModuleVector& v) {
    const ScalarK lam = aut.lambda();
    const ScalarK lami = lam.inv();
    const ScalarK mu = ScalarK::from_int(aut.sign());
    const ScalarK dmc = ctx.params().d - ctx.params().c;
    const auto& b1 = v.coord[0];
    const auto& b2 = v.coord[1];
    const auto& b3 = v.coord[2];
    const auto& b4 = v.coord[3];
    ModuleVector out;
    out.level = 1;
    // e_A component
    {
        AlgebraElement r;
        r.add_scaled(ctx.mul(gBs(), b1), lami);
        r.add_scaled(ctx.mul(b1, gBs()), -ScalarK::q_pow(2));
        r.add_scaled(ctx.mul(gB(), b2), ScalarK::q_pow(2) * lam);
        r.add_scaled(ctx.mul(b2, gB()), -ScalarK::one());
        r.add_scaled(ctx.mul(b3, gA()), -ScalarK::q_pow(1) * ScalarK::q_pow(2));
        r.add_scaled(ctx.mul(gA(), b3), -ScalarK::q_pow(1) * ScalarK::q_pow(2) * mu);
        r.add_scaled(b3, -ScalarK::q_pow(1) * dmc);
        r.add_scaled(ctx.mul(b4, gA()), -ScalarK::q_pow(-1));
        r.add_scaled(ctx.mul(gA(), b4), -ScalarK::q_pow(-1) * mu);
        r.add_scaled(b4, -ScalarK::q_pow(-1) * dmc);
        out.coord[0] = std::move(r);
    }
    // e_B* component
    {
        AlgebraElement r = ctx.mul(b1, gA());
        r.add_scaled(ctx.mul(gA(), b1), -ScalarK::q_pow(2) * mu);
        r.add_scaled(ctx.mul(b3, gB()), -ScalarK::q_pow(-1));
        r.add_scaled(ctx.mul(gB(), b4), -ScalarK::q_pow(-1) * lam);
        out.coord[1] = std::move(r);
    }
    // e_B component
    {
        AlgebraElement r;
        r.add_scaled(ctx.mul(b2, gA()), ScalarK::q_pow(2));
        r.add_scaled(ctx.mul(gA(), b2), -mu);
        r.add_scaled(ctx.mul(gBs(), b3), -ScalarK::q_pow(-1) * lami);
        r.add_scaled(ctx.mul(b4, gBs()), -ScalarK::q_pow(-1));
        out.coord[2] = std::move(r);
    }
    return out;
}

ModuleVector d3(const AlgebraContext& ctx, const Automorphism& aut, const ModuleVector& v) {
    const ScalarK lam = aut.lambda();
    const ScalarK lami = lam.inv();
    const ScalarK mu = ScalarK::from_int(aut.sign());
    const ScalarK cmd = ctx.params().c - ctx.params().d;
    const auto& a1 = v.coord[0];
    const auto& a2 = v.coord[1];
    const auto& a3 = v.coord[2];
    const auto& a4 = v.coord[3];
    ModuleVector out;
    out.level = 2;
    // e_A^e_B* component
    {
        AlgebraElement r;
        r.add_scaled(ctx.mul(a1, gB()), ScalarK::q_pow(-3) * ScalarK::s_pow(0));
        r.add_scaled(ctx.mul(gB(), a2), ScalarK::q_pow(-1) * lam);
        r.add_scaled(ctx.mul(a3, gA()), -ScalarK::q_pow(-1));
        r.add_scaled(ctx.mul(gA(), a3), -ScalarK::q_pow(-1) * ScalarK::q_pow(2) * mu);
        r.add_scaled(a3, ScalarK::q_pow(-1) * cmd);
        out.coord[0] = std::move(r);
    }
    // e_A^e_B component
    {
        AlgebraElement r;
        r.add_scaled(ctx.mul(gBs(), a1), ScalarK::q_pow(-3) * lami);
        r.add_scaled(ctx.mul(a2, gBs()), ScalarK::q_pow(-1));
        r.add_scaled(ctx.mul(a4, gA()), -ScalarK::q_pow(-1) * ScalarK::q_pow(2));
        r.add_scaled(ctx.mul(gA(), a4), -ScalarK::q_pow(-1) * mu);
        r.add_scaled(a4, ScalarK::q_pow(-1) * cmd);
        out.coord[1] = std::move(r);
    }
    // thS1 component
    {
        AlgebraElement r = ctx.mul(a1, gA());
        r.add_scaled(ctx.mul(gA(), a1), -mu);
        r += ctx.mul(a3, gBs());
        r.add_scaled(ctx.mul(gB(), a4), -lam);
        out.coord[2] = std::move(r);
    }
    // thT1 component
    {
        AlgebraElement r = ctx.mul(a2, gA());
        r.add_scaled(ctx.mul(gA(), a2), -mu);
        r.add_scaled(ctx.mul(gBs(), a3), -lami);
        r += ctx.mul(a4, gB());
        out.coord[3] = std::move(r);
    }
    return out;
}

ModuleVector d4(const AlgebraContext& ctx, const Automorphism& aut, const ModuleVector& v) {
    const ScalarK lam = aut.lambda();
    const ScalarK lami = lam.inv();
    const ScalarK mu = ScalarK::from_int(aut.sign());
    const ScalarK cmd = ctx.params().c - ctx.params().d;
    const auto& b1 = v.coord[0];
    const auto& b2 = v.coord[1];
    const auto& b3 = v.coord[2];
    const auto& b4 = v.coord[3];
    ModuleVector out;
    out.level = 3;
    // e_A^thS1 component
    {
        AlgebraElement r;
        r.add_scaled(ctx.mul(b1, gBs()), -ScalarK::q_pow(2));
        r.add_scaled(ctx.mul(gB(), b2), ScalarK::q_pow(2) * lam);
        r.add_scaled(ctx.mul(b3, gA()), -ScalarK::q_pow(1) * ScalarK::q_pow(2));
        r.add_scaled(ctx.mul(gA(), b3), -ScalarK::q_pow(1) * ScalarK::q_pow(2) * mu);
        r.add_scaled(b3, ScalarK::q_pow(1) * cmd);
        out.coord[0] = std::move(r);
    }
    // e_A^thT1 component
    {
        AlgebraElement r;
        r.add_scaled(ctx.mul(gBs(), b1), lami);
        r.add_scaled(ctx.mul(b2, gB()), -ScalarK::one());
        r.add_scaled(ctx.mul(b4, gA()), -ScalarK::q_pow(-1));
        r.add_scaled(ctx.mul(gA(), b4), -ScalarK::q_pow(-1) * mu);
        r.add_scaled(b4, ScalarK::q_pow(-1) * cmd);
        out.coord[1] = std::move(r);
    }
    // e_B*^thS1 component
    {
        AlgebraElement r = ctx.mul(b1, gA());
        r.add_scaled(ctx.mul(gA(), b1), -ScalarK::q_pow(2) * mu);
        r.add_scaled(ctx.mul(b3, gB()), -ScalarK::q_pow(-1));
        r.add_scaled(ctx.mul(gB(), b4), -ScalarK::q_pow(-1) * lam);
        out.coord[2] = std::move(r);
    }
    // e_B^thT1 component
    {
        AlgebraElement r;
        r.add_scaled(ctx.mul(b2, gA()), ScalarK::q_pow(2));
        r.add_scaled(ctx.mul(gA(), b2), -mu);
        r.add_scaled(ctx.mul(gBs(), b3), -ScalarK::q_pow(-1) * lami);
        r.add_scaled(ctx.mul(b4, gBs()), -ScalarK::q_pow(-1));
        out.coord[3] = std::move(r);
    }
    return out;
}

ModuleVector apply_d(int level, const AlgebraContext& ctx, const Automorphism& aut,
                     const ModuleVector& v) {
    switch (level) {
        case 1: return d1(ctx, aut, v);
        case 2: return d2(ctx, aut, v);
        case 3: return d3(ctx, aut, v);
        case 4: return d4(ctx, aut, v);
        default: throw std::invalid_argument("differential level must be 1..4");
    }
}

namespace {

AeElement ae(PodlesMonomial l, PodlesMonomial r, ScalarK c = ScalarK::one()) {
    AeElement x;
    x.add({l, r}, std::move(c));
    return x;
}

const PodlesMonomial mOne = PodlesMonomial::one();
const PodlesMonomial mA = PodlesMonomial::A();
const PodlesMonomial mB = PodlesMonomial::B();
const PodlesMonomial mBs = PodlesMonomial::Bstar();

}  // namespace

std::vector<AeElement> ae_d1(int slot_in) {
    // d1(e_t) = t (x) 1 - 1 (x) t^o, basis order (e_A, e_B*, e_B)
    PodlesMonomial t = slot_in == 0 ? mA : slot_in == 1 ? mBs : mB;
    AeElement x = ae(t, mOne);
    x.add({mOne, t}, -ScalarK::one());
    return {x};
}

std::vector<AeElement> ae_d2(const Params& params, int slot_in) {
    const ScalarK q2 = ScalarK::q_pow(2);
    const ScalarK qm1 = ScalarK::q_pow(-1);
    const ScalarK q1 = ScalarK::q_pow(1);
    const ScalarK cd = params.c * params.d;
    const ScalarK cmd = params.c - params.d;
    // output slots (e_A, e_B*, e_B)
    std::vector<AeElement> out(3);
    switch (slot_in) {
        case 0:  // e_A^e_B*: (A(x)1 - 1(x)q^2 A^o)(x)e_B* - (q^2 B*(x)1 - 1(x)B*^o)(x)e_A
            out[1] = ae(mA, mOne);
            out[1].add({mOne, mA}, -q2);
            out[0] = ae(mBs, mOne, -q2);
            out[0].add({mOne, mBs}, ScalarK::one());
            break;
        case 1:  // e_A^e_B: (q^2 A(x)1 - 1(x)A^o)(x)e_B - (B(x)1 - 1(x)q^2 B^o)(x)e_A
            out[2] = ae(mA, mOne, q2);
            out[2].add({mOne, mA}, -ScalarK::one());
            out[0] = ae(mB, mOne, -ScalarK::one());
            out[0].add({mOne, mB}, q2);
            break;
        case 2:  // thS1
            out[1] = ae(mB, mOne, -qm1);
            out[2] = ae(mOne, mBs, -qm1);
            out[0] = ae(mA, mOne, -q1 * q2);
            out[0].add({mOne, mA}, -q1 * q2);
            out[0].add({mOne, mOne}, q1 * cmd);
            break;
        default:  // thT1
            out[1] = ae(mOne, mB, -qm1);
            out[2] = ae(mBs, mOne, -qm1);
            out[0] = ae(mA, mOne, -qm1);
            out[0].add({mOne, mA}, -qm1);
            out[0].add({mOne, mOne}, qm1 * cmd);
            break;
    }
    return out;
}

TensorChain f1_basis(int slot) {
    PodlesMonomial t = slot == 0 ? mA : slot == 1 ? mBs : mB;
    TensorChain x(2);
    x.terms.add(Tuple{mOne, t, mOne}, ScalarK::one());
    return x;
}

TensorChain f2_basis(const Params& params, int slot) {
    const ScalarK q2 = ScalarK::q_pow(2);
    const ScalarK q3 = ScalarK::q_pow(3);
    const ScalarK qm1 = ScalarK::q_pow(-1);
    const ScalarK cd = params.c * params.d;
    TensorChain x(3);
    switch (slot) {
        case 0:  // f2(e_A^e_B*) = (1,A,B*,1) - q^2 (1,B*,A,1)
            x.terms.add(Tuple{mOne, mA, mBs, mOne}, ScalarK::one());
            x.terms.add(Tuple{mOne, mBs, mA, mOne}, -q2);
            break;
        case 1:  // f2(e_A^e_B) = q^2 (1,A,B,1) - (1,B,A,1)
            x.terms.add(Tuple{mOne, mA, mB, mOne}, q2);
            x.terms.add(Tuple{mOne, mB, mA, mOne}, -ScalarK::one());
            break;
        case 2:  // f2(thS1) = -q^{-1}(1,B,B*,1) - q^3 (1,A,A,1) - q^{-1} cd (1,1,1,1)
            x.terms.add(Tuple{mOne, mB, mBs, mOne}, -qm1);
            x.terms.add(Tuple{mOne, mA, mA, mOne}, -q3);
            x.terms.add(Tuple{mOne, mOne, mOne, mOne}, -qm1 * cd);
            break;
        default:  // f2(thT1) = -q^{-1}(1,B*,B,1) - q^{-1}(1,A,A,1) - q^{-1} cd (1,1,1,1)
            x.terms.add(Tuple{mOne, mBs, mB, mOne}, -qm1);
            x.terms.add(Tuple{mOne, mA, mA, mOne}, -qm1);
            x.terms.add(Tuple{mOne, mOne, mOne, mOne}, -qm1 * cd);
            break;
    }
    return x;
}

namespace {

// apply an A^e coefficient (x (x) y^o) to a plain tensor: (x a_0, ..., a_n y)
TensorChain ae_apply(const AlgebraContext& ctx, const AeElement& coef, const TensorChain& base) {
    TensorChain out(base.n);
    for (const auto& [xy, c] : coef.entries()) {
        const auto& [l, r] = xy;
        for (const auto& [t, tc] : base.terms.entries()) {
            AlgebraElement left = ctx.mono_mul(l, t.m[0]);
            AlgebraElement right = ctx.mono_mul(t.m[t.len - 1], r);
            for (const auto& [lm, lc] : left.entries())
                for (const auto& [rm, rc] : right.entries()) {
                    Tuple nt = t;
                    nt.m[0] = lm;
                    nt.m[t.len - 1] = rm;
                    out.terms.add(nt, c * tc * lc * rc);
                }
        }
    }
    return out;
}

}  // namespace

TensorChain f0_ae(const AeElement& x) {
    TensorChain out(1);
    for (const auto& [xy, c] : x.entries()) out.terms.add(Tuple{xy.first, xy.second}, c);
    return out;
}

TensorChain f1_ae(const std::vector<AeElement>& coords) {
    // requires an AlgebraContext-free shortcut: f1 basis tuples have unit ends,
    // so the A^e action is a plain substitution
    TensorChain out(2);
    for (int slot = 0; slot < 3; ++slot) {
        PodlesMonomial t = slot == 0 ? mA : slot == 1 ? mBs : mB;
        for (const auto& [xy, c] : coords[slot].entries())
            out.terms.add(Tuple{xy.first, t, xy.second}, c);
    }
    return out;
}

TensorChain f2_ae(const Params& params, const std::vector<AeElement>& coords) {
    TensorChain out(3);
    for (int slot = 0; slot < 4; ++slot) {
        TensorChain base = f2_basis(params, slot);
        for (const auto& [xy, c] : coords[slot].entries()) {
            for (const auto& [t, tc] : base.terms.entries()) {
                Tuple nt = t;  // base tuples have unit first/last slots
                nt.m[0] = xy.first;
                nt.m[t.len - 1] = xy.second;
                out.terms.add(nt, c * tc);
            }
        }
    }
    return out;
}

TensorChain to_bar_cycle(const AlgebraContext& ctx, const Automorphism& aut,
                         const ModuleVector& v) {
    if (v.level < 0 || v.level > 2) throw std::invalid_argument("to_bar_cycle supports levels 0..2");
    if (v.level > 0 && !apply_d(v.level, ctx, aut, v).is_zero())
        throw std::invalid_argument("to_bar_cycle requires a kernel element");
    // contraction: a (x) (x_0, ..., x_{n+1}) -> (sigma(x_{n+1}) a x_0, x_1, ..., x_n)
    auto contract = [&](const AlgebraElement& a, const TensorChain& fx) {
        TensorChain out(fx.n - 1);
        for (const auto& [t, c] : fx.terms.entries()) {
            AlgebraElement head = ctx.mul(ctx.mul(aut.apply(AlgebraElement(t.m[t.len - 1])), a),
                                          AlgebraElement(t.m[0]));
            for (const auto& [hm, hc] : head.entries()) {
                Tuple nt;
                nt.len = t.len - 1;
                nt.m[0] = hm;
                for (int i = 1; i + 1 < t.len; ++i) nt.m[i] = t.m[i];
                out.terms.add(nt, c * hc);
            }
        }
        return out;
    };
    TensorChain out(v.level);
    if (v.level == 0) {
        TensorChain base(1);
        base.terms.add(Tuple{mOne, mOne}, ScalarK::one());
        out = contract(v.coord[0], base);
    } else if (v.level == 1) {
        for (int slot = 0; slot < 3; ++slot) {
            if (v.coord[slot].is_zero()) continue;
            TensorChain piece = contract(v.coord[slot], f1_basis(slot));
            out.terms += piece.terms;
        }
    } else {
        for (int slot = 0; slot < 4; ++slot) {
            if (v.coord[slot].is_zero()) continue;
            TensorChain piece = contract(v.coord[slot], f2_basis(ctx.params(), slot));
            out.terms += piece.terms;
        }
    }
    return out;
}

}  // namespace podles
