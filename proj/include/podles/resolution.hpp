#pragma once

#include "podles/chains.hpp"

#include <array>

namespace podles {

// Free resolution of A by A^e-modules, ranks (1, 3, 4, 4, 4) in levels 0..4,
// after applying the twisted coefficient functor: coordinates live in A.
//
// Basis orderings (fixed):
//   M1: (e_A, e_B*, e_B)
//   M2: (e_A^e_B*, e_A^e_B, thS1, thT1)
//   M3: (e_A^thS1, e_A^thT1, e_B*^thS1, e_B^thT1)
//   M4: (e_A^e_B*^thS1, e_A^e_B^thT1, thS2, thT2)
struct ModuleVector {
    int level = 0;
    std::array<AlgebraElement, 4> coord;

    bool is_zero() const {
        for (const auto& c : coord)
            if (!c.is_zero()) return false;
        return true;
    }
};

int module_rank(int level);                      // 1,3,4,4,4
int basis_weight_offset(int level, int slot);    // declared weight offsets
int basis_degree_offset(int level, int slot);    // truncation degree offsets
std::string basis_label(int level, int slot);

// Induced differentials d_n : A^{rank(M_n)} -> A^{rank(M_{n-1})} for the
// twisted coefficient action a.(t1 (x) t2^o) = sigma(t2) a t1.
ModuleVector d1(const AlgebraContext& ctx, const Automorphism& aut, const ModuleVector& v);
ModuleVector d2(const AlgebraContext& ctx, const Automorphism& aut, const ModuleVector& v);
ModuleVector d3(const AlgebraContext& ctx, const Automorphism& aut, const ModuleVector& v);
ModuleVector d4(const AlgebraContext& ctx, const Automorphism& aut, const ModuleVector& v);
ModuleVector apply_d(int level, const AlgebraContext& ctx, const Automorphism& aut,
                     const ModuleVector& v);

// Right A^e-action on coefficients: a . (t1 (x) t2^o) = sigma(t2) a t1.
AlgebraElement twisted_action(const AlgebraContext& ctx, const Automorphism& aut,
                              const AlgebraElement& a, const AlgebraElement& t1,
                              const AlgebraElement& t2);

// Elements of A^e = A (x) A^op, used for the untwisted chain-map checks.
using AeElement = LinComb<std::pair<PodlesMonomial, PodlesMonomial>>;

// A^e-level differentials as matrices over A^e: result[slot_out] = list of
// A^e coefficients per input slot. Levels 1 and 2 (enough for the b'-chain
// comparisons below).
std::vector<AeElement> ae_d1(int slot_in);
std::vector<AeElement> ae_d2(const Params& params, int slot_in);

// Comparison maps into the bar resolution. f_n of a basis element is a plain
// (n+2)-tensor; A^e-linear extension is performed by the callers.
TensorChain f1_basis(int slot);                       // (1, t, 1)
TensorChain f2_basis(const Params& params, int slot); // Eq.-(16) displays

// f_i applied to an A^e-combination, landing in A^{(x)(i+2)}.
TensorChain f0_ae(const AeElement& x);
TensorChain f1_ae(const std::vector<AeElement>& coords);
TensorChain f2_ae(const Params& params, const std::vector<AeElement>& coords);

// Contraction of f_n(v) with the twisted coefficients: the Hochschild n-chain
// sigma-associated to a resolution-side cycle v in ker(d_n), n <= 2.
// Throws if v is not in the kernel.
TensorChain to_bar_cycle(const AlgebraContext& ctx, const Automorphism& aut,
                         const ModuleVector& v);

}  // namespace podles
