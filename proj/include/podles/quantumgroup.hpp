#pragma once

#include "podles/chains.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace podles {

// PBW monomial of A(SU_q(2)): a^i c^m (c*)^n for i >= 0, (a*)^{-i} c^m (c*)^n
// for i < 0.
struct SuqMonomial {
    int aexp = 0;  // signed a-exponent (negative = a*)
    int cexp = 0;
    int csexp = 0;

    bool is_unit() const { return aexp == 0 && cexp == 0 && csexp == 0; }
    int degree() const { return (aexp < 0 ? -aexp : aexp) + cexp + csexp; }
    auto operator<=>(const SuqMonomial&) const = default;
    std::string str() const;

    static SuqMonomial one() { return {0, 0, 0}; }
    static SuqMonomial a() { return {1, 0, 0}; }
    static SuqMonomial astar() { return {-1, 0, 0}; }
    static SuqMonomial c() { return {0, 1, 0}; }
    static SuqMonomial cstar() { return {0, 0, 1}; }
};

using SuqElement = LinComb<SuqMonomial>;
using SuqTensorSquare = LinComb<std::pair<SuqMonomial, SuqMonomial>>;

enum class UqGenerator { E, F, K, Kinv };

// Pairing of the U_q(su(2)) generators with the SU_q(2) generators plus the
// coproduct convention; loaded from a versioned fixtures file so the
// conventions stay auditable.
struct PairingTable {
    std::string version;
    std::string coproduct;              // "symmetric-K": dE = E(x)K + K^{-1}(x)E, same for F
    std::array<ScalarK, 4> K_row;       // on (a, a*, c, c*)
    std::array<ScalarK, 4> E_row;
    std::array<ScalarK, 4> F_row;

    static PairingTable builtin();                       // the calibrated convention
    static PairingTable load(const std::string& path);   // JSON fixture
    std::string to_json() const;
};

class SuqContext {
  public:
    explicit SuqContext(PairingTable table = PairingTable::builtin());

    const PairingTable& table() const { return table_; }

    SuqElement mono_mul(const SuqMonomial& x, const SuqMonomial& y) const;
    SuqElement mul(const SuqElement& x, const SuqElement& y) const;
    SuqElement normal_form(const std::vector<SuqMonomial>& letters) const;

    // coalgebra structure
    SuqTensorSquare coproduct(const SuqMonomial& m) const;
    SuqTensorSquare coproduct(const SuqElement& x) const;
    ScalarK counit(const SuqElement& x) const;

    // right and left actions of the U_q(su(2)) generators
    SuqElement act_right(UqGenerator f, const SuqElement& x) const;
    SuqElement act_left(UqGenerator f, const SuqElement& x) const;

    // pairing of a word in the U-generators with an element (via iterated
    // coproducts); used by the Hopf-pairing axiom checks
    ScalarK pair_word(const std::vector<UqGenerator>& word, const SuqElement& x) const;

    // Haar state: h(1) = 1, supported on powers of c*c
    ScalarK haar(const SuqElement& x) const;

    // standard-sphere embedding A -> c*c, B -> ac, B* -> c*a*; the sphere
    // context must carry (c, d) = (1, 0)
    SuqElement embed_sphere(const AlgebraContext& sphere, const AlgebraElement& x) const;
    SuqElement embed_sphere(const PodlesMonomial& m) const;

    SuqElement deriv_E(const AlgebraContext& sphere, const AlgebraElement& x) const;
    SuqElement deriv_F(const AlgebraContext& sphere, const AlgebraElement& x) const;

    // Schmuedgen-Wagner 2-cocycle: tau(a0,a1,a2) =
    //   h(a0 [ (a1 <| F)(a2 <| E) - q^2 (a1 <| E)(a2 <| F) ])
    ScalarK tau(const AlgebraContext& sphere, const TensorChain& x) const;

  private:
    PairingTable table_;
    mutable std::map<std::pair<int, int>, SuqElement> amerge_cache_;
    mutable std::mutex mu_;
    std::array<SuqElement, 4> actE_, actF_;  // generator action values

    SuqElement amerge(int i1, int i2) const;
    ScalarK k_eig(const SuqMonomial& m, int p) const;  // eigenvalue of <| K^p
    std::vector<SuqMonomial> letters(const SuqMonomial& m) const;
};

std::string to_string(const SuqElement& x);

}  // namespace podles
