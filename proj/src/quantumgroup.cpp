#include "podles/quantumgroup.hpp"

#include "json.hpp"

#include <fstream>
#include <sstream>

namespace podles {

std::string SuqMonomial::str() const {
    if (is_unit()) return "1";
    std::ostringstream os;
    bool sp = false;
    auto put = [&](const std::string& g, int e) {
        if (e == 0) return;
        if (sp) os << " ";
        sp = true;
        os << g;
        if (e > 1) os << "^" << e;
    };
    if (aexp > 0) put("a", aexp);
    if (aexp < 0) put("a*", -aexp);
    put("c", cexp);
    put("c*", csexp);
    return os.str();
}

std::string to_string(const SuqElement& x) {
    if (x.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : x.entries()) {
        if (!first) os << " + ";
        first = false;
        std::string cs = c.str();
        if (m.is_unit()) {
            os << cs;
        } else if (c.is_one()) {
            os << m.str();
        } else {
            bool wrap = cs.find('+') != std::string::npos || cs.find('-', 1) != std::string::npos ||
                        cs.find('/') != std::string::npos;
            os << (wrap ? "(" + cs + ")" : cs) << "*" << m.str();
        }
    }
    return os.str();
}

PairingTable PairingTable::builtin() {
    PairingTable t;
    t.version = "1";
    t.coproduct = "symmetric-K";
    // rows on (a, a*, c, c*). Calibrated so that the Hopf-pairing axioms,
    // the sphere derivation property, and tau(eta) = -1 all hold.
    t.K_row = {ScalarK::s_pow(-1), ScalarK::s_pow(1), ScalarK::zero(), ScalarK::zero()};
    t.E_row = {ScalarK::zero(), ScalarK::zero(), ScalarK::one(), ScalarK::zero()};
    t.F_row = {ScalarK::zero(), ScalarK::zero(), ScalarK::zero(), -ScalarK::q_pow(-1)};
    return t;
}

std::string PairingTable::to_json() const {
    nlohmann::ordered_json j;
    j["version"] = version;
    j["coproduct"] = coproduct;
    auto row = [](const std::array<ScalarK, 4>& r) {
        nlohmann::ordered_json o;
        o["a"] = r[0].str();
        o["a*"] = r[1].str();
        o["c"] = r[2].str();
        o["c*"] = r[3].str();
        return o;
    };
    j["K"] = row(K_row);
    j["E"] = row(E_row);
    j["F"] = row(F_row);
    return j.dump(2);
}

PairingTable PairingTable::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open pairing table fixture: " + path);
    nlohmann::json j;
    in >> j;
    PairingTable t;
    t.version = j.at("version").get<std::string>();
    t.coproduct = j.at("coproduct").get<std::string>();
    if (t.coproduct != "symmetric-K")
        throw std::runtime_error("unsupported coproduct convention: " + t.coproduct);
    auto row = [&](const char* key) {
        std::array<ScalarK, 4> r;
        const auto& o = j.at(key);
        r[0] = ScalarK::parse(o.at("a").get<std::string>());
        r[1] = ScalarK::parse(o.at("a*").get<std::string>());
        r[2] = ScalarK::parse(o.at("c").get<std::string>());
        r[3] = ScalarK::parse(o.at("c*").get<std::string>());
        return r;
    };
    t.K_row = row("K");
    t.E_row = row("E");
    t.F_row = row("F");
    return t;
}

namespace {
const SuqMonomial sOne = SuqMonomial::one();
const SuqMonomial sa = SuqMonomial::a();
const SuqMonomial sas = SuqMonomial::astar();
const SuqMonomial sc = SuqMonomial::c();
const SuqMonomial scs = SuqMonomial::cstar();
}  // namespace

SuqContext::SuqContext(PairingTable table) : table_(std::move(table)) {
    // generator action values x <| E, x <| F from the pairing rows through
    // the generator coproducts:
    //   a  <| f = <f,a> a - q <f,c*> c
    //   a* <| f = <f,a*> a* - q <f,c> c*
    //   c  <| f = <f,c> a + <f,a*> c
    //   c* <| f = <f,c*> a* + <f,a> c*
    auto derive = [&](const std::array<ScalarK, 4>& row) {
        std::array<SuqElement, 4> act;
        act[0].add(sa, row[0]);
        act[0].add(sc, -ScalarK::q_pow(1) * row[3]);
        act[1].add(sas, row[1]);
        act[1].add(scs, -ScalarK::q_pow(1) * row[2]);
        act[2].add(sa, row[2]);
        act[2].add(sc, row[1]);
        act[3].add(sas, row[3]);
        act[3].add(scs, row[0]);
        return act;
    };
    actE_ = derive(table_.E_row);
    actF_ = derive(table_.F_row);
}

SuqElement SuqContext::amerge(int i1, int i2) const {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = amerge_cache_.find({i1, i2});
        if (it != amerge_cache_.end()) return it->second;
    }
    SuqElement r;
    if (i1 == 0) {
        r = SuqElement(SuqMonomial{i2, 0, 0});
    } else if (i2 == 0) {
        r = SuqElement(SuqMonomial{i1, 0, 0});
    } else if ((i1 > 0) == (i2 > 0)) {
        r = SuqElement(SuqMonomial{i1 + i2, 0, 0});
    } else {
        // a a* = 1 - q^2 c* c ; a* a = 1 - c* c
        std::vector<std::pair<int, ScalarK>> mid;  // (c*c power, coef)
        if (i1 > 0) {
            mid = {{0, ScalarK::one()}, {1, -ScalarK::q_pow(2)}};
        } else {
            mid = {{0, ScalarK::one()}, {1, -ScalarK::one()}};
        }
        int j1 = i1 > 0 ? i1 - 1 : i1 + 1;
        int j2 = i2 > 0 ? i2 - 1 : i2 + 1;
        SuqElement inner = amerge(j1, j2);
        for (const auto& [t, cf] : mid) {
            // (c*c)^t moves past the a-block of the tail with factor q^{-2 t i2'}
            ScalarK f = cf * ScalarK::q_pow(-2 * t * j2);
            for (const auto& [m, cm] : inner.entries())
                r.add(SuqMonomial{m.aexp, m.cexp + t, m.csexp + t}, cm * f);
        }
    }
    std::lock_guard<std::mutex> lock(mu_);
    amerge_cache_.insert({{i1, i2}, r});
    return r;
}

SuqElement SuqContext::mono_mul(const SuqMonomial& x, const SuqMonomial& y) const {
    // move the c/c* block of x past the a-block of y: each of the (cexp+csexp)
    // letters crosses each a-letter with factor q^{-1} (c a = q^{-1} a c) or
    // q (c a* = q a* c)
    int t = x.cexp + x.csexp;
    ScalarK f = ScalarK::q_pow(-t * y.aexp);
    SuqElement merged = amerge(x.aexp, y.aexp);
    SuqElement out;
    for (const auto& [m, cm] : merged.entries())
        out.add(SuqMonomial{m.aexp, m.cexp + x.cexp + y.cexp, m.csexp + x.csexp + y.csexp}, cm * f);
    return out;
}

SuqElement SuqContext::mul(const SuqElement& x, const SuqElement& y) const {
    SuqElement out;
    for (const auto& [mx, cx] : x.entries())
        for (const auto& [my, cy] : y.entries()) out.add_scaled(mono_mul(mx, my), cx * cy);
    return out;
}

SuqElement SuqContext::normal_form(const std::vector<SuqMonomial>& letters) const {
    SuqElement acc(sOne);
    for (const auto& l : letters) acc = mul(acc, SuqElement(l));
    return acc;
}

std::vector<SuqMonomial> SuqContext::letters(const SuqMonomial& m) const {
    std::vector<SuqMonomial> out;
    for (int i = 0; i < (m.aexp > 0 ? m.aexp : -m.aexp); ++i) out.push_back(m.aexp > 0 ? sa : sas);
    for (int i = 0; i < m.cexp; ++i) out.push_back(sc);
    for (int i = 0; i < m.csexp; ++i) out.push_back(scs);
    return out;
}

SuqTensorSquare SuqContext::coproduct(const SuqMonomial& m) const {
    // Delta a = a(x)a - q c*(x)c ; Delta c = c(x)a + a*(x)c
    // Delta a* = a*(x)a* - q c(x)c* ; Delta c* = c*(x)a* + a(x)c*
    auto gen_cp = [&](const SuqMonomial& g) {
        SuqTensorSquare t;
        if (g == sa) {
            t.add({sa, sa}, ScalarK::one());
            t.add({scs, sc}, -ScalarK::q_pow(1));
        } else if (g == sas) {
            t.add({sas, sas}, ScalarK::one());
            t.add({sc, scs}, -ScalarK::q_pow(1));
        } else if (g == sc) {
            t.add({sc, sa}, ScalarK::one());
            t.add({sas, sc}, ScalarK::one());
        } else {
            t.add({scs, sas}, ScalarK::one());
            t.add({sa, scs}, ScalarK::one());
        }
        return t;
    };
    SuqTensorSquare acc;
    acc.add({sOne, sOne}, ScalarK::one());
    for (const auto& g : letters(m)) {
        SuqTensorSquare next;
        SuqTensorSquare gc = gen_cp(g);
        for (const auto& [lr, c1] : acc.entries())
            for (const auto& [gg, c2] : gc.entries()) {
                SuqElement l = mono_mul(lr.first, gg.first);
                SuqElement r = mono_mul(lr.second, gg.second);
                for (const auto& [lm, lc] : l.entries())
                    for (const auto& [rm, rc] : r.entries())
                        next.add({lm, rm}, c1 * c2 * lc * rc);
            }
        acc = std::move(next);
    }
    return acc;
}

SuqTensorSquare SuqContext::coproduct(const SuqElement& x) const {
    SuqTensorSquare out;
    for (const auto& [m, c] : x.entries()) {
        SuqTensorSquare t = coproduct(m);
        for (const auto& [lr, cc] : t.entries()) out.add(lr, c * cc);
    }
    return out;
}

ScalarK SuqContext::counit(const SuqElement& x) const {
    ScalarK acc = ScalarK::zero();
    for (const auto& [m, c] : x.entries())
        if (m.cexp == 0 && m.csexp == 0) acc += c;  // eps(a) = eps(a*) = 1
    return acc;
}

ScalarK SuqContext::k_eig(const SuqMonomial& m, int p) const {
    return ScalarK::s_pow(p * (-m.aexp + m.cexp - m.csexp));
}

SuqElement SuqContext::act_right(UqGenerator f, const SuqElement& x) const {
    if (f == UqGenerator::K || f == UqGenerator::Kinv) {
        int p = f == UqGenerator::K ? 1 : -1;
        SuqElement out;
        for (const auto& [m, c] : x.entries()) out.add(m, c * k_eig(m, p));
        return out;
    }
    const auto& act = (f == UqGenerator::E) ? actE_ : actF_;
    SuqElement out;
    for (const auto& [m, c] : x.entries()) {
        auto ls = letters(m);
        for (size_t i = 0; i < ls.size(); ++i) {
            int gi = (ls[i] == sa) ? 0 : (ls[i] == sas) ? 1 : (ls[i] == sc) ? 2 : 3;
            if (act[gi].is_zero()) continue;
            // symmetric convention: prefix <| K^{-1}, suffix <| K
            SuqElement pre(sOne);
            for (size_t k = 0; k < i; ++k) pre = mul(pre, SuqElement(ls[k]));
            SuqElement post(sOne);
            for (size_t k = i + 1; k < ls.size(); ++k) post = mul(post, SuqElement(ls[k]));
            SuqElement pre2, post2;
            for (const auto& [pm, pc] : pre.entries()) pre2.add(pm, pc * k_eig(pm, -1));
            for (const auto& [pm, pc] : post.entries()) post2.add(pm, pc * k_eig(pm, 1));
            SuqElement term = mul(mul(pre2, act[gi]), post2);
            out.add_scaled(term, c);
        }
    }
    return out;
}

SuqElement SuqContext::act_left(UqGenerator f, const SuqElement& x) const {
    // f |> x = sum <f, x_(2)> x_(1)
    auto row_pair = [&](UqGenerator g, const SuqMonomial& m) -> ScalarK {
        std::vector<UqGenerator> w{g};
        return pair_word(w, SuqElement(m));
    };
    SuqElement out;
    SuqTensorSquare cp = coproduct(x);
    for (const auto& [lr, c] : cp.entries()) {
        ScalarK p = row_pair(f, lr.second);
        if (!p.is_zero()) out.add(lr.first, c * p);
    }
    return out;
}

ScalarK SuqContext::pair_word(const std::vector<UqGenerator>& word, const SuqElement& x) const {
    // single-generator pairing with a monomial via the extension rules of the
    // symmetric convention
    auto single = [&](UqGenerator u, const SuqMonomial& m) -> ScalarK {
        if (u == UqGenerator::K || u == UqGenerator::Kinv) {
            if (m.cexp != 0 || m.csexp != 0) return ScalarK::zero();
            int p = (u == UqGenerator::K) ? 1 : -1;
            return ScalarK::s_pow(-p * m.aexp);
        }
        const auto& row = (u == UqGenerator::E) ? table_.E_row : table_.F_row;
        // <u, l_1...l_L> = sum_i <K^{-1}, prefix> <u, l_i> <K, suffix>
        auto ls = letters(m);
        ScalarK acc = ScalarK::zero();
        for (size_t i = 0; i < ls.size(); ++i) {
            int gi = (ls[i] == sa) ? 0 : (ls[i] == sas) ? 1 : (ls[i] == sc) ? 2 : 3;
            if (row[gi].is_zero()) continue;
            // prefix and suffix pair with K^{+-1} only through pure a/a* letters
            bool ok = true;
            int pre_a = 0, post_a = 0;
            for (size_t k = 0; k < i; ++k) {
                if (ls[k] == sa) ++pre_a;
                else if (ls[k] == sas) --pre_a;
                else ok = false;
            }
            for (size_t k = i + 1; k < ls.size(); ++k) {
                if (ls[k] == sa) ++post_a;
                else if (ls[k] == sas) --post_a;
                else ok = false;
            }
            if (!ok) continue;
            // <K^{-1}, a^p> = s^p, <K, a^p> = s^{-p}
            acc += ScalarK::s_pow(pre_a) * row[gi] * ScalarK::s_pow(-post_a);
        }
        return acc;
    };
    if (word.empty()) return counit(x);
    if (word.size() == 1) {
        ScalarK acc = ScalarK::zero();
        for (const auto& [m, c] : x.entries()) acc += c * single(word[0], m);
        return acc;
    }
    std::vector<UqGenerator> rest(word.begin() + 1, word.end());
    ScalarK acc = ScalarK::zero();
    SuqTensorSquare cp = coproduct(x);
    for (const auto& [lr, c] : cp.entries()) {
        ScalarK v1 = single(word[0], lr.first);
        if (v1.is_zero()) continue;
        acc += c * v1 * pair_word(rest, SuqElement(lr.second));
    }
    return acc;
}

ScalarK SuqContext::haar(const SuqElement& x) const {
    ScalarK acc = ScalarK::zero();
    for (const auto& [m, c] : x.entries()) {
        if (m.aexp != 0 || m.cexp != m.csexp) continue;
        acc += c * (ScalarK::one() - ScalarK::q_pow(2)) /
               (ScalarK::one() - ScalarK::q_pow(2 * m.cexp + 2));
    }
    return acc;
}

SuqElement SuqContext::embed_sphere(const PodlesMonomial& m) const {
    // A -> c*c, B -> ac, B* -> c*a*
    SuqElement acc(sOne);
    SuqElement eB = mono_mul(sa, sc);
    SuqElement eBs = mono_mul(scs, sas);
    SuqElement eA = mono_mul(scs, sc);
    for (int i = 0; i < (m.bexp > 0 ? m.bexp : -m.bexp); ++i)
        acc = mul(acc, m.bexp > 0 ? eB : eBs);
    for (int i = 0; i < m.aexp; ++i) acc = mul(acc, eA);
    return acc;
}

SuqElement SuqContext::embed_sphere(const AlgebraContext& sphere, const AlgebraElement& x) const {
    if (!(sphere.params().c == ScalarK::one() && sphere.params().d == ScalarK::zero()))
        throw std::invalid_argument("the sphere embedding requires (c, d) = (1, 0)");
    SuqElement out;
    for (const auto& [m, c] : x.entries()) out.add_scaled(embed_sphere(m), c);
    return out;
}

SuqElement SuqContext::deriv_E(const AlgebraContext& sphere, const AlgebraElement& x) const {
    return act_right(UqGenerator::E, embed_sphere(sphere, x));
}

SuqElement SuqContext::deriv_F(const AlgebraContext& sphere, const AlgebraElement& x) const {
    return act_right(UqGenerator::F, embed_sphere(sphere, x));
}

ScalarK SuqContext::tau(const AlgebraContext& sphere, const TensorChain& x) const {
    if (x.n != 2) throw std::invalid_argument("tau is a 2-cochain");
    ScalarK acc = ScalarK::zero();
    const ScalarK q2 = ScalarK::q_pow(2);
    for (const auto& [t, c] : x.terms.entries()) {
        SuqElement e0 = embed_sphere(t.m[0]);
        SuqElement e1 = embed_sphere(t.m[1]);
        SuqElement e2 = embed_sphere(t.m[2]);
        SuqElement inner = mul(act_right(UqGenerator::F, e1), act_right(UqGenerator::E, e2));
        SuqElement inner2 = mul(act_right(UqGenerator::E, e1), act_right(UqGenerator::F, e2));
        inner.add_scaled(inner2, -q2);
        acc += c * haar(mul(e0, inner));
    }
    return acc;
}

}  // namespace podles
