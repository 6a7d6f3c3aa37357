#include "podles/algebra.hpp"

#include <sstream>

namespace podles {

std::string PodlesMonomial::str() const {
    if (is_unit()) return "1";
    std::ostringstream os;
    if (bexp > 0) {
        os << "B";
        if (bexp > 1) os << "^" << bexp;
    } else if (bexp < 0) {
        os << "B*";
        if (bexp < -1) os << "^" << -bexp;
    }
    if (aexp > 0) {
        if (bexp != 0) os << " ";
        os << "A";
        if (aexp > 1) os << "^" << aexp;
    }
    return os.str();
}

std::string to_string(const AlgebraElement& x) {
    if (x.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : x.entries()) {
        std::string cs = c.str();
        if (!first) os << " + ";
        first = false;
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

Automorphism::Automorphism(ScalarK lambda, int sign, const Params& params)
    : lambda_(std::move(lambda)), sign_(sign) {
    if (lambda_.is_zero()) throw std::invalid_argument("automorphism requires lambda != 0");
    if (sign_ != 1 && sign_ != -1) throw std::invalid_argument("sign must be +1 or -1");
    if (sign_ == -1 && !params.c_eq_d())
        throw std::invalid_argument("sign = -1 requires c = d (not an automorphism otherwise)");
    lambda_inv_ = lambda_.inv();
    cache_ = std::make_shared<PowCache>();
    cache_->pos = {ScalarK::one()};
    cache_->neg = {ScalarK::one()};
}

ScalarK Automorphism::eigenvalue(const PodlesMonomial& m) const {
    std::lock_guard<std::mutex> lock(cache_->mu);
    int j = m.bexp;
    const ScalarK* lp;
    if (j >= 0) {
        while ((int)cache_->pos.size() <= j) cache_->pos.push_back(cache_->pos.back() * lambda_);
        lp = &cache_->pos[j];
    } else {
        while ((int)cache_->neg.size() <= -j) cache_->neg.push_back(cache_->neg.back() * lambda_inv_);
        lp = &cache_->neg[-j];
    }
    if (sign_ == -1 && (m.aexp & 1)) return -*lp;
    return *lp;
}

AlgebraElement Automorphism::apply(const AlgebraElement& x) const {
    AlgebraElement out;
    for (const auto& [m, c] : x.entries()) out.add(m, c * eigenvalue(m));
    return out;
}

AlgebraElement AlgebraContext::gen(Gen g) {
    switch (g) {
        case Gen::A: return AlgebraElement(PodlesMonomial::A());
        case Gen::B: return AlgebraElement(PodlesMonomial::B());
        default: return AlgebraElement(PodlesMonomial::Bstar());
    }
}

AlgebraElement AlgebraContext::bmerge(int j1, int j2) const {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = merge_cache_.find({j1, j2});
        if (it != merge_cache_.end()) return it->second;
    }
    AlgebraElement r;
    if (j1 == 0) {
        r = AlgebraElement(PodlesMonomial{j2, 0});
    } else if (j2 == 0) {
        r = AlgebraElement(PodlesMonomial{j1, 0});
    } else if ((j1 > 0) == (j2 > 0)) {
        r = AlgebraElement(PodlesMonomial{j1 + j2, 0});
    } else {
        const ScalarK cd = params_.c * params_.d;
        const ScalarK cmd = params_.c - params_.d;
        // annihilate one pair through the middle, then recurse
        std::vector<std::pair<int, ScalarK>> mid;  // (A-power, coef)
        if (j1 > 0) {
            // B B* = cd + q^2 (c-d) A - q^4 A^2
            mid = {{0, cd}, {1, ScalarK::q_pow(2) * cmd}, {2, -ScalarK::q_pow(4)}};
        } else {
            // B* B = cd + (c-d) A - A^2
            mid = {{0, cd}, {1, cmd}, {2, -ScalarK::one()}};
        }
        int i1 = j1 > 0 ? j1 - 1 : j1 + 1;
        int i2 = j2 > 0 ? j2 - 1 : j2 + 1;
        AlgebraElement inner = bmerge(i1, i2);
        for (const auto& [t, cf] : mid) {
            if (cf.is_zero()) continue;
            // move A^t rightward past B^{i2}: factor q^{-2 t i2}
            ScalarK f = cf * ScalarK::q_pow(-2 * t * i2);
            for (const auto& [m, cm] : inner.entries())
                r.add(PodlesMonomial{m.bexp, m.aexp + t}, cm * f);
        }
    }
    std::lock_guard<std::mutex> lock(mu_);
    merge_cache_.insert({{j1, j2}, r});
    return r;
}

AlgebraElement AlgebraContext::mono_mul(const PodlesMonomial& a, const PodlesMonomial& b) const {
    // (B^{j1} A^{k1})(B^{j2} A^{k2}) = q^{-2 k1 j2} (B^{j1} B^{j2}) A^{k1+k2}
    ScalarK f = ScalarK::q_pow(-2 * a.aexp * b.bexp);
    AlgebraElement merged = bmerge(a.bexp, b.bexp);
    AlgebraElement out;
    int ka = a.aexp + b.aexp;
    for (const auto& [m, cm] : merged.entries())
        out.add(PodlesMonomial{m.bexp, m.aexp + ka}, cm * f);
    return out;
}

AlgebraElement AlgebraContext::mul(const AlgebraElement& x, const AlgebraElement& y) const {
    AlgebraElement out;
    for (const auto& [mx, cx] : x.entries())
        for (const auto& [my, cy] : y.entries()) out.add_scaled(mono_mul(mx, my), cx * cy);
    return out;
}

AlgebraElement AlgebraContext::normal_form(const std::vector<Gen>& word) const {
    // literal leftmost-innermost rewriting on words
    using Word = std::vector<Gen>;
    std::vector<std::pair<Word, ScalarK>> todo{{word, ScalarK::one()}};
    AlgebraElement out;
    const ScalarK cd = params_.c * params_.d;
    const ScalarK cmd = params_.c - params_.d;
    while (!todo.empty()) {
        auto [w, coef] = todo.back();
        todo.pop_back();
        // leftmost adjacent out-of-order pair
        size_t pos = w.size();
        for (size_t i = 0; i + 1 < w.size(); ++i) {
            Gen x = w[i], y = w[i + 1];
            bool bad = (x == Gen::A && y != Gen::A) ||
                       (x == Gen::B && y == Gen::Bstar) || (x == Gen::Bstar && y == Gen::B);
            if (bad) {
                pos = i;
                break;
            }
        }
        if (pos == w.size()) {
            // ordered word: pure B-block (all same sign) then A-block
            int j = 0, k = 0;
            for (Gen g : w) {
                if (g == Gen::B) ++j;
                else if (g == Gen::Bstar) --j;
                else ++k;
            }
            out.add(PodlesMonomial{j, k}, coef);
            continue;
        }
        Gen x = w[pos], y = w[pos + 1];
        auto splice = [&](std::vector<std::pair<std::vector<Gen>, ScalarK>> reps) {
            for (auto& [mid, f] : reps) {
                if (f.is_zero()) continue;
                Word nw(w.begin(), w.begin() + pos);
                nw.insert(nw.end(), mid.begin(), mid.end());
                nw.insert(nw.end(), w.begin() + pos + 2, w.end());
                todo.push_back({std::move(nw), coef * f});
            }
        };
        if (x == Gen::A && y == Gen::B) {
            splice({{{Gen::B, Gen::A}, ScalarK::q_pow(-2)}});
        } else if (x == Gen::A && y == Gen::Bstar) {
            splice({{{Gen::Bstar, Gen::A}, ScalarK::q_pow(2)}});
        } else if (x == Gen::Bstar && y == Gen::B) {
            splice({{{}, cd}, {{Gen::A}, cmd}, {{Gen::A, Gen::A}, -ScalarK::one()}});
        } else {  // B B*
            splice({{{}, cd},
                    {{Gen::A}, ScalarK::q_pow(2) * cmd},
                    {{Gen::A, Gen::A}, -ScalarK::q_pow(4)}});
        }
    }
    return out;
}

std::optional<int> weight(const AlgebraElement& x) {
    std::optional<int> w;
    for (const auto& [m, c] : x.entries()) {
        if (!w)
            w = m.weight();
        else if (*w != m.weight())
            return std::nullopt;
    }
    return w;
}

int degree(const AlgebraElement& x) {
    int d = -1;
    for (const auto& [m, c] : x.entries()) d = std::max(d, m.degree());
    return d;
}

}  // namespace podles
