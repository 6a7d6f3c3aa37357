#include "podles/scalar.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <sstream>

namespace podles {

namespace {
std::atomic<int> g_degree_cap{512};
}

int scalar_degree_cap() { return g_degree_cap.load(); }
void set_scalar_degree_cap(int cap) { g_degree_cap.store(cap); }

void IntPoly::check_cap() const {
    if (!terms_.empty() && terms_.back().exp > g_degree_cap.load())
        throw DegreeCapError("polynomial degree " + std::to_string(terms_.back().exp) +
                             " exceeds cap " + std::to_string(g_degree_cap.load()));
}

IntPoly IntPoly::constant(Int v) {
    IntPoly p;
    if (v != 0) p.terms_.push_back({0, std::move(v)});
    return p;
}

IntPoly IntPoly::monomial(Int coef, int exp) {
    IntPoly p;
    if (coef != 0) p.terms_.push_back({exp, std::move(coef)});
    p.check_cap();
    return p;
}

const Int& IntPoly::leading_coef() const {
    static const Int z = 0;
    return terms_.empty() ? z : terms_.back().coef;
}

IntPoly IntPoly::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.exp < b.exp; });
    IntPoly p;
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().exp == t.exp) {
            p.terms_.back().coef += t.coef;
            if (p.terms_.back().coef == 0) p.terms_.pop_back();
        } else if (t.coef != 0) {
            p.terms_.push_back(std::move(t));
        }
    }
    p.check_cap();
    return p;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    IntPoly r;
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
        if (j == b.terms_.size() || (i < a.terms_.size() && a.terms_[i].exp < b.terms_[j].exp)) {
            r.terms_.push_back(a.terms_[i++]);
        } else if (i == a.terms_.size() || b.terms_[j].exp < a.terms_[i].exp) {
            r.terms_.push_back(b.terms_[j++]);
        } else {
            Int c = a.terms_[i].coef + b.terms_[j].coef;
            if (c != 0) r.terms_.push_back({a.terms_[i].exp, std::move(c)});
            ++i; ++j;
        }
    }
    return r;
}

IntPoly IntPoly::operator-() const {
    IntPoly r(*this);
    for (auto& t : r.terms_) t.coef = -t.coef;
    return r;
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    if (a.is_monomial()) return b.mul_monomial(a.terms_[0].coef, a.terms_[0].exp);
    if (b.is_monomial()) return a.mul_monomial(b.terms_[0].coef, b.terms_[0].exp);
    std::vector<IntPoly::Term> acc;
    acc.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& ta : a.terms_)
        for (const auto& tb : b.terms_) acc.push_back({ta.exp + tb.exp, ta.coef * tb.coef});
    return IntPoly::from_terms(std::move(acc));
}

IntPoly IntPoly::mul_monomial(const Int& coef, int exp) const {
    if (coef == 0 || is_zero()) return IntPoly();
    IntPoly r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.exp + exp, t.coef * coef});
    r.check_cap();
    return r;
}

bool IntPoly::operator==(const IntPoly& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].exp != o.terms_[i].exp || terms_[i].coef != o.terms_[i].coef) return false;
    return true;
}

Int IntPoly::content() const {
    Int g = 0;
    for (const auto& t : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coef.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPoly IntPoly::div_exact(const Int& g) const {
    IntPoly r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
        Int q;
        mpz_divexact(q.get_mpz_t(), t.coef.get_mpz_t(), g.get_mpz_t());
        r.terms_.push_back({t.exp, std::move(q)});
    }
    return r;
}

IntPoly IntPoly::primitive_part() const {
    if (is_zero()) return IntPoly();
    Int g = content();
    if (leading_coef() < 0) g = -g;
    return div_exact(g);
}

// exact division test a = b * quot over Q[s] with integer-scaled result handling
bool IntPoly::div_exact_poly(const IntPoly& a, const IntPoly& b, IntPoly& quot) {
    if (b.is_zero()) return false;
    if (a.is_zero()) { quot = IntPoly(); return true; }
    // long division with rational check: works when division is exact over Z
    IntPoly rem = a;
    std::vector<Term> qterms;
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        Int qc;
        if (!mpz_divisible_p(rem.leading_coef().get_mpz_t(), b.leading_coef().get_mpz_t())) return false;
        mpz_divexact(qc.get_mpz_t(), rem.leading_coef().get_mpz_t(), b.leading_coef().get_mpz_t());
        int qe = rem.degree() - b.degree();
        qterms.push_back({qe, qc});
        rem = rem - b.mul_monomial(qc, qe);
    }
    if (!rem.is_zero()) return false;
    quot = IntPoly::from_terms(std::move(qterms));
    return true;
}

IntPoly IntPoly::gcd(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero()) return b.primitive_part();
    if (b.is_zero()) return a.primitive_part();
    // monomial fast path
    if (a.is_monomial() || b.is_monomial()) {
        int e = std::min(a.low_exp(), b.low_exp());
        Int g;
        mpz_gcd(g.get_mpz_t(), a.content().get_mpz_t(), b.content().get_mpz_t());
        return IntPoly::monomial(g, e);
    }
    // common s-power
    int sh = std::min(a.low_exp(), b.low_exp());
    IntPoly u = a.shifted(-a.low_exp()).primitive_part();
    IntPoly v = b.shifted(-b.low_exp()).primitive_part();
    if (u.degree() < v.degree()) std::swap(u, v);
    // primitive pseudo-remainder sequence
    while (!v.is_zero()) {
        // pseudo-remainder of u by v
        IntPoly r = u;
        int dv = v.degree();
        const Int& lv = v.leading_coef();
        while (!r.is_zero() && r.degree() >= dv) {
            int de = r.degree() - dv;
            Int lr = r.leading_coef();
            r = r.mul_monomial(lv, 0) - v.mul_monomial(lr, de);
        }
        u = v;
        v = r.primitive_part();
    }
    IntPoly g = u.primitive_part();
    return g.shifted(sh);
}

Rat IntPoly::eval(const Rat& s0) const {
    Rat acc = 0;
    for (const auto& t : terms_) {
        Rat p = 1;
        Rat base = s0;
        int e = t.exp;
        while (e > 0) {
            if (e & 1) p *= base;
            base *= base;
            e >>= 1;
        }
        acc += Rat(t.coef) * p;
    }
    acc.canonicalize();
    return acc;
}

std::string IntPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        Int c = it->coef;
        if (!first) os << (c > 0 ? "+" : "-");
        else if (c < 0) os << "-";
        first = false;
        Int ac = abs(c);
        if (it->exp == 0) {
            os << ac.get_str();
        } else {
            if (ac != 1) os << ac.get_str() << "*";
            os << var;
            if (it->exp != 1) os << "^" << it->exp;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------

ScalarK::ScalarK(const IntPoly& num, const IntPoly& den) : num_(num), den_(den) { normalize(); }

void ScalarK::normalize() {
    if (den_.is_zero()) throw DivisionByZero("zero denominator in ScalarK");
    if (num_.is_zero()) {
        den_ = IntPoly::constant(1);
        return;
    }
    // divide out common s-power and polynomial gcd
    IntPoly g = IntPoly::gcd(num_, den_);
    if (!(g.is_monomial() && g.low_exp() == 0 && g.leading_coef() == 1)) {
        IntPoly qn, qd;
        // g is primitive and divides both primitive parts (Gauss), so integer
        // division is exact.
        if (!IntPoly::div_exact_poly(num_, g, qn) || !IntPoly::div_exact_poly(den_, g, qd))
            throw std::logic_error("gcd division not exact");
        num_ = qn;
        den_ = qd;
    }
    // joint integer content
    Int cn = num_.content(), cd = den_.content(), g2;
    mpz_gcd(g2.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
    if (g2 > 1) {
        num_ = num_.div_exact(g2);
        den_ = den_.div_exact(g2);
    }
    if (den_.leading_coef() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

ScalarK ScalarK::from_int(long v) {
    ScalarK r;
    r.num_ = IntPoly::constant(v);
    r.den_ = IntPoly::constant(1);
    return r;
}

ScalarK ScalarK::from_ratio(long num, long den) {
    return ScalarK(IntPoly::constant(num), IntPoly::constant(den));
}

ScalarK ScalarK::from_rat(const Rat& r) {
    return ScalarK(IntPoly::constant(Int(r.get_num())), IntPoly::constant(Int(r.get_den())));
}

ScalarK ScalarK::s_pow(int k) {
    ScalarK r;
    if (k >= 0) {
        r.num_ = IntPoly::monomial(1, k);
        r.den_ = IntPoly::constant(1);
    } else {
        r.num_ = IntPoly::constant(1);
        r.den_ = IntPoly::monomial(1, -k);
    }
    return r;
}

ScalarK ScalarK::q_pow(int k) { return s_pow(2 * k); }

bool ScalarK::is_one() const {
    return num_.is_monomial() && num_.low_exp() == 0 && num_.leading_coef() == 1 &&
           den_.is_monomial() && den_.low_exp() == 0 && den_.leading_coef() == 1;
}

ScalarK operator+(const ScalarK& a, const ScalarK& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return ScalarK(a.num_ + b.num_, a.den_);
    return ScalarK(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

ScalarK ScalarK::operator-() const {
    ScalarK r(*this);
    r.num_ = -r.num_;
    return r;
}

ScalarK operator-(const ScalarK& a, const ScalarK& b) { return a + (-b); }

ScalarK operator*(const ScalarK& a, const ScalarK& b) {
    if (a.is_zero() || b.is_zero()) return ScalarK::zero();
    return ScalarK(a.num_ * b.num_, a.den_ * b.den_);
}

ScalarK ScalarK::inv() const {
    if (is_zero()) throw DivisionByZero("inv(0)");
    return ScalarK(den_, num_);
}

ScalarK operator/(const ScalarK& a, const ScalarK& b) { return a * b.inv(); }

ScalarK ScalarK::pow(int k) const {
    if (k == 0) return ScalarK::one();
    ScalarK base = k > 0 ? *this : inv();
    int e = k > 0 ? k : -k;
    ScalarK acc = ScalarK::one();
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

Rat ScalarK::eval_at(const Rat& s0) const {
    Rat d = den_.eval(s0);
    if (d == 0) throw PoleError("pole at s = " + s0.get_str());
    Rat n = num_.eval(s0);
    Rat r = n / d;
    r.canonicalize();
    return r;
}

std::string ScalarK::str() const {
    bool all_even = true;
    for (const auto& t : num_.terms())
        if (t.exp % 2 != 0) all_even = false;
    for (const auto& t : den_.terms())
        if (t.exp % 2 != 0) all_even = false;
    auto render = [&](const IntPoly& p) {
        if (!all_even) return p.str("s");
        std::vector<IntPoly::Term> half;
        for (const auto& t : p.terms()) half.push_back({t.exp / 2, t.coef});
        return IntPoly::from_terms(std::move(half)).str("q");
    };
    std::string n = render(num_);
    if (den_.is_monomial() && den_.low_exp() == 0 && den_.leading_coef() == 1) return n;
    std::string d = render(den_);
    auto wrap = [](const std::string& x) {
        bool needs = x.find('+') != std::string::npos || x.find('*') != std::string::npos ||
                     x.find('-', 1) != std::string::npos;
        return needs ? "(" + x + ")" : x;
    };
    return wrap(n) + "/" + wrap(d);
}

namespace {

// Recursive-descent parser for the canonical scalar text form:
//   scalar := polyw ( "/" polyw )?
//   polyw  := "(" poly ")" | poly-with-no-top-level-slash
//   poly   := term (("+"|"-") term)*
//   term   := [sign] [int ["/" int]] ["*"] [("q"|"s") ["^" [-]int]]
struct ScalarParser {
    const std::string& t;
    size_t pos = 0;
    explicit ScalarParser(const std::string& s) : t(s) {}

    [[noreturn]] void fail(const std::string& why) const {
        throw std::invalid_argument("scalar parse error at " + std::to_string(pos) + ": " + why +
                                    " in \"" + t + "\"");
    }
    bool eof() const { return pos >= t.size(); }
    char peek() const { return eof() ? '\0' : t[pos]; }
    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    long integer() {
        size_t start = pos;
        while (!eof() && std::isdigit(static_cast<unsigned char>(t[pos]))) ++pos;
        if (start == pos) fail("expected integer");
        return std::stol(t.substr(start, pos - start));
    }
    ScalarK term() {
        bool neg = false;
        if (accept('-')) neg = true;
        else accept('+');
        ScalarK coef = ScalarK::one();
        bool have_num = false;
        if (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
            long n = integer();
            long d = 1;
            if (peek() == '/' && pos + 1 < t.size() &&
                std::isdigit(static_cast<unsigned char>(t[pos + 1]))) {
                ++pos;
                d = integer();
            }
            coef = ScalarK::from_ratio(n, d);
            have_num = true;
        }
        accept('*');
        if (peek() == 'q' || peek() == 's') {
            char v = t[pos++];
            int e = 1;
            if (accept('^')) {
                bool eneg = accept('-');
                if (!eneg) accept('+');
                e = static_cast<int>(integer());
                if (eneg) e = -e;
            }
            coef = coef * ((v == 'q') ? ScalarK::q_pow(e) : ScalarK::s_pow(e));
        } else if (!have_num) {
            fail("expected coefficient or variable");
        }
        return neg ? -coef : coef;
    }
    ScalarK poly() {
        ScalarK acc = term();
        while (peek() == '+' || peek() == '-') acc = acc + term();
        return acc;
    }
    ScalarK polyw() {
        if (accept('(')) {
            ScalarK p = poly();
            if (!accept(')')) fail("expected )");
            return p;
        }
        return poly();
    }
    ScalarK scalar() {
        ScalarK top = polyw();
        if (accept('/')) {
            ScalarK bot = polyw();
            top = top / bot;
        }
        if (!eof()) fail("trailing characters");
        return top;
    }
};

}  // namespace

ScalarK ScalarK::parse(const std::string& text) {
    std::string compact;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) compact += ch;
    if (compact.empty()) throw std::invalid_argument("empty scalar literal");
    ScalarParser p(compact);
    return p.scalar();
}

Params::Params(ScalarK c_, ScalarK d_) : c(std::move(c_)), d(std::move(d_)) {
    if ((c + d).is_zero()) throw std::invalid_argument("parameters require c + d != 0");
}

}  // namespace podles
