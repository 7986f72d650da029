#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>

#include "hoggatt/errors.hpp"
#include "hoggatt/integer.hpp"

namespace hoggatt {

// The library works in the fixed alphabet {x, q, s, t}: x carries series and
// Narayana polynomials, q the q-analogs, s and t the Fibonacci-polynomial
// parameters.
enum class Variable : int { x = 0, q = 1, s = 2, t = 3 };

inline constexpr int kVariableCount = 4;

inline constexpr const char* variable_name(Variable v) {
    constexpr const char* names[kVariableCount] = {"x", "q", "s", "t"};
    return names[static_cast<int>(v)];
}

// Exponent vector over the fixed alphabet.  Exponents are bounded machine
// integers; products check for overflow.
struct Monomial {
    std::array<int32_t, kVariableCount> exps{};

    int32_t operator[](Variable v) const { return exps[static_cast<int>(v)]; }
    int32_t& operator[](Variable v) { return exps[static_cast<int>(v)]; }

    long total_degree() const {
        long d = 0;
        for (int32_t e : exps) d += e;
        return d;
    }

    bool operator==(const Monomial& o) const { return exps == o.exps; }

    bool divides(const Monomial& o) const {
        for (int i = 0; i < kVariableCount; ++i)
            if (exps[i] > o.exps[i]) return false;
        return true;
    }

    Monomial times(const Monomial& o) const {
        Monomial r;
        for (int i = 0; i < kVariableCount; ++i) {
            int64_t e = int64_t(exps[i]) + int64_t(o.exps[i]);
            if (e > std::numeric_limits<int32_t>::max())
                throw std::overflow_error("Monomial::times: exponent overflow");
            r.exps[i] = static_cast<int32_t>(e);
        }
        return r;
    }

    Monomial divided_by(const Monomial& o) const {
        Monomial r;
        for (int i = 0; i < kVariableCount; ++i) r.exps[i] = exps[i] - o.exps[i];
        return r;
    }
};

// Graded lexicographic order, variable significance x < q < s < t.  The term
// map uses the reversed comparison so iteration starts at the leading term,
// which also fixes the canonical serialization order.
struct GradedLexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        long da = a.total_degree(), db = b.total_degree();
        if (da != db) return da > db;
        return a.exps > b.exps;
    }
};

class SparsePoly;
using Bindings = std::array<std::optional<SparsePoly>, kVariableCount>;

// Multivariate polynomial over Integer in canonical form: no stored zero
// coefficient, deterministic term order.  Immutable in spirit; all operations
// return new values.
class SparsePoly {
  public:
    using TermMap = std::map<Monomial, Integer, GradedLexGreater>;

    SparsePoly() = default;
    explicit SparsePoly(long c) { *this = SparsePoly(Integer(c)); }
    explicit SparsePoly(Integer c) {
        if (c != 0) terms_.emplace(Monomial{}, std::move(c));
    }

    static SparsePoly variable(Variable v, int32_t exp = 1) {
        SparsePoly p;
        if (exp < 0) throw std::invalid_argument("SparsePoly::variable: negative exponent");
        Monomial m;
        m[v] = exp;
        p.terms_.emplace(m, Integer(1));
        p.alphabet_ = 1u << static_cast<int>(v);
        return p;
    }

    static SparsePoly term(Integer coef, Monomial m) {
        SparsePoly p;
        if (coef != 0) p.terms_.emplace(m, std::move(coef));
        for (int i = 0; i < kVariableCount; ++i)
            if (m.exps[i] != 0) p.alphabet_ |= 1u << i;
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{});
    }
    bool is_one() const { return is_constant() && constant_value() == 1; }

    // Value as a constant; only valid when is_constant().
    Integer constant_value() const {
        if (terms_.empty()) return Integer(0);
        if (!is_constant())
            throw std::logic_error("SparsePoly::constant_value: polynomial is not constant");
        return terms_.begin()->second;
    }

    Integer constant_term() const {
        auto it = terms_.find(Monomial{});
        return it == terms_.end() ? Integer(0) : it->second;
    }

    size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }
    unsigned alphabet_mask() const { return alphabet_; }
    bool mentions(Variable v) const { return degree(v) > 0; }

    // Highest/lowest exponent of v over all terms; -1 for the zero polynomial.
    int32_t degree(Variable v) const {
        int32_t d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, m[v]);
        return d;
    }
    int32_t low_degree(Variable v) const {
        if (terms_.empty()) return -1;
        int32_t d = std::numeric_limits<int32_t>::max();
        for (const auto& [m, c] : terms_) d = std::min(d, m[v]);
        return d;
    }
    long total_degree() const {
        long d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
        return d;
    }

    Integer coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Integer(0) : it->second;
    }

    // Polynomial coefficient of v^power (the other variables survive).
    SparsePoly coefficient_of(Variable v, int32_t power) const {
        SparsePoly r;
        r.alphabet_ = alphabet_ & ~(1u << static_cast<int>(v));
        for (const auto& [m, c] : terms_) {
            if (m[v] != power) continue;
            Monomial rest = m;
            rest[v] = 0;
            r.terms_.emplace(rest, c);
        }
        return r;
    }

    // Integer coefficient of v^power for a polynomial univariate in v.
    Integer univariate_coeff(Variable v, int32_t power) const {
        SparsePoly c = coefficient_of(v, power);
        return c.constant_value();
    }

    SparsePoly operator-() const {
        SparsePoly r(*this);
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }

    SparsePoly& operator+=(const SparsePoly& o) {
        alphabet_ |= o.alphabet_;
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    SparsePoly& operator-=(const SparsePoly& o) {
        alphabet_ |= o.alphabet_;
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    SparsePoly& operator*=(const SparsePoly& o) {
        *this = *this * o;
        return *this;
    }

    friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
    friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }

    friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
        SparsePoly r;
        r.alphabet_ = a.alphabet_ | b.alphabet_;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(ma.times(mb), ca * cb);
        return r;
    }

    friend SparsePoly operator*(const Integer& c, const SparsePoly& p) {
        return SparsePoly(c) * p;
    }

    // Equality is on canonical term maps; the alphabet mask is metadata.
    bool operator==(const SparsePoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const SparsePoly& o) const { return !(*this == o); }

    SparsePoly pow(unsigned long e) const {
        SparsePoly r(1);
        SparsePoly base(*this);
        while (e > 0) {
            if (e & 1) r *= base;
            e >>= 1;
            if (e) base *= base;
        }
        return r;
    }

    // Simultaneous substitution: bound variables are replaced by their
    // binding (substitution is not re-applied to the inserted values).  A ring
    // homomorphism by construction.
    SparsePoly substitute(const Bindings& bindings) const {
        std::array<std::map<int32_t, SparsePoly>, kVariableCount> pow_cache;
        SparsePoly result;
        for (const auto& [m, c] : terms_) {
            Monomial unbound;
            SparsePoly factor(c);
            for (int i = 0; i < kVariableCount; ++i) {
                if (m.exps[i] == 0) continue;
                if (!bindings[i]) {
                    unbound.exps[i] = m.exps[i];
                    continue;
                }
                auto [it, fresh] = pow_cache[i].try_emplace(m.exps[i]);
                if (fresh) it->second = bindings[i]->pow(m.exps[i]);
                factor *= it->second;
            }
            result += factor * SparsePoly::term(Integer(1), unbound);
        }
        result.alphabet_ = alphabet_;
        for (int i = 0; i < kVariableCount; ++i)
            if (bindings[i] && (alphabet_ & (1u << i))) {
                result.alphabet_ &= ~(1u << i);
                result.alphabet_ |= bindings[i]->alphabet_mask();
            }
        return result;
    }

    // Canonical text form: graded-lex leading term first, `coef*x^a*q^b*s^c*t^d`
    // with unit exponents and unit coefficients elided, e.g. "s^4 + 3*s^2*t + t^2".
    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream out;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            Integer mag = c < 0 ? Integer(-c) : c;
            if (first) {
                if (c < 0) out << "-";
                first = false;
            } else {
                out << (c < 0 ? " - " : " + ");
            }
            bool has_vars = !(m == Monomial{});
            if (mag != 1 || !has_vars) out << mag.get_str();
            bool need_star = mag != 1;
            for (int i = 0; i < kVariableCount; ++i) {
                if (m.exps[i] == 0) continue;
                if (need_star) out << "*";
                out << variable_name(static_cast<Variable>(i));
                if (m.exps[i] != 1) out << "^" << m.exps[i];
                need_star = true;
            }
        }
        return out.str();
    }

  private:
    void add_term(const Monomial& m, const Integer& c) {
        if (c == 0) return;
        auto [it, fresh] = terms_.try_emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    TermMap terms_;
    unsigned alphabet_ = 0;
};

inline std::string to_canonical_string(const SparsePoly& p) { return p.str(); }

inline bool is_unit(const SparsePoly& p) { return p.is_constant() && is_unit(p.constant_term()); }

// Exact quotient a/b in the polynomial ring.  Reduces the leading term with
// respect to the graded-lex order; any failure to divide (monomial or
// coefficient) means the quotient does not exist in the ring.
inline SparsePoly exact_div(const SparsePoly& a, const SparsePoly& b) {
    if (b.is_zero()) throw InexactDivision("exact_div: division by zero polynomial");
    if (b.is_constant()) {
        const Integer d = b.constant_value();
        SparsePoly q;
        for (const auto& [m, c] : a.terms()) q += SparsePoly::term(exact_div(c, d), m);
        return q;
    }
    SparsePoly r = a;
    SparsePoly q;
    const auto& blead = *b.terms().begin();
    while (!r.is_zero()) {
        const auto& rlead = *r.terms().begin();
        if (!blead.first.divides(rlead.first))
            throw InexactDivision("exact_div: leading monomial does not divide");
        Integer qc;
        {
            Integer rem;
            mpz_tdiv_qr(qc.get_mpz_t(), rem.get_mpz_t(), rlead.second.get_mpz_t(),
                        blead.second.get_mpz_t());
            if (rem != 0) throw InexactDivision("exact_div: leading coefficient does not divide");
        }
        SparsePoly step = SparsePoly::term(qc, rlead.first.divided_by(blead.first));
        q += step;
        r -= step * b;
    }
    return q;
}

// Convenience bindings builders.
inline Bindings bind(Variable v, const SparsePoly& value) {
    Bindings b;
    b[static_cast<int>(v)] = value;
    return b;
}
inline Bindings bind(Variable v, const Integer& value) { return bind(v, SparsePoly(value)); }
inline Bindings& with(Bindings& b, Variable v, const SparsePoly& value) {
    b[static_cast<int>(v)] = value;
    return b;
}
inline Bindings& with(Bindings& b, Variable v, const Integer& value) {
    return with(b, v, SparsePoly(value));
}

// The (s,t)-bindings used throughout: (2,-1) gives the classic integers,
// (1+q,-q) the q-analogs, (1,1) the Fibonacci numbers.
inline Bindings bindings_classic() {
    Bindings b = bind(Variable::s, Integer(2));
    return with(b, Variable::t, Integer(-1));
}
inline Bindings bindings_q() {
    Bindings b = bind(Variable::s, SparsePoly(1) + SparsePoly::variable(Variable::q));
    return with(b, Variable::t, -SparsePoly::variable(Variable::q));
}
inline Bindings bindings_fib() {
    Bindings b = bind(Variable::s, Integer(1));
    return with(b, Variable::t, Integer(1));
}

} // namespace hoggatt
