#ifndef TROPIQ_POLYNOMIAL_HPP
#define TROPIQ_POLYNOMIAL_HPP

#include "tropiq/field.hpp"
#include "tropiq/monomial.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tropiq {

template <class F>
struct Ring {
    F field;
    std::vector<std::string> vars;

    int nvars() const { return static_cast<int>(vars.size()); }
    int var_index(const std::string& name) const {
        for (std::size_t i = 0; i < vars.size(); ++i)
            if (vars[i] == name) return static_cast<int>(i);
        return -1;
    }
    bool operator==(const Ring& o) const { return field == o.field && vars == o.vars; }
};

template <class F>
using RingPtr = std::shared_ptr<const Ring<F>>;

template <class F>
RingPtr<F> make_ring(F field, std::vector<std::string> vars) {
    Monomial::check_nvars(static_cast<int>(vars.size()));
    for (std::size_t i = 0; i < vars.size(); ++i)
        for (std::size_t j = i + 1; j < vars.size(); ++j)
            if (vars[i] == vars[j]) throw std::invalid_argument("duplicate variable " + vars[i]);
    return std::make_shared<Ring<F>>(Ring<F>{std::move(field), std::move(vars)});
}

/// Convenience: variables prefix0..prefix(count-1).
inline std::vector<std::string> indexed_vars(const std::string& prefix, int count) {
    std::vector<std::string> v;
    v.reserve(count);
    for (int i = 0; i < count; ++i) v.push_back(prefix + std::to_string(i));
    return v;
}

/// Exact multivariate polynomial. Terms are kept sorted in descending
/// monomial order so leading-term access is O(1) and iteration is
/// deterministic.
template <class F>
class Polynomial {
  public:
    using Field = F;
    using Elem = typename F::Elem;
    using Term = std::pair<Monomial, Elem>;

    Polynomial() = default;
    explicit Polynomial(RingPtr<F> ring, MonomialOrder ord = MonomialOrder::grevlex())
        : ring_(std::move(ring)), ord_(ord) {}

    static Polynomial constant(RingPtr<F> ring, Elem c,
                               MonomialOrder ord = MonomialOrder::grevlex()) {
        Polynomial p(ring, ord);
        if (!ring->field.is_zero(c)) p.terms_.push_back({Monomial(ring->nvars()), c});
        return p;
    }
    static Polynomial from_term(RingPtr<F> ring, const Monomial& m, Elem c,
                                MonomialOrder ord = MonomialOrder::grevlex()) {
        Polynomial p(ring, ord);
        if (!ring->field.is_zero(c)) p.terms_.push_back({m, c});
        return p;
    }
    static Polynomial variable(RingPtr<F> ring, int i,
                               MonomialOrder ord = MonomialOrder::grevlex()) {
        Monomial m(ring->nvars());
        m.set(i, 1);
        Elem one = ring->field.one();
        return from_term(std::move(ring), m, one, ord);
    }
    /// Build from unsorted terms, combining duplicates.
    static Polynomial from_terms(RingPtr<F> ring, const std::vector<Term>& terms,
                                 MonomialOrder ord = MonomialOrder::grevlex()) {
        Polynomial p(ring, ord);
        for (const auto& t : terms) p.add_term(t.first, t.second);
        return p;
    }

    const RingPtr<F>& ring() const { return ring_; }
    const MonomialOrder& order() const { return ord_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    const Monomial& leading_monomial() const { return require_nonzero().first; }
    const Elem& leading_coeff() const { return require_nonzero().second; }
    int degree() const {
        int d = -1;
        for (const auto& t : terms_) d = std::max(d, t.first.degree());
        return d;
    }
    bool is_homogeneous() const {
        for (const auto& t : terms_)
            if (t.first.degree() != terms_.front().first.degree()) return false;
        return true;
    }

    Polynomial with_order(MonomialOrder ord) const {
        Polynomial p(ring_, ord);
        p.terms_ = terms_;
        std::sort(p.terms_.begin(), p.terms_.end(),
                  [&ord](const Term& a, const Term& b) { return ord.greater(a.first, b.first); });
        return p;
    }

    /// In-place accumulation of a single term; keeps terms sorted.
    void add_term(const Monomial& m, const Elem& c) {
        const F& k = ring_->field;
        if (k.is_zero(c)) return;
        auto it = std::lower_bound(
            terms_.begin(), terms_.end(), m,
            [this](const Term& t, const Monomial& mm) { return ord_.greater(t.first, mm); });
        if (it != terms_.end() && it->first == m) {
            it->second = k.add(it->second, c);
            if (k.is_zero(it->second)) terms_.erase(it);
        } else {
            terms_.insert(it, {m, c});
        }
    }

    Polynomial operator+(const Polynomial& o) const { return merged(o, false); }
    Polynomial operator-(const Polynomial& o) const { return merged(o, true); }
    Polynomial operator-() const {
        Polynomial p(ring_, ord_);
        p.terms_.reserve(terms_.size());
        for (const auto& t : terms_) p.terms_.push_back({t.first, ring_->field.neg(t.second)});
        return p;
    }

    Polynomial operator*(const Polynomial& o) const {
        check_ring(o);
        const F& k = ring_->field;
        auto greater = [this](const Monomial& a, const Monomial& b) { return ord_.greater(a, b); };
        std::map<Monomial, Elem, decltype(greater)> acc(greater);
        Polynomial resorted;
        if (!(ord_ == o.ord_)) resorted = o.with_order(ord_);
        const Polynomial& rhs = (ord_ == o.ord_) ? o : resorted;
        for (const auto& a : terms_)
            for (const auto& b : rhs.terms_) {
                Monomial m = a.first * b.first;
                Elem c = k.mul(a.second, b.second);
                auto [it, inserted] = acc.try_emplace(m, c);
                if (!inserted) {
                    it->second = k.add(it->second, c);
                    if (k.is_zero(it->second)) acc.erase(it);
                }
            }
        Polynomial p(ring_, ord_);
        p.terms_.assign(acc.begin(), acc.end());
        return p;
    }

    /// this * c * x^m
    Polynomial times_term(const Monomial& m, const Elem& c) const {
        Polynomial p(ring_, ord_);
        if (ring_->field.is_zero(c)) return p;
        p.terms_.reserve(terms_.size());
        for (const auto& t : terms_)
            p.terms_.push_back({t.first * m, ring_->field.mul(t.second, c)});
        return p;
    }

    Polynomial scaled(const Elem& c) const { return times_term(Monomial(ring_->nvars()), c); }

    Polynomial monic() const {
        if (is_zero()) return *this;
        return scaled(ring_->field.inv(leading_coeff()));
    }

    /// this - c * x^m * g, in one merge pass. The workhorse of division.
    Polynomial axpy_sub(const Elem& c, const Monomial& m, const Polynomial& g) const {
        const F& k = ring_->field;
        Polynomial p(ring_, ord_);
        p.terms_.reserve(terms_.size() + g.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < terms_.size() || j < g.terms_.size()) {
            if (j == g.terms_.size()) {
                p.terms_.push_back(terms_[i++]);
                continue;
            }
            Monomial gm = g.terms_[j].first * m;
            Elem gc = k.neg(k.mul(c, g.terms_[j].second));
            if (i == terms_.size()) {
                p.terms_.push_back({gm, gc});
                ++j;
                continue;
            }
            int cc = ord_.cmp(terms_[i].first, gm);
            if (cc > 0) {
                p.terms_.push_back(terms_[i++]);
            } else if (cc < 0) {
                p.terms_.push_back({gm, gc});
                ++j;
            } else {
                Elem s = k.add(terms_[i].second, gc);
                if (!k.is_zero(s)) p.terms_.push_back({terms_[i].first, s});
                ++i;
                ++j;
            }
        }
        return p;
    }

    bool operator==(const Polynomial& o) const {
        if (!(*ring_ == *o.ring_)) return false;
        if (ord_ == o.ord_) return terms_ == o.terms_;
        return terms_ == o.with_order(ord_).terms_;
    }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    void check_ring(const Polynomial& o) const {
        if (!ring_ || !o.ring_ || !(*ring_ == *o.ring_))
            throw std::invalid_argument("polynomials live in different rings");
    }

  private:
    const Term& require_nonzero() const {
        if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
        return terms_.front();
    }
    Polynomial merged(const Polynomial& o, bool subtract) const {
        check_ring(o);
        const F& k = ring_->field;
        Polynomial resorted;
        if (!(ord_ == o.ord_)) resorted = o.with_order(ord_);
        const Polynomial& rhs = (ord_ == o.ord_) ? o : resorted;
        Polynomial p(ring_, ord_);
        p.terms_.reserve(terms_.size() + rhs.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < terms_.size() || j < rhs.terms_.size()) {
            if (i == terms_.size()) {
                Elem c = subtract ? k.neg(rhs.terms_[j].second) : rhs.terms_[j].second;
                p.terms_.push_back({rhs.terms_[j].first, c});
                ++j;
            } else if (j == rhs.terms_.size()) {
                p.terms_.push_back(terms_[i++]);
            } else {
                int cc = ord_.cmp(terms_[i].first, rhs.terms_[j].first);
                if (cc > 0) {
                    p.terms_.push_back(terms_[i++]);
                } else if (cc < 0) {
                    Elem c = subtract ? k.neg(rhs.terms_[j].second) : rhs.terms_[j].second;
                    p.terms_.push_back({rhs.terms_[j].first, c});
                    ++j;
                } else {
                    Elem c = subtract ? k.sub(terms_[i].second, rhs.terms_[j].second)
                                      : k.add(terms_[i].second, rhs.terms_[j].second);
                    if (!k.is_zero(c)) p.terms_.push_back({terms_[i].first, c});
                    ++i;
                    ++j;
                }
            }
        }
        return p;
    }

    RingPtr<F> ring_;
    MonomialOrder ord_ = MonomialOrder::grevlex();
    std::vector<Term> terms_;
};

// ----- text format -------------------------------------------------------
//
// Integer (or p/q) coefficients, '*' for products, '^' for powers, e.g.
//   2*z2+z6+5*z7+8*z11
//   z10^2-z9*z11
// Printing folds prime-field residues above p/2 into negative form, so
// parse/print round-trips.

template <class F>
std::string to_string(const Polynomial<F>& f) {
    if (f.is_zero()) return "0";
    const auto& ring = *f.ring();
    std::string out;
    bool first = true;
    for (const auto& [m, c] : f.terms()) {
        auto [neg, mag] = ring.field.signed_repr(c);
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? "-" : "+";
        }
        std::string monos;
        for (int i = 0; i < m.nvars(); ++i) {
            if (m[i] == 0) continue;
            if (!monos.empty()) monos += "*";
            monos += ring.vars[i];
            if (m[i] > 1) monos += "^" + std::to_string(m[i]);
        }
        if (monos.empty()) {
            out += mag;
        } else {
            if (mag != "1") out += mag + "*";
            out += monos;
        }
    }
    return out;
}

namespace detail {

struct PolyLexer {
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    std::string number() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) throw std::invalid_argument("expected a number at position " + std::to_string(pos));
        return s.substr(start, pos - start);
    }
    std::string name() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        if (start == pos) throw std::invalid_argument("expected a name at position " + std::to_string(pos));
        return s.substr(start, pos - start);
    }
};

} // namespace detail

template <class F>
Polynomial<F> parse_polynomial(const RingPtr<F>& ring, const std::string& text,
                               MonomialOrder ord = MonomialOrder::grevlex()) {
    using Elem = typename F::Elem;
    detail::PolyLexer lex{text};
    Polynomial<F> result(ring, ord);
    const F& k = ring->field;

    bool expect_term = true;
    bool negative = false;
    if (lex.accept('-')) negative = true;
    else lex.accept('+');

    while (expect_term) {
        // one term: factors joined by '*'
        Elem coeff = negative ? k.neg(k.one()) : k.one();
        Monomial mono(ring->nvars());
        bool any_factor = false;
        while (true) {
            char c = lex.peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                Int num(lex.number());
                if (lex.accept('/')) {
                    Int den(lex.number());
                    if (den == 0) throw std::invalid_argument("zero denominator in coefficient");
                    coeff = k.mul(coeff, k.from_rational(Rational(num, den)));
                } else {
                    coeff = k.mul(coeff, k.from_int(num));
                }
            } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                std::string var = lex.name();
                int idx = ring->var_index(var);
                if (idx < 0) throw std::invalid_argument("unknown variable '" + var + "'");
                int e = 1;
                if (lex.accept('^')) e = std::stoi(lex.number());
                mono.set(idx, mono[idx] + e);
            } else {
                throw std::invalid_argument("unexpected character in polynomial at position " +
                                            std::to_string(lex.pos));
            }
            any_factor = true;
            if (!lex.accept('*')) break;
        }
        if (!any_factor) throw std::invalid_argument("empty term");
        result.add_term(mono, coeff);

        if (lex.eof()) break;
        if (lex.accept('+')) negative = false;
        else if (lex.accept('-')) negative = true;
        else
            throw std::invalid_argument("expected '+' or '-' at position " +
                                        std::to_string(lex.pos));
    }
    return result;
}

// ----- calculus ----------------------------------------------------------

/// Partial derivative with respect to variable `var`.
template <class F>
Polynomial<F> derivative(const Polynomial<F>& f, int var) {
    Polynomial<F> out(f.ring(), f.order());
    const F& k = f.ring()->field;
    for (const auto& [m, c] : f.terms()) {
        int e = m[var];
        if (e == 0) continue;
        Monomial d = m;
        d.set(var, e - 1);
        out.add_term(d, k.mul(c, k.from_long(e)));
    }
    return out;
}

/// r x n matrix of partials d g_i / d x_j.
template <class F>
std::vector<std::vector<Polynomial<F>>> jacobian(const std::vector<Polynomial<F>>& gens) {
    std::vector<std::vector<Polynomial<F>>> rows;
    rows.reserve(gens.size());
    for (const auto& g : gens) {
        std::vector<Polynomial<F>> row;
        const int n = g.ring()->nvars();
        row.reserve(n);
        for (int j = 0; j < n; ++j) row.push_back(derivative(g, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

/// Determinant of a square polynomial matrix by Laplace expansion.
template <class F>
Polynomial<F> poly_determinant(const std::vector<std::vector<Polynomial<F>>>& m) {
    const std::size_t n = m.size();
    if (n == 0) throw std::invalid_argument("empty matrix");
    if (n == 1) return m[0][0];
    const auto& ring = m[0][0].ring();
    Polynomial<F> det(ring, m[0][0].order());
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        std::vector<std::vector<Polynomial<F>>> sub;
        sub.reserve(n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<Polynomial<F>> row;
            row.reserve(n - 1);
            for (std::size_t c = 0; c < n; ++c)
                if (c != j) row.push_back(m[r][c]);
            sub.push_back(std::move(row));
        }
        Polynomial<F> cof = m[0][j] * poly_determinant(sub);
        det = (j % 2 == 0) ? det + cof : det - cof;
    }
    return det;
}

// local combination enumerator to avoid a dependency on wedge.hpp
inline std::vector<std::vector<std::size_t>> subsets_lex_small(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    struct Rec {
        std::size_t n, k;
        std::vector<std::vector<std::size_t>>& out;
        std::vector<std::size_t>& cur;
        void go(std::size_t start) {
            if (cur.size() == k) {
                out.push_back(cur);
                return;
            }
            for (std::size_t i = start; i < n; ++i) {
                cur.push_back(i);
                go(i + 1);
                cur.pop_back();
            }
        }
    } rec{n, k, out, cur};
    rec.go(0);
    return out;
}

/// All size x size minors, with row/column subsets in lexicographic order.
template <class F>
std::vector<Polynomial<F>> minors(const std::vector<std::vector<Polynomial<F>>>& m,
                                  std::size_t size) {
    if (m.empty()) throw std::invalid_argument("empty matrix");
    const std::size_t rows = m.size(), cols = m[0].size();
    if (size > rows || size > cols) throw std::invalid_argument("minor size exceeds matrix");
    std::vector<Polynomial<F>> out;
    auto row_subs = subsets_lex_small(rows, size);
    auto col_subs = subsets_lex_small(cols, size);
    for (const auto& rs : row_subs)
        for (const auto& cs : col_subs) {
            std::vector<std::vector<Polynomial<F>>> sub(size, std::vector<Polynomial<F>>());
            for (std::size_t r = 0; r < size; ++r)
                for (std::size_t c = 0; c < size; ++c) sub[r].push_back(m[rs[r]][cs[c]]);
            out.push_back(poly_determinant(sub));
        }
    return out;
}

} // namespace tropiq

#endif
