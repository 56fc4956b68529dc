#ifndef TROPIQ_MONOMIAL_HPP
#define TROPIQ_MONOMIAL_HPP

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace tropiq {

/// Exponent vector of fixed small capacity; rings are capped at kMaxVars
/// variables, which covers every ring used here (the largest is 18).
class Monomial {
  public:
    static constexpr int kMaxVars = 18;

    Monomial() : n_(0), deg_(0) { e_.fill(0); }
    explicit Monomial(int nvars) : n_(nvars), deg_(0) {
        check_nvars(nvars);
        e_.fill(0);
    }
    static Monomial from(const std::vector<int>& exps) {
        Monomial m(static_cast<int>(exps.size()));
        for (std::size_t i = 0; i < exps.size(); ++i) m.set(static_cast<int>(i), exps[i]);
        return m;
    }
    static void check_nvars(int n) {
        if (n < 0 || n > kMaxVars) throw std::invalid_argument("variable count out of range");
    }

    int nvars() const { return n_; }
    int degree() const { return deg_; }
    int operator[](int i) const { return e_[i]; }
    void set(int i, int v) {
        if (v < 0) throw std::invalid_argument("negative exponent");
        deg_ += v - e_[i];
        e_[i] = static_cast<std::int16_t>(v);
    }
    bool is_one() const { return deg_ == 0; }

    bool divides(const Monomial& o) const {
        for (int i = 0; i < n_; ++i)
            if (e_[i] > o.e_[i]) return false;
        return true;
    }
    bool coprime(const Monomial& o) const {
        for (int i = 0; i < n_; ++i)
            if (e_[i] > 0 && o.e_[i] > 0) return false;
        return true;
    }
    Monomial operator*(const Monomial& o) const {
        Monomial r(n_);
        for (int i = 0; i < n_; ++i) r.e_[i] = static_cast<std::int16_t>(e_[i] + o.e_[i]);
        r.deg_ = deg_ + o.deg_;
        return r;
    }
    /// Quotient this / o; requires o | this.
    Monomial divided_by(const Monomial& o) const {
        Monomial r(n_);
        for (int i = 0; i < n_; ++i) r.e_[i] = static_cast<std::int16_t>(e_[i] - o.e_[i]);
        r.deg_ = deg_ - o.deg_;
        return r;
    }
    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r(a.n_);
        int d = 0;
        for (int i = 0; i < a.n_; ++i) {
            r.e_[i] = a.e_[i] > b.e_[i] ? a.e_[i] : b.e_[i];
            d += r.e_[i];
        }
        r.deg_ = d;
        return r;
    }

    /// Bitmask of variables with positive exponent.
    std::uint32_t support_mask() const {
        std::uint32_t m = 0;
        for (int i = 0; i < n_; ++i)
            if (e_[i] > 0) m |= (1u << i);
        return m;
    }

    bool operator==(const Monomial& o) const {
        if (n_ != o.n_ || deg_ != o.deg_) return false;
        for (int i = 0; i < n_; ++i)
            if (e_[i] != o.e_[i]) return false;
        return true;
    }
    bool operator!=(const Monomial& o) const { return !(*this == o); }

  private:
    std::array<std::int16_t, kMaxVars> e_;
    int n_;
    int deg_;
};

enum class OrderKind { GrevLex, Lex, Block };

/// A multiplicative total order on monomials of a fixed ring. Block orders
/// compare the leading block (the first `block` variables) grevlex-first,
/// which eliminates those variables.
struct MonomialOrder {
    OrderKind kind = OrderKind::GrevLex;
    int block = 0;

    static MonomialOrder grevlex() { return {OrderKind::GrevLex, 0}; }
    static MonomialOrder lex() { return {OrderKind::Lex, 0}; }
    static MonomialOrder elimination_block(int first_block_size) {
        return {OrderKind::Block, first_block_size};
    }

    bool operator==(const MonomialOrder& o) const { return kind == o.kind && block == o.block; }

    /// Three-way comparison: positive when a > b.
    int cmp(const Monomial& a, const Monomial& b) const {
        switch (kind) {
            case OrderKind::GrevLex:
                return cmp_grevlex(a, b, 0, a.nvars());
            case OrderKind::Lex: {
                for (int i = 0; i < a.nvars(); ++i)
                    if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
                return 0;
            }
            case OrderKind::Block: {
                int c = cmp_grevlex(a, b, 0, block);
                if (c != 0) return c;
                return cmp_grevlex(a, b, block, a.nvars());
            }
        }
        return 0;
    }
    bool greater(const Monomial& a, const Monomial& b) const { return cmp(a, b) > 0; }
    bool less(const Monomial& a, const Monomial& b) const { return cmp(a, b) < 0; }

  private:
    static int cmp_grevlex(const Monomial& a, const Monomial& b, int lo, int hi) {
        int da = 0, db = 0;
        for (int i = lo; i < hi; ++i) {
            da += a[i];
            db += b[i];
        }
        if (da != db) return da > db ? 1 : -1;
        for (int i = hi - 1; i >= lo; --i)
            if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
        return 0;
    }
};

} // namespace tropiq

#endif
