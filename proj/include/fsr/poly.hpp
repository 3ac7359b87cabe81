#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fsr/ring.hpp"

namespace fsr {

/// Dense polynomial over Z_{p^r}. Coefficients are canonical representatives,
/// index i holding the coefficient of x^i; the highest stored coefficient is
/// nonzero (the zero polynomial stores nothing). degree() of the zero
/// polynomial is -1, which sorts below every attainable degree.
class Poly {
public:
    explicit Poly(Modulus m) : m_(m) {}

    static Poly zero(Modulus m) { return Poly(m); }

    static Poly constant(const Residue& c) {
        Poly p(c.modulus());
        if (!c.is_zero()) p.c_.push_back(c.value());
        return p;
    }

    static Poly from_coeffs(Modulus m, const std::vector<std::int64_t>& coeffs) {
        Poly p(m);
        p.c_.reserve(coeffs.size());
        for (std::int64_t c : coeffs) p.c_.push_back(Residue(c, m).value());
        p.trim();
        return p;
    }

    /// c * x^exp
    static Poly monomial(Modulus m, std::int64_t c, std::int64_t exp) {
        Poly p(m);
        const std::int64_t cv = Residue(c, m).value();
        if (cv != 0) {
            p.c_.assign(static_cast<std::size_t>(exp) + 1, 0);
            p.c_.back() = cv;
        }
        return p;
    }

    const Modulus& modulus() const { return m_; }
    bool is_zero() const { return c_.empty(); }
    std::int64_t degree() const { return static_cast<std::int64_t>(c_.size()) - 1; }

    std::int64_t coeff_value(std::int64_t i) const {
        if (i < 0 || i >= static_cast<std::int64_t>(c_.size())) return 0;
        return c_[static_cast<std::size_t>(i)];
    }
    Residue coeff(std::int64_t i) const { return Residue(coeff_value(i), m_); }
    Residue constant_term() const { return coeff(0); }
    Residue leading_coeff() const { return coeff(degree()); }

    friend Poly operator+(const Poly& a, const Poly& b) {
        a.check_same(b);
        Poly out(a.m_);
        out.c_.resize(std::max(a.c_.size(), b.c_.size()), 0);
        for (std::size_t i = 0; i < out.c_.size(); ++i) {
            std::int64_t v = 0;
            if (i < a.c_.size()) v += a.c_[i];
            if (i < b.c_.size()) v += b.c_[i];
            out.c_[i] = v % a.m_.q();
        }
        out.trim();
        return out;
    }

    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

    Poly operator-() const {
        Poly out(m_);
        out.c_.resize(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i)
            out.c_[i] = c_[i] == 0 ? 0 : m_.q() - c_[i];
        out.trim();
        return out;
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        a.check_same(b);
        Poly out(a.m_);
        if (a.is_zero() || b.is_zero()) return out;
        out.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
        const std::int64_t q = a.m_.q();
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                out.c_[i + j] = (out.c_[i + j] + a.c_[i] * b.c_[j]) % q;
        }
        out.trim();
        return out;
    }

    friend Poly operator*(const Residue& s, const Poly& a) {
        Poly out(a.m_);
        if (s.is_zero()) return out;
        out.c_.resize(a.c_.size());
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            out.c_[i] = (s.value() * a.c_[i]) % a.m_.q();
        out.trim();
        return out;
    }

    /// Multiplication by x^n.
    Poly shifted(std::int64_t n) const {
        Poly out(m_);
        if (is_zero()) return out;
        out.c_.assign(c_.size() + static_cast<std::size_t>(n), 0);
        std::copy(c_.begin(), c_.end(), out.c_.begin() + n);
        return out;
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        a.check_same(b);
        return a.c_ == b.c_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    /// Canonical rendering: descending powers, coefficients in [0, q),
    /// e.g. "7x^2+x+1"; the zero polynomial renders as "0".
    std::string to_string() const {
        if (is_zero()) return "0";
        std::string out;
        for (std::int64_t i = degree(); i >= 0; --i) {
            const std::int64_t c = coeff_value(i);
            if (c == 0) continue;
            if (!out.empty()) out += '+';
            if (i == 0) {
                out += std::to_string(c);
            } else {
                if (c != 1) out += std::to_string(c);
                out += 'x';
                if (i != 1) out += '^' + std::to_string(i);
            }
        }
        return out;
    }

    /// Parses the canonical rendering (and tolerates spaces and '-' signs,
    /// reducing into canonical form). Round-trips with to_string().
    static Poly parse(Modulus m, std::string_view text);

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    void check_same(const Poly& other) const {
        if (m_ != other.m_)
            throw std::invalid_argument("polynomial arithmetic across distinct moduli");
    }

    Modulus m_;
    std::vector<std::int64_t> c_;
};

inline Poly Poly::parse(Modulus m, std::string_view text) {
    std::vector<std::int64_t> coeffs;
    std::size_t i = 0;
    const auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    if (i == text.size()) throw std::invalid_argument("empty polynomial text");

    bool first = true;
    while (i < text.size()) {
        std::int64_t sign = 1;
        skip_ws();
        if (!first || text[i] == '+' || text[i] == '-') {
            if (i == text.size() || (text[i] != '+' && text[i] != '-'))
                throw std::invalid_argument("expected '+' or '-' in polynomial text");
            sign = text[i] == '-' ? -1 : 1;
            ++i;
            skip_ws();
        }
        first = false;

        bool have_coeff = false;
        std::int64_t coeff = 1;
        if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            coeff = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                coeff = coeff * 10 + (text[i] - '0');
                coeff %= m.q(); // keep digits from overflowing on long literals
                ++i;
            }
            have_coeff = true;
        }
        std::int64_t exp = 0;
        if (i < text.size() && text[i] == 'x') {
            ++i;
            exp = 1;
            if (i < text.size() && text[i] == '^') {
                ++i;
                if (i == text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
                    throw std::invalid_argument("expected exponent after '^'");
                exp = 0;
                while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                    exp = exp * 10 + (text[i] - '0');
                    if (exp > 4096) throw std::invalid_argument("exponent out of range");
                    ++i;
                }
            }
        } else if (!have_coeff) {
            throw std::invalid_argument("expected coefficient or 'x' in polynomial text");
        }
        if (static_cast<std::int64_t>(coeffs.size()) <= exp)
            coeffs.resize(static_cast<std::size_t>(exp) + 1, 0);
        coeffs[static_cast<std::size_t>(exp)] += sign * coeff;
        skip_ws();
    }
    return Poly::from_coeffs(m, coeffs);
}

/// Canonical ordering used for solution sets: by degree, then by the
/// coefficient tuple (constant term first).
inline bool poly_less_canonical(const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (std::int64_t i = 0; i <= a.degree(); ++i) {
        if (a.coeff_value(i) != b.coeff_value(i)) return a.coeff_value(i) < b.coeff_value(i);
    }
    return false;
}

inline void sort_canonical(std::vector<Poly>& polys) {
    std::sort(polys.begin(), polys.end(), poly_less_canonical);
}

/// Sorts canonically and removes duplicates.
inline void sort_unique_canonical(std::vector<Poly>& polys) {
    sort_canonical(polys);
    polys.erase(std::unique(polys.begin(), polys.end()), polys.end());
}

} // namespace fsr
