#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace trilength {

/// One monomial x0^e0 * x1^e1.
struct Monomial {
    uint32_t e0 = 0;
    uint32_t e1 = 0;

    uint32_t total_degree() const { return e0 + e1; }

    friend bool operator==(const Monomial&, const Monomial&) = default;
    /// Canonical term order: ascending total degree, then ascending e0.
    friend bool operator<(const Monomial& a, const Monomial& b) {
        if (a.total_degree() != b.total_degree())
            return a.total_degree() < b.total_degree();
        return a.e0 < b.e0;
    }
};

/// Exact integer polynomial in two variables x0, x1.  Terms are kept in the
/// canonical order above with no zero coefficients, so equal values have
/// equal representations: operator== doubles as exact arithmetic equality,
/// and the serialized form is a usable dictionary key.
struct BiPoly {
    struct Term {
        Monomial mono;
        int64_t coeff = 0;
        friend bool operator==(const Term&, const Term&) = default;
    };
    std::vector<Term> terms;

    static BiPoly zero() { return {}; }
    static BiPoly constant(int64_t c);
    /// x0 (which = 0) or x1 (which = 1).
    static BiPoly variable(int which);

    bool is_zero() const { return terms.empty(); }

    friend bool operator==(const BiPoly&, const BiPoly&) = default;
    friend bool operator<(const BiPoly& a, const BiPoly& b);
};

BiPoly poly_add(const BiPoly& a, const BiPoly& b);
BiPoly poly_neg(const BiPoly& a);
BiPoly poly_sub(const BiPoly& a, const BiPoly& b);
/// a * (k * x0^(m.e0) * x1^(m.e1)); k may be zero (yields the zero polynomial).
BiPoly poly_mul_monomial(const BiPoly& a, const Monomial& m, int64_t k);

/// Substitutes x0 = exp(i*theta0), x1 = exp(i*theta1).  Each term contributes
/// coeff * exp(i*(e0*theta0 + e1*theta1)) computed from the summed angle, so
/// no error accumulates across repeated complex multiplication.
std::complex<double> poly_eval(const BiPoly& p, double theta0, double theta1);

/// Canonical serialization: JSON array of [e0, e1, coeff] triples in term
/// order, e.g. "[[0,0,1],[1,0,1]]" for 1 + x0.  parse_poly inverts it and
/// rejects non-canonical input (wrong order, zero coefficients, duplicates).
std::string poly_to_string(const BiPoly& p);
BiPoly parse_poly(const std::string& text);

/// Human-oriented rendering such as "2x0 + x0*x1"; not parsed back.
std::string poly_pretty(const BiPoly& p);

} // namespace trilength
