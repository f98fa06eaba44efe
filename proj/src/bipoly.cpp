#include "bipoly.hpp"

#include <algorithm>
#include <sstream>

#include "errors.hpp"
#include "json.hpp"

namespace trilength {

namespace {

int64_t checked_add(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw_internal("polynomial coefficient overflow in addition");
    return r;
}

int64_t checked_mul(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw_internal("polynomial coefficient overflow in multiplication");
    return r;
}

uint32_t checked_exp_add(uint32_t a, uint32_t b) {
    uint64_t r = static_cast<uint64_t>(a) + b;
    if (r > 0x7fffffffull) throw_internal("polynomial exponent overflow");
    return static_cast<uint32_t>(r);
}

} // namespace

BiPoly BiPoly::constant(int64_t c) {
    BiPoly p;
    if (c != 0) p.terms.push_back({{0, 0}, c});
    return p;
}

BiPoly BiPoly::variable(int which) {
    BiPoly p;
    if (which == 0)
        p.terms.push_back({{1, 0}, 1});
    else
        p.terms.push_back({{0, 1}, 1});
    return p;
}

bool operator<(const BiPoly& a, const BiPoly& b) {
    return std::lexicographical_compare(
        a.terms.begin(), a.terms.end(), b.terms.begin(), b.terms.end(),
        [](const BiPoly::Term& s, const BiPoly::Term& t) {
            if (s.mono != t.mono) return s.mono < t.mono;
            return s.coeff < t.coeff;
        });
}

BiPoly poly_add(const BiPoly& a, const BiPoly& b) {
    BiPoly out;
    out.terms.reserve(a.terms.size() + b.terms.size());
    size_t i = 0, j = 0;
    while (i < a.terms.size() || j < b.terms.size()) {
        if (j == b.terms.size() ||
            (i < a.terms.size() && a.terms[i].mono < b.terms[j].mono)) {
            out.terms.push_back(a.terms[i++]);
        } else if (i == a.terms.size() || b.terms[j].mono < a.terms[i].mono) {
            out.terms.push_back(b.terms[j++]);
        } else {
            int64_t c = checked_add(a.terms[i].coeff, b.terms[j].coeff);
            if (c != 0) out.terms.push_back({a.terms[i].mono, c});
            ++i;
            ++j;
        }
    }
    return out;
}

BiPoly poly_neg(const BiPoly& a) {
    BiPoly out = a;
    for (auto& t : out.terms) t.coeff = checked_mul(t.coeff, -1);
    return out;
}

BiPoly poly_sub(const BiPoly& a, const BiPoly& b) { return poly_add(a, poly_neg(b)); }

BiPoly poly_mul_monomial(const BiPoly& a, const Monomial& m, int64_t k) {
    if (k == 0) return BiPoly::zero();
    BiPoly out;
    out.terms.reserve(a.terms.size());
    for (const auto& t : a.terms) {
        Monomial shifted{checked_exp_add(t.mono.e0, m.e0), checked_exp_add(t.mono.e1, m.e1)};
        out.terms.push_back({shifted, checked_mul(t.coeff, k)});
    }
    // Shifting by a fixed monomial preserves the canonical order, so no resort.
    return out;
}

std::complex<double> poly_eval(const BiPoly& p, double theta0, double theta1) {
    std::complex<double> acc(0.0, 0.0);
    for (const auto& t : p.terms) {
        double angle = static_cast<double>(t.mono.e0) * theta0 +
                       static_cast<double>(t.mono.e1) * theta1;
        acc += static_cast<double>(t.coeff) * std::polar(1.0, angle);
    }
    return acc;
}

std::string poly_to_string(const BiPoly& p) {
    std::ostringstream out;
    out << "[";
    for (size_t i = 0; i < p.terms.size(); ++i) {
        if (i) out << ",";
        out << "[" << p.terms[i].mono.e0 << "," << p.terms[i].mono.e1 << ","
            << p.terms[i].coeff << "]";
    }
    out << "]";
    return out.str();
}

BiPoly parse_poly(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw_parse(std::string("invalid polynomial: ") + e.what());
    }
    if (!doc.is_array()) throw_parse("polynomial must be an array of [e0,e1,coeff] triples");
    BiPoly p;
    for (const auto& item : doc) {
        if (!item.is_array() || item.size() != 3 || !item[0].is_number_integer() ||
            !item[1].is_number_integer() || !item[2].is_number_integer())
            throw_parse("polynomial term must be an [e0,e1,coeff] integer triple");
        long long e0 = item[0].get<long long>();
        long long e1 = item[1].get<long long>();
        int64_t c = item[2].get<int64_t>();
        if (e0 < 0 || e1 < 0 || e0 > 0x7fffffff || e1 > 0x7fffffff)
            throw_parse("polynomial exponent out of range");
        if (c == 0) throw_parse("polynomial term with zero coefficient");
        Monomial m{static_cast<uint32_t>(e0), static_cast<uint32_t>(e1)};
        if (!p.terms.empty() && !(p.terms.back().mono < m))
            throw_parse("polynomial terms out of canonical order");
        p.terms.push_back({m, c});
    }
    return p;
}

std::string poly_pretty(const BiPoly& p) {
    if (p.terms.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& t : p.terms) {
        int64_t c = t.coeff;
        if (first) {
            if (c < 0) out << "-";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        first = false;
        uint64_t mag = static_cast<uint64_t>(c < 0 ? -c : c);
        bool has_var = t.mono.e0 > 0 || t.mono.e1 > 0;
        if (mag != 1 || !has_var) out << mag;
        auto var = [&](const char* name, uint32_t e) {
            if (e == 0) return;
            out << name;
            if (e > 1) out << "^" << e;
        };
        if (t.mono.e0 > 0 && mag != 1) out << "*";
        var("x0", t.mono.e0);
        if (t.mono.e1 > 0 && (t.mono.e0 > 0 || mag != 1)) out << "*";
        var("x1", t.mono.e1);
    }
    return out.str();
}

} // namespace trilength
