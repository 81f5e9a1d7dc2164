#include "cdm/gf.hpp"

#include <algorithm>

namespace cdm {

namespace {

std::int64_t mod_reduce(std::int64_t x, std::int64_t m) {
    std::int64_t r = x % m;
    if (r < 0) r += m;
    return r;
}

// Multiplies two residues of degree < n and reduces mod (f, p), where f is
// monic with low coefficients `modulus`.
FieldElem raw_mul(std::int64_t p, int n, const std::vector<Coord>& modulus,
                  const FieldElem& a, const FieldElem& b) {
    std::vector<Coord> prod(static_cast<std::size_t>(2 * n - 1), 0);
    for (int i = 0; i < n; ++i) {
        if (a[static_cast<std::size_t>(i)] == 0) continue;
        for (int j = 0; j < n; ++j) {
            prod[static_cast<std::size_t>(i + j)] += a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
        }
    }
    // x^n = -(c_{n-1} x^{n-1} + ... + c_0).
    for (int d = 2 * n - 2; d >= n; --d) {
        Coord c = mod_reduce(prod[static_cast<std::size_t>(d)], p);
        prod[static_cast<std::size_t>(d)] = 0;
        if (c == 0) continue;
        for (int t = 0; t < n; ++t) {
            prod[static_cast<std::size_t>(d - n + t)] -= c * modulus[static_cast<std::size_t>(t)];
        }
    }
    FieldElem out(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = mod_reduce(prod[static_cast<std::size_t>(i)], p);
    return out;
}

FieldElem raw_pow_x(std::int64_t p, int n, const std::vector<Coord>& modulus, std::int64_t k) {
    FieldElem result(static_cast<std::size_t>(n), 0);
    result[0] = 1;
    FieldElem base(static_cast<std::size_t>(n), 0);
    if (n == 1) {
        base[0] = mod_reduce(-modulus[0], p);
    } else {
        base[1] = 1;
    }
    while (k > 0) {
        if (k & 1) result = raw_mul(p, n, modulus, result, base);
        base = raw_mul(p, n, modulus, base, base);
        k >>= 1;
    }
    return result;
}

bool is_one(const FieldElem& a) {
    if (a.empty() || a[0] != 1) return false;
    return std::all_of(a.begin() + 1, a.end(), [](Coord c) { return c == 0; });
}

// x must have multiplicative order exactly p^n - 1; that forces the
// modulus to be irreducible, so no separate irreducibility test is needed.
bool is_primitive(std::int64_t p, int n, const std::vector<Coord>& modulus,
                  const std::vector<std::int64_t>& prime_factors, std::int64_t group_order) {
    if (modulus[0] == 0) return false;  // x would be a zero divisor
    if (!is_one(raw_pow_x(p, n, modulus, group_order))) return false;
    for (std::size_t i = 0; i < prime_factors.size(); ++i) {
        if (i > 0 && prime_factors[i] == prime_factors[i - 1]) continue;
        if (is_one(raw_pow_x(p, n, modulus, group_order / prime_factors[i]))) return false;
    }
    return true;
}

}  // namespace

std::vector<std::int64_t> trial_factorize(std::int64_t m) {
    std::vector<std::int64_t> factors;
    for (std::int64_t d = 2; d * d <= m; ++d) {
        while (m % d == 0) {
            factors.push_back(d);
            m /= d;
        }
    }
    if (m > 1) factors.push_back(m);
    return factors;
}

std::string FieldSpec::poly_text() const {
    std::string s = "x^" + std::to_string(n);
    if (n == 1) s = "x";
    for (int i = n - 1; i >= 0; --i) {
        Coord c = modulus[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        s += '+';
        if (i == 0) {
            s += std::to_string(c);
        } else {
            if (c != 1) s += std::to_string(c) + "*";
            s += (i == 1) ? "x" : ("x^" + std::to_string(i));
        }
    }
    return s;
}

FieldSpec make_field(std::int64_t p, int n, std::vector<Coord> modulus, std::int64_t cap) {
    if (!is_prime(p)) throw StructuralError("field: p must be prime");
    if (n < 1) throw StructuralError("field: degree must be positive");
    std::int64_t q = 1;
    for (int i = 0; i < n; ++i) {
        if (q > cap / p) throw CapacityError("field order exceeds cap");
        q *= p;
    }
    if (static_cast<int>(modulus.size()) != n) {
        throw StructuralError("field: modulus must list n coefficients");
    }
    for (Coord& c : modulus) c = mod_reduce(c, p);
    auto factors = trial_factorize(q - 1);
    if (q > 2 && !is_primitive(p, n, modulus, factors, q - 1)) {
        throw StructuralError("field: modulus is not primitive");
    }
    if (q == 2 && modulus[0] != 1) {
        throw StructuralError("field: modulus is not primitive");
    }
    return FieldSpec{p, n, std::move(modulus)};
}

FieldSpec find_primitive_poly(std::int64_t p, int n, std::int64_t cap) {
    if (!is_prime(p)) throw StructuralError("field: p must be prime");
    if (n < 1) throw StructuralError("field: degree must be positive");
    std::int64_t q = 1;
    for (int i = 0; i < n; ++i) {
        if (q > cap / p) throw CapacityError("field order exceeds cap");
        q *= p;
    }
    auto factors = trial_factorize(q - 1);
    // Candidates ordered by the integer encoding sum c_i p^i, i.e. smallest
    // polynomial with the high-degree coefficients compared first.  This is
    // the order under which the classical small-field choices x^2+x+1,
    // x^3+x+1, x^2+x+2, ... come out first.
    std::vector<Coord> c(static_cast<std::size_t>(n), 0);
    for (;;) {
        int i = 0;
        while (i < n && c[static_cast<std::size_t>(i)] == p - 1) {
            c[static_cast<std::size_t>(i)] = 0;
            ++i;
        }
        if (i == n) throw StructuralError("no primitive polynomial found");
        ++c[static_cast<std::size_t>(i)];
        bool ok = (q == 2) ? (c[0] == 1) : is_primitive(p, n, c, factors, q - 1);
        if (ok) return FieldSpec{p, n, c};
    }
}

FieldElem ff_zero(const FieldSpec& f) { return FieldElem(static_cast<std::size_t>(f.n), 0); }

FieldElem ff_one(const FieldSpec& f) {
    FieldElem e = ff_zero(f);
    e[0] = 1;
    return e;
}

FieldElem ff_x(const FieldSpec& f) {
    if (f.n == 1) {
        FieldElem e(1);
        e[0] = mod_reduce(-f.modulus[0], f.p);
        return e;
    }
    FieldElem e = ff_zero(f);
    e[1] = 1;
    return e;
}

FieldElem ff_add(const FieldSpec& f, const FieldElem& a, const FieldElem& b) {
    if (a.size() != static_cast<std::size_t>(f.n) || b.size() != static_cast<std::size_t>(f.n)) {
        throw StructuralError("field element size mismatch");
    }
    FieldElem out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = mod_reduce(a[i] + b[i], f.p);
    return out;
}

FieldElem ff_mul(const FieldSpec& f, const FieldElem& a, const FieldElem& b) {
    if (a.size() != static_cast<std::size_t>(f.n) || b.size() != static_cast<std::size_t>(f.n)) {
        throw StructuralError("field element size mismatch");
    }
    return raw_mul(f.p, f.n, f.modulus, a, b);
}

FieldElem ff_pow(const FieldSpec& f, const FieldElem& a, std::int64_t k) {
    if (k < 0) throw StructuralError("ff_pow: negative exponent");
    FieldElem result = ff_one(f);
    FieldElem base = a;
    while (k > 0) {
        if (k & 1) result = ff_mul(f, result, base);
        base = ff_mul(f, base, base);
        k >>= 1;
    }
    return result;
}

Elem additive_coords(const FieldSpec& f, const FieldElem& a) {
    if (a.size() != static_cast<std::size_t>(f.n)) {
        throw StructuralError("field element size mismatch");
    }
    Elem coords(a.size());
    for (int i = 0; i < f.n; ++i) {
        coords[static_cast<std::size_t>(i)] = mod_reduce(a[static_cast<std::size_t>(f.n - 1 - i)], f.p);
    }
    return coords;
}

}  // namespace cdm
