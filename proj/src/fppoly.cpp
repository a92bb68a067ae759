#include "fppoly.hpp"

namespace ttr {

Poly poly_trim(Poly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

int poly_deg(const Poly& a) { return static_cast<int>(a.size()) - 1; }

Poly poly_add(const PrimeField& f, const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < r.size(); ++i)
        r[i] = f.add(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
    return poly_trim(std::move(r));
}

Poly poly_sub(const PrimeField& f, const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < r.size(); ++i)
        r[i] = f.sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
    return poly_trim(std::move(r));
}

Poly poly_mul(const PrimeField& f, const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
    }
    return poly_trim(std::move(r));
}

Poly poly_monic(const PrimeField& f, Poly a) {
    a = poly_trim(std::move(a));
    if (a.empty()) return a;
    uint32_t s = f.inv(a.back());
    for (auto& c : a) c = f.mul(c, s);
    return a;
}

std::pair<Poly, Poly> poly_divmod(const PrimeField& f, Poly a, const Poly& b) {
    Poly bm = poly_trim(b);
    require(!bm.empty(), ErrorCode::BadArgument, "polynomial division by zero");
    uint32_t lead_inv = f.inv(bm.back());
    a = poly_trim(std::move(a));
    Poly q;
    if (a.size() >= bm.size()) q.assign(a.size() - bm.size() + 1, 0);
    while (a.size() >= bm.size()) {
        size_t shift = a.size() - bm.size();
        uint32_t c = f.mul(a.back(), lead_inv);
        q[shift] = c;
        for (size_t i = 0; i < bm.size(); ++i)
            a[shift + i] = f.sub(a[shift + i], f.mul(c, bm[i]));
        a = poly_trim(std::move(a));
    }
    return {poly_trim(std::move(q)), std::move(a)};
}

Poly poly_mod(const PrimeField& f, const Poly& a, const Poly& b) {
    return poly_divmod(f, a, b).second;
}

Poly poly_gcd(const PrimeField& f, Poly a, Poly b) {
    a = poly_trim(std::move(a));
    b = poly_trim(std::move(b));
    while (!b.empty()) {
        Poly r = poly_mod(f, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return poly_monic(f, std::move(a));
}

Poly poly_derivative(const PrimeField& f, const Poly& a) {
    Poly r;
    for (size_t i = 1; i < a.size(); ++i) r.push_back(f.mul(a[i], static_cast<uint32_t>(i % f.p)));
    return poly_trim(std::move(r));
}

Poly poly_powmod(const PrimeField& f, Poly base, uint64_t e, const Poly& mod) {
    Poly r{1 % f.p};
    base = poly_mod(f, base, mod);
    while (e) {
        if (e & 1) r = poly_mod(f, poly_mul(f, r, base), mod);
        base = poly_mod(f, poly_mul(f, base, base), mod);
        e >>= 1;
    }
    return r;
}

uint32_t poly_eval(const PrimeField& f, const Poly& a, uint32_t x) {
    uint32_t r = 0;
    for (size_t i = a.size(); i-- > 0;) r = f.add(f.mul(r, x), a[i]);
    return r;
}

namespace {

// Lift a coprime factorization u | s of the squarefree part back to m:
// returns (f, g) with f = product of the irreducible powers of m dividing u.
std::pair<Poly, Poly> lift_split(const PrimeField& f, const Poly& m, const Poly& u) {
    Poly fu{1 % f.p};
    Poly rest = m;
    // Repeatedly pull out gcd with u until exhausted.
    while (true) {
        Poly g = poly_gcd(f, rest, u);
        if (poly_deg(g) <= 0) break;
        fu = poly_mul(f, fu, g);
        rest = poly_divmod(f, rest, g).first;
    }
    return {poly_monic(f, fu), poly_monic(f, rest)};
}

}  // namespace

std::optional<std::pair<Poly, Poly>> coprime_split(const PrimeField& f, const Poly& m_in, Rng& rng) {
    Poly m = poly_monic(f, m_in);
    if (poly_deg(m) < 2) return std::nullopt;
    Poly d = poly_derivative(f, m);
    Poly s = d.empty() ? m : poly_divmod(f, m, poly_gcd(f, m, d)).first;  // squarefree radical
    if (poly_deg(s) < 1) return std::nullopt;
    if (poly_deg(s) == 1) {
        // m = (x-a)^k; no coprime split exists.
        return std::nullopt;
    }
    // Separate by factor degree: g_d = product of irreducible factors of degree d.
    Poly rest = s;
    std::vector<std::pair<int, Poly>> parts;
    Poly xq{0, 1 % f.p};  // x^{p^d} built incrementally mod rest-independent: recompute mod s
    for (int deg = 1; poly_deg(rest) > 0 && deg <= poly_deg(s); ++deg) {
        xq = poly_powmod(f, deg == 1 ? Poly{0, 1 % f.p} : xq, f.p, s);
        if (deg > poly_deg(rest)) break;
        Poly diff = poly_sub(f, xq, Poly{0, 1 % f.p});
        Poly g = poly_gcd(f, rest, diff);
        if (poly_deg(g) > 0) {
            parts.emplace_back(deg, g);
            rest = poly_divmod(f, rest, g).first;
        }
        if (poly_deg(rest) > 0 && 2 * (deg + 1) > poly_deg(rest)) {
            // remainder is a single irreducible factor
            parts.emplace_back(poly_deg(rest), poly_monic(f, rest));
            rest = Poly{1 % f.p};
        }
    }
    if (parts.size() >= 2) return lift_split(f, m, parts[0].second);
    if (parts.empty()) return std::nullopt;
    auto [deg, block] = parts[0];
    if (poly_deg(block) == deg) return std::nullopt;  // s irreducible
    // Equal-degree splitting (Cantor-Zassenhaus) of block into >= 2 factors of
    // degree deg. For p = 2 the quadratic-residue trick degenerates; fall back
    // to trace polynomials.
    for (int attempt = 0; attempt < 64; ++attempt) {
        Poly h(static_cast<size_t>(poly_deg(block)), 0);
        for (auto& c : h) c = rng.below(f.p);
        h = poly_trim(std::move(h));
        if (poly_deg(h) < 1) continue;
        Poly w;
        if (f.p == 2) {
            // trace map T(h) = h + h^2 + h^4 + ... + h^{2^{deg-1}}
            Poly t = poly_mod(f, h, block);
            Poly acc = t;
            for (int i = 1; i < deg; ++i) {
                t = poly_mod(f, poly_mul(f, t, t), block);
                acc = poly_add(f, acc, t);
            }
            w = acc;
        } else {
            uint64_t e = 1;
            for (int i = 0; i < deg; ++i) e *= f.p;
            w = poly_sub(f, poly_powmod(f, h, (e - 1) / 2, block), Poly{1 % f.p});
        }
        Poly g = poly_gcd(f, block, w);
        if (poly_deg(g) > 0 && poly_deg(g) < poly_deg(block)) return lift_split(f, m, g);
    }
    return std::nullopt;
}

}  // namespace ttr
