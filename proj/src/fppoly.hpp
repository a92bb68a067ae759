#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "fp.hpp"

namespace ttr {

// Polynomials over F_p, coefficient vector with c[i] the coefficient of x^i.
// Always normalized (no trailing zeros); the zero polynomial is {}.
using Poly = std::vector<uint32_t>;

Poly poly_trim(Poly a);
int poly_deg(const Poly& a);  // -1 for the zero polynomial
Poly poly_add(const PrimeField& f, const Poly& a, const Poly& b);
Poly poly_sub(const PrimeField& f, const Poly& a, const Poly& b);
Poly poly_mul(const PrimeField& f, const Poly& a, const Poly& b);
Poly poly_monic(const PrimeField& f, Poly a);
// quotient/remainder of a by monic-normalizable b (b != 0)
std::pair<Poly, Poly> poly_divmod(const PrimeField& f, Poly a, const Poly& b);
Poly poly_mod(const PrimeField& f, const Poly& a, const Poly& b);
Poly poly_gcd(const PrimeField& f, Poly a, Poly b);  // monic gcd
Poly poly_derivative(const PrimeField& f, const Poly& a);
Poly poly_powmod(const PrimeField& f, Poly base, uint64_t e, const Poly& mod);
uint32_t poly_eval(const PrimeField& f, const Poly& a, uint32_t x);

// Deterministic small PRNG (splitmix64) so decompositions are reproducible.
class Rng {
  public:
    explicit Rng(uint64_t seed) : s_(seed) {}
    uint64_t next() {
        uint64_t z = (s_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    uint32_t below(uint32_t n) { return static_cast<uint32_t>(next() % n); }

  private:
    uint64_t s_;
};

// A factorization m = f * g into coprime nonconstant monic factors, when one
// exists. Used to split generalized eigenspaces of endomorphisms.
std::optional<std::pair<Poly, Poly>> coprime_split(const PrimeField& f, const Poly& m, Rng& rng);

}  // namespace ttr
