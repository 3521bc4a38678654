#ifndef TWISTLAB_POLY_HPP
#define TWISTLAB_POLY_HPP

// Exact univariate polynomials: rational coefficients (ExactPoly) and
// integer coefficients (IntPoly).  All arithmetic, resultants and
// discriminants are exact; no floating point enters this layer.

#include <gmpxx.h>

#include <string>
#include <vector>

#include "twistlab/numeric.hpp"

namespace twistlab {

class ExactPoly {
 public:
    ExactPoly() = default;
    explicit ExactPoly(std::vector<mpq_class> coeffs);  // coeffs[i] ~ x^i

    static ExactPoly zero() { return ExactPoly(); }
    static ExactPoly from_ints(const std::vector<i64>& coeffs);

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1: zero
    bool is_zero() const { return c_.empty(); }
    const mpq_class& coeff(int i) const;
    const mpq_class& leading() const;
    const std::vector<mpq_class>& coeffs() const { return c_; }

    mpq_class eval(const mpq_class& x) const;
    ExactPoly derivative() const;

    ExactPoly operator+(const ExactPoly& o) const;
    ExactPoly operator-(const ExactPoly& o) const;
    ExactPoly operator*(const ExactPoly& o) const;
    ExactPoly operator*(const mpq_class& s) const;
    bool operator==(const ExactPoly& o) const { return c_ == o.c_; }

    std::string str() const;

 private:
    void trim();
    std::vector<mpq_class> c_;
};

class IntPoly {
 public:
    IntPoly() = default;
    explicit IntPoly(std::vector<mpz_class> coeffs);
    static IntPoly from_ints(const std::vector<i64>& coeffs);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const mpz_class& coeff(int i) const;
    const mpz_class& leading() const;
    const std::vector<mpz_class>& coeffs() const { return c_; }

    mpz_class eval(const mpz_class& x) const;
    ExactPoly to_exact() const;

    std::string str() const;

 private:
    void trim();
    std::vector<mpz_class> c_;
};

// Res(f, g) via exact Gaussian elimination of the Sylvester matrix.
mpq_class resultant(const ExactPoly& f, const ExactPoly& g);

// disc(f) = (-1)^{n(n-1)/2} Res(f, f') / lc(f); requires deg f >= 2.
mpq_class discriminant(const ExactPoly& f);

// Dense coefficient vector of f mod p (index = degree, trimmed).
// ExactPoly reduction throws NotReducibleError when a denominator
// vanishes mod p.
std::vector<u64> reduce_mod(const IntPoly& f, i64 p);
std::vector<u64> reduce_mod(const ExactPoly& f, i64 p);

}  // namespace twistlab

#endif
