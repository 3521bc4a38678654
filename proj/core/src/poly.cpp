#include "twistlab/poly.hpp"

#include <sstream>

#include "twistlab/errors.hpp"

namespace twistlab {

namespace {
const mpq_class kZeroQ = 0;
const mpz_class kZeroZ = 0;
}  // namespace

ExactPoly::ExactPoly(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) {
    for (auto& q : c_) q.canonicalize();
    trim();
}

ExactPoly ExactPoly::from_ints(const std::vector<i64>& coeffs) {
    std::vector<mpq_class> c;
    c.reserve(coeffs.size());
    for (i64 v : coeffs) c.emplace_back(static_cast<long>(v));
    return ExactPoly(std::move(c));
}

void ExactPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const mpq_class& ExactPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return kZeroQ;
    return c_[static_cast<size_t>(i)];
}

const mpq_class& ExactPoly::leading() const {
    if (is_zero()) throw DomainError("leading coefficient of zero polynomial");
    return c_.back();
}

mpq_class ExactPoly::eval(const mpq_class& x) const {
    mpq_class r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

ExactPoly ExactPoly::derivative() const {
    std::vector<mpq_class> d;
    for (size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<long>(i));
    return ExactPoly(std::move(d));
}

ExactPoly ExactPoly::operator+(const ExactPoly& o) const {
    std::vector<mpq_class> r(std::max(c_.size(), o.c_.size()), mpq_class(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return ExactPoly(std::move(r));
}

ExactPoly ExactPoly::operator-(const ExactPoly& o) const {
    std::vector<mpq_class> r(std::max(c_.size(), o.c_.size()), mpq_class(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return ExactPoly(std::move(r));
}

ExactPoly ExactPoly::operator*(const ExactPoly& o) const {
    if (is_zero() || o.is_zero()) return ExactPoly();
    std::vector<mpq_class> r(c_.size() + o.c_.size() - 1, mpq_class(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return ExactPoly(std::move(r));
}

ExactPoly ExactPoly::operator*(const mpq_class& s) const {
    std::vector<mpq_class> r = c_;
    for (auto& q : r) q *= s;
    return ExactPoly(std::move(r));
}

std::string ExactPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    for (int i = degree(); i >= 0; --i) {
        if (coeff(i) == 0) continue;
        if (i != degree()) os << (coeff(i) > 0 ? " + " : " - ");
        else if (coeff(i) < 0) os << "-";
        os << abs(coeff(i));
        if (i > 0) os << "*x^" << i;
    }
    return os.str();
}

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::from_ints(const std::vector<i64>& coeffs) {
    std::vector<mpz_class> c;
    c.reserve(coeffs.size());
    for (i64 v : coeffs) c.emplace_back(static_cast<long>(v));
    return IntPoly(std::move(c));
}

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const mpz_class& IntPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return kZeroZ;
    return c_[static_cast<size_t>(i)];
}

const mpz_class& IntPoly::leading() const {
    if (is_zero()) throw DomainError("leading coefficient of zero polynomial");
    return c_.back();
}

mpz_class IntPoly::eval(const mpz_class& x) const {
    mpz_class r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

ExactPoly IntPoly::to_exact() const {
    std::vector<mpq_class> c;
    c.reserve(c_.size());
    for (const auto& z : c_) c.emplace_back(z);
    return ExactPoly(std::move(c));
}

std::string IntPoly::str() const { return to_exact().str(); }

mpq_class resultant(const ExactPoly& f, const ExactPoly& g) {
    int m = f.degree(), n = g.degree();
    if (m < 0 || n < 0) return 0;
    if (m == 0) {
        mpq_class r = 1;
        for (int i = 0; i < n; ++i) r *= f.coeff(0);
        return r;
    }
    if (n == 0) {
        mpq_class r = 1;
        for (int i = 0; i < m; ++i) r *= g.coeff(0);
        return r;
    }

    // Sylvester matrix, (m+n) x (m+n).
    int size = m + n;
    std::vector<std::vector<mpq_class>> a(static_cast<size_t>(size),
                                          std::vector<mpq_class>(static_cast<size_t>(size), mpq_class(0)));
    for (int row = 0; row < n; ++row)
        for (int k = 0; k <= m; ++k)
            a[static_cast<size_t>(row)][static_cast<size_t>(row + k)] = f.coeff(m - k);
    for (int row = 0; row < m; ++row)
        for (int k = 0; k <= n; ++k)
            a[static_cast<size_t>(n + row)][static_cast<size_t>(row + k)] = g.coeff(n - k);

    // Exact Gaussian elimination.
    mpq_class det = 1;
    for (int col = 0; col < size; ++col) {
        int pivot = -1;
        for (int row = col; row < size; ++row)
            if (a[static_cast<size_t>(row)][static_cast<size_t>(col)] != 0) { pivot = row; break; }
        if (pivot < 0) return 0;
        if (pivot != col) {
            std::swap(a[static_cast<size_t>(pivot)], a[static_cast<size_t>(col)]);
            det = -det;
        }
        const mpq_class& pv = a[static_cast<size_t>(col)][static_cast<size_t>(col)];
        det *= pv;
        for (int row = col + 1; row < size; ++row) {
            mpq_class& lead = a[static_cast<size_t>(row)][static_cast<size_t>(col)];
            if (lead == 0) continue;
            mpq_class fac = lead / pv;
            for (int k = col; k < size; ++k)
                a[static_cast<size_t>(row)][static_cast<size_t>(k)] -=
                    fac * a[static_cast<size_t>(col)][static_cast<size_t>(k)];
        }
    }
    return det;
}

mpq_class discriminant(const ExactPoly& f) {
    int n = f.degree();
    if (n < 2) throw DomainError("discriminant requires degree >= 2");
    mpq_class res = resultant(f, f.derivative());
    mpq_class d = res / f.leading();
    if (((static_cast<long>(n) * (n - 1)) / 2) % 2 != 0) d = -d;
    return d;
}

std::vector<u64> reduce_mod(const IntPoly& f, i64 p) {
    std::vector<u64> r(static_cast<size_t>(f.degree() + 1), 0);
    mpz_class pz = static_cast<long>(p);
    for (int i = 0; i <= f.degree(); ++i) {
        mpz_class m = f.coeff(i) % pz;
        if (m < 0) m += pz;
        r[static_cast<size_t>(i)] = m.get_ui();
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::vector<u64> reduce_mod(const ExactPoly& f, i64 p) {
    std::vector<u64> r(static_cast<size_t>(f.degree() + 1), 0);
    mpz_class pz = static_cast<long>(p);
    for (int i = 0; i <= f.degree(); ++i) {
        const mpq_class& q = f.coeff(i);
        mpz_class den = q.get_den() % pz;
        if (den == 0)
            throw NotReducibleError("coefficient denominator vanishes mod " + std::to_string(p));
        mpz_class num = q.get_num() % pz;
        if (num < 0) num += pz;
        if (den < 0) den += pz;
        u64 inv = invmod(den.get_ui(), static_cast<u64>(p));
        r[static_cast<size_t>(i)] = mulmod(num.get_ui(), inv, static_cast<u64>(p));
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

}  // namespace twistlab
