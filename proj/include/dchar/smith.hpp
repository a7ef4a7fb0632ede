#pragma once

#include "dchar/rational.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <initializer_list>
#include <limits>
#include <optional>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

namespace dchar {

/// Arbitrary-precision integer for unimodular transforms, whose entries can
/// outgrow 64 bits even when the input and its Smith form are small.
using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

namespace detail {
inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in matrix arithmetic");
    return r;
}
inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer overflow in matrix arithmetic");
    return r;
}
inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in matrix arithmetic");
    return r;
}
inline BigInt checked_mul(const BigInt& a, const BigInt& b) { return a * b; }
inline BigInt checked_sub(const BigInt& a, const BigInt& b) { return a - b; }
inline BigInt checked_add(const BigInt& a, const BigInt& b) { return a + b; }

inline std::int64_t abs_of(std::int64_t x) { return std::llabs(x); }
inline BigInt abs_of(const BigInt& x) { return boost::multiprecision::abs(x); }

inline std::int64_t narrow(const BigInt& x) {
    if (x > std::numeric_limits<std::int64_t>::max() || x < std::numeric_limits<std::int64_t>::min())
        throw std::overflow_error("integer does not fit in 64 bits");
    return static_cast<std::int64_t>(x);
}
}  // namespace detail

/// Dense row-major integer matrix.
template <class T>
class BasicMatrix {
  public:
    using value_type = T;

    BasicMatrix() = default;
    BasicMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
    BasicMatrix(std::initializer_list<std::initializer_list<std::int64_t>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        for (const auto& row : init) {
            if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
            for (auto x : row) data_.push_back(T(x));
        }
    }
    template <class U>
    explicit BasicMatrix(const BasicMatrix<U>& other) : rows_(other.rows()), cols_(other.cols()) {
        data_.reserve(rows_ * cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) {
                if constexpr (std::is_same_v<T, std::int64_t> && !std::is_same_v<U, std::int64_t>)
                    data_.push_back(detail::narrow(other(i, j)));
                else
                    data_.push_back(T(other(i, j)));
            }
    }

    static BasicMatrix identity(std::size_t n) {
        BasicMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool is_zero() const {
        return std::all_of(data_.begin(), data_.end(), [](const T& v) { return v == 0; });
    }

    friend bool operator==(const BasicMatrix&, const BasicMatrix&) = default;

    friend BasicMatrix operator*(const BasicMatrix& a, const BasicMatrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch in product");
        BasicMatrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (aik == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    r(i, j) = detail::checked_add(r(i, j), detail::checked_mul(aik, b(k, j)));
            }
        return r;
    }

    BasicMatrix transposed() const {
        BasicMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }
    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
    }
    /// row[dst] -= q * row[src]
    void sub_row(std::size_t dst, std::size_t src, const T& q) {
        if (q == 0) return;
        for (std::size_t j = 0; j < cols_; ++j)
            (*this)(dst, j) = detail::checked_sub((*this)(dst, j), detail::checked_mul(q, (*this)(src, j)));
    }
    /// col[dst] -= q * col[src]
    void sub_col(std::size_t dst, std::size_t src, const T& q) {
        if (q == 0) return;
        for (std::size_t i = 0; i < rows_; ++i)
            (*this)(i, dst) = detail::checked_sub((*this)(i, dst), detail::checked_mul(q, (*this)(i, src)));
    }
    void negate_row(std::size_t r) {
        for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = -(*this)(r, j);
    }

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = BasicMatrix<std::int64_t>;
using BigMatrix = BasicMatrix<BigInt>;

/// Result of a Smith decomposition: u * a * v == d.
struct SmithForm {
    BigMatrix u;
    BigMatrix d;
    BigMatrix v;
    std::size_t rank = 0;

    std::vector<std::int64_t> diagonal() const {
        std::vector<std::int64_t> out;
        for (std::size_t i = 0; i < rank; ++i) out.push_back(detail::narrow(d(i, i)));
        return out;
    }
};

namespace detail {
template <class T>
T floor_div(const T& a, const T& b) {
    T q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}
/// Quotient rounded to nearest, so the remainder has |r| <= |b| / 2.
template <class T>
T round_div(const T& a, const T& b) {
    T q = floor_div(a, b);
    const T r = a - q * b;
    if (2 * abs_of(r) > abs_of(b)) ++q;
    return q;
}

template <class T>
std::size_t smith_in_place(BasicMatrix<T>& d, BasicMatrix<T>& u, BasicMatrix<T>& v) {
    const std::size_t m = d.rows();
    const std::size_t n = d.cols();
    std::size_t t = 0;
    for (; t < std::min(m, n); ++t) {
        for (;;) {
            // pick the smallest nonzero entry of the active block
            std::size_t pi = m, pj = n;
            T best(0);
            for (std::size_t i = t; i < m; ++i)
                for (std::size_t j = t; j < n; ++j) {
                    const T x = abs_of(d(i, j));
                    if (x != 0 && (best == 0 || x < best)) {
                        best = x;
                        pi = i;
                        pj = j;
                    }
                }
            if (best == 0) return t;
            d.swap_rows(t, pi);
            u.swap_rows(t, pi);
            d.swap_cols(t, pj);
            v.swap_cols(t, pj);

            const T p = d(t, t);
            bool dirty = false;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (d(i, t) == 0) continue;
                const T q = round_div(d(i, t), p);
                d.sub_row(i, t, q);
                u.sub_row(i, t, q);
                if (d(i, t) != 0) dirty = true;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (d(t, j) == 0) continue;
                const T q = round_div(d(t, j), p);
                d.sub_col(j, t, q);
                v.sub_col(j, t, q);
                if (d(t, j) != 0) dirty = true;
            }
            if (dirty) continue;

            // divisibility: fold an offending row into the pivot row
            std::size_t bad = m;
            for (std::size_t i = t + 1; i < m && bad == m; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (d(i, j) % p != 0) {
                        bad = i;
                        break;
                    }
            if (bad != m) {
                d.sub_row(t, bad, T(-1));
                u.sub_row(t, bad, T(-1));
                continue;
            }
            if (p < 0) {
                d.negate_row(t);
                u.negate_row(t);
            }
            break;
        }
    }
    return t;
}

template <class T>
SmithForm smith_with(const IntMatrix& a) {
    BasicMatrix<T> d(a);
    auto u = BasicMatrix<T>::identity(a.rows());
    auto v = BasicMatrix<T>::identity(a.cols());
    const auto rank = smith_in_place(d, u, v);
    return SmithForm{BigMatrix(u), BigMatrix(d), BigMatrix(v), rank};
}
}  // namespace detail

/// Smith normal form by unimodular row and column operations.
///
/// Pivot rule: the nonzero entry of smallest absolute value in the active
/// submatrix, ties broken by row-major position. The diagonal is nonnegative
/// and satisfies d_1 | d_2 | ... . Runs in checked 64-bit arithmetic and
/// repeats in arbitrary precision if an entry of a transform overflows.
inline SmithForm smith_normal_form(const IntMatrix& a) {
    try {
        return detail::smith_with<std::int64_t>(a);
    } catch (const std::overflow_error&) {
        return detail::smith_with<BigInt>(a);
    }
}

/// Determinant by fraction-free elimination (Bareiss). Intended for checking
/// unimodularity of small transforms.
inline BigInt determinant(const BigMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("determinant of non-square matrix");
    const std::size_t n = a.rows();
    if (n == 0) return 1;
    BigMatrix m = a;
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && m(piv, k) == 0) ++piv;
        if (piv == n) return 0;
        if (piv != k) {
            m.swap_rows(piv, k);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

inline std::int64_t determinant(const IntMatrix& a) { return detail::narrow(determinant(BigMatrix(a))); }

/// Finitely generated abelian group (R/Z)^divisible x Z^free x (+) Z/d_i.
struct AbelianGroupPresentation {
    std::size_t divisible_rank = 0;
    std::size_t free_rank = 0;
    std::vector<std::int64_t> invariant_factors;  // each >= 2, d1 | d2 | ...

    bool is_trivial() const { return divisible_rank == 0 && free_rank == 0 && invariant_factors.empty(); }
    /// Order when finite, 0 otherwise.
    std::int64_t order() const {
        if (divisible_rank != 0 || free_rank != 0) return 0;
        std::int64_t o = 1;
        for (auto d : invariant_factors) o *= d;
        return o;
    }
    friend bool operator==(const AbelianGroupPresentation&, const AbelianGroupPresentation&) = default;
};

enum class Coefficients { Integers, CircleGroup };

inline std::vector<std::int64_t> torsion_of(const SmithForm& s) {
    std::vector<std::int64_t> out;
    for (auto x : s.diagonal())
        if (x > 1) out.push_back(x);
    return out;
}

/// Cohomology in degree n of the cochain complex
///   C^0 --d[0]--> C^1 --d[1]--> ... ,
/// where d[k] has shape dim C^{k+1} x dim C^k. Missing differentials are zero.
/// `dims` gives dim C^k for every k that appears.
///
/// For R/Z coefficients the result is Hom(H_n, R/Z) with H_n the homology of
/// the dual chain complex (Ext(-, R/Z) vanishes since R/Z is divisible).
inline AbelianGroupPresentation cohomology(const std::vector<IntMatrix>& d, const std::vector<std::size_t>& dims,
                                           std::size_t n, Coefficients coeff) {
    if (n >= dims.size()) throw std::invalid_argument("cohomology degree outside the complex");
    for (std::size_t k = 0; k < d.size(); ++k) {
        if (k + 1 >= dims.size() || d[k].cols() != dims[k] || d[k].rows() != dims[k + 1])
            throw std::invalid_argument("differential shape does not match the stated dimensions");
        if (k + 1 < d.size() && d[k].rows() != 0 && d[k].cols() != 0 && d[k + 1].rows() != 0) {
            if (!(d[k + 1] * d[k]).is_zero()) throw std::invalid_argument("not a complex: consecutive differentials do not compose to zero");
        }
    }
    auto snf_at = [&](std::size_t k) -> std::optional<SmithForm> {
        if (k >= d.size()) return std::nullopt;
        return smith_normal_form(d[k]);
    };
    const auto out = snf_at(n);                                    // C^n -> C^{n+1}
    const auto in = n == 0 ? std::optional<SmithForm>{} : snf_at(n - 1);  // C^{n-1} -> C^n
    const std::size_t rank_out = out ? out->rank : 0;
    const std::size_t rank_in = in ? in->rank : 0;
    const std::size_t free = dims[n] - rank_out - rank_in;

    AbelianGroupPresentation p;
    if (coeff == Coefficients::Integers) {
        p.free_rank = free;
        if (in) p.invariant_factors = torsion_of(*in);
    } else {
        p.divisible_rank = free;
        if (out) p.invariant_factors = torsion_of(*out);
    }
    return p;
}

/// Obstruction to solving D t = z (mod Z): an integer row vector y with
/// y D = 0 whose pairing with z is not an integer.
struct ModOneObstruction {
    std::vector<std::int64_t> cycle;
    Rational period;
};

/// Solves D t == z (mod Z^m) for a rational vector t. Returns the solution or
/// an obstruction certificate.
struct ModOneSolution {
    std::optional<std::vector<Rational>> solution;
    std::optional<ModOneObstruction> obstruction;
};

namespace detail {
inline BigRational to_big(const Rational& x) { return BigRational(BigInt(x.numerator()), BigInt(x.denominator())); }
inline Rational from_big(const BigRational& x) {
    return Rational(narrow(boost::multiprecision::numerator(x)), narrow(boost::multiprecision::denominator(x)));
}
inline BigRational frac_big(const BigRational& x) {
    const BigInt n = boost::multiprecision::numerator(x);
    const BigInt d = boost::multiprecision::denominator(x);
    BigInt r = n % d;
    if (r < 0) r += d;
    return BigRational(r, d);
}
}  // namespace detail

/// The solution is reduced mod 1 entrywise, which preserves D t mod Z.
inline ModOneSolution solve_mod_one(const IntMatrix& dmat, const std::vector<Rational>& z) {
    if (z.size() != dmat.rows()) throw std::invalid_argument("right-hand side has the wrong length");
    const auto s = smith_normal_form(dmat);
    const std::size_t m = dmat.rows();
    const std::size_t n = dmat.cols();
    std::vector<BigRational> zb(m);
    for (std::size_t i = 0; i < m; ++i) zb[i] = detail::to_big(z[i]);
    std::vector<BigRational> w(m, BigRational(0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (s.u(i, j) != 0) w[i] += BigRational(s.u(i, j)) * zb[j];
    for (std::size_t i = s.rank; i < m; ++i) {
        const auto period = detail::frac_big(w[i]);
        if (period != 0) {
            ModOneObstruction ob;
            ob.cycle.resize(m);
            for (std::size_t j = 0; j < m; ++j) ob.cycle[j] = detail::narrow(s.u(i, j));
            ob.period = detail::from_big(period);
            return ModOneSolution{std::nullopt, ob};
        }
    }
    std::vector<BigRational> sv(n, BigRational(0));
    for (std::size_t i = 0; i < s.rank; ++i) sv[i] = w[i] / BigRational(s.d(i, i));
    std::vector<Rational> t(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
        BigRational acc(0);
        for (std::size_t j = 0; j < n; ++j)
            if (s.v(i, j) != 0) acc += BigRational(s.v(i, j)) * sv[j];
        t[i] = detail::from_big(detail::frac_big(acc));
    }
    return ModOneSolution{t, std::nullopt};
}

}  // namespace dchar
