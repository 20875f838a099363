#pragma once
// Scalar types: exact Gaussian rationals and arbitrary-precision complex floats.

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

#include "strebel/complex.hpp"

namespace strebel {

namespace bmp = boost::multiprecision;

// Expression templates are off so `auto` is safe everywhere.
using Q = bmp::number<bmp::gmp_rational, bmp::et_off>;
using Z = bmp::number<bmp::gmp_int, bmp::et_off>;
using Real = bmp::number<bmp::mpfr_float_backend<0>, bmp::et_off>;

using GaussRat = Complex<Q>;
using BigComplex = Complex<Real>;

constexpr unsigned kDefaultBits = 128;
constexpr unsigned kMinBits = 64;

// Sets the default MPFR precision for newly created Real values and restores
// the previous value on exit. Values created earlier keep their precision.
class PrecisionGuard {
public:
    explicit PrecisionGuard(unsigned bits);
    ~PrecisionGuard();
    PrecisionGuard(const PrecisionGuard&) = delete;
    PrecisionGuard& operator=(const PrecisionGuard&) = delete;

private:
    unsigned saved_digits10_;
};

unsigned current_bits();
unsigned bits_to_digits10(unsigned bits);

// precision from STREBEL_PRECISION_BITS, falling back to `fallback`
unsigned precision_from_env(unsigned fallback = kDefaultBits);

// --- conversions --------------------------------------------------------

Real to_real(const Q& q);
double to_double(const Q& q);
inline double to_double(double x) { return x; }
double to_double(const Real& x);

template <class T> T from_q(const Q& q);
template <> inline double from_q<double>(const Q& q) { return to_double(q); }
template <> inline Real from_q<Real>(const Q& q) { return to_real(q); }
template <> inline Q from_q<Q>(const Q& q) { return q; }

template <class T> Complex<T> from_gauss(const GaussRat& z) {
    return {from_q<T>(z.re), from_q<T>(z.im)};
}

template <class T> T pi_v();
template <> inline double pi_v<double>() { return 3.14159265358979323846264338327950288; }
template <> Real pi_v<Real>();

inline Complex<double> to_cd(const BigComplex& z) { return {to_double(z.re), to_double(z.im)}; }
inline Complex<double> to_cd(const GaussRat& z) { return {to_double(z.re), to_double(z.im)}; }
inline Complex<double> to_cd(const Complex<double>& z) { return z; }
inline BigComplex to_big(const Complex<double>& z) { return {Real(z.re), Real(z.im)}; }
inline BigComplex to_big(const GaussRat& z) { return from_gauss<Real>(z); }
inline BigComplex to_big(const BigComplex& z) { return z; }

// --- text formats -------------------------------------------------------

// "a/b", "a/b+c/d*i", decimals allowed ("0.9-1.5*i"), also "i", "-2i".
Q parse_rational(std::string_view s);
GaussRat parse_gauss(std::string_view s);
std::string to_string(const Q& q);
std::string to_string(const GaussRat& z);

// "(re,im)@bits" with decimal floats
std::string to_string(const BigComplex& z);
BigComplex parse_bigcomplex(std::string_view s);

std::string to_string(const Complex<double>& z, int digits = 17);

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace strebel
