#pragma once
// Minimal complex number over an arbitrary ordered field or float type.
// std::complex is only specified for float/double/long double, so exact
// (mpq) and MPFR scalars need their own carrier.

#include <cmath>
#include <utility>

namespace strebel {

template <class T>
struct Complex {
    T re{};
    T im{};

    Complex() = default;
    Complex(const T& r) : re(r), im(0) {}
    Complex(const T& r, const T& i) : re(r), im(i) {}
    template <class U, class = std::enable_if_t<std::is_arithmetic_v<U> && !std::is_same_v<U, T>>>
    Complex(U r) : re(r), im(0) {}

    Complex& operator+=(const Complex& o) { re += o.re; im += o.im; return *this; }
    Complex& operator-=(const Complex& o) { re -= o.re; im -= o.im; return *this; }
    Complex& operator*=(const Complex& o) {
        T r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = std::move(r);
        return *this;
    }
    Complex& operator/=(const Complex& o) {
        T d = o.re * o.re + o.im * o.im;
        T r = (re * o.re + im * o.im) / d;
        im = (im * o.re - re * o.im) / d;
        re = std::move(r);
        return *this;
    }
    Complex operator-() const { return Complex(-re, -im); }

    friend Complex operator+(Complex a, const Complex& b) { return a += b; }
    friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
    friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
    friend Complex operator/(Complex a, const Complex& b) { return a /= b; }
    friend bool operator==(const Complex& a, const Complex& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const Complex& a, const Complex& b) { return !(a == b); }

    bool is_zero() const { return re == 0 && im == 0; }
};

template <class T> Complex<T> conj(const Complex<T>& z) { return {z.re, -z.im}; }
template <class T> T norm(const Complex<T>& z) { return z.re * z.re + z.im * z.im; }

// The functions below need sqrt/atan2 and are only meaningful for float scalars.
template <class T> T abs(const Complex<T>& z) {
    using std::sqrt; using std::abs;
    T a = abs(z.re), b = abs(z.im);
    if (a < b) std::swap(a, b);
    if (a == 0) return a;
    T t = b / a;
    return a * sqrt(1 + t * t);
}

template <class T> T arg(const Complex<T>& z) {
    using std::atan2;
    return atan2(z.im, z.re);
}

// Principal square root, cut along the negative real axis; im >= 0 on the cut.
template <class T> Complex<T> sqrt(const Complex<T>& z) {
    using std::sqrt; using std::abs;
    if (z.re == 0 && z.im == 0) return z;
    T r = abs(z);
    if (z.re >= 0) {
        T t = sqrt((r + z.re) / 2);
        return {t, z.im / (2 * t)};
    }
    T t = sqrt((r - z.re) / 2);
    T s = abs(z.im) / (2 * t);
    return {s, z.im < 0 ? T(-t) : t};
}

template <class T> Complex<T> polar(const T& r, const T& theta) {
    using std::cos; using std::sin;
    return {r * cos(theta), r * sin(theta)};
}

template <class T> Complex<T> cis(const T& theta) { return polar(T(1), theta); }

}  // namespace strebel
