#include "strebel/scalar.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <sstream>

namespace strebel {

unsigned bits_to_digits10(unsigned bits) {
    return static_cast<unsigned>(std::ceil(bits * 0.30102999566398120)) + 1;
}

unsigned current_bits() {
    Real probe;
    return static_cast<unsigned>(mpfr_get_prec(probe.backend().data()));
}

PrecisionGuard::PrecisionGuard(unsigned bits) : saved_digits10_(Real::default_precision()) {
    if (bits < kMinBits) bits = kMinBits;
    Real::default_precision(bits_to_digits10(bits));
}

PrecisionGuard::~PrecisionGuard() { Real::default_precision(saved_digits10_); }

unsigned precision_from_env(unsigned fallback) {
    const char* v = std::getenv("STREBEL_PRECISION_BITS");
    if (!v || !*v) return fallback;
    char* end = nullptr;
    long b = std::strtol(v, &end, 10);
    if (*end != '\0' || b < static_cast<long>(kMinBits) || b > 1 << 16)
        throw ParseError("STREBEL_PRECISION_BITS must be an integer >= 64");
    return static_cast<unsigned>(b);
}

Real to_real(const Q& q) {
    Real r;
    mpfr_set_q(r.backend().data(), q.backend().data(), MPFR_RNDN);
    return r;
}

double to_double(const Q& q) { return q.convert_to<double>(); }
double to_double(const Real& x) { return mpfr_get_d(x.backend().data(), MPFR_RNDN); }

template <> Real pi_v<Real>() {
    Real p;
    mpfr_const_pi(p.backend().data(), MPFR_RNDN);
    return p;
}

// ---------------------------------------------------------------------------

namespace {

std::string strip(std::string_view s) {
    std::string out;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
    return out;
}

// unsigned decimal or fraction: "12", "3/4", "0.25", "1e-3"
Q parse_unsigned_number(const std::string& t) {
    if (t.empty()) throw ParseError("empty number");
    auto slash = t.find('/');
    if (slash != std::string::npos) {
        Q num = parse_unsigned_number(t.substr(0, slash));
        Q den = parse_unsigned_number(t.substr(slash + 1));
        if (den == 0) throw ParseError("zero denominator in '" + t + "'");
        return num / den;
    }
    std::string mant = t;
    long exp10 = 0;
    auto e = t.find_first_of("eE");
    if (e != std::string::npos) {
        mant = t.substr(0, e);
        std::string ex = t.substr(e + 1);
        if (ex.empty()) throw ParseError("bad exponent in '" + t + "'");
        char* end = nullptr;
        exp10 = std::strtol(ex.c_str(), &end, 10);
        if (*end) throw ParseError("bad exponent in '" + t + "'");
    }
    std::string digits;
    long frac = 0;
    bool dot = false;
    for (char c : mant) {
        if (c == '.') {
            if (dot) throw ParseError("two decimal points in '" + t + "'");
            dot = true;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            digits.push_back(c);
            if (dot) ++frac;
        } else {
            throw ParseError("unexpected character in number '" + t + "'");
        }
    }
    if (digits.empty()) throw ParseError("no digits in '" + t + "'");
    // a leading zero would make GMP read the digits as octal
    size_t nz = digits.find_first_not_of('0');
    digits = nz == std::string::npos ? "0" : digits.substr(nz);
    Q v{Z(digits)};
    long shift = exp10 - frac;
    Z ten = 10;
    if (shift > 0) v *= Q(bmp::pow(ten, static_cast<unsigned>(shift)));
    if (shift < 0) v /= Q(bmp::pow(ten, static_cast<unsigned>(-shift)));
    return v;
}

}  // namespace

Q parse_rational(std::string_view sv) {
    std::string s = strip(sv);
    if (s.empty()) throw ParseError("empty rational");
    bool neg = false;
    size_t p = 0;
    if (s[0] == '+' || s[0] == '-') { neg = s[0] == '-'; p = 1; }
    Q v = parse_unsigned_number(s.substr(p));
    return neg ? Q(-v) : v;
}

GaussRat parse_gauss(std::string_view sv) {
    std::string s = strip(sv);
    if (s.empty()) throw ParseError("empty complex literal");
    if (s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
    // split into signed terms; a sign directly after 'e'/'E' is an exponent
    std::vector<std::string> terms;
    std::string cur;
    for (size_t k = 0; k < s.size(); ++k) {
        char c = s[k];
        bool is_sign = (c == '+' || c == '-');
        bool after_exp = k > 0 && (s[k - 1] == 'e' || s[k - 1] == 'E');
        if (is_sign && !cur.empty() && !after_exp) {
            terms.push_back(cur);
            cur.clear();
        }
        cur.push_back(c);
    }
    if (!cur.empty()) terms.push_back(cur);
    GaussRat z;
    for (auto t : terms) {
        bool neg = false;
        if (t[0] == '+' || t[0] == '-') { neg = t[0] == '-'; t = t.substr(1); }
        if (t.empty()) throw ParseError("dangling sign in '" + std::string(sv) + "'");
        bool imag = false;
        if (t.back() == 'i' || t.back() == 'I') {
            imag = true;
            t.pop_back();
            if (!t.empty() && t.back() == '*') t.pop_back();
        }
        Q v = t.empty() ? Q(1) : parse_unsigned_number(t);
        if (neg) v = -v;
        if (imag) z.im += v; else z.re += v;
    }
    return z;
}

std::string to_string(const Q& q) { return q.str(); }

std::string to_string(const GaussRat& z) {
    if (z.im == 0) return to_string(z.re);
    std::string im = to_string(bmp::abs(z.im)) + "*i";
    if (z.re == 0) return (z.im < 0 ? "-" : "") + im;
    return to_string(z.re) + (z.im < 0 ? "-" : "+") + im;
}

std::string to_string(const BigComplex& z) {
    unsigned bits = static_cast<unsigned>(mpfr_get_prec(z.re.backend().data()));
    std::streamsize d = bits_to_digits10(bits);
    std::ostringstream os;
    os << '(' << z.re.str(d, std::ios_base::scientific) << ',' << z.im.str(d, std::ios_base::scientific)
       << ")@" << bits;
    return os.str();
}

BigComplex parse_bigcomplex(std::string_view sv) {
    std::string s = strip(sv);
    auto at = s.find(")@");
    if (s.empty() || s[0] != '(' || at == std::string::npos) throw ParseError("expected (re,im)@bits");
    unsigned bits = 0;
    try {
        bits = static_cast<unsigned>(std::stoul(s.substr(at + 2)));
    } catch (const std::exception&) {
        throw ParseError("bad precision in '" + s + "'");
    }
    std::string body = s.substr(1, at - 1);
    auto comma = body.find(',');
    if (comma == std::string::npos) throw ParseError("expected (re,im)@bits");
    if (bits < 2) throw ParseError("precision must be at least 2 bits");
    // exact bit count: the digits10-based default would round it
    auto read = [&](const std::string& text) {
        Real r;
        mpfr_set_prec(r.backend().data(), bits);
        if (mpfr_set_str(r.backend().data(), text.c_str(), 10, MPFR_RNDN) != 0)
            throw ParseError("bad decimal '" + text + "'");
        return r;
    };
    return {read(body.substr(0, comma)), read(body.substr(comma + 1))};
}

std::string to_string(const Complex<double>& z, int digits) {
    std::ostringstream os;
    os.precision(digits);
    os << z.re << (z.im < 0 || std::signbit(z.im) ? "-" : "+") << std::abs(z.im) << "*i";
    return os.str();
}

}  // namespace strebel
