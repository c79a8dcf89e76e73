#include "chiforge/rational.hpp"

#include <stdexcept>

namespace chiforge {

Rational parse_rational(std::string_view s) {
    std::string t(s);
    if (t.empty()) throw std::invalid_argument("empty rational");
    auto slash = t.find('/');
    try {
        if (slash != std::string::npos) {
            Int p(t.substr(0, slash)), q(t.substr(slash + 1));
            if (q == 0) throw std::invalid_argument("zero denominator");
            return Rational(p, q);
        }
        auto dot = t.find('.');
        if (dot == std::string::npos) return Rational(Int(t));
        bool neg = t[0] == '-';
        std::string ip = t.substr(neg ? 1 : 0, dot - (neg ? 1 : 0));
        std::string fp = t.substr(dot + 1);
        if (ip.empty()) ip = "0";
        if (fp.find_first_not_of("0123456789") != std::string::npos ||
            ip.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("bad decimal");
        Int den = 1;
        for (std::size_t i = 0; i < fp.size(); ++i) den *= 10;
        Rational r(Int(ip + fp), den);
        return neg ? Rational(-r) : r;
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("malformed rational '" + t + "'");
    }
}

std::string to_string(const Rational& r) {
    return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

Rational pow(const Rational& base, long e) {
    if (e < 0) {
        if (base == 0) throw std::domain_error("zero to a negative power");
        return pow(Rational(1) / base, -e);
    }
    Rational result = 1, b = base;
    while (e) {
        if (e & 1) result *= b;
        e >>= 1;
        if (e) b *= b;
    }
    return result;
}

Rational pow2(long e) {
    Int one = 1;
    if (e >= 0) return Rational(one << static_cast<unsigned>(e));
    return Rational(one, one << static_cast<unsigned>(-e));
}

Int floor(const Rational& r) {
    Int p = boost::multiprecision::numerator(r), q = boost::multiprecision::denominator(r);
    Int f = p / q;
    if (p < 0 && f * q != p) f -= 1;
    return f;
}

Int ceil(const Rational& r) {
    return -floor(Rational(-r));
}

int compare_root(const Rational& u, const Rational& v, long p, long q) {
    if (q <= 0 || u <= 0 || v <= 0) throw std::domain_error("compare_root needs u, v > 0 and q > 0");
    Rational lhs = pow(u, q), rhs = pow(v, p);
    return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
}

Int ceil_root(const Rational& v, long p, long q) {
    // Bracket by doubling, then bisect on the exact test m^q >= v^p.
    Rational target = pow(v, p);
    auto ok = [&](const Int& m) { return m > 0 && pow(Rational(m), q) >= target; };
    if (target <= 0) return 0;
    Int hi = 1;
    while (!ok(hi)) hi *= 2;
    Int lo = hi / 2;  // lo fails (or is 0)
    while (hi - lo > 1) {
        Int mid = (lo + hi) / 2;
        if (ok(mid)) hi = mid; else lo = mid;
    }
    return hi;
}

Int floor_root(const Rational& v, long p, long q) {
    Int c = ceil_root(v, p, q);
    return pow(Rational(c), q) == pow(v, p) ? c : c - 1;
}

int compare_with_power(const Int& m, const Rational& base, const Int& e) {
    if (base <= 0) throw std::domain_error("compare_with_power needs base > 0");
    Rational mq(m);
    if (e == 0 || base == 1) return mq < 1 ? -1 : (mq > 1 ? 1 : 0);
    if (base < 1) {
        // base^e shrinks towards 0; compare by squaring until below m or exact
        if (m >= 1) return 1;
        if (m == 0) return -1;
    }
    // base > 1: square up while the running power stays <= m.
    // value = base^k tracked exactly for k = sum of processed bits of e.
    Rational acc = 1, b = base;
    Int rest = e;
    while (rest > 0) {
        if (b > mq && rest > 0) {
            // any remaining bit pushes acc past m once multiplied in;
            // acc * b^(bits) with at least one bit set is > m since acc >= 1.
            return -1;
        }
        if ((rest & 1) != 0) {
            acc *= b;
            if (acc > mq) return -1;
        }
        rest >>= 1;
        if (rest > 0) b *= b;
    }
    return mq < acc ? -1 : (mq > acc ? 1 : 0);
}

}  // namespace chiforge

namespace chiforge {

namespace {

constexpr long kExpandLimit = 1L << 14;

// sign(x - B^e) for x > 0, integer B >= 2 and e > kExpandLimit: B^e is an
// integer, so x >= B^e iff floor(x) >= B^e.
int compare_big_integer_power(const Rational& x, const Rational& b, const Int& e) {
    if (boost::multiprecision::denominator(b) != 1) {
        // Bernoulli: b^e >= 1 + e(b - 1), decisive whenever x is modest.
        if (Rational(1) + Rational(e) * (b - 1) > x) return -1;
        throw std::domain_error("huge exponent with a non-integral base is undecided");
    }
    Int fl = floor(x);
    int s = compare_with_power(fl, b, e);
    if (s < 0) return -1;
    if (s > 0) return 1;
    return x == Rational(fl) ? 0 : 1;
}

}  // namespace

int compare_power(const Rational& u, const Rational& base, const Int& p, long q) {
    if (q <= 0 || u <= 0 || base <= 0) throw std::domain_error("compare_power needs u, base > 0 and q > 0");
    Rational lhs = pow(u, q);
    if (base == 1 || p == 0) return lhs < 1 ? -1 : (lhs > 1 ? 1 : 0);
    if (abs(p) <= kExpandLimit) {
        Rational rhs = pow(base, p.convert_to<long>());
        return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
    }
    // Normalise to base B > 1 with B^e, e possibly negative.
    Rational b = base > 1 ? base : Rational(1 / base);
    Int e = base > 1 ? p : Int(-p);
    if (e > 0) return compare_big_integer_power(lhs, b, e);
    // lhs vs B^-|e|  <=>  1/lhs vs B^|e| with the sign reversed
    return -compare_big_integer_power(Rational(1 / lhs), b, Int(-e));
}

int compare(const Int& m, const Threshold& t) {
    Rational mr(m);
    if (t.is_constant()) {
        Rational v = t.constant_value();
        return mr < v ? -1 : (mr > v ? 1 : 0);
    }
    // m - c0 - c1*w with w = base^(p/q) > 0
    Rational u = (mr - t.c0) / t.c1;
    int s;  // sign of u - w
    if (u <= 0) s = -1;
    else s = compare_power(u, t.base, t.p, t.q);
    return t.c1 > 0 ? s : -s;
}

Int ceil(const Threshold& t) {
    if (t.is_constant()) return ceil(t.constant_value());
    // Gallop from ceil(c0) to bracket, then bisect on compare(m, t) >= 0.
    Int m = ceil(t.c0);
    auto ok = [&](const Int& x) { return compare(x, t) >= 0; };
    Int lo, hi;
    if (ok(m)) {
        hi = m;
        Int step = 1;
        lo = hi - step;
        while (ok(lo)) {
            hi = lo;
            step *= 2;
            lo = hi - step;
        }
    } else {
        lo = m;
        Int step = 1;
        hi = lo + step;
        while (!ok(hi)) {
            lo = hi;
            step *= 2;
            hi = lo + step;
        }
    }
    while (hi - lo > 1) {
        Int mid = (lo + hi) / 2;
        if (ok(mid)) hi = mid; else lo = mid;
    }
    return hi;
}

Int floor(const Threshold& t) {
    Int c = ceil(t);
    return compare(c, t) == 0 ? c : c - 1;
}

std::string to_string(const Threshold& t) {
    if (t.is_constant()) return to_string(t.constant_value());
    std::string s;
    if (t.c0 != 0) s = to_string(t.c0) + " + ";
    s += to_string(t.c1) + "*(" + to_string(t.base) + ")^(" + t.p.str() + "/" + std::to_string(t.q) + ")";
    return s;
}

}  // namespace chiforge
