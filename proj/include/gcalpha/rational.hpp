#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <string>

#include "gcalpha/errors.hpp"

namespace gcalpha {

using Rat = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

// Parse "p", "-p", "p/q" into a canonical rational.  We never hand the raw
// string to the mpq constructor: GMP stores it verbatim without reducing, so
// "2/4" would compare fine but print as "2/4".  Going through two integers
// and a division always canonicalizes.
inline Rat parse_rat(const std::string& s) {
    auto bad = [&] { return ValidationError("not a rational: '" + s + "'"); };
    if (s.empty()) throw bad();
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(BigInt(s));
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        if (den == 0) throw bad();
        return Rat(num) / Rat(den);
    } catch (const std::runtime_error&) {
        throw bad();
    }
}

// Canonical form: lowest terms, sign on the numerator, no "/1".
inline std::string rat_str(const Rat& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

inline double to_double(const Rat& r) { return r.template convert_to<double>(); }

// A nonnegative-threshold value that may be +infinity (e.g. a log canonical
// threshold with no active constraint).  Kept deliberately tiny: only what
// min-reduction loops and report printing need.
class ExtRat {
public:
    ExtRat() : inf_(true) {}                     // +infinity
    ExtRat(Rat v) : inf_(false), val_(std::move(v)) {}
    static ExtRat infinity() { return ExtRat(); }

    bool is_infinite() const { return inf_; }
    const Rat& value() const {
        if (inf_) throw InternalConsistencyError("value() on infinite ExtRat");
        return val_;
    }
    std::string str() const { return inf_ ? "inf" : rat_str(val_); }

    friend bool operator<(const ExtRat& a, const ExtRat& b) {
        if (b.inf_) return !a.inf_;
        if (a.inf_) return false;
        return a.val_ < b.val_;
    }
    friend bool operator==(const ExtRat& a, const ExtRat& b) {
        if (a.inf_ || b.inf_) return a.inf_ == b.inf_;
        return a.val_ == b.val_;
    }
    friend bool operator!=(const ExtRat& a, const ExtRat& b) { return !(a == b); }

    void min_with(const ExtRat& other) {
        if (other < *this) *this = other;
    }

private:
    bool inf_;
    Rat val_;
};

} // namespace gcalpha
