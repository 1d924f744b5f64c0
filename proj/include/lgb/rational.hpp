#ifndef LGB_RATIONAL_HPP
#define LGB_RATIONAL_HPP

#include <gmpxx.h>

#include <Eigen/Core>

#include <stdexcept>
#include <string>
#include <vector>

namespace lgb {

using Integer = mpz_class;
using Rational = mpq_class;

// Canonical q = a/b with b > 0, gcd(a,b) = 1.
inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational make_rational(long num, long den = 1) {
    return make_rational(Integer(num), Integer(den));
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

// Representative of q mod Z in [0, 1).
inline Rational mod_one(const Rational& q) {
    Integer f;
    mpz_fdiv_q(f.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    Rational r = q - Rational(f);
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline std::string to_string(const Integer& n) { return n.get_str(); }

// floor(n^(1/k)) for n >= 0; exact big-integer root.
inline Integer iroot(const Integer& n, unsigned long k) {
    Integer r;
    mpz_root(r.get_mpz_t(), n.get_mpz_t(), k);
    return r;
}

// q = s^k for rational s? Returns true and sets root on success.
// For even k only the nonnegative root is reported.
bool rational_kth_root(const Rational& q, unsigned long k, Rational& root);

}  // namespace lgb

namespace Eigen {

template <>
struct NumTraits<lgb::Rational> : GenericNumTraits<lgb::Rational> {
    typedef lgb::Rational Real;
    typedef lgb::Rational NonInteger;
    typedef lgb::Rational Nested;
    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
    enum {
        IsInteger = 0,
        IsSigned = 1,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 6,
        AddCost = 150,
        MulCost = 100
    };
};

}  // namespace Eigen

namespace lgb {

using MatQ = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using VecQ = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

}  // namespace lgb

#endif
