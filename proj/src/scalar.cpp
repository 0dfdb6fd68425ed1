#include "crpoisson/scalar.hpp"

namespace crp {

std::string Scalar::str() const {
    if (isZero()) return "0";
    std::string out;
    if (sgn(re) != 0) out = re.get_str();
    if (sgn(im) != 0) {
        std::string imPart;
        if (im == 1)
            imPart = "i";
        else if (im == -1)
            imPart = "-i";
        else
            imPart = im.get_str() + "i";
        if (!out.empty() && imPart[0] != '-') out += "+";
        out += imPart;
    }
    return out;
}

Rational factorialRational(long k) {
    if (k < 0) throw std::domain_error("factorial of negative integer");
    mpz_class acc = 1;
    for (long j = 2; j <= k; ++j) acc *= j;
    return Rational(acc);
}

Scalar factorialScalar(long k) { return Scalar(factorialRational(k)); }

long binomial(long a, long b) {
    if (b < 0 || a < 0 || b > a) return 0;
    b = std::min(b, a - b);
    long acc = 1;
    for (long j = 1; j <= b; ++j) acc = acc * (a - b + j) / j;
    return acc;
}

}  // namespace crp
