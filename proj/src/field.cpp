#include "relhom/field.hpp"

namespace relhom {

FieldSpec::FieldSpec(std::uint64_t characteristic) : p_(characteristic) {
    if (p_ != 0) {
        pz_ = mpz_class(static_cast<unsigned long>(p_));
        if (mpz_probab_prime_p(pz_.get_mpz_t(), 40) == 0) {
            throw ValidationError("field characteristic must be 0 or a prime, got " +
                                  std::to_string(p_));
        }
    }
}

Scalar FieldSpec::canon(const Scalar& v) const {
    Scalar r = v;
    r.canonicalize();
    if (p_ == 0) return r;
    mpz_class num = r.get_num();
    mpz_class den = r.get_den();
    mpz_class dmod = den % pz_;
    if (dmod < 0) dmod += pz_;
    mpz_class dinv;
    if (mpz_invert(dinv.get_mpz_t(), dmod.get_mpz_t(), pz_.get_mpz_t()) == 0) {
        throw ValidationError("denominator not invertible mod " + std::to_string(p_));
    }
    mpz_class n = (num * dinv) % pz_;
    if (n < 0) n += pz_;
    return Scalar(n);
}

Scalar FieldSpec::add(const Scalar& a, const Scalar& b) const { return canon(a + b); }
Scalar FieldSpec::sub(const Scalar& a, const Scalar& b) const { return canon(a - b); }
Scalar FieldSpec::mul(const Scalar& a, const Scalar& b) const { return canon(a * b); }
Scalar FieldSpec::neg(const Scalar& a) const { return canon(-a); }

Scalar FieldSpec::inv(const Scalar& a) const {
    if (is_zero(a)) throw ValidationError("division by zero");
    if (p_ == 0) return Scalar(1) / a;
    Scalar c = canon(a);
    mpz_class n = c.get_num();
    mpz_class r;
    if (mpz_invert(r.get_mpz_t(), n.get_mpz_t(), pz_.get_mpz_t()) == 0) {
        throw ValidationError("element not invertible mod " + std::to_string(p_));
    }
    return Scalar(r);
}

Scalar FieldSpec::div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

std::string FieldSpec::format(const Scalar& a) const {
    return canon(a).get_str();
}

Scalar FieldSpec::parse(const std::string& text) const {
    mpq_class v;
    if (v.set_str(text, 10) != 0) {
        throw ValidationError("cannot parse field element '" + text + "'");
    }
    if (v.get_den() == 0) {
        throw ValidationError("zero denominator in '" + text + "'");
    }
    return canon(v);
}

}  // namespace relhom
