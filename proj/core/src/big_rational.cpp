#include "haarmi/big_rational.hpp"

#include "haarmi/errors.hpp"

namespace haarmi {

BigRational::BigRational(long numerator, long denominator) {
    if (denominator == 0) {
        throw DomainError("rational with zero denominator");
    }
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

BigRational::BigRational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

BigRational BigRational::parse(const std::string& text) {
    mpq_class v;
    if (v.set_str(text, 10) != 0 || v.get_den() == 0) {
        throw DomainError("cannot parse rational '" + text + "'");
    }
    return BigRational(std::move(v));
}

BigRational& BigRational::operator+=(const BigRational& rhs) {
    value_ += rhs.value_;
    return *this;
}

BigRational& BigRational::operator-=(const BigRational& rhs) {
    value_ -= rhs.value_;
    return *this;
}

BigRational& BigRational::operator*=(const BigRational& rhs) {
    value_ *= rhs.value_;
    return *this;
}

BigRational& BigRational::operator/=(const BigRational& rhs) {
    if (rhs.is_zero()) {
        throw DomainError("rational division by zero");
    }
    value_ /= rhs.value_;
    return *this;
}

}  // namespace haarmi
