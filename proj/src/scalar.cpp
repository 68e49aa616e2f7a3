#include "nha/scalar.hpp"

namespace nha {

Field Field::prime(unsigned long p) {
    if (p < 2)
        throw std::invalid_argument("field characteristic must be a prime >= 2");
    mpz_class n(static_cast<unsigned long>(p));
    if (mpz_probab_prime_p(n.get_mpz_t(), 40) == 0)
        throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
    return Field{p};
}

std::string Field::describe() const {
    return rational() ? "Q" : ("GF(" + std::to_string(p) + ")");
}

void Scalar::canonicalize() {
    v_.canonicalize();
    if (p_ == 0) return;
    if (v_.get_den() != 1) {
        // a/b mod p = a * b^{-1}
        mpz_class den = v_.get_den();
        mpz_class inv;
        if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mpz_class(p_).get_mpz_t()) == 0)
            throw std::domain_error("denominator not invertible mod " + std::to_string(p_));
        v_ = mpq_class(v_.get_num() * inv);
    }
    mpz_class r;
    mpz_mod(r.get_mpz_t(), v_.get_num().get_mpz_t(), mpz_class(p_).get_mpz_t());
    v_ = mpq_class(r);
}

void Scalar::check_same(const Scalar& o) const {
    if (p_ != o.p_) throw std::invalid_argument("scalar field mismatch");
}

Scalar Scalar::parse(Field f, const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty scalar literal");
    mpq_class q;
    if (q.set_str(text, 10) != 0)
        throw std::invalid_argument("bad scalar literal: " + text);
    q.canonicalize();
    return Scalar(f, std::move(q));
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    r.v_ = -r.v_;
    r.canonicalize();
    return r;
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same(o);
    Scalar r(Field{p_});
    r.v_ = v_ + o.v_;
    r.canonicalize();
    return r;
}

Scalar Scalar::operator-(const Scalar& o) const {
    check_same(o);
    Scalar r(Field{p_});
    r.v_ = v_ - o.v_;
    r.canonicalize();
    return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_same(o);
    Scalar r(Field{p_});
    r.v_ = v_ * o.v_;
    r.canonicalize();
    return r;
}

Scalar Scalar::operator/(const Scalar& o) const {
    check_same(o);
    return *this * o.inverse();
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero");
    Scalar r(Field{p_});
    if (p_ == 0) {
        r.v_ = 1 / v_;
    } else {
        mpz_class inv;
        mpz_invert(inv.get_mpz_t(), v_.get_num().get_mpz_t(), mpz_class(p_).get_mpz_t());
        r.v_ = mpq_class(inv);
        r.canonicalize();
    }
    return r;
}

std::string Scalar::str() const { return v_.get_str(); }

}  // namespace nha
