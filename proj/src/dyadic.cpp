#include "ftsp/dyadic.hpp"

namespace ftsp {

void Dyadic::normalize() {
  if (num_ == 0) {
    exp_ = 0;
    return;
  }
  if (exp_ == 0) return;
  const mp_bitcnt_t tz = mpz_scan1(num_.get_mpz_t(), 0);
  const mp_bitcnt_t k = tz < exp_ ? tz : exp_;
  if (k > 0) {
    mpz_fdiv_q_2exp(num_.get_mpz_t(), num_.get_mpz_t(), k);
    exp_ -= static_cast<unsigned>(k);
  }
}

Dyadic Dyadic::operator+(const Dyadic& o) const {
  const unsigned e = exp_ > o.exp_ ? exp_ : o.exp_;
  mpz_class a = num_ << (e - exp_);
  mpz_class b = o.num_ << (e - o.exp_);
  return Dyadic(a + b, e);
}

Dyadic Dyadic::operator-(const Dyadic& o) const {
  const unsigned e = exp_ > o.exp_ ? exp_ : o.exp_;
  mpz_class a = num_ << (e - exp_);
  mpz_class b = o.num_ << (e - o.exp_);
  return Dyadic(a - b, e);
}

Dyadic Dyadic::operator*(const Dyadic& o) const {
  return Dyadic(num_ * o.num_, exp_ + o.exp_);
}

Dyadic Dyadic::shifted(long e) const {
  if (num_ == 0 || e == 0) return *this;
  if (e < 0) return Dyadic(num_, exp_ + static_cast<unsigned>(-e));
  const unsigned ue = static_cast<unsigned>(e);
  if (ue <= exp_) return Dyadic(num_, exp_ - ue, already_normal{});
  return Dyadic(num_ << (ue - exp_), 0, already_normal{});
}

std::strong_ordering Dyadic::operator<=>(const Dyadic& o) const {
  // num/2^i vs onum/2^j  <=>  num*2^(j-i) vs onum  (scale to common exponent)
  int c;
  if (exp_ == o.exp_) {
    c = mpz_cmp(num_.get_mpz_t(), o.num_.get_mpz_t());
  } else if (exp_ < o.exp_) {
    mpz_class a = num_ << (o.exp_ - exp_);
    c = mpz_cmp(a.get_mpz_t(), o.num_.get_mpz_t());
  } else {
    mpz_class b = o.num_ << (exp_ - o.exp_);
    c = mpz_cmp(num_.get_mpz_t(), b.get_mpz_t());
  }
  return c < 0 ? std::strong_ordering::less
       : c > 0 ? std::strong_ordering::greater
               : std::strong_ordering::equal;
}

std::string Dyadic::str() const {
  if (exp_ == 0) return num_.get_str();
  mpz_class den = 1;
  den <<= exp_;
  return num_.get_str() + "/" + den.get_str();
}

mpq_class Dyadic::to_mpq() const {
  mpz_class den = 1;
  den <<= exp_;
  mpq_class q(num_, den);
  q.canonicalize();
  return q;
}

mpq_class parse_rational(const std::string& s) {
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      mpq_class q(mpz_class(s), 1);
      q.canonicalize();
      return q;
    }
    mpz_class p(s.substr(0, slash));
    mpz_class q(s.substr(slash + 1));
    if (q == 0) throw std::invalid_argument("zero denominator");
    mpq_class r(p, q);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("not a rational: '" + s + "'");
  }
}

mpq_class make_rational(long num, long den) {
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

std::string rational_str(const mpq_class& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace ftsp
