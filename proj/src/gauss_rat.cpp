#include "taut/gauss_rat.hpp"

#include <ostream>

#include "taut/error.hpp"

namespace taut {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::NotDivisibleInBox: return "NotDivisibleInBox";
    case ErrorCode::LeadingSliceNotInvertible: return "LeadingSliceNotInvertible";
    case ErrorCode::IdenticalIndices: return "IdenticalIndices";
    case ErrorCode::OrderTooSmall: return "OrderTooSmall";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NotClosedUnderAction: return "NotClosedUnderAction";
    case ErrorCode::NonUniformDegree: return "NonUniformDegree";
    case ErrorCode::OutOfBox: return "OutOfBox";
    case ErrorCode::FractionalResidue: return "FractionalResidue";
    case ErrorCode::Parse: return "ParseError";
    case ErrorCode::UnknownIdentifier: return "UnknownIdentifier";
    case ErrorCode::Arity: return "ArityError";
    case ErrorCode::Grading: return "GradingError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Io: return "IoError";
  }
  return "Error";
}

GaussRat GaussRat::rational(long num, long den) {
  mpq_class q(num, den);
  q.canonicalize();
  return GaussRat(q);
}

GaussRat GaussRat::inverse() const {
  if (is_zero()) throw Error(ErrorCode::InvalidArgument, "division by zero in Q(i)");
  mpq_class n = norm();
  return GaussRat(re_ / n, -im_ / n);
}

GaussRat& GaussRat::operator+=(const GaussRat& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussRat& GaussRat::operator-=(const GaussRat& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussRat& GaussRat::operator*=(const GaussRat& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class r = re_ * o.re_ - im_ * o.im_;
  mpq_class i = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

GaussRat& GaussRat::operator/=(const GaussRat& o) {
  if (o.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by zero in Q(i)");
  if (sgn(o.im_) == 0) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

std::string GaussRat::to_string() const {
  if (sgn(im_) == 0) return re_.get_str();
  std::string im_part;
  if (im_ == 1) {
    im_part = "i";
  } else if (im_ == -1) {
    im_part = "-i";
  } else {
    im_part = im_.get_str() + "*i";
  }
  if (sgn(re_) == 0) return im_part;
  if (im_part[0] == '-') return re_.get_str() + im_part;
  return re_.get_str() + "+" + im_part;
}

namespace {
std::string with_den(const mpq_class& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

mpq_class parse_fraction(const std::string& s) {
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw Error(ErrorCode::Parse, "bad rational '" + s + "'");
  if (q.get_den() == 0) throw Error(ErrorCode::Parse, "zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}
}  // namespace

std::string GaussRat::to_cache_string() const { return with_den(re_) + " " + with_den(im_); }

GaussRat GaussRat::from_cache_strings(const std::string& re, const std::string& im) {
  return GaussRat(parse_fraction(re), parse_fraction(im));
}

std::ostream& operator<<(std::ostream& os, const GaussRat& z) { return os << z.to_string(); }

}  // namespace taut
