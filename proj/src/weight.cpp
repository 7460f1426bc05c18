#include "espdag/weight.hpp"

#include <cctype>
#include <limits>
#include <stdexcept>

#include "espdag/errors.hpp"

namespace espdag {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::CycleDetected: return "cycle detected";
    case ErrorKind::DuplicateArc: return "duplicate arc";
    case ErrorKind::SelfLoop: return "self loop";
    case ErrorKind::IndexOutOfRange: return "index out of range";
    case ErrorKind::DimensionMismatch: return "dimension mismatch";
    case ErrorKind::KNotTwo: return "machine count is not two";
    case ErrorKind::NotAPath: return "not a directed path";
    case ErrorKind::TooLarge: return "enumeration budget exceeded";
    case ErrorKind::MalformedNetwork: return "malformed network";
    case ErrorKind::ParseError: return "parse error";
    case ErrorKind::ValidationError: return "validation error";
    case ErrorKind::NonUniformWeightsWithUnitFlag: return "non-uniform weights with unit flag";
    case ErrorKind::TerminalError: return "terminal error";
    case ErrorKind::NotRegular: return "graph is not regular";
    case ErrorKind::DegreeTooSmall: return "degree too small";
    case ErrorKind::ShapeError: return "shape error";
    case ErrorKind::CoverageError: return "coverage error";
    case ErrorKind::InfiniteCostAssignment: return "infinite cost assignment";
    case ErrorKind::InfeasibleSpec: return "infeasible generator spec";
    case ErrorKind::RetryLimit: return "retry limit reached";
  }
  return "unknown error";
}

ExtendedWeight::ExtendedWeight(long long units) {
  if (units < 0) {
    throw Error(ErrorKind::ValidationError, "weights must be non-negative");
  }
  value_ = units;
}

ExtendedWeight::ExtendedWeight(Rational value) : value_(std::move(value)) {
  if (value_ < 0) {
    throw Error(ErrorKind::ValidationError, "weights must be non-negative");
  }
}

ExtendedWeight ExtendedWeight::infinity() {
  ExtendedWeight w;
  w.infinite_ = true;
  return w;
}

ExtendedWeight ExtendedWeight::ratio(long long numerator, long long denominator) {
  if (denominator <= 0) {
    throw Error(ErrorKind::ValidationError, "denominator must be positive");
  }
  return ExtendedWeight(Rational(BigInt(numerator), BigInt(denominator)));
}

const Rational& ExtendedWeight::value() const {
  if (infinite_) {
    throw std::logic_error("value() called on an infinite weight");
  }
  return value_;
}

ExtendedWeight& ExtendedWeight::operator+=(const ExtendedWeight& rhs) {
  if (rhs.infinite_) {
    infinite_ = true;
    value_ = 0;
  } else if (!infinite_) {
    value_ += rhs.value_;
  }
  return *this;
}

std::strong_ordering operator<=>(const ExtendedWeight& a, const ExtendedWeight& b) {
  if (a.infinite_ || b.infinite_) {
    if (a.infinite_ && b.infinite_) return std::strong_ordering::equal;
    return a.infinite_ ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  if (a.value_ < b.value_) return std::strong_ordering::less;
  if (b.value_ < a.value_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string ExtendedWeight::str() const {
  if (infinite_) return "inf";
  const BigInt& num = boost::multiprecision::numerator(value_);
  const BigInt& den = boost::multiprecision::denominator(value_);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

double ExtendedWeight::to_double() const {
  if (infinite_) return std::numeric_limits<double>::infinity();
  return value_.convert_to<double>();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

BigInt parse_digits(std::string_view s) {
  return BigInt(std::string(s));
}

}  // namespace

ExtendedWeight ExtendedWeight::parse(std::string_view text) {
  if (text == "inf") return infinity();
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::string_view num = text.substr(0, slash);
    std::string_view den = text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
      throw Error(ErrorKind::ParseError, "bad rational weight '" + std::string(text) + "'");
    }
    BigInt d = parse_digits(den);
    if (d == 0) {
      throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
    }
    return ExtendedWeight(Rational(parse_digits(num), d));
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    if (!all_digits(whole) || !all_digits(frac)) {
      throw Error(ErrorKind::ParseError, "bad decimal weight '" + std::string(text) + "'");
    }
    BigInt scale = 1;
    for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
    BigInt num = parse_digits(whole) * scale + parse_digits(frac);
    return ExtendedWeight(Rational(num, scale));
  }
  if (!all_digits(text)) {
    throw Error(ErrorKind::ParseError, "bad weight '" + std::string(text) + "'");
  }
  return ExtendedWeight(Rational(parse_digits(text)));
}

}  // namespace espdag
